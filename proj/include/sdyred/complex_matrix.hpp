#pragma once

#include <complex>
#include <initializer_list>
#include <vector>

namespace sdyred {

using cplx = std::complex<double>;
inline constexpr cplx I_UNIT{0.0, 1.0};

// Which Lie algebra a matrix claims to live in.
//   su2  : anti-Hermitian, traceless, 2x2
//   sl2  : traceless, 2x2 (complexification of su2 / su(1,1))
//   so3  : real antisymmetric, 3x3
//   so3c : complex antisymmetric, 3x3 (covers so(2,1) in the complex frame)
enum class LieTag { none, su2, sl2, so3, so3c };

const char* to_string(LieTag tag);

class ComplexMatrix {
 public:
  static constexpr int max_dim = 8;

  ComplexMatrix() = default;
  explicit ComplexMatrix(int dim, LieTag tag = LieTag::none);
  ComplexMatrix(int dim, std::initializer_list<cplx> row_major, LieTag tag = LieTag::none);

  static ComplexMatrix identity(int dim);
  static ComplexMatrix zero(int dim) { return ComplexMatrix(dim); }
  static ComplexMatrix diagonal(const std::vector<cplx>& d);

  int dim() const { return dim_; }
  LieTag tag() const { return tag_; }
  ComplexMatrix& set_tag(LieTag t) { tag_ = t; return *this; }

  cplx& operator()(int i, int j) { return a_[static_cast<size_t>(i * dim_ + j)]; }
  const cplx& operator()(int i, int j) const { return a_[static_cast<size_t>(i * dim_ + j)]; }
  const std::vector<cplx>& data() const { return a_; }

  ComplexMatrix& operator+=(const ComplexMatrix& o);
  ComplexMatrix& operator-=(const ComplexMatrix& o);
  ComplexMatrix& operator*=(cplx s);

  bool is_diagonal() const;
  bool is_zero() const;
  bool all_finite() const;

 private:
  int dim_ = 0;
  LieTag tag_ = LieTag::none;
  std::vector<cplx> a_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(cplx s, ComplexMatrix a);
ComplexMatrix operator*(ComplexMatrix a, cplx s);

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix adjoint(const ComplexMatrix& a);
ComplexMatrix transpose(const ComplexMatrix& a);
ComplexMatrix conj(const ComplexMatrix& a);
cplx trace(const ComplexMatrix& a);
cplx determinant(const ComplexMatrix& a);
double frobenius_norm(const ComplexMatrix& a);
double max_abs(const ComplexMatrix& a);
ComplexMatrix inverse(const ComplexMatrix& a);  // throws NumericalError when singular
ComplexMatrix matrix_exp(const ComplexMatrix& a);

// Largest deviation from the identity defining the tag (0 for LieTag::none).
double tag_violation(const ComplexMatrix& a, LieTag tag);
bool satisfies_tag(const ComplexMatrix& a, LieTag tag, double tol = 1e-12);

// Pauli matrices and the standard so(3) generators (L_a)_{jk} = -eps_{ajk}.
ComplexMatrix pauli(int a);      // a = 1, 2, 3
ComplexMatrix so3_generator(int a);  // a = 1, 2, 3

}  // namespace sdyred
