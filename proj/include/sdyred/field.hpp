#pragma once

#include <functional>
#include <vector>

#include "sdyred/complex_matrix.hpp"
#include "sdyred/grid.hpp"

namespace sdyred {

class ScalarField {
 public:
  ScalarField() = default;
  explicit ScalarField(const Grid& grid, cplx value = {});
  ScalarField(const Grid& grid, std::vector<cplx> values);

  // Samples f at every grid point; f receives coordinates (x, y, z).
  static ScalarField sample(const Grid& grid, const std::function<cplx(double, double, double)>& f);

  const Grid& grid() const { return grid_; }
  std::size_t size() const { return v_.size(); }
  cplx& operator[](std::size_t i) { return v_[i]; }
  const cplx& operator[](std::size_t i) const { return v_[i]; }
  cplx* data() { return v_.data(); }
  const cplx* data() const { return v_.data(); }
  const std::vector<cplx>& values() const { return v_; }

  ScalarField& operator+=(const ScalarField& o);
  ScalarField& operator-=(const ScalarField& o);
  ScalarField& operator*=(const ScalarField& o);
  ScalarField& operator*=(cplx s);

  bool all_finite() const;
  bool is_zero() const;
  // Largest |imaginary part| relative to max |value| (0 for the zero field).
  double max_imag() const;

 private:
  Grid grid_;
  std::vector<cplx> v_;
};

ScalarField operator+(ScalarField a, const ScalarField& b);
ScalarField operator-(ScalarField a, const ScalarField& b);
ScalarField operator-(ScalarField a);
ScalarField operator*(ScalarField a, const ScalarField& b);
ScalarField operator*(cplx s, ScalarField a);
ScalarField operator*(ScalarField a, cplx s);
ScalarField operator/(ScalarField a, const ScalarField& b);
ScalarField operator+(ScalarField a, cplx s);
ScalarField conj(ScalarField a);
ScalarField real_part(ScalarField a);
ScalarField abs2(const ScalarField& a);
ScalarField exp(ScalarField a);
ScalarField map(ScalarField a, const std::function<cplx(cplx)>& f);

// Square-matrix-valued field stored as dim*dim entry planes.
class MatrixField {
 public:
  MatrixField() = default;
  MatrixField(const Grid& grid, int dim, LieTag tag = LieTag::none);
  static MatrixField constant(const Grid& grid, const ComplexMatrix& m);
  static MatrixField identity(const Grid& grid, int dim) { return constant(grid, ComplexMatrix::identity(dim)); }

  const Grid& grid() const { return grid_; }
  int dim() const { return dim_; }
  LieTag tag() const { return tag_; }
  MatrixField& set_tag(LieTag t) { tag_ = t; return *this; }

  ScalarField& entry(int i, int j) { return e_[static_cast<size_t>(i * dim_ + j)]; }
  const ScalarField& entry(int i, int j) const { return e_[static_cast<size_t>(i * dim_ + j)]; }

  ComplexMatrix at(std::size_t point) const;
  void set(std::size_t point, const ComplexMatrix& m);

  MatrixField& operator+=(const MatrixField& o);
  MatrixField& operator-=(const MatrixField& o);
  MatrixField& operator*=(cplx s);

  bool is_zero() const;
  // Largest pointwise deviation from the tag's defining identity.
  double tag_violation(LieTag tag) const;

 private:
  Grid grid_;
  int dim_ = 0;
  LieTag tag_ = LieTag::none;
  std::vector<ScalarField> e_;
};

MatrixField operator+(MatrixField a, const MatrixField& b);
MatrixField operator-(MatrixField a, const MatrixField& b);
MatrixField operator-(MatrixField a);
MatrixField operator*(cplx s, MatrixField a);
MatrixField operator*(const ScalarField& s, const MatrixField& a);
MatrixField operator*(const MatrixField& a, const MatrixField& b);      // pointwise product
MatrixField operator*(const ComplexMatrix& m, const MatrixField& a);    // constant on the left
MatrixField operator*(const MatrixField& a, const ComplexMatrix& m);    // constant on the right
MatrixField commutator(const MatrixField& a, const MatrixField& b);
MatrixField adjoint(const MatrixField& a);
ScalarField trace(const MatrixField& a);
MatrixField pointwise_inverse(const MatrixField& a);  // throws NumericalError on a singular point
MatrixField pointwise_exp(const MatrixField& a);

}  // namespace sdyred
