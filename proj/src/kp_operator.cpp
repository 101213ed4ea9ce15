#include "sdyred/kp_operator.hpp"

#include <algorithm>

#include "sdyred/errors.hpp"

namespace sdyred {

DiffOp::DiffOp(std::vector<ScalarField> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) throw DimensionError("differential operator needs at least one coefficient");
  for (const auto& f : c_) require_same_grid(f.grid(), c_.front().grid(), "differential operator");
}

DiffOp DiffOp::multiplication(const ScalarField& f) { return DiffOp({f}); }

DiffOp DiffOp::dx_power(const Grid& g, int order) {
  std::vector<ScalarField> c(static_cast<size_t>(order) + 1, ScalarField(g));
  c.back() = ScalarField(g, 1.0);
  return DiffOp(std::move(c));
}

ScalarField DiffOp::apply(const ScalarField& f, DiffMethod method) const {
  ScalarField out = c_[0] * f;
  for (int j = 1; j <= order(); ++j) out += coeff(j) * derivative(f, 0, method, j);
  return out;
}

namespace {

template <class Op>
DiffOp combine(const DiffOp& a, const DiffOp& b, Op op) {
  require_same_grid(a.grid(), b.grid(), "differential operator");
  const int n = std::max(a.order(), b.order());
  std::vector<ScalarField> c;
  for (int j = 0; j <= n; ++j) {
    const ScalarField x = j <= a.order() ? a.coeff(j) : ScalarField(a.grid());
    const ScalarField y = j <= b.order() ? b.coeff(j) : ScalarField(a.grid());
    c.push_back(op(x, y));
  }
  return DiffOp(std::move(c));
}

double binomial(int n, int r) {
  double v = 1.0;
  for (int i = 1; i <= r; ++i) v = v * (n - r + i) / i;
  return v;
}

}  // namespace

DiffOp operator+(const DiffOp& a, const DiffOp& b) {
  return combine(a, b, [](const ScalarField& x, const ScalarField& y) { return x + y; });
}

DiffOp operator-(const DiffOp& a, const DiffOp& b) {
  return combine(a, b, [](const ScalarField& x, const ScalarField& y) { return x - y; });
}

DiffOp operator*(cplx s, const DiffOp& a) {
  std::vector<ScalarField> c;
  for (const auto& f : a.coeffs()) c.push_back(s * f);
  return DiffOp(std::move(c));
}

// (a d^m)(b d^n) = a sum_r C(m, r) b^(r) d^(m - r + n)
DiffOp compose(const DiffOp& a, const DiffOp& b, DiffMethod method) {
  require_same_grid(a.grid(), b.grid(), "differential operator");
  const Grid& g = a.grid();
  std::vector<ScalarField> c(static_cast<size_t>(a.order() + b.order()) + 1, ScalarField(g));
  for (int n = 0; n <= b.order(); ++n) {
    std::vector<ScalarField> db{b.coeff(n)};
    for (int r = 1; r <= a.order(); ++r) db.push_back(derivative(db.back(), 0, method));
    for (int m = 0; m <= a.order(); ++m)
      for (int r = 0; r <= m; ++r) c[static_cast<size_t>(m - r + n)] += binomial(m, r) * (a.coeff(m) * db[r]);
  }
  return DiffOp(std::move(c));
}

DiffOp commutator(const DiffOp& a, const DiffOp& b, DiffMethod method) {
  return compose(a, b, method) - compose(b, a, method);
}

DiffOp derivative(const DiffOp& a, int axis, DiffMethod method) {
  std::vector<ScalarField> c;
  for (const auto& f : a.coeffs()) c.push_back(derivative(f, axis, method));
  return DiffOp(std::move(c));
}

KpLaxPair build_kp_lax(const ScalarField& k, const ScalarField& m3, double alpha,
                       const std::optional<ScalarField>& k_t, DiffMethod method) {
  require_same_grid(k.grid(), m3.grid(), "kp lax pair");
  if (alpha == 0.0) throw PreconditionError("alpha must be nonzero");
  const Grid& g = k.grid();
  const ScalarField zero(g);
  KpLaxPair p;
  p.alpha = alpha;
  p.a = (-1.0 / alpha) * DiffOp({k, zero, ScalarField(g, 1.0)});
  p.b = -1.0 * DiffOp({3.0 * (derivative(k, 0, method) - alpha * m3), 6.0 * k, zero, ScalarField(g, 4.0)});
  if (k_t) p.a_t = DiffOp({(-1.0 / alpha) * *k_t});
  return p;
}

DiffOp kp_zero_curvature(const KpLaxPair& p, DiffMethod method) {
  if (!p.a_t) throw PreconditionError("insufficient time data: dA/dt was not supplied");
  return *p.a_t - derivative(p.b, 1, method) + commutator(p.a, p.b, method);
}

ResidualReport kp_lax_check(const FieldMap& fields, double alpha, double tolerance, DiffMethod method) {
  for (const char* n : {"k", "m3", "k_t"})
    if (!fields.count(n)) throw PreconditionError(std::string("kp lax check needs field '") + n + "'");
  const KpLaxPair p = build_kp_lax(fields.at("k"), fields.at("m3"), alpha, fields.at("k_t"), method);
  const DiffOp z = kp_zero_curvature(p, method);

  ResidualOptions opt;
  opt.method = method;
  const auto parts = pde_components(EquationId::make("kp", {{"alpha", alpha}}), fields, opt);
  const ScalarField rk = parts.at(0).residual(), rm = parts.at(1).residual();
  const Grid& g = z.grid();

  std::vector<ComponentNorms> comps;
  for (int j = 0; j <= z.order(); ++j) {
    ScalarField declared(g);
    if (j == 0) declared = (-1.0 / alpha) * rk - 3.0 * derivative(rm, 0, method);
    if (j == 1) declared = -6.0 * rm;
    double scale = lp_norms(declared).linf;
    for (const DiffOp* part : {&*p.a_t, &p.b})
      for (const auto& c : part->coeffs()) scale = std::max(scale, lp_norms(c).linf);
    comps.push_back(measure_residual("d^" + std::to_string(j), z.coeff(j) - declared, scale));
  }
  return finalize(std::move(comps), tolerance, NormKind::relative);
}

}  // namespace sdyred
