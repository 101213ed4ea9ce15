#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <map>
#include <tuple>

#include "sdyred/errors.hpp"
#include "sdyred/lax.hpp"

namespace sdyred {

namespace {

struct ZeroCurvatureParts {
  LambdaMatrixField ut, ay, vx, comm;
};

ZeroCurvatureParts zero_curvature_parts(const LaxPair& p, DiffMethod method) {
  if (!p.u_poly_t) throw PreconditionError("insufficient time data: dU/dt was not supplied");
  require_same_grid(p.u_poly.grid(), p.v_poly.grid(), "lax pair");
  if (p.u_poly.dim() != p.v_poly.dim()) throw DimensionError("lax pair matrices differ in dimension");
  ZeroCurvatureParts z;
  z.ut = *p.u_poly_t;
  z.ay = p.y_coeff.empty() ? LambdaMatrixField(p.u_poly.grid(), p.u_poly.dim())
                           : p.y_coeff * derivative(p.u_poly, 1, method);
  z.vx = derivative(p.v_poly, 0, method);
  z.comm = commutator(p.u_poly, p.v_poly);
  return z;
}

const MatrixField* coeff_or_null(const LambdaMatrixField& f, int k) { return k <= f.degree() ? &f.coeff(k) : nullptr; }

double entry_linf(const LambdaMatrixField& f, int k, int i, int j) {
  const MatrixField* m = coeff_or_null(f, k);
  return m ? lp_norms(m->entry(i, j)).linf : 0.0;
}

ScalarField entry_or_zero(const LambdaMatrixField& f, int k, int i, int j) {
  const MatrixField* m = coeff_or_null(f, k);
  return m ? m->entry(i, j) : ScalarField(f.grid());
}

}  // namespace

LambdaMatrixField zero_curvature(const LaxPair& p, DiffMethod method) {
  const ZeroCurvatureParts z = zero_curvature_parts(p, method);
  return z.ut - z.ay - z.vx + z.comm;
}

ResidualReport zero_curvature_residual(const LaxPair& p, double tolerance, NormKind norm, DiffMethod method) {
  const ZeroCurvatureParts z = zero_curvature_parts(p, method);
  const LambdaMatrixField total = z.ut - z.ay - z.vx + z.comm;
  std::vector<ComponentNorms> comps;
  for (int k = 0; k <= total.degree(); ++k) {
    double scale = 0.0;
    for (const auto* part : {&z.ut, &z.ay, &z.vx, &z.comm})
      if (const MatrixField* m = coeff_or_null(*part, k)) scale = std::max(scale, lp_norms(*m).linf);
    comps.push_back(measure_residual("lambda^" + std::to_string(k), total.coeff(k), scale));
  }
  return finalize(std::move(comps), tolerance, norm);
}

bool identical(const LaxPair& a, const LaxPair& b) {
  auto same = [](const LambdaMatrixField& x, const LambdaMatrixField& y) {
    if (x.dim() != y.dim() || x.grid() != y.grid()) return false;
    const int top = std::max(x.degree(), y.degree());
    for (int k = 0; k <= top; ++k)
      for (int i = 0; i < x.dim(); ++i)
        for (int j = 0; j < x.dim(); ++j) {
          const ScalarField ex = entry_or_zero(x, k, i, j), ey = entry_or_zero(y, k, i, j);
          if (ex.values() != ey.values()) return false;
        }
    return true;
  };
  if (!same(a.u_poly, b.u_poly) || !same(a.v_poly, b.v_poly)) return false;
  if (a.u_poly_t.has_value() != b.u_poly_t.has_value()) return false;
  if (a.u_poly_t && !same(*a.u_poly_t, *b.u_poly_t)) return false;
  const size_t n = std::max(a.y_coeff.size(), b.y_coeff.size());
  for (size_t k = 0; k < n; ++k) {
    const cplx ca = k < a.y_coeff.size() ? a.y_coeff[k] : cplx{};
    const cplx cb = k < b.y_coeff.size() ? b.y_coeff[k] : cplx{};
    if (ca != cb) return false;
  }
  return true;
}

LaxPair gauge_transform_pair(const LaxPair& p, const ScalarField& chi, const ScalarField& chi_t,
                             const ComplexMatrix& k, DiffMethod method) {
  const Grid& g = p.u_poly.grid();
  require_same_grid(g, chi.grid(), "gauge transform");
  const MatrixField kf = MatrixField::constant(g, k);
  const MatrixField h = pointwise_exp(chi * kf);
  const MatrixField h_inv = pointwise_exp((-chi) * kf);
  auto conjugate = [&](const LambdaMatrixField& f) {
    std::vector<MatrixField> c;
    for (const auto& m : f.coeffs()) c.push_back(h * m * h_inv);
    return LambdaMatrixField(std::move(c));
  };
  // h_mu h^-1 = chi_mu K because K commutes with h.
  const MatrixField hx = derivative(chi, 0, method) * kf;
  const MatrixField ht = chi_t * kf;

  LaxPair out;
  out.y_coeff = p.y_coeff;
  out.u_poly = conjugate(p.u_poly) + LambdaMatrixField::constant(hx);
  LambdaMatrixField v = conjugate(p.v_poly) + LambdaMatrixField::constant(ht);
  if (!p.y_coeff.empty()) {
    const MatrixField hy = derivative(chi, 1, method) * kf;
    v = v - p.y_coeff * LambdaMatrixField::constant(hy);
  }
  out.v_poly = v;
  if (p.u_poly_t) {
    // (h U h^-1)_t = [h_t h^-1, h U h^-1] + h U_t h^-1
    const LambdaMatrixField hu = conjugate(p.u_poly);
    out.u_poly_t = commutator(LambdaMatrixField::constant(ht), hu) + conjugate(*p.u_poly_t) +
                   LambdaMatrixField::constant(derivative(chi_t, 0, method) * kf);
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<ScalarField> case_terms(const LaxCase& c, const FieldMap& fields, DiffMethod method) {
  ResidualOptions opt;
  opt.method = method;
  const auto parts = pde_components(c.equation, fields, opt);
  auto terms = c.terms(fields, parts);
  if (terms.size() != c.term_names.size()) throw PreconditionError("lax case " + c.name + ": term count mismatch");
  return terms;
}

const GradingRow* find_row(const std::vector<GradingRow>& rows, int k, int i, int j) {
  for (const auto& r : rows)
    if (r.power == k && r.i == i && r.j == j) return &r;
  return nullptr;
}

int max_power(const std::vector<GradingRow>& rows) {
  int m = 0;
  for (const auto& r : rows) m = std::max(m, r.power);
  return m;
}

}  // namespace

ResidualReport lax_grading_check(const LaxCase& c, const FieldMap& fields, double tolerance, DiffMethod method) {
  const LaxPair pair = c.build(fields);
  const ZeroCurvatureParts z = zero_curvature_parts(pair, method);
  const LambdaMatrixField total = z.ut - z.ay - z.vx + z.comm;
  const auto terms = case_terms(c, fields, method);
  const int dim = total.dim();
  const int top = std::max(total.degree(), max_power(c.declared));

  std::vector<ComponentNorms> comps;
  for (int k = 0; k <= top; ++k)
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) {
        ScalarField combo(total.grid());
        if (const GradingRow* row = find_row(c.declared, k, i, j))
          for (size_t m = 0; m < terms.size(); ++m)
            if (row->coeffs[m] != cplx{}) combo += row->coeffs[m] * terms[m];
        double scale = lp_norms(combo).linf;
        for (const auto* part : {&z.ut, &z.ay, &z.vx, &z.comm}) scale = std::max(scale, entry_linf(*part, k, i, j));
        const std::string name =
            "lambda^" + std::to_string(k) + "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
        comps.push_back(measure_residual(name, entry_or_zero(total, k, i, j) - combo, scale));
      }
  return finalize(std::move(comps), tolerance, NormKind::relative);
}

std::vector<GradingRow> extract_grading(const LaxCase& c, const FieldMap& fields, DiffMethod method) {
  const LambdaMatrixField total = zero_curvature(c.build(fields), method);
  const auto terms = case_terms(c, fields, method);
  const std::size_t n = total.grid().points();
  Eigen::MatrixXcd basis(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(terms.size()));
  for (size_t m = 0; m < terms.size(); ++m)
    for (std::size_t p = 0; p < n; ++p) basis(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(m)) = terms[m][p];
  const Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(basis);

  std::vector<GradingRow> rows;
  for (int k = 0; k <= total.degree(); ++k)
    for (int i = 0; i < total.dim(); ++i)
      for (int j = 0; j < total.dim(); ++j) {
        const ScalarField& z = total.coeff(k).entry(i, j);
        const Eigen::Map<const Eigen::VectorXcd> rhs(z.data(), static_cast<Eigen::Index>(n));
        const Eigen::VectorXcd sol = qr.solve(rhs);
        GradingRow row{k, i, j, std::vector<cplx>(sol.data(), sol.data() + sol.size())};
        rows.push_back(std::move(row));
      }
  return rows;
}

double grading_distance(const std::vector<GradingRow>& a, const std::vector<GradingRow>& b) {
  std::map<std::tuple<int, int, int>, std::pair<std::vector<cplx>, std::vector<cplx>>> all;
  for (const auto& r : a) all[{r.power, r.i, r.j}].first = r.coeffs;
  for (const auto& r : b) all[{r.power, r.i, r.j}].second = r.coeffs;
  double d = 0.0;
  for (const auto& [key, pr] : all) {
    const size_t n = std::max(pr.first.size(), pr.second.size());
    for (size_t m = 0; m < n; ++m) {
      const cplx x = m < pr.first.size() ? pr.first[m] : cplx{};
      const cplx y = m < pr.second.size() ? pr.second[m] : cplx{};
      d = std::max(d, std::abs(x - y));
    }
  }
  return d;
}

// ---------------------------------------------------------------------------

SdymLaxPair build_sdym_lax(const ConnectionSet& c) {
  c.validate();
  SdymLaxPair p;
  p.roles = c.roles;
  p.b.value = LambdaMatrixField::pencil(c.a[0], c.a[2]);
  p.d.value = LambdaMatrixField::pencil(c.a[1], c.a[3]);
  if (c.d_supplied[0] && c.d_supplied[2])
    p.b.supplied_derivative = LambdaMatrixField::pencil(*c.d_supplied[0], *c.d_supplied[2]);
  if (c.d_supplied[1] && c.d_supplied[3])
    p.d.supplied_derivative = LambdaMatrixField::pencil(*c.d_supplied[1], *c.d_supplied[3]);
  return p;
}

LambdaMatrixField sdym_lax_commutator(const SdymLaxPair& p, DiffMethod method) {
  auto d = [&](const Potential<LambdaMatrixField>& f, int coord) {
    return partial(f.value, f.supplied_derivative, p.roles[static_cast<size_t>(coord)], method);
  };
  const ScalarPoly lambda{0.0, 1.0};
  return (lambda * d(p.d, 2) - d(p.d, 0)) + (d(p.b, 1) - lambda * d(p.b, 3)) + commutator(p.b.value, p.d.value);
}

ResidualReport sdym_lax_residual(const SdymLaxPair& p, double tolerance, NormKind norm, DiffMethod method) {
  const LambdaMatrixField z = sdym_lax_commutator(p, method);
  std::vector<ComponentNorms> comps;
  for (int k = 0; k <= z.degree(); ++k) {
    const MatrixField zero(z.grid(), z.dim());
    comps.push_back(measure(MatrixBalance{"lambda^" + std::to_string(k), z.coeff(k), zero}));
  }
  return finalize(std::move(comps), tolerance, norm);
}

}  // namespace sdyred
