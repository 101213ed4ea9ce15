#include "sdyred/curvature.hpp"

#include <string>

#include "sdyred/errors.hpp"

namespace sdyred {

namespace {

const MatrixField& pot(const ConnectionSet& c, int i) { return c.a[static_cast<size_t>(i - 1)]; }
MatrixField d(const ConnectionSet& c, int comp, int coord, DiffMethod m) { return partial(c, comp - 1, coord - 1, m); }

void require_xi3_free(const ConnectionSet& c) {
  if (c.roles[2].kind != RoleKind::absent)
    throw PreconditionError("three-dimensional reduction requires xi_3 to be absent");
}

void require_tags(const ConnectionSet& c, unsigned tags, const char* variant) {
  if ((c.gauge_tags & tags) != tags)
    throw PreconditionError(std::string("variant ") + variant + " requires gauge conditions not recorded on the connection");
}

}  // namespace

MatrixField curvature(const ConnectionSet& c, int i, int k, DiffMethod method) {
  if (i < 1 || i > 4 || k < 1 || k > 4) throw DimensionError("curvature index out of range");
  if (i == k) throw PreconditionError("curvature needs two distinct indices");
  if (i > k) return -curvature(c, k, i, method);
  return d(c, k, i, method) - d(c, i, k, method) + commutator(pot(c, k), pot(c, i));
}

std::vector<MatrixBalance> sdym_components(const ConnectionSet& c, DiffMethod m) {
  c.validate();
  std::vector<MatrixBalance> out;
  out.push_back({"F12", d(c, 2, 1, m) - d(c, 1, 2, m), -commutator(pot(c, 2), pot(c, 1))});
  out.push_back({"F34", d(c, 4, 3, m) - d(c, 3, 4, m), -commutator(pot(c, 4), pot(c, 3))});
  out.push_back({"F41-F32", curvature(c, 4, 1, m), curvature(c, 3, 2, m)});
  return out;
}

ResidualReport sdym_residual(const ConnectionSet& c, double tolerance, NormKind norm, DiffMethod method) {
  return make_report(sdym_components(c, method), tolerance, norm);
}

Sdym3Variant parse_sdym3_variant(const std::string& s) {
  if (s == "general") return Sdym3Variant::general;
  if (s == "a4-zero") return Sdym3Variant::a4_zero;
  if (s == "a3-const") return Sdym3Variant::a3_const;
  if (s == "spin") return Sdym3Variant::spin;
  throw PreconditionError("unknown three-dimensional variant: " + s);
}

std::vector<MatrixBalance> sdym3_components(const ConnectionSet& c, Sdym3Variant variant, DiffMethod m) {
  c.validate();
  require_xi3_free(c);
  std::vector<MatrixBalance> out;
  const MatrixField zero(c.grid(), c.dim());
  switch (variant) {
    case Sdym3Variant::general:
      return sdym_components(c, m);
    case Sdym3Variant::a4_zero:
      require_tags(c, gauge_a4_zero, "a4-zero");
      out.push_back({"F12", d(c, 2, 1, m) - d(c, 1, 2, m), -commutator(pot(c, 2), pot(c, 1))});
      out.push_back({"A3-static", d(c, 3, 4, m), zero});
      out.push_back({"mixed", d(c, 1, 4, m) + d(c, 3, 2, m), commutator(pot(c, 2), pot(c, 3))});
      return out;
    case Sdym3Variant::a3_const:
      require_tags(c, gauge_a4_zero | gauge_a3_const, "a3-const");
      out.push_back({"F12", d(c, 2, 1, m) - d(c, 1, 2, m), -commutator(pot(c, 2), pot(c, 1))});
      out.push_back({"mixed", d(c, 1, 4, m), commutator(pot(c, 2), pot(c, 3))});
      return out;
    case Sdym3Variant::spin:
      require_tags(c, gauge_a1a2_zero, "spin");
      out.push_back({"A3-A4", -d(c, 3, 4, m), -commutator(pot(c, 4), pot(c, 3))});
      out.push_back({"A4-A3", -d(c, 4, 1, m), -d(c, 3, 2, m)});
      return out;
  }
  return out;
}

ResidualReport sdym3_residual(const ConnectionSet& c, Sdym3Variant variant, double tolerance, NormKind norm,
                              DiffMethod method) {
  return make_report(sdym3_components(c, variant, method), tolerance, norm);
}

// ---------------------------------------------------------------------------

MlxxVariant parse_mlxx_variant(const std::string& s) {
  if (s == "general") return MlxxVariant::general;
  if (s == "scalar-coefficients") return MlxxVariant::scalar_coefficients;
  if (s == "three-dimensional") return MlxxVariant::three_dimensional;
  throw PreconditionError("unknown compatibility variant: " + s);
}

namespace {

LambdaMatrixField dl(const Potential<LambdaMatrixField>& p, const CoordinateRoles& roles, int coord, DiffMethod m) {
  return partial(p.value, p.supplied_derivative, roles[static_cast<size_t>(coord - 1)], m);
}

// True when every coefficient is a spatially constant multiple of the identity
// and the supplied derivative, if any, vanishes.
bool is_constant_scalar(const Potential<LambdaMatrixField>& p) {
  for (const auto& m : p.value.coeffs()) {
    const cplx s = m.entry(0, 0)[0];
    for (int i = 0; i < m.dim(); ++i)
      for (int j = 0; j < m.dim(); ++j) {
        const cplx want = i == j ? s : cplx{};
        for (std::size_t q = 0; q < m.grid().points(); ++q)
          if (m.entry(i, j)[q] != want) return false;
      }
  }
  if (p.supplied_derivative)
    for (const auto& m : p.supplied_derivative->coeffs())
      if (!m.is_zero()) return false;
  return true;
}

}  // namespace

std::vector<LambdaBalance> mlxx_components(const MlxxInputs& in, MlxxVariant variant, DiffMethod m) {
  const auto& r = in.roles;
  const LambdaMatrixField& A = in.a.value;
  const LambdaMatrixField& B = in.b.value;
  const LambdaMatrixField& C = in.c.value;
  const LambdaMatrixField& D = in.d.value;
  std::vector<LambdaBalance> out;
  if (variant != MlxxVariant::general) {
    if (!is_constant_scalar(in.a) || !is_constant_scalar(in.c))
      throw PreconditionError("scalar-coefficient variant requires A = aI and C = bI with constant a, b");
  }
  if (variant == MlxxVariant::three_dimensional) {
    out.push_back({"main", dl(in.b, r, 2, m) + commutator(B, D), C * dl(in.b, r, 4, m) + dl(in.d, r, 1, m)});
    return out;
  }
  out.push_back({"main", A * dl(in.d, r, 3, m) + dl(in.b, r, 2, m) + commutator(B, D),
                 C * dl(in.b, r, 4, m) + dl(in.d, r, 1, m)});
  if (variant == MlxxVariant::scalar_coefficients) return out;
  out.push_back({"a-transport", dl(in.a, r, 2, m) + commutator(A, D), C * dl(in.a, r, 4, m)});
  out.push_back({"a-c-commute", A * C, C * A});
  out.push_back({"c-transport", dl(in.c, r, 1, m) + commutator(C, B), A * dl(in.c, r, 3, m)});
  return out;
}

ResidualReport lambda_report(const std::vector<LambdaBalance>& parts, double tolerance, NormKind norm) {
  std::vector<ComponentNorms> comps;
  for (const auto& p : parts) {
    const int top = std::max(p.lhs.degree(), p.rhs.degree());
    for (int k = 0; k <= top; ++k) {
      const MatrixField zero(p.lhs.grid(), p.lhs.dim());
      const MatrixField& l = k <= p.lhs.degree() ? p.lhs.coeff(k) : zero;
      const MatrixField& rr = k <= p.rhs.degree() ? p.rhs.coeff(k) : zero;
      comps.push_back(measure(MatrixBalance{p.name + "[lambda^" + std::to_string(k) + "]", l, rr}));
    }
  }
  return finalize(std::move(comps), tolerance, norm);
}

ResidualReport mlxx_residual(const MlxxInputs& in, MlxxVariant variant, double tolerance, NormKind norm,
                             DiffMethod method) {
  return lambda_report(mlxx_components(in, variant, method), tolerance, norm);
}

MlxxInputs mlxx_from_connection(const ConnectionSet& c) {
  c.validate();
  const Grid& g = c.grid();
  const int n = c.dim();
  const MatrixField zero(g, n);
  const LambdaMatrixField lambda_id({zero, MatrixField::identity(g, n)});
  auto pencil_of = [&](int i, int k) {
    Potential<LambdaMatrixField> p{LambdaMatrixField::pencil(c.a[static_cast<size_t>(i)], c.a[static_cast<size_t>(k)]),
                                   std::nullopt};
    const auto& di = c.d_supplied[static_cast<size_t>(i)];
    const auto& dk = c.d_supplied[static_cast<size_t>(k)];
    if (di || dk) p.supplied_derivative = LambdaMatrixField::pencil(di ? *di : zero, dk ? *dk : zero);
    return p;
  };
  MlxxInputs in;
  in.roles = c.roles;
  in.a = {lambda_id, LambdaMatrixField(g, n)};
  in.c = in.a;
  in.b = pencil_of(0, 2);
  in.d = pencil_of(1, 3);
  return in;
}

ResidualReport mlxx_sdym_matching(const ConnectionSet& c, double tolerance, DiffMethod method) {
  const auto parts = mlxx_components(mlxx_from_connection(c), MlxxVariant::scalar_coefficients, method);
  const LambdaMatrixField res = parts.at(0).residual();
  const auto sd = sdym_components(c, method);  // F12, F34, F41-F32
  const std::vector<MatrixField> target = {-sd.at(0).residual(), -sd.at(2).residual(), -sd.at(1).residual()};
  std::vector<ComponentNorms> comps;
  for (int k = 0; k < 3; ++k) {
    const MatrixField coeff = k <= res.degree() ? res.coeff(k) : MatrixField(c.grid(), c.dim());
    comps.push_back(measure(MatrixBalance{"lambda^" + std::to_string(k), coeff, target[static_cast<size_t>(k)]}));
  }
  for (int k = 3; k <= res.degree(); ++k)
    comps.push_back(measure(MatrixBalance{"lambda^" + std::to_string(k), res.coeff(k), MatrixField(c.grid(), c.dim())}));
  return finalize(std::move(comps), tolerance, NormKind::relative);
}

// ---------------------------------------------------------------------------

std::vector<MatrixBalance> mlxii_components(const MatrixField& a, const MatrixField& b, const MatrixField& c,
                                            const CoordinateRoles& roles, DiffMethod m) {
  require_same_grid(a.grid(), b.grid(), "compatibility equations");
  require_same_grid(a.grid(), c.grid(), "compatibility equations");
  auto D = [&](const MatrixField& f, int coord) { return partial(f, std::nullopt, roles[static_cast<size_t>(coord - 1)], m); };
  std::vector<MatrixBalance> out;
  out.push_back({"a-b", D(a, 2) + commutator(a, b), D(b, 1)});
  out.push_back({"a-c", D(a, 3) + commutator(a, c), D(c, 1)});
  out.push_back({"c-b", D(c, 2) + commutator(c, b), D(b, 3)});
  return out;
}

std::vector<MatrixBalance> bogomolny_components(const MatrixField& a, const MatrixField& b, const MatrixField& c,
                                                const MatrixField& psi, const CoordinateRoles& roles, DiffMethod m) {
  auto out = mlxii_components(a, b, c, roles, m);
  auto D = [&](const MatrixField& f, int coord) { return partial(f, std::nullopt, roles[static_cast<size_t>(coord - 1)], m); };
  out[0].lhs += D(psi, 3) + commutator(psi, c);
  out[1].lhs += D(psi, 2) + commutator(psi, b);
  out[2].lhs += D(psi, 1) + commutator(psi, a);
  return out;
}

ResidualReport mlxii_residual(const MatrixField& a, const MatrixField& b, const MatrixField& c,
                              const CoordinateRoles& roles, double tolerance, NormKind norm) {
  return make_report(mlxii_components(a, b, c, roles), tolerance, norm);
}

ResidualReport bogomolny_residual(const MatrixField& a, const MatrixField& b, const MatrixField& c,
                                  const MatrixField& psi, const CoordinateRoles& roles, double tolerance,
                                  NormKind norm) {
  return make_report(bogomolny_components(a, b, c, psi, roles), tolerance, norm);
}

}  // namespace sdyred
