#include "sdyred/reduction.hpp"

#include <algorithm>
#include <cmath>

#include "sdyred/errors.hpp"

namespace sdyred {

ResidualReport reduction_equivalence(const ReductionLedgerEntry& entry, const FieldMap& fields, double tolerance,
                                     DiffMethod method) {
  const ConnectionSet conn = entry.build(fields);
  const auto matrix_parts = sdym3_components(conn, entry.matrix_variant, method);

  ResidualOptions opt;
  opt.method = method;
  const auto scalar_parts = pde_components(entry.equation_id(), fields, opt);
  std::vector<ScalarField> terms;
  for (const auto& name : entry.scalar_terms) {
    const bool conjugate = name.rfind("conj(", 0) == 0;
    const std::string base = conjugate ? name.substr(5, name.size() - 6) : name;
    auto it = std::find_if(scalar_parts.begin(), scalar_parts.end(), [&](const ScalarBalance& b) { return b.name == base; });
    if (it == scalar_parts.end()) throw PreconditionError("ledger term " + name + " is not a residual component");
    terms.push_back(conjugate ? conj(it->residual()) : it->residual());
  }

  std::vector<ComponentNorms> comps;
  for (const auto& row : entry.linear_map) {
    auto it = std::find_if(matrix_parts.begin(), matrix_parts.end(),
                           [&](const MatrixBalance& b) { return b.name == row.component; });
    if (it == matrix_parts.end()) throw PreconditionError("ledger component " + row.component + " not produced");
    const ScalarField& lhs = it->lhs.entry(row.i, row.j);
    const ScalarField& rhs = it->rhs.entry(row.i, row.j);
    ScalarField combo(lhs.grid());
    for (std::size_t k = 0; k < terms.size(); ++k)
      if (row.coeffs[k] != cplx{}) combo += row.coeffs[k] * terms[k];
    const double scale =
        std::max({lp_norms(lhs).linf, lp_norms(rhs).linf, lp_norms(combo).linf});
    const std::string name = row.component + "(" + std::to_string(row.i + 1) + "," + std::to_string(row.j + 1) + ")";
    comps.push_back(measure_residual(name, (lhs - rhs) - combo, scale));
  }
  return finalize(std::move(comps), tolerance, NormKind::relative);
}

FieldMap random_ledger_fields(const ReductionLedgerEntry& entry, const Grid& grid, Rng& rng) {
  FieldMap f;
  if (entry.equation == "zakharov") {
    f["phi"] = random_smooth_field(grid, rng, 1.0);
    f["v"] = random_smooth_field(grid, rng, 1.0, true);
    f["phi_t"] = random_smooth_field(grid, rng, 1.0);
    return f;
  }
  if (entry.equation == "m1_spin") {
    const ScalarField theta = random_smooth_field(grid, rng, 1.0, true, 4) + cplx(0.9);
    const ScalarField psi = random_smooth_field(grid, rng, 2.0, true, 4);
    const ScalarField theta_t = random_smooth_field(grid, rng, 1.0, true);
    const ScalarField psi_t = random_smooth_field(grid, rng, 1.0, true);
    const SpinField s = SpinField::from_angles(theta, psi);
    f["s1"] = s.s1;
    f["s2"] = s.s2;
    f["s3"] = s.s3;
    f["u"] = random_smooth_field(grid, rng, 1.0, true);
    // d/dt of (sin th cos ps, sin th sin ps, cos th)
    ScalarField s1t(grid), s2t(grid), s3t(grid);
    for (std::size_t p = 0; p < grid.points(); ++p) {
      const double th = theta[p].real(), ps = psi[p].real(), tht = theta_t[p].real(), pst = psi_t[p].real();
      s1t[p] = std::cos(th) * std::cos(ps) * tht - std::sin(th) * std::sin(ps) * pst;
      s2t[p] = std::cos(th) * std::sin(ps) * tht + std::sin(th) * std::cos(ps) * pst;
      s3t[p] = -std::sin(th) * tht;
    }
    f["s1_t"] = s1t;
    f["s2_t"] = s2t;
    f["s3_t"] = s3t;
    return f;
  }
  throw PreconditionError("no random field recipe for " + entry.name);
}

}  // namespace sdyred
