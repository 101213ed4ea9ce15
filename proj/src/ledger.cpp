#include "sdyred/ledger.hpp"

#include <algorithm>
#include <cmath>

#include "sdyred/errors.hpp"

namespace sdyred {

EquationId ReductionLedgerEntry::equation_id() const {
  if (equation == "zakharov") return EquationId::make(equation, {{"r2", sign}});
  return EquationId::make(equation, {{"r", sign}});
}

int ReductionLedgerEntry::map_rank() const {
  std::vector<std::vector<cplx>> m;
  for (const auto& row : linear_map) m.push_back(row.coeffs);
  const int cols = static_cast<int>(scalar_terms.size());
  int rank = 0;
  for (int c = 0; c < cols && rank < static_cast<int>(m.size()); ++c) {
    int piv = rank;
    for (int r = rank; r < static_cast<int>(m.size()); ++r)
      if (std::abs(m[r][c]) > std::abs(m[piv][c])) piv = r;
    if (std::abs(m[piv][c]) < 1e-12) continue;
    std::swap(m[piv], m[rank]);
    for (int r = 0; r < static_cast<int>(m.size()); ++r) {
      if (r == rank) continue;
      const cplx f = m[r][c] / m[rank][c];
      for (int k = 0; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

namespace {

const ScalarField& need(const FieldMap& f, const std::string& name) {
  auto it = f.find(name);
  if (it == f.end()) throw PreconditionError("reduction needs field '" + name + "'");
  return it->second;
}

ReductionLedgerEntry zakharov_entry(double r2) {
  ReductionLedgerEntry e;
  e.name = "zakharov";
  e.equation = "zakharov";
  e.sign = r2;
  e.gauge_tags = gauge_a4_zero | gauge_a3_const;
  e.matrix_variant = Sdym3Variant::a3_const;
  e.scalar_terms = {"evolution", "conj(evolution)", "constraint"};
  const cplx i = I_UNIT;
  e.linear_map = {
      {"F12", 0, 1, {-1.0, -r2, 0.0}},
      {"F12", 0, 2, {i, -i * r2, 0.0}},
      {"F12", 1, 2, {0.0, 0.0, 1.0}},
      {"mixed", 0, 1, {0.0, 0.0, 0.0}},
      {"mixed", 0, 2, {0.0, 0.0, 0.0}},
      {"mixed", 1, 2, {0.0, 0.0, 0.0}},
  };
  e.build = [r2](const FieldMap& f) {
    return build_zakharov_connection(need(f, "phi"), need(f, "v"), r2, need(f, "phi_t"));
  };
  return e;
}

ReductionLedgerEntry spin_entry(double r) {
  ReductionLedgerEntry e;
  e.name = "m1-spin";
  e.equation = "m1_spin";
  e.sign = r;
  e.gauge_tags = gauge_a1a2_zero;
  e.matrix_variant = Sdym3Variant::spin;
  e.scalar_terms = {"evolution[1,1]", "evolution[1,2]", "evolution[2,1]"};
  e.auxiliary_terms = {"constraint"};
  const cplx i = I_UNIT;
  e.linear_map = {
      {"A3-A4", 0, 1, {0.0, 0.0, 0.0}},
      {"A3-A4", 0, 2, {0.0, 0.0, 0.0}},
      {"A3-A4", 1, 2, {0.0, 0.0, 0.0}},
      {"A4-A3", 0, 1, {0.0, -0.5 * i, -0.5 * i}},
      {"A4-A3", 0, 2, {0.0, -0.5, 0.5}},
      {"A4-A3", 1, 2, {-i, 0.0, 0.0}},
  };
  e.build = [r](const FieldMap& f) {
    const SpinField s{need(f, "s1"), need(f, "s2"), need(f, "s3")};
    const SpinRates rates{need(f, "s1_t"), need(f, "s2_t"), need(f, "s3_t")};
    return build_spin_connection(s, need(f, "u"), r, rates);
  };
  return e;
}

}  // namespace

std::vector<ReductionLedgerEntry> ledger_entries(double sign) {
  if (sign != 1.0 && sign != -1.0) throw PreconditionError("ledger sign must be +1 or -1");
  return {zakharov_entry(sign), spin_entry(sign)};
}

ReductionLedgerEntry ledger_entry(const std::string& name, double sign) {
  for (auto& e : ledger_entries(sign))
    if (e.name == name) return e;
  throw PreconditionError("no ledger entry named " + name);
}

}  // namespace sdyred
