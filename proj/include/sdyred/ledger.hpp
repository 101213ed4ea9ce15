#pragma once

#include <functional>
#include <string>
#include <vector>

#include "sdyred/ansatz.hpp"
#include "sdyred/curvature.hpp"
#include "sdyred/equations.hpp"

namespace sdyred {

// One independent entry of a matrix residual component expressed through the
// scalar residual terms of the reduced equation.
struct LedgerRow {
  std::string component;     // matrix residual component, e.g. "F12"
  int i = 0, j = 0;          // 0-based entry
  std::vector<cplx> coeffs;  // one per scalar term
};

struct ReductionLedgerEntry {
  std::string name;
  std::string equation;                  // scalar equation name
  double sign = 1.0;                     // r2 (zakharov) or r (spin)
  unsigned gauge_tags = gauge_none;
  Sdym3Variant matrix_variant = Sdym3Variant::general;
  // Scalar terms, by component name of pde_components; "conj(name)" denotes the conjugate.
  std::vector<std::string> scalar_terms;
  // Scalar residuals that are implied by the matrix equation but do not appear linearly in it.
  std::vector<std::string> auxiliary_terms;
  std::vector<LedgerRow> linear_map;
  std::function<ConnectionSet(const FieldMap&)> build;

  EquationId equation_id() const;
  // Rank of the coefficient matrix (rows x scalar_terms), by Gaussian elimination.
  int map_rank() const;
};

// The reductions "zakharov" (sign = r2) and "m1-spin" (sign = r), sign in {+1, -1}.
std::vector<ReductionLedgerEntry> ledger_entries(double sign = 1.0);
ReductionLedgerEntry ledger_entry(const std::string& name, double sign = 1.0);

}  // namespace sdyred
