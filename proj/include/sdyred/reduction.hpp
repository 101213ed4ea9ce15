#pragma once

#include "sdyred/ledger.hpp"
#include "sdyred/random_fields.hpp"

namespace sdyred {

// Off-shell check: for each ledger row, the matrix residual entry minus the
// declared combination of scalar residuals, measured relative to the largest
// term entering the difference.
ResidualReport reduction_equivalence(const ReductionLedgerEntry& entry, const FieldMap& fields,
                                     double tolerance = 1e-10, DiffMethod method = DiffMethod::spectral);

// Random smooth field sets suitable for each ledger entry (off-shell data with
// analytic time derivatives drawn independently).
FieldMap random_ledger_fields(const ReductionLedgerEntry& entry, const Grid& grid, Rng& rng);

}  // namespace sdyred
