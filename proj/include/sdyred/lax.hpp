#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sdyred/ansatz.hpp"
#include "sdyred/equations.hpp"
#include "sdyred/lambda_field.hpp"
#include "sdyred/random_fields.hpp"

namespace sdyred {

// Linear problem  Psi_x = U Psi,  Psi_t = a(lambda) Psi_y + V Psi.
// Compatibility: U_t - a U_y - V_x + [U, V] = 0 for every lambda.
struct LaxPair {
  LambdaMatrixField u_poly;
  LambdaMatrixField v_poly;
  std::optional<LambdaMatrixField> u_poly_t;  // dU/dt, supplied analytically
  ScalarPoly y_coeff;                         // a(lambda); empty for 1+1 pairs
};

// The lambda-polynomial U_t - a U_y - V_x + [U, V].
LambdaMatrixField zero_curvature(const LaxPair& p, DiffMethod method = DiffMethod::spectral);
// One component per lambda power, named "lambda^k".
ResidualReport zero_curvature_residual(const LaxPair& p, double tolerance = 1e-9, NormKind norm = NormKind::linf,
                                       DiffMethod method = DiffMethod::spectral);

// Builders. Time derivatives are optional; without them the residual throws.
LaxPair build_ze_lax(const ScalarField& phi, const ScalarField& v, double r2,
                     const std::optional<ScalarField>& phi_t = std::nullopt);
LaxPair build_mi_lax(const SpinField& s, const ScalarField& u, const std::optional<SpinRates>& s_t = std::nullopt);
LaxPair build_m3q_lax(const ScalarField& q, const ScalarField& p, const ScalarField& v, double c, double d,
                      const std::optional<ScalarField>& q_t = std::nullopt,
                      const std::optional<ScalarField>& p_t = std::nullopt);
// The d = 0 member of the family above, assembled from its own formulas.
LaxPair build_strachan_lax(const ScalarField& q, const ScalarField& p, const ScalarField& v, double c,
                           const std::optional<ScalarField>& q_t = std::nullopt,
                           const std::optional<ScalarField>& p_t = std::nullopt);
LaxPair build_m22q_lax(const ScalarField& q, const ScalarField& p, const ScalarField& v1, const ScalarField& v2,
                       const std::optional<ScalarField>& q_t = std::nullopt,
                       const std::optional<ScalarField>& p_t = std::nullopt);

// Exact equality of every coefficient value (used for parameter restrictions).
bool identical(const LaxPair& a, const LaxPair& b);

// Conjugation Psi' = h Psi with h = exp(chi K), K constant:
// U' = h U h^-1 + h_x h^-1,  V' = h V h^-1 + h_t h^-1 - a h_y h^-1.
// Derivatives of h are taken analytically from chi and chi_t.
LaxPair gauge_transform_pair(const LaxPair& p, const ScalarField& chi, const ScalarField& chi_t,
                             const ComplexMatrix& k, DiffMethod method = DiffMethod::spectral);

// ---------------------------------------------------------------------------
// Lambda grading: every coefficient of the zero-curvature polynomial as a fixed
// linear combination of residual terms of the reduced equation.

struct GradingRow {
  int power = 0;
  int i = 0, j = 0;
  std::vector<cplx> coeffs;  // one per term
};

struct LaxCase {
  std::string name;  // "ze", "mi", "m3q", "m22q"
  EquationId equation;
  std::vector<std::string> term_names;
  std::vector<GradingRow> declared;  // rows absent here are declared zero
  std::function<LaxPair(const FieldMap&)> build;
  // Residual terms from the fields and the equation's residual components.
  std::function<std::vector<ScalarField>(const FieldMap&, const std::vector<ScalarBalance>&)> terms;
  std::function<FieldMap(const Grid&, Rng&)> random_fields;
};

std::vector<LaxCase> lax_cases();
LaxCase lax_case(const std::string& name);

// Compares each (power, entry) of the zero-curvature polynomial with its
// declared combination; relative to the largest term entering the difference.
ResidualReport lax_grading_check(const LaxCase& c, const FieldMap& fields, double tolerance = 1e-9,
                                 DiffMethod method = DiffMethod::spectral);

// Least-squares extraction of the grading coefficients from one field draw.
std::vector<GradingRow> extract_grading(const LaxCase& c, const FieldMap& fields,
                                        DiffMethod method = DiffMethod::spectral);
// Largest coefficient difference between two row sets (missing rows count as zero).
double grading_distance(const std::vector<GradingRow>& a, const std::vector<GradingRow>& b);

// ---------------------------------------------------------------------------
// Self-dual Yang-Mills linear problem
//   (d_1 - lambda d_3 - B) Psi = 0,  (d_2 - lambda d_4 - D) Psi = 0,
//   B = A_1 - lambda A_3,  D = A_2 - lambda A_4.
// The commutator of the two operators is the lambda-polynomial
//   -(d_1 - lambda d_3) D + (d_2 - lambda d_4) B + [B, D]
// whose coefficients are -F12, -(F41 - F32) and -F34.
struct SdymLaxPair {
  Potential<LambdaMatrixField> b, d;
  CoordinateRoles roles;
};

SdymLaxPair build_sdym_lax(const ConnectionSet& c);
LambdaMatrixField sdym_lax_commutator(const SdymLaxPair& p, DiffMethod method = DiffMethod::spectral);
ResidualReport sdym_lax_residual(const SdymLaxPair& p, double tolerance = 1e-9, NormKind norm = NormKind::linf,
                                 DiffMethod method = DiffMethod::spectral);

}  // namespace sdyred
