#pragma once

#include <optional>

#include "sdyred/connection.hpp"

namespace sdyred {

// Unit vector field (s1, s2, s3) with the involutive matrix form
// S = s1 sigma_1 + s2 sigma_2 + s3 sigma_3.
struct SpinField {
  ScalarField s1, s2, s3;

  const Grid& grid() const { return s1.grid(); }
  // Largest | |s|^2 - 1 | over the grid.
  double norm_violation() const;
  // Throws PreconditionError when the unit-norm invariant fails beyond tol.
  void require_unit(double tol = 1e-10) const;
  MatrixField matrix() const;
  // s = (sin th cos ps, sin th sin ps, cos th) from real angle fields.
  static SpinField from_angles(const ScalarField& theta, const ScalarField& psi);
  static SpinField constant(const Grid& grid, double s1, double s2, double s3);
};

struct SpinRates {
  ScalarField s1, s2, s3;  // time derivatives of the spin components
};

// Zakharov ansatz: xi_1 = x, xi_2 = t, xi_4 = y, A_4 = 0, A_3 constant.
// A_1 corresponds to G = [[0, phi], [-r2 conj(phi), 0]] and A_2 to
// V = -(i/2) v sigma_3 + i G_y sigma_3 under the adapted isomorphism.
// r2 = +1 gives so(3) matrices; r2 = -1 complex antisymmetric ones (so(2,1)).
// Time derivatives are optional; without them residuals needing d/dt throw.
ConnectionSet build_zakharov_connection(const ScalarField& phi, const ScalarField& v, double r2,
                                        const std::optional<ScalarField>& phi_t = std::nullopt,
                                        const std::optional<ScalarField>& v_t = std::nullopt);

// Spin ansatz: A_1 = A_2 = 0, A_3 <-> -(i/2) S_r, A_4 <-> -(1/4) W with
// S_r = s3 sigma_3 + r (s1 sigma_1 + s2 sigma_2) and W = [S_r, S_r,y] + 2iu S_r.
ConnectionSet build_spin_connection(const SpinField& s, const ScalarField& u, double r,
                                    const std::optional<SpinRates>& s_t = std::nullopt);

// The A_4 entries of the spin ansatz in closed form (entries (1,2), (1,3), (2,3)),
// written through the S+/S- combinations. Used as an independent cross-check.
MatrixField spin_a4_closed_form(const SpinField& s, const ScalarField& u, double r);

}  // namespace sdyred
