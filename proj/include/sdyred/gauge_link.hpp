#pragma once

#include "sdyred/calculus.hpp"
#include "sdyred/equations.hpp"
#include "sdyred/random_fields.hpp"
#include "sdyred/report.hpp"

namespace sdyred {

struct GaugedFields {
  ScalarField q, p;
  ScalarField theta;  // zero-mean antiderivative of pq along x
};

// q' = q exp(-i theta / 2), p' = p exp(i theta / 2), theta = d_x^-1 (pq).
GaugedFields gauge_transform_fields(const ScalarField& q, const ScalarField& p,
                                    MeanPolicy policy = MeanPolicy::require_zero);

// exp(-(i/4) d_x^-1 |q|^2 sigma_3); diagonal and unitary.
MatrixField gauge_factor(const ScalarField& q, MeanPolicy policy = MeanPolicy::require_zero);

// Strachan gauge-form fields (q, p, v, q_t, p_t) obtained from M-XXII_q fields
// (q, p, v1, v2, q_t, p_t). The time derivative of theta carries the x-mean of
// -(1/2) pq v1 - i v2, which fixes the otherwise free y,t-dependent phase.
FieldMap strachan_image(const FieldMap& m22q_fields, DiffMethod method = DiffMethod::spectral);

// Components:
//   evolution_q  exp(-i theta/2) R_q - (i/2) q' d_x^-1 C  vs  R'_q
//   evolution_p  exp(+i theta/2) R_p + (i/2) p' d_x^-1 C  vs  R'_p
//   product      q'p' vs qp
// with C = p R_q + q R_p - R_2 - (i/2) pq R_1. The correction vanishes on shell.
// Exact for arbitrary v2; v1 must satisfy its constraint, since the image
// potential is rebuilt from q'p'. Requires zero x-mean of pq and of its time
// derivative.
ResidualReport gauge_equivalence_check(const FieldMap& m22q_fields, double tolerance = 1e-8,
                                       DiffMethod method = DiffMethod::spectral);

// q = exp(g), p = h_x exp(-g) with smooth random g, h, so pq = h_x has zero
// x-mean for all t; v1 and v2 are reconstructed from their constraints.
FieldMap random_gauge_fields(const Grid& g, Rng& rng);

}  // namespace sdyred
