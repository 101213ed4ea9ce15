#pragma once

#include <string>

#include "sdyred/field.hpp"

namespace sdyred {

enum class DiffMethod { spectral, central2, central4 };
DiffMethod parse_diff_method(const std::string& name);
const char* to_string(DiffMethod m);

// Periodic partial derivative of the given order along an axis. Spectral
// derivatives zero the Nyquist bin for odd orders; finite differences apply
// the first-order stencil `order` times.
ScalarField derivative(const ScalarField& f, int axis, DiffMethod method = DiffMethod::spectral, int order = 1);
MatrixField derivative(const MatrixField& f, int axis, DiffMethod method = DiffMethod::spectral, int order = 1);

enum class MeanPolicy { require_zero, subtract };

// Zero-mean antiderivative along x (axis 0): returns g with g_x = f - mean_x(f)
// and mean_x(g) = 0. With MeanPolicy::require_zero a nonzero x-mean (beyond
// 1e-10 of max|f|) raises PreconditionError.
ScalarField antiderivative_x(const ScalarField& f, MeanPolicy policy = MeanPolicy::require_zero);

// Mean along x of every x-line, broadcast back over x.
ScalarField mean_x(const ScalarField& f);
// Largest |x-mean| over all x-lines.
double max_abs_mean_x(const ScalarField& f);

struct Norms {
  double l2 = 0.0;
  double linf = 0.0;
};

// l2 = sqrt(sum |f|^2 * cell volume); linf = max entry magnitude.
Norms lp_norms(const ScalarField& f);
Norms lp_norms(const MatrixField& f);

// Grid quadrature of f over the whole domain.
cplx integrate(const ScalarField& f);

}  // namespace sdyred
