#pragma once

#include <cstdint>
#include <random>

#include "sdyred/field.hpp"

namespace sdyred {

using Rng = std::mt19937_64;

// Truncated Fourier series with integer mode indices |m_a| <= size_a / 8 and
// complex Gaussian amplitudes scaled by amplitude / (1 + |m|)^3.
// A real field is the real part of such a series. max_mode < 0 selects size / 8.
ScalarField random_smooth_field(const Grid& grid, Rng& rng, double amplitude = 1.0, bool real_valued = false,
                                int max_mode = -1);

// Random smooth field with exactly zero mean along every x-line.
ScalarField random_zero_mean_x_field(const Grid& grid, Rng& rng, double amplitude = 1.0, bool real_valued = false,
                                int max_mode = -1);

// Random matrix with independent complex Gaussian entries.
ComplexMatrix random_matrix(int dim, Rng& rng);
// Random anti-Hermitian matrix.
ComplexMatrix random_anti_hermitian(int dim, Rng& rng);

}  // namespace sdyred
