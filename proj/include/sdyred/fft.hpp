#pragma once

#include <complex>
#include <vector>

#include "sdyred/grid.hpp"

namespace sdyred::fft {

// In-place unnormalized DFT along one axis of a grid-shaped array.
// sign = -1 is the forward transform, +1 the inverse.
void transform_axis(std::complex<double>* data, const Grid& grid, int axis, int sign);

// In-place unnormalized DFT over every axis.
void transform_all(std::complex<double>* data, const Grid& grid, int sign);

// Angular wavenumber of DFT bin j on an axis of n points and period L.
double wavenumber(int j, int n, double length);
inline bool is_nyquist(int j, int n) { return n % 2 == 0 && j == n / 2; }

// Multiplies each bin along `axis` by mult[j] (array already in Fourier space).
void scale_along_axis(std::complex<double>* data, const Grid& grid, int axis,
                      const std::vector<std::complex<double>>& mult);

}  // namespace sdyred::fft
