#include "sdyred/random_fields.hpp"

#include <algorithm>
#include <cmath>

#include "sdyred/fft.hpp"

namespace sdyred {

namespace {

ScalarField random_series(const Grid& grid, Rng& rng, double amplitude, bool real_valued, bool skip_zero_x_mode,
                          int max_mode) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ScalarField spec(grid);
  int cut[3] = {0, 0, 0};
  for (int a = 0; a < grid.ndim(); ++a) cut[a] = max_mode < 0 ? grid.size(a) / 8 : std::min(max_mode, grid.size(a) / 2 - 1);
  // Iterate modes in a fixed order so draws are reproducible.
  for (int m0 = -cut[0]; m0 <= cut[0]; ++m0)
    for (int m1 = -cut[1]; m1 <= cut[1]; ++m1)
      for (int m2 = -cut[2]; m2 <= cut[2]; ++m2) {
        const double re = normal(rng);
        const double im = normal(rng);
        if (skip_zero_x_mode && m0 == 0) continue;
        const double k = std::sqrt(static_cast<double>(m0 * m0 + m1 * m1 + m2 * m2));
        const double scale = amplitude / std::pow(1.0 + k, 3);
        const int m[3] = {m0, m1, m2};
        std::size_t flat = 0;
        for (int a = 0; a < grid.ndim(); ++a) {
          const int n = grid.size(a);
          flat += static_cast<std::size_t>((m[a] % n + n) % n) * grid.stride(a);
        }
        spec[flat] += scale * cplx(re, im);
      }
  fft::transform_all(spec.data(), grid, +1);
  if (real_valued) spec = real_part(std::move(spec));
  return spec;
}

}  // namespace

ScalarField random_smooth_field(const Grid& grid, Rng& rng, double amplitude, bool real_valued, int max_mode) {
  return random_series(grid, rng, amplitude, real_valued, false, max_mode);
}

ScalarField random_zero_mean_x_field(const Grid& grid, Rng& rng, double amplitude, bool real_valued, int max_mode) {
  return random_series(grid, rng, amplitude, real_valued, true, max_mode);
}

ComplexMatrix random_matrix(int dim, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix m(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      const double re = normal(rng);
      m(i, j) = cplx(re, normal(rng));
    }
  return m;
}

ComplexMatrix random_anti_hermitian(int dim, Rng& rng) {
  ComplexMatrix m = random_matrix(dim, rng);
  ComplexMatrix a = 0.5 * (m - adjoint(m));
  return a;
}

}  // namespace sdyred
