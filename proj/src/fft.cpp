#include "sdyred/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <numbers>
#include <tuple>

#include "sdyred/errors.hpp"

namespace sdyred::fft {

namespace {

// FFTW's planner is not thread-safe; execution of an existing plan is.
// Plans are created with FFTW_UNALIGNED so the same codelets run for every
// buffer, which keeps results bitwise reproducible.
class PlanCache {
 public:
  using Key = std::tuple<std::vector<int>, int, int>;  // sizes, axis (-1 = all), sign

  fftw_plan get(const Grid& grid, int axis, int sign) {
    Key key{grid.sizes(), axis, sign};
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = plans_.find(key);
    if (it != plans_.end()) return it->second;
    fftw_complex* scratch = fftw_alloc_complex(grid.points());
    fftw_plan plan = nullptr;
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    if (axis < 0) {
      plan = fftw_plan_dft(grid.ndim(), grid.sizes().data(), scratch, scratch, sign, flags);
    } else {
      fftw_iodim64 dim{grid.size(axis), static_cast<ptrdiff_t>(grid.stride(axis)),
                       static_cast<ptrdiff_t>(grid.stride(axis))};
      std::vector<fftw_iodim64> loops;
      for (int a = 0; a < grid.ndim(); ++a) {
        if (a == axis) continue;
        loops.push_back({grid.size(a), static_cast<ptrdiff_t>(grid.stride(a)), static_cast<ptrdiff_t>(grid.stride(a))});
      }
      plan = fftw_plan_guru64_dft(1, &dim, static_cast<int>(loops.size()), loops.data(), scratch, scratch, sign, flags);
    }
    fftw_free(scratch);
    if (!plan) throw NumericalError("FFT planning failed");
    plans_.emplace(std::move(key), plan);
    return plan;
  }

  ~PlanCache() {
    for (auto& [k, p] : plans_) fftw_destroy_plan(p);
  }

 private:
  std::mutex mutex_;
  std::map<Key, fftw_plan> plans_;
};

PlanCache& cache() {
  static PlanCache c;
  return c;
}

}  // namespace

void transform_axis(std::complex<double>* data, const Grid& grid, int axis, int sign) {
  if (axis < 0 || axis >= grid.ndim()) throw DimensionError("FFT axis out of range");
  fftw_plan plan = cache().get(grid, axis, sign);
  auto* p = reinterpret_cast<fftw_complex*>(data);
  fftw_execute_dft(plan, p, p);
}

void transform_all(std::complex<double>* data, const Grid& grid, int sign) {
  fftw_plan plan = cache().get(grid, -1, sign);
  auto* p = reinterpret_cast<fftw_complex*>(data);
  fftw_execute_dft(plan, p, p);
}

double wavenumber(int j, int n, double length) {
  const int m = (j <= n / 2) ? j : j - n;
  return 2.0 * std::numbers::pi * m / length;
}

void scale_along_axis(std::complex<double>* data, const Grid& grid, int axis,
                      const std::vector<std::complex<double>>& mult) {
  const std::size_t stride = grid.stride(axis);
  const std::size_t n = static_cast<std::size_t>(grid.size(axis));
  const std::size_t block = stride * n;
  for (std::size_t base = 0; base < grid.points(); base += block)
    for (std::size_t j = 0; j < n; ++j) {
      const std::complex<double> m = mult[j];
      std::complex<double>* row = data + base + j * stride;
      for (std::size_t s = 0; s < stride; ++s) row[s] *= m;
    }
}

}  // namespace sdyred::fft
