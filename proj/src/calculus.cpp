#include "sdyred/calculus.hpp"

#include <algorithm>
#include <cmath>

#include "sdyred/errors.hpp"
#include "sdyred/fft.hpp"

namespace sdyred {

DiffMethod parse_diff_method(const std::string& name) {
  if (name == "spectral") return DiffMethod::spectral;
  if (name == "central2") return DiffMethod::central2;
  if (name == "central4") return DiffMethod::central4;
  throw PreconditionError("unknown derivative method: " + name);
}

const char* to_string(DiffMethod m) {
  switch (m) {
    case DiffMethod::spectral: return "spectral";
    case DiffMethod::central2: return "central2";
    case DiffMethod::central4: return "central4";
  }
  return "?";
}

namespace {

void check_axis(const Grid& g, int axis) {
  if (axis < 0 || axis >= g.ndim()) throw DimensionError("derivative axis out of range");
}

ScalarField spectral_derivative(const ScalarField& f, int axis, int order) {
  const Grid& g = f.grid();
  const int n = g.size(axis);
  std::vector<cplx> mult(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) {
    if (fft::is_nyquist(j, n) && order % 2 == 1) continue;
    const double k = fft::wavenumber(j, n, g.length(axis));
    static const cplx i_pow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    mult[static_cast<size_t>(j)] = i_pow[order % 4] * (std::pow(k, order) / static_cast<double>(n));
  }
  ScalarField out = f;
  fft::transform_axis(out.data(), g, axis, -1);
  fft::scale_along_axis(out.data(), g, axis, mult);
  fft::transform_axis(out.data(), g, axis, +1);
  return out;
}

ScalarField stencil_derivative(const ScalarField& f, int axis, DiffMethod method) {
  const Grid& g = f.grid();
  const std::size_t stride = g.stride(axis);
  const int n = g.size(axis);
  const double h = g.spacing(axis);
  ScalarField out(g);
  auto shifted = [&](std::size_t p, int i, int s) -> cplx {
    const int j = ((i + s) % n + n) % n;
    return f[p + static_cast<std::size_t>(j - i) * stride];
  };
  for (std::size_t p = 0; p < g.points(); ++p) {
    const int i = g.index_along(p, axis);
    if (method == DiffMethod::central2) {
      out[p] = (shifted(p, i, 1) - shifted(p, i, -1)) / (2.0 * h);
    } else {
      out[p] = (-shifted(p, i, 2) + 8.0 * shifted(p, i, 1) - 8.0 * shifted(p, i, -1) + shifted(p, i, -2)) / (12.0 * h);
    }
  }
  return out;
}

}  // namespace

ScalarField derivative(const ScalarField& f, int axis, DiffMethod method, int order) {
  check_axis(f.grid(), axis);
  if (order < 0) throw PreconditionError("derivative order must be non-negative");
  if (order == 0) return f;
  if (method == DiffMethod::spectral) return spectral_derivative(f, axis, order);
  ScalarField out = f;
  for (int k = 0; k < order; ++k) out = stencil_derivative(out, axis, method);
  return out;
}

MatrixField derivative(const MatrixField& f, int axis, DiffMethod method, int order) {
  MatrixField out(f.grid(), f.dim(), f.tag());
  for (int i = 0; i < f.dim(); ++i)
    for (int j = 0; j < f.dim(); ++j) out.entry(i, j) = derivative(f.entry(i, j), axis, method, order);
  return out;
}

ScalarField mean_x(const ScalarField& f) {
  const Grid& g = f.grid();
  const std::size_t stride = g.stride(0);
  const int n = g.size(0);
  ScalarField out(g);
  for (std::size_t r = 0; r < stride; ++r) {
    cplx s{};
    for (int i = 0; i < n; ++i) s += f[r + static_cast<std::size_t>(i) * stride];
    s /= static_cast<double>(n);
    for (int i = 0; i < n; ++i) out[r + static_cast<std::size_t>(i) * stride] = s;
  }
  return out;
}

double max_abs_mean_x(const ScalarField& f) {
  const ScalarField m = mean_x(f);
  double v = 0.0;
  for (std::size_t p = 0; p < m.size(); ++p) v = std::max(v, std::abs(m[p]));
  return v;
}

ScalarField antiderivative_x(const ScalarField& f, MeanPolicy policy) {
  const Grid& g = f.grid();
  if (policy == MeanPolicy::require_zero) {
    const double scale = lp_norms(f).linf;
    if (max_abs_mean_x(f) > 1e-10 * scale)
      throw PreconditionError("antiderivative_x: field has nonzero mean along x; periodic antiderivative does not exist");
  }
  const int n = g.size(0);
  std::vector<cplx> mult(static_cast<size_t>(n));
  for (int j = 1; j < n; ++j) {
    if (fft::is_nyquist(j, n)) continue;
    const double k = fft::wavenumber(j, n, g.length(0));
    mult[static_cast<size_t>(j)] = 1.0 / (cplx(0.0, k) * static_cast<double>(n));
  }
  ScalarField out = f;
  fft::transform_axis(out.data(), g, 0, -1);
  fft::scale_along_axis(out.data(), g, 0, mult);
  fft::transform_axis(out.data(), g, 0, +1);
  return out;
}

Norms lp_norms(const ScalarField& f) {
  double s = 0.0, m = 0.0;
  for (std::size_t p = 0; p < f.size(); ++p) {
    const double a = std::norm(f[p]);
    s += a;
    m = std::max(m, a);
  }
  return {std::sqrt(s * f.grid().cell_volume()), std::sqrt(m)};
}

Norms lp_norms(const MatrixField& f) {
  double s = 0.0, m = 0.0;
  for (int i = 0; i < f.dim(); ++i)
    for (int j = 0; j < f.dim(); ++j) {
      const Norms e = lp_norms(f.entry(i, j));
      s += e.l2 * e.l2;
      m = std::max(m, e.linf);
    }
  return {std::sqrt(s), m};
}

cplx integrate(const ScalarField& f) {
  cplx s{};
  for (std::size_t p = 0; p < f.size(); ++p) s += f[p];
  return s * f.grid().cell_volume();
}

}  // namespace sdyred
