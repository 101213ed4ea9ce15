#include "sdyred/nonisospectral.hpp"

#include <algorithm>
#include <cmath>

#include "sdyred/errors.hpp"

namespace sdyred {

Window::Window(std::vector<double> lo, std::vector<double> hi, std::vector<int> n)
    : lo_(std::move(lo)), hi_(std::move(hi)), n_(std::move(n)) {
  if (lo_.size() != n_.size() || hi_.size() != n_.size() || n_.empty())
    throw DimensionError("window bounds and sizes must have equal, nonzero length");
  stride_.assign(n_.size(), 1);
  for (size_t a = n_.size(); a-- > 0;) {
    if (n_[a] < 2 || !(hi_[a] > lo_[a])) throw DimensionError("window axis needs >= 2 samples and hi > lo");
    stride_[a] = points_;
    points_ *= static_cast<std::size_t>(n_[a]);
  }
}

std::vector<double> Window::point(std::size_t flat) const {
  std::vector<double> c(n_.size());
  for (int a = 0; a < ndim(); ++a) c[static_cast<size_t>(a)] = coord(a, index_along(flat, a));
  return c;
}

NonisoVariant parse_noniso_variant(const std::string& s) {
  if (s == "four-coordinate") return NonisoVariant::four_coordinate;
  if (s == "xyt") return NonisoVariant::xyt;
  throw PreconditionError("unknown nonisospectral variant: " + s);
}

const char* to_string(NonisoVariant v) { return v == NonisoVariant::four_coordinate ? "four-coordinate" : "xyt"; }

namespace {

int variant_dims(NonisoVariant v) { return v == NonisoVariant::four_coordinate ? 4 : 3; }

// Numerator and denominator are affine: value = c0 + sum c_i x_i.
struct Affine {
  double c0 = 0.0;
  std::vector<double> c;
  double at(const std::vector<double>& x) const {
    double s = c0;
    for (size_t i = 0; i < c.size(); ++i) s += c[i] * x[i];
    return s;
  }
};

std::pair<Affine, Affine> fraction(const LambdaParams& p, NonisoVariant v) {
  Affine num, den;
  if (v == NonisoVariant::four_coordinate) {
    num = {p.n3 + p.m3c, {0.0, 0.0, p.n1, p.m1}};
    den = {p.n4 + p.m4, {-p.n1, -p.m1, 0.0, 0.0}};
  } else {
    num = {p.n3, {0.0, p.n1, 0.0}};
    den = {p.n4, {0.0, 0.0, -p.n1}};
  }
  return {num, den};
}

void require_coords(NonisoVariant v, const std::vector<double>& x) {
  if (static_cast<int>(x.size()) != variant_dims(v))
    throw DimensionError(std::string("variant ") + to_string(v) + " takes " + std::to_string(variant_dims(v)) +
                         " coordinates");
}

}  // namespace

double lambda_value(const LambdaParams& p, NonisoVariant v, const std::vector<double>& x) {
  require_coords(v, x);
  const auto [num, den] = fraction(p, v);
  const double d = den.at(x);
  if (d == 0.0) throw PreconditionError("lambda has a pole at the requested point");
  return num.at(x) / d;
}

std::vector<double> lambda_gradient(const LambdaParams& p, NonisoVariant v, const std::vector<double>& x) {
  require_coords(v, x);
  const auto [num, den] = fraction(p, v);
  const double n = num.at(x), d = den.at(x);
  if (d == 0.0) throw PreconditionError("lambda has a pole at the requested point");
  std::vector<double> g(x.size());
  for (size_t i = 0; i < x.size(); ++i) g[i] = (num.c[i] * d - n * den.c[i]) / (d * d);
  return g;
}

LambdaField lambda_field(const LambdaParams& p, const Window& w, NonisoVariant v) {
  if (w.ndim() != variant_dims(v)) throw DimensionError("window dimension does not match the variant");
  // An affine denominator is extremal at the corners.
  const Affine den = fraction(p, v).second;
  double lo = INFINITY, hi = -INFINITY;
  for (int corner = 0; corner < (1 << w.ndim()); ++corner) {
    std::vector<double> x(static_cast<size_t>(w.ndim()));
    for (int a = 0; a < w.ndim(); ++a) x[static_cast<size_t>(a)] = (corner >> a) & 1 ? w.hi(a) : w.lo(a);
    const double d = den.at(x);
    lo = std::min(lo, d);
    hi = std::max(hi, d);
  }
  if (lo <= 0.0 && hi >= 0.0) throw PreconditionError("lambda has a pole inside the window");

  LambdaField lf{w, v, p, std::vector<cplx>(w.points())};
  for (std::size_t i = 0; i < w.points(); ++i) lf.values[i] = lambda_value(p, v, w.point(i));
  return lf;
}

namespace {

// Fourth-order central first derivative along an axis; valid where the index
// along every axis lies in [2, n - 3].
cplx fd4(const LambdaField& lf, std::size_t i, int axis) {
  const auto s = static_cast<std::ptrdiff_t>(lf.window.stride(axis));
  const auto at = [&](std::ptrdiff_t off) { return lf.values[static_cast<std::size_t>(static_cast<std::ptrdiff_t>(i) + off)]; };
  return (at(-2 * s) - 8.0 * at(-s) + 8.0 * at(s) - at(2 * s)) / (12.0 * lf.window.spacing(axis));
}

bool interior(const Window& w, std::size_t i) {
  for (int a = 0; a < w.ndim(); ++a) {
    const int k = w.index_along(i, a);
    if (k < 2 || k > w.size(a) - 3) return false;
  }
  return true;
}

}  // namespace

ResidualReport nonisospectral_residual(const LambdaField& lf, NonisoDerivative mode, double tolerance) {
  const Window& w = lf.window;
  if (mode == NonisoDerivative::finite_difference)
    for (int a = 0; a < w.ndim(); ++a)
      if (w.size(a) < 5) throw DimensionError("finite differences need at least 5 samples per axis");

  struct Pair {
    std::string name;
    int lhs_axis;
    int rhs_axis;  // -1: right-hand side is zero
  };
  const std::vector<Pair> pairs = lf.variant == NonisoVariant::four_coordinate
                                      ? std::vector<Pair>{{"xi1-xi3", 0, 2}, {"xi2-xi4", 1, 3}}
                                      : std::vector<Pair>{{"x", 0, -1}, {"t-y", 2, 1}};

  std::vector<ComponentNorms> comps;
  for (const auto& pr : pairs) {
    double res = 0.0, sum2 = 0.0, scale = 0.0;
    std::size_t count = 0;
    for (std::size_t i = 0; i < w.points(); ++i) {
      cplx dl, dr;
      if (mode == NonisoDerivative::analytic) {
        const auto g = lambda_gradient(lf.params, lf.variant, w.point(i));
        dl = g[static_cast<size_t>(pr.lhs_axis)];
        dr = pr.rhs_axis >= 0 ? g[static_cast<size_t>(pr.rhs_axis)] : 0.0;
      } else {
        if (!interior(w, i)) continue;
        dl = fd4(lf, i, pr.lhs_axis);
        dr = pr.rhs_axis >= 0 ? fd4(lf, i, pr.rhs_axis) : 0.0;
      }
      const cplx rhs = lf.values[i] * dr;
      const double r = std::abs(dl - rhs);
      res = std::max(res, r);
      sum2 += r * r;
      scale = std::max({scale, std::abs(dl), std::abs(rhs)});
      ++count;
    }
    ComponentNorms c;
    c.name = pr.name;
    c.linf = res;
    c.l2 = count ? std::sqrt(sum2 / static_cast<double>(count)) : 0.0;
    c.relative = res / std::max(scale, kRelativeFloor);
    comps.push_back(c);
  }
  return finalize(std::move(comps), tolerance, NormKind::linf);
}

}  // namespace sdyred
