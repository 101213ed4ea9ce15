#include "sdyred/report.hpp"

#include <algorithm>

#include "sdyred/calculus.hpp"
#include "sdyred/errors.hpp"

namespace sdyred {

NormKind parse_norm_kind(const std::string& s) {
  if (s == "linf") return NormKind::linf;
  if (s == "l2") return NormKind::l2;
  if (s == "relative") return NormKind::relative;
  throw PreconditionError("unknown norm: " + s);
}

const char* to_string(NormKind k) {
  switch (k) {
    case NormKind::linf: return "linf";
    case NormKind::l2: return "l2";
    case NormKind::relative: return "relative";
  }
  return "?";
}

double ComponentNorms::select(NormKind k) const {
  switch (k) {
    case NormKind::linf: return linf;
    case NormKind::l2: return l2;
    case NormKind::relative: return relative;
  }
  return linf;
}

double ResidualReport::worst() const {
  double w = 0.0;
  for (const auto& c : components) w = std::max(w, c.select(norm));
  return w;
}

const ComponentNorms& ResidualReport::component(const std::string& name) const {
  for (const auto& c : components)
    if (c.name == name) return c;
  throw PreconditionError("report has no component named " + name);
}

nlohmann::json ResidualReport::to_json() const {
  nlohmann::json j;
  j["tolerance"] = tolerance;
  j["norm"] = to_string(norm);
  j["passed"] = passed;
  nlohmann::json comps = nlohmann::json::object();
  for (const auto& c : components) comps[c.name] = {{"l2", c.l2}, {"linf", c.linf}, {"relative", c.relative}};
  j["components"] = comps;
  return j;
}

namespace {

template <class F>
ComponentNorms measure_impl(const std::string& name, const F& residual, double scale) {
  const Norms n = lp_norms(residual);
  return {name, n.l2, n.linf, n.linf / std::max(scale, kRelativeFloor)};
}

}  // namespace

ComponentNorms measure(const ScalarBalance& b) {
  return measure_impl(b.name, b.residual(), std::max(lp_norms(b.lhs).linf, lp_norms(b.rhs).linf));
}

ComponentNorms measure(const MatrixBalance& b) {
  return measure_impl(b.name, b.residual(), std::max(lp_norms(b.lhs).linf, lp_norms(b.rhs).linf));
}

ComponentNorms measure_residual(const std::string& name, const ScalarField& residual, double term_scale) {
  return measure_impl(name, residual, term_scale);
}

ComponentNorms measure_residual(const std::string& name, const MatrixField& residual, double term_scale) {
  return measure_impl(name, residual, term_scale);
}

ResidualReport finalize(std::vector<ComponentNorms> comps, double tolerance, NormKind norm) {
  ResidualReport r;
  r.components = std::move(comps);
  r.tolerance = tolerance;
  r.norm = norm;
  r.passed = std::all_of(r.components.begin(), r.components.end(),
                         [&](const ComponentNorms& c) { return c.select(norm) <= tolerance; });
  return r;
}

ResidualReport make_report(const std::vector<ScalarBalance>& parts, double tolerance, NormKind norm) {
  std::vector<ComponentNorms> c;
  for (const auto& p : parts) c.push_back(measure(p));
  return finalize(std::move(c), tolerance, norm);
}

ResidualReport make_report(const std::vector<MatrixBalance>& parts, double tolerance, NormKind norm) {
  std::vector<ComponentNorms> c;
  for (const auto& p : parts) c.push_back(measure(p));
  return finalize(std::move(c), tolerance, norm);
}

}  // namespace sdyred
