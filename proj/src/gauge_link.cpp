#include "sdyred/gauge_link.hpp"

#include <algorithm>

#include "sdyred/errors.hpp"

namespace sdyred {

namespace {

const ScalarField& need(const FieldMap& f, const std::string& name) {
  auto it = f.find(name);
  if (it == f.end()) throw PreconditionError("gauge link needs field '" + name + "'");
  return it->second;
}

ScalarField phase(const ScalarField& theta, double sign) { return exp((0.5 * sign * I_UNIT) * theta); }

}  // namespace

GaugedFields gauge_transform_fields(const ScalarField& q, const ScalarField& p, MeanPolicy policy) {
  require_same_grid(q.grid(), p.grid(), "gauge transform");
  GaugedFields out;
  out.theta = antiderivative_x(p * q, policy);
  out.q = q * phase(out.theta, -1.0);
  out.p = p * phase(out.theta, 1.0);
  return out;
}

MatrixField gauge_factor(const ScalarField& q, MeanPolicy policy) {
  const ScalarField w = antiderivative_x(abs2(q), policy);
  MatrixField f(q.grid(), 2);
  f.entry(0, 0) = exp((-0.25 * I_UNIT) * w);
  f.entry(1, 1) = exp((0.25 * I_UNIT) * w);
  return f;
}

FieldMap strachan_image(const FieldMap& f, DiffMethod method) {
  const ScalarField &q = need(f, "q"), &p = need(f, "p"), &v1 = need(f, "v1"), &v2 = need(f, "v2");
  const ScalarField &q_t = need(f, "q_t"), &p_t = need(f, "p_t");
  const GaugedFields gf = gauge_transform_fields(q, p);
  const ScalarField pq = p * q;
  const ScalarField theta_t =
      antiderivative_x(p_t * q + p * q_t) + mean_x(-0.5 * (pq * v1) - I_UNIT * v2);
  FieldMap out;
  out["q"] = gf.q;
  out["p"] = gf.p;
  out["v"] = derivative(gf.theta, 1, method);
  out["q_t"] = (q_t - (0.5 * I_UNIT) * (theta_t * q)) * phase(gf.theta, -1.0);
  out["p_t"] = (p_t + (0.5 * I_UNIT) * (theta_t * p)) * phase(gf.theta, 1.0);
  return out;
}

ResidualReport gauge_equivalence_check(const FieldMap& f, double tolerance, DiffMethod method) {
  ResidualOptions opt;
  opt.method = method;
  const auto src = pde_components(EquationId::make("m22q"), f, opt);
  const FieldMap image = strachan_image(f, method);
  const auto dst = pde_components(EquationId::make("strachan", {{"gauge_form", 1.0}}), image, opt);

  const ScalarField &q = need(f, "q"), &p = need(f, "p");
  const ScalarField theta = antiderivative_x(p * q);
  const ScalarField rq = src.at(0).residual(), rp = src.at(1).residual();
  const ScalarField r1 = src.at(2).residual(), r2 = src.at(3).residual();
  const ScalarField combo = p * rq + q * rp - r2 - (0.5 * I_UNIT) * ((p * q) * r1);
  const ScalarField corr = antiderivative_x(combo, MeanPolicy::subtract);

  const ScalarField lhs_q = rq * phase(theta, -1.0) - (0.5 * I_UNIT) * (image.at("q") * corr);
  const ScalarField lhs_p = rp * phase(theta, 1.0) + (0.5 * I_UNIT) * (image.at("p") * corr);
  const ScalarField rhs_q = dst.at(0).residual(), rhs_p = dst.at(1).residual();

  auto scale = [](const ScalarBalance& a, const ScalarBalance& b) {
    return std::max({lp_norms(a.lhs).linf, lp_norms(a.rhs).linf, lp_norms(b.lhs).linf, lp_norms(b.rhs).linf});
  };
  std::vector<ComponentNorms> comps;
  comps.push_back(measure_residual("evolution_q", lhs_q - rhs_q, scale(src.at(0), dst.at(0))));
  comps.push_back(measure_residual("evolution_p", lhs_p - rhs_p, scale(src.at(1), dst.at(1))));
  comps.push_back(measure(ScalarBalance{"product", image.at("q") * image.at("p"), q * p}));
  return finalize(std::move(comps), tolerance, NormKind::relative);
}

FieldMap random_gauge_fields(const Grid& g, Rng& rng) {
  const ScalarField gq = random_smooth_field(g, rng, 0.5, false, 4);
  const ScalarField h = random_smooth_field(g, rng, 0.5, false, 4);
  const ScalarField gq_t = random_smooth_field(g, rng, 0.5, false, 4);
  const ScalarField h_t = random_smooth_field(g, rng, 0.5, false, 4);
  const ScalarField hx = derivative(h, 0), hx_t = derivative(h_t, 0);
  FieldMap f;
  f["q"] = exp(gq);
  f["p"] = hx * exp(-gq);
  f["q_t"] = gq_t * f["q"];
  f["p_t"] = (hx_t - hx * gq_t) * exp(-gq);
  return reconstruct_auxiliaries(EquationId::make("m22q"), f, {"v1", "v2"}, DiffMethod::spectral);
}

}  // namespace sdyred
