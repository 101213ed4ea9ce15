#include "cli/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>

#include "sdyred/curvature.hpp"
#include "sdyred/errors.hpp"
#include "sdyred/gauge_link.hpp"
#include "sdyred/kp_operator.hpp"
#include "sdyred/lax.hpp"
#include "sdyred/nonisospectral.hpp"
#include "sdyred/reduction.hpp"

namespace sdyred::cli {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

using CheckFn = std::function<CheckResult(Rng&)>;

struct Check {
  std::string name;
  CheckFn run;
};

ComponentNorms scalar_component(const std::string& name, double value) {
  return ComponentNorms{name, value, value, value};
}

MatrixField random_matrix_field(const Grid& g, Rng& rng, int dim, double amplitude, int max_mode) {
  MatrixField m(g, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) m.entry(i, j) = random_smooth_field(g, rng, amplitude, false, max_mode);
  return m;
}

nlohmann::json grid_info(const Grid& g) { return {{"sizes", g.sizes()}, {"lengths", g.lengths()}}; }

// ---------------------------------------------------------------- reductions

std::vector<Check> reduction_checks() {
  std::vector<Check> out;
  for (const char* entry : {"zakharov", "m1-spin"}) {
    for (double sign : {1.0, -1.0}) {
      const std::string name = std::string("reductions/") + entry + (sign > 0 ? "[+1]" : "[-1]");
      out.push_back({name, [entry = std::string(entry), sign](Rng& rng) {
                       const Grid g = Grid::plane(64, 64, kTwoPi, kTwoPi);
                       const ReductionLedgerEntry e = ledger_entry(entry, sign);
                       const FieldMap f = random_ledger_fields(e, g, rng);
                       CheckResult r;
                       r.report = reduction_equivalence(e, f);
                       r.info = {{"grid", grid_info(g)}, {"sign", sign}, {"map_rank", e.map_rank()},
                                 {"scalar_terms", e.scalar_terms}};
                       return r;
                     }});
    }
  }
  return out;
}

// ---------------------------------------------------------------------- lax

std::vector<Check> lax_checks() {
  std::vector<Check> out;
  for (const auto& c : lax_cases()) {
    out.push_back({"lax/" + c.name + "/grading", [name = c.name](Rng& rng) {
                     const LaxCase lc = lax_case(name);
                     const Grid g = Grid::plane(64, 64, kTwoPi, kTwoPi);
                     CheckResult r;
                     r.report = lax_grading_check(lc, lc.random_fields(g, rng));
                     r.info = {{"grid", grid_info(g)}, {"equation", lc.equation.name()}, {"terms", lc.term_names}};
                     return r;
                   }});
    out.push_back({"lax/" + c.name + "/extraction", [name = c.name](Rng& rng) {
                     const LaxCase lc = lax_case(name);
                     const Grid g = Grid::plane(64, 64, kTwoPi, kTwoPi);
                     const auto first = extract_grading(lc, lc.random_fields(g, rng));
                     const auto second = extract_grading(lc, lc.random_fields(g, rng));
                     CheckResult r;
                     r.report = finalize({scalar_component("draw1-vs-draw2", grading_distance(first, second)),
                                          scalar_component("draw1-vs-declared", grading_distance(first, lc.declared))},
                                         1e-9, NormKind::linf);
                     r.info = {{"grid", grid_info(g)}, {"draws", 2}};
                     return r;
                   }});
  }
  out.push_back({"lax/kp_operator", [](Rng& rng) {
                   const Grid g = Grid::plane(64, 64, kTwoPi, kTwoPi);
                   std::uniform_real_distribution<double> pick(0.5, 1.5);
                   const double alpha = pick(rng) * (rng() % 2 ? 1.0 : -1.0);
                   const FieldMap f{{"k", random_smooth_field(g, rng, 1.0, true)},
                                    {"m3", random_smooth_field(g, rng, 1.0, true)},
                                    {"k_t", random_smooth_field(g, rng, 1.0, true)}};
                   CheckResult r;
                   r.report = kp_lax_check(f, alpha);
                   r.info = {{"grid", grid_info(g)}, {"alpha", alpha}};
                   return r;
                 }});
  out.push_back({"lax/strachan_restriction", [](Rng& rng) {
                   const Grid g = Grid::plane(32, 32, kTwoPi, kTwoPi);
                   auto field = [&] { return random_smooth_field(g, rng); };
                   const ScalarField q = field(), p = field(), v = field(), qt = field(), pt = field();
                   const bool same = identical(build_m3q_lax(q, p, v, 0.7, 0.0, qt, pt),
                                               build_strachan_lax(q, p, v, 0.7, qt, pt));
                   CheckResult r;
                   r.report = finalize({scalar_component("m3q(d=0)-vs-strachan", same ? 0.0 : 1.0)}, 0.0,
                                       NormKind::linf);
                   r.info = {{"grid", grid_info(g)}, {"c", 0.7}};
                   return r;
                 }});
  return out;
}

// -------------------------------------------------------------------- gauge

std::vector<Check> gauge_checks() {
  std::vector<Check> out;
  for (int draw = 1; draw <= 3; ++draw) {
    out.push_back({"gauge/m22q-strachan/draw" + std::to_string(draw), [](Rng& rng) {
                     const Grid g = Grid::plane(64, 64, kTwoPi, kTwoPi);
                     CheckResult r;
                     r.report = gauge_equivalence_check(random_gauge_fields(g, rng));
                     r.info = {{"grid", grid_info(g)}};
                     return r;
                   }});
  }
  return out;
}

// ----------------------------------------------------------- nonisospectral

LambdaParams draw_lambda_params(Rng& rng, NonisoVariant v) {
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> big(2.0, 3.0);
  LambdaParams p;
  p.n1 = unit(rng);
  p.n3 = unit(rng);
  p.n4 = big(rng);
  if (v == NonisoVariant::four_coordinate) {
    p.m1 = unit(rng);
    p.m3c = unit(rng);
    p.m4 = 0.5 * (1.0 + unit(rng));
    p.n4 += 1.0;  // |n1 xi1 + m1 xi2| <= 2 on the unit window
  }
  return p;
}

nlohmann::json lambda_info(const LambdaParams& p, NonisoVariant v, const Window& w) {
  std::vector<int> n;
  for (int a = 0; a < w.ndim(); ++a) n.push_back(w.size(a));
  return {{"variant", to_string(v)},
          {"window", n},
          {"params", {{"n1", p.n1}, {"n3", p.n3}, {"n4", p.n4}, {"m1", p.m1}, {"m3", p.m3c}, {"m4", p.m4}}}};
}

std::vector<Check> nonisospectral_checks() {
  std::vector<Check> out;
  for (NonisoVariant v : {NonisoVariant::xyt, NonisoVariant::four_coordinate}) {
    for (NonisoDerivative d : {NonisoDerivative::analytic, NonisoDerivative::finite_difference}) {
      const bool analytic = d == NonisoDerivative::analytic;
      const std::string name = std::string("nonisospectral/") + to_string(v) +
                               (analytic ? "/closed_form" : "/finite_difference");
      out.push_back({name, [v, d, analytic](Rng& rng) {
                       const LambdaParams p = draw_lambda_params(rng, v);
                       const int dims = v == NonisoVariant::xyt ? 3 : 4;
                       const int n = analytic ? 9 : (dims == 3 ? 41 : 21);
                       const Window w(std::vector<double>(dims, 0.0), std::vector<double>(dims, 1.0),
                                      std::vector<int>(dims, n));
                       CheckResult r;
                       r.report = nonisospectral_residual(lambda_field(p, w, v), d, analytic ? 1e-12 : 1e-6);
                       r.info = lambda_info(p, v, w);
                       return r;
                     }});
    }
  }
  return out;
}

// ---------------------------------------------------------------- curvature

CoordinateRoles box_roles_with_supplied() {
  return {CoordinateRole::on_axis(0, "xi1"), CoordinateRole::on_axis(1, "xi2"), CoordinateRole::on_axis(2, "xi3"),
          CoordinateRole::supplied("xi4")};
}

std::vector<Check> curvature_checks() {
  std::vector<Check> out;
  out.push_back({"curvature/sdym_flatness", [](Rng& rng) {
                   const Grid g = Grid::box(64, 64, 64, kTwoPi, kTwoPi, kTwoPi);
                   // g = exp(X) exp(xi4 Y) at xi4 = 0, so d g / d xi4 = exp(X) Y.
                   const MatrixField x = random_matrix_field(g, rng, 2, 0.5, 3);
                   const MatrixField y = random_matrix_field(g, rng, 2, 0.5, 3);
                   const MatrixField gauge = pointwise_exp(x);
                   const ConnectionSet c = pure_gauge_connection(gauge, box_roles_with_supplied(), gauge * y);
                   CheckResult r;
                   r.report = sdym_residual(c, 1e-9, NormKind::linf);
                   r.info = {{"grid", grid_info(g)}, {"dim", 2}, {"supplied", "xi4"}};
                   return r;
                 }});
  out.push_back({"curvature/sdym_lax_flatness", [](Rng& rng) {
                   const Grid g = Grid::box(32, 32, 32, kTwoPi, kTwoPi, kTwoPi);
                   const MatrixField x = random_matrix_field(g, rng, 2, 0.2, 2);
                   const MatrixField y = random_matrix_field(g, rng, 2, 0.5, 2);
                   const MatrixField gauge = pointwise_exp(x);
                   const ConnectionSet c = pure_gauge_connection(gauge, box_roles_with_supplied(), gauge * y);
                   CheckResult r;
                   r.report = sdym_lax_residual(build_sdym_lax(c), 1e-9, NormKind::linf);
                   r.info = {{"grid", grid_info(g)}, {"dim", 2}, {"supplied", "xi4"}};
                   return r;
                 }});
  out.push_back({"curvature/mlxx_sdym_matching", [](Rng& rng) {
                   const Grid g = Grid::box(16, 16, 16, kTwoPi, kTwoPi, kTwoPi);
                   ConnectionSet c;
                   c.roles = box_roles_with_supplied();
                   for (auto& a : c.a) a = random_matrix_field(g, rng, 2, 1.0, 2);
                   for (auto& d : c.d_supplied) d = random_matrix_field(g, rng, 2, 1.0, 2);
                   CheckResult r;
                   r.report = mlxx_sdym_matching(c);
                   r.info = {{"grid", grid_info(g)}, {"dim", 2}};
                   return r;
                 }});
  out.push_back({"curvature/mlxii_bogomolny", [](Rng& rng) {
                   const Grid g = Grid::box(16, 16, 16, kTwoPi, kTwoPi, kTwoPi);
                   const CoordinateRoles roles{CoordinateRole::on_axis(0, "xi1"), CoordinateRole::on_axis(1, "xi2"),
                                               CoordinateRole::on_axis(2, "xi3"), CoordinateRole::absent()};
                   const MatrixField a = random_matrix_field(g, rng, 2, 1.0, 2);
                   const MatrixField b = random_matrix_field(g, rng, 2, 1.0, 2);
                   const MatrixField c = random_matrix_field(g, rng, 2, 1.0, 2);
                   const auto plain = mlxii_components(a, b, c, roles);
                   const auto higgs = bogomolny_components(a, b, c, MatrixField(g, 2), roles);
                   std::vector<ComponentNorms> comps;
                   for (std::size_t i = 0; i < plain.size(); ++i)
                     comps.push_back(measure(MatrixBalance{plain[i].name, higgs[i].residual(), plain[i].residual()}));
                   CheckResult r;
                   r.report = finalize(std::move(comps), 0.0, NormKind::linf);
                   r.info = {{"grid", grid_info(g)}, {"dim", 2}, {"psi", "zero"}};
                   return r;
                 }});
  return out;
}

std::vector<Check> checks_of(const std::string& suite) {
  if (suite == "reductions") return reduction_checks();
  if (suite == "lax") return lax_checks();
  if (suite == "gauge") return gauge_checks();
  if (suite == "nonisospectral") return nonisospectral_checks();
  if (suite == "curvature") return curvature_checks();
  std::vector<Check> all;
  for (const auto& s : suite_names()) {
    auto part = checks_of(s);
    all.insert(all.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return all;
}

}  // namespace

std::vector<std::string> suite_names() { return {"reductions", "lax", "gauge", "nonisospectral", "curvature"}; }

bool is_suite(const std::string& name) {
  const auto names = suite_names();
  return name == "all" || std::find(names.begin(), names.end(), name) != names.end();
}

Rng check_rng(std::uint64_t seed, const std::string& check) {
  const std::uint64_t h = fnv1a(check);
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32)};
  return Rng(seq);
}

std::vector<CheckResult> run_suite(const std::string& suite, std::uint64_t seed, std::optional<double> tolerance) {
  if (!is_suite(suite)) throw PreconditionError("unknown suite " + suite);
  auto checks = checks_of(suite);
  std::sort(checks.begin(), checks.end(), [](const Check& a, const Check& b) { return a.name < b.name; });
  std::vector<CheckResult> results;
  for (const auto& c : checks) {
    Rng rng = check_rng(seed, c.name);
    const auto start = std::chrono::steady_clock::now();
    CheckResult r = c.run(rng);
    r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.name = c.name;
    if (tolerance) r.report = finalize(r.report.components, *tolerance, r.report.norm);
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace sdyred::cli
