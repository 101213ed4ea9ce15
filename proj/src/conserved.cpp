#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "sdyred/errors.hpp"
#include "sdyred/snapshot.hpp"
#include "sdyred/solvers.hpp"

namespace sdyred {

std::map<std::string, double> conserved_monitor(const EquationId& eq, const FieldMap& fields) {
  auto get = [&](const char* name) -> const ScalarField& {
    auto it = fields.find(name);
    if (it == fields.end()) throw PreconditionError(std::string("conserved_monitor needs field ") + name);
    return it->second;
  };
  std::map<std::string, double> out;
  switch (eq.kind) {
    case Equation::nls:
    case Equation::zakharov:
      out["mass"] = integrate(abs2(get("phi"))).real();
      break;
    case Equation::kp:
      out["momentum"] = integrate(get("k")).real();
      out["energy"] = integrate(abs2(get("k"))).real();
      break;
    case Equation::m1_spin:
      out["spin1"] = integrate(get("s1")).real();
      out["spin2"] = integrate(get("s2")).real();
      out["spin3"] = integrate(get("s3")).real();
      break;
    default:
      break;
  }
  return out;
}

ScalarField central_difference5(const ScalarField& fm2, const ScalarField& fm1, const ScalarField& fp1,
                                const ScalarField& fp2, double h) {
  return (1.0 / (12.0 * h)) * (fm2 - 8.0 * fm1 + 8.0 * fp1 - fp2);
}

ResidualReport closure_residual(const TimeSeriesOutput& out, double tolerance, DiffMethod method) {
  const auto& snaps = out.snapshots;
  if (snaps.size() < 5) throw PreconditionError("closure check needs at least five snapshots");
  std::vector<std::string> rates;
  for (const auto& name : required_fields(out.equation))
    if (name.size() > 2 && name.compare(name.size() - 2, 2, "_t") == 0) rates.push_back(name.substr(0, name.size() - 2));

  ResidualOptions opt;
  opt.method = method;
  std::vector<ComponentNorms> worst;
  for (std::size_t i = 2; i + 2 < snaps.size(); ++i) {
    FieldMap f = snaps[i].fields;
    for (const auto& r : rates)
      f[r + "_t"] = central_difference5(snaps[i - 2].fields.at(r), snaps[i - 1].fields.at(r),
                                        snaps[i + 1].fields.at(r), snaps[i + 2].fields.at(r), out.record_interval);
    const auto parts = pde_components(out.equation, f, opt);
    double system = 0.0;
    for (const auto& b : parts) system = std::max({system, lp_norms(b.lhs).linf, lp_norms(b.rhs).linf});
    for (std::size_t c = 0; c < parts.size(); ++c) {
      const double own = std::max(lp_norms(parts[c].lhs).linf, lp_norms(parts[c].rhs).linf);
      const ComponentNorms n =
          measure_residual(parts[c].name, parts[c].residual(), std::max(own, kSystemScaleFraction * system));
      if (worst.size() <= c) {
        worst.push_back(n);
      } else {
        worst[c].l2 = std::max(worst[c].l2, n.l2);
        worst[c].linf = std::max(worst[c].linf, n.linf);
        worst[c].relative = std::max(worst[c].relative, n.relative);
      }
    }
  }
  return finalize(std::move(worst), tolerance, NormKind::relative);
}

void write_time_series(const std::string& dir, const TimeSeriesOutput& out) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create directory " + dir + ": " + ec.message());
  for (std::size_t i = 0; i < out.snapshots.size(); ++i) {
    const Frame& fr = out.snapshots[i];
    for (const auto& [name, field] : fr.fields) {
      char idx[16];
      std::snprintf(idx, sizeof idx, "%05zu", i);
      write_snapshot(dir + "/" + name + "_" + idx + ".snap",
                     Snapshot{name, fr.t, default_axis_labels(field.grid().ndim()), field});
    }
  }
  std::ofstream csv(dir + "/conserved.csv");
  if (!csv) throw IoError("cannot write " + dir + "/conserved.csv");
  csv.precision(17);
  csv << "t,name,value\n";
  for (const auto& s : out.conserved)
    for (const auto& [name, value] : s.values) csv << s.t << ',' << name << ',' << value << '\n';
  if (!csv) throw IoError("write failed for " + dir + "/conserved.csv");
}

}  // namespace sdyred
