#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "sdyred/field.hpp"

namespace sdyred {

enum class NormKind { linf, l2, relative };
NormKind parse_norm_kind(const std::string& s);
const char* to_string(NormKind k);

// A residual component as the two sides of an equation; the residual is lhs - rhs.
template <class F>
struct Balance {
  std::string name;
  F lhs;
  F rhs;
  F residual() const { return lhs - rhs; }
};
using ScalarBalance = Balance<ScalarField>;
using MatrixBalance = Balance<MatrixField>;

struct ComponentNorms {
  std::string name;
  double l2 = 0.0;
  double linf = 0.0;
  double relative = 0.0;  // linf(residual) / max(linf(lhs), linf(rhs), 1e-14)

  double select(NormKind k) const;
};

struct ResidualReport {
  std::vector<ComponentNorms> components;
  double tolerance = 0.0;
  NormKind norm = NormKind::linf;
  bool passed = true;

  double worst() const;  // largest selected norm over components
  const ComponentNorms& component(const std::string& name) const;
  nlohmann::json to_json() const;
};

ComponentNorms measure(const ScalarBalance& b);
ComponentNorms measure(const MatrixBalance& b);
// Norms of a residual field whose constituent terms have the given L-infinity scale.
ComponentNorms measure_residual(const std::string& name, const ScalarField& residual, double term_scale);
ComponentNorms measure_residual(const std::string& name, const MatrixField& residual, double term_scale);

ResidualReport finalize(std::vector<ComponentNorms> comps, double tolerance, NormKind norm);
ResidualReport make_report(const std::vector<ScalarBalance>& parts, double tolerance, NormKind norm = NormKind::linf);
ResidualReport make_report(const std::vector<MatrixBalance>& parts, double tolerance, NormKind norm = NormKind::linf);

inline constexpr double kRelativeFloor = 1e-14;

}  // namespace sdyred
