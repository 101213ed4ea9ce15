#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "sdyred/calculus.hpp"
#include "sdyred/report.hpp"

namespace sdyred {

enum class Equation {
  zakharov,
  nls,
  n_zakharov,
  m1_spin,
  landau_lifshitz,
  mkdv_complex,
  mkdv_real,
  strachan,
  m3q,
  m22q,
  dnls_a,
  dnls_b,
  ishimori,
  ds,
  kp,
  m_x,
  zakharov_general,
  mlxii_plane,
};

// Static description of one reduced equation.
struct EquationInfo {
  Equation kind;
  std::string name;
  int spatial_dims;                             // 1 or 2
  std::vector<std::string> fields;              // required fields (before reconstruction)
  std::vector<std::string> rates;               // fields whose time derivative "<f>_t" is required
  std::map<std::string, std::string> auxiliaries;  // reconstructible field -> defining relation
  std::vector<std::string> nonlocal;            // auxiliaries defined by relations that are not x-derivatives
  std::map<std::string, double> defaults;       // parameters with default values
};

const std::vector<EquationInfo>& equation_table();
const EquationInfo& equation_info(Equation e);
const EquationInfo& equation_info(const std::string& name);
std::vector<std::string> equation_names();

struct EquationId {
  Equation kind = Equation::zakharov;
  std::map<std::string, double> params;

  // Fills defaults; unknown parameter names raise PreconditionError.
  static EquationId make(const std::string& name, const std::map<std::string, double>& overrides = {});
  static EquationId make(Equation e, const std::map<std::string, double>& overrides = {});
  const std::string& name() const { return equation_info(kind).name; }
  double param(const std::string& key) const;
};

// Named fields; time derivatives are stored under "<name>_t".
using FieldMap = std::map<std::string, ScalarField>;

// Field names the equation expects, including rate fields and n-component names.
std::vector<std::string> required_fields(const EquationId& eq);

struct ResidualOptions {
  std::set<std::string> reconstruct;  // auxiliaries to rebuild with antiderivative_x
  double tolerance = 1e-8;
  NormKind norm = NormKind::relative;
  DiffMethod method = DiffMethod::spectral;
};

// Rebuilds the requested auxiliaries from their x-derivative constraints in the
// zero-mean gauge (x-mean of the right-hand side is subtracted). Requests for
// auxiliaries without such a constraint raise PreconditionError.
FieldMap reconstruct_auxiliaries(const EquationId& eq, FieldMap fields, const std::set<std::string>& which,
                                 DiffMethod method = DiffMethod::spectral);

// One balance per equation line; matrix or vector equations contribute one
// balance per independent entry.
std::vector<ScalarBalance> pde_components(const EquationId& eq, const FieldMap& fields,
                                          const ResidualOptions& opt = {});
ResidualReport pde_residual(const EquationId& eq, const FieldMap& fields, const ResidualOptions& opt = {});

}  // namespace sdyred
