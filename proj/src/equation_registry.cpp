#include <algorithm>

#include "sdyred/equations.hpp"
#include "sdyred/errors.hpp"

namespace sdyred {

const std::vector<EquationInfo>& equation_table() {
  static const std::vector<EquationInfo> table = {
      {Equation::zakharov, "zakharov", 2, {"phi", "v"}, {"phi"}, {{"v", "v_x = 2 r2 (|phi|^2)_y"}}, {}, {{"r2", 1.0}}},
      {Equation::nls, "nls", 1, {"phi"}, {"phi"}, {}, {}, {{"r2", 1.0}}},
      {Equation::n_zakharov, "n_zakharov", 2, {"phi#", "v"}, {"phi#"},
       {{"v", "v_x = 2 r2 (sum_k |phi_k|^2)_y"}}, {}, {{"n", 2.0}, {"r2", 1.0}}},
      {Equation::m1_spin, "m1_spin", 2, {"s1", "s2", "s3", "u"}, {"s1", "s2", "s3"},
       {{"u", "u_x = -s . (s_x x s_y)"}}, {}, {{"r", 1.0}}},
      {Equation::landau_lifshitz, "landau_lifshitz", 1, {"s1", "s2", "s3"}, {"s1", "s2", "s3"}, {}, {}, {}},
      {Equation::mkdv_complex, "mkdv_complex", 2, {"q", "v1", "v2"}, {"q"},
       {{"v1", "v1_x = 2E (conj(q) q)_y"}, {"v2", "v2_x = 2E (conj(q) q_xy - conj(q)_xy q)"}}, {}, {{"E", 1.0}}},
      {Equation::mkdv_real, "mkdv_real", 2, {"q", "v1"}, {"q"}, {{"v1", "v1_x = 4E q q_y"}}, {}, {{"E", 1.0}}},
      {Equation::strachan, "strachan", 2, {"q", "p", "v"}, {"q", "p"},
       {{"v", "v_x = 2 (pq)_y, or E (pq)_y in gauge form"}}, {}, {{"c", 1.0}, {"E", 1.0}, {"gauge_form", 0.0}}},
      {Equation::m3q, "m3q", 2, {"q", "p", "v"}, {"q", "p"}, {{"v", "v_x = 2 (pq)_y"}}, {}, {{"c", 1.0}, {"d", 1.0}}},
      {Equation::m22q, "m22q", 2, {"q", "p", "v1", "v2"}, {"q", "p"},
       {{"v1", "v1_x = (pq)_y"}, {"v2", "v2_x = p_yx q - p q_yx"}}, {}, {}},
      {Equation::dnls_a, "dnls_a", 1, {"q", "p"}, {"q", "p"}, {}, {}, {}},
      {Equation::dnls_b, "dnls_b", 1, {"q", "p"}, {"q", "p"}, {}, {}, {}},
      {Equation::ishimori, "ishimori", 2, {"s1", "s2", "s3", "u"}, {"s1", "s2", "s3"}, {}, {"u"}, {{"alpha", 1.0}}},
      {Equation::ds, "ds", 2, {"q", "p", "v"}, {"q", "p"}, {}, {"v"}, {{"alpha", 1.0}}},
      {Equation::kp, "kp", 2, {"k", "m3"}, {"k"}, {{"m3", "m3_x = k_y"}}, {}, {{"alpha", 1.0}}},
      {Equation::m_x, "m_x", 2, {"s1", "s2", "m3"}, {"s1", "s2"}, {{"m3", "m3_x = k_y"}}, {}, {{"alpha", 1.0}}},
      {Equation::zakharov_general, "zakharov_general", 2, {"q", "p", "v"}, {"q", "p"}, {}, {"v"},
       {{"alpha", 1.0}, {"a", 0.5}, {"b", 0.0}}},
      {Equation::mlxii_plane, "mlxii_plane", 2, {"k", "m3", "omega3"}, {"k", "m3"}, {{"m3", "m3_x = k_y"}}, {}, {}},
  };
  return table;
}

const EquationInfo& equation_info(Equation e) {
  for (const auto& info : equation_table())
    if (info.kind == e) return info;
  throw PreconditionError("unregistered equation");
}

const EquationInfo& equation_info(const std::string& name) {
  for (const auto& info : equation_table())
    if (info.name == name) return info;
  throw PreconditionError("unknown equation: " + name);
}

std::vector<std::string> equation_names() {
  std::vector<std::string> out;
  for (const auto& info : equation_table()) out.push_back(info.name);
  return out;
}

EquationId EquationId::make(Equation e, const std::map<std::string, double>& overrides) {
  const EquationInfo& info = equation_info(e);
  EquationId id;
  id.kind = e;
  id.params = info.defaults;
  for (const auto& [k, v] : overrides) {
    if (!info.defaults.count(k)) throw PreconditionError("equation " + info.name + " has no parameter " + k);
    id.params[k] = v;
  }
  if (id.params.count("r2") && id.params["r2"] != 1.0 && id.params["r2"] != -1.0)
    throw PreconditionError("r2 must be +1 or -1");
  if (id.params.count("r") && id.params["r"] != 1.0 && id.params["r"] != -1.0)
    throw PreconditionError("r must be +1 or -1");
  if (e == Equation::n_zakharov) {
    const double n = id.params["n"];
    if (n < 1 || n != static_cast<int>(n)) throw PreconditionError("n must be a positive integer");
  }
  return id;
}

EquationId EquationId::make(const std::string& name, const std::map<std::string, double>& overrides) {
  return make(equation_info(name).kind, overrides);
}

double EquationId::param(const std::string& key) const {
  auto it = params.find(key);
  if (it == params.end()) throw PreconditionError("missing parameter " + key + " for " + name());
  return it->second;
}

std::vector<std::string> required_fields(const EquationId& eq) {
  const EquationInfo& info = equation_info(eq.kind);
  const int n = eq.kind == Equation::n_zakharov ? static_cast<int>(eq.param("n")) : 1;
  auto expand = [&](const std::string& f, const std::string& suffix, std::vector<std::string>& out) {
    if (f.back() == '#') {
      for (int j = 1; j <= n; ++j) out.push_back(f.substr(0, f.size() - 1) + std::to_string(j) + suffix);
    } else {
      out.push_back(f + suffix);
    }
  };
  std::vector<std::string> out;
  for (const auto& f : info.fields) expand(f, "", out);
  for (const auto& f : info.rates) expand(f, "_t", out);
  return out;
}

}  // namespace sdyred
