#include "sdyred/equations.hpp"

#include <functional>

#include "sdyred/errors.hpp"

namespace sdyred {

namespace {

class Ctx {
 public:
  Ctx(const EquationId& eq, const FieldMap& f, DiffMethod m) : eq_(eq), f_(f), m_(m) {}

  const ScalarField& operator()(const std::string& name) const {
    auto it = f_.find(name);
    if (it == f_.end()) throw PreconditionError("equation " + eq_.name() + " needs field '" + name + "'");
    return it->second;
  }
  const ScalarField& t(const std::string& name) const { return (*this)(name + "_t"); }
  ScalarField dx(const ScalarField& f, int order = 1) const { return derivative(f, 0, m_, order); }
  ScalarField dy(const ScalarField& f, int order = 1) const { return derivative(f, 1, m_, order); }
  ScalarField dxy(const ScalarField& f) const { return dy(dx(f)); }
  double p(const std::string& key) const { return eq_.param(key); }
  DiffMethod method() const { return m_; }

 private:
  const EquationId& eq_;
  const FieldMap& f_;
  DiffMethod m_;
};

using Parts = std::vector<ScalarBalance>;

// Right-hand sides of the x-derivative relations defining each auxiliary.
ScalarField aux_rhs(const EquationId& eq, const std::string& aux, const Ctx& c) {
  switch (eq.kind) {
    case Equation::zakharov:
      return (2.0 * c.p("r2")) * c.dy(abs2(c("phi")));
    case Equation::n_zakharov: {
      ScalarField s(c("phi1").grid());
      for (int j = 1; j <= static_cast<int>(c.p("n")); ++j) s += abs2(c("phi" + std::to_string(j)));
      return (2.0 * c.p("r2")) * c.dy(s);
    }
    case Equation::m1_spin: {
      const ScalarField &a = c("s1"), &b = c("s2"), &d = c("s3");
      const ScalarField ax = c.dx(a), bx = c.dx(b), dx = c.dx(d), ay = c.dy(a), by = c.dy(b), dy = c.dy(d);
      return -(a * (bx * dy - dx * by) + b * (dx * ay - ax * dy) + d * (ax * by - bx * ay));
    }
    case Equation::mkdv_complex: {
      const ScalarField& q = c("q");
      if (aux == "v1") return (2.0 * c.p("E")) * c.dy(conj(q) * q);
      return (2.0 * c.p("E")) * (conj(q) * c.dxy(q) - c.dxy(conj(q)) * q);
    }
    case Equation::mkdv_real:
      return (4.0 * c.p("E")) * (c("q") * c.dy(c("q")));
    case Equation::strachan:
      return (c.p("gauge_form") != 0.0 ? c.p("E") : 2.0) * c.dy(c("p") * c("q"));
    case Equation::m3q:
      return 2.0 * c.dy(c("p") * c("q"));
    case Equation::m22q: {
      const ScalarField &q = c("q"), &p = c("p");
      if (aux == "v1") return c.dy(p * q);
      return c.dxy(p) * q - p * c.dxy(q);
    }
    case Equation::kp:
    case Equation::mlxii_plane:
      return c.dy(c("k"));
    case Equation::m_x: {
      const ScalarField k = c("s1") * c.dx(c("s2")) - c("s2") * c.dx(c("s1"));
      return c.dy(k);
    }
    default:
      break;
  }
  throw PreconditionError("no x-derivative relation for " + aux + " in " + eq.name());
}

MatrixField spin_matrix(const ScalarField& s1, const ScalarField& s2, const ScalarField& s3, double r) {
  MatrixField m(s1.grid(), 2);
  m.entry(0, 0) = s3;
  m.entry(1, 1) = -s3;
  m.entry(0, 1) = r * (s1 - I_UNIT * s2);
  m.entry(1, 0) = r * (s1 + I_UNIT * s2);
  return m;
}

void push_matrix(Parts& out, const std::string& name, const MatrixField& lhs, const MatrixField& rhs) {
  const int idx[3][2] = {{0, 0}, {0, 1}, {1, 0}};
  for (const auto& ij : idx)
    out.push_back({name + "[" + std::to_string(ij[0] + 1) + "," + std::to_string(ij[1] + 1) + "]",
                   lhs.entry(ij[0], ij[1]), rhs.entry(ij[0], ij[1])});
}

void require_dims(const EquationId& eq, const FieldMap& f) {
  const int need = equation_info(eq.kind).spatial_dims;
  for (const auto& [name, field] : f) {
    if (field.grid().ndim() < need)
      throw DimensionError("equation " + eq.name() + " needs a " + std::to_string(need) + "-d grid");
    require_same_grid(field.grid(), f.begin()->second.grid(), "equation fields");
  }
}

Parts components(const EquationId& eq, const Ctx& c) {
  Parts out;
  switch (eq.kind) {
    case Equation::zakharov: {
      const ScalarField& phi = c("phi");
      const ScalarField& v = c("v");
      out.push_back({"evolution", I_UNIT * c.t("phi"), c.dxy(phi) + v * phi});
      out.push_back({"constraint", c.dx(v), aux_rhs(eq, "v", c)});
      break;
    }
    case Equation::nls: {
      const ScalarField& phi = c("phi");
      out.push_back({"evolution", I_UNIT * c.t("phi"), c.dx(phi, 2) + (2.0 * c.p("r2")) * (abs2(phi) * phi)});
      break;
    }
    case Equation::n_zakharov: {
      const ScalarField& v = c("v");
      for (int j = 1; j <= static_cast<int>(c.p("n")); ++j) {
        const std::string n = "phi" + std::to_string(j);
        out.push_back({"evolution" + std::to_string(j), I_UNIT * c.t(n), c.dxy(c(n)) + v * c(n)});
      }
      out.push_back({"constraint", c.dx(v), aux_rhs(eq, "v", c)});
      break;
    }
    case Equation::m1_spin: {
      const double r = c.p("r");
      const MatrixField s = spin_matrix(c("s1"), c("s2"), c("s3"), r);
      const MatrixField st = spin_matrix(c.t("s1"), c.t("s2"), c.t("s3"), r);
      const MatrixField w = commutator(s, derivative(s, 1, c.method())) + (2.0 * I_UNIT) * (c("u") * s);
      push_matrix(out, "evolution", I_UNIT * st, 0.5 * derivative(w, 0, c.method()));
      out.push_back({"constraint", c.dx(c("u")), aux_rhs(eq, "u", c)});
      break;
    }
    case Equation::landau_lifshitz: {
      const MatrixField s = spin_matrix(c("s1"), c("s2"), c("s3"), 1.0);
      const MatrixField st = spin_matrix(c.t("s1"), c.t("s2"), c.t("s3"), 1.0);
      push_matrix(out, "evolution", I_UNIT * st, 0.5 * commutator(s, derivative(s, 0, c.method(), 2)));
      break;
    }
    case Equation::mkdv_complex: {
      const ScalarField &q = c("q"), &v1 = c("v1"), &v2 = c("v2");
      out.push_back({"evolution", c.t("q"), -c.dy(c.dx(q, 2)) + c.dx(q * v1) + q * v2});
      out.push_back({"constraint1", c.dx(v1), aux_rhs(eq, "v1", c)});
      out.push_back({"constraint2", c.dx(v2), aux_rhs(eq, "v2", c)});
      break;
    }
    case Equation::mkdv_real: {
      const ScalarField &q = c("q"), &v1 = c("v1");
      out.push_back({"evolution", c.t("q"), -c.dy(c.dx(q, 2)) + c.dx(q * v1)});
      out.push_back({"constraint", c.dx(v1), aux_rhs(eq, "v1", c)});
      break;
    }
    case Equation::strachan: {
      const ScalarField &q = c("q"), &p = c("p"), &v = c("v");
      if (c.p("gauge_form") != 0.0) {
        out.push_back({"evolution_q", I_UNIT * c.t("q"), -c.dxy(q) - I_UNIT * c.dx(v * q)});
        out.push_back({"evolution_p", I_UNIT * c.t("p"), c.dxy(p) - I_UNIT * c.dx(v * p)});
      } else {
        const cplx k = 2.0 * I_UNIT * c.p("c");
        out.push_back({"evolution_q", I_UNIT * c.t("q"), c.dxy(q) - k * c.dx(v * q)});
        out.push_back({"evolution_p", -I_UNIT * c.t("p"), c.dxy(p) + k * c.dx(v * p)});
      }
      out.push_back({"constraint", c.dx(v), aux_rhs(eq, "v", c)});
      break;
    }
    case Equation::m3q: {
      const ScalarField &q = c("q"), &p = c("p"), &v = c("v");
      const cplx k = 2.0 * I_UNIT * c.p("c");
      const double d2 = c.p("d") * c.p("d");
      out.push_back({"evolution_q", I_UNIT * c.t("q"), c.dxy(q) - k * c.dx(v * q) + d2 * (v * q)});
      out.push_back({"evolution_p", -I_UNIT * c.t("p"), c.dxy(p) + k * c.dx(v * p) + d2 * (v * p)});
      out.push_back({"constraint", c.dx(v), aux_rhs(eq, "v", c)});
      break;
    }
    case Equation::m22q: {
      const ScalarField &q = c("q"), &p = c("p"), &v1 = c("v1"), &v2 = c("v2");
      const cplx h = 0.5 * I_UNIT;
      out.push_back({"evolution_q", I_UNIT * c.t("q"),
                     -c.dxy(q) - h * (c.dx(v1 * q) - v2 * q - q * p * c.dy(q))});
      out.push_back({"evolution_p", I_UNIT * c.t("p"),
                     c.dxy(p) - h * (c.dx(v1 * p) + v2 * p - q * p * c.dy(p))});
      out.push_back({"constraint1", c.dx(v1), aux_rhs(eq, "v1", c)});
      out.push_back({"constraint2", c.dx(v2), aux_rhs(eq, "v2", c)});
      break;
    }
    case Equation::dnls_a: {
      const ScalarField &q = c("q"), &p = c("p");
      out.push_back({"evolution_q", I_UNIT * c.t("q"), -c.dx(q, 2) - I_UNIT * c.dx(p * q * q)});
      out.push_back({"evolution_p", I_UNIT * c.t("p"), c.dx(p, 2) - I_UNIT * c.dx(q * p * p)});
      break;
    }
    case Equation::dnls_b: {
      const ScalarField &q = c("q"), &p = c("p");
      out.push_back({"evolution_q", I_UNIT * c.t("q"), -c.dx(q, 2) - I_UNIT * (p * q * c.dx(q))});
      out.push_back({"evolution_p", I_UNIT * c.t("p"), c.dx(p, 2) - I_UNIT * (p * q * c.dx(p))});
      break;
    }
    case Equation::ishimori: {
      const double a2 = c.p("alpha") * c.p("alpha");
      const ScalarField* s[3] = {&c("s1"), &c("s2"), &c("s3")};
      ScalarField sx[3], sy[3], lap[3];
      for (int i = 0; i < 3; ++i) {
        sx[i] = c.dx(*s[i]);
        sy[i] = c.dy(*s[i]);
        lap[i] = c.dx(*s[i], 2) + a2 * c.dy(*s[i], 2);
      }
      const ScalarField& u = c("u");
      const ScalarField ux = c.dx(u), uy = c.dy(u);
      for (int i = 0; i < 3; ++i) {
        const int j = (i + 1) % 3, k = (i + 2) % 3;
        out.push_back({"evolution_" + std::to_string(i + 1), c.t("s" + std::to_string(i + 1)),
                       *s[j] * lap[k] - *s[k] * lap[j] + ux * sy[i] + uy * sx[i]});
      }
      ScalarField triple(u.grid());
      for (int i = 0; i < 3; ++i) {
        const int j = (i + 1) % 3, k = (i + 2) % 3;
        triple += *s[i] * (sx[j] * sy[k] - sx[k] * sy[j]);
      }
      out.push_back({"constraint", c.dx(u, 2) - a2 * c.dy(u, 2), (-2.0 * a2) * triple});
      break;
    }
    case Equation::ds: {
      const double a2 = c.p("alpha") * c.p("alpha");
      const ScalarField &q = c("q"), &p = c("p"), &v = c("v");
      const ScalarField pq = p * q;
      out.push_back({"evolution_q", I_UNIT * c.t("q"), -(c.dx(q, 2) + a2 * c.dy(q, 2) + v * q)});
      out.push_back({"evolution_p", -I_UNIT * c.t("p"), -(c.dx(p, 2) + a2 * c.dy(p, 2) + v * p)});
      out.push_back({"constraint", c.dx(v, 2) - a2 * c.dy(v, 2), -2.0 * (c.dx(pq, 2) + a2 * c.dy(pq, 2))});
      break;
    }
    case Equation::kp: {
      const double a2 = c.p("alpha") * c.p("alpha");
      const ScalarField &k = c("k"), &m3 = c("m3");
      out.push_back({"evolution", c.t("k"), -(6.0 * (k * c.dx(k)) + c.dx(k, 3) + (3.0 * a2) * c.dy(m3))});
      out.push_back({"constraint", c.dx(m3), aux_rhs(eq, "m3", c)});
      break;
    }
    case Equation::m_x: {
      const double a2 = c.p("alpha") * c.p("alpha");
      const ScalarField &s1 = c("s1"), &s2 = c("s2"), &m3 = c("m3");
      const ScalarField k = s1 * c.dx(s2) - s2 * c.dx(s1);
      const ScalarField w3 = -c.dx(k, 2) - 3.0 * (k * k) - (3.0 * a2) * antiderivative_x(c.dy(m3));
      out.push_back({"evolution_1", k * c.t("s1"), w3 * c.dx(s1)});
      out.push_back({"evolution_2", k * c.t("s2"), w3 * c.dx(s2)});
      out.push_back({"constraint", c.dx(m3), c.dy(k)});
      break;
    }
    case Equation::zakharov_general: {
      const double al = c.p("alpha"), a = c.p("a"), b = c.p("b");
      auto m1 = [&](const ScalarField& f) {
        return (al * al) * c.dy(f, 2) + (4.0 * al * (b - a)) * c.dxy(f) + (4.0 * (a * a - 2.0 * a * b - b)) * c.dx(f, 2);
      };
      auto m2 = [&](const ScalarField& f) {
        return (al * al) * c.dy(f, 2) - (2.0 * al * (2.0 * a + 1.0)) * c.dxy(f) + (4.0 * a * (a + 1.0)) * c.dx(f, 2);
      };
      const ScalarField &q = c("q"), &p = c("p"), &v = c("v");
      out.push_back({"evolution_q", I_UNIT * c.t("q"), -(m1(q) + v * q)});
      out.push_back({"evolution_p", I_UNIT * c.t("p"), m1(p) + v * p});
      out.push_back({"constraint", m2(v), -2.0 * m1(p * q)});
      break;
    }
    case Equation::mlxii_plane: {
      const ScalarField &k = c("k"), &m3 = c("m3"), &w3 = c("omega3");
      out.push_back({"compatibility", c.dy(k), c.dx(m3)});
      out.push_back({"evolution_k", c.t("k"), c.dx(w3)});
      out.push_back({"evolution_m3", c.t("m3"), c.dy(w3)});
      break;
    }
  }
  return out;
}

}  // namespace

FieldMap reconstruct_auxiliaries(const EquationId& eq, FieldMap fields, const std::set<std::string>& which,
                                 DiffMethod method) {
  const EquationInfo& info = equation_info(eq.kind);
  for (const auto& aux : which) {
    if (!info.auxiliaries.count(aux)) {
      const bool nonlocal = std::find(info.nonlocal.begin(), info.nonlocal.end(), aux) != info.nonlocal.end();
      throw PreconditionError(nonlocal ? aux + " in " + info.name + " is not defined by an x-derivative relation"
                                       : info.name + " has no reconstructible field " + aux);
    }
  }
  // v2 of m22q and mkdv_complex depends only on the base fields, so order is irrelevant.
  for (const auto& aux : which) {
    const Ctx c(eq, fields, method);
    ScalarField g = antiderivative_x(aux_rhs(eq, aux, c), MeanPolicy::subtract);
    if (eq.kind == Equation::mlxii_plane && fields.count("k_t"))
      fields["m3_t"] = antiderivative_x(derivative(fields.at("k_t"), 1, method), MeanPolicy::subtract);
    fields[aux] = std::move(g);
  }
  return fields;
}

std::vector<ScalarBalance> pde_components(const EquationId& eq, const FieldMap& fields, const ResidualOptions& opt) {
  if (fields.empty()) throw PreconditionError("no fields supplied for " + eq.name());
  const FieldMap all = opt.reconstruct.empty() ? fields : reconstruct_auxiliaries(eq, fields, opt.reconstruct, opt.method);
  for (const auto& name : required_fields(eq))
    if (!all.count(name)) throw PreconditionError("equation " + eq.name() + " needs field '" + name + "'");
  require_dims(eq, all);
  return components(eq, Ctx(eq, all, opt.method));
}

ResidualReport pde_residual(const EquationId& eq, const FieldMap& fields, const ResidualOptions& opt) {
  return make_report(pde_components(eq, fields, opt), opt.tolerance, opt.norm);
}

}  // namespace sdyred
