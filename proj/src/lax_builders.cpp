#include <cmath>

#include "sdyred/errors.hpp"
#include "sdyred/lax.hpp"

namespace sdyred {

namespace {

MatrixField off_diagonal(const ScalarField& upper, const ScalarField& lower) {
  MatrixField g(upper.grid(), 2);
  g.entry(0, 1) = upper;
  g.entry(1, 0) = lower;
  return g;
}

MatrixField sigma3(const Grid& g) { return MatrixField::constant(g, pauli(3)); }

MatrixField pauli_vector(const ScalarField& s1, const ScalarField& s2, const ScalarField& s3) {
  MatrixField m(s1.grid(), 2);
  m.entry(0, 0) = s3;
  m.entry(1, 1) = -s3;
  m.entry(0, 1) = s1 - I_UNIT * s2;
  m.entry(1, 0) = s1 + I_UNIT * s2;
  return m;
}

LambdaMatrixField poly(std::vector<MatrixField> c) { return LambdaMatrixField(std::move(c)); }

}  // namespace

LaxPair build_ze_lax(const ScalarField& phi, const ScalarField& v, double r2, const std::optional<ScalarField>& phi_t) {
  require_same_grid(phi.grid(), v.grid(), "ze lax pair");
  if (r2 != 1.0 && r2 != -1.0) throw PreconditionError("r2 must be +1 or -1");
  const Grid& g = phi.grid();
  const MatrixField s3 = sigma3(g);
  const MatrixField gm = off_diagonal(phi, (-r2) * conj(phi));
  LaxPair p;
  p.u_poly = poly({gm, (0.5 * I_UNIT) * s3});
  p.v_poly = poly({(-0.5 * I_UNIT) * (v * s3) + I_UNIT * (derivative(gm, 1) * s3)});
  p.y_coeff = {0.0, 1.0};
  if (phi_t) p.u_poly_t = poly({off_diagonal(*phi_t, (-r2) * conj(*phi_t)), MatrixField(g, 2)});
  return p;
}

LaxPair build_mi_lax(const SpinField& s, const ScalarField& u, const std::optional<SpinRates>& s_t) {
  s.require_unit();
  const Grid& g = s.grid();
  const MatrixField sm = pauli_vector(s.s1, s.s2, s.s3);
  const MatrixField w = commutator(sm, derivative(sm, 1)) + (2.0 * I_UNIT) * (u * sm);
  LaxPair p;
  p.u_poly = poly({MatrixField(g, 2), (0.5 * I_UNIT) * sm});
  p.v_poly = poly({MatrixField(g, 2), 0.25 * w});
  p.y_coeff = {0.0, 1.0};
  if (s_t) p.u_poly_t = poly({MatrixField(g, 2), (0.5 * I_UNIT) * pauli_vector(s_t->s1, s_t->s2, s_t->s3)});
  return p;
}

LaxPair build_m3q_lax(const ScalarField& q, const ScalarField& p, const ScalarField& v, double c, double d,
                      const std::optional<ScalarField>& q_t, const std::optional<ScalarField>& p_t) {
  require_same_grid(q.grid(), p.grid(), "m3q lax pair");
  const Grid& g = q.grid();
  const MatrixField s3 = sigma3(g);
  const MatrixField gm = off_diagonal(q, p);
  const MatrixField s3gy = s3 * derivative(gm, 1);
  const MatrixField vs3 = v * s3;
  const MatrixField vg = v * gm;
  LaxPair out;
  out.u_poly = poly({I_UNIT * (d * gm), I_UNIT * (d * s3 + 2.0 * c * gm), I_UNIT * (c * s3)});
  out.v_poly = poly({(-0.5 * I_UNIT * d * d) * vs3 + d * s3gy - (2.0 * I_UNIT * c * d) * vg,
                     (-2.0 * I_UNIT * c * d) * vs3 + (2.0 * c) * s3gy - (4.0 * I_UNIT * c * c) * vg,
                     (-2.0 * I_UNIT * c * c) * vs3});
  out.y_coeff = {0.0, 2.0 * d, 2.0 * c};
  if (q_t && p_t) {
    const MatrixField gt = off_diagonal(*q_t, *p_t);
    out.u_poly_t = poly({I_UNIT * (d * gt), I_UNIT * (2.0 * c * gt), MatrixField(g, 2)});
  }
  return out;
}

LaxPair build_strachan_lax(const ScalarField& q, const ScalarField& p, const ScalarField& v, double c,
                           const std::optional<ScalarField>& q_t, const std::optional<ScalarField>& p_t) {
  require_same_grid(q.grid(), p.grid(), "strachan lax pair");
  const Grid& g = q.grid();
  const MatrixField s3 = sigma3(g);
  const MatrixField gm = off_diagonal(q, p);
  const MatrixField zero(g, 2);
  LaxPair out;
  out.u_poly = poly({zero, I_UNIT * (2.0 * c * gm), I_UNIT * (c * s3)});
  out.v_poly = poly({zero, (2.0 * c) * (s3 * derivative(gm, 1)) - (4.0 * I_UNIT * c * c) * (v * gm),
                     (-2.0 * I_UNIT * c * c) * (v * s3)});
  out.y_coeff = {0.0, 0.0, 2.0 * c};
  if (q_t && p_t) out.u_poly_t = poly({zero, I_UNIT * (2.0 * c * off_diagonal(*q_t, *p_t)), zero});
  return out;
}

LaxPair build_m22q_lax(const ScalarField& q, const ScalarField& p, const ScalarField& v1, const ScalarField& v2,
                       const std::optional<ScalarField>& q_t, const std::optional<ScalarField>& p_t) {
  require_same_grid(q.grid(), p.grid(), "m22q lax pair");
  const Grid& g = q.grid();
  const MatrixField s3 = sigma3(g);
  const MatrixField qm = off_diagonal(q, -p);
  const ScalarField pq = p * q;
  LaxPair out;
  out.u_poly = poly({(0.25 * I_UNIT) * (pq * s3), qm, (-I_UNIT) * s3});
  out.v_poly = poly({(0.25 * v2 - (0.125 * I_UNIT) * (pq * v1)) * s3,
                     I_UNIT * (s3 * derivative(qm, 1)) - 0.5 * (v1 * qm), (0.5 * I_UNIT) * (v1 * s3)});
  out.y_coeff = {0.0, 0.0, 2.0};
  if (q_t && p_t)
    out.u_poly_t = poly({(0.25 * I_UNIT) * ((*p_t * q + p * *q_t) * s3), off_diagonal(*q_t, -*p_t), MatrixField(g, 2)});
  return out;
}

// ---------------------------------------------------------------------------

namespace {

const ScalarField& need(const FieldMap& f, const std::string& name) {
  auto it = f.find(name);
  if (it == f.end()) throw PreconditionError("lax pair needs field '" + name + "'");
  return it->second;
}

ScalarField part(const std::vector<ScalarBalance>& parts, const std::string& name) {
  for (const auto& b : parts)
    if (b.name == name) return b.residual();
  throw PreconditionError("missing residual component " + name);
}

SpinField smooth_spin(const Grid& g, Rng& rng, ScalarField* theta_out = nullptr, ScalarField* psi_out = nullptr) {
  const ScalarField theta = random_smooth_field(g, rng, 1.0, true, 4) + cplx(0.9);
  const ScalarField psi = random_smooth_field(g, rng, 2.0, true, 4);
  if (theta_out) *theta_out = theta;
  if (psi_out) *psi_out = psi;
  return SpinField::from_angles(theta, psi);
}

LaxCase ze_case(double r2) {
  LaxCase c;
  c.name = "ze";
  c.equation = EquationId::make("zakharov", {{"r2", r2}});
  c.term_names = {"evolution", "conj(evolution)", "constraint"};
  const cplx i = I_UNIT;
  c.declared = {{0, 0, 0, {0.0, 0.0, 0.5 * i}},
                {0, 0, 1, {-i, 0.0, 0.0}},
                {0, 1, 0, {0.0, -i * r2, 0.0}},
                {0, 1, 1, {0.0, 0.0, -0.5 * i}}};
  c.build = [r2](const FieldMap& f) { return build_ze_lax(need(f, "phi"), need(f, "v"), r2, need(f, "phi_t")); };
  c.terms = [](const FieldMap&, const std::vector<ScalarBalance>& parts) {
    const ScalarField ra = part(parts, "evolution");
    return std::vector<ScalarField>{ra, conj(ra), part(parts, "constraint")};
  };
  c.random_fields = [](const Grid& g, Rng& rng) {
    FieldMap f;
    f["phi"] = random_smooth_field(g, rng);
    f["v"] = random_smooth_field(g, rng, 1.0, true);
    f["phi_t"] = random_smooth_field(g, rng);
    return f;
  };
  return c;
}

LaxCase mi_case() {
  LaxCase c;
  c.name = "mi";
  c.equation = EquationId::make("m1_spin");
  c.term_names = {"evolution[1,1]", "evolution[1,2]", "evolution[2,1]"};
  c.declared = {{1, 0, 0, {0.5, 0.0, 0.0}},
                {1, 0, 1, {0.0, 0.5, 0.0}},
                {1, 1, 0, {0.0, 0.0, 0.5}},
                {1, 1, 1, {-0.5, 0.0, 0.0}}};
  c.build = [](const FieldMap& f) {
    const SpinField s{need(f, "s1"), need(f, "s2"), need(f, "s3")};
    return build_mi_lax(s, need(f, "u"), SpinRates{need(f, "s1_t"), need(f, "s2_t"), need(f, "s3_t")});
  };
  c.terms = [](const FieldMap&, const std::vector<ScalarBalance>& parts) {
    return std::vector<ScalarField>{part(parts, "evolution[1,1]"), part(parts, "evolution[1,2]"),
                                    part(parts, "evolution[2,1]")};
  };
  c.random_fields = [](const Grid& g, Rng& rng) {
    ScalarField theta, psi;
    const SpinField s = smooth_spin(g, rng, &theta, &psi);
    const ScalarField tht = random_smooth_field(g, rng, 1.0, true, 4);
    const ScalarField pst = random_smooth_field(g, rng, 1.0, true, 4);
    FieldMap f{{"s1", s.s1}, {"s2", s.s2}, {"s3", s.s3}, {"u", random_smooth_field(g, rng, 1.0, true)}};
    ScalarField a(g), b(g), d(g);
    for (std::size_t p = 0; p < g.points(); ++p) {
      const double th = theta[p].real(), ps = psi[p].real();
      a[p] = std::cos(th) * std::cos(ps) * tht[p] - std::sin(th) * std::sin(ps) * pst[p];
      b[p] = std::cos(th) * std::sin(ps) * tht[p] + std::sin(th) * std::cos(ps) * pst[p];
      d[p] = -std::sin(th) * tht[p];
    }
    f["s1_t"] = a;
    f["s2_t"] = b;
    f["s3_t"] = d;
    return f;
  };
  return c;
}

FieldMap random_qp(const Grid& g, Rng& rng, const std::vector<std::string>& extra) {
  FieldMap f;
  for (const char* n : {"q", "p", "q_t", "p_t"}) f[n] = random_smooth_field(g, rng);
  for (const auto& n : extra) f[n] = random_smooth_field(g, rng);
  return f;
}

LaxCase m3q_case(double cc, double d) {
  LaxCase c;
  c.name = "m3q";
  c.equation = EquationId::make("m3q", {{"c", cc}, {"d", d}});
  c.term_names = {"evolution_q", "evolution_p", "constraint"};
  const cplx i = I_UNIT;
  c.declared = {{0, 0, 0, {0.0, 0.0, 0.5 * i * d * d}},  {0, 0, 1, {d, 0.0, 0.0}},
                {0, 1, 0, {0.0, -d, 0.0}},                {0, 1, 1, {0.0, 0.0, -0.5 * i * d * d}},
                {1, 0, 0, {0.0, 0.0, 2.0 * i * cc * d}},  {1, 0, 1, {2.0 * cc, 0.0, 0.0}},
                {1, 1, 0, {0.0, -2.0 * cc, 0.0}},         {1, 1, 1, {0.0, 0.0, -2.0 * i * cc * d}},
                {2, 0, 0, {0.0, 0.0, 2.0 * i * cc * cc}}, {2, 1, 1, {0.0, 0.0, -2.0 * i * cc * cc}}};
  c.build = [cc, d](const FieldMap& f) {
    return build_m3q_lax(need(f, "q"), need(f, "p"), need(f, "v"), cc, d, need(f, "q_t"), need(f, "p_t"));
  };
  c.terms = [](const FieldMap&, const std::vector<ScalarBalance>& parts) {
    return std::vector<ScalarField>{part(parts, "evolution_q"), part(parts, "evolution_p"), part(parts, "constraint")};
  };
  c.random_fields = [](const Grid& g, Rng& rng) { return random_qp(g, rng, {"v"}); };
  return c;
}

LaxCase m22q_case() {
  LaxCase c;
  c.name = "m22q";
  c.equation = EquationId::make("m22q");
  c.term_names = {"Rq", "Rp", "R1", "R2", "p*Rq", "q*Rp", "pq*R1"};
  const cplx i = I_UNIT;
  c.declared = {{0, 0, 0, {0.0, 0.0, 0.0, -0.25, 0.25, 0.25, -0.125 * i}},
                {0, 1, 1, {0.0, 0.0, 0.0, 0.25, -0.25, -0.25, 0.125 * i}},
                {1, 0, 1, {-i, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0}},
                {1, 1, 0, {0.0, i, 0.0, 0.0, 0.0, 0.0, 0.0}},
                {2, 0, 0, {0.0, 0.0, -0.5 * i, 0.0, 0.0, 0.0, 0.0}},
                {2, 1, 1, {0.0, 0.0, 0.5 * i, 0.0, 0.0, 0.0, 0.0}}};
  c.build = [](const FieldMap& f) {
    return build_m22q_lax(need(f, "q"), need(f, "p"), need(f, "v1"), need(f, "v2"), need(f, "q_t"), need(f, "p_t"));
  };
  c.terms = [](const FieldMap& f, const std::vector<ScalarBalance>& parts) {
    const ScalarField rq = part(parts, "evolution_q"), rp = part(parts, "evolution_p");
    const ScalarField r1 = part(parts, "constraint1"), r2 = part(parts, "constraint2");
    const ScalarField &q = need(f, "q"), &p = need(f, "p");
    return std::vector<ScalarField>{rq, rp, r1, r2, p * rq, q * rp, (p * q) * r1};
  };
  c.random_fields = [](const Grid& g, Rng& rng) { return random_qp(g, rng, {"v1", "v2"}); };
  return c;
}

}  // namespace

std::vector<LaxCase> lax_cases() { return {ze_case(1.0), mi_case(), m3q_case(0.7, 0.4), m22q_case()}; }

LaxCase lax_case(const std::string& name) {
  if (name == "ze_so21") return ze_case(-1.0);
  for (auto& c : lax_cases())
    if (c.name == name) return c;
  throw PreconditionError("unknown lax case: " + name);
}

}  // namespace sdyred
