#include "sdyred/connection.hpp"

#include <string>

#include "sdyred/errors.hpp"

namespace sdyred {

CoordinateRoles xyt_roles() {
  return {CoordinateRole::on_axis(0, "x"), CoordinateRole::supplied("t"), CoordinateRole::absent("xi3"),
          CoordinateRole::on_axis(1, "y")};
}

void ConnectionSet::validate() const {
  for (int i = 1; i < 4; ++i) {
    require_same_grid(a[0].grid(), a[static_cast<size_t>(i)].grid(), "connection");
    if (a[static_cast<size_t>(i)].dim() != a[0].dim()) throw DimensionError("connection components differ in dimension");
  }
  int supplied = 0;
  for (const auto& r : roles) {
    if (r.kind == RoleKind::supplied) ++supplied;
    if (r.kind == RoleKind::axis && (r.axis < 0 || r.axis >= grid().ndim()))
      throw DimensionError("coordinate role refers to a missing grid axis");
  }
  if (supplied > 1) throw PreconditionError("at most one coordinate may carry supplied derivatives");
  if ((gauge_tags & gauge_a4_zero) && !a[3].is_zero()) throw PreconditionError("gauge tag A4 = 0 violated");
  if ((gauge_tags & gauge_a1a2_zero) && !(a[0].is_zero() && a[1].is_zero()))
    throw PreconditionError("gauge tag A1 = A2 = 0 violated");
  if (gauge_tags & gauge_a3_const) {
    const ComplexMatrix ref = a[2].at(0);
    for (std::size_t p = 1; p < grid().points(); ++p)
      if (a[2].at(p).data() != ref.data()) throw PreconditionError("gauge tag A3 = const violated");
    if (d_supplied[2] && !d_supplied[2]->is_zero()) throw PreconditionError("gauge tag A3 = const violated");
  }
}

MatrixField partial(const MatrixField& value, const std::optional<MatrixField>& supplied, const CoordinateRole& role,
                    DiffMethod method) {
  switch (role.kind) {
    case RoleKind::axis:
      return derivative(value, role.axis, method);
    case RoleKind::supplied:
      if (!supplied) throw PreconditionError("insufficient time data: no derivative supplied along " + role.label);
      return *supplied;
    case RoleKind::absent:
      break;
  }
  return MatrixField(value.grid(), value.dim());
}

LambdaMatrixField partial(const LambdaMatrixField& value, const std::optional<LambdaMatrixField>& supplied,
                          const CoordinateRole& role, DiffMethod method) {
  switch (role.kind) {
    case RoleKind::axis:
      return derivative(value, role.axis, method);
    case RoleKind::supplied:
      if (!supplied) throw PreconditionError("insufficient time data: no derivative supplied along " + role.label);
      return *supplied;
    case RoleKind::absent:
      break;
  }
  return LambdaMatrixField(value.grid(), value.dim());
}

MatrixField partial(const ConnectionSet& c, int comp, int coord, DiffMethod method) {
  if (comp < 0 || comp > 3 || coord < 0 || coord > 3) throw DimensionError("connection index out of range");
  return partial(c.a[static_cast<size_t>(comp)], c.d_supplied[static_cast<size_t>(comp)],
                 c.roles[static_cast<size_t>(coord)], method);
}

ConnectionSet pure_gauge_connection(const MatrixField& g, const CoordinateRoles& roles,
                                    const std::optional<MatrixField>& g_supplied, DiffMethod method) {
  const MatrixField g_inv = pointwise_inverse(g);
  ConnectionSet c;
  c.roles = roles;
  int supplied_index = -1;
  for (int mu = 0; mu < 4; ++mu)
    if (roles[static_cast<size_t>(mu)].kind == RoleKind::supplied) supplied_index = mu;
  if (supplied_index >= 0 && !g_supplied)
    throw PreconditionError("pure gauge connection: supplied coordinate without derivative data");

  std::array<std::optional<MatrixField>, 4> dg;
  for (int mu = 0; mu < 4; ++mu) {
    const CoordinateRole& r = roles[static_cast<size_t>(mu)];
    if (r.kind == RoleKind::axis) dg[static_cast<size_t>(mu)] = derivative(g, r.axis, method);
    if (r.kind == RoleKind::supplied) dg[static_cast<size_t>(mu)] = *g_supplied;
  }
  for (int mu = 0; mu < 4; ++mu) {
    const auto& d = dg[static_cast<size_t>(mu)];
    c.a[static_cast<size_t>(mu)] = d ? *d * g_inv : MatrixField(g.grid(), g.dim());
  }
  if (supplied_index >= 0) {
    // d_s (g_mu g^{-1}) = (d_mu(g_s) - A_mu g_s) g^{-1}
    const MatrixField& gs = *g_supplied;
    for (int mu = 0; mu < 4; ++mu) {
      const CoordinateRole& r = roles[static_cast<size_t>(mu)];
      if (mu == supplied_index) continue;
      if (r.kind == RoleKind::axis) {
        c.d_supplied[static_cast<size_t>(mu)] =
            (derivative(gs, r.axis, method) - c.a[static_cast<size_t>(mu)] * gs) * g_inv;
      } else {
        c.d_supplied[static_cast<size_t>(mu)] = MatrixField(g.grid(), g.dim());
      }
    }
  }
  c.validate();
  return c;
}

}  // namespace sdyred
