#pragma once

#include <array>
#include <optional>
#include <string>

#include "sdyred/calculus.hpp"
#include "sdyred/field.hpp"
#include "sdyred/lambda_field.hpp"

namespace sdyred {

// How a coordinate xi_1..xi_4 is realized on the sampled data.
//   axis     : a grid axis, differentiated numerically
//   supplied : derivatives are supplied alongside the fields (typically time)
//   absent   : nothing depends on it, derivatives vanish
enum class RoleKind { axis, supplied, absent };

struct CoordinateRole {
  RoleKind kind = RoleKind::absent;
  int axis = -1;
  std::string label;

  static CoordinateRole on_axis(int axis, std::string label) { return {RoleKind::axis, axis, std::move(label)}; }
  static CoordinateRole supplied(std::string label) { return {RoleKind::supplied, -1, std::move(label)}; }
  static CoordinateRole absent(std::string label = "") { return {RoleKind::absent, -1, std::move(label)}; }
};

using CoordinateRoles = std::array<CoordinateRole, 4>;  // xi_1 .. xi_4

// Roles used by the (x, y, t) reductions: xi_1 = x, xi_2 = t, xi_4 = y, xi_3 absent.
CoordinateRoles xyt_roles();

// Gauge conditions applied to a connection.
enum GaugeTag : unsigned {
  gauge_none = 0,
  gauge_a4_zero = 1u << 0,     // A_4 = 0
  gauge_a3_const = 1u << 1,    // A_3 constant
  gauge_a1a2_zero = 1u << 2,   // A_1 = A_2 = 0
};

// A value together with its derivative along the supplied coordinate, if any.
template <class F>
struct Potential {
  F value;
  std::optional<F> supplied_derivative;
};

struct ConnectionSet {
  std::array<MatrixField, 4> a;                          // A_1 .. A_4
  std::array<std::optional<MatrixField>, 4> d_supplied;  // d A_i along the supplied coordinate
  CoordinateRoles roles;
  unsigned gauge_tags = gauge_none;

  const Grid& grid() const { return a[0].grid(); }
  int dim() const { return a[0].dim(); }
  // Shared grid/dim, at most one supplied coordinate, gauge tags hold exactly.
  void validate() const;
};

// Derivative of a field along coordinate xi_{coord+1} (coord in 0..3).
MatrixField partial(const MatrixField& value, const std::optional<MatrixField>& supplied,
                    const CoordinateRole& role, DiffMethod method = DiffMethod::spectral);
LambdaMatrixField partial(const LambdaMatrixField& value, const std::optional<LambdaMatrixField>& supplied,
                          const CoordinateRole& role, DiffMethod method = DiffMethod::spectral);

// d A_{comp} / d xi_{coord}, both indices 0-based.
MatrixField partial(const ConnectionSet& c, int comp, int coord, DiffMethod method = DiffMethod::spectral);

// A_mu = (d_mu g) g^{-1}, which is flat for the curvature convention above.
// Axis coordinates are differentiated numerically; a supplied coordinate uses
// g_supplied = d g along it. Absent coordinates get A = 0.
ConnectionSet pure_gauge_connection(const MatrixField& g, const CoordinateRoles& roles,
                                    const std::optional<MatrixField>& g_supplied = std::nullopt,
                                    DiffMethod method = DiffMethod::spectral);

}  // namespace sdyred
