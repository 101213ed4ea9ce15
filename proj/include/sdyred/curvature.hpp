#pragma once

#include <vector>

#include "sdyred/connection.hpp"
#include "sdyred/report.hpp"

namespace sdyred {

// F_ik = d_i A_k - d_k A_i + [A_k, A_i] for coordinate indices 1..4.
// Only i < k is computed directly; F_ki is returned as the exact negation.
MatrixField curvature(const ConnectionSet& c, int i, int k, DiffMethod method = DiffMethod::spectral);

// Self-duality components F12, F34 and F41 - F32.
std::vector<MatrixBalance> sdym_components(const ConnectionSet& c, DiffMethod method = DiffMethod::spectral);
ResidualReport sdym_residual(const ConnectionSet& c, double tolerance = 1e-9, NormKind norm = NormKind::linf,
                             DiffMethod method = DiffMethod::spectral);

// Three-dimensional (xi_3-independent) forms of the self-duality equations.
//   general  : all three components with d/dxi_3 = 0
//   a4_zero  : the same after A_4 = 0
//   a3_const : additionally A_3 constant (two components)
//   spin     : A_1 = A_2 = 0 (two components)
enum class Sdym3Variant { general, a4_zero, a3_const, spin };
Sdym3Variant parse_sdym3_variant(const std::string& s);

std::vector<MatrixBalance> sdym3_components(const ConnectionSet& c, Sdym3Variant variant,
                                            DiffMethod method = DiffMethod::spectral);
ResidualReport sdym3_residual(const ConnectionSet& c, Sdym3Variant variant, double tolerance = 1e-9,
                              NormKind norm = NormKind::linf, DiffMethod method = DiffMethod::spectral);

// Four-potential compatibility family with matrix (or lambda-polynomial) coefficients.
//   general            : all four component equations
//   scalar_coefficients: A = aI, C = bI with constant a, b; one equation
//   three_dimensional  : the scalar-coefficient equation with d/dxi_3 dropped
enum class MlxxVariant { general, scalar_coefficients, three_dimensional };
MlxxVariant parse_mlxx_variant(const std::string& s);

struct MlxxInputs {
  Potential<LambdaMatrixField> a, b, c, d;
  CoordinateRoles roles;
};

// Each returned balance is one equation; the residual is lambda-graded.
struct LambdaBalance {
  std::string name;
  LambdaMatrixField lhs;
  LambdaMatrixField rhs;
  LambdaMatrixField residual() const { return lhs - rhs; }
};

std::vector<LambdaBalance> mlxx_components(const MlxxInputs& in, MlxxVariant variant,
                                           DiffMethod method = DiffMethod::spectral);
// One report component per equation and lambda power, named "<equation>[lambda^k]".
ResidualReport mlxx_residual(const MlxxInputs& in, MlxxVariant variant, double tolerance = 1e-10,
                             NormKind norm = NormKind::linf, DiffMethod method = DiffMethod::spectral);
ResidualReport lambda_report(const std::vector<LambdaBalance>& parts, double tolerance, NormKind norm);

// A = C = lambda I, B = A_1 - lambda A_3, D = A_2 - lambda A_4.
MlxxInputs mlxx_from_connection(const ConnectionSet& c);
// Coefficients of the scalar-coefficient residual against the self-duality
// components: lambda^0 <-> -F12, lambda^1 <-> -(F41 - F32), lambda^2 <-> -F34.
// Components "lambda^k", each relative to the larger of the two sides.
ResidualReport mlxx_sdym_matching(const ConnectionSet& c, double tolerance = 1e-10,
                                  DiffMethod method = DiffMethod::spectral);

// Three-potential compatibility equations on coordinates xi_1..xi_3 (roles[3] unused),
// and their extension by a Higgs-type field psi. mlxii == bogomolny with psi = 0.
std::vector<MatrixBalance> mlxii_components(const MatrixField& a, const MatrixField& b, const MatrixField& c,
                                            const CoordinateRoles& roles, DiffMethod method = DiffMethod::spectral);
std::vector<MatrixBalance> bogomolny_components(const MatrixField& a, const MatrixField& b, const MatrixField& c,
                                                const MatrixField& psi, const CoordinateRoles& roles,
                                                DiffMethod method = DiffMethod::spectral);
ResidualReport mlxii_residual(const MatrixField& a, const MatrixField& b, const MatrixField& c,
                              const CoordinateRoles& roles, double tolerance = 1e-10, NormKind norm = NormKind::linf);
ResidualReport bogomolny_residual(const MatrixField& a, const MatrixField& b, const MatrixField& c,
                                  const MatrixField& psi, const CoordinateRoles& roles, double tolerance = 1e-10,
                                  NormKind norm = NormKind::linf);

}  // namespace sdyred
