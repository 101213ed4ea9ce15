#pragma once

#include "sdyred/complex_matrix.hpp"
#include "sdyred/field.hpp"

namespace sdyred {

// Isomorphism so(3) -> su(2) (complexified: so(3,C) -> sl(2,C)).
//
// standard: L_a -> -(i/2) sigma_a.
// adapted:  L_a -> -(i/2) sum_b R_ab sigma_b with R = [[0,0,-1],[0,-1,0],[-1,0,0]],
//           the frame in which the reduction ansaetze take their matrix form.
//           It equals the standard map precomposed with M -> R M R^T.
enum class IsoFrame { standard, adapted };

ComplexMatrix so3_to_su2(const ComplexMatrix& m, IsoFrame frame = IsoFrame::standard);
ComplexMatrix su2_to_so3(const ComplexMatrix& x, IsoFrame frame = IsoFrame::standard);

MatrixField so3_to_su2(const MatrixField& m, IsoFrame frame = IsoFrame::standard);
MatrixField su2_to_so3(const MatrixField& x, IsoFrame frame = IsoFrame::standard);

}  // namespace sdyred
