#pragma once

#include "torsionlab/elimination.hpp"

namespace torsionlab {

/* Basis of ker(m) as matrix columns, derived from the RREF free columns and
 * normalized so the first nonzero entry of each vector is 1; column order
 * follows the free columns left to right.  A 0 x k matrix has full kernel. */
ExactMatrix kernel_basis(const ExactMatrix& m, Exec exec = Exec::automatic);

/* Echelon basis of the column space (RREF of the transpose, leading-one
 * normalized), as matrix columns. */
ExactMatrix image_basis(const ExactMatrix& m, Exec exec = Exec::automatic);

/* Solves m x = b column-wise for a whole right-hand-side block; free
 * variables are set to zero.  Throws no_solution_error when some column of b
 * is outside the image. */
ExactMatrix solve(const ExactMatrix& m, const ExactMatrix& b, Exec exec = Exec::automatic);

// Inverse of a square matrix; throws domain_error when singular.
ExactMatrix invert(const ExactMatrix& m, Exec exec = Exec::automatic);

} // namespace torsionlab
