#pragma once

#include <cstddef>
#include <vector>

#include "torsionlab/matrix.hpp"

namespace torsionlab {

/* Execution policy for the elimination kernels.  The serial path is the
 * reference implementation; the parallel path distributes the row-update
 * sweep over OpenMP threads.  `automatic` switches to parallel above a size
 * threshold so small acceptance-scale problems stay deterministic-cheap. */
enum class Exec { serial, parallel, automatic };

Exec resolve_exec(Exec e, std::size_t element_count);

/* Matrix of raw polynomials: the working type of the fraction-free kernels.
 * Field-level matrices are brought here by clearing row denominators. */
struct PolyMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<Polynomial> a;

    PolyMatrix() = default;
    PolyMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}
    Polynomial& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const Polynomial& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

struct BareissResult {
    std::size_t rank = 0;
    int sign = 1;                         // parity of the row swaps performed
    Polynomial last_pivot;                // final pivot; for a full-rank square
                                          // matrix, det = sign * last_pivot
    std::vector<std::size_t> pivot_cols;
};

/* One-step fraction-free (Bareiss) elimination with row pivoting and column
 * skipping; all interior divisions are exact and asserted so.  When det_mode
 * is set the input must be square and elimination stops early on a zero
 * column (determinant is then zero). */
BareissResult bareiss_eliminate(PolyMatrix& m, Exec exec, bool det_mode);

struct RrefResult {
    ExactMatrix reduced;
    std::vector<std::size_t> pivot_cols;
};

// Fully reduced row echelon form; pivot choice is the first nonzero entry
// scanning rows top to bottom, columns left to right.
RrefResult rref(const ExactMatrix& m, Exec exec = Exec::automatic);

// Determinant through Bareiss on the denominator-cleared polynomial matrix.
FieldElement det(const ExactMatrix& m, Exec exec = Exec::automatic);
// Baseline: classical Gaussian elimination with field-element fractions.
// Kept as an independent reference path and as the benchmark comparison.
FieldElement det_fraction_gauss(const ExactMatrix& m, Exec exec = Exec::automatic);
// Cofactor expansion; test oracle for sizes <= 4.
FieldElement det_cofactor(const ExactMatrix& m);

std::size_t rank(const ExactMatrix& m, Exec exec = Exec::automatic);

} // namespace torsionlab
