#pragma once

#include <optional>

#include "torsionlab/linalg.hpp"

namespace torsionlab {

/* Finite cochain complex 0 -> C^0 -> ... -> C^n -> 0 in its standard bases.
 * dims[q] = dim C^q; diffs[q] is the matrix of d^q : C^q -> C^{q+1}, of shape
 * dims[q+1] x dims[q], for q = 0..n-1.  Zero-dimensional degrees are legal. */
struct CochainComplex {
    FieldDescriptor field;
    std::vector<std::size_t> dims;
    std::vector<ExactMatrix> diffs;

    std::size_t top_degree() const { return dims.empty() ? 0 : dims.size() - 1; }
    std::size_t dim(std::size_t q) const { return q < dims.size() ? dims[q] : 0; }
    // d^q as a matrix, with zero matrices supplied outside the range
    ExactMatrix diff(std::size_t q) const;

    // Shape consistency and d o d = 0; throws validation_error.
    void validate() const;
};

/* One column block of representatives per degree; the interface for handing
 * chosen cohomology bases around (columns = representative cocycles in the
 * standard coordinates of C^q). */
struct GradedBases {
    std::vector<ExactMatrix> reps;

    std::size_t cols(std::size_t q) const { return q < reps.size() ? reps[q].cols() : 0; }
};

struct CohomologyResult {
    std::vector<std::size_t> h_dims;
    // Echelon-deterministic representatives: the kernel-basis columns that
    // extend an echelon basis of the coboundaries.
    GradedBases bases;
};

CohomologyResult cohomology(const CochainComplex& c, Exec exec = Exec::automatic);
bool is_acyclic(const CochainComplex& c, Exec exec = Exec::automatic);

/* Parity exponent N = sum_{q>=0} alpha_q beta_q of the sign-refined torsion,
 * where alpha_q = sum_{j>=q} dim C^j and beta_q = sum_{j>=q} dim H^j. */
unsigned long sign_N(const std::vector<std::size_t>& c_dims,
                     const std::vector<std::size_t>& h_dims);
unsigned long sign_N(const CochainComplex& c, Exec exec = Exec::automatic);

/* Sign-refined torsion of the based complex with chosen cohomology bases:
 *   (-1)^N prod_q det[ b^q | h^q | lifts(b^{q+1}) ]^{(-1)^q}
 * where b^q is the echelon coboundary basis and lifts are d-preimages, all
 * expressed in the standard basis of C^q.  The choices of b and of the lifts
 * do not change the value (tested); h must consist of cocycles representing
 * an actual basis of H^q, else basis_error. */
FieldElement torsion(const CochainComplex& c, const GradedBases& h, Exec exec = Exec::automatic);

// Torsion of an acyclic complex (no bases needed); not_acyclic_error with the
// cohomology dimensions otherwise.
FieldElement torsion_acyclic(const CochainComplex& c, Exec exec = Exec::automatic);

// Entry-wise specialization of every differential; pole_error if any entry
// has a pole at the point.
CochainComplex specialize(const CochainComplex& c, const Gaussian& point);

} // namespace torsionlab
