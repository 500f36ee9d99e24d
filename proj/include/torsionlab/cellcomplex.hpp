#pragma once

#include "torsionlab/complex.hpp"
#include "torsionlab/group.hpp"

namespace torsionlab {

/* An orientation of the total determinant line of untwisted rational
 * cohomology: explicit ordered bases of every H^q(M; Q) plus a sign toggle. */
struct CohomologyOrientation {
    int sign = 1;
    GradedBases bases;
};

/* A finite cell complex with fundamental-group action data: per-degree cell
 * counts, boundary matrices over the integral group ring, and one lift word
 * per cell — the path class from the base point to the chosen lift in the
 * universal cover, which is the combinatorial Euler-structure datum.
 *
 * boundaries[q] is the matrix of the boundary of (q+1)-cells: shape
 * cells[q] x cells[q+1], entry (tau, sigma) the Z[G]-coefficient of tau in
 * the boundary of sigma.  `ordering` is a permutation of all cells (global
 * indices counted degree-major); it fixes the basis order of the assembled
 * complexes.  Empty ordering means the declaration order.  `names` is an
 * optional per-degree list of cell names for lookups. */
struct EquivariantCellComplex {
    GroupPresentation group;
    std::vector<std::size_t> cells;
    std::vector<RingMatrix> boundaries;
    std::vector<std::vector<Word>> lifts;
    std::vector<std::size_t> ordering;
    std::vector<std::vector<std::string>> names;

    std::size_t top_degree() const { return cells.empty() ? 0 : cells.size() - 1; }
    std::size_t total_cells() const;
    // Degree-q cell indices in the order induced by `ordering`.
    std::vector<std::size_t> degree_order(std::size_t q) const;

    // Shape and lift consistency, ordering a permutation, boundary words in
    // range, d o d = 0 over the group ring; throws validation_error.
    void validate() const;

    // Resolve a declared cell name, or a "DEGREE:INDEX" token, to the pair
    // (degree, index); throws validation_error if unknown.
    std::pair<std::size_t, std::size_t> find_cell(const std::string& token) const;
};

/* The twisted cochain complex C^*(M; rho): every boundary entry is conjugated
 * by the lift words (the entry pairing the (q+1)-cell sigma with the q-cell
 * tau becomes lift(sigma)^{-1} * entry * lift(tau)), pushed through the ring
 * homomorphism extending rho into dim V x dim V blocks, assembled in cell
 * order, and block-transposed to a degree-raising differential.  The
 * representation must be over the complex's group (same generators, relations
 * satisfied). */
CochainComplex assemble_twisted_cochain(const EquivariantCellComplex& x,
                                        const Representation& r,
                                        Exec exec = Exec::automatic);

// The rational cochain complex of the underlying space: the trivial
// one-dimensional representation (entry-wise augmentation).
CochainComplex untwisted_complex(const EquivariantCellComplex& x);

/* Sign of the rational torsion of the untwisted complex in o's bases: the
 * "ordering of the zeros compatible with the orientation" calibration.
 * Throws basis_error when o does not span untwisted cohomology. */
int untwisted_orientation_sign(const EquivariantCellComplex& x,
                               const CohomologyOrientation& o,
                               Exec exec = Exec::automatic);

/* The Milnor-Turaev torsion: inverse of the sign-refined torsion of the
 * twisted complex, times s^{dim V} with s the product of o.sign and the
 * untwisted orientation sign.  Throws not_acyclic_error (with the twisted
 * cohomology dimensions) when the twist fails to be acyclic. */
FieldElement milnor_turaev_torsion(const EquivariantCellComplex& x,
                                   const Representation& r,
                                   const CohomologyOrientation& o,
                                   Exec exec = Exec::automatic);

/* Change of Euler structure: replaces lift(cell) by w * lift(cell).  The
 * torsion changes by det(rho(w))^{(-1)^degree} (tested as a property). */
EquivariantCellComplex shift_euler(const EquivariantCellComplex& x, std::size_t degree,
                                   std::size_t index, const Word& w);

enum class ArgModulus { pi, two_pi };

/* Argument of a nonzero constant scalar, embedded into the complex plane at
 * double precision and reduced into [0, modulus).  Throws domain_error on
 * zero or non-constant input. */
double argument_invariant(const FieldElement& v, ArgModulus modulus);

} // namespace torsionlab
