#pragma once

#include "torsionlab/cellcomplex.hpp"

namespace torsionlab {

/* Rational roots of a polynomial with rational coefficients, by the rational
 * root theorem applied to the integer-cleared form.  Roots come back in
 * ascending order with multiplicities; residual is the factor left after
 * dividing them all out (it has no rational roots, and is the whole input
 * for constants).  domain_error on the zero polynomial or on imaginary
 * coefficients. */
struct RootSplit {
    std::vector<std::pair<Rational, std::size_t>> roots;
    Polynomial residual;
};

RootSplit rational_roots(const Polynomial& p);

/* One interesting point of the torsion function: a zero or pole (or both is
 * impossible for a reduced fraction), with the acyclicity cross-check of the
 * twisted complex specialized there. */
struct ScanRoot {
    Rational at;
    std::size_t zero_mult = 0, pole_mult = 0;
    bool specialized_nonacyclic = false;
};

struct ScanReport {
    FieldElement torsion;
    std::vector<ScanRoot> roots; // ascending
    Polynomial zero_residual, pole_residual;
};

/* The torsion as an exact rational function together with its rational zeros
 * and poles; at every root the representation is specialized and the twisted
 * complex is confirmed non-acyclic (points where specialization itself blows
 * up count as non-acyclic). */
ScanReport scan_torsion(const EquivariantCellComplex& x, const Representation& r,
                        const CohomologyOrientation& o, Exec exec = Exec::automatic);

// Echelon-default orientation: sign +1 and the standard cohomology bases of
// the untwisted rational complex.
CohomologyOrientation default_orientation(const EquivariantCellComplex& x,
                                          Exec exec = Exec::automatic);

} // namespace torsionlab
