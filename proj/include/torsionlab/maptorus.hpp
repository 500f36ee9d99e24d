#pragma once

#include "torsionlab/cellcomplex.hpp"
#include "torsionlab/ses.hpp"

namespace torsionlab {

/* A cellular self-map of a space N, given on cochains: the (untwisted)
 * cochain complex of N over the chosen field plus per-degree matrices of the
 * induced map commuting with the differentials. */
struct CellularSelfMap {
    CochainComplex domain;
    std::vector<ExactMatrix> comap; // comap[q] : C^q -> C^q

    // Shape and chain-map condition d o phi = phi o d; throws validation_error.
    void validate(Exec exec = Exec::automatic) const;
};

/* A representation of the infinite cyclic group: the invertible image of the
 * positive circle generator of the mapping torus. */
struct MonodromyRep {
    ExactMatrix w;

    std::size_t dim() const { return w.rows(); }
    void validate(Exec exec = Exec::automatic) const; // square + invertible
};

/* The algebraic mapping cone realizing the twisted cochain complex of the
 * mapping torus N_phi: degree-q space C^q(N;V) + C^{q-1}(N;V), differential
 *
 *     [        d_q (x) id                      0        ]
 *     [ (-1)^q (comap_q (x) w - id)    -(d_{q-1} (x) id) ]
 *
 * Acyclic exactly when every Lefschetz factor P^k is nonzero. */
CochainComplex mapping_cone_complex(const CellularSelfMap& m, const MonodromyRep& rho,
                                    Exec exec = Exec::automatic);

/* The maps induced by the self-map on the rational cohomology of its domain,
 * in the echelon representative bases of the complexes module. */
struct InducedCohomology {
    std::vector<std::size_t> h_dims;
    std::vector<ExactMatrix> hmaps; // hmaps[q] : H^q -> H^q
};
InducedCohomology induced_cohomology_maps(const CellularSelfMap& m,
                                          Exec exec = Exec::automatic);

/* Lefschetz zeta function: prod over even k of P^k divided by prod over odd,
 * with P^k = det(hmaps[k] (x) w - id).  Throws not_acyclic_error (carrying
 * the per-degree kernel dimensions of the P-matrices) when some P^k = 0. */
FieldElement lefschetz_zeta(const std::vector<ExactMatrix>& hmaps, const MonodromyRep& rho,
                            Exec exec = Exec::automatic);

/* The sign count z_phi = sum_q dim H^q * dim ker(hmaps[q] - id). */
unsigned long z_phi(const std::vector<ExactMatrix>& hmaps, Exec exec = Exec::automatic);

/* Verification record for the mapping-torus identity: the torsion side
 * (inverse sign-refined torsion of the cone, with the optional orientation
 * sign), the zeta side (-1)^{dim V * z_phi} * zeta, and their exact ratio,
 * which must be a unit of the form (+-) w^m; the unit is additionally checked
 * at exact sample specializations. */
struct MapTorusReport {
    FieldElement torsion_side;
    FieldElement zeta_side;
    FieldElement ratio;
    FieldElement zeta; // the raw Lefschetz zeta, before the z_phi sign
    unsigned long z = 0;
    std::vector<std::size_t> h_dims;
    bool unit_is_monomial = false; // ratio equals (+-) w^m exactly
    int unit_sign = 0;
    long unit_power = 0;
    std::size_t samples_checked = 0;
    bool samples_ok = false;
    bool pass = false;
};

MapTorusReport verify_maptor(const CellularSelfMap& m, const MonodromyRep& rho,
                             const CohomologyOrientation* o = nullptr,
                             Exec exec = Exec::automatic);

/* The short exact sequence behind the Wang long exact sequence: the shifted
 * subcomplex C^{*-1}(N;V) (differential negated), the cone, and the quotient
 * C^*(N;V). */
ShortExactSequenceOfComplexes wang_sequence(const CellularSelfMap& m, const MonodromyRep& rho,
                                            Exec exec = Exec::automatic);

} // namespace torsionlab
