#pragma once

#include "torsionlab/tau.hpp"

namespace torsionlab {

/* Degreewise short exact sequence 0 -> C0 -> C1 -> C2 -> 0 of cochain
 * complexes over one field: inject[q] is the matrix of C0^q >-> C1^q and
 * project[q] of C1^q ->> C2^q.  validate() checks shapes, injectivity,
 * surjectivity, p o i = 0, the dimension count (which together force
 * im i = ker p), and that both maps are chain maps. */
struct ShortExactSequenceOfComplexes {
    CochainComplex c0, c1, c2;
    std::vector<ExactMatrix> inject, project;

    void validate(Exec exec = Exec::automatic) const;
};

/* The cohomology long exact sequence packaged as an acyclic complex with
 * degree 3q -> H^q(C0), 3q+1 -> H^q(C1), 3q+2 -> H^q(C2) and differentials
 * i*, p*, and the plain snake connecting map; entries are coordinates with
 * respect to the bases used (supplied or echelon-default), which are returned
 * alongside. */
struct LongExactSequence {
    CochainComplex hes;
    GradedBases h0, h1, h2;
};

LongExactSequence long_exact_sequence(const ShortExactSequenceOfComplexes& s,
                                      const GradedBases* given_h0 = nullptr,
                                      const GradedBases* given_h1 = nullptr,
                                      const GradedBases* given_h2 = nullptr,
                                      Exec exec = Exec::automatic);

/* Exponent y of the fusion isomorphism:
 *   y = N(C0) + N(C1) + N(C2) + sum_q [ f1^q b2^q + b2^q b0^{q+1} + f2^q b0^{q+1} ]
 * with b_i^q = dim B^q(C_i) and f_i^q = dim B^{3q+i}(LES); reduce mod 2 for
 * the sign. */
unsigned long fusion_sign_y(const ShortExactSequenceOfComplexes& s, Exec exec = Exec::automatic);

/* Both scalar routes around the fusion diagram relative to chosen cohomology
 * bases for C0 and C2 (C1 uses the echelon default):
 *   lhs = (-1)^y * psi * t(C0, h0) * t(C2, h2) * t(LES)      and  rhs = t(C1, h1),
 * where psi = prod_q det[ inject[q] | section of project[q] ]^{(-1)^q}.
 * pass is exact equality. */
struct FusionReport {
    bool pass = false;
    unsigned long y = 0;
    FieldElement psi, t0, t1, t2, t_les, lhs, rhs;
};

FusionReport fusion_check(const ShortExactSequenceOfComplexes& s, const GradedBases& h0,
                          const GradedBases& h2, Exec exec = Exec::automatic);

/* Split test sequence: C1 = C0 (+) C2 with differential [[d0, u],[0, d2]],
 * where u is a random solution of d0 u + u d2 = 0 with integer coordinates in
 * the kernel basis; inject/project are the block inclusion and projection. */
ShortExactSequenceOfComplexes random_split_ses(const CochainComplex& c0,
                                               const CochainComplex& c2, Rng& rng);

} // namespace torsionlab
