#pragma once

#include <random>

#include "torsionlab/complex.hpp"

namespace torsionlab {

using Rng = std::mt19937_64;

// Seed a deterministic RNG from a textual tag; all randomized pieces of the
// library and the tests derive their streams this way.
Rng rng_from_tag(const std::string& tag);

/* Random GL_n(Z) element built from `passes` rounds of elementary row
 * operations (add c times another row, c in [-3,3] \ {0}), swaps and sign
 * flips; the exact inverse is accumulated alongside. */
struct UnimodularPair {
    ExactMatrix g, g_inv;
};
UnimodularPair random_unimodular(const FieldDescriptor& d, std::size_t n, Rng& rng,
                                 std::size_t passes = 2);

/* For dims (k_0..k_n) and ranks (r_0..r_{n-1}) with r_{q-1} + r_q <= k_q, the
 * model complex has d^q mapping the last r_q coordinates of C^q identically
 * onto the first r_q coordinates of C^{q+1}; its cohomology dimensions are
 * k_q - r_{q-1} - r_q.  Conjugating by random unimodular matrices scrambles
 * it without changing the cohomology. */
CochainComplex model_complex(const FieldDescriptor& d, const std::vector<std::size_t>& dims,
                             const std::vector<std::size_t>& ranks);
CochainComplex random_complex(const FieldDescriptor& d, const std::vector<std::size_t>& dims,
                              const std::vector<std::size_t>& ranks, Rng& rng,
                              std::size_t passes = 2);

/* Random acyclic complex on an admissible shape: full-rank model (ranks are
 * the alternating tail sums) conjugated as above.  Length-two shapes (k, k)
 * are sampled entrywise uniform in [-3,3] with singular draws rejected. */
CochainComplex random_acyclic_complex(const std::vector<std::size_t>& dims, Rng& rng);

// Alternating tail sums s_q = k_{q+1} - k_{q+2} + ...; equals rank d^q for an
// acyclic complex.  Requires an admissible shape.
std::vector<std::size_t> acyclic_ranks(const std::vector<std::size_t>& dims);

} // namespace torsionlab
