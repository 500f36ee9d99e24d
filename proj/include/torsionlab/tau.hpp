#pragma once

#include <map>
#include <mutex>
#include <optional>

#include "torsionlab/generator.hpp"

namespace torsionlab {

/* Dimension vector (k_0, ..., k_n) of a would-be acyclic complex.  Admissible
 * means the alternating sum vanishes and every partial alternating head sum
 * k_i - k_{i-1} + ... +- k_0 (i < n) is nonnegative; equivalently all the
 * tail sums s_q = k_{q+1} - k_{q+2} + ... are nonnegative with s_0 = k_0. */
struct ShapeVector {
    std::vector<std::size_t> k;

    std::size_t degrees() const { return k.size(); }
    bool is_admissible() const;
    // Sizes |alpha_i| of the tau-chain subsets: s_n = 0, s_i = k_{i+1} - s_{i+1}.
    // Requires admissibility.
    std::vector<std::size_t> tau_sizes() const;
    std::string str() const;
};

/* Tau-chain: per degree i a sorted subset alpha_i of {1..k_i} of size s_i,
 * with alpha_n empty.  Stored 1-based to match the combinatorial notation. */
struct TauChain {
    std::vector<std::vector<std::size_t>> alpha;

    std::string str() const;
    bool operator==(const TauChain& o) const = default;
    bool operator<(const TauChain& o) const { return alpha < o.alpha; }
};

/* All tau-chains of an admissible shape, lexicographically ordered (subsets
 * compared degreewise from degree 0, each as a sorted index list). */
std::vector<TauChain> enumerate_tau_chains(const ShapeVector& shape);

/* Unsigned tau-chain functional: prod_{i=0}^{n-1} det(A_i)^{(-1)^{i+1}},
 * where A_i takes the columns of d^i indexed by alpha_i and the rows NOT in
 * alpha_{i+1}.  Returns nullopt when some minor is singular (degenerate). */
std::optional<FieldElement> unsigned_F_alpha(const CochainComplex& c, const TauChain& chain);

/* Calibrated sign eps(alpha): the library generates a random acyclic complex
 * with a deterministic per-(shape, alpha) seed, rejects alpha-degenerate
 * draws, and sets eps = torsion / unsigned_F.  Values are cached process-wide
 * (thread-safe, write-once per key). */
class EpsilonCache {
  public:
    int get(const ShapeVector& shape, const TauChain& chain);
    static EpsilonCache& global();

  private:
    std::mutex mu_;
    std::map<std::pair<std::vector<std::size_t>, TauChain>, int> values_;
};

int epsilon_alpha(const ShapeVector& shape, const TauChain& chain);

/* Signed functional F_alpha = eps(alpha) * unsigned_F_alpha; degenerate_error
 * when the chain is degenerate at this differential. */
FieldElement F_alpha(const CochainComplex& c, const TauChain& chain);

/* Dimension of the variety of acyclic differentials on the shape:
 * sum_{i=1}^{n} s_{i-1} k_i (head alternating sums times the next dim). */
unsigned long dimension_Dac(const ShapeVector& shape);

struct DimensionCheck {
    unsigned long formula = 0;
    unsigned long measured = 0;   // dim of the solution space of the linearized
                                  // d o d = 0 equations at a sample point
    std::size_t samples = 0;
    bool pass = false;
};

/* Verifies dimension_Dac against the rank of the linearization of d o d = 0
 * at random acyclic differentials (the tangent-space dimension). */
DimensionCheck verify_dimension(const ShapeVector& shape, std::size_t samples, Rng& rng);

} // namespace torsionlab
