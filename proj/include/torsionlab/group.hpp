#pragma once

#include <string>
#include <utility>

#include "torsionlab/linalg.hpp"

namespace torsionlab {

/* A word in a free group on abstractly indexed generators, stored freely
 * reduced.  Letters are nonzero signed 1-based indices: +k is generator k-1,
 * -k its inverse.  The empty word is the identity. */
class Word {
  public:
    Word() = default;
    // Frees-reduces the given letter sequence; throws validation_error on a
    // zero letter.
    explicit Word(std::vector<int> letters);

    const std::vector<int>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }
    std::size_t length() const { return letters_.size(); }

    Word inverse() const;
    friend Word operator*(const Word& a, const Word& b); // concatenate + reduce

    bool operator==(const Word& o) const { return letters_ == o.letters_; }
    bool operator!=(const Word& o) const { return !(*this == o); }
    // Length-then-lexicographic; a canonical total order for term sorting.
    bool operator<(const Word& o) const;

  private:
    std::vector<int> letters_; // invariant: freely reduced, no zero entries
};

/* A finitely presented group: named generators and relation words. */
struct GroupPresentation {
    std::vector<std::string> generators;
    std::vector<Word> relations;

    std::size_t rank() const { return generators.size(); }
    // Index of a generator name; throws validation_error if unknown.
    std::size_t generator_index(const std::string& name) const;
    // Nonempty unique names, relation letters in range; throws validation_error.
    void validate() const;
};

/* Word serialization: space-separated tokens "g" or "g^-1" with g a declared
 * generator name; the empty string is the identity. */
Word parse_word(const std::string& text, const GroupPresentation& g);
std::string word_str(const Word& w, const GroupPresentation& g);

/* An element of the integral group ring Z[G]: a canonical term list
 * (sorted by word, nonzero integer coefficients, no duplicates). */
class GroupRingElement {
  public:
    GroupRingElement() = default; // zero
    GroupRingElement(long coefficient, const Word& w);
    static GroupRingElement from_terms(std::vector<std::pair<long, Word>> terms);

    const std::vector<std::pair<long, Word>>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    friend GroupRingElement operator+(const GroupRingElement& a, const GroupRingElement& b);
    friend GroupRingElement operator-(const GroupRingElement& a, const GroupRingElement& b);
    friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);
    GroupRingElement operator-() const;
    bool operator==(const GroupRingElement& o) const { return terms_ == o.terms_; }
    bool operator!=(const GroupRingElement& o) const { return !(*this == o); }

    // Left/right translation by a group element: w * e and e * w^{-1}.
    GroupRingElement left_mul(const Word& w) const;
    GroupRingElement right_mul_inverse(const Word& w) const;

    // Sum of coefficients (the augmentation Z[G] -> Z).
    long augmentation() const;

  private:
    void normalize();
    std::vector<std::pair<long, Word>> terms_; // canonical order, see class doc
};

/* Dense matrix over the group ring; rows/cols of size zero are legal. */
struct RingMatrix {
    std::size_t n_rows = 0, n_cols = 0;
    std::vector<GroupRingElement> entries; // row-major

    RingMatrix() = default;
    RingMatrix(std::size_t r, std::size_t c) : n_rows(r), n_cols(c), entries(r * c) {}

    GroupRingElement& at(std::size_t i, std::size_t j) { return entries[i * n_cols + j]; }
    const GroupRingElement& at(std::size_t i, std::size_t j) const {
        return entries[i * n_cols + j];
    }
    bool is_zero() const;
    friend RingMatrix operator*(const RingMatrix& a, const RingMatrix& b);
    bool operator==(const RingMatrix& o) const {
        return n_rows == o.n_rows && n_cols == o.n_cols && entries == o.entries;
    }
};

/* A linear representation of a presented group: one invertible matrix per
 * generator, all square of equal size over a common field. */
struct Representation {
    GroupPresentation presentation;
    std::vector<ExactMatrix> images; // one per generator

    std::size_t dim() const { return images.empty() ? 0 : images[0].rows(); }
    const FieldDescriptor& field() const;
};

/* Outcome of checking a representation: image shapes and invertibility, then
 * every relation evaluating to the identity.  On failure exactly one of
 * singular_generator / failing_relation is set (first offender). */
struct RepCheck {
    bool ok = true;
    static constexpr std::size_t none = static_cast<std::size_t>(-1);
    std::size_t singular_generator = none;
    std::size_t failing_relation = none;
};

RepCheck validate_representation(const Representation& r, Exec exec = Exec::automatic);

// Product of generator images and inverses in word order; the empty word gives
// the identity.  Throws validation_error on out-of-range letters or shape
// problems, domain_error if an inverse of a singular image is needed.
ExactMatrix evaluate_word(const Word& w, const Representation& r, Exec exec = Exec::automatic);

// Ring homomorphism extending the representation: sum of coeff * rho(word).
ExactMatrix evaluate_ring_element(const GroupRingElement& e, const Representation& r,
                                  Exec exec = Exec::automatic);

// det(rho(w)): the value of the induced homomorphism det o rho on the class
// of w; exact field element.
FieldElement det_rho_of_class(const Representation& r, const Word& w,
                              Exec exec = Exec::automatic);

} // namespace torsionlab
