#include "torsionlab/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <sstream>

#include "torsionlab/errors.hpp"

namespace torsionlab {

namespace {

// Append one letter to a reduced prefix, cancelling inverse pairs.
void push_reduced(std::vector<int>& out, int letter) {
    if (!out.empty() && out.back() == -letter)
        out.pop_back();
    else
        out.push_back(letter);
}

} // namespace

Word::Word(std::vector<int> letters) {
    letters_.reserve(letters.size());
    for (int l : letters) {
        if (l == 0) throw validation_error("word letters must be nonzero");
        push_reduced(letters_, l);
    }
}

Word Word::inverse() const {
    Word w;
    w.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
        w.letters_.push_back(-*it); // reversal of a reduced word stays reduced
    return w;
}

Word operator*(const Word& a, const Word& b) {
    Word w;
    w.letters_ = a.letters_;
    for (int l : b.letters_) push_reduced(w.letters_, l);
    return w;
}

bool Word::operator<(const Word& o) const {
    if (letters_.size() != o.letters_.size()) return letters_.size() < o.letters_.size();
    return letters_ < o.letters_;
}

std::size_t GroupPresentation::generator_index(const std::string& name) const {
    for (std::size_t i = 0; i < generators.size(); ++i)
        if (generators[i] == name) return i;
    throw validation_error("unknown generator '" + name + "'");
}

void GroupPresentation::validate() const {
    for (std::size_t i = 0; i < generators.size(); ++i) {
        if (generators[i].empty()) throw validation_error("empty generator name");
        for (std::size_t j = i + 1; j < generators.size(); ++j)
            if (generators[i] == generators[j])
                throw validation_error("duplicate generator '" + generators[i] + "'");
    }
    for (const Word& r : relations)
        for (int l : r.letters())
            if (static_cast<std::size_t>(std::abs(l)) > generators.size())
                throw validation_error("relation uses an undeclared generator");
}

Word parse_word(const std::string& text, const GroupPresentation& g) {
    std::istringstream in(text);
    std::vector<int> letters;
    std::string token;
    while (in >> token) {
        int sign = 1;
        if (token.size() > 3 && token.compare(token.size() - 3, 3, "^-1") == 0) {
            sign = -1;
            token.resize(token.size() - 3);
        }
        letters.push_back(sign * (static_cast<int>(g.generator_index(token)) + 1));
    }
    return Word(letters);
}

std::string word_str(const Word& w, const GroupPresentation& g) {
    std::string out;
    for (int l : w.letters()) {
        std::size_t idx = static_cast<std::size_t>(std::abs(l)) - 1;
        if (idx >= g.generators.size())
            throw validation_error("word letter out of range for the presentation");
        if (!out.empty()) out += ' ';
        out += g.generators[idx];
        if (l < 0) out += "^-1";
    }
    return out;
}

GroupRingElement::GroupRingElement(long coefficient, const Word& w) {
    if (coefficient != 0) terms_.push_back({coefficient, w});
}

GroupRingElement GroupRingElement::from_terms(std::vector<std::pair<long, Word>> terms) {
    GroupRingElement e;
    e.terms_ = std::move(terms);
    e.normalize();
    return e;
}

void GroupRingElement::normalize() {
    std::map<Word, long> acc;
    for (const auto& [c, w] : terms_) acc[w] += c;
    terms_.clear();
    for (const auto& [w, c] : acc)
        if (c != 0) terms_.push_back({c, w});
}

GroupRingElement operator+(const GroupRingElement& a, const GroupRingElement& b) {
    std::vector<std::pair<long, Word>> terms = a.terms_;
    terms.insert(terms.end(), b.terms_.begin(), b.terms_.end());
    return GroupRingElement::from_terms(std::move(terms));
}

GroupRingElement operator-(const GroupRingElement& a, const GroupRingElement& b) {
    return a + (-b);
}

GroupRingElement GroupRingElement::operator-() const {
    GroupRingElement e;
    e.terms_ = terms_;
    for (auto& [c, w] : e.terms_) c = -c;
    return e;
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
    std::vector<std::pair<long, Word>> terms;
    terms.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [ca, wa] : a.terms_)
        for (const auto& [cb, wb] : b.terms_) terms.push_back({ca * cb, wa * wb});
    return GroupRingElement::from_terms(std::move(terms));
}

GroupRingElement GroupRingElement::left_mul(const Word& w) const {
    std::vector<std::pair<long, Word>> terms = terms_;
    for (auto& [c, t] : terms) t = w * t;
    return from_terms(std::move(terms));
}

GroupRingElement GroupRingElement::right_mul_inverse(const Word& w) const {
    Word wi = w.inverse();
    std::vector<std::pair<long, Word>> terms = terms_;
    for (auto& [c, t] : terms) t = t * wi;
    return from_terms(std::move(terms));
}

long GroupRingElement::augmentation() const {
    long s = 0;
    for (const auto& [c, w] : terms_) s += c;
    return s;
}

bool RingMatrix::is_zero() const {
    return std::all_of(entries.begin(), entries.end(),
                       [](const GroupRingElement& e) { return e.is_zero(); });
}

RingMatrix operator*(const RingMatrix& a, const RingMatrix& b) {
    if (a.n_cols != b.n_rows) throw shape_error("ring matrix product shape mismatch");
    RingMatrix m(a.n_rows, b.n_cols);
    for (std::size_t i = 0; i < a.n_rows; ++i)
        for (std::size_t j = 0; j < b.n_cols; ++j) {
            GroupRingElement s;
            for (std::size_t l = 0; l < a.n_cols; ++l) s = s + a.at(i, l) * b.at(l, j);
            m.at(i, j) = s;
        }
    return m;
}

const FieldDescriptor& Representation::field() const {
    if (images.empty()) throw validation_error("representation has no generators");
    return images[0].descriptor();
}

namespace {

// Generator images and (lazily computed) inverses for word evaluation.
class WordEvaluator {
  public:
    WordEvaluator(const Representation& r, Exec exec) : rep_(r), exec_(exec) {
        inverses_.resize(r.images.size());
    }

    ExactMatrix evaluate(const Word& w) {
        ExactMatrix m = ExactMatrix::identity(rep_.field(), rep_.dim());
        for (int l : w.letters()) {
            std::size_t idx = static_cast<std::size_t>(std::abs(l)) - 1;
            if (idx >= rep_.images.size())
                throw validation_error("word letter out of range for the representation");
            m = m * (l > 0 ? rep_.images[idx] : inverse(idx));
        }
        return m;
    }

  private:
    const ExactMatrix& inverse(std::size_t idx) {
        if (!inverses_[idx]) inverses_[idx] = invert(rep_.images[idx], exec_);
        return *inverses_[idx];
    }

    const Representation& rep_;
    Exec exec_;
    std::vector<std::optional<ExactMatrix>> inverses_;
};

} // namespace

RepCheck validate_representation(const Representation& r, Exec exec) {
    r.presentation.validate();
    RepCheck check;
    if (r.images.size() != r.presentation.rank())
        throw validation_error("representation needs one image per generator");
    const std::size_t d = r.dim();
    for (std::size_t i = 0; i < r.images.size(); ++i) {
        if (r.images[i].rows() != d || r.images[i].cols() != d)
            throw validation_error("generator images must be square of equal size");
        if (rank(r.images[i], exec) != d) {
            check.ok = false;
            check.singular_generator = i;
            return check;
        }
    }
    WordEvaluator eval(r, exec);
    const ExactMatrix id = ExactMatrix::identity(r.field(), d);
    for (std::size_t i = 0; i < r.presentation.relations.size(); ++i) {
        if (eval.evaluate(r.presentation.relations[i]) != id) {
            check.ok = false;
            check.failing_relation = i;
            return check;
        }
    }
    return check;
}

ExactMatrix evaluate_word(const Word& w, const Representation& r, Exec exec) {
    return WordEvaluator(r, exec).evaluate(w);
}

ExactMatrix evaluate_ring_element(const GroupRingElement& e, const Representation& r,
                                  Exec exec) {
    WordEvaluator eval(r, exec);
    ExactMatrix m(r.field(), r.dim(), r.dim());
    for (const auto& [c, w] : e.terms())
        m = m + eval.evaluate(w) * FieldElement::from_int(r.field(), c);
    return m;
}

FieldElement det_rho_of_class(const Representation& r, const Word& w, Exec exec) {
    return det(evaluate_word(w, r, exec), exec);
}

} // namespace torsionlab
