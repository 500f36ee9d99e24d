#include "torsionlab/tau.hpp"

namespace torsionlab {

namespace {

// Tail alternating sums s_0..s_n (s_n = 0) or nullopt when inadmissible.
std::optional<std::vector<long>> tail_sums(const std::vector<std::size_t>& k) {
    if (k.empty()) return std::nullopt;
    const std::size_t n = k.size() - 1;
    std::vector<long> s(k.size());
    s[n] = 0;
    for (std::size_t q = n; q-- > 0;) s[q] = static_cast<long>(k[q + 1]) - s[q + 1];
    if (s[0] != static_cast<long>(k[0])) return std::nullopt;
    for (long v : s)
        if (v < 0) return std::nullopt;
    return s;
}

} // namespace

bool ShapeVector::is_admissible() const {
    return tail_sums(k).has_value();
}

std::vector<std::size_t> ShapeVector::tau_sizes() const {
    auto s = tail_sums(k);
    if (!s) throw shape_error("shape " + str() + " is not admissible");
    return std::vector<std::size_t>(s->begin(), s->end());
}

std::string ShapeVector::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < k.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(k[i]);
    }
    return out + ")";
}

std::string TauChain::str() const {
    std::string out;
    for (const auto& a : alpha) {
        out += "{";
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(a[i]);
        }
        out += "}";
    }
    return out;
}

std::vector<TauChain> enumerate_tau_chains(const ShapeVector& shape) {
    std::vector<std::size_t> sizes = shape.tau_sizes();
    // all size-s sorted subsets of {1..k}, lexicographic
    auto subsets = [](std::size_t k, std::size_t s) {
        std::vector<std::vector<std::size_t>> out;
        std::vector<std::size_t> cur(s);
        for (std::size_t i = 0; i < s; ++i) cur[i] = i + 1;
        if (s > k) return out;
        while (true) {
            out.push_back(cur);
            std::size_t i = s;
            while (i-- > 0) {
                if (cur[i] < k - (s - 1 - i)) {
                    ++cur[i];
                    for (std::size_t j = i + 1; j < s; ++j) cur[j] = cur[j - 1] + 1;
                    break;
                }
                if (i == 0) return out;
            }
            if (s == 0) return out; // single empty subset
        }
    };
    std::vector<std::vector<std::vector<std::size_t>>> choices;
    for (std::size_t q = 0; q < shape.k.size(); ++q)
        choices.push_back(subsets(shape.k[q], sizes[q]));
    std::vector<TauChain> result;
    std::vector<std::size_t> idx(choices.size(), 0);
    while (true) {
        TauChain t;
        for (std::size_t q = 0; q < choices.size(); ++q) t.alpha.push_back(choices[q][idx[q]]);
        result.push_back(std::move(t));
        // odometer with degree 0 most significant -> lexicographic output
        std::size_t q = choices.size();
        while (q-- > 0) {
            if (++idx[q] < choices[q].size()) break;
            idx[q] = 0;
            if (q == 0) return result;
        }
    }
}

std::optional<FieldElement> unsigned_F_alpha(const CochainComplex& c, const TauChain& chain) {
    const std::size_t n = c.top_degree();
    if (chain.alpha.size() != n + 1) throw shape_error("tau-chain degree count mismatch");
    ShapeVector shape{c.dims};
    std::vector<std::size_t> sizes = shape.tau_sizes();
    for (std::size_t q = 0; q <= n; ++q) {
        if (chain.alpha[q].size() != sizes[q])
            throw shape_error("tau-chain subset size mismatch in degree " + std::to_string(q));
        for (std::size_t v : chain.alpha[q])
            if (v < 1 || v > c.dim(q)) throw shape_error("tau-chain index out of range");
    }
    FieldElement result = FieldElement::one(c.field);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::size_t> cols;
        for (std::size_t v : chain.alpha[i]) cols.push_back(v - 1);
        std::vector<std::size_t> rows;
        for (std::size_t r = 1; r <= c.dim(i + 1); ++r) {
            bool in_next = false;
            for (std::size_t v : chain.alpha[i + 1])
                if (v == r) { in_next = true; break; }
            if (!in_next) rows.push_back(r - 1);
        }
        FieldElement d = det(c.diffs[i].select(rows, cols));
        if (d.is_zero()) return std::nullopt;
        result *= (i % 2 == 0) ? d.inverse() : d; // exponent (-1)^{i+1}
    }
    return result;
}

EpsilonCache& EpsilonCache::global() {
    static EpsilonCache cache;
    return cache;
}

int EpsilonCache::get(const ShapeVector& shape, const TauChain& chain) {
    const auto key = std::make_pair(shape.k, chain);
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = values_.find(key);
        if (it != values_.end()) return it->second;
    }
    // Calibration: on an acyclic complex the signed functional equals the
    // torsion, so the sign is torsion / unsigned_F at any nondegenerate point.
    Rng rng = rng_from_tag("epsilon|" + shape.str() + "|" + chain.str());
    int sign = 0;
    for (int attempt = 0; attempt < 1000; ++attempt) {
        CochainComplex c = random_acyclic_complex(shape.k, rng);
        std::optional<FieldElement> f = unsigned_F_alpha(c, chain);
        if (!f) continue;
        FieldElement ratio = torsion_acyclic(c) / *f;
        if (ratio == FieldElement::one(ratio.descriptor()))
            sign = 1;
        else if (ratio == -FieldElement::one(ratio.descriptor()))
            sign = -1;
        else
            throw internal_error("epsilon calibration ratio " + ratio.str() + " is not a sign");
        break;
    }
    if (sign == 0)
        throw internal_error("epsilon calibration found no nondegenerate sample for " +
                             shape.str() + " " + chain.str());
    std::lock_guard<std::mutex> lock(mu_);
    auto [it, inserted] = values_.emplace(key, sign);
    if (!inserted && it->second != sign) throw internal_error("epsilon cache disagreement");
    return it->second;
}

int epsilon_alpha(const ShapeVector& shape, const TauChain& chain) {
    return EpsilonCache::global().get(shape, chain);
}

FieldElement F_alpha(const CochainComplex& c, const TauChain& chain) {
    std::optional<FieldElement> f = unsigned_F_alpha(c, chain);
    if (!f)
        throw degenerate_error("tau-chain " + chain.str() + " is degenerate at this differential");
    int eps = epsilon_alpha(ShapeVector{c.dims}, chain);
    return eps < 0 ? -*f : *f;
}

unsigned long dimension_Dac(const ShapeVector& shape) {
    std::vector<std::size_t> s = shape.tau_sizes();
    unsigned long dim = 0;
    for (std::size_t i = 1; i < shape.k.size(); ++i)
        dim += static_cast<unsigned long>(s[i - 1]) * shape.k[i];
    return dim;
}

DimensionCheck verify_dimension(const ShapeVector& shape, std::size_t samples, Rng& rng) {
    DimensionCheck out;
    out.formula = dimension_Dac(shape);
    out.samples = samples;
    out.pass = true;
    const std::vector<std::size_t>& k = shape.k;
    const std::size_t n = k.size() - 1;
    const FieldDescriptor d{BaseField::rationals, ""};
    std::size_t unknowns = 0;
    std::vector<std::size_t> ubase(n);
    for (std::size_t i = 0; i < n; ++i) {
        ubase[i] = unknowns;
        unknowns += k[i] * k[i + 1];
    }
    std::size_t equations = 0;
    for (std::size_t i = 0; i + 1 < n; ++i) equations += k[i] * k[i + 2];

    for (std::size_t sample = 0; sample < samples; ++sample) {
        CochainComplex c = random_acyclic_complex(k, rng);
        // linearization of d o d = 0 at c: (delta d) -> d^{i+1} delta d^i + delta d^{i+1} d^i
        ExactMatrix lin(d, equations, unknowns);
        std::size_t ebase = 0;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            for (std::size_t a = 0; a < k[i + 2]; ++a)
                for (std::size_t b = 0; b < k[i]; ++b) {
                    const std::size_t row = ebase + a * k[i] + b;
                    for (std::size_t m = 0; m < k[i + 1]; ++m) {
                        // coefficient of (delta d^i)_{m b} is d^{i+1}_{a m}
                        lin.at(row, ubase[i] + m * k[i] + b) += c.diffs[i + 1].at(a, m);
                        // coefficient of (delta d^{i+1})_{a m} is d^i_{m b}
                        lin.at(row, ubase[i + 1] + a * k[i + 1] + m) += c.diffs[i].at(m, b);
                    }
                }
            ebase += k[i] * k[i + 2];
        }
        out.measured = unknowns - rank(lin);
        if (out.measured != out.formula) out.pass = false;
    }
    return out;
}

} // namespace torsionlab
