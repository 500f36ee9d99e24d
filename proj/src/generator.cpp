#include "torsionlab/generator.hpp"

namespace torsionlab {

Rng rng_from_tag(const std::string& tag) {
    return Rng(fnv1a(tag));
}

UnimodularPair random_unimodular(const FieldDescriptor& d, std::size_t n, Rng& rng,
                                 std::size_t passes) {
    UnimodularPair u{ExactMatrix::identity(d, n), ExactMatrix::identity(d, n)};
    if (n < 1) return u;
    std::uniform_int_distribution<std::size_t> row(0, n - 1);
    std::uniform_int_distribution<int> coeff(1, 3), flip(0, 1), kind(0, 19);
    for (std::size_t step = 0; step < passes * n; ++step) {
        std::size_t j = row(rng), l = row(rng);
        int k = kind(rng);
        if (k < 14 && n > 1) {
            while (l == j) l = row(rng);
            int c = coeff(rng) * (flip(rng) ? 1 : -1);
            FieldElement fc = FieldElement::from_int(d, c);
            for (std::size_t t = 0; t < n; ++t) {
                u.g.at(j, t) += fc * u.g.at(l, t);       // row_j += c row_l
                u.g_inv.at(t, l) -= fc * u.g_inv.at(t, j); // col_l -= c col_j
            }
        } else if (k < 17 && n > 1) {
            u.g.swap_rows(j, l);
            for (std::size_t t = 0; t < n; ++t) std::swap(u.g_inv.at(t, j), u.g_inv.at(t, l));
        } else {
            for (std::size_t t = 0; t < n; ++t) {
                u.g.at(j, t) = -u.g.at(j, t);
                u.g_inv.at(t, j) = -u.g_inv.at(t, j);
            }
        }
    }
    return u;
}

CochainComplex model_complex(const FieldDescriptor& d, const std::vector<std::size_t>& dims,
                             const std::vector<std::size_t>& ranks) {
    if (ranks.size() + 1 != dims.size()) throw shape_error("need one rank per differential");
    for (std::size_t q = 0; q + 1 < dims.size(); ++q) {
        std::size_t below = q == 0 ? 0 : ranks[q - 1];
        if (below + ranks[q] > dims[q] || ranks[q] > dims[q + 1])
            throw shape_error("ranks incompatible with dims");
    }
    CochainComplex c;
    c.field = d;
    c.dims = dims;
    for (std::size_t q = 0; q + 1 < dims.size(); ++q) {
        ExactMatrix m(d, dims[q + 1], dims[q]);
        for (std::size_t a = 0; a < ranks[q]; ++a)
            m.at(a, dims[q] - ranks[q] + a) = FieldElement::one(d);
        c.diffs.push_back(std::move(m));
    }
    return c;
}

CochainComplex random_complex(const FieldDescriptor& d, const std::vector<std::size_t>& dims,
                              const std::vector<std::size_t>& ranks, Rng& rng,
                              std::size_t passes) {
    CochainComplex c = model_complex(d, dims, ranks);
    std::vector<UnimodularPair> g;
    g.reserve(dims.size());
    for (std::size_t k : dims) g.push_back(random_unimodular(d, k, rng, passes));
    for (std::size_t q = 0; q + 1 < dims.size(); ++q)
        c.diffs[q] = g[q + 1].g * c.diffs[q] * g[q].g_inv;
    return c;
}

std::vector<std::size_t> acyclic_ranks(const std::vector<std::size_t>& dims) {
    if (dims.empty()) throw shape_error("empty shape");
    const std::size_t n = dims.size() - 1;
    std::vector<long> s(dims.size());
    s[n] = 0;
    for (std::size_t q = n; q-- > 0;) s[q] = static_cast<long>(dims[q + 1]) - s[q + 1];
    if (s[0] != static_cast<long>(dims[0]))
        throw shape_error("shape fails the alternating-sum condition");
    for (long v : s)
        if (v < 0) throw shape_error("shape fails a partial alternating-sum condition");
    return std::vector<std::size_t>(s.begin(), s.end() - 1);
}

CochainComplex random_acyclic_complex(const std::vector<std::size_t>& dims, Rng& rng) {
    const FieldDescriptor d{BaseField::rationals, ""};
    std::vector<std::size_t> ranks = acyclic_ranks(dims);
    if (dims.size() == 2) {
        // two-term complexes: entrywise-uniform integer differential in
        // [-3,3], rejection-sampled for invertibility
        std::uniform_int_distribution<int> entry(-3, 3);
        const std::size_t k = dims[0];
        CochainComplex c;
        c.field = d;
        c.dims = dims;
        while (true) {
            ExactMatrix m(d, k, k);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j)
                    m.at(i, j) = FieldElement::from_int(d, entry(rng));
            if (k == 0 || !det(m).is_zero()) {
                c.diffs = {std::move(m)};
                return c;
            }
        }
    }
    return random_complex(d, dims, ranks, rng);
}

} // namespace torsionlab
