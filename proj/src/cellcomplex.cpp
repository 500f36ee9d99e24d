#include "torsionlab/cellcomplex.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "torsionlab/errors.hpp"

namespace torsionlab {

std::size_t EquivariantCellComplex::total_cells() const {
    return std::accumulate(cells.begin(), cells.end(), std::size_t{0});
}

std::vector<std::size_t> EquivariantCellComplex::degree_order(std::size_t q) const {
    std::vector<std::size_t> order(q < cells.size() ? cells[q] : 0);
    std::iota(order.begin(), order.end(), std::size_t{0});
    if (ordering.empty()) return order;
    // position of each global cell index in the ordering permutation
    std::vector<std::size_t> pos(total_cells());
    for (std::size_t k = 0; k < ordering.size(); ++k) pos[ordering[k]] = k;
    std::size_t offset = 0;
    for (std::size_t p = 0; p < q; ++p) offset += cells[p];
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return pos[offset + a] < pos[offset + b]; });
    return order;
}

void EquivariantCellComplex::validate() const {
    group.validate();
    const std::size_t n = top_degree();
    if (cells.empty()) throw validation_error("cell complex needs at least one degree");
    if (boundaries.size() != n)
        throw validation_error("need one boundary matrix per positive degree");
    if (lifts.size() != cells.size()) throw validation_error("need lift words per degree");
    for (std::size_t q = 0; q < cells.size(); ++q)
        if (lifts[q].size() != cells[q])
            throw validation_error("need one lift word per cell");
    for (std::size_t q = 0; q < n; ++q)
        if (boundaries[q].n_rows != cells[q] || boundaries[q].n_cols != cells[q + 1])
            throw validation_error("boundary matrix shape mismatch");
    if (!names.empty()) {
        if (names.size() != cells.size()) throw validation_error("names must cover all degrees");
        std::vector<std::string> all;
        for (std::size_t q = 0; q < names.size(); ++q) {
            if (names[q].size() != cells[q])
                throw validation_error("need one name per cell when names are given");
            all.insert(all.end(), names[q].begin(), names[q].end());
        }
        std::sort(all.begin(), all.end());
        if (std::adjacent_find(all.begin(), all.end()) != all.end())
            throw validation_error("cell names must be unique");
    }
    if (!ordering.empty()) {
        std::vector<std::size_t> sorted = ordering;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t k = 0; k < sorted.size(); ++k)
            if (k >= total_cells() || sorted[k] != k)
                throw validation_error("ordering must be a permutation of all cells");
        if (sorted.size() != total_cells())
            throw validation_error("ordering must be a permutation of all cells");
    }
    auto check_word = [&](const Word& w) {
        for (int l : w.letters())
            if (static_cast<std::size_t>(std::abs(l)) > group.rank())
                throw validation_error("cell complex word uses an undeclared generator");
    };
    for (const auto& per_degree : lifts)
        for (const Word& w : per_degree) check_word(w);
    for (const RingMatrix& b : boundaries)
        for (const GroupRingElement& e : b.entries)
            for (const auto& [c, w] : e.terms()) check_word(w);
    /* Boundary-of-boundary check.  The composite of left-module boundary maps
     * has (mu, sigma)-entry sum_tau e_{q+2}(tau, sigma) * e_{q+1}(mu, tau) --
     * higher boundary's entry on the LEFT (the ring is noncommutative).  The
     * composite vanishes in the group ring of the presented group; without a
     * word-problem solver that is only decidable symbolically when there are
     * no relations, so with relations the check is deferred to assembly time
     * (d o d = 0 after representation evaluation). */
    if (group.relations.empty()) {
        for (std::size_t q = 0; q + 1 < n; ++q) {
            const RingMatrix& a = boundaries[q];
            const RingMatrix& b = boundaries[q + 1];
            for (std::size_t mu = 0; mu < a.n_rows; ++mu)
                for (std::size_t sigma = 0; sigma < b.n_cols; ++sigma) {
                    GroupRingElement s;
                    for (std::size_t tau = 0; tau < a.n_cols; ++tau)
                        s = s + b.at(tau, sigma) * a.at(mu, tau);
                    if (!s.is_zero())
                        throw validation_error(
                            "boundary of boundary is nonzero over the group ring");
                }
        }
    }
}

std::pair<std::size_t, std::size_t> EquivariantCellComplex::find_cell(
    const std::string& token) const {
    for (std::size_t q = 0; q < names.size(); ++q)
        for (std::size_t i = 0; i < names[q].size(); ++i)
            if (names[q][i] == token) return {q, i};
    const std::size_t colon = token.find(':');
    if (colon != std::string::npos) {
        try {
            std::size_t degree = std::stoul(token.substr(0, colon));
            std::size_t index = std::stoul(token.substr(colon + 1));
            if (degree < cells.size() && index < cells[degree]) return {degree, index};
        } catch (const std::exception&) {
            // fall through to the error below
        }
    }
    throw validation_error("unknown cell '" + token + "'");
}

namespace {

void check_compatible(const EquivariantCellComplex& x, const Representation& r, Exec exec) {
    if (r.presentation.generators != x.group.generators)
        throw validation_error("representation is over a different generator list");
    Representation over_group{x.group, r.images};
    RepCheck check = validate_representation(over_group, exec);
    if (!check.ok) {
        if (check.singular_generator != RepCheck::none)
            throw validation_error("generator image is singular");
        throw validation_error("representation violates a group relation");
    }
}

} // namespace

CochainComplex assemble_twisted_cochain(const EquivariantCellComplex& x,
                                        const Representation& r, Exec exec) {
    x.validate();
    check_compatible(x, r, exec);
    const std::size_t n = x.top_degree();
    const std::size_t d = r.dim();
    CochainComplex c;
    c.field = r.field();
    c.dims.resize(n + 1);
    for (std::size_t q = 0; q <= n; ++q) c.dims[q] = x.cells[q] * d;
    for (std::size_t q = 0; q < n; ++q) {
        const std::vector<std::size_t> low = x.degree_order(q);
        const std::vector<std::size_t> high = x.degree_order(q + 1);
        /* d^q in block form: block (sigma, tau) -- sigma a (q+1)-cell row
         * block, tau a q-cell column block -- is the representation of
         * lift(sigma)^{-1} * e(tau, sigma) * lift(tau).  This is a BLOCK
         * transpose of the boundary pattern with the rho-image blocks left
         * untransposed; together with the lift placement it is the unique
         * arrangement that keeps d o d = 0 for higher-dimensional
         * representations (the group ring is noncommutative). */
        ExactMatrix diff(c.field, x.cells[q + 1] * d, x.cells[q] * d);
        for (std::size_t a = 0; a < high.size(); ++a) {
            const Word conj_left = x.lifts[q + 1][high[a]].inverse();
            for (std::size_t b = 0; b < low.size(); ++b) {
                GroupRingElement e = x.boundaries[q].at(low[b], high[a]);
                e = GroupRingElement(1, conj_left) * e *
                    GroupRingElement(1, x.lifts[q][low[b]]);
                ExactMatrix block = evaluate_ring_element(e, r, exec);
                for (std::size_t i = 0; i < d; ++i)
                    for (std::size_t j = 0; j < d; ++j)
                        diff.at(a * d + i, b * d + j) = block.at(i, j);
            }
        }
        c.diffs.push_back(diff);
    }
    c.validate();
    return c;
}

CochainComplex untwisted_complex(const EquivariantCellComplex& x) {
    x.validate();
    const FieldDescriptor rationals{BaseField::rationals, ""};
    const std::size_t n = x.top_degree();
    CochainComplex c;
    c.field = rationals;
    c.dims = x.cells;
    for (std::size_t q = 0; q < n; ++q) {
        const std::vector<std::size_t> rows = x.degree_order(q);
        const std::vector<std::size_t> cols = x.degree_order(q + 1);
        ExactMatrix big(rationals, x.cells[q], x.cells[q + 1]);
        for (std::size_t a = 0; a < rows.size(); ++a)
            for (std::size_t b = 0; b < cols.size(); ++b)
                big.at(a, b) = FieldElement::from_int(
                    rationals, x.boundaries[q].at(rows[a], cols[b]).augmentation());
        c.diffs.push_back(big.transposed());
    }
    c.validate();
    return c;
}

int untwisted_orientation_sign(const EquivariantCellComplex& x,
                               const CohomologyOrientation& o, Exec exec) {
    try {
        return torsion(untwisted_complex(x), o.bases, exec).sign();
    } catch (const shape_error& e) {
        // wrong basis dimensions are an orientation-data problem here
        throw basis_error(e.what());
    }
}

FieldElement milnor_turaev_torsion(const EquivariantCellComplex& x, const Representation& r,
                                   const CohomologyOrientation& o, Exec exec) {
    CochainComplex twisted = assemble_twisted_cochain(x, r, exec);
    FieldElement t = torsion_acyclic(twisted, exec);
    FieldElement value = t.inverse();
    const int s = o.sign * untwisted_orientation_sign(x, o, exec);
    if (s < 0 && r.dim() % 2 == 1) value = -value;
    return value;
}

EquivariantCellComplex shift_euler(const EquivariantCellComplex& x, std::size_t degree,
                                   std::size_t index, const Word& w) {
    if (degree >= x.cells.size() || index >= x.cells[degree])
        throw validation_error("cell index out of range");
    EquivariantCellComplex y = x;
    y.lifts[degree][index] = w * y.lifts[degree][index];
    return y;
}

double argument_invariant(const FieldElement& v, ArgModulus modulus) {
    if (v.is_zero()) throw domain_error("argument of zero is undefined");
    if (!v.is_constant())
        throw domain_error("argument needs a constant scalar; specialize first");
    const Gaussian c = v.constant_value();
    const double re = c.re.get_d();
    const double im = c.im.get_d();
    double theta = std::atan2(im, re); // in (-pi, pi]
    const double mod = modulus == ArgModulus::pi ? M_PI : 2 * M_PI;
    if (theta < 0) theta += mod;
    if (theta >= mod) theta -= mod; // theta == pi under the mod-pi reduction
    return theta;
}

} // namespace torsionlab
