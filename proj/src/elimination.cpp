#include "torsionlab/elimination.hpp"

namespace torsionlab {

namespace {
constexpr std::size_t kParallelThreshold = 4096; // element count
}

Exec resolve_exec(Exec e, std::size_t element_count) {
    if (e != Exec::automatic) return e;
    return element_count >= kParallelThreshold ? Exec::parallel : Exec::serial;
}

BareissResult bareiss_eliminate(PolyMatrix& m, Exec exec, bool det_mode) {
    if (det_mode && m.rows != m.cols) throw shape_error("determinant of a non-square matrix");
    exec = resolve_exec(exec, m.rows * m.cols);
    BareissResult res;
    res.last_pivot = Polynomial(Gaussian(1));
    Polynomial prev(Gaussian(1));
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
        std::size_t p = r;
        while (p < m.rows && m.at(p, c).is_zero()) ++p;
        if (p == m.rows) {
            if (det_mode) {
                res.last_pivot = Polynomial{};
                res.rank = r;
                return res;
            }
            continue;
        }
        if (p != r) {
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(r, j));
            res.sign = -res.sign;
        }
        const Polynomial piv = m.at(r, c);
        auto update_row = [&](std::size_t i) {
            const Polynomial head = m.at(i, c);
            for (std::size_t j = c + 1; j < m.cols; ++j)
                m.at(i, j) = (piv * m.at(i, j) - head * m.at(r, j)).exact_div(prev);
            m.at(i, c) = Polynomial{};
        };
        if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
            for (long long i = static_cast<long long>(r) + 1;
                 i < static_cast<long long>(m.rows); ++i)
                update_row(static_cast<std::size_t>(i));
        } else {
            for (std::size_t i = r + 1; i < m.rows; ++i) update_row(i);
        }
        prev = piv;
        res.pivot_cols.push_back(c);
        ++r;
    }
    res.rank = r;
    res.last_pivot = (det_mode && r < m.rows) ? Polynomial{} : prev;
    return res;
}

namespace {

// Clears denominators of each row; returns the polynomial matrix and the
// product of the per-row multipliers (all monic).
std::pair<PolyMatrix, Polynomial> clear_denominators(const ExactMatrix& m) {
    PolyMatrix g(m.rows(), m.cols());
    Polynomial total(Gaussian(1));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Polynomial l(Gaussian(1));
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Polynomial& d = m.at(i, j).den();
            if (d.degree() > 0) l = (l * d).exact_div(poly_gcd(l, d));
        }
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const FieldElement& e = m.at(i, j);
            g.at(i, j) = e.num() * l.exact_div(e.den());
        }
        total = total * l;
    }
    return {std::move(g), std::move(total)};
}

} // namespace

FieldElement det(const ExactMatrix& m, Exec exec) {
    if (!m.is_square()) throw shape_error("determinant of a non-square matrix");
    if (m.rows() == 0) return FieldElement::one(m.descriptor());
    auto [grid, mult] = clear_denominators(m);
    BareissResult r = bareiss_eliminate(grid, exec, true);
    Polynomial d = r.sign < 0 ? -r.last_pivot : r.last_pivot;
    return {m.descriptor(), std::move(d), std::move(mult)};
}

FieldElement det_fraction_gauss(const ExactMatrix& m, Exec exec) {
    if (!m.is_square()) throw shape_error("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return FieldElement::one(m.descriptor());
    exec = resolve_exec(exec, n * n);
    ExactMatrix a = m;
    FieldElement acc = FieldElement::one(m.descriptor());
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a.at(p, c).is_zero()) ++p;
        if (p == n) return FieldElement::zero(m.descriptor());
        if (p != c) {
            a.swap_rows(p, c);
            acc = -acc;
        }
        acc *= a.at(c, c);
        FieldElement inv = a.at(c, c).inverse();
        auto update_row = [&](std::size_t i) {
            FieldElement f = a.at(i, c) * inv;
            if (f.is_zero()) return;
            for (std::size_t j = c + 1; j < n; ++j) a.at(i, j) -= f * a.at(c, j);
        };
        if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
            for (long long i = static_cast<long long>(c) + 1; i < static_cast<long long>(n); ++i)
                update_row(static_cast<std::size_t>(i));
        } else {
            for (std::size_t i = c + 1; i < n; ++i) update_row(i);
        }
    }
    return acc;
}

FieldElement det_cofactor(const ExactMatrix& m) {
    if (!m.is_square()) throw shape_error("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return FieldElement::one(m.descriptor());
    if (n == 1) return m.at(0, 0);
    FieldElement acc = FieldElement::zero(m.descriptor());
    std::vector<std::size_t> rows;
    for (std::size_t i = 1; i < n; ++i) rows.push_back(i);
    for (std::size_t j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        std::vector<std::size_t> cols;
        for (std::size_t k = 0; k < n; ++k)
            if (k != j) cols.push_back(k);
        FieldElement term = m.at(0, j) * det_cofactor(m.select(rows, cols));
        acc += (j % 2 == 0) ? term : -term;
    }
    return acc;
}

std::size_t rank(const ExactMatrix& m, Exec exec) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    auto [grid, mult] = clear_denominators(m);
    (void)mult;
    return bareiss_eliminate(grid, exec, false).rank;
}

RrefResult rref(const ExactMatrix& m, Exec exec) {
    exec = resolve_exec(exec, m.rows() * m.cols());
    RrefResult res{m, {}};
    ExactMatrix& a = res.reduced;
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a.at(p, c).is_zero()) ++p;
        if (p == rows) continue;
        a.swap_rows(p, r);
        FieldElement inv = a.at(r, c).inverse();
        for (std::size_t j = c; j < cols; ++j) a.at(r, j) *= inv;
        auto update_row = [&](std::size_t i) {
            if (i == r) return;
            FieldElement f = a.at(i, c);
            if (f.is_zero()) return;
            for (std::size_t j = c; j < cols; ++j) a.at(i, j) -= f * a.at(r, j);
        };
        if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
            for (long long i = 0; i < static_cast<long long>(rows); ++i)
                update_row(static_cast<std::size_t>(i));
        } else {
            for (std::size_t i = 0; i < rows; ++i) update_row(i);
        }
        res.pivot_cols.push_back(c);
        ++r;
    }
    return res;
}

} // namespace torsionlab
