#include "torsionlab/linalg.hpp"

namespace torsionlab {

ExactMatrix kernel_basis(const ExactMatrix& m, Exec exec) {
    RrefResult r = rref(m, exec);
    const std::size_t n = m.cols();
    std::vector<std::size_t> free_cols;
    {
        std::size_t next = 0;
        for (std::size_t c = 0; c < n; ++c) {
            if (next < r.pivot_cols.size() && r.pivot_cols[next] == c)
                ++next;
            else
                free_cols.push_back(c);
        }
    }
    ExactMatrix basis(m.descriptor(), n, free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        const std::size_t f = free_cols[k];
        basis.at(f, k) = FieldElement::one(m.descriptor());
        for (std::size_t p = 0; p < r.pivot_cols.size(); ++p)
            basis.at(r.pivot_cols[p], k) = -r.reduced.at(p, f);
        // normalize: first nonzero entry scaled to one
        for (std::size_t i = 0; i < n; ++i) {
            if (basis.at(i, k).is_zero()) continue;
            FieldElement inv = basis.at(i, k).inverse();
            for (std::size_t j = i; j < n; ++j) basis.at(j, k) *= inv;
            break;
        }
    }
    return basis;
}

ExactMatrix image_basis(const ExactMatrix& m, Exec exec) {
    RrefResult r = rref(m.transposed(), exec);
    ExactMatrix basis(m.descriptor(), m.rows(), r.pivot_cols.size());
    for (std::size_t k = 0; k < r.pivot_cols.size(); ++k)
        for (std::size_t j = 0; j < m.rows(); ++j) basis.at(j, k) = r.reduced.at(k, j);
    return basis;
}

ExactMatrix solve(const ExactMatrix& m, const ExactMatrix& b, Exec exec) {
    if (b.rows() != m.rows()) throw shape_error("solve: right-hand side row mismatch");
    RrefResult r = rref(hstack(m, b), exec);
    for (std::size_t c : r.pivot_cols)
        if (c >= m.cols())
            throw no_solution_error("right-hand-side column " + std::to_string(c - m.cols()) +
                                    " is not in the image");
    ExactMatrix x(m.descriptor(), m.cols(), b.cols());
    for (std::size_t p = 0; p < r.pivot_cols.size(); ++p)
        for (std::size_t c = 0; c < b.cols(); ++c)
            x.at(r.pivot_cols[p], c) = r.reduced.at(p, m.cols() + c);
    return x;
}

ExactMatrix invert(const ExactMatrix& m, Exec exec) {
    if (!m.is_square()) throw shape_error("inverse of a non-square matrix");
    if (rank(m, exec) != m.rows()) throw domain_error("matrix is singular");
    return solve(m, ExactMatrix::identity(m.descriptor(), m.rows()), exec);
}

} // namespace torsionlab
