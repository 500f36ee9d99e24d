#include "torsionlab/complex.hpp"

namespace torsionlab {

ExactMatrix CochainComplex::diff(std::size_t q) const {
    if (q + 1 < dims.size()) return diffs[q];
    return ExactMatrix(field, 0, dim(q)); // d^n and above are zero maps
}

void CochainComplex::validate() const {
    if (dims.empty()) throw validation_error("complex has no degrees");
    if (diffs.size() + 1 != dims.size())
        throw validation_error("expected " + std::to_string(dims.size() - 1) +
                               " differentials, got " + std::to_string(diffs.size()));
    for (std::size_t q = 0; q + 1 < dims.size(); ++q) {
        if (diffs[q].rows() != dims[q + 1] || diffs[q].cols() != dims[q])
            throw validation_error("differential d" + std::to_string(q) + " has shape " +
                                   std::to_string(diffs[q].rows()) + "x" +
                                   std::to_string(diffs[q].cols()) + ", expected " +
                                   std::to_string(dims[q + 1]) + "x" + std::to_string(dims[q]));
        if (!(diffs[q].descriptor() == field))
            throw validation_error("differential d" + std::to_string(q) +
                                   " lives over the wrong field");
    }
    for (std::size_t q = 0; q + 2 < dims.size(); ++q)
        if (!(diffs[q + 1] * diffs[q]).is_zero())
            throw validation_error("d" + std::to_string(q + 1) + " o d" + std::to_string(q) +
                                   " != 0");
}

CohomologyResult cohomology(const CochainComplex& c, Exec exec) {
    CohomologyResult res;
    const std::size_t n = c.top_degree();
    res.bases.reps.reserve(n + 1);
    for (std::size_t q = 0; q <= n; ++q) {
        ExactMatrix z = kernel_basis(c.diff(q), exec);
        ExactMatrix b = q == 0 ? ExactMatrix(c.field, c.dim(0), 0)
                               : image_basis(c.diffs[q - 1], exec);
        // columns of z completing b to a basis of the cocycles = the non-pivot
        // part of [b | z] relative to b
        RrefResult r = rref(hstack(b, z), exec);
        ExactMatrix reps(c.field, c.dim(q), r.pivot_cols.size() >= b.cols()
                                                ? r.pivot_cols.size() - b.cols()
                                                : 0);
        std::size_t k = 0;
        for (std::size_t p : r.pivot_cols) {
            if (p < b.cols()) continue;
            for (std::size_t i = 0; i < c.dim(q); ++i)
                reps.at(i, k) = z.at(i, p - b.cols());
            ++k;
        }
        res.h_dims.push_back(reps.cols());
        res.bases.reps.push_back(std::move(reps));
    }
    return res;
}

bool is_acyclic(const CochainComplex& c, Exec exec) {
    for (std::size_t d : cohomology(c, exec).h_dims)
        if (d != 0) return false;
    return true;
}

unsigned long sign_N(const std::vector<std::size_t>& c_dims,
                     const std::vector<std::size_t>& h_dims) {
    unsigned long n = 0;
    const std::size_t top = std::max(c_dims.size(), h_dims.size());
    for (std::size_t q = 0; q < top; ++q) {
        unsigned long alpha = 0, beta = 0;
        for (std::size_t j = q; j < c_dims.size(); ++j) alpha += c_dims[j];
        for (std::size_t j = q; j < h_dims.size(); ++j) beta += h_dims[j];
        n += alpha * beta;
    }
    return n;
}

unsigned long sign_N(const CochainComplex& c, Exec exec) {
    return sign_N(c.dims, cohomology(c, exec).h_dims);
}

FieldElement torsion(const CochainComplex& c, const GradedBases& h, Exec exec) {
    const std::size_t n = c.top_degree();
    for (std::size_t q = n + 1; q < h.reps.size(); ++q)
        if (h.reps[q].cols() != 0) throw shape_error("cohomology basis beyond the top degree");

    CohomologyResult coh = cohomology(c, exec);
    std::vector<ExactMatrix> b(n + 2), lifts(n + 1);
    for (std::size_t q = 0; q <= n; ++q)
        b[q] = q == 0 ? ExactMatrix(c.field, c.dim(0), 0) : image_basis(c.diffs[q - 1], exec);
    b[n + 1] = ExactMatrix(c.field, 0, 0);
    for (std::size_t q = 0; q <= n; ++q)
        lifts[q] = q == n ? ExactMatrix(c.field, c.dim(n), 0)
                          : solve(c.diffs[q], b[q + 1], exec);

    FieldElement result = FieldElement::one(c.field);
    for (std::size_t q = 0; q <= n; ++q) {
        ExactMatrix hq = q < h.reps.size() ? h.reps[q] : ExactMatrix(c.field, c.dim(q), 0);
        if (hq.rows() != c.dim(q) || hq.cols() != coh.h_dims[q])
            throw shape_error("cohomology basis in degree " + std::to_string(q) + " has shape " +
                              std::to_string(hq.rows()) + "x" + std::to_string(hq.cols()) +
                              ", expected " + std::to_string(c.dim(q)) + "x" +
                              std::to_string(coh.h_dims[q]));
        if (!(c.diff(q) * hq).is_zero())
            throw basis_error("representative in degree " + std::to_string(q) +
                              " is not a cocycle");
        ExactMatrix w = hstack(hstack(b[q], hq), lifts[q]);
        if (!w.is_square()) throw internal_error("torsion base-change matrix is not square");
        FieldElement dw = det(w, exec);
        if (dw.is_zero())
            throw basis_error("representatives in degree " + std::to_string(q) +
                              " do not form a basis of cohomology");
        result *= (q % 2 == 0) ? dw : dw.inverse();
    }
    if (sign_N(c.dims, coh.h_dims) % 2 != 0) result = -result;
    return result;
}

FieldElement torsion_acyclic(const CochainComplex& c, Exec exec) {
    CohomologyResult coh = cohomology(c, exec);
    for (std::size_t d : coh.h_dims)
        if (d != 0) throw not_acyclic_error(coh.h_dims);
    GradedBases empty;
    for (std::size_t q = 0; q <= c.top_degree(); ++q)
        empty.reps.emplace_back(c.field, c.dim(q), 0);
    return torsion(c, empty, exec);
}

CochainComplex specialize(const CochainComplex& c, const Gaussian& point) {
    CochainComplex r;
    r.field = c.field.specialized();
    r.dims = c.dims;
    for (const auto& d : c.diffs) r.diffs.push_back(d.evaluated_at(point));
    return r;
}

} // namespace torsionlab
