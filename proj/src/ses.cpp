#include "torsionlab/ses.hpp"

namespace torsionlab {

void ShortExactSequenceOfComplexes::validate(Exec exec) const {
    c0.validate();
    c1.validate();
    c2.validate();
    if (!(c0.field == c1.field) || !(c1.field == c2.field))
        throw validation_error("the three complexes live over different fields");
    const std::size_t n = c1.top_degree();
    if (c0.top_degree() != n || c2.top_degree() != n)
        throw validation_error("the three complexes have different lengths");
    if (inject.size() != n + 1 || project.size() != n + 1)
        throw validation_error("need one inject/project matrix per degree");
    for (std::size_t q = 0; q <= n; ++q) {
        if (inject[q].rows() != c1.dim(q) || inject[q].cols() != c0.dim(q))
            throw validation_error("inject" + std::to_string(q) + " has the wrong shape");
        if (project[q].rows() != c2.dim(q) || project[q].cols() != c1.dim(q))
            throw validation_error("project" + std::to_string(q) + " has the wrong shape");
        if (c1.dim(q) != c0.dim(q) + c2.dim(q))
            throw validation_error("dim C1^" + std::to_string(q) + " != dim C0 + dim C2");
        if (rank(inject[q], exec) != c0.dim(q))
            throw validation_error("inject" + std::to_string(q) + " is not injective");
        if (rank(project[q], exec) != c2.dim(q))
            throw validation_error("project" + std::to_string(q) + " is not surjective");
        if (!(project[q] * inject[q]).is_zero())
            throw validation_error("project o inject != 0 in degree " + std::to_string(q));
    }
    for (std::size_t q = 0; q < n; ++q) {
        if (!(inject[q + 1] * c0.diffs[q] - c1.diffs[q] * inject[q]).is_zero())
            throw validation_error("inject is not a chain map at degree " + std::to_string(q));
        if (!(project[q + 1] * c1.diffs[q] - c2.diffs[q] * project[q]).is_zero())
            throw validation_error("project is not a chain map at degree " + std::to_string(q));
    }
}

namespace {

/* Coordinates of cocycle columns v with respect to chosen representatives:
 * solves [reps | coboundary basis] x = v and keeps the representative block.
 * basis_error when the representatives are unusable. */
ExactMatrix class_coordinates(const CochainComplex& c, std::size_t q, const ExactMatrix& reps,
                              const ExactMatrix& v, Exec exec) {
    ExactMatrix b = q == 0 ? ExactMatrix(c.field, c.dim(0), 0) : image_basis(c.diffs[q - 1], exec);
    ExactMatrix e = hstack(reps, b);
    if (rank(e, exec) != e.cols())
        throw basis_error("representatives in degree " + std::to_string(q) +
                          " are not independent modulo coboundaries");
    ExactMatrix x;
    try {
        x = solve(e, v, exec);
    } catch (const no_solution_error&) {
        throw basis_error("class expression failed in degree " + std::to_string(q) +
                          ": representatives do not span");
    }
    std::vector<std::size_t> top, cols;
    for (std::size_t i = 0; i < reps.cols(); ++i) top.push_back(i);
    for (std::size_t j = 0; j < v.cols(); ++j) cols.push_back(j);
    return x.select(top, cols);
}

void check_bases(const CochainComplex& c, const CohomologyResult& coh, const GradedBases& h) {
    for (std::size_t q = c.top_degree() + 1; q < h.reps.size(); ++q)
        if (h.reps[q].cols() != 0) throw shape_error("cohomology basis beyond the top degree");
    for (std::size_t q = 0; q <= c.top_degree(); ++q) {
        ExactMatrix hq = q < h.reps.size() ? h.reps[q] : ExactMatrix(c.field, c.dim(q), 0);
        if (hq.rows() != c.dim(q) || hq.cols() != coh.h_dims[q])
            throw shape_error("cohomology basis in degree " + std::to_string(q) +
                              " has the wrong shape");
        if (!(c.diff(q) * hq).is_zero())
            throw basis_error("representative in degree " + std::to_string(q) +
                              " is not a cocycle");
    }
}

GradedBases padded(const CochainComplex& c, const GradedBases& h) {
    GradedBases out;
    for (std::size_t q = 0; q <= c.top_degree(); ++q)
        out.reps.push_back(q < h.reps.size() ? h.reps[q] : ExactMatrix(c.field, c.dim(q), 0));
    return out;
}

} // namespace

LongExactSequence long_exact_sequence(const ShortExactSequenceOfComplexes& s,
                                      const GradedBases* given_h0, const GradedBases* given_h1,
                                      const GradedBases* given_h2, Exec exec) {
    const std::size_t n = s.c1.top_degree();
    CohomologyResult coh0 = cohomology(s.c0, exec);
    CohomologyResult coh1 = cohomology(s.c1, exec);
    CohomologyResult coh2 = cohomology(s.c2, exec);
    LongExactSequence out;
    out.h0 = given_h0 ? padded(s.c0, *given_h0) : coh0.bases;
    out.h1 = given_h1 ? padded(s.c1, *given_h1) : coh1.bases;
    out.h2 = given_h2 ? padded(s.c2, *given_h2) : coh2.bases;
    check_bases(s.c0, coh0, out.h0);
    check_bases(s.c1, coh1, out.h1);
    check_bases(s.c2, coh2, out.h2);

    CochainComplex& hes = out.hes;
    hes.field = s.c1.field;
    hes.dims.assign(3 * (n + 1), 0);
    for (std::size_t q = 0; q <= n; ++q) {
        hes.dims[3 * q] = coh0.h_dims[q];
        hes.dims[3 * q + 1] = coh1.h_dims[q];
        hes.dims[3 * q + 2] = coh2.h_dims[q];
    }
    for (std::size_t q = 0; q <= n; ++q) {
        // i*: classes of inject(h0 reps) in h1 coordinates
        hes.diffs.push_back(
            class_coordinates(s.c1, q, out.h1.reps[q], s.inject[q] * out.h0.reps[q], exec));
        // p*: classes of project(h1 reps) in h2 coordinates
        hes.diffs.push_back(
            class_coordinates(s.c2, q, out.h2.reps[q], s.project[q] * out.h1.reps[q], exec));
        // snake: z -> class of i^{-1}( d1 p^{-1} z )
        if (q < n) {
            ExactMatrix u = solve(s.project[q], out.h2.reps[q], exec);
            ExactMatrix w = s.c1.diffs[q] * u;
            ExactMatrix v = solve(s.inject[q + 1], w, exec);
            hes.diffs.push_back(class_coordinates(s.c0, q + 1, out.h0.reps[q + 1], v, exec));
        }
    }
    hes.validate();
    if (!is_acyclic(hes, exec))
        throw internal_error("long exact sequence of a valid short exact sequence is not exact");
    return out;
}

unsigned long fusion_sign_y(const ShortExactSequenceOfComplexes& s, Exec exec) {
    const std::size_t n = s.c1.top_degree();
    LongExactSequence les = long_exact_sequence(s, nullptr, nullptr, nullptr, exec);
    unsigned long y = sign_N(s.c0, exec) + sign_N(s.c1, exec) + sign_N(s.c2, exec);
    auto b = [&](const CochainComplex& c, std::size_t q) -> unsigned long {
        return (q == 0 || q > n) ? 0 : rank(c.diffs[q - 1], exec);
    };
    auto f = [&](std::size_t deg) -> unsigned long {
        return deg == 0 ? 0 : rank(les.hes.diffs[deg - 1], exec);
    };
    for (std::size_t q = 0; q <= n; ++q) {
        const unsigned long b2 = b(s.c2, q), b0next = b(s.c0, q + 1);
        y += f(3 * q + 1) * b2 + b2 * b0next + f(3 * q + 2) * b0next;
    }
    return y;
}

FusionReport fusion_check(const ShortExactSequenceOfComplexes& s, const GradedBases& h0,
                          const GradedBases& h2, Exec exec) {
    s.validate(exec);
    const std::size_t n = s.c1.top_degree();
    FusionReport r;
    LongExactSequence les = long_exact_sequence(s, &h0, nullptr, &h2, exec);
    r.t0 = torsion(s.c0, les.h0, exec);
    r.t1 = torsion(s.c1, les.h1, exec);
    r.t2 = torsion(s.c2, les.h2, exec);
    r.t_les = torsion_acyclic(les.hes, exec);
    r.psi = FieldElement::one(s.c1.field);
    for (std::size_t q = 0; q <= n; ++q) {
        // basis change from the concatenated standard bases of C0^q, C2^q to
        // C1^q: columns are inject(std C0) and a section of project(std C2)
        ExactMatrix section =
            solve(s.project[q], ExactMatrix::identity(s.c1.field, s.c2.dim(q)), exec);
        FieldElement d = det(hstack(s.inject[q], section), exec);
        r.psi *= (q % 2 == 0) ? d : d.inverse();
    }
    r.y = fusion_sign_y(s, exec);
    r.lhs = r.psi * r.t0 * r.t2 * r.t_les;
    if (r.y % 2 != 0) r.lhs = -r.lhs;
    r.rhs = r.t1;
    r.pass = r.lhs == r.rhs;
    return r;
}

ShortExactSequenceOfComplexes random_split_ses(const CochainComplex& c0, const CochainComplex& c2,
                                               Rng& rng) {
    if (!(c0.field == c2.field)) throw shape_error("split construction needs one common field");
    if (c0.dims.size() != c2.dims.size())
        throw shape_error("split construction needs complexes of equal length");
    const FieldDescriptor& dsc = c0.field;
    const std::size_t n = c0.top_degree();

    // solve the chain-map condition d0^{q+1} u^q + u^{q+1} d2^q = 0 for the
    // off-diagonal block u, then take a random integer kernel combination
    std::size_t unknowns = 0;
    std::vector<std::size_t> ubase(n);
    for (std::size_t q = 0; q < n; ++q) {
        ubase[q] = unknowns;
        unknowns += c0.dim(q + 1) * c2.dim(q);
    }
    std::size_t equations = 0;
    for (std::size_t q = 0; q + 1 < n; ++q) equations += c0.dim(q + 2) * c2.dim(q);
    ExactMatrix lin(dsc, equations, unknowns);
    std::size_t ebase = 0;
    for (std::size_t q = 0; q + 1 < n; ++q) {
        for (std::size_t a = 0; a < c0.dim(q + 2); ++a)
            for (std::size_t bcol = 0; bcol < c2.dim(q); ++bcol) {
                const std::size_t row = ebase + a * c2.dim(q) + bcol;
                for (std::size_t m = 0; m < c0.dim(q + 1); ++m)
                    lin.at(row, ubase[q] + m * c2.dim(q) + bcol) += c0.diffs[q + 1].at(a, m);
                for (std::size_t m = 0; m < c2.dim(q + 1); ++m)
                    lin.at(row, ubase[q + 1] + a * c2.dim(q + 1) + m) += c2.diffs[q].at(m, bcol);
            }
        ebase += c0.dim(q + 2) * c2.dim(q);
    }
    ExactMatrix kb = kernel_basis(lin);
    std::uniform_int_distribution<int> coeff(-2, 2);
    ExactMatrix uvec(dsc, unknowns, 1);
    for (std::size_t k = 0; k < kb.cols(); ++k) {
        FieldElement ck = FieldElement::from_int(dsc, coeff(rng));
        for (std::size_t i = 0; i < unknowns; ++i) uvec.at(i, 0) += ck * kb.at(i, k);
    }

    ShortExactSequenceOfComplexes s;
    s.c0 = c0;
    s.c2 = c2;
    s.c1.field = dsc;
    for (std::size_t q = 0; q <= n; ++q) s.c1.dims.push_back(c0.dim(q) + c2.dim(q));
    for (std::size_t q = 0; q < n; ++q) {
        ExactMatrix d(dsc, s.c1.dims[q + 1], s.c1.dims[q]);
        for (std::size_t i = 0; i < c0.dim(q + 1); ++i)
            for (std::size_t j = 0; j < c0.dim(q); ++j) d.at(i, j) = c0.diffs[q].at(i, j);
        for (std::size_t i = 0; i < c2.dim(q + 1); ++i)
            for (std::size_t j = 0; j < c2.dim(q); ++j)
                d.at(c0.dim(q + 1) + i, c0.dim(q) + j) = c2.diffs[q].at(i, j);
        for (std::size_t i = 0; i < c0.dim(q + 1); ++i)
            for (std::size_t j = 0; j < c2.dim(q); ++j)
                d.at(i, c0.dim(q) + j) = uvec.at(ubase[q] + i * c2.dim(q) + j, 0);
        s.c1.diffs.push_back(std::move(d));
    }
    for (std::size_t q = 0; q <= n; ++q) {
        ExactMatrix inj(dsc, s.c1.dims[q], c0.dim(q));
        for (std::size_t i = 0; i < c0.dim(q); ++i) inj.at(i, i) = FieldElement::one(dsc);
        ExactMatrix prj(dsc, c2.dim(q), s.c1.dims[q]);
        for (std::size_t i = 0; i < c2.dim(q); ++i)
            prj.at(i, c0.dim(q) + i) = FieldElement::one(dsc);
        s.inject.push_back(std::move(inj));
        s.project.push_back(std::move(prj));
    }
    return s;
}

} // namespace torsionlab
