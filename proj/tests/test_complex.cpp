#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "torsionlab/generator.hpp"

using namespace torsionlab;

namespace {

const FieldDescriptor QQ{BaseField::rationals, ""};

FieldElement Q(long num, long den = 1) {
    return FieldElement::constant(QQ, Gaussian(Rational(num, den)));
}

ExactMatrix M(std::size_t r, std::size_t c, std::vector<long> e) {
    return ExactMatrix::from_ints(QQ, r, c, e);
}

// 0 -> Q -> 0 -> ... with a single nonzero map [5]
CochainComplex two_term_5() {
    CochainComplex c;
    c.field = QQ;
    c.dims = {1, 1};
    c.diffs = {M(1, 1, {5})};
    return c;
}

// dims (1,2,1) with d0 = (2,3)^T, d1 = (3,-2): acyclic
CochainComplex three_term() {
    CochainComplex c;
    c.field = QQ;
    c.dims = {1, 2, 1};
    c.diffs = {M(2, 1, {2, 3}), M(1, 2, {3, -2})};
    return c;
}

// circle with one vertex and one edge, untwisted: zero differential
CochainComplex circle_untwisted() {
    CochainComplex c;
    c.field = QQ;
    c.dims = {1, 1};
    c.diffs = {M(1, 1, {0})};
    return c;
}

GradedBases empty_bases(const CochainComplex& c) {
    GradedBases h;
    for (std::size_t q = 0; q <= c.top_degree(); ++q) h.reps.emplace_back(c.field, c.dim(q), 0);
    return h;
}

// Alternate torsion path with re-randomized internal choices: scrambled
// coboundary bases and lifts shifted by random kernel elements.  Used as the
// invariance oracle against the deterministic implementation.
FieldElement torsion_random_choices(const CochainComplex& c, const GradedBases& h, Rng& rng) {
    const std::size_t n = c.top_degree();
    CohomologyResult coh = cohomology(c);
    std::vector<ExactMatrix> b(n + 1), lifts(n + 1);
    for (std::size_t q = 0; q <= n; ++q) {
        ExactMatrix e = q == 0 ? ExactMatrix(c.field, c.dim(0), 0) : image_basis(c.diffs[q - 1]);
        b[q] = e * random_unimodular(c.field, e.cols(), rng).g; // random coboundary basis
    }
    for (std::size_t q = 0; q < n; ++q) {
        lifts[q] = solve(c.diffs[q], b[q + 1]);
        ExactMatrix k = kernel_basis(c.diffs[q]);
        if (k.cols() > 0) { // shift every lift by a random kernel element
            std::uniform_int_distribution<int> coeff(-2, 2);
            ExactMatrix mix(c.field, k.cols(), lifts[q].cols());
            for (std::size_t i = 0; i < mix.rows(); ++i)
                for (std::size_t j = 0; j < mix.cols(); ++j)
                    mix.at(i, j) = FieldElement::from_int(c.field, coeff(rng));
            lifts[q] = lifts[q] + k * mix;
        }
    }
    lifts[n] = ExactMatrix(c.field, c.dim(n), 0);
    FieldElement result = FieldElement::one(c.field);
    for (std::size_t q = 0; q <= n; ++q) {
        ExactMatrix hq = q < h.reps.size() ? h.reps[q] : ExactMatrix(c.field, c.dim(q), 0);
        FieldElement dw = det(hstack(hstack(b[q], hq), lifts[q]));
        result *= (q % 2 == 0) ? dw : dw.inverse();
    }
    if (sign_N(c.dims, coh.h_dims) % 2 != 0) result = -result;
    return result;
}

} // namespace

TEST_CASE("validate catches shape and d o d violations") {
    CochainComplex c = three_term();
    c.validate();
    c.diffs[1] = M(1, 2, {3, -1});
    CHECK_THROWS_AS(c.validate(), validation_error);
    c.diffs[1] = M(2, 2, {3, -2, 0, 0});
    CHECK_THROWS_AS(c.validate(), validation_error);
    c = three_term();
    c.diffs.pop_back();
    CHECK_THROWS_AS(c.validate(), validation_error);
}

TEST_CASE("cohomology dimensions") {
    CHECK(cohomology(two_term_5()).h_dims == std::vector<std::size_t>{0, 0});
    CHECK(cohomology(three_term()).h_dims == std::vector<std::size_t>{0, 0, 0});
    CHECK(cohomology(circle_untwisted()).h_dims == std::vector<std::size_t>{1, 1});
    // zero complex in three degrees
    CochainComplex z;
    z.field = QQ;
    z.dims = {2, 3, 1};
    z.diffs = {ExactMatrix(QQ, 3, 2), ExactMatrix(QQ, 1, 3)};
    CHECK(cohomology(z).h_dims == std::vector<std::size_t>{2, 3, 1});
    CHECK(is_acyclic(three_term()));
    CHECK(!is_acyclic(circle_untwisted()));
    // representatives are cocycles and descend to a basis
    CohomologyResult coh = cohomology(circle_untwisted());
    CHECK(coh.bases.reps[0].cols() == 1);
    CHECK(coh.bases.reps[0].at(0, 0) == Q(1));
}

TEST_CASE("sign exponent N") {
    // acyclic shapes have N = sum alpha_q * 0 = 0
    CHECK(sign_N(two_term_5()) == 0);
    // untwisted circle: alpha = (2,1), beta = (2,1) -> N = 4 + 1 = 5
    CHECK(sign_N(circle_untwisted()) == 5);
    CHECK(sign_N({1, 1}, {1, 1}) == 5);
    CHECK(sign_N({1, 2, 1}, {0, 0, 0}) == 0);
    CHECK(sign_N({2, 2}, {1, 1}) == 4 * 2 + 2 * 1);
}

TEST_CASE("torsion of acyclic examples") {
    CHECK(torsion_acyclic(two_term_5()) == Q(1, 5));
    CHECK(torsion_acyclic(three_term()) == Q(-1));
    CHECK(torsion(two_term_5(), empty_bases(two_term_5())) == Q(1, 5));
    CochainComplex nope = circle_untwisted();
    CHECK_THROWS_AS(torsion_acyclic(nope), not_acyclic_error);
    try {
        torsion_acyclic(nope);
    } catch (const not_acyclic_error& e) {
        CHECK(e.h_dims == std::vector<std::size_t>{1, 1});
    }
}

TEST_CASE("torsion with cohomology bases: untwisted circle") {
    CochainComplex c = circle_untwisted();
    GradedBases h;
    h.reps = {M(1, 1, {1}), M(1, 1, {1})};
    // W_0 = [1], W_1 = [1], N = 5: torsion = -1
    CHECK(torsion(c, h) == Q(-1));
    // rescaling h^1 by 3 divides the degree-1 determinant
    h.reps[1] = M(1, 1, {3});
    CHECK(torsion(c, h) == Q(-1, 3));
    // rescaling h^0 by 3 multiplies the degree-0 determinant
    h.reps = {M(1, 1, {3}), M(1, 1, {1})};
    CHECK(torsion(c, h) == Q(-3));
}

TEST_CASE("torsion errors on bad bases") {
    CochainComplex c = circle_untwisted();
    GradedBases h;
    h.reps = {M(1, 1, {1})}; // missing degree-1 block
    CHECK_THROWS_AS(torsion(c, h), shape_error);
    h.reps = {M(1, 2, {1, 0}), M(1, 1, {1})}; // wrong count in degree 0
    CHECK_THROWS_AS(torsion(c, h), shape_error);
    // a non-cocycle representative
    CochainComplex k;
    k.field = QQ;
    k.dims = {1, 1};
    k.diffs = {M(1, 1, {1})}; // acyclic, H = 0, but feed a phantom basis
    GradedBases bad;
    bad.reps = {M(1, 1, {1}), ExactMatrix(QQ, 1, 0)};
    CHECK_THROWS_AS(torsion(k, bad), shape_error);
    // dependent classes: dims (0 -> Q^2) zero map has H^1 = Q^2
    CochainComplex two;
    two.field = QQ;
    two.dims = {2, 2};
    two.diffs = {ExactMatrix(QQ, 2, 2)};
    GradedBases dep;
    dep.reps = {M(2, 2, {1, 2, 2, 4}), M(2, 2, {1, 0, 0, 1})};
    CHECK_THROWS_AS(torsion(two, dep), basis_error);
    CochainComplex half;
    half.field = QQ;
    half.dims = {2, 2};
    half.diffs = {M(2, 2, {0, 0, 0, 1})}; // kernel = first coordinate only
    GradedBases noncoc;
    noncoc.reps = {M(2, 1, {0, 1}), M(2, 1, {1, 0})}; // degree-0 rep not a cocycle
    CHECK_THROWS_AS(torsion(half, noncoc), basis_error);
}

TEST_CASE("torsion does not depend on internal choices") {
    Rng rng = rng_from_tag("torsion-choices");
    std::vector<std::vector<std::size_t>> shapes = {{1, 1}, {1, 2, 1}, {2, 3, 1}, {2, 4, 3, 1}};
    for (const auto& dims : shapes) {
        for (int trial = 0; trial < 6; ++trial) {
            CochainComplex c = random_acyclic_complex(dims, rng);
            FieldElement t = torsion_acyclic(c);
            CHECK(t == torsion_random_choices(c, empty_bases(c), rng));
        }
    }
    // with nonzero cohomology: circle-like complexes
    for (int trial = 0; trial < 6; ++trial) {
        CochainComplex c = random_complex(QQ, {2, 3, 2}, {1, 1}, rng);
        CohomologyResult coh = cohomology(c);
        FieldElement t = torsion(c, coh.bases);
        CHECK(t == torsion_random_choices(c, coh.bases, rng));
    }
}

TEST_CASE("torsion transforms by det powers under base change of cohomology") {
    Rng rng = rng_from_tag("torsion-basechange");
    for (int trial = 0; trial < 8; ++trial) {
        CochainComplex c = random_complex(QQ, {2, 3, 2}, {1, 1}, rng);
        CohomologyResult coh = cohomology(c); // H dims (1,1,1)
        FieldElement t = torsion(c, coh.bases);
        GradedBases scaled = coh.bases;
        std::vector<long> factors = {3, -2, 5};
        FieldElement expect = t;
        for (std::size_t q = 0; q <= 2; ++q) {
            scaled.reps[q] = scaled.reps[q] * FieldElement::from_int(QQ, factors[q]);
            FieldElement f = FieldElement::from_int(QQ, factors[q]);
            expect *= (q % 2 == 0) ? f : f.inverse();
        }
        CHECK(torsion(c, scaled) == expect);
    }
}

TEST_CASE("random generators are sound") {
    Rng rng = rng_from_tag("generator-sanity");
    for (int trial = 0; trial < 10; ++trial) {
        UnimodularPair u = random_unimodular(QQ, 4, rng);
        CHECK(u.g * u.g_inv == ExactMatrix::identity(QQ, 4));
        FieldElement d = det(u.g);
        CHECK((d == Q(1) || d == Q(-1)));
    }
    std::vector<std::vector<std::size_t>> shapes = {{2, 2}, {1, 2, 1}, {2, 4, 2}, {1, 3, 3, 1},
                                                    {0, 1, 1, 0}, {3, 5, 4, 2}};
    for (const auto& dims : shapes) {
        for (int trial = 0; trial < 5; ++trial) {
            CochainComplex c = random_acyclic_complex(dims, rng);
            c.validate();
            CHECK(is_acyclic(c));
        }
    }
    CHECK_THROWS_AS(acyclic_ranks({1, 2, 2}), shape_error);
    CHECK_THROWS_AS(acyclic_ranks({2, 1, 2}), shape_error);
    // non-acyclic ranks generator hits the requested cohomology
    CochainComplex c = random_complex(QQ, {2, 3, 2}, {1, 1}, rng);
    CHECK(cohomology(c).h_dims == std::vector<std::size_t>{1, 1, 1});
}

TEST_CASE("specialization of a complex") {
    FieldDescriptor Qt{BaseField::rationals, "t"};
    CochainComplex c;
    c.field = Qt;
    c.dims = {1, 1};
    ExactMatrix d(Qt, 1, 1);
    d.at(0, 0) = FieldElement::variable(Qt) - FieldElement::one(Qt);
    c.diffs = {d};
    CochainComplex at2 = specialize(c, Gaussian(2));
    CHECK(at2.field == QQ);
    CHECK(at2.diffs[0].at(0, 0) == Q(1));
    CHECK(is_acyclic(at2));
    CHECK(!is_acyclic(specialize(c, Gaussian(1))));
    // pole propagation
    ExactMatrix p(Qt, 1, 1);
    p.at(0, 0) = FieldElement::variable(Qt).inverse();
    c.diffs = {p};
    CHECK_THROWS_AS(specialize(c, Gaussian(0)), pole_error);
}
