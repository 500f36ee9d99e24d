#include "torsionlab/report.hpp"

#include <algorithm>
#include <map>

#include "torsionlab/errors.hpp"

namespace torsionlab {

namespace {

std::vector<mpz_class> positive_divisors(const mpz_class& n) {
    std::vector<mpz_class> out;
    mpz_class a = abs(n);
    for (mpz_class d = 1; d * d <= a; ++d) {
        if (a % d != 0) continue;
        out.push_back(d);
        if (d * d != a) out.push_back(a / d);
    }
    return out;
}

// Exact division by (t - r); the caller guarantees p(r) = 0.
Polynomial deflate(const Polynomial& p, const Rational& r) {
    std::vector<Gaussian> root = {Gaussian(-r), Gaussian(1)};
    return p.exact_div(Polynomial(std::move(root)));
}

} // namespace

RootSplit rational_roots(const Polynomial& p) {
    if (p.is_zero()) throw domain_error("root search on the zero polynomial");
    for (const Gaussian& c : p.coefficients())
        if (!c.is_real()) throw domain_error("root search needs rational coefficients");

    RootSplit out;
    Polynomial w = p;
    std::size_t at_zero = w.order_at_zero();
    if (at_zero > 0) {
        out.roots.emplace_back(Rational(0), at_zero);
        w = w.shift_down(at_zero);
    }
    if (w.degree() > 0) {
        // clear denominators, then apply the rational root theorem
        mpz_class lcm = 1;
        for (const Gaussian& c : w.coefficients()) lcm = lcm * c.re.get_den() / gcd(lcm, c.re.get_den());
        mpz_class head = w.constant_term().re.get_num() * (lcm / w.constant_term().re.get_den());
        mpz_class lead = w.leading().re.get_num() * (lcm / w.leading().re.get_den());
        std::vector<Rational> candidates;
        for (const mpz_class& num : positive_divisors(head))
            for (const mpz_class& den : positive_divisors(lead)) {
                Rational r(num, den);
                r.canonicalize();
                candidates.push_back(r);
                candidates.push_back(-r);
            }
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
        for (const Rational& r : candidates) {
            std::size_t mult = 0;
            while (w.degree() > 0 && w.evaluate(Gaussian(r)).is_zero()) {
                w = deflate(w, r);
                ++mult;
            }
            if (mult) out.roots.emplace_back(r, mult);
        }
    }
    std::sort(out.roots.begin(), out.roots.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    out.residual = w;
    return out;
}

CohomologyOrientation default_orientation(const EquivariantCellComplex& x, Exec exec) {
    CohomologyOrientation o;
    o.bases = cohomology(untwisted_complex(x), exec).bases;
    return o;
}

ScanReport scan_torsion(const EquivariantCellComplex& x, const Representation& r,
                        const CohomologyOrientation& o, Exec exec) {
    ScanReport rep;
    rep.torsion = milnor_turaev_torsion(x, r, o, exec);

    RootSplit zeros = rational_roots(rep.torsion.num());
    RootSplit poles = rational_roots(rep.torsion.den());
    rep.zero_residual = zeros.residual;
    rep.pole_residual = poles.residual;

    std::map<Rational, ScanRoot> merged;
    for (const auto& [at, mult] : zeros.roots) {
        merged[at].at = at;
        merged[at].zero_mult = mult;
    }
    for (const auto& [at, mult] : poles.roots) {
        merged[at].at = at;
        merged[at].pole_mult = mult;
    }
    if (!merged.empty()) {
        CochainComplex twisted = assemble_twisted_cochain(x, r, exec);
        for (auto& [at, root] : merged) {
            try {
                root.specialized_nonacyclic = !is_acyclic(specialize(twisted, Gaussian(at)), exec);
            } catch (const pole_error&) {
                root.specialized_nonacyclic = true; // cannot even specialize there
            }
            rep.roots.push_back(root);
        }
    }
    return rep;
}

} // namespace torsionlab
