#include "torsionlab/maptorus.hpp"

#include "torsionlab/errors.hpp"

namespace torsionlab {

void CellularSelfMap::validate(Exec exec) const {
    domain.validate();
    if (comap.size() != domain.dims.size())
        throw validation_error("self-map needs one matrix per degree");
    for (std::size_t q = 0; q < comap.size(); ++q)
        if (comap[q].rows() != domain.dims[q] || comap[q].cols() != domain.dims[q])
            throw validation_error("self-map matrix shape mismatch");
    for (std::size_t q = 0; q + 1 < comap.size(); ++q)
        if (comap[q + 1] * domain.diffs[q] != domain.diffs[q] * comap[q])
            throw validation_error("self-map does not commute with the differential");
    (void)exec;
}

void MonodromyRep::validate(Exec exec) const {
    if (!w.is_square()) throw validation_error("monodromy matrix must be square");
    if (rank(w, exec) != w.rows()) throw validation_error("monodromy matrix must be invertible");
}

CochainComplex mapping_cone_complex(const CellularSelfMap& m, const MonodromyRep& rho,
                                    Exec exec) {
    m.validate(exec);
    rho.validate(exec);
    const FieldDescriptor target = rho.w.descriptor();
    const std::size_t dv = rho.dim();
    const std::size_t n = m.domain.top_degree();
    const ExactMatrix idv = ExactMatrix::identity(target, dv);

    CochainComplex cone;
    cone.field = target;
    cone.dims.resize(n + 2);
    for (std::size_t q = 0; q <= n + 1; ++q)
        cone.dims[q] = (m.domain.dim(q) + (q == 0 ? 0 : m.domain.dim(q - 1))) * dv;
    for (std::size_t q = 0; q <= n; ++q) {
        const ExactMatrix dq = m.domain.diff(q).promoted(target);
        const ExactMatrix phi = m.comap[q].promoted(target);
        ExactMatrix twist =
            kron(phi, rho.w) - ExactMatrix::identity(target, m.domain.dim(q) * dv);
        if (q % 2 == 1) twist = -twist;
        const std::size_t below = q == 0 ? 0 : m.domain.dim(q - 1);
        ExactMatrix top = hstack(kron(dq, idv),
                                 ExactMatrix(target, m.domain.dim(q + 1) * dv, below * dv));
        ExactMatrix low = q == 0 ? ExactMatrix(target, m.domain.dim(0), 0)
                                 : m.domain.diffs[q - 1].promoted(target);
        ExactMatrix bottom = hstack(twist, -kron(low, idv));
        cone.diffs.push_back(vstack(top, bottom));
    }
    cone.validate();
    return cone;
}

namespace {

// Coordinates of the columns of v in the cohomology basis reps (mod the image
// of the previous differential); internal_error if v is not made of cocycles,
// since callers only pass images of cocycles under chain maps.
ExactMatrix h_coordinates(const ExactMatrix& reps, const ExactMatrix& image,
                          const ExactMatrix& v, Exec exec) {
    ExactMatrix basis = hstack(reps, image);
    ExactMatrix coords = solve(basis, v, exec);
    ExactMatrix top(v.descriptor(), reps.cols(), v.cols());
    for (std::size_t i = 0; i < reps.cols(); ++i)
        for (std::size_t j = 0; j < v.cols(); ++j) top.at(i, j) = coords.at(i, j);
    return top;
}

} // namespace

InducedCohomology induced_cohomology_maps(const CellularSelfMap& m, Exec exec) {
    m.validate(exec);
    CohomologyResult h = cohomology(m.domain, exec);
    InducedCohomology out;
    out.h_dims = h.h_dims;
    for (std::size_t q = 0; q < h.h_dims.size(); ++q) {
        const ExactMatrix& reps = h.bases.reps[q];
        ExactMatrix image = q == 0 ? ExactMatrix(m.domain.field, m.domain.dim(0), 0)
                                   : image_basis(m.domain.diffs[q - 1], exec);
        out.hmaps.push_back(h_coordinates(reps, image, m.comap[q] * reps, exec));
    }
    return out;
}

FieldElement lefschetz_zeta(const std::vector<ExactMatrix>& hmaps, const MonodromyRep& rho,
                            Exec exec) {
    rho.validate(exec);
    const FieldDescriptor target = rho.w.descriptor();
    FieldElement zeta = FieldElement::one(target);
    std::vector<std::size_t> kernel_dims(hmaps.size(), 0);
    bool acyclic = true;
    std::vector<FieldElement> factors;
    for (std::size_t k = 0; k < hmaps.size(); ++k) {
        ExactMatrix p = kron(hmaps[k].promoted(target), rho.w) -
                        ExactMatrix::identity(target, hmaps[k].rows() * rho.dim());
        FieldElement pk = det(p, exec);
        if (pk.is_zero()) {
            acyclic = false;
            kernel_dims[k] = hmaps[k].rows() * rho.dim() - rank(p, exec);
        }
        factors.push_back(pk);
    }
    if (!acyclic) throw not_acyclic_error(kernel_dims);
    for (std::size_t k = 0; k < factors.size(); ++k)
        zeta = k % 2 == 0 ? zeta * factors[k] : zeta / factors[k];
    return zeta;
}

unsigned long z_phi(const std::vector<ExactMatrix>& hmaps, Exec exec) {
    unsigned long z = 0;
    for (const ExactMatrix& f : hmaps) {
        if (!f.is_square()) throw shape_error("cohomology self-maps must be square");
        ExactMatrix shifted = f - ExactMatrix::identity(f.descriptor(), f.rows());
        z += f.rows() * (f.rows() - rank(shifted, exec));
    }
    return z;
}

namespace {

/* Decompose a nonzero rational function as sign * w^m if it is of that form.
 * Canonical field elements have coprime numerator/denominator with monic
 * denominator, so the monomial test is: both are monomials and the numerator
 * coefficient is +-1. */
bool monomial_unit(const FieldElement& v, int& sign, long& power) {
    if (v.is_zero()) return false;
    const Polynomial& num = v.num();
    const Polynomial& den = v.den();
    for (int i = 0; i < num.degree(); ++i)
        if (!num.coeff(static_cast<std::size_t>(i)).is_zero()) return false;
    for (int i = 0; i < den.degree(); ++i)
        if (!den.coeff(static_cast<std::size_t>(i)).is_zero()) return false;
    Gaussian lead = num.leading();
    if (lead.im != 0 || (lead.re != 1 && lead.re != -1)) return false;
    sign = lead.re == 1 ? 1 : -1;
    power = num.degree() - den.degree();
    return true;
}

} // namespace

MapTorusReport verify_maptor(const CellularSelfMap& m, const MonodromyRep& rho,
                             const CohomologyOrientation* o, Exec exec) {
    MapTorusReport r;
    CochainComplex cone = mapping_cone_complex(m, rho, exec);
    FieldElement torsion_value = torsion_acyclic(cone, exec);
    r.torsion_side = torsion_value.inverse();
    if (o != nullptr && o->sign < 0 && rho.dim() % 2 == 1) r.torsion_side = -r.torsion_side;

    InducedCohomology h = induced_cohomology_maps(m, exec);
    r.h_dims = h.h_dims;
    r.zeta = lefschetz_zeta(h.hmaps, rho, exec);
    r.z = z_phi(h.hmaps, exec);
    r.zeta_side = r.zeta;
    if ((rho.dim() * r.z) % 2 == 1) r.zeta_side = -r.zeta_side;

    r.ratio = r.torsion_side / r.zeta_side;
    r.unit_is_monomial = monomial_unit(r.ratio, r.unit_sign, r.unit_power);

    // exact unit check across sample specializations of both sides
    r.samples_ok = true;
    const FieldDescriptor& fd = r.ratio.descriptor();
    if (fd.has_variable()) {
        const long samples[][2] = {{2, 1},  {3, 1},  {-2, 1}, {1, 2},  {-3, 2},
                                   {5, 1},  {7, 3},  {-5, 2}, {4, 1},  {-7, 1}};
        for (const auto& s : samples) {
            Gaussian point(Rational(s[0], s[1]));
            FieldElement ts, zs;
            try {
                ts = r.torsion_side.evaluate_at(point);
                zs = r.zeta_side.evaluate_at(point);
            } catch (const pole_error&) {
                continue; // sample hit a pole of one side; skip it
            }
            if (zs.is_zero()) continue;
            FieldElement expected = zs;
            Gaussian unit(Rational(1));
            Rational p(s[0], s[1]);
            if (r.unit_power >= 0)
                for (long i = 0; i < r.unit_power; ++i) unit = unit * Gaussian(p);
            else
                for (long i = 0; i < -r.unit_power; ++i) unit = unit / Gaussian(p);
            if (r.unit_sign < 0) unit = -unit;
            expected = expected * FieldElement::constant(expected.descriptor(), unit);
            if (ts != expected) r.samples_ok = false;
            ++r.samples_checked;
        }
    }
    r.pass = r.unit_is_monomial && r.samples_ok;
    return r;
}

ShortExactSequenceOfComplexes wang_sequence(const CellularSelfMap& m, const MonodromyRep& rho,
                                            Exec exec) {
    CochainComplex cone = mapping_cone_complex(m, rho, exec);
    const FieldDescriptor target = cone.field;
    const std::size_t dv = rho.dim();
    const std::size_t n = m.domain.top_degree();

    ShortExactSequenceOfComplexes s;
    s.c1 = cone;
    // subcomplex: the degree-shifted C^{*-1}(N;V) with negated differential
    s.c0.field = target;
    s.c0.dims.resize(n + 2);
    for (std::size_t q = 0; q <= n + 1; ++q)
        s.c0.dims[q] = q == 0 ? 0 : m.domain.dim(q - 1) * dv;
    for (std::size_t q = 0; q <= n; ++q) {
        ExactMatrix low = q == 0 ? ExactMatrix(target, m.domain.dim(0) * dv, 0)
                                 : -kron(m.domain.diffs[q - 1].promoted(target),
                                         ExactMatrix::identity(target, dv));
        s.c0.diffs.push_back(low);
    }
    // quotient: C^*(N;V) in degrees 0..n, zero in degree n+1
    s.c2.field = target;
    s.c2.dims.resize(n + 2);
    for (std::size_t q = 0; q <= n + 1; ++q)
        s.c2.dims[q] = q <= n ? m.domain.dim(q) * dv : 0;
    for (std::size_t q = 0; q <= n; ++q) {
        ExactMatrix dq = q == n ? ExactMatrix(target, 0, m.domain.dim(n) * dv)
                                : kron(m.domain.diffs[q].promoted(target),
                                       ExactMatrix::identity(target, dv));
        s.c2.diffs.push_back(dq);
    }
    // inject = [0; id] onto the lower summand, project = [id, 0] onto the top
    for (std::size_t q = 0; q <= n + 1; ++q) {
        const std::size_t top = q <= n ? m.domain.dim(q) * dv : 0;
        const std::size_t low = q == 0 ? 0 : m.domain.dim(q - 1) * dv;
        s.inject.push_back(vstack(ExactMatrix(target, top, low),
                                  ExactMatrix::identity(target, low)));
        s.project.push_back(hstack(ExactMatrix::identity(target, top),
                                   ExactMatrix(target, top, low)));
    }
    s.validate(exec);
    return s;
}

} // namespace torsionlab
