#include "torsionlab/polynomial.hpp"

#include <algorithm>

namespace torsionlab {

Polynomial Polynomial::operator-() const {
    std::vector<Gaussian> c(coeff_);
    for (auto& x : c) x = -x;
    return Polynomial(std::move(c));
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    std::vector<Gaussian> c(std::max(coeff_.size(), o.coeff_.size()), Gaussian(0));
    for (std::size_t i = 0; i < coeff_.size(); ++i) c[i] += coeff_[i];
    for (std::size_t i = 0; i < o.coeff_.size(); ++i) c[i] += o.coeff_[i];
    return Polynomial(std::move(c));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    return *this + (-o);
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Gaussian> c(coeff_.size() + o.coeff_.size() - 1, Gaussian(0));
    for (std::size_t i = 0; i < coeff_.size(); ++i)
        for (std::size_t j = 0; j < o.coeff_.size(); ++j)
            c[i + j] += coeff_[i] * o.coeff_[j];
    return Polynomial(std::move(c));
}

Polynomial Polynomial::operator*(const Gaussian& s) const {
    std::vector<Gaussian> c(coeff_);
    for (auto& x : c) x *= s;
    return Polynomial(std::move(c));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& d) const {
    if (d.is_zero()) throw division_by_zero();
    if (degree() < d.degree()) return {{}, *this};
    std::vector<Gaussian> rem = coeff_;
    std::vector<Gaussian> quot(coeff_.size() - d.coeff_.size() + 1, Gaussian(0));
    Gaussian lead_inv = d.leading().inverse();
    for (std::size_t k = quot.size(); k-- > 0;) {
        Gaussian q = rem[k + d.coeff_.size() - 1] * lead_inv;
        quot[k] = q;
        if (q.is_zero()) continue;
        for (std::size_t j = 0; j < d.coeff_.size(); ++j) rem[k + j] -= q * d.coeff_[j];
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial Polynomial::exact_div(const Polynomial& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) throw internal_error("inexact polynomial division");
    return q;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return {};
    return *this * leading().inverse();
}

Gaussian Polynomial::evaluate(const Gaussian& x) const {
    Gaussian acc(0);
    for (std::size_t i = coeff_.size(); i-- > 0;) acc = acc * x + coeff_[i];
    return acc;
}

Polynomial Polynomial::shift_down(std::size_t k) const {
    if (k == 0) return *this;
    std::vector<Gaussian> c(coeff_.begin() + static_cast<std::ptrdiff_t>(k), coeff_.end());
    return Polynomial(std::move(c));
}

std::size_t Polynomial::order_at_zero() const {
    std::size_t k = 0;
    while (k < coeff_.size() && coeff_[k].is_zero()) ++k;
    return k;
}

Polynomial poly_gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

} // namespace torsionlab
