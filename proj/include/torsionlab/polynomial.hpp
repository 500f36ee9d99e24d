#pragma once

#include <string>
#include <vector>

#include "torsionlab/scalar.hpp"

namespace torsionlab {

/* Dense univariate polynomial over Q(i), coefficients stored lowest degree
 * first with trailing zeros trimmed; the zero polynomial has no coefficients.
 * This is the raw ring layer -- the enclosed variable name and admissibility
 * of imaginary coefficients live in FieldDescriptor. */
class Polynomial {
  public:
    Polynomial() = default;
    Polynomial(Gaussian c) { coeff_.push_back(std::move(c)); trim(); }
    explicit Polynomial(std::vector<Gaussian> coeff) : coeff_(std::move(coeff)) { trim(); }

    static Polynomial variable() { return Polynomial({Gaussian(0), Gaussian(1)}); }

    bool is_zero() const { return coeff_.empty(); }
    // degree of the zero polynomial is -1 by convention
    int degree() const { return static_cast<int>(coeff_.size()) - 1; }
    bool is_constant() const { return coeff_.size() <= 1; }

    const std::vector<Gaussian>& coefficients() const { return coeff_; }
    Gaussian coeff(std::size_t k) const { return k < coeff_.size() ? coeff_[k] : Gaussian(0); }
    Gaussian leading() const { return is_zero() ? Gaussian(0) : coeff_.back(); }
    Gaussian constant_term() const { return coeff(0); }

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Gaussian& c) const;

    // Euclidean division: *this = q * d + r with deg r < deg d.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const;
    // Exact quotient; throws internal_error when the remainder is nonzero.
    Polynomial exact_div(const Polynomial& d) const;

    Polynomial monic() const;
    Gaussian evaluate(const Gaussian& x) const;
    // Divides out t^k; the caller guarantees ord(this) >= k.
    Polynomial shift_down(std::size_t k) const;
    // Multiplicity of the root 0, i.e. the index of the lowest nonzero coefficient.
    std::size_t order_at_zero() const;

    bool operator==(const Polynomial& o) const { return coeff_ == o.coeff_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

  private:
    void trim() {
        while (!coeff_.empty() && coeff_.back().is_zero()) coeff_.pop_back();
    }
    std::vector<Gaussian> coeff_;
};

// Monic gcd via the Euclidean algorithm; gcd(0, 0) = 0.
Polynomial poly_gcd(Polynomial a, Polynomial b);

} // namespace torsionlab
