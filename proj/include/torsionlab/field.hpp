#pragma once

#include <string>

#include "torsionlab/polynomial.hpp"

namespace torsionlab {

enum class BaseField { rationals, gaussian_rationals };

/* Descriptor of the coefficient field: the base (Q or Q(i)) optionally
 * extended by one transcendental variable, e.g. Q(t) or Q(i)(w).  An empty
 * variable name means no variable. */
struct FieldDescriptor {
    BaseField base = BaseField::rationals;
    std::string variable;

    bool has_variable() const { return !variable.empty(); }
    bool allows_imaginary() const { return base == BaseField::gaussian_rationals; }
    // The descriptor of the field of values after specializing the variable.
    FieldDescriptor specialized() const { return {base, ""}; }

    bool operator==(const FieldDescriptor& o) const = default;
    std::string str() const;
};

FieldDescriptor parse_field_descriptor(const std::string& base, const std::string& variable);

/* Element of the field named by a FieldDescriptor, held as num/den in
 * canonical form: den != 0, gcd(num, den) = 1, den monic (so den == 1
 * whenever the element is a polynomial, in particular for constants).
 * All arithmetic preserves canonical form. */
class FieldElement {
  public:
    FieldElement() : num_(), den_(Gaussian(1)) {}
    explicit FieldElement(FieldDescriptor d)
        : desc_(std::move(d)), num_(), den_(Gaussian(1)) {}
    FieldElement(FieldDescriptor d, Polynomial num, Polynomial den = Polynomial(Gaussian(1)));

    static FieldElement from_int(const FieldDescriptor& d, long v) {
        return {d, Polynomial(Gaussian(v))};
    }
    static FieldElement constant(const FieldDescriptor& d, Gaussian c);
    static FieldElement variable(const FieldDescriptor& d);
    static FieldElement zero(const FieldDescriptor& d) { return FieldElement(d); }
    static FieldElement one(const FieldDescriptor& d) { return from_int(d, 1); }

    const FieldDescriptor& descriptor() const { return desc_; }
    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_.is_constant() && num_ == Polynomial(Gaussian(1)); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    // Requires is_constant().
    Gaussian constant_value() const;
    // Sign of a constant real value: -1, 0, +1.  Throws domain_error otherwise.
    int sign() const;

    FieldElement operator-() const;
    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

    FieldElement inverse() const;
    FieldElement pow(long e) const;

    // Specialize the variable at a point of the base field; throws pole_error
    // when the denominator vanishes there.  Constants pass through.
    FieldElement evaluate_at(const Gaussian& point) const;
    // Re-embed into a larger field (e.g. Q -> Q(t), Q -> Q(i)(w)).
    FieldElement promoted(const FieldDescriptor& target) const;

    bool operator==(const FieldElement& o) const {
        return desc_ == o.desc_ && num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    std::string str() const;
    static FieldElement parse(const FieldDescriptor& d, const std::string& text);

  private:
    void reduce();
    void check_same(const FieldElement& o) const;

    FieldDescriptor desc_;
    Polynomial num_, den_;
};

} // namespace torsionlab
