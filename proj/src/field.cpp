#include "torsionlab/field.hpp"

#include <cctype>

namespace torsionlab {

std::string FieldDescriptor::str() const {
    std::string s = base == BaseField::rationals ? "Q" : "Q(i)";
    if (has_variable()) s += "(" + variable + ")";
    return s;
}

FieldDescriptor parse_field_descriptor(const std::string& base, const std::string& variable) {
    FieldDescriptor d;
    if (base == "rationals") {
        d.base = BaseField::rationals;
    } else if (base == "gaussian-rationals") {
        d.base = BaseField::gaussian_rationals;
    } else {
        throw parse_error("unknown base field '" + base + "'");
    }
    for (char c : variable)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
            throw parse_error("bad variable name '" + variable + "'");
    if (variable == "i") throw parse_error("variable name 'i' collides with the imaginary unit");
    d.variable = variable;
    return d;
}

FieldElement::FieldElement(FieldDescriptor d, Polynomial num, Polynomial den)
    : desc_(std::move(d)), num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw division_by_zero();
    if (!desc_.has_variable() && (!num_.is_constant() || !den_.is_constant()))
        throw shape_error("polynomial element in a field without a variable");
    reduce();
}

void FieldElement::reduce() {
    if (num_.is_zero()) {
        den_ = Polynomial(Gaussian(1));
        return;
    }
    Polynomial g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.exact_div(g);
        den_ = den_.exact_div(g);
    }
    Gaussian lead = den_.leading();
    if (!(lead == Gaussian(1))) {
        Gaussian inv = lead.inverse();
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

void FieldElement::check_same(const FieldElement& o) const {
    if (!(desc_ == o.desc_))
        throw shape_error("field mismatch: " + desc_.str() + " vs " + o.desc_.str());
}

FieldElement FieldElement::constant(const FieldDescriptor& d, Gaussian c) {
    if (!c.is_real() && !d.allows_imaginary())
        throw shape_error("imaginary constant in field " + d.str());
    return {d, Polynomial(std::move(c))};
}

FieldElement FieldElement::variable(const FieldDescriptor& d) {
    if (!d.has_variable()) throw shape_error("field " + d.str() + " has no variable");
    return {d, Polynomial::variable()};
}

Gaussian FieldElement::constant_value() const {
    if (!is_constant()) throw domain_error("element " + str() + " is not constant");
    return num_.constant_term() / den_.constant_term();
}

int FieldElement::sign() const {
    Gaussian v = constant_value();
    if (!v.is_real()) throw domain_error("sign of a non-real value " + str());
    return v.re < 0 ? -1 : (v.re == 0 ? 0 : 1);
}

FieldElement FieldElement::operator-() const { return {desc_, -num_, den_}; }

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_same(o);
    return {desc_, num_ * o.den_ + o.num_ * den_, den_ * o.den_};
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    check_same(o);
    return {desc_, num_ * o.den_ - o.num_ * den_, den_ * o.den_};
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same(o);
    return {desc_, num_ * o.num_, den_ * o.den_};
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    return *this * o.inverse();
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw division_by_zero();
    return {desc_, den_, num_};
}

FieldElement FieldElement::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    FieldElement acc = one(desc_), base = *this;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

FieldElement FieldElement::evaluate_at(const Gaussian& point) const {
    if (!point.is_real() && !desc_.allows_imaginary())
        throw domain_error("imaginary evaluation point in field " + desc_.str());
    Gaussian d = den_.evaluate(point);
    if (d.is_zero()) throw pole_error(str() + " at " + gaussian_str(point));
    return constant(desc_.specialized(), num_.evaluate(point) / d);
}

FieldElement FieldElement::promoted(const FieldDescriptor& target) const {
    if (desc_ == target) return *this;
    if (desc_.has_variable() && desc_.variable != target.variable)
        throw shape_error("cannot promote " + desc_.str() + " to " + target.str());
    if (desc_.allows_imaginary() && !target.allows_imaginary())
        throw shape_error("cannot promote " + desc_.str() + " to " + target.str());
    return {target, num_, den_};
}

namespace {

std::string poly_str(const Polynomial& p) {
    std::string s = "[";
    const auto& c = p.coefficients();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) s += ",";
        s += gaussian_str(c[i]);
    }
    return s + "]";
}

Polynomial parse_poly(const FieldDescriptor& d, const std::string& text) {
    if (text.size() < 2 || text.front() != '[' || text.back() != ']')
        throw parse_error("malformed polynomial '" + text + "'");
    std::vector<Gaussian> coeff;
    std::string body = text.substr(1, text.size() - 2);
    if (!body.empty()) {
        std::size_t start = 0;
        while (true) {
            std::size_t comma = body.find(',', start);
            std::string item = body.substr(start, comma == std::string::npos ? comma : comma - start);
            if (item.empty()) throw parse_error("empty coefficient in '" + text + "'");
            Gaussian c = parse_gaussian(item);
            if (!c.is_real() && !d.allows_imaginary())
                throw parse_error("imaginary coefficient in field " + d.str());
            coeff.push_back(std::move(c));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
    }
    return Polynomial(std::move(coeff));
}

} // namespace

std::string FieldElement::str() const {
    if (den_ == Polynomial(Gaussian(1))) {
        if (num_.is_constant()) return gaussian_str(num_.constant_term());
        return poly_str(num_);
    }
    return poly_str(num_) + "/" + poly_str(den_);
}

FieldElement FieldElement::parse(const FieldDescriptor& d, const std::string& text) {
    if (text.empty()) throw parse_error("empty field-element literal");
    if (text.front() == '[') {
        if (!d.has_variable())
            throw parse_error("polynomial literal '" + text + "' in field " + d.str());
        std::size_t close = text.find(']');
        if (close == std::string::npos) throw parse_error("unbalanced '[' in '" + text + "'");
        Polynomial num = parse_poly(d, text.substr(0, close + 1));
        if (close + 1 == text.size()) return {d, std::move(num)};
        if (text[close + 1] != '/' || close + 2 >= text.size() || text[close + 2] != '[')
            throw parse_error("malformed ratio '" + text + "'");
        Polynomial den = parse_poly(d, text.substr(close + 2));
        return {d, std::move(num), std::move(den)};
    }
    Gaussian c = parse_gaussian(text);
    if (!c.is_real() && !d.allows_imaginary())
        throw parse_error("imaginary literal '" + text + "' in field " + d.str());
    return constant(d, std::move(c));
}

} // namespace torsionlab
