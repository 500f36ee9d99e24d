#include "torsionlab/scalar.hpp"

#include <cctype>

namespace torsionlab {

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw parse_error("empty rational literal");
    std::size_t i = 0;
    if (text[i] == '-' || text[i] == '+') ++i;
    bool digits = false, slash = false, den_digits = false, den_zero = true;
    std::string den;
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (c == '/') {
            if (slash || !digits) throw parse_error("malformed rational '" + text + "'");
            slash = true;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            if (!slash) {
                digits = true;
            } else {
                den_digits = true;
                if (c != '0') den_zero = false;
            }
        } else {
            throw parse_error("malformed rational '" + text + "'");
        }
    }
    if (!digits || (slash && !den_digits)) throw parse_error("malformed rational '" + text + "'");
    if (slash && den_zero) throw division_by_zero();
    Rational r(text[0] == '+' ? text.substr(1) : text);
    r.canonicalize();
    return r;
}

std::string rational_str(const Rational& r) {
    return r.get_str();
}

std::string gaussian_str(const Gaussian& z) {
    if (z.im == 0) return rational_str(z.re);
    std::string imag = rational_str(abs(z.im)) + "*i";
    if (z.re == 0) return (z.im < 0 ? "-" : "") + imag;
    return rational_str(z.re) + (z.im < 0 ? "-" : "+") + imag;
}

Gaussian parse_gaussian(const std::string& text) {
    if (text.empty()) throw parse_error("empty scalar literal");
    // Split at the first sign that is not the leading one; rationals carry no
    // interior signs, so this cleanly separates "a+b*i" / "a-b*i".
    std::size_t split = std::string::npos;
    for (std::size_t i = 1; i < text.size(); ++i) {
        if (text[i] == '+' || text[i] == '-') {
            split = i;
            break;
        }
    }
    auto parse_imag = [](std::string part) -> Rational {
        // part is "...*i" or "i", with an optional leading sign.
        bool neg = false;
        if (!part.empty() && (part[0] == '+' || part[0] == '-')) {
            neg = part[0] == '-';
            part.erase(0, 1);
        }
        if (part == "i") return neg ? Rational(-1) : Rational(1);
        if (part.size() < 2 || part.substr(part.size() - 2) != "*i")
            throw parse_error("malformed imaginary part '" + part + "'");
        Rational mag = parse_rational(part.substr(0, part.size() - 2));
        return neg ? -mag : mag;
    };
    if (split == std::string::npos) {
        if (text == "i" || text == "+i" || text == "-i" ||
            (text.size() >= 2 && text.substr(text.size() - 2) == "*i"))
            return {Rational(0), parse_imag(text)};
        return {parse_rational(text), Rational(0)};
    }
    std::string tail = text.substr(split);
    if (tail[0] == '+') tail.erase(0, 1); // keep '-' as the sign of the imaginary part
    return {parse_rational(text.substr(0, split)), parse_imag(tail)};
}

} // namespace torsionlab
