#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "torsionlab/errors.hpp"

namespace torsionlab {

using Rational = mpq_class;

// Deterministic cross-platform string hash (FNV-1a); used to derive RNG seeds.
std::uint64_t fnv1a(const std::string& s);

Rational parse_rational(const std::string& text);
std::string rational_str(const Rational& r);

/* Element of Q(i), stored as an (re, im) pair of exact rationals.  Plain Q
 * values are Gaussians with im == 0; which literals are admissible is decided
 * by the enclosing field descriptor, not here. */
struct Gaussian {
    Rational re, im;

    Gaussian() : re(0), im(0) {}
    Gaussian(long v) : re(v), im(0) {}
    Gaussian(const Rational& r) : re(r), im(0) {}
    Gaussian(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }
    Gaussian conj() const { return {re, -im}; }
    // |z|^2 as an exact rational.
    Rational norm2() const { return re * re + im * im; }

    Gaussian operator-() const { return {-re, -im}; }
    Gaussian operator+(const Gaussian& o) const { return {re + o.re, im + o.im}; }
    Gaussian operator-(const Gaussian& o) const { return {re - o.re, im - o.im}; }
    Gaussian operator*(const Gaussian& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    Gaussian inverse() const {
        if (is_zero()) throw division_by_zero();
        Rational n = norm2();
        return {re / n, -im / n};
    }
    Gaussian operator/(const Gaussian& o) const { return *this * o.inverse(); }

    Gaussian& operator+=(const Gaussian& o) { re += o.re; im += o.im; return *this; }
    Gaussian& operator-=(const Gaussian& o) { re -= o.re; im -= o.im; return *this; }
    Gaussian& operator*=(const Gaussian& o) { *this = *this * o; return *this; }

    bool operator==(const Gaussian& o) const { return re == o.re && im == o.im; }
    bool operator!=(const Gaussian& o) const { return !(*this == o); }
};

Gaussian parse_gaussian(const std::string& text);
std::string gaussian_str(const Gaussian& z);

} // namespace torsionlab
