#pragma once
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

#include "dpsq/errors.hpp"

namespace dpsq {

// Exact rational arithmetic on int64.  Always kept in lowest terms with a
// positive denominator, so == is plain member comparison.  Comparisons
// cross-multiply in __int128 and cannot overflow for the magnitudes that show
// up here (densities and charges of small graphs).
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n) : num(n), den(1) {}
    Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
        if (den == 0) throw input_error("rational with zero denominator");
        normalize();
    }

    void normalize() {
        if (den < 0) { num = -num; den = -den; }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        if (num == 0) den = 1;
    }

    friend Rational operator+(Rational a, Rational b) {
        return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend Rational operator-(Rational a, Rational b) {
        return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend Rational operator*(Rational a, Rational b) {
        return Rational(a.num * b.num, a.den * b.den);
    }
    friend Rational operator/(Rational a, Rational b) {
        if (b.num == 0) throw input_error("rational division by zero");
        return Rational(a.num * b.den, a.den * b.num);
    }
    Rational& operator+=(Rational b) { *this = *this + b; return *this; }
    Rational& operator-=(Rational b) { *this = *this - b; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return (__int128)a.num * b.den < (__int128)b.num * a.den;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    // canonical "<num>/<den>" form used everywhere in CLI output
    std::string str() const {
        return std::to_string(num) + "/" + std::to_string(den);
    }
    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.str();
    }
};

} // namespace dpsq
