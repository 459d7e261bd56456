#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <boost/multiprecision/cpp_int.hpp>

namespace seifert_cs {

using Int = boost::multiprecision::cpp_int;

// Exact rational, always stored reduced with positive denominator.
// cpp_rational keeps the canonical form for us; helpers below add the
// pieces the library needs (floor, mod-2 reduction, "p/q" rendering).
using Rational = boost::multiprecision::cpp_rational;

// cpp_rational's (num, den) constructor requires den > 0; this one accepts
// any sign and normalizes.
inline Rational make_rational(Int num, Int den) {
    if (den == 0) throw std::domain_error("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(std::move(num), std::move(den));
}

inline Int numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline Int floor_int(const Rational& r) {
    Int n = numerator(r), d = denominator(r);
    Int q = n / d;
    if (n < 0 && q * d != n) --q;
    return q;
}

// Canonical residue of r modulo 2, in [0, 2).
inline Rational mod2(const Rational& r) {
    Rational half = r / 2;
    return r - 2 * Rational(floor_int(half));
}

// "p/q" for proper fractions, "p" for integers.
inline std::string to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (!is_integer(r)) {
        s += '/';
        s += denominator(r).str();
    }
    return s;
}

inline double to_double(const Rational& r) {
    return static_cast<double>(r);
}

} // namespace seifert_cs
