#pragma once

#include <cmath>
#include <cstdint>
#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "seifert_cs/errors.hpp"
#include "seifert_cs/rational.hpp"

namespace seifert_cs {

// Arguments of the Dedekind sum in the order s(modulus, multiplier):
// s(alpha, beta).  Note this is opposite to the classical s(h,k)
// convention where the modulus comes second.
struct DedekindArgs {
    Int alpha;
    Int beta;

    DedekindArgs(Int a, Int b) : alpha(std::move(a)), beta(std::move(b)) {
        if (alpha < 1)
            throw InvalidAlpha("alpha must be >= 1, got " + alpha.str());
        if (gcd(alpha, abs(beta)) != 1)
            throw NotCoprime("gcd(" + alpha.str() + ", " + beta.str() + ") != 1");
    }
};

namespace detail {

// sum_{k=1}^{a-1} (2k - a)(2r_k - a) with r_k = k*b mod a, so that
// s(a, b) = sum / (4 a^2).  The sawtooth ((x)) never hits an integer
// inside the range: a | k is impossible and a | k*b needs a | k by
// coprimality.
inline Int sawtooth_numerator_small(std::uint64_t a, std::uint64_t b) {
    __int128 acc = 0;
    std::uint64_t r = b % a;
    std::uint64_t step = r;
    for (std::uint64_t k = 1; k < a; ++k) {
        acc += static_cast<__int128>(2 * static_cast<__int128>(k) - a) *
               (2 * static_cast<__int128>(r) - a);
        r += step;
        if (r >= a) r -= a;
    }
    Int hi = static_cast<std::int64_t>(acc >> 64);
    hi <<= 64;
    return hi + static_cast<std::uint64_t>(acc);
}

inline Int sawtooth_numerator_big(const Int& a, const Int& b) {
    Int acc = 0;
    Int step = b % a;
    Int r = step;
    for (Int k = 1; k < a; ++k) {
        acc += (2 * k - a) * (2 * r - a);
        r += step;
        if (r >= a) r -= a;
    }
    return acc;
}

} // namespace detail

// Exact Dedekind sum via the sawtooth form, O(alpha) integer steps.
// The independent oracle for dedekind_fast.
inline Rational dedekind_sawtooth(const DedekindArgs& args) {
    const Int& a = args.alpha;
    if (a == 1) return 0;
    Int b = args.beta % a;
    if (b < 0) b += a;
    Int num;
    // (2k-a)(2r-a) products stay within __int128 for a < 2^40
    if (a < (Int(1) << 40))
        num = detail::sawtooth_numerator_small(static_cast<std::uint64_t>(a),
                                               static_cast<std::uint64_t>(b));
    else
        num = detail::sawtooth_numerator_big(a, b);
    return Rational(num, 4 * a * a);
}

// Exact Dedekind sum in O(log alpha) steps: normalize beta into [0, alpha)
// by periodicity, then peel with the reciprocity law
//   s(a,b) + s(b,a) = -1/4 + (a^2 + b^2 + 1) / (12 a b),   0 < b < a,
// reducing (a,b) -> (b, a mod b) like the Euclidean algorithm.
inline Rational dedekind_fast(const DedekindArgs& args) {
    Int a = args.alpha;
    Int b = args.beta % a;
    if (b < 0) b += a;
    Rational s = 0;
    int sign = 1;
    while (a > 1) {
        // gcd(a,b)=1 and a>1 force b>0 here
        Rational term = Rational(a * a + b * b + 1, 12 * a * b) - Rational(1, 4);
        if (sign > 0) s += term; else s -= term;
        sign = -sign;
        Int r = a % b;
        a = b;
        b = r;
    }
    return s;
}

// Literal cotangent form (1/4a) sum cot(pi k/a) cot(pi k b/a), evaluated in
// floating point as a numerically independent cross-check.  `precision` is
// the working mantissa width in bits: up to 64 uses long double, anything
// larger a 100-digit float.  Conservative error bound: 2^(1-precision)*alpha.
inline double dedekind_cotangent(const DedekindArgs& args, unsigned precision = 64) {
    const Int& a = args.alpha;
    if (a == 1) return 0.0;
    Int b = args.beta % a;
    if (b < 0) b += a;
    const std::uint64_t au = static_cast<std::uint64_t>(a);
    const std::uint64_t bu = static_cast<std::uint64_t>(b);
    if (precision <= 64) {
        const long double pi = 3.14159265358979323846264338327950288L;
        long double sum = 0;
        std::uint64_t r = bu % au;
        for (std::uint64_t k = 1; k < au; ++k) {
            // reduce the second angle mod pi before evaluating
            sum += 1.0L / std::tan(pi * k / au) / std::tan(pi * r / au);
            r += bu;
            if (r >= au) r -= au;
        }
        return static_cast<double>(sum / (4 * au));
    }
    using F = boost::multiprecision::cpp_bin_float_100;
    const F pi = boost::math::constants::pi<F>();
    F sum = 0;
    std::uint64_t r = bu % au;
    for (std::uint64_t k = 1; k < au; ++k) {
        sum += 1 / tan(pi * k / au) / tan(pi * r / au);
        r += bu;
        if (r >= au) r -= au;
    }
    return static_cast<double>(sum / (4 * au));
}

// s(a,b) + s(b,a) - [-1/4 + (a^2+b^2+1)/(12ab)], computed with the sawtooth
// evaluator on both sides.  Always 0; kept as a test helper.
inline Rational reciprocity_defect(const Int& alpha, const Int& beta) {
    Rational lhs = dedekind_sawtooth(DedekindArgs(alpha, beta)) +
                   dedekind_sawtooth(DedekindArgs(beta, alpha));
    Rational rhs = Rational(alpha * alpha + beta * beta + 1, 12 * alpha * beta) - Rational(1, 4);
    return lhs - rhs;
}

} // namespace seifert_cs
