#pragma once

#include "seifert_cs/dedekind.hpp"
#include "seifert_cs/errors.hpp"
#include "seifert_cs/seifert.hpp"

namespace seifert_cs {

// Exact rational exponent q of the unit complex number e^{i pi q},
// canonically reduced into [0, 2).  Composition is addition of exponents
// mod 2.
class PhaseExponent {
public:
    PhaseExponent() = default;
    explicit PhaseExponent(const Rational& exponent) : q_(mod2(exponent)) {}

    const Rational& q() const { return q_; }

    friend bool operator==(const PhaseExponent&, const PhaseExponent&) = default;

private:
    Rational q_;
};

// eta0(X, kappa) = 1 + d/3 + 4 sum_j s(alpha_j, beta_j).  Pairs with
// alpha = 1 contribute nothing.  `audit` recomputes every Dedekind sum
// with the O(alpha) sawtooth oracle and cross-checks.
inline Rational eta0(const SeifertData& sd, bool audit = false) {
    Rational sum = 0;
    for (const auto& p : sd.pairs()) {
        DedekindArgs args(p.alpha, p.beta);
        Rational s = dedekind_fast(args);
        if (audit && s != dedekind_sawtooth(args))
            throw Error("dedekind audit mismatch at (" + p.alpha.str() + "," +
                        p.beta.str() + ")");
        sum += s;
    }
    return 1 + degree(sd) / 3 + 4 * sum;
}

// C_T = (1/512) * integral of R^2 kappa ^ d kappa; the integral is an
// input (a square against a positive volume form, hence >= 0).
inline Rational counterterm(const Rational& int_r2_volume) {
    if (int_r2_volume < 0)
        throw NegativeCurvatureIntegral("curvature integral must be >= 0, got " +
                                        to_string(int_r2_volume));
    return int_r2_volume / 512;
}

// eta of the middle contact operator: eta0 = eta(-*D) + C_T, rearranged.
inline Rational eta_contact(const Rational& eta0_value, const Rational& ct) {
    return eta0_value - ct;
}

// The e^{(pi i/4) eta0} factor of the partition function.
inline PhaseExponent phase(const Rational& eta0_value) {
    return PhaseExponent(eta0_value / 4);
}

// Twisting the 2-framing by s units multiplies Z by e^{2 pi i s/24},
// i.e. adds s/12 to the exponent of e^{i pi .}.
inline PhaseExponent twist_framing(const PhaseExponent& p, const Int& s) {
    return PhaseExponent(p.q() + Rational(s, 12));
}

// Gravitational Chern-Simons value over the adiabatic metric family:
// CS(A^{g_eps}) = (eps^-1/2) * int r w + (eps^-2/2) * int f^2 w.
// Vanishes as eps -> infinity.
inline Rational grav_cs_adiabatic(const Rational& int_r_omega, const Rational& int_f2_omega,
                                  const Rational& epsilon) {
    if (epsilon <= 0)
        throw NonPositiveEpsilon("epsilon must be > 0, got " + to_string(epsilon));
    return int_r_omega / (2 * epsilon) + int_f2_omega / (2 * epsilon * epsilon);
}

} // namespace seifert_cs
