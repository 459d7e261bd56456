#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "seifert_cs/errors.hpp"
#include "seifert_cs/rational.hpp"

namespace seifert_cs {

struct FiberPair {
    Int alpha; // multiplicity, >= 1
    Int beta;  // local winding, gcd(alpha, beta) = 1

    friend bool operator==(const FiberPair&, const FiberPair&) = default;
};

// Seifert invariants [g; n; (a1,b1),...,(aN,bN)].  Immutable after
// construction via validate(); betas are kept verbatim, never normalized
// into [0, alpha).
class SeifertData {
public:
    static SeifertData validate(long long genus, Int n, std::vector<FiberPair> pairs) {
        if (genus < 0)
            throw NegativeGenus("genus must be non-negative, got " + std::to_string(genus));
        for (std::size_t j = 0; j < pairs.size(); ++j) {
            const auto& p = pairs[j];
            if (p.alpha < 1)
                throw InvalidAlpha("pair " + std::to_string(j + 1) +
                                   ": alpha must be >= 1, got " + p.alpha.str());
            if (gcd(p.alpha, abs(p.beta)) != 1)
                throw NotCoprime("pair " + std::to_string(j + 1) + ": gcd(" + p.alpha.str() +
                                 ", " + p.beta.str() + ") != 1");
        }
        return SeifertData(genus, std::move(n), std::move(pairs));
    }

    long long genus() const { return genus_; }
    const Int& n() const { return n_; }
    const std::vector<FiberPair>& pairs() const { return pairs_; }

    friend bool operator==(const SeifertData&, const SeifertData&) = default;

private:
    SeifertData(long long genus, Int n, std::vector<FiberPair> pairs)
        : genus_(genus), n_(std::move(n)), pairs_(std::move(pairs)) {}

    long long genus_;
    Int n_;
    std::vector<FiberPair> pairs_;
};

// d = n + sum beta_j / alpha_j, the rational first Chern number of the
// fibration.
inline Rational degree(const SeifertData& sd) {
    Rational d(sd.n());
    for (const auto& p : sd.pairs())
        d += Rational(p.beta, p.alpha);
    return d;
}

// Vol(H)^2 = integral of kappa ^ d kappa = d.  The exact square is the
// canonical stored value; take a square root at render time if needed.
inline Rational vol_isotropy_squared(const SeifertData& sd) {
    Rational d = degree(sd);
    if (d <= 0)
        throw NonContactData("degree = " + to_string(d) +
                             " <= 0: no compatible contact form");
    return d;
}

// (alpha_j, beta_j) -> (alpha_j, beta_j + m*alpha_j), n -> n - m.
// Leaves the underlying manifold, and hence every derived invariant,
// unchanged.  j is 1-based.
inline SeifertData twist_move(const SeifertData& sd, std::size_t j, const Int& m) {
    if (j < 1 || j > sd.pairs().size())
        throw IndexOutOfRange("pair index " + std::to_string(j) + " out of range 1.." +
                              std::to_string(sd.pairs().size()));
    auto pairs = sd.pairs();
    pairs[j - 1].beta += m * pairs[j - 1].alpha;
    return SeifertData::validate(sd.genus(), sd.n() - m, std::move(pairs));
}

} // namespace seifert_cs
