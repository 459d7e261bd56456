#pragma once

#include <string>
#include <vector>

#include "seifert_cs/homology.hpp"
#include "seifert_cs/invariants.hpp"
#include "seifert_cs/seifert.hpp"

namespace seifert_cs {

// Everything computable about Z_U(1)(X, p, k), with named symbolic
// placeholders for the factors that have no closed form: the per-class
// flat Chern-Simons action and the torsion-density integral (the contact
// and Ray-Singer densities agree, so one placeholder covers both).
struct PartitionReport {
    SeifertData seifert;
    Int level_k;
    Int framing; // twist units applied; 0 = canonical framing

    Rational degree;
    Rational vol_h_squared;
    Rational eta0;
    Rational n_exponent; // power of k
    PhaseExponent phase; // q = (eta0/4 + framing/12) mod 2

    HomologySummary homology;
    std::vector<std::vector<Int>> flat_classes;

    std::string flat_action_placeholder;
    std::string torsion_integral_placeholder;
    std::string genus_note; // non-empty when genus > 0
};

inline PartitionReport build_report(const SeifertData& sd, const Int& k,
                                    const Int& framing = 0,
                                    const Int& enum_cap = 1000000) {
    if (k < 1)
        throw InvalidLevel("level k must be >= 1, got " + k.str());
    Rational vol2 = vol_isotropy_squared(sd); // throws NonContactData for d <= 0
    Rational e0 = eta0(sd);
    HomologySummary h = homology_h1(sd);

    PartitionReport r{
        .seifert = sd,
        .level_k = k,
        .framing = framing,
        .degree = seifert_cs::degree(sd),
        .vol_h_squared = vol2,
        .eta0 = e0,
        .n_exponent = Rational(h.b1 - 1, 2),
        .phase = twist_framing(phase(e0), framing),
        .homology = h,
        .flat_classes = flat_bundle_classes(h, enum_cap),
        .flat_action_placeholder = "exp(i*pi*k*S_{X,P}(A_0))",
        .torsion_integral_placeholder = "integral_{M_P} (T^d)^(1/2)",
        .genus_note = sd.genus() > 0
                          ? std::string("genus > 0: eta0 formula applied as stated for genus 0 data")
                          : std::string{},
    };
    return r;
}

} // namespace seifert_cs
