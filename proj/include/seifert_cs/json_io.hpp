#pragma once

#include <string>

#include <json.hpp>

#include "seifert_cs/homology.hpp"
#include "seifert_cs/invariants.hpp"
#include "seifert_cs/parse.hpp"
#include "seifert_cs/report.hpp"

namespace seifert_cs {

// Rationals cross the JSON boundary as reduced "p/q" strings (integers as
// "p"), never as floats.  PhaseExponent carries its meaning tag so that
// e^{i pi q} is not misread as e^{2 pi i q}.

inline nlohmann::json phase_to_json(const PhaseExponent& p) {
    return {{"q", to_string(p.q())}, {"meaning", "exp(i*pi*q)"}};
}

inline nlohmann::json homology_to_json(const HomologySummary& h) {
    nlohmann::json torsion = nlohmann::json::array();
    for (const auto& t : h.torsion_coefficients) torsion.push_back(t.str());
    return {{"b1", h.b1},
            {"torsion_coefficients", torsion},
            {"torsion_order", h.torsion_order.str()},
            {"flat_class_count", h.flat_class_count.str()}};
}

inline nlohmann::json report_to_json(const PartitionReport& r, bool approx = false) {
    nlohmann::json classes = nlohmann::json::array();
    for (const auto& c : r.flat_classes) {
        nlohmann::json tuple = nlohmann::json::array();
        for (const auto& x : c) tuple.push_back(x.str());
        classes.push_back(tuple);
    }
    nlohmann::json j{
        {"seifert", render_seifert(r.seifert)},
        {"level_k", r.level_k.str()},
        {"framing", r.framing.str()},
        {"degree", to_string(r.degree)},
        {"vol_h_squared", to_string(r.vol_h_squared)},
        {"eta0", to_string(r.eta0)},
        {"n_exponent", to_string(r.n_exponent)},
        {"phase_exponent", to_string(r.phase.q())},
        {"phase", phase_to_json(r.phase)},
        {"homology", homology_to_json(r.homology)},
        {"flat_classes", classes},
        {"placeholders",
         {{"flat_action", r.flat_action_placeholder},
          {"torsion_integral", r.torsion_integral_placeholder}}},
    };
    if (!r.genus_note.empty()) j["genus_note"] = r.genus_note;
    if (approx) {
        j["eta0_approx"] = to_double(r.eta0);
        j["phase_exponent_approx"] = to_double(r.phase.q());
        j["degree_approx"] = to_double(r.degree);
    }
    return j;
}

} // namespace seifert_cs
