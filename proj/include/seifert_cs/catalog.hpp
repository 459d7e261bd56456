#pragma once

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "seifert_cs/errors.hpp"
#include "seifert_cs/parse.hpp"
#include "seifert_cs/seifert.hpp"

namespace seifert_cs {

struct CatalogEntry {
    std::string name;
    SeifertData data;
    std::string notes;
};

// Only contact-compatible (d > 0) entries with an unambiguous Seifert
// presentation ship here; L(p,q) with q != 1 has convention-dependent data
// and is deliberately absent.
inline std::vector<CatalogEntry> builtin_catalog() {
    auto mk = [](std::string name, const char* text, std::string notes) {
        return CatalogEntry{std::move(name), parse_seifert(text), std::move(notes)};
    };
    return {
        mk("S3-hopf", "n=1", "Hopf fibration S^1 -> S^3 -> CP^1; trivial H1"),
        mk("lens-L2-1", "n=2", "lens space L(2,1) = RP^3"),
        mk("lens-L3-1", "n=3", "lens space L(3,1)"),
        mk("lens-L5-1", "n=5", "lens space L(5,1)"),
        mk("lens-L7-1", "n=7", "lens space L(7,1)"),
        mk("seifert-2-3-5", "n=0; (2,1)(3,1)(5,1)",
           "three exceptional fibers (2,1),(3,1),(5,1); degree 31/30"),
    };
}

inline std::vector<CatalogEntry> load_catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open catalog file: " + path);
    nlohmann::json j;
    in >> j;
    std::vector<CatalogEntry> out;
    for (const auto& e : j.at("entries")) {
        out.push_back({e.at("name").get<std::string>(),
                       parse_seifert(e.at("seifert").get<std::string>()),
                       e.value("notes", std::string{})});
    }
    return out;
}

} // namespace seifert_cs
