#pragma once

#include <cstddef>
#include <vector>

#include "seifert_cs/errors.hpp"
#include "seifert_cs/seifert.hpp"
#include "seifert_cs/snf.hpp"

namespace seifert_cs {

// Presentation matrix of H1 (abelianized pi_1, genus handled separately as
// 2g free generators): row j carries alpha_j in column j and beta_j in the
// last column; the final row is (1,...,1,-n).  For N = 0 this degenerates
// to the 1x1 matrix [-n].
inline Matrix presentation_matrix(const SeifertData& sd) {
    std::size_t n = sd.pairs().size();
    Matrix m(n + 1, std::vector<Int>(n + 1, 0));
    for (std::size_t j = 0; j < n; ++j) {
        m[j][j] = sd.pairs()[j].alpha;
        m[j][n] = sd.pairs()[j].beta;
        m[n][j] = 1;
    }
    m[n][n] = -sd.n();
    return m;
}

struct HomologySummary {
    long long b1 = 0;                    // rank of H1
    std::vector<Int> torsion_coefficients; // d1 | d2 | ..., each >= 2
    Int torsion_order = 1;               // product; also |Tors H^2|
    Int flat_class_count = 1;            // = torsion_order

    friend bool operator==(const HomologySummary&, const HomologySummary&) = default;
};

inline HomologySummary homology_h1(const SeifertData& sd) {
    SnfResult snf = smith_normal_form(presentation_matrix(sd));
    HomologySummary out;
    long long zeros = 0;
    for (const Int& di : snf_diagonal(snf)) {
        if (di == 0)
            ++zeros;
        else if (di > 1) {
            out.torsion_coefficients.push_back(di);
            out.torsion_order *= di;
        }
    }
    out.b1 = 2 * sd.genus() + zeros;
    out.flat_class_count = out.torsion_order;
    return out;
}

// n_X = (dim H^1 - dim H^0)/2 = (b1 - 1)/2, X connected.
inline Rational n_exponent(const SeifertData& sd) {
    return Rational(homology_h1(sd).b1 - 1, 2);
}

// All tuples (r1,...,rm) with 0 <= ri < di, lexicographic; these label the
// flat U(1)-bundle classes p in Tors H^2(X;Z).
inline std::vector<std::vector<Int>> flat_bundle_classes(const HomologySummary& summary,
                                                         const Int& cap = 1000000) {
    if (summary.torsion_order > cap)
        throw EnumerationTooLarge("flat class count " + summary.torsion_order.str() +
                                  " exceeds cap " + cap.str());
    std::vector<std::vector<Int>> classes;
    classes.reserve(static_cast<std::size_t>(summary.torsion_order));
    std::vector<Int> cur(summary.torsion_coefficients.size(), 0);
    for (;;) {
        classes.push_back(cur);
        std::size_t i = cur.size();
        while (i > 0) {
            --i;
            if (++cur[i] < summary.torsion_coefficients[i]) break;
            cur[i] = 0;
            if (i == 0) return classes;
        }
        if (cur.empty()) return classes;
    }
}

} // namespace seifert_cs
