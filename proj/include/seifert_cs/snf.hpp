#pragma once

#include <cstddef>
#include <vector>

#include "seifert_cs/rational.hpp"

namespace seifert_cs {

using Matrix = std::vector<std::vector<Int>>;

inline Matrix identity_matrix(std::size_t n) {
    Matrix m(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline Matrix matrix_product(const Matrix& a, const Matrix& b) {
    std::size_t r = a.size(), inner = b.size(), c = b.empty() ? 0 : b[0].size();
    Matrix out(r, std::vector<Int>(c, 0));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = 0; k < inner; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < c; ++j)
                out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

// Fraction-free Bareiss determinant, exact over Z.
inline Int determinant(Matrix m) {
    std::size_t n = m.size();
    if (n == 0) return 1;
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t piv = k + 1;
            while (piv < n && m[piv][k] == 0) ++piv;
            if (piv == n) return 0;
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

struct SnfResult {
    Matrix u; // rows x rows, unimodular
    Matrix d; // diagonal, d1 | d2 | ..., entries >= 0
    Matrix v; // cols x cols, unimodular
};

// Smith normal form by elementary row/column operations with
// least-absolute-value pivoting.  Exact arbitrary-precision arithmetic;
// U*M*V = D holds for the returned triple.
inline SnfResult smith_normal_form(const Matrix& m) {
    std::size_t rows = m.size();
    std::size_t cols = rows ? m[0].size() : 0;
    SnfResult res{identity_matrix(rows), m, identity_matrix(cols)};
    Matrix& d = res.d;

    auto add_row = [&](std::size_t dst, std::size_t src, const Int& q) {
        for (std::size_t j = 0; j < cols; ++j) d[dst][j] += q * d[src][j];
        for (std::size_t j = 0; j < rows; ++j) res.u[dst][j] += q * res.u[src][j];
    };
    auto add_col = [&](std::size_t dst, std::size_t src, const Int& q) {
        for (std::size_t i = 0; i < rows; ++i) d[i][dst] += q * d[i][src];
        for (std::size_t i = 0; i < cols; ++i) res.v[i][dst] += q * res.v[i][src];
    };
    auto swap_rows = [&](std::size_t a, std::size_t b) {
        std::swap(d[a], d[b]);
        std::swap(res.u[a], res.u[b]);
    };
    auto swap_cols = [&](std::size_t a, std::size_t b) {
        for (std::size_t i = 0; i < rows; ++i) std::swap(d[i][a], d[i][b]);
        for (std::size_t i = 0; i < cols; ++i) std::swap(res.v[i][a], res.v[i][b]);
    };
    auto negate_row = [&](std::size_t i) {
        for (auto& x : d[i]) x = -x;
        for (auto& x : res.u[i]) x = -x;
    };
    // nearest-integer quotient; keeps remainders at most half the divisor
    auto round_div = [](const Int& a, const Int& b) {
        Int q = a / b, r = a % b;
        if (2 * abs(r) > abs(b)) q += (r < 0) == (b < 0) ? 1 : -1;
        return q;
    };
    // move the least-absolute-value nonzero entry of the trailing block to
    // (t,t); false if the block is zero
    auto select_pivot = [&](std::size_t t) {
        std::size_t pi = t, pj = t;
        Int best = 0;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (d[i][j] != 0 && (best == 0 || abs(d[i][j]) < best)) {
                    best = abs(d[i][j]);
                    pi = i;
                    pj = j;
                }
        if (best == 0) return false;
        if (pi != t) swap_rows(t, pi);
        if (pj != t) swap_cols(t, pj);
        return true;
    };

    std::size_t t = 0;
    while (t < rows && t < cols) {
        if (!select_pivot(t)) break;
        for (;;) {
            // one reduction sweep against the current pivot; re-selecting the
            // global minimum each pass keeps coefficient growth in check
            for (std::size_t i = t + 1; i < rows; ++i)
                if (d[i][t] != 0) add_row(i, t, -round_div(d[i][t], d[t][t]));
            for (std::size_t j = t + 1; j < cols; ++j)
                if (d[t][j] != 0) add_col(j, t, -round_div(d[t][j], d[t][t]));

            bool residue = false;
            for (std::size_t i = t + 1; i < rows && !residue; ++i)
                if (d[i][t] != 0) residue = true;
            for (std::size_t j = t + 1; j < cols && !residue; ++j)
                if (d[t][j] != 0) residue = true;
            if (residue) {
                select_pivot(t); // strictly smaller pivot available
                continue;
            }
            // pivot must divide the whole trailing block
            bool fixed = false;
            for (std::size_t i = t + 1; i < rows && !fixed; ++i)
                for (std::size_t j = t + 1; j < cols && !fixed; ++j)
                    if (d[i][j] % d[t][t] != 0) {
                        add_row(t, i, 1);
                        fixed = true;
                    }
            if (!fixed) break;
        }
        if (d[t][t] < 0) negate_row(t);
        ++t;
    }
    return res;
}

inline std::vector<Int> snf_diagonal(const SnfResult& r) {
    std::size_t n = std::min(r.d.size(), r.d.empty() ? 0 : r.d[0].size());
    std::vector<Int> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = r.d[i][i];
    return out;
}

} // namespace seifert_cs
