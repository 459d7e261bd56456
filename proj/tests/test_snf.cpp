#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "seifert_cs/snf.hpp"

using namespace seifert_cs;

namespace {

bool is_diagonal(const Matrix& d) {
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = 0; j < d[i].size(); ++j)
            if (i != j && d[i][j] != 0) return false;
    return true;
}

void check_snf_contract(const Matrix& m) {
    SnfResult r = smith_normal_form(m);
    REQUIRE(is_diagonal(r.d));
    REQUIRE(matrix_product(matrix_product(r.u, m), r.v) == r.d);
    REQUIRE(abs(determinant(r.u)) == 1);
    REQUIRE(abs(determinant(r.v)) == 1);
    auto diag = snf_diagonal(r);
    for (std::size_t i = 0; i < diag.size(); ++i) {
        REQUIRE(diag[i] >= 0);
        if (i + 1 < diag.size() && diag[i] != 0)
            REQUIRE(diag[i + 1] % diag[i] == 0);
        if (diag[i] == 0 && i + 1 < diag.size())
            REQUIRE(diag[i + 1] == 0);
    }
}

} // namespace

TEST_CASE("SNF examples") {
    SnfResult a = smith_normal_form({{2, 0}, {0, 3}});
    CHECK(snf_diagonal(a) == std::vector<Int>{1, 6});

    SnfResult b = smith_normal_form({{0}});
    CHECK(snf_diagonal(b) == std::vector<Int>{0});

    SnfResult c = smith_normal_form({{2, 0, 1}, {0, 2, 1}, {1, 1, 0}});
    CHECK(snf_diagonal(c) == std::vector<Int>{1, 1, 4});
}

TEST_CASE("SNF contract on random matrices") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> dim_d(1, 8), entry_d(-50, 50);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t rows = dim_d(rng), cols = dim_d(rng);
        Matrix m(rows, std::vector<Int>(cols));
        for (auto& row : m)
            for (auto& x : row) x = entry_d(rng);
        check_snf_contract(m);
    }
}

TEST_CASE("determinant magnitude is preserved") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> dim_d(1, 6), entry_d(-20, 20);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = dim_d(rng);
        Matrix m(n, std::vector<Int>(n));
        for (auto& row : m)
            for (auto& x : row) x = entry_d(rng);
        Int prod = 1;
        for (const Int& d : snf_diagonal(smith_normal_form(m))) prod *= d;
        REQUIRE(prod == abs(determinant(m)));
    }
}

TEST_CASE("zero and rectangular matrices") {
    check_snf_contract({{0, 0}, {0, 0}});
    check_snf_contract({{1, 2, 3}});
    check_snf_contract({{4}, {6}});
}
