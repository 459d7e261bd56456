#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "seifert_cs/homology.hpp"
#include "test_util.hpp"

using namespace seifert_cs;

TEST_CASE("presentation matrix pattern") {
    CHECK(presentation_matrix(SeifertData::validate(0, 1, {})) == Matrix{{-1}});
    CHECK(presentation_matrix(SeifertData::validate(0, 0, {{2, 1}, {2, 1}})) ==
          Matrix{{2, 0, 1}, {0, 2, 1}, {1, 1, 0}});
    CHECK(presentation_matrix(SeifertData::validate(0, 2, {{3, 1}})) ==
          Matrix{{3, 1}, {1, -2}});
}

TEST_CASE("homology of basic spaces") {
    HomologySummary hopf = homology_h1(SeifertData::validate(0, 1, {}));
    CHECK(hopf.b1 == 0);
    CHECK(hopf.torsion_coefficients.empty());
    CHECK(hopf.torsion_order == 1);

    HomologySummary lens5 = homology_h1(SeifertData::validate(0, 5, {}));
    CHECK(lens5.b1 == 0);
    CHECK(lens5.torsion_coefficients == std::vector<Int>{5});
    CHECK(lens5.torsion_order == 5);

    HomologySummary quat = homology_h1(SeifertData::validate(0, 0, {{2, 1}, {2, 1}}));
    CHECK(quat.b1 == 0);
    CHECK(quat.torsion_coefficients == std::vector<Int>{4});
    CHECK(quat.flat_class_count == 4);
}

TEST_CASE("genus contributes 2g to b1; fiber class contributes 1 iff d = 0") {
    CHECK(homology_h1(SeifertData::validate(1, 1, {})).b1 == 2);
    CHECK(homology_h1(SeifertData::validate(2, 3, {})).b1 == 4);
    // degree 0: n = 0 with no pairs is U(1) x S^2-like data, b1 picks up the fiber
    CHECK(homology_h1(SeifertData::validate(0, 0, {})).b1 == 1);
    CHECK(homology_h1(SeifertData::validate(0, 0, {{2, 1}, {2, -1}})).b1 == 1);
}

TEST_CASE("b1 parity: even iff degree != 0") {
    std::mt19937 rng(31);
    for (int i = 0; i < 100; ++i) {
        SeifertData sd = test_util::random_seifert(rng, false);
        long long b1 = homology_h1(sd).b1;
        if (degree(sd) != 0)
            CHECK(b1 % 2 == 0);
        else
            CHECK(b1 % 2 == 1);
    }
}

TEST_CASE("product formula: |Tors H1| = (prod alpha) * |d| for genus 0, d != 0") {
    std::mt19937 rng(17);
    int tested = 0;
    while (tested < 200) {
        SeifertData sd = test_util::random_seifert(rng, false, 0);
        Rational d = degree(sd);
        if (d == 0) continue;
        Int prod_alpha = 1;
        for (const auto& p : sd.pairs()) prod_alpha *= p.alpha;
        Rational expected = prod_alpha * abs(d);
        REQUIRE(is_integer(expected));
        REQUIRE(homology_h1(sd).torsion_order == numerator(expected));
        ++tested;
    }
}

TEST_CASE("homology is invariant under twist_move") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> m_d(-3, 3);
    int tested = 0;
    while (tested < 100) {
        SeifertData sd = test_util::random_seifert(rng, false);
        if (sd.pairs().empty()) continue;
        std::uniform_int_distribution<std::size_t> j_d(1, sd.pairs().size());
        SeifertData moved = twist_move(sd, j_d(rng), m_d(rng));
        REQUIRE(homology_h1(moved) == homology_h1(sd));
        ++tested;
    }
}

TEST_CASE("n_exponent = (b1 - 1)/2") {
    CHECK(n_exponent(SeifertData::validate(0, 1, {})) == Rational(-1, 2));
    CHECK(n_exponent(SeifertData::validate(1, 1, {})) == Rational(1, 2));
    std::mt19937 rng(41);
    for (int i = 0; i < 50; ++i) {
        SeifertData sd = test_util::random_seifert(rng, true, 0);
        if (degree(sd) != 0) CHECK(n_exponent(sd) == Rational(-1, 2));
    }
}

TEST_CASE("flat bundle class enumeration") {
    HomologySummary trivial;
    CHECK(flat_bundle_classes(trivial) == std::vector<std::vector<Int>>{{}});

    HomologySummary z4;
    z4.torsion_coefficients = {4};
    z4.torsion_order = z4.flat_class_count = 4;
    CHECK(flat_bundle_classes(z4) ==
          std::vector<std::vector<Int>>{{0}, {1}, {2}, {3}});

    HomologySummary z2z4;
    z2z4.torsion_coefficients = {2, 4};
    z2z4.torsion_order = z2z4.flat_class_count = 8;
    auto classes = flat_bundle_classes(z2z4);
    REQUIRE(classes.size() == 8);
    CHECK(classes.front() == std::vector<Int>{0, 0});
    CHECK(classes[1] == std::vector<Int>{0, 1});
    CHECK(classes.back() == std::vector<Int>{1, 3});

    HomologySummary big;
    big.torsion_coefficients = {1000, 2000};
    big.torsion_order = big.flat_class_count = 2000000;
    CHECK_THROWS_AS(flat_bundle_classes(big), EnumerationTooLarge);

    HomologySummary mid;
    mid.torsion_coefficients = {10, 20};
    mid.torsion_order = mid.flat_class_count = 200;
    CHECK_THROWS_AS(flat_bundle_classes(mid, Int(100)), EnumerationTooLarge);
    CHECK(flat_bundle_classes(mid, Int(200)).size() == 200);
}
