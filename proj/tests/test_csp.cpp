#include <doctest.h>

#include "gapmd/csp.hpp"

using namespace gapmd;

TEST_SUITE("csp") {

TEST_CASE("satisfied_count") {
    auto psi = make_instance(3, {{2, 0, 1}});  // x3 = NAND(x1, x2), 0-indexed
    CHECK(satisfied_count(psi, {0, 0, 1}) == 1);
    CHECK(satisfied_count(psi, {1, 1, 1}) == 0);
    CHECK_THROWS_AS(satisfied_count(psi, {0, 0}), DimensionMismatch);
}

TEST_CASE("instance validation") {
    CHECK_THROWS_AS(make_instance(2, {}), ParseError);
    CHECK_THROWS_AS(make_instance(2, {{0, 0, 2}}), ParseError);          // out of range
    CHECK_THROWS_AS(make_instance(3, {{0, 0, 1}}), ParseError);           // x3 uncovered
    CHECK_NOTHROW(make_instance(3, {{2, 0, 1}}));
}

TEST_CASE("opt_exact on hand instances") {
    auto contra = contradiction_instance();
    auto r = opt_exact(contra);
    CHECK(r.opt == Frac(0));
    CHECK(r.best_count == 0);

    // {x1 = NAND(x1,x1), x2 = NAND(x1,x1)}: exactly one of the two holds
    auto half = make_instance(2, {{0, 0, 0}, {1, 0, 0}});
    auto r2 = opt_exact(half);
    CHECK(r2.opt == Frac(1, 2));
    CHECK(satisfied_count(half, r2.witness) == r2.best_count);
}

TEST_CASE("opt_exact matches the serial reference and is thread independent") {
    for (uint64_t seed = 1; seed <= 5; ++seed) {
        auto psi = gen_noisy(5 + int(seed % 3), 12, 0.4, seed);
        auto ser = opt_exact_serial(psi);
        auto par1 = opt_exact(psi, 1);
        auto par8 = opt_exact(psi, 8);
        CHECK(ser.best_count == par1.best_count);
        CHECK(ser.witness == par1.witness);
        CHECK(par1.best_count == par8.best_count);
        CHECK(par1.witness == par8.witness);
    }
}

TEST_CASE("opt witness is the lexicographically smallest maximizer") {
    // x2 = NAND(x1, x1): satisfied by (0,1) and (1,0); lex order picks (0,1)
    auto psi = make_instance(2, {{1, 0, 0}});
    auto r = opt_exact(psi);
    CHECK(r.opt == Frac(1));
    CHECK(r.witness == Assignment{0, 1});
}

TEST_CASE("opt_exact rejects oversized instances") {
    std::vector<NandConstraint> cons;
    for (int v = 0; v < 25; ++v) cons.push_back({v, v, v});
    auto psi = make_instance(25, cons);
    CHECK_THROWS_AS(opt_exact(psi), TooLarge);
}

TEST_CASE("planted instances are satisfiable, covered, and seed-deterministic") {
    for (uint64_t seed = 1; seed <= 6; ++seed) {
        auto [psi, beta] = gen_planted(4, 8, seed);
        CHECK(psi.m() == 8);
        CHECK(satisfied_count(psi, beta) == 8);
        CHECK(opt_exact(psi).opt == Frac(1));

        auto [psi2, beta2] = gen_planted(4, 8, seed);
        CHECK(psi.cons.size() == psi2.cons.size());
        for (size_t i = 0; i < psi.cons.size(); ++i) {
            CHECK(psi.cons[i].k == psi2.cons[i].k);
            CHECK(psi.cons[i].i == psi2.cons[i].i);
            CHECK(psi.cons[i].j == psi2.cons[i].j);
        }
        CHECK(beta == beta2);
    }
    CHECK_THROWS_AS(gen_planted(1, 4, 1), ParseError);
    CHECK_THROWS_AS(gen_planted(4, 3, 1), ParseError);
}

TEST_CASE("noisy instances measure their own optimum") {
    auto psi0 = gen_noisy(4, 12, 0.0, 3);
    CHECK(opt_exact(psi0).opt == Frac(1));

    auto psi = gen_noisy(4, 12, 0.5, 3);
    auto r = opt_exact(psi);
    CHECK(r.opt < Frac(1));
    // flipping 6 of 12 leaves at least the other 6 satisfiable
    CHECK(r.best_count >= 6);
}

}  // TEST_SUITE
