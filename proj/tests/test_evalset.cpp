#include <doctest.h>

#include "gapmd/evalset.hpp"

using namespace gapmd;

TEST_SUITE("evalset") {

TEST_CASE("exhaustive sets") {
    const Field& F2 = Field::of(2);
    EvaluationSet r = exhaustive_set(F2, 3);
    CHECK(r.points.size() == 8);
    CHECK(r.points.front() == Vec{0, 0, 0});
    CHECK(r.points.back() == Vec{1, 1, 1});

    const Field& F3 = Field::of(3);
    EvaluationSet r3 = exhaustive_set(F3, 2);
    CHECK(r3.points.size() == 9);
    CHECK(r3.points.front() == Vec{0, 0});
    CHECK(r3.points[1] == Vec{0, 1});
}

TEST_CASE("exhaustive sets measure epsilon zero at degree q-1") {
    const Field& F2 = Field::of(2);
    for (int n = 1; n <= 4; ++n) {
        auto rep = verify_fooling(F2, exhaustive_set(F2, n), 1);
        CHECK(rep.epsilon == Frac(0));
    }
    const Field& F3 = Field::of(3);
    for (int n = 1; n <= 2; ++n) {
        auto rep = verify_fooling(F3, exhaustive_set(F3, n), 2);
        CHECK(rep.epsilon == Frac(0));
    }
}

TEST_CASE("the all-zero multiset has the worst possible linear epsilon") {
    EvaluationSet r{2, 2, {{0, 0}, {0, 0}, {0, 0}}, "explicit-file"};
    auto rep = verify_fooling(Field::of(2), r, 1);
    CHECK(rep.epsilon == Frac(1));
}

TEST_CASE("small-bias power construction: deterministic, measured bias within target") {
    const Field& F2 = Field::of(2);
    EvaluationSet a = small_bias_set(F2, 4, Frac(1, 2));
    EvaluationSet b = small_bias_set(F2, 4, Frac(1, 2));
    CHECK(a.points == b.points);

    auto rep = verify_fooling(F2, a, 1);
    CHECK(rep.epsilon <= Frac(1, 2));

    // a single variable: q points hit the line uniformly
    const Field& F3 = Field::of(3);
    EvaluationSet c = small_bias_set(F3, 1, Frac(1, 3));
    auto rep3 = verify_fooling(F3, c, 1);
    CHECK(rep3.epsilon <= Frac(1, 3));
}

TEST_CASE("viola_sum basics") {
    const Field& F2 = Field::of(2);
    EvaluationSet base = exhaustive_set(F2, 2);
    EvaluationSet same = viola_sum(F2, base, 1);
    CHECK(same.points == base.points);

    EvaluationSet two = viola_sum(F2, base, 2);
    CHECK(two.points.size() == 16);
    // sums of an exhaustive set stay exhaustive in distribution
    CHECK(verify_fooling(F2, two, 2).epsilon == Frac(0));
}

TEST_CASE("viola_sum never increases the measured linear epsilon") {
    const Field& F2 = Field::of(2);
    EvaluationSet base = small_bias_set(F2, 3, Frac(1, 2));
    Frac e1 = verify_fooling(F2, base, 1).epsilon;
    Frac e1sum = verify_fooling(F2, viola_sum(F2, base, 2), 1).epsilon;
    CHECK(e1sum <= e1);
}

TEST_CASE("sampled fooling is seed-deterministic") {
    const Field& F2 = Field::of(2);
    EvaluationSet base = small_bias_set(F2, 4, Frac(1, 2));
    auto a = verify_fooling_sampled(F2, base, 2, 500, 7);
    auto b = verify_fooling_sampled(F2, base, 2, 500, 7);
    CHECK(a.epsilon == b.epsilon);
    CHECK(a.worst_poly == b.worst_poly);
    CHECK(a.mode == "sampled(500,7)");
}

TEST_CASE("nonzero fraction: exact minima with witnesses") {
    const Field& F3 = Field::of(3);
    EvaluationSet plane = exhaustive_set(F3, 2);
    auto e0 = verify_nonzero_fraction(F3, plane, 0);
    CHECK(e0.min_fraction == Frac(1));
    auto e1 = verify_nonzero_fraction(F3, plane, 1);
    CHECK(e1.min_fraction == Frac(2, 3));
    auto e2 = verify_nonzero_fraction(F3, plane, 2);
    CHECK(e2.min_fraction == Frac(1, 3));

    const Field& F2 = Field::of(2);
    auto c = verify_nonzero_fraction(F2, exhaustive_set(F2, 3), 1);
    CHECK(c.min_fraction == Frac(1, 2));
}

TEST_CASE("nonzero fraction dominates 1 - e/q - epsilon for constructed sets") {
    const Field& F2 = Field::of(2);
    for (int n : {2, 3}) {
        EvaluationSet R = small_bias_set(F2, n, Frac(1, 2));
        for (int e = 0; e <= 1; ++e) {
            Frac eps = verify_fooling(F2, R, e == 0 ? 1 : e).epsilon;
            Frac nz = verify_nonzero_fraction(F2, R, e).min_fraction;
            CHECK(nz >= Frac(1) - Frac(e, 2) - eps);
        }
    }
}

TEST_CASE("monomial order is graded lexicographic with constant first") {
    auto m = monomials_up_to(2, 2, 2);
    REQUIRE(m.size() == 6);
    CHECK(m[0] == std::vector<int>{0, 0});
    CHECK(m[1] == std::vector<int>{0, 1});
    CHECK(m[2] == std::vector<int>{1, 0});
    CHECK(m[3] == std::vector<int>{0, 2});
    CHECK(m[4] == std::vector<int>{1, 1});
    CHECK(m[5] == std::vector<int>{2, 0});
}

TEST_CASE("size guards") {
    const Field& F2 = Field::of(2);
    CHECK_THROWS_AS(exhaustive_set(F2, 25), TooLarge);
    EvaluationSet big = exhaustive_set(F2, 13);
    CHECK_THROWS_AS(viola_sum(F2, big, 2), SizeOverflow);
}

}  // TEST_SUITE
