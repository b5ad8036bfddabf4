#include <doctest.h>

#include "gapmd/lemmas.hpp"

using namespace gapmd;

namespace {

Mat from_rows(std::vector<Vec> rows) {
    Mat m(int(rows.size()), rows.empty() ? 0 : int(rows[0].size()));
    for (size_t i = 0; i < rows.size(); ++i)
        std::copy(rows[i].begin(), rows[i].end(), m.row(int(i)));
    return m;
}

LinearCode hamming74(const Field& F) {
    return make_code(F, from_rows({{1, 0, 0, 0, 1, 1, 0},
                                   {0, 1, 0, 0, 1, 0, 1},
                                   {0, 0, 1, 0, 0, 1, 1},
                                   {0, 0, 0, 1, 1, 1, 1}}));
}

LinearCode random_code(const Field& F, int k, int n, uint64_t seed) {
    Rng rng(seed);
    for (;;) {
        Mat G(k, n);
        for (auto& e : G.a) e = Elt(rng.below(F.q()));
        LinearCode C = make_code(F, G);
        if (C.k == k) return C;
    }
}

}  // namespace

TEST_SUITE("lemmas") {

TEST_CASE("claim11 passes for every supported field") {
    for (int q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}) {
        auto rep = check_claim11(Field::of(q));
        CHECK(rep.pass);
    }
}

TEST_CASE("lemma9: exact minima at small q") {
    auto r0 = check_lemma9(Field::of(3), 0);
    CHECK(r0.pass);
    CHECK(r0.measured == "1");
    auto r2 = check_lemma9(Field::of(3), 2);
    CHECK(r2.pass);
    CHECK(r2.measured == "3");  // exactly d+1
    auto b1 = check_lemma9(Field::of(2), 1);
    CHECK(b1.pass);
    CHECK(b1.measured == "2");
    CHECK_THROWS_AS(check_lemma9(Field::of(3), 3), ParseError);
}

TEST_CASE("lemma10: exact minima and the monomial basis structure") {
    auto r4 = check_lemma10(Field::of(3), 4);
    CHECK(r4.pass);
    CHECK(r4.measured == "9");
    CHECK(r4.params["nullspace_dim"] == 1);  // constants only

    auto r2 = check_lemma10(Field::of(3), 2);
    CHECK(r2.pass);
    CHECK(r2.measured == "3");  // same moment set as lemma9 at d=2

    auto b2 = check_lemma10(Field::of(2), 2);
    CHECK(b2.pass);
    CHECK(b2.measured == "4");
    CHECK(b2.params["nullspace_dim"] == 1);
}

TEST_CASE("lemma9/10 sampled mode is deterministic and advisory") {
    auto a = check_lemma9(Field::of(4), 1, 1 << 4, 0, 2000, 11);
    auto b = check_lemma9(Field::of(4), 1, 1 << 4, 0, 2000, 11);
    CHECK(a.measured == b.measured);
    CHECK(a.mode == "sampled(2000,11)");
    CHECK(a.pass);
}

TEST_CASE("lemma3 on the simplex code and a repetition code") {
    const Field& F = Field::of(2);
    auto rep = check_lemma3(F, simplex_code(3));
    CHECK(rep.pass);
    CHECK(rep.claimed == "24");  // ceil(16 * 3/2)

    auto rep2 = check_lemma3(F, make_code(F, from_rows({{1, 1}})));
    CHECK(rep2.pass);  // subcode is {0}
}

TEST_CASE("fact4 on Hamming and random codes") {
    const Field& F = Field::of(2);
    auto rep = check_fact4(F, hamming74(F));
    CHECK(rep.pass);
    CHECK(rep.claimed == "5");  // ceil(3 * 3/2)

    for (uint64_t seed = 0; seed < 3; ++seed) {
        auto r3 = check_fact4(Field::of(3), random_code(Field::of(3), 3, 8, 50 + seed));
        CHECK(r3.pass);
    }
}

TEST_CASE("fact2 equality on fixed and random pairs") {
    const Field& F = Field::of(2);
    auto rep = check_fact2(F, hamming74(F), hamming74(F));
    CHECK(rep.pass);
    CHECK(rep.claimed == "9");
    CHECK(rep.measured == "9");
}

TEST_CASE("claim12 dimension bound") {
    auto rep = check_claim12(Field::of(3), random_code(Field::of(3), 3, 8, 99));
    CHECK(rep.pass);
    CHECK(rep.claimed == "5");  // ceil(9/2)
}

TEST_CASE("experiment ncp2: affine minimum equals the assignment oracle") {
    auto planted = gen_planted(4, 8, 7).first;
    auto rep = experiment_ncp2(planted);
    CHECK(rep.pass);
    CHECK(rep.detail["ncp_min_weight"] == 8);  // weight m when satisfiable

    auto contra = experiment_ncp2(contradiction_instance());
    CHECK(contra.pass);
    CHECK(contra.detail["ncp_min_weight"] == 3);
}

TEST_CASE("experiment completeness on the binary build") {
    auto psi = make_instance(3, {{1, 0, 0}, {2, 0, 1}, {0, 1, 2}});
    auto rep = experiment_completeness(psi, "md2", 2, 0);
    CHECK(rep.pass);
    CHECK(rep.detail["distance_mode"] == "exact");

    CHECK_THROWS_AS(experiment_completeness(contradiction_instance(), "md2", 2, 0),
                    NotSatisfying);
}

TEST_CASE("experiment soundness on the binary build, exact enumeration") {
    auto psi = make_instance(3, {{0, 0, 0}, {1, 0, 0}, {2, 1, 1}});
    auto rep = experiment_soundness(psi, "md2", 2, 0);
    CHECK(rep.pass);
    CHECK(rep.detail["mode"] == "exact");
}

TEST_CASE("experiment soundness via the certificate when the budget is tight") {
    auto rep = experiment_soundness(contradiction_instance(), "mdq", 3, 0, 1 << 10);
    CHECK(rep.pass);
    CHECK(rep.detail["mode"] == "case-split-certificate");
}

TEST_CASE("experiment soundness certificate with Opt = 1/2 over F_3") {
    // two constraints on one variable pair: exactly one of them can hold
    auto half = make_instance(2, {{0, 0, 0}, {1, 0, 0}});
    auto rep = experiment_soundness(half, "mdq", 3, 0, 1 << 10);
    CHECK(rep.pass);
    CHECK(rep.detail["delta"] == "1/2");
    CHECK(rep.detail["mode"] == "case-split-certificate");
}

TEST_CASE("experiment goodcode on the small mdq artifact") {
    auto rep = experiment_goodcode(contradiction_instance(), "mdq", 3, 0, 1 << 10);
    CHECK(rep.pass);
    CHECK(rep.detail["distance_mode"] == "certified");
}

}  // TEST_SUITE
