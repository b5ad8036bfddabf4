#include <doctest.h>

#include "gapmd/linalg.hpp"

using namespace gapmd;

namespace {

Mat from_rows(std::vector<Vec> rows) {
    Mat m(int(rows.size()), rows.empty() ? 0 : int(rows[0].size()));
    for (size_t i = 0; i < rows.size(); ++i)
        std::copy(rows[i].begin(), rows[i].end(), m.row(int(i)));
    return m;
}

Mat random_mat(const Field& F, int rows, int cols, uint64_t seed) {
    Rng rng(seed);
    Mat m(rows, cols);
    for (auto& e : m.a) e = Elt(rng.below(F.q()));
    return m;
}

// generator of the [7,4] Hamming code
Mat hamming74() {
    return from_rows({{1, 0, 0, 0, 1, 1, 0},
                      {0, 1, 0, 0, 1, 0, 1},
                      {0, 0, 1, 0, 0, 1, 1},
                      {0, 0, 0, 1, 1, 1, 1}});
}

}  // namespace

TEST_SUITE("linalg") {

TEST_CASE("rref basics") {
    const Field& F2 = Field::of(2);
    Mat id = Mat::identity(3);
    auto r = rref(F2, id);
    CHECK(r.rank == 3);
    CHECK(r.m == id);

    Mat zero(2, 4);
    auto rz = rref(F2, zero);
    CHECK(rz.rank == 0);
    CHECK(rz.m == zero);

    // second row is twice the first over F_5
    const Field& F5 = Field::of(5);
    auto r5 = rref(F5, from_rows({{1, 2}, {2, 4}}));
    CHECK(r5.rank == 1);
    CHECK(r5.m == from_rows({{1, 2}, {0, 0}}));
}

TEST_CASE("rref is idempotent on random matrices") {
    for (int q : {2, 3, 4}) {
        const Field& F = Field::of(q);
        for (uint64_t seed = 0; seed < 10; ++seed) {
            Mat m = random_mat(F, 5, 7, 100 + seed);
            auto r1 = rref(F, m);
            auto r2 = rref(F, r1.m);
            CHECK(r1.m == r2.m);
            CHECK(r1.rank == r2.rank);
        }
    }
}

TEST_CASE("nullspace basics") {
    const Field& F2 = Field::of(2);
    CHECK(nullspace_basis(F2, Mat::identity(4)).empty());
    auto basis = nullspace_basis(F2, from_rows({{1, 1}}));
    REQUIRE(basis.size() == 1);
    CHECK(basis[0] == Vec{1, 1});

    // parity-check matrix of the [7,4] Hamming code has rank 3, so the
    // nullspace is the code itself with 4 basis vectors
    Mat H = from_rows({{1, 1, 0, 1, 1, 0, 0},
                       {1, 0, 1, 1, 0, 1, 0},
                       {0, 1, 1, 1, 0, 0, 1}});
    auto hb = nullspace_basis(F2, H);
    CHECK(hb.size() == 4);
    for (const Vec& v : hb) CHECK(is_zero(mat_vec(F2, H, v)));
}

TEST_CASE("rank + nullity = cols and Mv = 0 on random matrices") {
    for (int q : {2, 3, 4}) {
        const Field& F = Field::of(q);
        for (uint64_t seed = 0; seed < 12; ++seed) {
            int rows = 3 + int(seed % 5), cols = 4 + int(seed % 9);
            Mat m = random_mat(F, rows, cols, 7000 + 31 * seed + q);
            auto basis = nullspace_basis(F, m);
            CHECK(int(basis.size()) + rank_of(F, m) == cols);
            for (const Vec& v : basis) CHECK(is_zero(mat_vec(F, m, v)));
        }
    }
}

TEST_CASE("solve") {
    const Field& F2 = Field::of(2);
    Vec b{1, 0, 1};
    auto x = solve(F2, Mat::identity(3), b);
    REQUIRE(x);
    CHECK(*x == b);

    auto x2 = solve(F2, from_rows({{1, 1}}), Vec{1});
    REQUIRE(x2);
    CHECK(*x2 == Vec{1, 0});  // free variable zeroed

    CHECK(!solve(F2, from_rows({{1}, {1}}), Vec{0, 1}));  // inconsistent
    CHECK_THROWS_AS(solve(F2, Mat::identity(3), Vec{1}), DimensionMismatch);
}

TEST_CASE("left_inverse") {
    const Field& F2 = Field::of(2);
    Mat id = Mat::identity(4);
    CHECK(left_inverse(F2, id) == id);

    Mat rep(3, 1);
    rep.at(0, 0) = rep.at(1, 0) = rep.at(2, 0) = 1;
    Mat L = left_inverse(F2, rep);
    CHECK(L == from_rows({{1, 0, 0}}));  // first coordinate decodes

    // transposed simplex [7,3] generator: 7x3, full column rank
    const Field& F = Field::of(2);
    Mat G(7, 3);
    for (int col = 1; col <= 7; ++col)
        for (int row = 0; row < 3; ++row) G.at(col - 1, row) = Elt((col >> (2 - row)) & 1);
    Mat Ls = left_inverse(F, G);
    CHECK(mat_mul(F, Ls, G) == Mat::identity(3));

    CHECK_THROWS_AS(left_inverse(F2, from_rows({{1, 1}, {1, 1}})), RankDeficient);
}

TEST_CASE("left_inverse times matrix is identity on random full-rank inputs") {
    for (int q : {2, 3, 5}) {
        const Field& F = Field::of(q);
        for (uint64_t seed = 0; seed < 8; ++seed) {
            Mat m = random_mat(F, 9, 4, 400 + seed * 13 + q);
            if (rank_of(F, m) < 4) continue;
            CHECK(mat_mul(F, left_inverse(F, m), m) == Mat::identity(4));
        }
    }
}

TEST_CASE("kronecker") {
    const Field& F2 = Field::of(2);
    Mat one(1, 1);
    one.at(0, 0) = 1;
    Mat B = random_mat(F2, 3, 4, 5);
    CHECK(kronecker(F2, one, B) == B);
    CHECK(kronecker(F2, Mat::identity(2), Mat::identity(2)) == Mat::identity(4));

    const Field& F3 = Field::of(3);
    Mat A = random_mat(F3, 2, 3, 6), C = random_mat(F3, 3, 2, 7);
    Mat K = kronecker(F3, A, C);
    REQUIRE(K.rows == 6);
    REQUIRE(K.cols == 6);
    for (int i1 = 0; i1 < 2; ++i1)
        for (int i2 = 0; i2 < 3; ++i2)
            for (int j1 = 0; j1 < 3; ++j1)
                for (int j2 = 0; j2 < 2; ++j2)
                    CHECK(K.at(i1 * 3 + i2, j1 * 2 + j2) ==
                          F3.mul(A.at(i1, j1), C.at(i2, j2)));
}

TEST_CASE("independent_rows keeps the first spanning subset") {
    const Field& F2 = Field::of(2);
    Mat m = from_rows({{1, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 0}});
    auto keep = independent_rows(F2, m);
    CHECK(keep == std::vector<int>{0, 2});
    CHECK(independent_rows(F2, hamming74()).size() == 4);
}

}  // TEST_SUITE
