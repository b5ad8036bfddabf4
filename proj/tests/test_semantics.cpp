// Independent semantic models of the reductions: the codeword sets are
// rebuilt directly from the defining formulas (assignments in, indicator
// blocks out) and compared as sets against the span of the constructed
// generator matrices.  Nothing here goes through the constraint-system or
// nullspace machinery, so agreement pins the construction end to end.

#include <doctest.h>

#include <algorithm>
#include <set>

#include "gapmd/reduction.hpp"

using namespace gapmd;

namespace {

std::set<Vec> span_of(const Field& F, const LinearCode& C) {
    std::set<Vec> out;
    uint64_t total = 1;
    for (int i = 0; i < C.k; ++i) total *= F.q();
    for (uint64_t msg = 0; msg < total; ++msg) {
        Vec m(C.k);
        uint64_t v = msg;
        for (int j = 0; j < C.k; ++j) { m[j] = Elt(v % F.q()); v /= F.q(); }
        out.insert(row_times_mat(F, m, C.G));
    }
    return out;
}

// entry order within a 4-block: (0,0),(0,1),(1,0),(1,1)
void append_s_block(Vec& out, int r, int x0, int xi, int xj, int xk) {
    int entries[4] = {xi ^ xj ^ xk, x0 ^ xj ^ xk, x0 ^ xi ^ xk, x0 ^ xk};
    for (int e = 0; e < 4; ++e)
        for (int rep = 0; rep < r; ++rep) out.push_back(Elt(entries[e]));
}

void append_z_block(Vec& out, int x0, int yi, int yj, int Yij) {
    out.push_back(Elt(x0 ^ yi ^ yj ^ Yij));
    out.push_back(Elt(yj ^ Yij));
    out.push_back(Elt(yi ^ Yij));
    out.push_back(Elt(Yij));
}

}  // namespace

TEST_SUITE("semantics") {

TEST_CASE("ncp2: the affine space is exactly the formula image of all assignments") {
    const Field& F = Field::of(2);
    auto psi = make_instance(3, {{1, 0, 0}, {2, 0, 1}, {0, 1, 2}});
    auto art = build_ncp2(psi);

    // constructed set: offset + span
    std::set<Vec> constructed;
    for (const Vec& c : span_of(F, art.code)) {
        Vec p = *art.offset;
        for (size_t i = 0; i < p.size(); ++i) p[i] = F.add(p[i], c[i]);
        constructed.insert(p);
    }

    // semantic set: one point per assignment, S blocks from the inverse
    // formulas with the constant set to 1
    std::set<Vec> semantic;
    for (uint32_t a = 0; a < 8; ++a) {
        int x[3] = {int(a >> 2) & 1, int(a >> 1) & 1, int(a) & 1};
        Vec point;
        for (const auto& con : psi.cons)
            append_s_block(point, 1, 1, x[con.i], x[con.j], x[con.k]);
        semantic.insert(point);
    }
    CHECK(constructed == semantic);
}

TEST_CASE("md2: the code is exactly the formula image of (x0, x, Y-kernel)") {
    const Field& F = Field::of(2);
    auto psi = make_instance(3, {{0, 0, 0}, {1, 0, 0}, {2, 1, 1}});
    LinearCode C = simplex_code(3);
    const int N = C.n, r = 2;
    auto art = build_mindist2(psi, C, r);

    std::set<Vec> constructed = span_of(F, art.code);

    // the valid Y for a given y are y y^T plus the symmetric zero-diagonal
    // subcode of C (x) C
    LinearCode W = symmetric_zero_diag_subcode(F, C);
    std::set<Vec> semantic;
    for (int x0 = 0; x0 <= 1; ++x0)
        for (uint32_t a = 0; a < 8; ++a) {
            Vec x{Elt(a >> 2 & 1), Elt(a >> 1 & 1), Elt(a & 1)};
            Vec y = row_times_mat(F, x, C.G);
            for (const Vec& w : span_of(F, W)) {
                Vec point;
                for (int i = 0; i < N; ++i)
                    for (int j = 0; j < N; ++j) {
                        int Yij = (y[i] & y[j]) ^ w[i * N + j];  // Y = y y^T + W
                        append_z_block(point, x0, y[i], y[j], Yij);
                    }
                for (const auto& con : psi.cons)
                    append_s_block(point, r, x0, x[con.i], x[con.j], x[con.k]);
                semantic.insert(point);
            }
        }
    CHECK(constructed.size() == semantic.size());
    CHECK(constructed == semantic);
}

TEST_CASE("mdq dimension matches the degrees-of-freedom accounting") {
    // codewords are determined by Y_0, the free vectors Y^1..Y^{q-1}, and
    // the diagonal kernels of the top-block matrices; the dimension of the
    // constructed code must equal that count
    struct Probe {
        int q, nvars;
    };
    for (Probe p : {Probe{3, 1}, Probe{3, 2}, Probe{4, 1}}) {
        const Field& F = Field::of(p.q);
        EvaluationSet R = exhaustive_set(F, p.nvars);
        const int N = int(R.points.size());
        MaxNandInstance psi = p.nvars == 1
                                  ? contradiction_instance()
                                  : make_instance(2, {{1, 0, 0}, {0, 1, 1}});
        auto art = build_mindistq(psi, F, R, 1, Frac(1));

        std::vector<LinearCode> P;
        for (int e = 0; e <= p.q - 1; ++e) P.push_back(polynomial_code(F, p.nvars, e, R));

        // kernel dimension of the diagonal map on a generator matrix of
        // N x N matrices
        auto diag_kernel = [&](const Mat& gen) {
            Mat diag(gen.rows, N);
            for (int row = 0; row < gen.rows; ++row)
                for (int i = 0; i < N; ++i) diag.at(row, i) = gen.at(row, i * N + i);
            return gen.rows - rank_of(F, diag);
        };

        int expected = 1;  // Y_0
        for (int e = 1; e <= p.q - 1; ++e) expected += P[e].k;
        for (int e = 1; e <= p.q - 1; ++e)
            for (int f = 1; f <= p.q - 1; ++f) {
                if (e == p.q - 1 && f == p.q - 1) continue;
                expected += diag_kernel(kronecker(F, P[e].G, P[f].G));
            }
        expected += diag_kernel(symmetric_subcode(F, P[p.q - 1]).G);
        CHECK(art.code.k == expected);
    }
}

TEST_CASE("mdq builder generalizes beyond q = 3") {
    for (int q : {4, 5}) {
        const Field& F = Field::of(q);
        auto psi = contradiction_instance();
        EvaluationSet R = exhaustive_set(F, 1);
        auto art = build_mindistq(psi, F, R, 1, Frac(1));
        const int N = q;  // exhaustive line
        CHECK(art.injective);
        CHECK(art.output_length() == q * q * N * N + 4);
        CHECK(art.code.k > 0);
    }
}

TEST_CASE("the bivariate monomial evaluation map is a bijection in every field") {
    for (int q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}) {
        const Field& F = Field::of(q);
        CHECK(rank_of(F, z_block_forward_map(F)) == q * q);
    }
}

}  // TEST_SUITE
