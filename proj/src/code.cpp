#include "gapmd/code.hpp"

namespace gapmd {

LinearCode make_code(const Field& F, const Mat& spanning_rows) {
    std::vector<int> keep = independent_rows(F, spanning_rows);
    LinearCode C;
    C.q = F.q();
    C.n = spanning_rows.cols;
    C.k = int(keep.size());
    C.G = Mat(C.k, C.n);
    for (int i = 0; i < C.k; ++i)
        for (int j = 0; j < C.n; ++j) C.G.at(i, j) = spanning_rows.at(keep[i], j);

    auto dual = nullspace_basis(F, C.G);
    C.H = Mat(int(dual.size()), C.n);
    for (size_t i = 0; i < dual.size(); ++i)
        for (int j = 0; j < C.n; ++j) C.H.at(int(i), j) = dual[i][j];
    return C;
}

bool code_contains(const Field& F, const LinearCode& C, const Vec& v) {
    if (int(v.size()) != C.n) throw DimensionMismatch("code_contains");
    return is_zero(mat_vec(F, C.H, v));
}

static DistanceReport to_distance_report(const WeightReport& w) {
    DistanceReport r;
    r.infinite = w.infinite;
    r.distance = w.weight;
    r.witness = w.witness;
    r.method = w.method;
    r.enumerated = w.enumerated;
    return r;
}

DistanceReport min_distance_exact(const Field& F, const LinearCode& C, uint64_t budget,
                                  int threads) {
    return to_distance_report(min_weight_span(F, C.G, budget, threads));
}

DistanceReport ncp_min_weight(const Field& F, const AffineSubspace& A, uint64_t budget,
                              int threads) {
    return to_distance_report(min_weight_affine(F, A.code.G, A.offset, budget, threads));
}

LinearCode tensor(const Field& F, const LinearCode& C1, const LinearCode& C2) {
    if (C1.q != C2.q || C1.q != F.q()) throw FieldMismatch("tensor");
    return make_code(F, kronecker(F, C1.G, C2.G));
}

LinearCode subcode_with_conditions(const Field& F, const LinearCode& C, const Mat& A) {
    if (A.cols != C.n) throw DimensionMismatch("subcode_with_conditions");
    // condition A (m G)^T = 0 over messages m: nullspace of A * G^T
    Mat AGt(A.rows, C.k);
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < C.k; ++j) {
            Elt s = 0;
            for (int l = 0; l < C.n; ++l)
                if (A.at(i, l) && C.G.at(j, l)) s = F.add(s, F.mul(A.at(i, l), C.G.at(j, l)));
            AGt.at(i, j) = s;
        }
    auto msgs = nullspace_basis(F, AGt);
    Mat rows(int(msgs.size()), C.n);
    for (size_t i = 0; i < msgs.size(); ++i) {
        Vec cw = row_times_mat(F, msgs[i], C.G);
        for (int j = 0; j < C.n; ++j) rows.at(int(i), j) = cw[j];
    }
    return make_code(F, rows);
}

LinearCode symmetric_subcode(const Field& F, const LinearCode& C) {
    LinearCode T = tensor(F, C, C);
    const int N = C.n;
    Mat cond(N * (N - 1) / 2, N * N);
    int r = 0;
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j) {
            cond.at(r, i * N + j) = 1;
            cond.at(r, j * N + i) = F.neg(1);
            ++r;
        }
    return subcode_with_conditions(F, T, cond);
}

LinearCode symmetric_zero_diag_subcode(const Field& F, const LinearCode& C) {
    LinearCode T = tensor(F, C, C);
    const int N = C.n;
    Mat cond(N * (N - 1) / 2 + N, N * N);
    int r = 0;
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j) {
            cond.at(r, i * N + j) = 1;
            cond.at(r, j * N + i) = F.neg(1);
            ++r;
        }
    for (int i = 0; i < N; ++i) {
        cond.at(r, i * N + i) = 1;
        ++r;
    }
    return subcode_with_conditions(F, T, cond);
}

LinearCode simplex_code(int n) {
    if (n < 1 || n > 20) throw TooLarge("simplex_code: n out of [1,20]");
    const Field& F = Field::of(2);
    const int N = (1 << n) - 1;
    Mat G(n, N);
    for (int col = 1; col <= N; ++col)
        for (int row = 0; row < n; ++row)
            G.at(row, col - 1) = Elt((col >> (n - 1 - row)) & 1);
    return make_code(F, G);
}

LinearCode polynomial_code(const Field& F, int nvars, int d, const EvaluationSet& R) {
    if (R.points.empty()) throw DimensionMismatch("polynomial_code: empty R");
    if (d < 0 || d > F.q() - 1) throw TooLarge("polynomial_code: d out of [0, q-1]");
    auto monos = monomials_up_to(nvars, d, F.q() - 1);
    Mat rows(int(monos.size()), int(R.points.size()));
    for (size_t mi = 0; mi < monos.size(); ++mi)
        for (size_t pi = 0; pi < R.points.size(); ++pi)
            rows.at(int(mi), int(pi)) = eval_monomial(F, monos[mi], R.points[pi]);
    return make_code(F, rows);
}

EncodingCode homogeneous_linear_code(const Field& F, int nvars, const EvaluationSet& R) {
    const int N = int(R.points.size());
    Mat rows(nvars, N);
    for (int v = 0; v < nvars; ++v)
        for (int pi = 0; pi < N; ++pi) rows.at(v, pi) = R.points[pi][v];

    EncodingCode E;
    E.code = make_code(F, rows);
    if (E.code.k != nvars)
        throw RankDeficient("homogeneous_linear_code: R does not separate linear forms");
    E.enc = Mat(N, nvars);
    for (int pi = 0; pi < N; ++pi)
        for (int v = 0; v < nvars; ++v) E.enc.at(pi, v) = rows.at(v, pi);
    E.dec = left_inverse(F, E.enc);
    return E;
}

Vec encode(const Field& F, const EncodingCode& C, const Vec& alpha) {
    return mat_vec(F, C.enc, alpha);
}

Vec decode(const Field& F, const EncodingCode& C, const Vec& y) {
    return mat_vec(F, C.dec, y);
}

Vec componentwise_power(const Field& F, const Vec& v, uint64_t e) {
    Vec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = F.pow(v[i], e);
    return out;
}

}  // namespace gapmd
