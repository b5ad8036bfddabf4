#include "gapmd/linalg.hpp"

#include <omp.h>

namespace gapmd {

void add_scaled_row(const Field& F, Elt c, const Elt* row, Elt* y, int n) {
    if (c == 0) return;
    if (F.q() == 2) {
        for (int j = 0; j < n; ++j) y[j] ^= row[j];
        return;
    }
    if (c == 1) {
        for (int j = 0; j < n; ++j) y[j] = F.add(y[j], row[j]);
        return;
    }
    for (int j = 0; j < n; ++j) y[j] = F.add(y[j], F.mul(c, row[j]));
}

RrefResult rref(const Field& F, Mat m) {
    RrefResult out;
    const int rows = m.rows, cols = m.cols;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot = -1;
        for (int i = r; i < rows; ++i) {
            if (m.at(i, c)) { pivot = i; break; }
        }
        if (pivot < 0) continue;
        if (pivot != r) {
            for (int j = 0; j < cols; ++j) std::swap(m.at(pivot, j), m.at(r, j));
        }
        Elt iv = F.inv(m.at(r, c));
        if (iv != 1) {
            for (int j = c; j < cols; ++j) m.at(r, j) = F.mul(iv, m.at(r, j));
        }
        // eliminate the pivot column from every other row; this loop
        // dominates reduction builds, so it runs parallel when large
        Elt* prow = m.row(r);
        if (size_t(rows) * cols > (1u << 18)) {
#pragma omp parallel for schedule(static)
            for (int i = 0; i < rows; ++i) {
                if (i == r || m.at(i, c) == 0) continue;
                Elt f = F.neg(m.at(i, c));
                add_scaled_row(F, f, prow, m.row(i), cols);
            }
        } else {
            for (int i = 0; i < rows; ++i) {
                if (i == r || m.at(i, c) == 0) continue;
                Elt f = F.neg(m.at(i, c));
                add_scaled_row(F, f, prow, m.row(i), cols);
            }
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.rank = r;
    out.m = std::move(m);
    return out;
}

int rank_of(const Field& F, const Mat& m) { return rref(F, m).rank; }

std::vector<Vec> nullspace_basis(const Field& F, const Mat& m) {
    RrefResult rr = rref(F, m);
    const int cols = m.cols;
    std::vector<char> is_pivot(cols, 0);
    for (int c : rr.pivots) is_pivot[c] = 1;

    std::vector<Vec> basis;
    for (int fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        Vec v(cols, 0);
        v[fc] = 1;
        for (int i = 0; i < rr.rank; ++i) {
            Elt coeff = rr.m.at(i, fc);
            if (coeff) v[rr.pivots[i]] = F.neg(coeff);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vec> solve(const Field& F, const Mat& m, const Vec& b) {
    if (int(b.size()) != m.rows) throw DimensionMismatch("solve: |b| != rows");
    Mat aug(m.rows, m.cols + 1);
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols) = b[i];
    }
    RrefResult rr = rref(F, std::move(aug));
    for (int i = 0; i < rr.rank; ++i) {
        if (rr.pivots[i] == m.cols) return std::nullopt;  // pivot in the b column
    }
    Vec x(m.cols, 0);
    for (int i = 0; i < rr.rank; ++i) x[rr.pivots[i]] = rr.m.at(i, m.cols);
    return x;
}

Mat left_inverse(const Field& F, const Mat& m) {
    // find an information set of rows: pivot columns of rref(M^T)
    Mat mt(m.cols, m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) mt.at(j, i) = m.at(i, j);
    RrefResult rr = rref(F, mt);
    if (rr.rank < m.cols) throw RankDeficient("left_inverse: column rank < cols");

    Mat sq(m.cols, m.cols);  // selected rows of M
    for (int i = 0; i < m.cols; ++i)
        for (int j = 0; j < m.cols; ++j) sq.at(i, j) = m.at(rr.pivots[i], j);

    // invert sq by solving against the identity
    Mat aug(m.cols, 2 * m.cols);
    for (int i = 0; i < m.cols; ++i) {
        for (int j = 0; j < m.cols; ++j) aug.at(i, j) = sq.at(i, j);
        aug.at(i, m.cols + i) = 1;
    }
    RrefResult inv = rref(F, std::move(aug));
    if (inv.rank < m.cols) throw RankDeficient("left_inverse: selected rows singular");

    Mat L(m.cols, m.rows);
    for (int i = 0; i < m.cols; ++i)
        for (int j = 0; j < m.cols; ++j) L.at(i, rr.pivots[j]) = inv.m.at(i, m.cols + j);
    return L;
}

Mat kronecker(const Field& F, const Mat& A, const Mat& B) {
    Mat out(A.rows * B.rows, A.cols * B.cols);
    for (int i1 = 0; i1 < A.rows; ++i1)
        for (int j1 = 0; j1 < A.cols; ++j1) {
            Elt cij = A.at(i1, j1);
            if (cij == 0) continue;
            for (int i2 = 0; i2 < B.rows; ++i2)
                for (int j2 = 0; j2 < B.cols; ++j2) {
                    Elt v = F.mul(cij, B.at(i2, j2));
                    if (v) out.at(i1 * B.rows + i2, j1 * B.cols + j2) = v;
                }
        }
    return out;
}

Mat mat_mul(const Field& F, const Mat& A, const Mat& B) {
    if (A.cols != B.rows) throw DimensionMismatch("mat_mul");
    Mat out(A.rows, B.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int k = 0; k < A.cols; ++k) {
            Elt c = A.at(i, k);
            if (c) add_scaled_row(F, c, B.row(k), out.row(i), B.cols);
        }
    return out;
}

Vec mat_vec(const Field& F, const Mat& M, const Vec& v) {
    if (int(v.size()) != M.cols) throw DimensionMismatch("mat_vec");
    Vec out(M.rows, 0);
    for (int i = 0; i < M.rows; ++i) {
        Elt s = 0;
        const Elt* row = M.row(i);
        for (int j = 0; j < M.cols; ++j)
            if (row[j] && v[j]) s = F.add(s, F.mul(row[j], v[j]));
        out[i] = s;
    }
    return out;
}

Vec row_times_mat(const Field& F, const Vec& v, const Mat& M) {
    if (int(v.size()) != M.rows) throw DimensionMismatch("row_times_mat");
    Vec out(M.cols, 0);
    for (int i = 0; i < M.rows; ++i)
        if (v[i]) add_scaled_row(F, v[i], M.row(i), out.data(), M.cols);
    return out;
}

std::vector<int> independent_rows(const Field& F, const Mat& m) {
    std::vector<int> picked;
    std::vector<Vec> reduced;  // staircase rows kept in echelon form
    std::vector<int> lead;
    for (int i = 0; i < m.rows; ++i) {
        Vec r(m.row(i), m.row(i) + m.cols);
        for (size_t s = 0; s < reduced.size(); ++s) {
            if (r[lead[s]]) {
                Elt f = F.neg(F.mul(r[lead[s]], F.inv(reduced[s][lead[s]])));
                add_scaled_row(F, f, reduced[s].data(), r.data(), m.cols);
            }
        }
        int lz = -1;
        for (int j = 0; j < m.cols; ++j)
            if (r[j]) { lz = j; break; }
        if (lz < 0) continue;
        // keep staircase sorted by leading column for stable elimination
        size_t pos = 0;
        while (pos < lead.size() && lead[pos] < lz) ++pos;
        reduced.insert(reduced.begin() + pos, std::move(r));
        lead.insert(lead.begin() + pos, lz);
        picked.push_back(i);
    }
    return picked;
}

}  // namespace gapmd
