#ifndef GAPMD_LINALG_HPP
#define GAPMD_LINALG_HPP

#include <optional>
#include <vector>

#include "gapmd/field.hpp"

namespace gapmd {

using Vec = std::vector<Elt>;

// Dense row-major matrix over F_q.  Entries are element indices; the field
// is passed to every operation rather than stored per matrix.
struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<Elt> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(size_t(r) * c, 0) {}

    Elt& at(int r, int c) { return a[size_t(r) * cols + c]; }
    Elt at(int r, int c) const { return a[size_t(r) * cols + c]; }
    const Elt* row(int r) const { return a.data() + size_t(r) * cols; }
    Elt* row(int r) { return a.data() + size_t(r) * cols; }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    friend bool operator==(const Mat& x, const Mat& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }
};

struct RrefResult {
    Mat m;
    std::vector<int> pivots;  // pivot column per pivot row, ascending
    int rank = 0;
};

// Reduced row echelon form with deterministic pivoting: leftmost column,
// topmost row.  Idempotent.
RrefResult rref(const Field& F, Mat m);

int rank_of(const Field& F, const Mat& m);

// Basis of {x : Mx = 0}: one vector per free column in ascending column
// order, the standard free-variable construction from rref.
std::vector<Vec> nullspace_basis(const Field& F, const Mat& m);

// One particular solution of Mx = b with free variables zeroed, or nullopt
// when inconsistent.  Throws DimensionMismatch if |b| != rows.
std::optional<Vec> solve(const Field& F, const Mat& m, const Vec& b);

// L with L*M = identity for M of full column rank; the information set is
// the pivot rows found by deterministic elimination.  Throws RankDeficient.
Mat left_inverse(const Field& F, const Mat& m);

// (A (x) B)[(i1,i2),(j1,j2)] = A[i1,j1] * B[i2,j2], rows/cols flattened
// with the second index minor.
Mat kronecker(const Field& F, const Mat& A, const Mat& B);

Mat mat_mul(const Field& F, const Mat& A, const Mat& B);
Vec mat_vec(const Field& F, const Mat& M, const Vec& v);
Vec row_times_mat(const Field& F, const Vec& v, const Mat& M);

// y += c * row  (the elimination and encoding inner step)
void add_scaled_row(const Field& F, Elt c, const Elt* row, Elt* y, int n);

// Indices of a maximal independent subset of rows, greedy in row order, so
// generator rows keep their original meaning where possible.
std::vector<int> independent_rows(const Field& F, const Mat& m);

inline bool is_zero(const Vec& v) {
    for (Elt e : v)
        if (e) return false;
    return true;
}

inline int weight(const Vec& v) {
    int w = 0;
    for (Elt e : v) w += e != 0;
    return w;
}

}  // namespace gapmd

#endif
