#ifndef GAPMD_CODE_HPP
#define GAPMD_CODE_HPP

#include <cstdint>
#include <string>

#include "gapmd/evalset.hpp"
#include "gapmd/kernels.hpp"
#include "gapmd/linalg.hpp"

namespace gapmd {

// Linear code given by a generator matrix whose rows are a basis, plus the
// parity-check matrix built at construction (H * c = 0 iff c in the code).
struct LinearCode {
    int q = 2;
    int n = 0;  // block length
    int k = 0;  // dimension
    Mat G;      // k x n
    Mat H;      // (n-k) x n
};

// Code spanned by the given rows: a maximal independent subset is kept (in
// row order, so meaningful generator rows survive), H comes from the
// nullspace of G.
LinearCode make_code(const Field& F, const Mat& spanning_rows);

bool code_contains(const Field& F, const LinearCode& C, const Vec& v);

struct AffineSubspace {
    LinearCode code;  // homogeneous part
    Vec offset;
};

struct DistanceReport {
    bool infinite = false;  // zero code
    uint64_t distance = 0;
    Vec witness;
    std::string method;
    uint64_t enumerated = 0;
};

// Exact d(C) by exhaustive message enumeration (q^k <= budget, default
// 2^30); the witness is the lexicographically smallest minimum-weight
// codeword, independent of how the search is partitioned across threads.
DistanceReport min_distance_exact(const Field& F, const LinearCode& C,
                                  uint64_t budget = uint64_t(1) << 30,
                                  int threads = 0);

// Minimum Hamming weight over the affine set offset + C (zero point
// allowed).
DistanceReport ncp_min_weight(const Field& F, const AffineSubspace& A,
                              uint64_t budget = uint64_t(1) << 30,
                              int threads = 0);

// Tensor product: generator kronecker(G1, G2); coordinate (i, j) of the
// n1 x n2 matrix view is flat index i*n2 + j.
LinearCode tensor(const Field& F, const LinearCode& C1, const LinearCode& C2);

// Subcode {c in C : A * c = 0}.
LinearCode subcode_with_conditions(const Field& F, const LinearCode& C, const Mat& A);

// Subcode of C (x) C of symmetric matrices (Claim-12 object).
LinearCode symmetric_subcode(const Field& F, const LinearCode& C);

// Subcode of C (x) C of symmetric matrices with zero diagonal (the
// codewords the zero-diagonal distance lemma quantifies over).
LinearCode symmetric_zero_diag_subcode(const Field& F, const LinearCode& C);

// The [2^n - 1, n] binary simplex code: columns are all nonzero vectors of
// F_2^n in lexicographic order; every nonzero codeword has weight 2^{n-1}.
LinearCode simplex_code(int n);

// Evaluations over R of all polynomials of total degree <= d (variable
// exponents <= q-1, constant monomial included).  Generator rows are the
// independent monomial evaluation vectors in graded-lex monomial order.
LinearCode polynomial_code(const Field& F, int nvars, int d, const EvaluationSet& R);

// The homogeneous encoding code spanned by X_1..X_n on R, with its fixed
// decoder: dec * enc = identity, so alpha = dec * C(alpha) for every alpha.
// Throws RankDeficient when R does not separate linear forms.
struct EncodingCode {
    LinearCode code;
    Mat enc;  // N x n, alpha |-> evaluations of sum alpha_i X_i
    Mat dec;  // n x N, fixed left inverse
};
EncodingCode homogeneous_linear_code(const Field& F, int nvars, const EvaluationSet& R);

Vec encode(const Field& F, const EncodingCode& C, const Vec& alpha);
Vec decode(const Field& F, const EncodingCode& C, const Vec& y);

// entrywise e-th power with 0^0 = 1
Vec componentwise_power(const Field& F, const Vec& v, uint64_t e);

}  // namespace gapmd

#endif
