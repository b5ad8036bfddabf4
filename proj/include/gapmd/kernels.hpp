#ifndef GAPMD_KERNELS_HPP
#define GAPMD_KERNELS_HPP

#include <cstdint>
#include <string>

#include "gapmd/linalg.hpp"

namespace gapmd {

// Result of an exhaustive minimum-weight search over a (coset of a) span.
struct WeightReport {
    bool infinite = false;  // span empty of candidates (zero code)
    uint64_t weight = 0;
    Vec witness;            // lexicographically smallest among minimum-weight points
    uint64_t enumerated = 0;
    std::string method = "exact-enumeration";
};

// Minimum Hamming weight over all q^k - 1 nonzero combinations of the rows
// of G (the code distance when the rows are a basis).  Walks the message
// space in modular Gray order so each step adds a single generator row;
// the index range is partitioned across OpenMP workers and merged by
// (weight, lexicographic witness), so the result is independent of the
// thread count.  F_2 runs on packed 64-bit words.  Throws BudgetExceeded
// when q^k > budget.
WeightReport min_weight_span(const Field& F, const Mat& G, uint64_t budget,
                             int threads = 0);

// Same search over the affine set {offset + m*G}; the zero combination is a
// candidate here, so the result is at most weight(offset).
WeightReport min_weight_affine(const Field& F, const Mat& G, const Vec& offset,
                               uint64_t budget, int threads = 0);

// Serial reference implementations: plain base-q counting, every codeword
// recomputed from scratch.  Independent of the Gray-walk kernels above and
// kept for cross-checking them in tests and for the benchmark baseline.
WeightReport min_weight_span_serial(const Field& F, const Mat& G, uint64_t budget);
WeightReport min_weight_affine_serial(const Field& F, const Mat& G, const Vec& offset,
                                      uint64_t budget);

}  // namespace gapmd

#endif
