#ifndef GAPMD_EVALSET_HPP
#define GAPMD_EVALSET_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "gapmd/linalg.hpp"

namespace gapmd {

// Ordered multiset of evaluation points in F_q^n.  The point order is part
// of the identity of the set: it defines the coordinates of every code
// evaluated on it.
struct EvaluationSet {
    int q = 2;
    int n = 1;
    std::vector<Vec> points;
    std::string provenance;  // "exhaustive" | "viola(...)" | "small-bias(...)" | "explicit-file"
};

// All q^n points in lexicographic order (epsilon = 0 against every degree).
// Throws TooLarge when q^n > 2^20.
EvaluationSet exhaustive_set(const Field& F, int n);

// Small-bias multiset by the power construction: one point
// (pi(alpha*beta), pi(alpha^2*beta), ..., pi(alpha^n*beta)) per pair
// (alpha, beta) of an extension field F_{q^t}, with pi the constant
// coefficient.  t is the smallest value with 2n/q^t <= eps.  Deterministic;
// the guarantee is measured by verify_fooling(d=1), never assumed.
EvaluationSet small_bias_set(const Field& F, int n, Frac eps);

// Multiset of all d-fold sums of base points, index tuples in lexicographic
// order.  Throws SizeOverflow when |base|^d > 2^24.
EvaluationSet viola_sum(const Field& F, const EvaluationSet& base, int d);

struct FoolingReport {
    int d = 0;
    Frac epsilon;            // max over tested f of sum_a |Pr_R[f=a] - Pr_U[f=a]|
    std::string mode;        // "exhaustive" | "sampled(count,seed)"
    uint64_t polynomials_tested = 0;
    Vec worst_poly;          // coefficients in the monomial order of the degree bound
};

// Exact fooling check of R against every polynomial of total degree <= d
// (all variable exponents <= q-1).  Requires q^#monomials <= 2^24 and
// q^n <= 2^20; throws TooLarge otherwise.
FoolingReport verify_fooling(const Field& F, const EvaluationSet& R, int d,
                             int threads = 0);

// Sampled variant: `count` random coefficient vectors from `seed`.
FoolingReport verify_fooling_sampled(const Field& F, const EvaluationSet& R, int d,
                                     uint64_t count, uint64_t seed, int threads = 0);

struct NonzeroFractionReport {
    int e = 0;
    Frac min_fraction;       // min over nonzero degree-<=e f of Pr_R[f != 0]
    Vec witness_coeffs;
    uint64_t polynomials_tested = 0;
};

// Exact minimum of Pr_{x~R}[f(x) != 0] over nonzero polynomials of total
// degree <= e, with the lexicographically first minimizing coefficient
// vector as witness.
NonzeroFractionReport verify_nonzero_fraction(const Field& F, const EvaluationSet& R,
                                              int e, int threads = 0);

// Monomial exponent tuples for n variables, total degree <= d, every
// exponent <= maxexp, in graded lexicographic order starting with the
// constant monomial.  Shared by codes and the verifiers.
std::vector<std::vector<int>> monomials_up_to(int nvars, int d, int maxexp);

// evaluation of a monomial at one point (0^0 = 1)
Elt eval_monomial(const Field& F, const std::vector<int>& expo, const Vec& point);

}  // namespace gapmd

#endif
