#ifndef GAPMD_LEMMAS_HPP
#define GAPMD_LEMMAS_HPP

#include <cstdint>
#include <string>

#include <json.hpp>

#include "gapmd/code.hpp"
#include "gapmd/csp.hpp"
#include "gapmd/reduction.hpp"

namespace gapmd {

// One verified claim: measured value against claimed bound.  Exhaustive
// reports are acceptance-grade; sampled ones are advisory.
struct LemmaReport {
    std::string lemma;
    nlohmann::json params;
    std::string claimed;
    std::string measured;
    nlohmann::json witness;
    std::string mode = "exhaustive";
    bool pass = false;
    int64_t runtime_ms = 0;
    nlohmann::json extra;
};

nlohmann::json to_json(const LemmaReport& r);

// power sums vanish: sum_x x^a = 0 for 0 <= a <= q-2, and -1 at a = q-1
LemmaReport check_claim11(const Field& F);

// minimum support of nonzero f: F_q^2 -> F_q with all moments
// sum x^a y^b f = 0 for a+b < d; claimed >= d+1 (0 <= d <= q-1)
LemmaReport check_lemma9(const Field& F, int d, uint64_t budget = uint64_t(1) << 24,
                         int threads = 0, uint64_t samples = 0, uint64_t seed = 1);

// same moment system for q-1 <= d <= 2(q-1); claimed >= q(d+2-q), plus the
// structural claim that the solution space is exactly the span of the
// monomials x^e y^l with e+l <= 2(q-1)-d
LemmaReport check_lemma10(const Field& F, int d, uint64_t budget = uint64_t(1) << 24,
                          int threads = 0, uint64_t samples = 0, uint64_t seed = 1);

// symmetric zero-diagonal subcode of C (x) C: min weight >= ceil(d^2(1+1/q))
LemmaReport check_lemma3(const Field& F, const LinearCode& C,
                         uint64_t budget = uint64_t(1) << 30, int threads = 0);

// union support of independent codeword pairs >= ceil(d(1+1/q))
LemmaReport check_fact4(const Field& F, const LinearCode& C,
                        uint64_t budget = uint64_t(1) << 30, int threads = 0);

// d(C1 (x) C2) = d(C1) d(C2), exact equality
LemmaReport check_fact2(const Field& F, const LinearCode& C1, const LinearCode& C2,
                        uint64_t budget = uint64_t(1) << 30, int threads = 0);

// dim of the symmetric subcode of C (x) C >= ceil(dim(C)^2 / 2)
LemmaReport check_claim12(const Field& F, const LinearCode& C);

// shared helper: exact minimum support over the moment-system nullspace
struct MomentSupportResult {
    int dim = 0;
    uint64_t min_support = 0;
    Vec witness;
    bool exhaustive = true;
    uint64_t enumerated = 0;
};
MomentSupportResult moment_min_support(const Field& F, int d, uint64_t budget,
                                       int threads, uint64_t samples, uint64_t seed);

struct ExperimentReport {
    std::string name;
    nlohmann::json detail;
    bool pass = false;
    int64_t runtime_ms = 0;
};

nlohmann::json to_json(const ExperimentReport& r);

// end-to-end NCP build: exhaustive minimum weight of the affine space must
// equal the assignment-space oracle m + 2(m - max satisfied)
ExperimentReport experiment_ncp2(const MaxNandInstance& psi,
                                 uint64_t budget = uint64_t(1) << 30, int threads = 0);

// intended codeword membership and exact weight N^2 + rm for a satisfiable
// instance; exact distance cross-check when enumerable
ExperimentReport experiment_completeness(const MaxNandInstance& psi,
                                         const std::string& kind, int q, int r,
                                         uint64_t budget = uint64_t(1) << 30,
                                         int threads = 0);

// soundness floor of the built code: exact distance when enumerable,
// otherwise the five-case certificate (mdq)
ExperimentReport experiment_soundness(const MaxNandInstance& psi, const std::string& kind,
                                      int q, int r, uint64_t budget = uint64_t(1) << 30,
                                      int threads = 0);

// dimension floor, rate and relative distance of the built code
ExperimentReport experiment_goodcode(const MaxNandInstance& psi, const std::string& kind,
                                     int q, int r, uint64_t budget = uint64_t(1) << 30,
                                     int threads = 0);

// The desk-scale five-case soundness certificate for an mdq artifact: every
// ingredient of the case analysis is either a constraint row, a linear
// consequence checked on the nullspace basis, or an exhaustively measured
// minimum.  certified_floor is then a valid lower bound for d(C(Psi)).
struct SoundnessCertificate {
    bool basis_in_nullspace = false;   // H v = 0 re-checked per basis vector
    bool y00_entries_equal = false;    // all Y^{0,0} coordinates agree on the basis
    bool single_support_patterns_ok = false;  // 1-support S blocks decode to satisfied NANDs
    bool z_map_invertible = false;     // the q^2 x q^2 moment map has full rank
    std::vector<uint64_t> p_distance;  // exact d(P_e), e = 0..q-1
    std::vector<uint64_t> l_min;       // exact moment-support minima, index d = 1..2(q-1)
    uint64_t case5_min = 0;            // min weight of sym-zero-diag subcode of P_{q-1} (x) P_{q-1}
    Frac case1_floor;
    Frac zcase_floor;                  // min over the case-2..5 floors
    Frac certified_floor;
    nlohmann::json detail;
    bool pass = false;
};
SoundnessCertificate certify_soundness_mdq(const Field& F, const ReductionArtifact& art,
                                           uint64_t budget = uint64_t(1) << 30,
                                           int threads = 0);

}  // namespace gapmd

#endif
