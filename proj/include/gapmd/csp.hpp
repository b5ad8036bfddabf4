#ifndef GAPMD_CSP_HPP
#define GAPMD_CSP_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "gapmd/util.hpp"

namespace gapmd {

// one equation x_k = NAND(x_i, x_j) = 1 + x_i * x_j over F_2
// (0-indexed in memory; instance files are 1-indexed)
struct NandConstraint {
    int k, i, j;
};

struct MaxNandInstance {
    int n = 0;
    std::vector<NandConstraint> cons;
    int m() const { return int(cons.size()); }
};

// Validates index ranges, m >= 1, and that every variable appears in some
// constraint (the reductions rely on that to pin all x-coordinates).
MaxNandInstance make_instance(int n, std::vector<NandConstraint> cons);

using Assignment = std::vector<uint8_t>;

int satisfied_count(const MaxNandInstance& psi, const Assignment& beta);

struct OptReport {
    Frac opt;            // best_count / m
    int best_count = 0;
    Assignment witness;  // lexicographically smallest maximizer
};

// Exact optimum over all 2^n assignments (n <= 24, else TooLarge); the
// assignment space is split across OpenMP workers, merged so the result is
// thread-count independent.
OptReport opt_exact(const MaxNandInstance& psi, int threads = 0);

// serial reference for the kernel above
OptReport opt_exact_serial(const MaxNandInstance& psi);

// Instance with a planted satisfying assignment: deterministic in seed,
// every variable covered, opt_exact = 1.  Requires n >= 2 and m >= n.
std::pair<MaxNandInstance, Assignment> gen_planted(int n, int m, uint64_t seed);

// Planted instance with ceil(flip * m) constraints rewired to violate the
// planted assignment.  The true optimum is whatever opt_exact measures.
MaxNandInstance gen_noisy(int n, int m, double flip, uint64_t seed);

// {x_1 = NAND(x_1, x_1)}: unsatisfiable on both values, Opt = 0.
MaxNandInstance contradiction_instance();

}  // namespace gapmd

#endif
