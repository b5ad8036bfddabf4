#include "gapmd/csp.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <string>

namespace gapmd {

MaxNandInstance make_instance(int n, std::vector<NandConstraint> cons) {
    if (n < 1) throw ParseError("instance: n must be >= 1");
    if (cons.empty()) throw ParseError("instance: m must be >= 1");
    std::vector<char> seen(n, 0);
    for (const auto& c : cons) {
        if (c.k < 0 || c.k >= n || c.i < 0 || c.i >= n || c.j < 0 || c.j >= n)
            throw ParseError("instance: variable index out of range");
        seen[c.k] = seen[c.i] = seen[c.j] = 1;
    }
    for (int v = 0; v < n; ++v)
        if (!seen[v])
            throw ParseError("instance: variable x" + std::to_string(v + 1) +
                             " appears in no constraint");
    MaxNandInstance psi;
    psi.n = n;
    psi.cons = std::move(cons);
    return psi;
}

int satisfied_count(const MaxNandInstance& psi, const Assignment& beta) {
    if (int(beta.size()) != psi.n) throw DimensionMismatch("satisfied_count");
    int sat = 0;
    for (const auto& c : psi.cons)
        sat += beta[c.k] == (1 ^ (beta[c.i] & beta[c.j]));
    return sat;
}

namespace {

// assignment a (bits, x_1 most significant) -> vector; ascending a is
// ascending lexicographic order of (beta_1, ..., beta_n)
Assignment unpack_assignment(uint32_t a, int n) {
    Assignment beta(n);
    for (int i = 0; i < n; ++i) beta[i] = (a >> (n - 1 - i)) & 1;
    return beta;
}

int sat_count_packed(const MaxNandInstance& psi, uint32_t a, int n) {
    int sat = 0;
    for (const auto& c : psi.cons) {
        int bi = (a >> (n - 1 - c.i)) & 1;
        int bj = (a >> (n - 1 - c.j)) & 1;
        int bk = (a >> (n - 1 - c.k)) & 1;
        sat += bk == (1 ^ (bi & bj));
    }
    return sat;
}

}  // namespace

OptReport opt_exact(const MaxNandInstance& psi, int threads) {
    if (psi.n > 24) throw TooLarge("opt_exact: n > 24");
    const uint32_t total = uint32_t(1) << psi.n;
    const int T = threads > 0 ? threads : omp_get_max_threads();

    struct Local {
        int best = -1;
        uint32_t arg = 0;
    };
    std::vector<Local> part(T);
#pragma omp parallel for schedule(static, 1) num_threads(T)
    for (int t = 0; t < T; ++t) {
        uint64_t lo = uint64_t(total) / T * t + std::min<uint64_t>(t, total % T);
        uint64_t hi = lo + total / T + (uint64_t(t) < total % T ? 1 : 0);
        Local loc;
        for (uint64_t a = lo; a < hi; ++a) {
            int s = sat_count_packed(psi, uint32_t(a), psi.n);
            if (s > loc.best) {
                loc.best = s;
                loc.arg = uint32_t(a);
            }
        }
        part[t] = loc;
    }
    Local best;
    for (const auto& p : part)
        if (p.best > best.best || (p.best == best.best && p.arg < best.arg)) best = p;

    OptReport rep;
    rep.best_count = best.best;
    rep.opt = Frac(best.best, psi.m());
    rep.witness = unpack_assignment(best.arg, psi.n);
    return rep;
}

OptReport opt_exact_serial(const MaxNandInstance& psi) {
    if (psi.n > 24) throw TooLarge("opt_exact: n > 24");
    OptReport rep;
    rep.best_count = -1;
    for (uint32_t a = 0; a < (uint32_t(1) << psi.n); ++a) {
        Assignment beta = unpack_assignment(a, psi.n);
        int s = satisfied_count(psi, beta);
        if (s > rep.best_count) {
            rep.best_count = s;
            rep.witness = beta;
        }
    }
    rep.opt = Frac(rep.best_count, psi.m());
    return rep;
}

std::pair<MaxNandInstance, Assignment> gen_planted(int n, int m, uint64_t seed) {
    if (n < 2) throw ParseError("gen_planted: n must be >= 2");
    if (m < n) throw ParseError("gen_planted: m must be >= n for coverage");
    Rng rng(seed);

    Assignment beta(n);
    for (auto& b : beta) b = uint8_t(rng.below(2));
    // both values must occur or some NAND output value has no variable
    beta[0] = 0;
    beta[n - 1] = 1;

    std::vector<int> zeros, ones;
    for (int v = 0; v < n; ++v) (beta[v] ? ones : zeros).push_back(v);

    std::vector<NandConstraint> cons;
    for (int t = 0; t < m; ++t) {
        // the first n constraints use variable t as the first operand, so
        // every variable is covered
        int i = t < n ? t : int(rng.below(n));
        int j = int(rng.below(n));
        int out = 1 ^ (beta[i] & beta[j]);
        const std::vector<int>& pool = out ? ones : zeros;
        int k = pool[rng.below(pool.size())];
        cons.push_back({k, i, j});
    }
    return {make_instance(n, std::move(cons)), beta};
}

MaxNandInstance gen_noisy(int n, int m, double flip, uint64_t seed) {
    auto [psi, beta] = gen_planted(n, m, seed);
    int nflip = int(std::ceil(flip * m));
    nflip = std::min(std::max(nflip, 0), m);
    if (nflip == 0) return psi;

    Rng rng(seed ^ 0x9e3779b97f4a7c15ull);
    // choose nflip distinct constraints via a partial Fisher-Yates pass
    std::vector<int> idx(m);
    for (int i = 0; i < m; ++i) idx[i] = i;
    for (int i = 0; i < nflip; ++i)
        std::swap(idx[i], idx[i + rng.below(m - i)]);

    std::vector<int> zeros, ones;
    for (int v = 0; v < n; ++v) (beta[v] ? ones : zeros).push_back(v);

    for (int s = 0; s < nflip; ++s) {
        NandConstraint& c = psi.cons[idx[s]];
        // rewire the output variable so the constraint is violated by beta;
        // i and j stay put, so coverage is preserved
        int bad = beta[c.i] & beta[c.j];  // complement of the NAND value
        const std::vector<int>& pool = bad ? ones : zeros;
        c.k = pool[rng.below(pool.size())];
    }
    return psi;
}

MaxNandInstance contradiction_instance() {
    return make_instance(1, {{0, 0, 0}});
}

}  // namespace gapmd
