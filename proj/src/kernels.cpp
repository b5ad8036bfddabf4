#include "gapmd/kernels.hpp"

#include <omp.h>

#include <algorithm>

namespace gapmd {

namespace {

// digits of v in base q, least significant first
inline void base_q_digits(uint64_t v, int q, int k, int* out) {
    for (int i = 0; i < k; ++i) { out[i] = int(v % q); v /= q; }
}

// modular Gray code: digit j of gray(v) is (a_j - a_{j+1}) mod q, so
// vv -> v+1 changes exactly one Gray digit by +1; that digit's index is the
// number of trailing base-q digits of v equal to q-1
inline void gray_digits(uint64_t v, int q, int k, int* out) {
    base_q_digits(v, q, k, out);
    for (int i = 0; i < k; ++i) {
        int next = (i + 1 < k) ? out[i + 1] : 0;
        out[i] = (out[i] - next + q) % q;
    }
}

inline int trailing_qm1(uint64_t v, int q) {
    if (q == 2) return __builtin_ctzll(v + 1);
    int z = 0;
    while (v % q == uint64_t(q - 1)) { v /= q; ++z; }
    return z;
}

inline bool lex_less(const Vec& x, const Vec& y) {
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

struct Best {
    bool any = false;
    uint64_t weight = 0;
    Vec witness;

    void offer(uint64_t w, const Vec& v) {
        if (!any || w < weight || (w == weight && lex_less(v, witness))) {
            any = true;
            weight = w;
            witness = v;
        }
    }
    void merge(const Best& o) {
        if (o.any) offer(o.weight, o.witness);
    }
};

int resolve_threads(int threads) {
    return threads > 0 ? threads : omp_get_max_threads();
}

// ---------------------------------------------------------------- generic

// sparse row view: nonzero positions and their values
struct SparseRow {
    std::vector<int> pos;
    std::vector<Elt> val;
};

// Gray digit d of a message selects the field element with index d, so a
// +1 digit step adds (element(d+1 mod q) - element(d)) times the row; for
// prime q that difference is always 1, for extension fields it varies, so
// the walk carries the digit vector along.
Best scan_range_generic(const Field& F, const std::vector<SparseRow>& rows, int k,
                        int n, const Vec& offset, bool include_zero, uint64_t lo,
                        uint64_t hi) {
    Best best;
    if (lo >= hi) return best;
    const int q = F.q();

    std::vector<int> g(std::max(k, 1));
    gray_digits(lo, q, k, g.data());
    Vec acc = offset;
    acc.resize(n, 0);
    for (int j = 0; j < k; ++j) {
        if (!g[j]) continue;
        const SparseRow& r = rows[j];
        for (size_t s = 0; s < r.pos.size(); ++s)
            acc[r.pos[s]] = F.add(acc[r.pos[s]], F.mul(Elt(g[j]), r.val[s]));
    }
    uint64_t w = 0;
    for (int j = 0; j < n; ++j) w += acc[j] != 0;

    for (uint64_t i = lo;; ++i) {
        if (include_zero || i != 0) best.offer(w, acc);
        if (i + 1 >= hi) break;
        int z = trailing_qm1(i, q);
        int oldd = g[z];
        int newd = oldd + 1 == q ? 0 : oldd + 1;
        g[z] = newd;
        Elt delta = F.sub(Elt(newd), Elt(oldd));
        const SparseRow& r = rows[z];
        for (size_t s = 0; s < r.pos.size(); ++s) {
            Elt old = acc[r.pos[s]];
            Elt nw = F.add(old, F.mul(delta, r.val[s]));
            w += (nw != 0) - (old != 0);
            acc[r.pos[s]] = nw;
        }
    }
    return best;
}

// ----------------------------------------------------------------- packed F2

struct PackedBest {
    bool any = false;
    uint64_t weight = 0;
    std::vector<uint64_t> witness;

    static bool bits_less(const std::vector<uint64_t>& x, const std::vector<uint64_t>& y) {
        for (size_t w = 0; w < x.size(); ++w) {
            uint64_t d = x[w] ^ y[w];
            if (d) {
                int b = __builtin_ctzll(d);
                return ((x[w] >> b) & 1) == 0;  // first differing entry is 0 in x
            }
        }
        return false;
    }

    void offer(uint64_t w, const std::vector<uint64_t>& v) {
        if (!any || w < weight || (w == weight && bits_less(v, witness))) {
            any = true;
            weight = w;
            witness = v;
        }
    }
    void merge(const PackedBest& o) {
        if (o.any) offer(o.weight, o.witness);
    }
};

PackedBest scan_range_f2(const std::vector<std::vector<uint64_t>>& rows, int k,
                         int nwords, const std::vector<uint64_t>& offset,
                         bool include_zero, uint64_t lo, uint64_t hi) {
    PackedBest best;
    if (lo >= hi) return best;

    std::vector<int> g(std::max(k, 1));
    gray_digits(lo, 2, k, g.data());
    std::vector<uint64_t> acc = offset;
    for (int j = 0; j < k; ++j)
        if (g[j])
            for (int w = 0; w < nwords; ++w) acc[w] ^= rows[j][w];
    uint64_t wt = 0;
    for (int w = 0; w < nwords; ++w) wt += __builtin_popcountll(acc[w]);

    for (uint64_t i = lo;; ++i) {
        if (include_zero || i != 0) best.offer(wt, acc);
        if (i + 1 >= hi) break;
        const std::vector<uint64_t>& r = rows[__builtin_ctzll(i + 1)];
        for (int w = 0; w < nwords; ++w) {
            uint64_t old = acc[w];
            uint64_t nw = old ^ r[w];
            wt += __builtin_popcountll(nw) - __builtin_popcountll(old);
            acc[w] = nw;
        }
    }
    return best;
}

WeightReport run_search(const Field& F, const Mat& G, const Vec* offset,
                        uint64_t budget, int threads) {
    const int k = G.rows, n = G.cols;
    const bool affine = offset != nullptr;

    WeightReport rep;
    if (k == 0) {
        if (!affine) {
            rep.infinite = true;  // zero code: no nonzero codeword exists
            return rep;
        }
        rep.weight = uint64_t(weight(*offset));
        rep.witness = *offset;
        rep.enumerated = 1;
        return rep;
    }

    auto total_opt = pow_checked(F.q(), k, budget);
    if (!total_opt)
        throw BudgetExceeded("enumeration of q^" + std::to_string(k) +
                             " exceeds budget " + std::to_string(budget));
    const uint64_t total = *total_opt;
    const int T = resolve_threads(threads);

    if (F.q() == 2) {
        const int nwords = (n + 63) / 64;
        std::vector<std::vector<uint64_t>> rows(k, std::vector<uint64_t>(nwords, 0));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < n; ++j)
                if (G.at(i, j)) rows[i][j / 64] |= uint64_t(1) << (j % 64);
        std::vector<uint64_t> off(nwords, 0);
        if (affine)
            for (int j = 0; j < n; ++j)
                if ((*offset)[j]) off[j / 64] |= uint64_t(1) << (j % 64);

        std::vector<PackedBest> part(T);
#pragma omp parallel for schedule(static, 1) num_threads(T)
        for (int t = 0; t < T; ++t) {
            uint64_t lo = total / T * t + std::min<uint64_t>(t, total % T);
            uint64_t hi = lo + total / T + (uint64_t(t) < total % T ? 1 : 0);
            part[t] = scan_range_f2(rows, k, nwords, off, affine, lo, hi);
        }
        PackedBest best;
        for (const auto& p : part) best.merge(p);

        rep.weight = best.weight;
        rep.witness.assign(n, 0);
        for (int j = 0; j < n; ++j)
            rep.witness[j] = Elt((best.witness[j / 64] >> (j % 64)) & 1);
        rep.enumerated = affine ? total : total - 1;
        return rep;
    }

    std::vector<SparseRow> rows(k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < n; ++j)
            if (G.at(i, j)) {
                rows[i].pos.push_back(j);
                rows[i].val.push_back(G.at(i, j));
            }
    Vec off = affine ? *offset : Vec(n, 0);

    std::vector<Best> part(T);
#pragma omp parallel for schedule(static, 1) num_threads(T)
    for (int t = 0; t < T; ++t) {
        uint64_t lo = total / T * t + std::min<uint64_t>(t, total % T);
        uint64_t hi = lo + total / T + (uint64_t(t) < total % T ? 1 : 0);
        part[t] = scan_range_generic(F, rows, k, n, off, affine, lo, hi);
    }
    Best best;
    for (const auto& p : part) best.merge(p);

    rep.weight = best.weight;
    rep.witness = best.witness;
    rep.enumerated = affine ? total : total - 1;
    return rep;
}

WeightReport run_search_serial(const Field& F, const Mat& G, const Vec* offset,
                               uint64_t budget) {
    const int k = G.rows, n = G.cols;
    const bool affine = offset != nullptr;

    WeightReport rep;
    if (k == 0) {
        if (!affine) {
            rep.infinite = true;
            return rep;
        }
        rep.weight = uint64_t(weight(*offset));
        rep.witness = *offset;
        rep.enumerated = 1;
        return rep;
    }

    auto total_opt = pow_checked(F.q(), k, budget);
    if (!total_opt) throw BudgetExceeded("serial enumeration exceeds budget");
    const uint64_t total = *total_opt;

    Best best;
    std::vector<int> msg(k);
    for (uint64_t i = affine ? 0 : 1; i < total; ++i) {
        base_q_digits(i, F.q(), k, msg.data());
        Vec cw = affine ? *offset : Vec(n, 0);
        cw.resize(n, 0);
        for (int j = 0; j < k; ++j)
            if (msg[j]) add_scaled_row(F, Elt(msg[j]), G.row(j), cw.data(), n);
        best.offer(uint64_t(weight(cw)), cw);
    }
    rep.weight = best.weight;
    rep.witness = best.witness;
    rep.enumerated = affine ? total : total - 1;
    return rep;
}

}  // namespace

WeightReport min_weight_span(const Field& F, const Mat& G, uint64_t budget, int threads) {
    return run_search(F, G, nullptr, budget, threads);
}

WeightReport min_weight_affine(const Field& F, const Mat& G, const Vec& offset,
                               uint64_t budget, int threads) {
    if (int(offset.size()) != G.cols)
        throw DimensionMismatch("min_weight_affine: offset length");
    return run_search(F, G, &offset, budget, threads);
}

WeightReport min_weight_span_serial(const Field& F, const Mat& G, uint64_t budget) {
    return run_search_serial(F, G, nullptr, budget);
}

WeightReport min_weight_affine_serial(const Field& F, const Mat& G, const Vec& offset,
                                      uint64_t budget) {
    return run_search_serial(F, G, &offset, budget);
}

}  // namespace gapmd
