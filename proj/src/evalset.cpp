#include "gapmd/evalset.hpp"

#include <omp.h>

#include <algorithm>

namespace gapmd {

namespace {

// Arithmetic in F_{q^t} for the power construction, with elements as
// degree-<t coefficient vectors over the base field.  The modulus is the
// first monic irreducible found in lexicographic coefficient order, so the
// construction is the same in every run.
class ExtField {
public:
    ExtField(const Field& base, int t) : F_(base), t_(t) {
        if (t_ == 1) return;
        uint64_t count = 1;
        for (int i = 0; i < t_; ++i) count *= F_.q();
        for (uint64_t c = 0; c < count; ++c) {
            std::vector<Elt> mod(t_ + 1, 0);
            uint64_t v = c;
            for (int i = 0; i < t_; ++i) { mod[i] = Elt(v % F_.q()); v /= F_.q(); }
            mod[t_] = 1;
            if (irreducible(mod)) { modulus_ = mod; return; }
        }
        throw RankDeficient("no irreducible modulus found");  // unreachable
    }

    uint64_t size() const {
        uint64_t s = 1;
        for (int i = 0; i < t_; ++i) s *= F_.q();
        return s;
    }

    std::vector<Elt> element(uint64_t idx) const {
        std::vector<Elt> v(t_, 0);
        for (int i = 0; i < t_; ++i) { v[i] = Elt(idx % F_.q()); idx /= F_.q(); }
        return v;
    }

    std::vector<Elt> mul(const std::vector<Elt>& a, const std::vector<Elt>& b) const {
        std::vector<Elt> prod(2 * t_ - 1, 0);
        for (int i = 0; i < t_; ++i)
            for (int j = 0; j < t_; ++j)
                if (a[i] && b[j])
                    prod[i + j] = F_.add(prod[i + j], F_.mul(a[i], b[j]));
        if (t_ == 1) return prod;
        // reduce modulo the monic modulus
        for (int d = 2 * t_ - 2; d >= t_; --d) {
            Elt lead = prod[d];
            if (!lead) continue;
            prod[d] = 0;
            for (int i = 0; i < t_; ++i)
                prod[d - t_ + i] = F_.sub(prod[d - t_ + i], F_.mul(lead, modulus_[i]));
        }
        prod.resize(t_);
        return prod;
    }

    // the fixed F_q-linear surjection: constant coefficient
    Elt project(const std::vector<Elt>& a) const { return a[0]; }

private:
    bool irreducible(const std::vector<Elt>& mod) const {
        // trial division by every monic polynomial of degree 1..t/2
        for (int d = 1; 2 * d <= t_; ++d) {
            uint64_t count = 1;
            for (int i = 0; i < d; ++i) count *= F_.q();
            for (uint64_t c = 0; c < count; ++c) {
                std::vector<Elt> div(d + 1, 0);
                uint64_t v = c;
                for (int i = 0; i < d; ++i) { div[i] = Elt(v % F_.q()); v /= F_.q(); }
                div[d] = 1;
                if (divides(div, mod)) return false;
            }
        }
        return true;
    }

    bool divides(const std::vector<Elt>& div, std::vector<Elt> rem) const {
        int dd = int(div.size()) - 1;
        for (int d = int(rem.size()) - 1; d >= dd; --d) {
            Elt lead = rem[d];
            if (!lead) continue;
            for (int i = 0; i <= dd; ++i)
                rem[d - dd + i] = F_.sub(rem[d - dd + i], F_.mul(lead, div[i]));
        }
        for (Elt e : rem)
            if (e) return false;
        return true;
    }

    const Field& F_;
    int t_;
    std::vector<Elt> modulus_;
};

uint64_t point_index(const Field& F, const Vec& p) {
    uint64_t idx = 0;
    for (Elt e : p) idx = idx * F.q() + e;
    return idx;
}

int resolve_threads(int threads) {
    return threads > 0 ? threads : omp_get_max_threads();
}

// Histogram of R collapsed onto the q^n distinct points; the verifiers only
// need multiplicities, which keeps large multisets cheap.
std::vector<uint64_t> point_histogram(const Field& F, const EvaluationSet& R) {
    auto space = pow_checked(F.q(), R.n, uint64_t(1) << 20);
    if (!space) throw TooLarge("q^n exceeds 2^20");
    std::vector<uint64_t> hist(*space, 0);
    for (const Vec& p : R.points) ++hist[point_index(F, p)];
    return hist;
}

// value of every monomial at every point of F_q^n, row per monomial
Mat monomial_table(const Field& F, int n, const std::vector<std::vector<int>>& monos) {
    uint64_t space = *pow_checked(F.q(), n, uint64_t(1) << 20);
    Mat table(int(monos.size()), int(space));
    Vec pt(n, 0);
    for (uint64_t pi = 0; pi < space; ++pi) {
        uint64_t v = pi;
        for (int i = n - 1; i >= 0; --i) { pt[i] = Elt(v % F.q()); v /= F.q(); }
        for (size_t mi = 0; mi < monos.size(); ++mi)
            table.at(int(mi), int(pi)) = eval_monomial(F, monos[mi], pt);
    }
    return table;
}

struct FoolWorst {
    bool any = false;
    Frac eps{0, 1};
    uint64_t poly_index = 0;

    void offer(const Frac& e, uint64_t idx) {
        if (!any || eps < e || (eps == e && idx < poly_index)) {
            if (!any || eps < e) poly_index = idx;
            else poly_index = std::min(poly_index, idx);
            eps = std::max(eps, e);
            any = true;
        }
    }
    void merge(const FoolWorst& o) {
        if (!o.any) return;
        if (!any || eps < o.eps) { eps = o.eps; poly_index = o.poly_index; any = true; }
        else if (eps == o.eps) poly_index = std::min(poly_index, o.poly_index);
    }
};

// TV-style distance of f under R vs uniform, computed exactly in counts
Frac tv_sum(const Field& F, const Mat& table, const std::vector<uint64_t>& hist,
            uint64_t rsize, const Vec& coeffs, std::vector<uint64_t>& cntR,
            std::vector<uint64_t>& cntU) {
    const int q = F.q();
    std::fill(cntR.begin(), cntR.end(), 0);
    std::fill(cntU.begin(), cntU.end(), 0);
    const uint64_t space = hist.size();
    for (uint64_t pi = 0; pi < space; ++pi) {
        Elt v = 0;
        for (size_t mi = 0; mi < coeffs.size(); ++mi)
            if (coeffs[mi] && table.at(int(mi), int(pi)))
                v = F.add(v, F.mul(coeffs[mi], table.at(int(mi), int(pi))));
        cntU[v] += 1;
        cntR[v] += hist[pi];
    }
    // sum_a |cntR[a]/rsize - cntU[a]/space| with denominator rsize*space
    Frac total{0, 1};
    for (int a = 0; a < q; ++a) {
        long long diff = (long long)(cntR[a] * space) - (long long)(cntU[a] * rsize);
        if (diff < 0) diff = -diff;
        total = total + Frac(diff, (long long)(rsize * space));
    }
    return total;
}

FoolingReport fooling_impl(const Field& F, const EvaluationSet& R, int d,
                           int threads, bool sampled, uint64_t count, uint64_t seed) {
    if (R.q != F.q()) throw FieldMismatch("verify_fooling: field mismatch");
    auto monos = monomials_up_to(R.n, d, F.q() - 1);
    auto hist = point_histogram(F, R);
    Mat table = monomial_table(F, R.n, monos);
    const uint64_t rsize = R.points.size();

    uint64_t npolys;
    std::vector<Vec> sample_coeffs;
    if (sampled) {
        npolys = count;
        Rng rng(seed);
        for (uint64_t s = 0; s < count; ++s) {
            Vec c(monos.size());
            for (auto& e : c) e = Elt(rng.below(F.q()));
            sample_coeffs.push_back(std::move(c));
        }
    } else {
        auto np = pow_checked(F.q(), int(monos.size()), uint64_t(1) << 24);
        if (!np) throw TooLarge("polynomial space exceeds 2^24");
        npolys = *np;
    }

    const int T = resolve_threads(threads);
    std::vector<FoolWorst> part(T);
#pragma omp parallel num_threads(T)
    {
        int t = omp_get_thread_num();
        std::vector<uint64_t> cntR(F.q()), cntU(F.q());
        Vec coeffs(monos.size());
        FoolWorst local;
        uint64_t lo = npolys / T * t + std::min<uint64_t>(t, npolys % T);
        uint64_t hi = lo + npolys / T + (uint64_t(t) < npolys % T ? 1 : 0);
        for (uint64_t i = lo; i < hi; ++i) {
            if (sampled) {
                coeffs = sample_coeffs[i];
            } else {
                uint64_t v = i;
                for (size_t mi = 0; mi < monos.size(); ++mi) {
                    coeffs[mi] = Elt(v % F.q());
                    v /= F.q();
                }
            }
            local.offer(tv_sum(F, table, hist, rsize, coeffs, cntR, cntU), i);
        }
        part[t] = std::move(local);
    }
    FoolWorst worst;
    for (const auto& p : part) worst.merge(p);

    FoolingReport rep;
    rep.d = d;
    rep.epsilon = worst.any ? worst.eps : Frac{0, 1};
    rep.mode = sampled ? "sampled(" + std::to_string(count) + "," + std::to_string(seed) + ")"
                       : "exhaustive";
    rep.polynomials_tested = npolys;
    if (worst.any) {
        rep.worst_poly.resize(monos.size());
        if (sampled) {
            rep.worst_poly = sample_coeffs[worst.poly_index];
        } else {
            uint64_t v = worst.poly_index;
            for (size_t mi = 0; mi < monos.size(); ++mi) {
                rep.worst_poly[mi] = Elt(v % F.q());
                v /= F.q();
            }
        }
    }
    return rep;
}

}  // namespace

std::vector<std::vector<int>> monomials_up_to(int nvars, int d, int maxexp) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(nvars, 0);
    // enumerate all exponent tuples, then order by (total degree, lex)
    for (;;) {
        int total = 0;
        for (int e : cur) total += e;
        if (total <= d) out.push_back(cur);
        int i = nvars - 1;
        while (i >= 0 && cur[i] == maxexp) { cur[i] = 0; --i; }
        if (i < 0) break;
        ++cur[i];
    }
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        int ta = 0, tb = 0;
        for (int e : a) ta += e;
        for (int e : b) tb += e;
        if (ta != tb) return ta < tb;
        return a < b;
    });
    return out;
}

Elt eval_monomial(const Field& F, const std::vector<int>& expo, const Vec& point) {
    Elt v = 1;
    for (size_t i = 0; i < expo.size(); ++i)
        if (expo[i]) v = F.mul(v, F.pow(point[i], expo[i]));
    return v;
}

EvaluationSet exhaustive_set(const Field& F, int n) {
    auto space = pow_checked(F.q(), n, uint64_t(1) << 20);
    if (!space) throw TooLarge("exhaustive_set: q^n exceeds 2^20");
    EvaluationSet R;
    R.q = F.q();
    R.n = n;
    R.provenance = "exhaustive";
    R.points.reserve(*space);
    for (uint64_t pi = 0; pi < *space; ++pi) {
        Vec pt(n, 0);
        uint64_t v = pi;
        for (int i = n - 1; i >= 0; --i) { pt[i] = Elt(v % F.q()); v /= F.q(); }
        R.points.push_back(std::move(pt));
    }
    return R;
}

EvaluationSet small_bias_set(const Field& F, int n, Frac eps) {
    if (!(Frac(0) < eps)) throw TooLarge("small_bias_set: eps must be positive");
    // smallest t with 2n / q^t <= eps
    int t = 1;
    while (Frac(2 * n) > eps * Frac((long long)*pow_checked(F.q(), t, uint64_t(1) << 40))) {
        ++t;
        if (t > 12) throw TooLarge("small_bias_set: required extension degree too large");
    }
    ExtField E(F, t);
    const uint64_t sz = E.size();

    EvaluationSet R;
    R.q = F.q();
    R.n = n;
    R.provenance = "small-bias(t=" + std::to_string(t) + ",eps<=" + eps.str() + ")";
    R.points.reserve(sz * sz);
    for (uint64_t ai = 0; ai < sz; ++ai) {
        auto alpha = E.element(ai);
        for (uint64_t bi = 0; bi < sz; ++bi) {
            auto beta = E.element(bi);
            Vec pt(n, 0);
            auto power = beta;
            for (int i = 0; i < n; ++i) {
                power = E.mul(power, alpha);  // alpha^{i+1} * beta
                pt[i] = E.project(power);
            }
            R.points.push_back(std::move(pt));
        }
    }
    return R;
}

EvaluationSet viola_sum(const Field& F, const EvaluationSet& base, int d) {
    if (d < 1) throw TooLarge("viola_sum: d must be >= 1");
    uint64_t size = 1;
    for (int i = 0; i < d; ++i) {
        if (size > (uint64_t(1) << 24) / std::max<uint64_t>(base.points.size(), 1))
            throw SizeOverflow("viola_sum: |base|^d exceeds 2^24");
        size *= base.points.size();
    }
    EvaluationSet R;
    R.q = base.q;
    R.n = base.n;
    R.provenance = "viola(d=" + std::to_string(d) + ",base=" + base.provenance + ")";
    R.points.reserve(size);
    std::vector<uint64_t> idx(d, 0);
    for (uint64_t c = 0; c < size; ++c) {
        Vec pt(base.n, 0);
        for (int i = 0; i < d; ++i) {
            const Vec& p = base.points[idx[i]];
            for (int j = 0; j < base.n; ++j) pt[j] = F.add(pt[j], p[j]);
        }
        R.points.push_back(std::move(pt));
        int i = d - 1;
        while (i >= 0 && ++idx[i] == base.points.size()) { idx[i] = 0; --i; }
    }
    return R;
}

FoolingReport verify_fooling(const Field& F, const EvaluationSet& R, int d, int threads) {
    return fooling_impl(F, R, d, threads, false, 0, 0);
}

FoolingReport verify_fooling_sampled(const Field& F, const EvaluationSet& R, int d,
                                     uint64_t count, uint64_t seed, int threads) {
    return fooling_impl(F, R, d, threads, true, count, seed);
}

NonzeroFractionReport verify_nonzero_fraction(const Field& F, const EvaluationSet& R,
                                              int e, int threads) {
    if (R.q != F.q()) throw FieldMismatch("verify_nonzero_fraction: field mismatch");
    auto monos = monomials_up_to(R.n, e, F.q() - 1);
    auto np = pow_checked(F.q(), int(monos.size()), uint64_t(1) << 24);
    if (!np) throw TooLarge("polynomial space exceeds 2^24");
    const uint64_t npolys = *np;
    auto hist = point_histogram(F, R);
    Mat table = monomial_table(F, R.n, monos);
    const uint64_t rsize = R.points.size();

    struct Min {
        bool any = false;
        uint64_t nonzero = 0;
        uint64_t poly_index = 0;
        void offer(uint64_t nz, uint64_t idx) {
            if (!any || nz < nonzero || (nz == nonzero && idx < poly_index)) {
                any = true;
                nonzero = nz;
                poly_index = idx;
            }
        }
        void merge(const Min& o) {
            if (o.any) offer(o.nonzero, o.poly_index);
        }
    };

    const int T = resolve_threads(threads);
    std::vector<Min> part(T);
#pragma omp parallel num_threads(T)
    {
        int t = omp_get_thread_num();
        Vec coeffs(monos.size());
        Min local;
        uint64_t lo = npolys / T * t + std::min<uint64_t>(t, npolys % T);
        uint64_t hi = lo + npolys / T + (uint64_t(t) < npolys % T ? 1 : 0);
        for (uint64_t i = std::max<uint64_t>(lo, 1); i < hi; ++i) {  // skip zero poly
            uint64_t v = i;
            for (size_t mi = 0; mi < monos.size(); ++mi) {
                coeffs[mi] = Elt(v % F.q());
                v /= F.q();
            }
            uint64_t nz = 0;
            for (uint64_t pi = 0; pi < hist.size(); ++pi) {
                if (!hist[pi]) continue;
                Elt val = 0;
                for (size_t mi = 0; mi < monos.size(); ++mi)
                    if (coeffs[mi] && table.at(int(mi), int(pi)))
                        val = F.add(val, F.mul(coeffs[mi], table.at(int(mi), int(pi))));
                if (val) nz += hist[pi];
            }
            local.offer(nz, i);
        }
        part[t] = std::move(local);
    }
    Min best;
    for (const auto& p : part) best.merge(p);

    NonzeroFractionReport rep;
    rep.e = e;
    rep.polynomials_tested = npolys - 1;
    rep.min_fraction = best.any ? Frac((long long)best.nonzero, (long long)rsize) : Frac(1);
    if (best.any) {
        rep.witness_coeffs.resize(monos.size());
        uint64_t v = best.poly_index;
        for (size_t mi = 0; mi < monos.size(); ++mi) {
            rep.witness_coeffs[mi] = Elt(v % F.q());
            v /= F.q();
        }
    }
    return rep;
}

}  // namespace gapmd
