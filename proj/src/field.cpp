#include "gapmd/field.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace gapmd {

namespace {

struct FieldParams {
    int p, t;
    std::vector<int> modulus;  // ascending coefficients, monic
};

// Fixed moduli (Conway polynomials) so serialized element indices are
// portable across runs and machines.
const std::map<int, FieldParams>& param_table() {
    static const std::map<int, FieldParams> table = {
        {2, {2, 1, {}}},
        {3, {3, 1, {}}},
        {4, {2, 2, {1, 1, 1}}},        // x^2 + x + 1
        {5, {5, 1, {}}},
        {7, {7, 1, {}}},
        {8, {2, 3, {1, 1, 0, 1}}},     // x^3 + x + 1
        {9, {3, 2, {2, 2, 1}}},        // x^2 + 2x + 2
        {11, {11, 1, {}}},
        {13, {13, 1, {}}},
        {16, {2, 4, {1, 1, 0, 0, 1}}}, // x^4 + x + 1
    };
    return table;
}

// polynomials over F_p as ascending coefficient vectors, no trailing zeros
std::vector<int> poly_mul_mod_p(const std::vector<int>& a, const std::vector<int>& b, int p) {
    if (a.empty() || b.empty()) return {};
    std::vector<int> r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& m, int p) {
    int dm = int(m.size()) - 1;
    while (int(a.size()) - 1 >= dm) {
        int da = int(a.size()) - 1;
        int lead = a[da];  // m is monic
        for (int i = 0; i <= dm; ++i) {
            int idx = da - dm + i;
            a[idx] = ((a[idx] - lead * m[i]) % p + p * 16) % p;
        }
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    return a;
}

// irreducibility over F_p by trial division with every monic polynomial of
// degree 1..deg/2 (fields here are tiny, so brute force is exact and cheap)
bool is_irreducible(const std::vector<int>& m, int p) {
    int deg = int(m.size()) - 1;
    if (deg < 1 || m[deg] != 1) return false;
    for (int d = 1; 2 * d <= deg; ++d) {
        int count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (int c = 0; c < count; ++c) {
            std::vector<int> div(d + 1, 0);
            int v = c;
            for (int i = 0; i < d; ++i) { div[i] = v % p; v /= p; }
            div[d] = 1;
            if (poly_mod(m, div, p).empty()) return false;
        }
    }
    return true;
}

std::vector<int> index_to_poly(int idx, int p, int t) {
    std::vector<int> v(t, 0);
    for (int i = 0; i < t; ++i) { v[i] = idx % p; idx /= p; }
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

int poly_to_index(const std::vector<int>& v, int p) {
    int idx = 0;
    for (int i = int(v.size()) - 1; i >= 0; --i) idx = idx * p + v[i];
    return idx;
}

}  // namespace

Field::Field(int q) : q_(q) {
    auto it = param_table().find(q);
    if (it == param_table().end())
        throw NotPrimePower("field order not supported: " + std::to_string(q));
    p_ = it->second.p;
    t_ = it->second.t;
    modulus_ = it->second.modulus;

    if (t_ > 1 && !is_irreducible(modulus_, p_))
        throw NotPrimePower("modulus reducible for q=" + std::to_string(q));

    add_.assign(size_t(q_) * q_, 0);
    mul_.assign(size_t(q_) * q_, 0);
    neg_.assign(q_, 0);
    inv_.assign(q_, 0);

    for (int a = 0; a < q_; ++a) {
        for (int b = 0; b < q_; ++b) {
            if (t_ == 1) {
                add_[size_t(a) * q_ + b] = Elt((a + b) % p_);
                mul_[size_t(a) * q_ + b] = Elt((a * b) % p_);
            } else {
                auto pa = index_to_poly(a, p_, t_);
                auto pb = index_to_poly(b, p_, t_);
                std::vector<int> sum(t_, 0);
                for (int i = 0; i < t_; ++i) {
                    int ca = i < int(pa.size()) ? pa[i] : 0;
                    int cb = i < int(pb.size()) ? pb[i] : 0;
                    sum[i] = (ca + cb) % p_;
                }
                add_[size_t(a) * q_ + b] = Elt(poly_to_index(sum, p_));
                auto prod = poly_mod(poly_mul_mod_p(pa, pb, p_), modulus_, p_);
                mul_[size_t(a) * q_ + b] = Elt(poly_to_index(prod, p_));
            }
        }
    }
    for (int a = 0; a < q_; ++a) {
        for (int b = 0; b < q_; ++b) {
            if (add_[size_t(a) * q_ + b] == 0) neg_[a] = Elt(b);
            if (a != 0 && mul_[size_t(a) * q_ + b] == 1) inv_[a] = Elt(b);
        }
    }

    gen_ = 0;
    for (int g = 1; g < q_; ++g) {
        int order = 1;
        Elt x = Elt(g);
        while (x != 1) { x = mul(x, Elt(g)); ++order; }
        if (order == q_ - 1) { gen_ = Elt(g); break; }
    }
}

const Field& Field::of(int q) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<Field>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(q);
    if (it == cache.end()) {
        it = cache.emplace(q, std::unique_ptr<Field>(new Field(q))).first;
    }
    return *it->second;
}

}  // namespace gapmd
