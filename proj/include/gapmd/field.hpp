#ifndef GAPMD_FIELD_HPP
#define GAPMD_FIELD_HPP

#include <cstdint>
#include <vector>

#include "gapmd/util.hpp"

namespace gapmd {

// A field element is its index in [0, q).  For prime q the index is the
// residue itself; for q = p^t it is the base-p digit vector of the residue
// polynomial, so index 0 is the additive and index 1 the multiplicative
// identity in every supported field.
using Elt = uint8_t;

// Arithmetic in F_q for prime powers q <= 16.  Every q has one fixed monic
// irreducible modulus (a Conway polynomial for the extension fields), so
// element indices mean the same thing in every run and every file.
// Construction checks irreducibility by trial division; all binary
// operations are q x q lookup tables built once.
class Field {
public:
    // Canonical immutable instance for q; throws NotPrimePower otherwise.
    // Supported: 2, 3, 4, 5, 7, 8, 9, 11, 13, 16.
    static const Field& of(int q);

    int q() const { return q_; }
    int p() const { return p_; }
    int t() const { return t_; }
    // modulus coefficients (ascending, monic); empty for prime fields
    const std::vector<int>& modulus() const { return modulus_; }

    Elt add(Elt a, Elt b) const { return add_[size_t(a) * q_ + b]; }
    Elt sub(Elt a, Elt b) const { return add(a, neg(b)); }
    Elt mul(Elt a, Elt b) const { return mul_[size_t(a) * q_ + b]; }
    Elt neg(Elt a) const { return neg_[a]; }
    Elt inv(Elt a) const {
        if (a == 0) throw DivisionByZero("inv(0)");
        return inv_[a];
    }

    // a^e with 0^0 = 1 (so componentwise powers of encodings at e = 0 give
    // the all-ones vector)
    Elt pow(Elt a, uint64_t e) const {
        Elt r = 1;
        Elt base = a;
        while (e) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }

    // sum_{x in F_q} x^a for 0 <= a <= q-1; 0 for a <= q-2, q-1 (= -1) at
    // a = q-1.  Computed by summation, not assumed.
    Elt power_sum(uint64_t a) const {
        Elt s = 0;
        for (int x = 0; x < q_; ++x) s = add(s, pow(Elt(x), a));
        return s;
    }

    // smallest element index generating the multiplicative group
    Elt generator() const { return gen_; }

    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

private:
    explicit Field(int q);

    int q_, p_, t_;
    std::vector<int> modulus_;
    std::vector<Elt> add_, mul_, neg_, inv_;
    Elt gen_;
};

}  // namespace gapmd

#endif
