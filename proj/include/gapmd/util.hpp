#ifndef GAPMD_UTIL_HPP
#define GAPMD_UTIL_HPP

#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>

namespace gapmd {

// Error taxonomy.  Each failure mode named by the public API gets its own
// type so callers (and tests) can catch precisely.
struct NotPrimePower : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DivisionByZero : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DimensionMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct FieldMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct RankDeficient : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct TooLarge : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SizeOverflow : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotInjective : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotSatisfying : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct MembershipFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact rational with 64-bit parts; all probabilities and bound values in
// reports are carried exactly, never as floating point.
struct Frac {
    long long num = 0;
    long long den = 1;

    Frac() = default;
    Frac(long long n) : num(n), den(1) {}
    Frac(long long n, long long d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw DivisionByZero("Frac: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        if (num == 0) den = 1;
    }

    friend Frac operator+(const Frac& a, const Frac& b) {
        return Frac(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend Frac operator-(const Frac& a, const Frac& b) {
        return Frac(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend Frac operator*(const Frac& a, const Frac& b) {
        return Frac(a.num * b.num, a.den * b.den);
    }
    friend bool operator==(const Frac& a, const Frac& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator<(const Frac& a, const Frac& b) {
        return (__int128)a.num * b.den < (__int128)b.num * a.den;
    }
    friend bool operator<=(const Frac& a, const Frac& b) { return a < b || a == b; }
    friend bool operator>(const Frac& a, const Frac& b) { return b < a; }
    friend bool operator>=(const Frac& a, const Frac& b) { return b <= a; }

    double as_double() const { return (double)num / (double)den; }
    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

// Deterministic RNG.  mt19937_64 output is pinned by the standard; the
// bounded draw avoids std::uniform_int_distribution, whose mapping is
// implementation-defined.
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t next() { return eng_(); }

    // uniform in [0, n), n >= 1, by masked rejection
    uint64_t below(uint64_t n) {
        if (n <= 1) return 0;
        uint64_t mask = ~uint64_t(0);
        int bits = 64 - __builtin_clzll(n - 1);
        mask >>= (64 - bits);
        for (;;) {
            uint64_t v = eng_() & mask;
            if (v < n) return v;
        }
    }

private:
    std::mt19937_64 eng_;
};

// q^k if it fits below cap, otherwise nullopt.
inline std::optional<uint64_t> pow_checked(uint64_t q, int k, uint64_t cap) {
    uint64_t v = 1;
    for (int i = 0; i < k; ++i) {
        if (v > cap / q) return std::nullopt;
        v *= q;
    }
    return v;
}

}  // namespace gapmd

#endif
