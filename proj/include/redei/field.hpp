#pragma once

#include <cstdint>
#include <vector>

#include "redei/errors.hpp"

namespace redei {

// A validated odd-friendly prime modulus p < 2^31. Construction runs a
// deterministic primality check; p = 2 is accepted here, entry points that
// need an odd prime enforce that themselves.
class PrimeModulus {
  public:
    explicit PrimeModulus(std::uint64_t p);

    std::uint32_t value() const noexcept { return p_; }

    // Canonical representative of n in [0, p).
    std::uint32_t reduce(std::int64_t n) const noexcept {
        std::int64_t r = n % static_cast<std::int64_t>(p_);
        if (r < 0) r += p_;
        return static_cast<std::uint32_t>(r);
    }

    bool operator==(const PrimeModulus& o) const noexcept { return p_ == o.p_; }
    bool operator!=(const PrimeModulus& o) const noexcept { return p_ != o.p_; }

  private:
    std::uint32_t p_;
};

// Raw modular helpers on canonical values in [0, p). Kept as free functions
// so the polynomial layers can work on flat coefficient arrays.
inline std::uint32_t mod_add(std::uint32_t a, std::uint32_t b, std::uint32_t p) noexcept {
    std::uint32_t s = a + b; // p < 2^31 keeps a+b below 2^32
    return s >= p ? s - p : s;
}

inline std::uint32_t mod_sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) noexcept {
    return a >= b ? a - b : a + p - b;
}

inline std::uint32_t mod_neg(std::uint32_t a, std::uint32_t p) noexcept {
    return a == 0 ? 0 : p - a;
}

inline std::uint32_t mod_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) noexcept {
    return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p);
}

// a^e mod p with 0^0 = 1.
std::uint32_t mod_pow(std::uint32_t a, std::uint64_t e, std::uint32_t p) noexcept;

// Multiplicative inverse via extended Euclid; throws ZeroInverse on a = 0.
std::uint32_t mod_inv(std::uint32_t a, std::uint32_t p);

// A field element carrying its modulus. Mixed-modulus arithmetic throws.
class Fp {
  public:
    Fp(PrimeModulus m, std::int64_t n) : v_(m.reduce(n)), p_(m.value()) {}

    std::uint32_t value() const noexcept { return v_; }
    std::uint32_t modulus() const noexcept { return p_; }

    Fp operator+(const Fp& o) const { check(o); return raw(mod_add(v_, o.v_, p_), p_); }
    Fp operator-(const Fp& o) const { check(o); return raw(mod_sub(v_, o.v_, p_), p_); }
    Fp operator*(const Fp& o) const { check(o); return raw(mod_mul(v_, o.v_, p_), p_); }
    Fp operator-() const { return raw(mod_neg(v_, p_), p_); }

    bool operator==(const Fp& o) const { check(o); return v_ == o.v_; }
    bool operator!=(const Fp& o) const { return !(*this == o); }
    bool operator<(const Fp& o) const { check(o); return v_ < o.v_; }

    static Fp raw(std::uint32_t v, std::uint32_t p) {
        Fp e;
        e.v_ = v;
        e.p_ = p;
        return e;
    }

  private:
    Fp() : v_(0), p_(0) {}
    void check(const Fp& o) const {
        if (p_ != o.p_) throw ParamsOutOfRange("field elements have different moduli");
    }

    std::uint32_t v_;
    std::uint32_t p_;
};

// Canonical representative of n modulo p.
Fp normalize(std::int64_t n, PrimeModulus p);

// Multiplicative inverse; throws ZeroInverse on zero.
Fp inv(const Fp& a);

// a^e with 0^0 = 1.
Fp pow_mod(const Fp& a, std::uint64_t e);

// The set {a^k : a in F_p^*}, sorted ascending. Its size is (p-1)/gcd(k, p-1).
std::vector<std::uint32_t> kth_power_residues(PrimeModulus p, std::uint64_t k);

// All x with x^k = t, sorted ascending; empty when t is not a k-th power.
// t = 0 is rejected (ZeroInput).
std::vector<std::uint32_t> kth_roots(const Fp& t, std::uint64_t k);

// The multiplicative subgroup of order d.
struct Subgroup {
    std::uint32_t p;
    std::uint32_t order;
    std::vector<std::uint32_t> elements; // sorted ascending, always contains 1
};

// Requires d | p-1 (NotADivisor otherwise).
Subgroup subgroup(PrimeModulus p, std::uint32_t d);

} // namespace redei
