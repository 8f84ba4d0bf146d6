#include "redei/field.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "redei/numbers.hpp"

namespace redei {

PrimeModulus::PrimeModulus(std::uint64_t p) {
    if (p >= (1ull << 31)) {
        throw ParamsOutOfRange("modulus must be below 2^31, got " + std::to_string(p));
    }
    if (!is_prime(p)) {
        throw NotPrime("modulus must be prime, got " + std::to_string(p));
    }
    p_ = static_cast<std::uint32_t>(p);
}

std::uint32_t mod_pow(std::uint32_t a, std::uint64_t e, std::uint32_t p) noexcept {
    std::uint64_t base = a % p;
    std::uint64_t out = 1 % p;
    while (e > 0) {
        if (e & 1) out = (out * base) % p;
        base = (base * base) % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(out);
}

std::uint32_t mod_inv(std::uint32_t a, std::uint32_t p) {
    if (a % p == 0) throw ZeroInverse("zero has no inverse modulo " + std::to_string(p));
    std::int64_t r0 = p, r1 = a % p;
    std::int64_t t0 = 0, t1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t r2 = r0 - q * r1;
        std::int64_t t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        t0 = t1; t1 = t2;
    }
    if (t0 < 0) t0 += p;
    return static_cast<std::uint32_t>(t0);
}

Fp normalize(std::int64_t n, PrimeModulus p) {
    return Fp(p, n);
}

Fp inv(const Fp& a) {
    return Fp::raw(mod_inv(a.value(), a.modulus()), a.modulus());
}

Fp pow_mod(const Fp& a, std::uint64_t e) {
    return Fp::raw(mod_pow(a.value(), e, a.modulus()), a.modulus());
}

std::vector<std::uint32_t> kth_power_residues(PrimeModulus p, std::uint64_t k) {
    const std::uint32_t pv = p.value();
    std::vector<bool> seen(pv, false);
    for (std::uint32_t a = 1; a < pv; ++a) {
        seen[mod_pow(a, k, pv)] = true;
    }
    std::vector<std::uint32_t> out;
    for (std::uint32_t v = 1; v < pv; ++v) {
        if (seen[v]) out.push_back(v);
    }
    return out;
}

std::vector<std::uint32_t> kth_roots(const Fp& t, std::uint64_t k) {
    if (t.value() == 0) throw ZeroInput("kth_roots requires a nonzero target");
    const std::uint32_t p = t.modulus();
    std::vector<std::uint32_t> out;
    for (std::uint32_t x = 1; x < p; ++x) {
        if (mod_pow(x, k, p) == t.value()) out.push_back(x);
    }
    return out;
}

Subgroup subgroup(PrimeModulus p, std::uint32_t d) {
    const std::uint32_t pv = p.value();
    if (d == 0 || (pv - 1) % d != 0) {
        throw NotADivisor("subgroup order " + std::to_string(d) + " does not divide " +
                          std::to_string(pv - 1));
    }
    const std::uint64_t e = (pv - 1) / d;
    std::vector<bool> seen(pv, false);
    for (std::uint32_t a = 1; a < pv; ++a) {
        seen[mod_pow(a, e, pv)] = true;
    }
    Subgroup g;
    g.p = pv;
    g.order = d;
    for (std::uint32_t v = 1; v < pv; ++v) {
        if (seen[v]) g.elements.push_back(v);
    }
    return g;
}

} // namespace redei
