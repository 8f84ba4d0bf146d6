#pragma once

#include <cstdint>
#include <vector>

namespace redei {

// Deterministic primality check by trial division; adequate for n < 2^31.
bool is_prime(std::uint64_t n);

// Primes in [lo, hi], ascending.
std::vector<std::uint32_t> primes_in_range(std::uint32_t lo, std::uint32_t hi);

std::uint64_t euler_phi(std::uint64_t n);

// ceil(n / d) for d > 0 and n of either sign.
inline std::int64_t ceil_div(std::int64_t n, std::int64_t d) {
    std::int64_t q = n / d;
    if (n % d > 0) ++q;
    return q;
}

// Smallest s with s*s >= n.
std::uint32_t ceil_sqrt(std::uint64_t n);

} // namespace redei
