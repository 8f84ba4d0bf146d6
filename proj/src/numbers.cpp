#include "redei/numbers.hpp"

#include <vector>

namespace redei {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    if (n % 3 == 0) return n == 3;
    for (std::uint64_t d = 5; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

std::vector<std::uint32_t> primes_in_range(std::uint32_t lo, std::uint32_t hi) {
    std::vector<std::uint32_t> out;
    if (hi < 2 || hi < lo) return out;
    std::vector<bool> composite(hi + 1, false);
    for (std::uint64_t i = 2; i * i <= hi; ++i) {
        if (composite[i]) continue;
        for (std::uint64_t j = i * i; j <= hi; j += i) composite[j] = true;
    }
    for (std::uint32_t i = lo < 2 ? 2 : lo; i <= hi; ++i) {
        if (!composite[i]) out.push_back(i);
    }
    return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t result = n;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        result -= result / d;
        while (n % d == 0) n /= d;
    }
    if (n > 1) result -= result / n;
    return result;
}

std::uint32_t ceil_sqrt(std::uint64_t n) {
    if (n == 0) return 0;
    std::uint64_t s = 1;
    while (s * s < n) ++s;
    return static_cast<std::uint32_t>(s);
}

} // namespace redei
