#include "redei/power_pairs.hpp"

#include <algorithm>
#include <string>

#include "redei/congruence.hpp"
#include "redei/errors.hpp"
#include "redei/numbers.hpp"

namespace redei {

PairParams::PairParams(PrimeModulus p_, std::uint32_t k_, std::uint32_t g_, Fp target_)
    : p(p_), k(k_), g(g_), target(target_) {
    if (p.value() < 3) throw ParamsOutOfRange("PairParams: p must be an odd prime");
    if (target.modulus() != p.value()) {
        throw ParamsOutOfRange("PairParams: target modulus mismatch");
    }
    if (k == 0 || k % 2 != 0) throw ParamsOutOfRange("PairParams: k must be a positive even integer");
    if ((p.value() - 1) % k != 0) {
        throw ParamsOutOfRange("PairParams: requires p = 1 (mod k)");
    }
    if (g < 2 || g > p.value()) throw BadG("PairParams: g must lie in [2, p]");
    if (target.value() == 0 || mod_pow(target.value(), (p.value() - 1) / k, p.value()) != 1) {
        throw ParamsOutOfRange("PairParams: target must be a nonzero k-th power residue");
    }
}

PairBounds pair_bound_h(PrimeModulus p, std::uint32_t k, std::uint32_t g) {
    if (k == 0) throw ParamsOutOfRange("pair_bound_h: k must be positive");
    if (g < 2 || g > p.value()) throw BadG("pair_bound_h: g must lie in [2, p]");
    PairBounds b;
    b.raw = ceil_div(static_cast<std::int64_t>(p.value()) - k - g,
                     static_cast<std::int64_t>(g) - 1);
    b.h_new = b.raw < 1 ? 1u : static_cast<std::uint32_t>(b.raw);
    b.h_classic = static_cast<std::uint32_t>(ceil_div(p.value(), g));
    return b;
}

PairWitness find_congruent_pair(const PairParams& params, std::uint32_t h) {
    if (h < 1) throw ParamsOutOfRange("find_congruent_pair: h must be positive");
    const std::uint32_t p = params.p.value();
    for (std::uint32_t s = 1; s <= params.g - 1; ++s) {
        const std::uint32_t lhs =
            mod_mul(mod_pow(s % p, params.k, p), params.target.value(), p);
        for (std::uint32_t y = 1; y <= h; ++y) {
            if (mod_pow(y % p, params.k, p) == lhs) {
                return PairWitness{s, y, true};
            }
        }
    }
    throw NoPairFound("find_congruent_pair: no (s,y) with s^k*target = y^k, s<" +
                      std::to_string(params.g) + ", y<=" + std::to_string(h) + " at p=" +
                      std::to_string(p) + ", k=" + std::to_string(params.k) + ", target=" +
                      std::to_string(params.target.value()));
}

PairWitness find_pair_constructive(const PairParams& params) {
    const std::uint32_t p = params.p.value();
    const PairBounds bounds = pair_bound_h(params.p, params.k, params.g);
    const auto roots = kth_roots(params.target, params.k);

    SegmentParams seg(params.p, params.g - 1, bounds.h_new);
    const auto report = expressible_set(seg);
    std::vector<const SegmentWitness*> by_a(p, nullptr);
    for (const auto& w : report.witnesses) by_a[w.a] = &w;

    for (std::uint32_t a : roots) { // ascending: smallest expressible root wins
        if (by_a[a] == nullptr) continue;
        const auto& w = *by_a[a];
        const std::uint32_t s = static_cast<std::uint32_t>(w.x);
        const std::uint32_t y = static_cast<std::uint32_t>(w.y);
        // a*x = +-y and a^k = target force s^k*target = y^k for even k.
        const bool ok = mod_mul(mod_pow(s % p, params.k, p), params.target.value(), p) ==
                        mod_pow(y % p, params.k, p);
        if (!ok) {
            throw ConstructionFailed("find_pair_constructive: congruence chain broke at root " +
                                     std::to_string(a));
        }
        return PairWitness{s, y, true};
    }
    throw ConstructionFailed("find_pair_constructive: every k-th root of " +
                             std::to_string(params.target.value()) +
                             " is inexpressible at p=" + std::to_string(p) + ", g=" +
                             std::to_string(params.g) + ", h=" + std::to_string(bounds.h_new));
}

BoundComparison compare_bounds(PrimeModulus p, std::uint32_t k, std::uint32_t g) {
    BoundComparison c;
    c.p = p.value();
    c.k = k;
    c.g = g;
    c.bounds = pair_bound_h(p, k, g);
    const std::int64_t classic = c.bounds.h_classic;
    c.claim_a_applicable = static_cast<std::int64_t>(g) >= c.bounds.raw;
    if (c.claim_a_applicable) c.claim_a_holds = c.bounds.raw <= classic;
    c.claim_b_applicable =
        static_cast<std::uint64_t>(g) * (static_cast<std::uint64_t>(k) + g) >= p.value();
    if (c.claim_b_applicable) c.claim_b_holds = c.bounds.raw <= classic - 1;
    return c;
}

std::pair<std::uint32_t, std::uint32_t> sum_two_squares(PrimeModulus p) {
    if (p.value() % 4 != 1) {
        throw BadResidueClass("sum_two_squares: requires p = 1 (mod 4), got p=" +
                              std::to_string(p.value()));
    }
    const auto roots = kth_roots(normalize(-1, p), 2);
    if (roots.empty()) {
        throw TheoremViolation("sum_two_squares: -1 has no square root despite p = 1 (mod 4)");
    }
    auto [x, y] = thue_solve(Fp(p, roots.front()));
    std::uint64_t sum =
        static_cast<std::uint64_t>(x) * x + static_cast<std::uint64_t>(y) * y;
    if (sum == 2ull * p.value()) {
        // x, y share parity here, so the halves are integers.
        const std::uint32_t nx = (x + y) / 2;
        const std::uint32_t ny = (x > y ? x - y : y - x) / 2;
        x = nx;
        y = ny;
        sum = static_cast<std::uint64_t>(x) * x + static_cast<std::uint64_t>(y) * y;
    }
    if (sum != p.value()) {
        throw TheoremViolation("sum_two_squares: witness reduction missed p at p=" +
                               std::to_string(p.value()));
    }
    if (x > y) std::swap(x, y);
    return {x, y};
}

} // namespace redei
