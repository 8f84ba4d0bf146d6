#include "redei/congruence.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "redei/numbers.hpp"

namespace redei {

SegmentParams::SegmentParams(PrimeModulus p_, std::uint32_t alpha_, std::uint32_t beta_,
                             std::uint32_t mu_, std::uint32_t nu_, bool signed_pairs_)
    : p(p_), alpha(alpha_), beta(beta_), mu(mu_), nu(nu_), signed_pairs(signed_pairs_) {
    if (alpha == 0 || beta == 0) {
        throw ParamsOutOfRange("segment lengths must be positive");
    }
    if (mu == 0 || nu == 0 || mu % p.value() == 0 || nu % p.value() == 0) {
        throw ParamsOutOfRange("segment scales must be nonzero modulo p");
    }
}

bool SegmentParams::bound_applies() const {
    return p.value() >= 3 && bound() <= p.value() - 1;
}

ExpressibilityReport expressible_set(const SegmentParams& params) {
    const std::uint32_t p = params.p.value();
    ExpressibilityReport rep{params, {}, {}, {}, params.bound(), params.bound_applies(), false};

    // witness slot per a; x=0 marks "not yet expressed".
    std::vector<SegmentWitness> slot(p, SegmentWitness{0, 0, 0, false});
    // Scan x ascending then y ascending: the first witness for each a is the
    // lexicographically smallest one.
    for (std::uint64_t i = 1; i <= params.alpha; ++i) {
        const std::uint64_t x = static_cast<std::uint64_t>(params.mu) * i;
        const std::uint32_t xr = static_cast<std::uint32_t>(x % p);
        if (xr == 0) continue; // expresses nothing unless y = 0, which the ranges exclude
        const std::uint32_t xinv = mod_inv(xr, p);
        for (std::uint64_t j = 1; j <= params.beta; ++j) {
            const std::uint64_t y = static_cast<std::uint64_t>(params.nu) * j;
            const std::uint32_t yr = static_cast<std::uint32_t>(y % p);
            const std::uint32_t a_pos = mod_mul(yr, xinv, p);
            if (a_pos != 0 && slot[a_pos].x == 0) {
                slot[a_pos] = SegmentWitness{a_pos, x, y, false};
            }
            if (params.signed_pairs) {
                const std::uint32_t a_neg = mod_mul(mod_neg(yr, p), xinv, p);
                if (a_neg != 0 && slot[a_neg].x == 0) {
                    slot[a_neg] = SegmentWitness{a_neg, x, y, true};
                }
            }
        }
    }

    for (std::uint32_t a = 1; a < p; ++a) {
        if (slot[a].x != 0) {
            rep.expressible.push_back(a);
            rep.witnesses.push_back(slot[a]);
        } else {
            rep.inexpressible.push_back(a);
        }
    }
    rep.passed = !rep.bound_applies || rep.expressible.size() >= rep.bound;
    return rep;
}

namespace {

std::pair<std::uint32_t, std::uint32_t> smallest_signed_witness(const Fp& a,
                                                                std::uint32_t x_max,
                                                                std::uint32_t y_max,
                                                                const char* label) {
    const std::uint32_t p = a.modulus();
    if (a.value() == 0) throw ZeroInput(std::string(label) + " requires a nonzero element");
    for (std::uint32_t x = 1; x <= x_max; ++x) {
        const std::uint32_t ax = mod_mul(a.value(), x % p, p);
        for (std::uint32_t y = 1; y <= y_max; ++y) {
            const std::uint32_t yr = y % p;
            if (ax == yr || ax == mod_neg(yr, p)) return {x, y};
        }
    }
    throw TheoremViolation(std::string(label) + " found no witness for a = " +
                           std::to_string(a.value()) + " mod " + std::to_string(p));
}

} // namespace

std::pair<std::uint32_t, std::uint32_t> thue_solve(const Fp& a) {
    const std::uint32_t bound = ceil_sqrt(a.modulus());
    return smallest_signed_witness(a, bound, bound, "thue_solve");
}

std::pair<std::uint32_t, std::uint32_t> vinogradov_solve(const Fp& a, std::uint32_t alpha) {
    const std::uint32_t p = a.modulus();
    if (alpha == 0 || alpha > p) {
        throw ParamsOutOfRange("vinogradov_solve requires 1 <= alpha <= p");
    }
    return smallest_signed_witness(a, alpha, p / alpha, "vinogradov_solve");
}

namespace {

// Sorted symmetric difference set S - S as canonical residues.
std::vector<std::uint32_t> difference_set(const std::vector<std::uint32_t>& s, std::uint32_t p) {
    std::vector<bool> seen(p, false);
    for (std::uint32_t a : s) {
        for (std::uint32_t b : s) {
            seen[mod_sub(a % p, b % p, p)] = true;
        }
    }
    std::vector<std::uint32_t> out;
    for (std::uint32_t v = 0; v < p; ++v) {
        if (seen[v]) out.push_back(v);
    }
    return out;
}

std::vector<std::uint32_t> canonical_sorted_set(const std::vector<std::uint32_t>& s,
                                                std::uint32_t p, const char* label) {
    if (s.empty()) throw EmptySet(std::string(label) + " must be non-empty");
    std::vector<std::uint32_t> out;
    out.reserve(s.size());
    for (std::uint32_t v : s) out.push_back(v % p);
    std::sort(out.begin(), out.end());
    if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
        throw ParamsOutOfRange(std::string(label) + " has repeated elements modulo p");
    }
    return out;
}

} // namespace

CartesianReport cartesian_direction_count(PrimeModulus pm,
                                          const std::vector<std::uint32_t>& A,
                                          const std::vector<std::uint32_t>& B,
                                          bool strengthened) {
    const std::uint32_t p = pm.value();
    const std::vector<std::uint32_t> a_set = canonical_sorted_set(A, p, "A");
    const std::vector<std::uint32_t> b_set = canonical_sorted_set(B, p, "B");
    if (strengthened &&
        std::find(a_set.begin(), a_set.end(), 0u) != a_set.end()) {
        throw ZeroInA("the strengthened variant requires 0 not in A");
    }

    const std::uint64_t alpha = a_set.size();
    const std::uint64_t beta = b_set.size();

    // x-range: (A-A)\{0}, widened with A itself in the strengthened variant.
    std::vector<std::uint32_t> xs = difference_set(a_set, p);
    if (strengthened) {
        std::vector<bool> seen(p, false);
        for (std::uint32_t v : xs) seen[v] = true;
        for (std::uint32_t v : a_set) seen[v] = true;
        xs.clear();
        for (std::uint32_t v = 0; v < p; ++v) {
            if (seen[v]) xs.push_back(v);
        }
    }
    xs.erase(std::remove(xs.begin(), xs.end(), 0u), xs.end());
    const std::vector<std::uint32_t> ys = difference_set(b_set, p);

    CartesianReport rep;
    rep.p = p;
    rep.strengthened = strengthened;
    rep.alpha = alpha;
    rep.beta = beta;
    rep.includes_zero = true;
    const std::uint64_t raw_bound =
        strengthened ? alpha * beta + 1 : (alpha - 1) * beta + 1;
    rep.bound = std::min<std::uint64_t>(p, raw_bound);

    std::vector<CartesianWitness> slot(p, CartesianWitness{0, 0, 0});
    std::vector<bool> solvable(p, false);
    // a = 0: y = b - b works with any x, including the degenerate x-range.
    solvable[0] = true;
    slot[0] = CartesianWitness{0, 0, 0};
    for (std::uint32_t x : xs) {
        const std::uint32_t xinv = mod_inv(x, p);
        for (std::uint32_t y : ys) {
            const std::uint32_t a = mod_mul(y, xinv, p);
            if (a != 0 && !solvable[a]) {
                solvable[a] = true;
                slot[a] = CartesianWitness{a, x, y};
            }
        }
    }

    for (std::uint32_t a = 0; a < p; ++a) {
        if (solvable[a]) {
            rep.solvable.push_back(a);
            rep.witnesses.push_back(slot[a]);
        } else {
            rep.inexpressible.push_back(a);
        }
    }
    rep.passed = rep.solvable.size() >= rep.bound;
    return rep;
}

CoprimeRatioCount coprime_ratio_count(PrimeModulus pm, std::uint32_t alpha) {
    const std::uint32_t p = pm.value();
    if (alpha == 0) throw ParamsOutOfRange("alpha must be positive");
    if (2ull * alpha * alpha >= p) {
        throw RangeTooLarge("coprime_ratio_count requires 2*alpha^2 < p");
    }

    CoprimeRatioCount out{p, alpha, 0, 0, 0};
    std::vector<bool> seen(p, false);
    for (std::uint32_t v = 1; v <= alpha; ++v) {
        const std::uint32_t vinv = mod_inv(v, p);
        for (std::uint32_t u = 1; u <= alpha; ++u) {
            const std::uint32_t r = mod_mul(u, vinv, p);
            if (!seen[r]) {
                seen[r] = true;
                ++out.distinct_a_count;
            }
            const std::uint32_t rn = mod_neg(r, p);
            if (!seen[rn]) {
                seen[rn] = true;
                ++out.distinct_a_count;
            }
            if (std::gcd(u, v) == 1) ++out.coprime_pair_count;
        }
    }
    for (std::uint32_t k = 1; k <= alpha; ++k) out.phi_sum += euler_phi(k);

    // In range 2*alpha^2 < p these counts are forced to agree; a mismatch
    // would mean the scan itself is wrong.
    if (out.distinct_a_count != 2 * out.coprime_pair_count) {
        throw TheoremViolation("ratio count mismatch at p = " + std::to_string(p) +
                               ", alpha = " + std::to_string(alpha));
    }
    return out;
}

} // namespace redei
