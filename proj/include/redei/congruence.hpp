#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "redei/field.hpp"

namespace redei {

// Scaled segment ranges for the congruence a*x = +-y (mod p): x runs over
// mu*{1..alpha}, y over nu*{1..beta}. Defaults give the plain segments.
struct SegmentParams {
    PrimeModulus p;
    std::uint32_t alpha = 1;
    std::uint32_t beta = 1;
    std::uint32_t mu = 1;
    std::uint32_t nu = 1;
    bool signed_pairs = true; // allow the -y branch

    SegmentParams(PrimeModulus p_, std::uint32_t alpha_, std::uint32_t beta_,
                  std::uint32_t mu_ = 1, std::uint32_t nu_ = 1, bool signed_pairs_ = true);

    // Whether the count bound alpha*(beta+1) applies: it needs
    // alpha*(beta+1) <= p-1 and an odd prime.
    bool bound_applies() const;
    std::uint64_t bound() const { return static_cast<std::uint64_t>(alpha) * (beta + 1); }
};

struct SegmentWitness {
    std::uint32_t a; // the expressed element
    std::uint64_t x; // segment value, mu*i
    std::uint64_t y; // segment value, nu*j
    bool negative;   // true when a*x = -y (mod p)
};

struct ExpressibilityReport {
    SegmentParams params;
    std::vector<std::uint32_t> expressible;   // sorted ascending, subset of F_p^*
    std::vector<std::uint32_t> inexpressible; // complement in F_p^*, sorted
    std::vector<SegmentWitness> witnesses;    // one per expressible a, sorted by a
    std::uint64_t bound;                      // alpha*(beta+1)
    bool bound_applies;
    bool passed; // |expressible| >= bound whenever bound_applies
};

// Exhaustive scan of the congruence over the scaled segments. Witnesses are
// the lexicographically smallest (x, y) with the +y branch preferred on ties.
ExpressibilityReport expressible_set(const SegmentParams& params);

// Smallest (x, y), x and y in {1..ceil(sqrt(p))}, with a*x = +-y (mod p).
// Existence is guaranteed for every nonzero a; a = 0 throws ZeroInput.
std::pair<std::uint32_t, std::uint32_t> thue_solve(const Fp& a);

// Smallest (x, y), x in {1..alpha}, y in {1..floor(p/alpha)}, with
// a*x = +-y (mod p). Requires 1 <= alpha <= p.
std::pair<std::uint32_t, std::uint32_t> vinogradov_solve(const Fp& a, std::uint32_t alpha);

struct CartesianWitness {
    std::uint32_t a;
    std::uint32_t x;
    std::uint32_t y;
};

struct CartesianReport {
    std::uint32_t p;
    bool strengthened;
    std::uint64_t alpha; // |A|
    std::uint64_t beta;  // |B|
    std::vector<std::uint32_t> solvable;      // sorted, includes a = 0
    std::vector<std::uint32_t> inexpressible; // complement in F_p^*, sorted
    std::vector<CartesianWitness> witnesses;  // sorted by a
    std::uint64_t bound;                      // min(p, (alpha-1)*beta+1) or min(p, alpha*beta+1)
    bool includes_zero;                       // a = 0 counted via the trivial solution
    bool passed;
};

// Counts a in F_p admitting a*x = y with x in (A-A)\{0} and y in B-B; the
// strengthened variant widens x to (A u (A-A))\{0} and requires 0 not in A.
// a = 0 is always counted: y = b - b solves it for any x.
CartesianReport cartesian_direction_count(PrimeModulus p,
                                          const std::vector<std::uint32_t>& A,
                                          const std::vector<std::uint32_t>& B,
                                          bool strengthened);

struct CoprimeRatioCount {
    std::uint32_t p;
    std::uint32_t alpha;
    std::uint64_t distinct_a_count;   // |{+-u/v : 1 <= u, v <= alpha}|
    std::uint64_t coprime_pair_count; // ordered pairs with gcd(u, v) = 1
    std::uint64_t phi_sum;            // sum of phi(k) for k = 1..alpha
};

// Requires 2*alpha^2 < p (RangeTooLarge otherwise); under that range each
// reduced fraction gives a distinct residue, so distinct = 2 * coprime pairs
// and coprime pairs = 2*phi_sum - 1.
CoprimeRatioCount coprime_ratio_count(PrimeModulus p, std::uint32_t alpha);

} // namespace redei
