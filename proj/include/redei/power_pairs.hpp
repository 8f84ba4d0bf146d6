#pragma once

#include <cstdint>
#include <utility>

#include "redei/field.hpp"

namespace redei {

// Inputs for the congruent-pair searches: find s in [1,g-1], y in [1,h]
// with s^k * target = y^k in F_p.
struct PairParams {
    PrimeModulus p;
    std::uint32_t k = 2;      // even, with p = 1 (mod k)
    std::uint32_t g = 2;      // 2 <= g <= p
    Fp target;                // nonzero k-th power residue

    PairParams(PrimeModulus p_, std::uint32_t k_, std::uint32_t g_, Fp target_);
};

struct PairWitness {
    std::uint32_t s = 0; // in [1, g-1]
    std::uint32_t y = 0; // in [1, h]
    bool congruence_check = false; // s^k * target == y^k, re-verified on return
};

// The two h formulas side by side. raw is ceil((p-k-g)/(g-1)) before the
// clamp; it can be zero or negative when g is close to p, and the comparison
// claims below are statements about this raw value. h_new = max(raw, 1)
// keeps scan ranges nonempty.
struct PairBounds {
    std::int64_t raw = 0;
    std::uint32_t h_new = 1;
    std::uint32_t h_classic = 1;
};

PairBounds pair_bound_h(PrimeModulus p, std::uint32_t k, std::uint32_t g);

// Exhaustive scan in lexicographic (s, y) order; throws NoPairFound when the
// lists {s^k * target} and {y^k} are disjoint, which falsifies the claimed
// bound for these inputs and must surface as a failure.
PairWitness find_congruent_pair(const PairParams& params, std::uint32_t h);

// Constructive route: some k-th root a of the target should satisfy
// a*x = +-y with x <= g-1, y <= h_new; then s = x, y gives the pair, since
// k even kills the sign. Picks the smallest expressible root. Throws
// ConstructionFailed when every root is inexpressible.
PairWitness find_pair_constructive(const PairParams& params);

// Evaluates both comparison sentences about raw h versus ceil(p/g):
// (a) if g >= raw h then raw h <= h_classic;
// (b) if g*(k+g) >= p then raw h <= h_classic - 1.
struct BoundComparison {
    std::uint32_t p = 0;
    std::uint32_t k = 0;
    std::uint32_t g = 0;
    PairBounds bounds;
    bool claim_a_applicable = false;
    bool claim_a_holds = true; // vacuously true when not applicable
    bool claim_b_applicable = false;
    bool claim_b_holds = true;
};

BoundComparison compare_bounds(PrimeModulus p, std::uint32_t k, std::uint32_t g);

// Fermat two-squares via the quadratic root of -1 and the Thue witness:
// r*x = +-y gives p | x^2 + y^2 with both squares small, leaving x^2+y^2 in
// {p, 2p}; the 2p case descends through ((x+y)/2, (x-y)/2). Returns the
// decomposition sorted ascending. Throws BadResidueClass unless p = 1 (mod 4).
std::pair<std::uint32_t, std::uint32_t> sum_two_squares(PrimeModulus p);

} // namespace redei
