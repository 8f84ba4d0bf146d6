#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "redei/field.hpp"

namespace redei {

// A set of distinct affine points (a, b) over F_p, 1 <= n < p, held sorted.
struct PointSet {
    PrimeModulus p;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> points;

    PointSet(PrimeModulus p_, std::vector<std::pair<std::uint32_t, std::uint32_t>> points_);
    std::size_t size() const { return points.size(); }
};

struct RatioSetResult {
    std::vector<std::uint32_t> q; // sorted ratios (a_i-a_j)/(b_i-b_j), b_i != b_j
    bool has_infinite_direction = false; // some pair shares b with distinct a
};

// All pairwise ratios; throws TooFewPoints below two points.
RatioSetResult ratio_set(const PointSet& S);

// {alpha*a + b} over the points, sorted and deduplicated. alpha = 0 is the
// projection onto b-coordinates (the Cartesian specialization).
std::vector<std::uint32_t> weighted_sumset(const PointSet& S, std::uint32_t alpha);

// A line containing all of S. Non-vertical lines are b = m*a + c; vertical
// ones are a = a0. A singleton reports the horizontal line through it.
struct Line {
    bool vertical = false;
    std::uint32_t m = 0;  // slope, non-vertical only
    std::uint32_t c = 0;  // intercept, non-vertical only
    std::uint32_t a0 = 0; // common a-coordinate, vertical only
};

std::optional<Line> is_collinear(const PointSet& S);

struct DirectionBoundReport {
    std::uint32_t p = 0;
    std::uint32_t alpha = 0;
    std::vector<std::uint32_t> q;
    bool has_infinite_direction = false;
    std::vector<std::uint32_t> delta; // the weighted sumset at alpha
    std::int64_t claimed = 0;         // |S| - |delta| + 1
    std::uint64_t observed = 0;       // |q|
    bool passed = false;
};

// The |Q| >= |S| - |Delta_alpha| + 1 check for one alpha in F_p^*. Sets that
// fit a non-vertical line are outside the claim and throw CollinearInput
// (vertical sets are fine: no slope/intercept pair covers them). alpha = 0
// belongs to the Cartesian count, not to this bound; it is rejected.
DirectionBoundReport verify_direction_bound(const PointSet& S, std::uint32_t alpha);

struct HpCheckResult {
    bool member = false;       // A - A inside Z_d union {0}
    std::uint64_t product = 0; // |A| * (|A| - 1)
    std::uint32_t d = 0;
    bool bound_holds = false;  // product <= d; meaningful when member
};

// Membership test for the difference-set family plus the size inequality.
// A failing inequality on a member set falsifies the claimed bound; callers
// treat member && !bound_holds as a hard failure.
HpCheckResult hp_witness_check(PrimeModulus p, const std::vector<std::uint32_t>& A,
                               std::uint32_t d);

struct CorollarySearchResult {
    std::uint32_t p = 0;
    std::uint32_t d = 0;
    std::uint32_t max_size = 0;
    std::vector<std::uint32_t> witness; // one maximum set, contains 0
    bool bound_holds = false;           // max_size*(max_size-1) <= d
    std::uint64_t nodes = 0;            // search tree size
};

// Exact maximum |A| with A - A inside Z_d union {0}, via pruned clique
// search over the symmetric part of Z_d with 0 fixed in A by translation
// invariance. Requires p <= 101; aborts with SearchBudgetExceeded past the
// node budget.
CorollarySearchResult corollary_max_search(PrimeModulus p, std::uint32_t d);

// Uniform distinct points, re-drawn until no non-vertical line fits; n >= 3.
// Deterministic for a given generator state.
PointSet random_noncollinear_pointset(PrimeModulus p, std::uint32_t n, std::mt19937& rng);

} // namespace redei
