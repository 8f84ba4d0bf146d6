#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "redei/bipoly.hpp"

namespace redei {

// How a lacunary product polynomial was assembled. Kept on the bundle so
// reports can echo the originating parameters.
struct Construction {
    enum class Kind { Segments, Cartesian, PointSet, Custom };
    Kind kind = Kind::Custom;
    std::uint32_t alpha = 0;           // Segments
    std::uint32_t beta = 0;            // Segments
    bool strengthened = false;         // Cartesian
    std::vector<std::uint32_t> a_set;  // Cartesian
    std::vector<std::uint32_t> b_set;  // Cartesian
    std::vector<std::pair<std::uint32_t, std::uint32_t>> points; // PointSet

    std::string describe() const;
};

// H(x,y) = prod over 0<=k<=alpha, 0<=j<=beta of (x + k*y - j), monic in x of
// x-degree (alpha+1)*(beta+1). Requires alpha*(beta+1) <= p-1 and an odd p.
BiPoly build_h_segments(PrimeModulus p, std::uint32_t alpha, std::uint32_t beta);

// H(x,y) = prod over a in A, b in B of (x + a*y - b); the strengthened
// variant (requires 0 not in A) multiplies in prod over b in B of (x - b),
// raising the x-degree from |A||B| to |A||B| + |B|.
BiPoly build_h_cartesian(PrimeModulus p, const std::vector<std::uint32_t>& A,
                         const std::vector<std::uint32_t>& B, bool strengthened);

// H(x,y) = prod over (a,b) in S of (x + a*y - b). Points must be distinct;
// 1 <= |S| < p.
BiPoly build_h_pointset(PrimeModulus p,
                        const std::vector<std::pair<std::uint32_t, std::uint32_t>>& points);

// The divided pair around H: x^p - x = f*H + r, F = f*H, plus the
// coefficient profile of F.
struct RedeiBundle {
    PrimeModulus p;
    BiPoly H;
    BiPoly f;  // quotient, monic in x of x-degree p - delta
    BiPoly r;  // remainder, x-degree < delta
    BiPoly F;  // f*H = x^p - x - r
    std::uint32_t delta = 0;         // x-degree of H
    std::vector<UniPoly> profile;    // h_1..h_p, h_i = coefficient of x^(p-i) in F
    Construction construction;
};

// Divides x^p - x by H and packages the result. Validates the caller's
// exceptional set: for every b in it, r(x,b) = 0 and H(x,b) has distinct
// roots (equivalently divides x^p - x); failures throw
// ExceptionalSetInvalid. Requires H monic in x with 1 <= x-degree <= p and
// p inside the bivariate memory guard.
RedeiBundle auxiliary_bundle(const BiPoly& H, const std::vector<std::uint32_t>& exceptional,
                             Construction construction = Construction{});

// Least index i in [1, p-1] with a nonzero coefficient of x^(p-i) in a monic
// degree-p slice. Slices of the shape x^p + c (the p-th powers (x+c)^p) have
// no such index: their derivative vanishes identically, and the call throws
// AllCoefficientsZero.
std::uint32_t smallest_nonzero_index(const UniPoly& slice);

struct StepanovReport {
    std::uint32_t p = 0;
    std::uint32_t y0 = 0;
    std::uint32_t smallest_index = 0;            // i with c_i != 0 in the slice
    std::int64_t d_bound = 0;                    // p - 1 - required*|roots|
    std::map<std::uint32_t, std::uint32_t> multiplicity_table; // root -> multiplicity in slice
    UniPoly slice;
    bool passed = false; // smallest_index <= d_bound
};

// Slices F at y0 and runs the derivative-multiplicity argument: each
// designated root must appear in the slice with multiplicity at least
// required_multiplicity + 1 (MultiplicityDeficit otherwise), which forces
// smallest_nonzero_index <= p - 1 - required_multiplicity * |roots|.
StepanovReport stepanov_check(const RedeiBundle& bundle, std::uint32_t y0,
                              const std::vector<std::uint32_t>& designated_roots,
                              std::uint32_t required_multiplicity);

} // namespace redei
