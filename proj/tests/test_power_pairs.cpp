#include <doctest.h>

#include <cstdint>
#include <vector>

#include "redei/numbers.hpp"
#include "redei/power_pairs.hpp"

using namespace redei;

TEST_CASE("pair_bound_h frozen values and the clamp") {
    auto b13 = pair_bound_h(PrimeModulus(13), 2, 4);
    CHECK(b13.raw == 3);
    CHECK(b13.h_new == 3);
    CHECK(b13.h_classic == 4);

    auto b11 = pair_bound_h(PrimeModulus(11), 2, 3);
    CHECK(b11.raw == 3);
    CHECK(b11.h_new == 3);
    CHECK(b11.h_classic == 4);

    // g close to p drives the raw value to zero or below; h_new clamps at 1
    auto tight = pair_bound_h(PrimeModulus(13), 2, 12);
    CHECK(tight.raw == 0);
    CHECK(tight.h_new == 1);
    CHECK(tight.h_classic == 2);

    auto gp = pair_bound_h(PrimeModulus(13), 2, 13);
    CHECK(gp.raw < 1);
    CHECK(gp.h_new == 1);
    CHECK(gp.h_classic == 1);

    CHECK_THROWS_AS(pair_bound_h(PrimeModulus(13), 2, 1), BadG);
    CHECK_THROWS_AS(pair_bound_h(PrimeModulus(13), 2, 14), BadG);
}

TEST_CASE("PairParams validation") {
    PrimeModulus p(13);
    CHECK_THROWS_AS(PairParams(p, 3, 4, normalize(1, p)), ParamsOutOfRange); // odd k
    CHECK_THROWS_AS(PairParams(p, 0, 4, normalize(1, p)), ParamsOutOfRange);
    CHECK_THROWS_AS(PairParams(p, 8, 4, normalize(1, p)), ParamsOutOfRange); // 13 != 1 mod 8
    CHECK_THROWS_AS(PairParams(p, 2, 4, normalize(0, p)), ParamsOutOfRange);
    CHECK_THROWS_AS(PairParams(p, 2, 4, normalize(2, p)), ParamsOutOfRange); // non-residue
    CHECK_THROWS_AS(PairParams(p, 2, 1, normalize(4, p)), BadG);
    CHECK_THROWS_AS(PairParams(PrimeModulus(2), 2, 2, normalize(1, PrimeModulus(2))),
                    ParamsOutOfRange); // p must be odd
    PairParams ok(p, 2, 4, normalize(4, p));
    CHECK(ok.target.value() == 4);
}

TEST_CASE("find_congruent_pair frozen witnesses at p=13") {
    PrimeModulus p(13);
    auto w4 = find_congruent_pair(PairParams(p, 2, 4, normalize(4, p)), 3);
    CHECK(w4.s == 1);
    CHECK(w4.y == 2);
    CHECK(w4.congruence_check);

    auto w3 = find_congruent_pair(PairParams(p, 2, 4, normalize(3, p)), 3);
    CHECK(w3.s == 3);
    CHECK(w3.y == 1); // 9*3 = 27 = 1 = 1^2

    auto w1 = find_congruent_pair(PairParams(p, 2, 4, normalize(1, p)), 3);
    CHECK(w1.s == 1);
    CHECK(w1.y == 1);
}

TEST_CASE("the clamped bound misses a pair that the classic bound finds at p=5 g=2") {
    PrimeModulus p(5);
    PairParams prm(p, 2, 2, normalize(4, p));
    // s = 1 is the only choice; 4 is not in {y^2 : y <= 1} = {1}
    CHECK_THROWS_AS(find_congruent_pair(prm, 1), NoPairFound);
    CHECK(pair_bound_h(p, 2, 2).h_new == 1);
    // widening to h = 2 (or the classic ceil(p/g) = 3) finds (1, 2)
    auto w = find_congruent_pair(prm, 2);
    CHECK(w.s == 1);
    CHECK(w.y == 2);
    auto wc = find_congruent_pair(prm, pair_bound_h(p, 2, 2).h_classic);
    CHECK(wc.s == 1);
    CHECK(wc.y == 2);
}

TEST_CASE("find_pair_constructive matches the exhaustive route at p=13") {
    PrimeModulus p(13);
    PairParams prm(p, 2, 4, normalize(4, p));
    auto w = find_pair_constructive(prm);
    CHECK(w.s == 1);
    CHECK(w.y == 2); // root 2 of x^2 = 4 is expressible as 2*1 = 2
    CHECK(w.congruence_check);
}

TEST_CASE("exhaustive and constructive routes agree on success everywhere") {
    // s^k * t = y^k with s <= g-1, y <= h_new is solvable exactly when some
    // k-th root a = y/s of t satisfies a*x = +-y in the same rectangle, so
    // the two searches must succeed or fail together.
    for (std::uint32_t pv : {5u, 13u, 17u, 29u}) {
        PrimeModulus p(pv);
        for (std::uint32_t k : {2u, 4u}) {
            if ((pv - 1) % k != 0) continue;
            for (std::uint32_t g : {2u, 3u, 5u, pv - 1, pv}) {
                if (g < 2 || g > pv) continue;
                const auto bounds = pair_bound_h(p, k, g);
                for (std::uint32_t t : kth_power_residues(p, k)) {
                    PairParams prm(p, k, g, normalize(t, p));
                    bool exhaustive_ok = true, constructive_ok = true;
                    PairWitness we{}, wc{};
                    try {
                        we = find_congruent_pair(prm, bounds.h_new);
                    } catch (const NoPairFound&) {
                        exhaustive_ok = false;
                    }
                    try {
                        wc = find_pair_constructive(prm);
                    } catch (const ConstructionFailed&) {
                        constructive_ok = false;
                    }
                    CHECK(exhaustive_ok == constructive_ok);
                    if (exhaustive_ok) {
                        CHECK(we.congruence_check);
                        CHECK(wc.congruence_check);
                        CHECK(mod_mul(mod_pow(we.s, k, pv), t, pv) == mod_pow(we.y, k, pv));
                        CHECK(mod_mul(mod_pow(wc.s, k, pv), t, pv) == mod_pow(wc.y, k, pv));
                        CHECK(we.s >= 1);
                        CHECK(we.s <= g - 1);
                        CHECK(we.y >= 1);
                        CHECK(we.y <= bounds.h_new);
                    }
                }
            }
        }
    }
}

TEST_CASE("compare_bounds frozen rows") {
    auto c13 = compare_bounds(PrimeModulus(13), 2, 4);
    CHECK(c13.bounds.raw == 3);
    CHECK(c13.claim_b_applicable); // 4*6 = 24 >= 13
    CHECK(c13.claim_b_holds);      // 3 <= 4 - 1
    CHECK(c13.claim_a_applicable); // g = 4 >= raw 3
    CHECK(c13.claim_a_holds);

    auto c11 = compare_bounds(PrimeModulus(11), 2, 3);
    CHECK(c11.claim_b_applicable); // 3*5 = 15 >= 11
    CHECK(c11.claim_b_holds);      // 3 <= 4 - 1

    // g*(k+g) < p and g < raw h leaves both claims vacuous
    auto c23 = compare_bounds(PrimeModulus(23), 2, 3);
    CHECK(c23.bounds.raw == 9);
    CHECK_FALSE(c23.claim_a_applicable);
    CHECK_FALSE(c23.claim_b_applicable);
    CHECK(c23.claim_a_holds);
    CHECK(c23.claim_b_holds);
}

TEST_CASE("compare_bounds across a dense grid: sentence A always, B as reported") {
    // Sentence A (g >= raw implies raw <= ceil(p/g)) never fails on this grid.
    // Sentence B (g(k+g) >= p implies raw <= ceil(p/g) - 1) genuinely does; the
    // checker must report exactly what an independent recomputation says, and
    // every violation must sit at the ceiling-equality point raw == h_classic.
    std::size_t b_violations = 0;
    for (std::uint32_t pv : primes_in_range(5, 200)) {
        PrimeModulus p(pv);
        for (std::uint32_t k : {2u, 4u, 6u}) {
            if ((pv - 1) % k != 0) continue;
            for (std::uint32_t g = 2; g <= pv; ++g) {
                auto c = compare_bounds(p, k, g);
                CHECK(c.claim_a_applicable ==
                      (c.bounds.raw <= static_cast<std::int64_t>(g)));
                CHECK(c.claim_a_holds);
                if (c.claim_a_applicable)
                    CHECK(c.bounds.raw <= static_cast<std::int64_t>(c.bounds.h_classic));

                const bool b_applies =
                    static_cast<std::uint64_t>(g) * (k + g) >= pv;
                const bool b_should_hold =
                    !b_applies ||
                    c.bounds.raw <= static_cast<std::int64_t>(c.bounds.h_classic) - 1;
                CHECK(c.claim_b_applicable == b_applies);
                CHECK(c.claim_b_holds == b_should_hold);
                if (!c.claim_b_holds) {
                    ++b_violations;
                    CHECK(c.bounds.raw == static_cast<std::int64_t>(c.bounds.h_classic));
                }
            }
        }
    }
    CHECK(b_violations > 0);
}

TEST_CASE("compare_bounds frozen counterexample to sentence B at (19, 2, 4)") {
    auto c = compare_bounds(PrimeModulus(19), 2, 4);
    CHECK(c.bounds.raw == 5);
    CHECK(c.bounds.h_classic == 5);
    CHECK(c.claim_b_applicable);
    CHECK_FALSE(c.claim_b_holds);
    CHECK(c.claim_a_holds);
}

TEST_CASE("sum_two_squares frozen values and exactness up to 500") {
    CHECK(sum_two_squares(PrimeModulus(5)) == std::pair<std::uint32_t, std::uint32_t>{1, 2});
    CHECK(sum_two_squares(PrimeModulus(13)) == std::pair<std::uint32_t, std::uint32_t>{2, 3});
    CHECK(sum_two_squares(PrimeModulus(29)) == std::pair<std::uint32_t, std::uint32_t>{2, 5});
    CHECK_THROWS_AS(sum_two_squares(PrimeModulus(7)), BadResidueClass);
    CHECK_THROWS_AS(sum_two_squares(PrimeModulus(2)), BadResidueClass);

    for (std::uint32_t pv : primes_in_range(5, 500)) {
        if (pv % 4 != 1) continue;
        auto [x, y] = sum_two_squares(PrimeModulus(pv));
        CHECK(x * x + y * y == pv);
        CHECK(x <= y);
        CHECK(x >= 1);
    }
}
