#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "redei/congruence.hpp"
#include "redei/numbers.hpp"

using namespace redei;

namespace {

// Direct double-loop re-check of one witness: verifies the congruence and
// that no lexicographically smaller (x, y) works for the same a.
void check_witness_minimal(const SegmentParams& prm, const SegmentWitness& w) {
    const std::uint32_t p = prm.p.value();
    const std::uint64_t lhs = (static_cast<std::uint64_t>(w.a) * w.x) % p;
    const std::uint64_t rhs = w.negative ? (p - w.y % p) % p : w.y % p;
    CHECK(lhs == rhs);
    for (std::uint64_t i = 1; i <= prm.alpha; ++i) {
        const std::uint64_t x = i * prm.mu;
        for (std::uint64_t j = 1; j <= prm.beta; ++j) {
            const std::uint64_t y = j * prm.nu;
            const bool before = x < w.x || (x == w.x && y < w.y);
            if (!before) continue;
            const std::uint64_t v = (static_cast<std::uint64_t>(w.a) * x) % p;
            CHECK(v != y % p);
            if (prm.signed_pairs) CHECK(v != (p - y % p) % p);
        }
    }
}

} // namespace

TEST_CASE("expressible_set frozen example p=7 alpha=2 beta=1") {
    SegmentParams prm(PrimeModulus(7), 2, 1);
    auto rep = expressible_set(prm);
    CHECK(rep.expressible == std::vector<std::uint32_t>{1, 3, 4, 6});
    CHECK(rep.inexpressible == std::vector<std::uint32_t>{2, 5});
    CHECK(rep.bound == 4);
    CHECK(rep.bound_applies);
    CHECK(rep.passed);
    CHECK(rep.witnesses.size() == 4);
    for (const auto& w : rep.witnesses) check_witness_minimal(prm, w);
}

TEST_CASE("expressible_set scaled variant p=7 mu=2") {
    auto rep = expressible_set(SegmentParams(PrimeModulus(7), 2, 1, 2, 1));
    CHECK(rep.expressible == std::vector<std::uint32_t>{2, 3, 4, 5});
    CHECK(rep.bound == 4);
    CHECK(rep.passed);
}

TEST_CASE("expressible_set p=11 alpha=2 beta=2 gives the six residues +-{1,2,6}") {
    auto rep = expressible_set(SegmentParams(PrimeModulus(11), 2, 2));
    CHECK(rep.expressible == std::vector<std::uint32_t>{1, 2, 5, 6, 9, 10});
    CHECK(rep.expressible.size() == 6);
    CHECK(rep.bound == 6);
    CHECK(rep.passed);
}

TEST_CASE("expressible and inexpressible partition F_p^* and witnesses are minimal") {
    SegmentParams prm(PrimeModulus(11), 3, 2);
    auto rep = expressible_set(prm);
    std::vector<std::uint32_t> all;
    all.reserve(10);
    std::merge(rep.expressible.begin(), rep.expressible.end(), rep.inexpressible.begin(),
               rep.inexpressible.end(), std::back_inserter(all));
    std::vector<std::uint32_t> want(10);
    std::iota(want.begin(), want.end(), 1);
    CHECK(all == want);
    for (const auto& w : rep.witnesses) check_witness_minimal(prm, w);
}

TEST_CASE("expressibility is symmetric under a -> p-a for signed segments") {
    auto rep = expressible_set(SegmentParams(PrimeModulus(31), 3, 2));
    std::set<std::uint32_t> ex(rep.expressible.begin(), rep.expressible.end());
    for (auto a : rep.expressible) CHECK(ex.count(31 - a) == 1);
}

TEST_CASE("count bound does not apply when alpha*(beta+1) exceeds p-1") {
    auto rep = expressible_set(SegmentParams(PrimeModulus(5), 4, 4));
    CHECK(rep.bound == 20);
    CHECK_FALSE(rep.bound_applies);
    CHECK(rep.passed); // vacuous
    CHECK(rep.expressible.size() == 4);
}

TEST_CASE("segment parameter validation") {
    PrimeModulus p(7);
    CHECK_THROWS_AS(SegmentParams(p, 0, 1), ParamsOutOfRange);
    CHECK_THROWS_AS(SegmentParams(p, 1, 0), ParamsOutOfRange);
    CHECK_THROWS_AS(SegmentParams(p, 1, 1, 0, 1), ParamsOutOfRange);
    CHECK_THROWS_AS(SegmentParams(p, 1, 1, 7, 1), ParamsOutOfRange); // mu = 0 mod p
    CHECK_THROWS_AS(SegmentParams(p, 1, 1, 1, 14), ParamsOutOfRange);
}

TEST_CASE("thue_solve frozen values and minimality over full F_13^*") {
    PrimeModulus p7(7);
    CHECK(thue_solve(normalize(2, p7)) == std::pair<std::uint32_t, std::uint32_t>{1, 2});
    CHECK(thue_solve(normalize(1, p7)) == std::pair<std::uint32_t, std::uint32_t>{1, 1});
    CHECK(thue_solve(normalize(6, p7)) == std::pair<std::uint32_t, std::uint32_t>{1, 1});
    CHECK_THROWS_AS(thue_solve(normalize(0, p7)), ZeroInput);

    PrimeModulus p(13);
    const std::uint32_t m = ceil_sqrt(13); // 4
    for (std::uint32_t a = 1; a < 13; ++a) {
        auto [x, y] = thue_solve(normalize(a, p));
        CHECK(x >= 1);
        CHECK(x <= m);
        CHECK(y >= 1);
        CHECK(y <= m);
        const std::uint32_t v = mod_mul(a, x, 13);
        CHECK((v == y || v == 13 - y));
        for (std::uint32_t xx = 1; xx <= m; ++xx) {
            for (std::uint32_t yy = 1; yy <= m; ++yy) {
                if (xx > x || (xx == x && yy >= y)) continue;
                const std::uint32_t vv = mod_mul(a, xx, 13);
                CHECK(vv != yy);
                CHECK(vv != 13 - yy);
            }
        }
    }
}

TEST_CASE("vinogradov_solve respects the rectangle x<=alpha, y<=p/alpha") {
    PrimeModulus p7(7);
    CHECK(vinogradov_solve(normalize(3, p7), 2) ==
          std::pair<std::uint32_t, std::uint32_t>{1, 3});
    CHECK_THROWS_AS(vinogradov_solve(normalize(0, p7), 2), ZeroInput);
    CHECK_THROWS_AS(vinogradov_solve(normalize(3, p7), 0), ParamsOutOfRange);
    CHECK_THROWS_AS(vinogradov_solve(normalize(3, p7), 8), ParamsOutOfRange);

    PrimeModulus p(11);
    for (std::uint32_t alpha = 1; alpha <= 11; ++alpha) {
        const std::uint32_t ycap = 11 / alpha;
        for (std::uint32_t a = 1; a < 11; ++a) {
            auto [x, y] = vinogradov_solve(normalize(a, p), alpha);
            CHECK(x >= 1);
            CHECK(x <= alpha);
            CHECK(y >= 1);
            CHECK(y <= ycap);
            const std::uint32_t v = mod_mul(a, x, 11);
            CHECK((v == y || v == 11 - y));
        }
    }
    // alpha = 1 forces x = 1, so y is the smaller signed representative
    for (std::uint32_t a = 1; a < 11; ++a) {
        auto [x, y] = vinogradov_solve(normalize(a, p), 1);
        CHECK(x == 1);
        CHECK(y == std::min(a, 11 - a));
    }
}

TEST_CASE("cartesian_direction_count frozen example and bound tightness") {
    PrimeModulus p(5);
    auto rep = cartesian_direction_count(p, {0, 1}, {0, 1}, false);
    CHECK(rep.solvable == std::vector<std::uint32_t>{0, 1, 4});
    CHECK(rep.bound == 3); // min(5, (2-1)*2+1)
    CHECK(rep.includes_zero);
    CHECK(rep.passed);
    CHECK(rep.alpha == 2);
    CHECK(rep.beta == 2);

    // solvable + inexpressible partitions {0} u F_p^*
    CHECK(rep.solvable.size() + rep.inexpressible.size() == 5);
    for (auto a : rep.inexpressible)
        CHECK_FALSE(std::binary_search(rep.solvable.begin(), rep.solvable.end(), a));
}

TEST_CASE("strengthened cartesian variant widens the x range") {
    PrimeModulus p(5);
    auto rep = cartesian_direction_count(p, {1, 2}, {0, 1}, true);
    CHECK(rep.solvable.size() == 5);
    CHECK(rep.bound == 5); // min(5, 2*2+1)
    CHECK(rep.passed);
    CHECK_THROWS_AS(cartesian_direction_count(p, {0, 1}, {0, 1}, true), ZeroInA);
}

TEST_CASE("cartesian witnesses solve a*x = y with x from the correct variant set") {
    PrimeModulus p(13);
    const std::vector<std::uint32_t> A{1, 3, 9}, B{0, 2, 5};
    for (bool strengthened : {false, true}) {
        auto rep = cartesian_direction_count(p, A, B, strengthened);
        std::set<std::uint32_t> xs, ys;
        for (auto a : A)
            for (auto b : A) if (a != b) xs.insert(mod_sub(a, b, 13));
        if (strengthened)
            for (auto a : A) xs.insert(a);
        for (auto a : B)
            for (auto b : B) ys.insert(mod_sub(a, b, 13));
        for (const auto& w : rep.witnesses) {
            if (w.a == 0) continue; // trivial slot, any x works
            CHECK(xs.count(w.x) == 1);
            CHECK(ys.count(w.y) == 1);
            CHECK(mod_mul(w.a, w.x, 13) == w.y);
        }
        CHECK(rep.passed);
    }
}

TEST_CASE("cartesian count bound fails for singleton B: only a = 0 is solvable") {
    // With |B| = 1 every difference is zero, so a*x = 0 with x != 0 forces
    // a = 0 and the solvable count is exactly 1, below both claimed bounds.
    PrimeModulus p(7);
    auto plain = cartesian_direction_count(p, {1, 2}, {0}, false);
    CHECK(plain.solvable == std::vector<std::uint32_t>{0});
    CHECK(plain.bound == 2);
    CHECK_FALSE(plain.passed);

    auto strong = cartesian_direction_count(p, {1}, {3}, true);
    CHECK(strong.solvable == std::vector<std::uint32_t>{0});
    CHECK(strong.bound == 2);
    CHECK_FALSE(strong.passed);

    // two-element B restores the claims on the same A sets
    CHECK(cartesian_direction_count(p, {1, 2}, {0, 1}, false).passed);
    CHECK(cartesian_direction_count(p, {1}, {3, 4}, true).passed);
}

TEST_CASE("cartesian input validation") {
    PrimeModulus p(7);
    CHECK_THROWS_AS(cartesian_direction_count(p, {}, {1}, false), EmptySet);
    CHECK_THROWS_AS(cartesian_direction_count(p, {1}, {}, false), EmptySet);
    CHECK_THROWS_AS(cartesian_direction_count(p, {1, 1}, {0}, false), ParamsOutOfRange);
    // non-canonical entries are reduced mod p, not rejected
    auto wrapped = cartesian_direction_count(p, {9}, {0, 1}, false);
    auto reduced = cartesian_direction_count(p, {2}, {0, 1}, false);
    CHECK(wrapped.solvable == reduced.solvable);

    // singleton A: only a = 0 is guaranteed
    auto rep = cartesian_direction_count(p, {3}, {0, 1}, false);
    CHECK(rep.bound == 1);
    CHECK(rep.includes_zero);
    CHECK(rep.passed);
}

TEST_CASE("coprime_ratio_count frozen values and gcd oracle") {
    CHECK_THROWS_AS(coprime_ratio_count(PrimeModulus(11), 3), RangeTooLarge);

    auto c23 = coprime_ratio_count(PrimeModulus(23), 3);
    CHECK(c23.distinct_a_count == 14);
    CHECK(c23.coprime_pair_count == 7);
    CHECK(c23.phi_sum == 4); // phi(1)+phi(2)+phi(3)

    auto c11 = coprime_ratio_count(PrimeModulus(11), 2);
    CHECK(c11.distinct_a_count == 6);
    CHECK(c11.coprime_pair_count == 3);

    auto c101 = coprime_ratio_count(PrimeModulus(101), 1);
    CHECK(c101.distinct_a_count == 2); // {1, -1}
    CHECK(c101.coprime_pair_count == 1);

    PrimeModulus p(1009);
    for (std::uint32_t alpha = 1; alpha <= 7; ++alpha) {
        auto c = coprime_ratio_count(p, alpha);
        // independent gcd double loop
        std::uint64_t pairs = 0;
        for (std::uint32_t u = 1; u <= alpha; ++u)
            for (std::uint32_t v = 1; v <= alpha; ++v)
                if (std::gcd(u, v) == 1) ++pairs;
        CHECK(c.coprime_pair_count == pairs);
        // independent residue scan
        std::set<std::uint32_t> distinct;
        for (std::uint32_t u = 1; u <= alpha; ++u)
            for (std::uint32_t v = 1; v <= alpha; ++v) {
                const std::uint32_t r = mod_mul(u, mod_inv(v, 1009), 1009);
                distinct.insert(r);
                distinct.insert(1009 - r);
            }
        CHECK(c.distinct_a_count == distinct.size());
        // the two published identities
        CHECK(c.distinct_a_count == 2 * c.coprime_pair_count);
        CHECK(c.coprime_pair_count == 2 * c.phi_sum - 1);
    }
}
