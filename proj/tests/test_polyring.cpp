#include <doctest.h>

#include <cstdint>
#include <cstdlib>
#include <random>
#include <vector>

#include "redei/bipoly.hpp"
#include "redei/unipoly.hpp"

using namespace redei;

namespace {

UniPoly random_poly(PrimeModulus p, std::uint32_t max_deg, std::mt19937& rng) {
    std::vector<std::int64_t> c(rng() % (max_deg + 1) + 1);
    for (auto& v : c) v = static_cast<std::int64_t>(rng() % p.value());
    return UniPoly(p, c);
}

BiPoly random_bipoly(PrimeModulus p, std::uint32_t max_xdeg, std::uint32_t max_ydeg,
                     std::mt19937& rng) {
    std::vector<UniPoly> cs;
    const std::size_t n = rng() % (max_xdeg + 1) + 1;
    for (std::size_t i = 0; i < n; ++i) cs.push_back(random_poly(p, max_ydeg, rng));
    return BiPoly::from_x_coeffs(p, std::move(cs));
}

} // namespace

TEST_CASE("UniPoly construction, evaluation, printing") {
    PrimeModulus p(7);
    UniPoly f(p, {3, 0, 1}); // x^2 + 3
    CHECK(f.degree() == 2);
    CHECK(f.coeff(0) == 3);
    CHECK(f.coeff(1) == 0);
    CHECK(f.coeff(2) == 1);
    CHECK(f.coeff(99) == 0);
    CHECK(f.eval(0) == 3);
    CHECK(f.eval(2) == 0);
    CHECK(f.eval(5) == 0); // (x-2)(x-5) = x^2 - 7x + 10 = x^2 + 3 mod 7
    CHECK(f == UniPoly::from_roots(p, {2, 5}));
    CHECK(f.is_monic());
    CHECK(UniPoly::zero(p).degree() == -1);
    CHECK(UniPoly::zero(p).is_zero());
    CHECK(UniPoly::constant(p, -1) == UniPoly(p, {6}));
    CHECK(UniPoly::x(p).eval(4) == 4);
    CHECK(UniPoly::monomial(p, 2, 3) == UniPoly(p, {0, 0, 0, 2}));
    CHECK(UniPoly(p, {0, 0, 0}).is_zero()); // trailing zeros trimmed
}

TEST_CASE("UniPoly ring identities on random samples") {
    PrimeModulus p(13);
    std::mt19937 rng(42);
    for (int it = 0; it < 200; ++it) {
        UniPoly a = random_poly(p, 6, rng);
        UniPoly b = random_poly(p, 6, rng);
        UniPoly c = random_poly(p, 6, rng);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == UniPoly::zero(p));
        CHECK(a + (-a) == UniPoly::zero(p));
        // evaluation is a ring homomorphism
        const std::uint32_t t = rng() % 13;
        CHECK((a * b).eval(t) == mod_mul(a.eval(t), b.eval(t), 13));
        CHECK((a + b).eval(t) == mod_add(a.eval(t), b.eval(t), 13));
    }
}

TEST_CASE("uni_divrem satisfies the division identity") {
    PrimeModulus p(11);
    std::mt19937 rng(7);
    for (int it = 0; it < 300; ++it) {
        UniPoly n = random_poly(p, 9, rng);
        UniPoly d = random_poly(p, 4, rng);
        if (d.is_zero()) continue;
        auto [q, r] = uni_divrem(n, d);
        CHECK(q * d + r == n);
        CHECK(r.degree() < d.degree());
    }
    CHECK_THROWS_AS(uni_divrem(UniPoly::x(p), UniPoly::zero(p)), DivisionByZeroPoly);

    // non-monic divisors are handled by leading-coefficient inversion
    UniPoly n(p, {1, 0, 0, 1});              // x^3 + 1
    UniPoly d(p, {2, 3});                    // 3x + 2
    auto [q, r] = uni_divrem(n, d);
    CHECK(q * d + r == n);
    CHECK(r.degree() < 1);
}

TEST_CASE("x_pow_minus_x and scaled/shifted helpers") {
    PrimeModulus p(5);
    UniPoly f = UniPoly::x_pow_minus_x(p);
    CHECK(f.degree() == 5);
    for (std::uint32_t a = 0; a < 5; ++a) CHECK(f.eval(a) == 0);
    CHECK(f == UniPoly::from_roots(p, {0, 1, 2, 3, 4}));

    UniPoly g(p, {1, 1});
    CHECK(g.scaled(3) == UniPoly(p, {3, 3}));
    CHECK(g.shifted(2) == UniPoly(p, {0, 0, 1, 1}));
}

TEST_CASE("derivative and root multiplicity") {
    PrimeModulus p(7);
    // f = (x-1)^3 * x^2
    UniPoly f = UniPoly::from_roots(p, {1, 1, 1, 0, 0});
    CHECK(root_multiplicity(f, 1) == 3);
    CHECK(root_multiplicity(f, 0) == 2);
    CHECK(root_multiplicity(f, 2) == 0);
    CHECK_THROWS_AS(root_multiplicity(UniPoly::zero(p), 1), ZeroPolynomial);

    CHECK(derivative(UniPoly(p, {4, 3, 2, 1})) == UniPoly(p, {3, 4, 3}));
    CHECK(derivative(UniPoly::constant(p, 5)).is_zero());
    // d/dx x^7 = 7x^6 = 0 mod 7
    CHECK(derivative(UniPoly::monomial(p, 1, 7)).is_zero());
}

TEST_CASE("divides_xp_minus_x agrees with dense division for every monic quadratic over F_5") {
    PrimeModulus p(5);
    const UniPoly xp = UniPoly::x_pow_minus_x(p);
    for (std::int64_t b = 0; b < 5; ++b) {
        for (std::int64_t c = 0; c < 5; ++c) {
            UniPoly f(p, {c, b, 1});
            auto [q, r] = uni_divrem(xp, f);
            CHECK(divides_xp_minus_x(f) == r.is_zero());
        }
        UniPoly lin(p, {b, 1});
        CHECK(divides_xp_minus_x(lin)); // every x - c divides
    }
    CHECK_FALSE(divides_xp_minus_x(UniPoly(p, {0, 0, 1}))); // x^2 has a square factor
    CHECK(divides_xp_minus_x(UniPoly::x_pow_minus_x(p)));
    CHECK_THROWS_AS(divides_xp_minus_x(UniPoly::zero(p)), DivisionByZeroPoly);

    PrimeModulus big(101);
    CHECK(divides_xp_minus_x(UniPoly::from_roots(big, {0, 1, 2, 3, 4, 5, 6})));
}

TEST_CASE("BiPoly construction and slice evaluation") {
    PrimeModulus p(7);
    BiPoly l = BiPoly::linear_factor(p, 3, 2); // x + 3y - 2
    CHECK(l.x_degree() == 1);
    CHECK(l.is_monic_in_x());
    CHECK(l.x_coeff(1) == UniPoly::constant(p, 1));
    CHECK(l.x_coeff(0) == UniPoly(p, {-2, 3}));
    CHECK(l.x_coeff(5).is_zero());

    // eval at y=b turns x + 3y - 2 into x + (3b - 2)
    for (std::uint32_t b = 0; b < 7; ++b)
        CHECK(bi_eval_y(l, b) == UniPoly(p, {3 * static_cast<std::int64_t>(b) - 2, 1}));

    CHECK(BiPoly::lift(UniPoly(p, {1, 2, 3})).x_degree() == 2);
    CHECK(bi_eval_y(BiPoly::lift(UniPoly(p, {1, 2, 3})), 5) == UniPoly(p, {1, 2, 3}));

    BiPoly xp = BiPoly::x_pow_minus_x(p);
    CHECK(xp.x_degree() == 7);
    CHECK(bi_eval_y(xp, 3) == UniPoly::x_pow_minus_x(p));
}

TEST_CASE("BiPoly arithmetic commutes with y-evaluation") {
    PrimeModulus p(11);
    std::mt19937 rng(99);
    for (int it = 0; it < 150; ++it) {
        BiPoly f = random_bipoly(p, 4, 3, rng);
        BiPoly g = random_bipoly(p, 4, 3, rng);
        const std::uint32_t b = rng() % 11;
        CHECK(bi_eval_y(f + g, b) == bi_eval_y(f, b) + bi_eval_y(g, b));
        CHECK(bi_eval_y(f - g, b) == bi_eval_y(f, b) - bi_eval_y(g, b));
        CHECK(bi_eval_y(f * g, b) == bi_eval_y(f, b) * bi_eval_y(g, b));
        CHECK(f * g == g * f);
    }
}

TEST_CASE("bi_divrem_x division identity and guards") {
    PrimeModulus p(11);
    std::mt19937 rng(5);
    for (int it = 0; it < 100; ++it) {
        BiPoly n = random_bipoly(p, 6, 2, rng);
        // build a monic-in-x divisor from linear factors
        BiPoly d = BiPoly::linear_factor(p, rng() % 11, rng() % 11) *
                   BiPoly::linear_factor(p, rng() % 11, rng() % 11);
        auto [q, r] = bi_divrem_x(n, d);
        CHECK(q * d + r == n);
        CHECK(r.x_degree() < d.x_degree());
    }

    BiPoly nonmonic = BiPoly::lift(UniPoly(p, {1, 2})) * BiPoly::linear_factor(p, 1, 0);
    CHECK_THROWS_AS(bi_divrem_x(BiPoly::x_pow_minus_x(p), nonmonic), NonMonicDivisor);
}

TEST_CASE("bi_coeff_x extracts the coefficient of x^(p-i)") {
    PrimeModulus p(5);
    // F = x^5 + y*x^3 + (y^2+1)*x + 2
    std::vector<UniPoly> cs;
    cs.push_back(UniPoly::constant(p, 2));
    cs.push_back(UniPoly(p, {1, 0, 1}));
    cs.push_back(UniPoly::zero(p));
    cs.push_back(UniPoly(p, {0, 1}));
    cs.push_back(UniPoly::zero(p));
    cs.push_back(UniPoly::constant(p, 1));
    BiPoly F = BiPoly::from_x_coeffs(p, cs);
    CHECK(bi_coeff_x(F, 0) == UniPoly::constant(p, 1));
    CHECK(bi_coeff_x(F, 2) == UniPoly(p, {0, 1}));
    CHECK(bi_coeff_x(F, 4) == UniPoly(p, {1, 0, 1}));
    CHECK(bi_coeff_x(F, 5) == UniPoly::constant(p, 2));
    CHECK_THROWS_AS(bi_coeff_x(F, 6), IndexOutOfRange);
}

TEST_CASE("bivariate size guard honors the environment override") {
    CHECK(bivariate_guard_max_p() == 1000);
    setenv("REDEI_FORGE_MAX_P", "2000", 1);
    CHECK(bivariate_guard_max_p() == 2000);
    unsetenv("REDEI_FORGE_MAX_P");
    CHECK(bivariate_guard_max_p() == 1000);
}
