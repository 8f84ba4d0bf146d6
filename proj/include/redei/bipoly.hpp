#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "redei/unipoly.hpp"

namespace redei {

// Bivariate polynomial over F_p stored x-major: coefficient i is a
// polynomial in y multiplying x^i. The leading x-coefficient is nonzero;
// the zero polynomial has no coefficients.
class BiPoly {
  public:
    explicit BiPoly(PrimeModulus p) : p_(p) {}

    static BiPoly zero(PrimeModulus p) { return BiPoly(p); }
    static BiPoly from_x_coeffs(PrimeModulus p, std::vector<UniPoly> coeffs);
    // A linear factor x + a*y - b.
    static BiPoly linear_factor(PrimeModulus p, std::uint32_t a, std::uint32_t b);
    // x^n - x as a bivariate in x.
    static BiPoly x_pow_minus_x(PrimeModulus p);
    static BiPoly lift(const UniPoly& f_in_x);

    PrimeModulus modulus() const { return p_; }
    std::int64_t x_degree() const { return static_cast<std::int64_t>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic_in_x() const;

    // Coefficient of x^i as a polynomial in y; zero beyond the x-degree.
    UniPoly x_coeff(std::size_t i) const;

    BiPoly operator+(const BiPoly& o) const;
    BiPoly operator-(const BiPoly& o) const;
    BiPoly operator*(const BiPoly& o) const;
    bool operator==(const BiPoly& o) const;
    bool operator!=(const BiPoly& o) const { return !(*this == o); }

    std::string to_string() const;

    void trim();

  private:
    PrimeModulus p_;
    std::vector<UniPoly> c_;
};

// Substitutes y = b, producing a univariate polynomial in x.
UniPoly bi_eval_y(const BiPoly& f, std::uint32_t b);

// Long division in (F_p[y])[x] by a divisor monic in x: n = q*d + r with
// x-degree(r) < x-degree(d). Throws NonMonicDivisor otherwise. Dividends of
// x-degree >= p are subject to a memory guard: permitted only for
// p <= 1000 (about p^2 coefficients) unless REDEI_FORGE_MAX_P raises it.
std::pair<BiPoly, BiPoly> bi_divrem_x(const BiPoly& n, const BiPoly& d);

// Coefficient h_i(y) of x^(p-i), the profile convention for monic degree-p
// polynomials. Throws IndexOutOfRange when x^(p-i) is outside the dividend.
UniPoly bi_coeff_x(const BiPoly& f, std::uint32_t i);

// Current guard ceiling: REDEI_FORGE_MAX_P when set, otherwise 1000.
std::uint32_t bivariate_guard_max_p();

} // namespace redei
