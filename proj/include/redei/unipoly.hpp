#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "redei/field.hpp"

namespace redei {

// Dense univariate polynomial over F_p. Coefficients are canonical values
// stored ascending by degree with no trailing zeros; the zero polynomial is
// the empty vector and has degree -1.
class UniPoly {
  public:
    explicit UniPoly(PrimeModulus p) : p_(p) {}
    UniPoly(PrimeModulus p, std::vector<std::int64_t> coeffs);

    static UniPoly zero(PrimeModulus p) { return UniPoly(p); }
    static UniPoly constant(PrimeModulus p, std::int64_t c);
    static UniPoly x(PrimeModulus p);
    // c * x^e
    static UniPoly monomial(PrimeModulus p, std::int64_t c, std::size_t e);
    // Product of (x - r) over the given roots.
    static UniPoly from_roots(PrimeModulus p, const std::vector<std::int64_t>& roots);
    // x^n - x, the product of (x - c) over all c in F_p when n = p.
    static UniPoly x_pow_minus_x(PrimeModulus p);

    PrimeModulus modulus() const { return p_; }
    std::int64_t degree() const { return static_cast<std::int64_t>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    // Coefficient of x^i, zero beyond the degree.
    std::uint32_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    std::uint32_t leading() const { return c_.empty() ? 0 : c_.back(); }
    const std::vector<std::uint32_t>& coeffs() const { return c_; }

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator-() const;
    bool operator==(const UniPoly& o) const { return p_ == o.p_ && c_ == o.c_; }
    bool operator!=(const UniPoly& o) const { return !(*this == o); }

    UniPoly scaled(std::uint32_t c) const;
    // this * x^e
    UniPoly shifted(std::size_t e) const;

    std::uint32_t eval(std::uint32_t at) const;

    std::string to_string(const std::string& var = "x") const;

    // Sets coefficient of x^i; callers must re-trim via trim() when lowering
    // the leading term. Internal helper for the bivariate layer.
    void set_coeff(std::size_t i, std::uint32_t v);
    void trim();

  private:
    PrimeModulus p_;
    std::vector<std::uint32_t> c_;
};

// Quotient and remainder with deg r < deg d. Throws DivisionByZeroPoly when
// d = 0. The divisor may be non-monic; its leading coefficient is inverted.
std::pair<UniPoly, UniPoly> uni_divrem(const UniPoly& n, const UniPoly& d);

// Formal derivative in characteristic p.
UniPoly derivative(const UniPoly& f);

// Largest m with (x - r)^m | f. Throws ZeroPolynomial on f = 0.
std::uint32_t root_multiplicity(const UniPoly& f, std::uint32_t r);

// Whether f divides x^p - x, decided via x^p mod f by repeated squaring,
// without materializing the dense dividend. Throws DivisionByZeroPoly on
// f = 0; constants divide everything.
bool divides_xp_minus_x(const UniPoly& f);

} // namespace redei
