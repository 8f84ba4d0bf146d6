#include "redei/bipoly.hpp"

#include <cstdlib>
#include <string>

namespace redei {

BiPoly BiPoly::from_x_coeffs(PrimeModulus p, std::vector<UniPoly> coeffs) {
    BiPoly f(p);
    for (const UniPoly& c : coeffs) {
        if (c.modulus() != p) throw ParamsOutOfRange("coefficient modulus mismatch");
    }
    f.c_ = std::move(coeffs);
    f.trim();
    return f;
}

BiPoly BiPoly::linear_factor(PrimeModulus p, std::uint32_t a, std::uint32_t b) {
    // x + a*y - b
    BiPoly f(p);
    f.c_.push_back(UniPoly(p, {-static_cast<std::int64_t>(b % p.value()),
                               static_cast<std::int64_t>(a % p.value())}));
    f.c_.push_back(UniPoly::constant(p, 1));
    return f;
}

BiPoly BiPoly::x_pow_minus_x(PrimeModulus p) {
    BiPoly f(p);
    f.c_.assign(p.value() + 1, UniPoly::zero(p));
    f.c_[1] = UniPoly::constant(p, -1);
    f.c_[p.value()] = UniPoly::constant(p, 1);
    return f;
}

BiPoly BiPoly::lift(const UniPoly& f_in_x) {
    BiPoly f(f_in_x.modulus());
    if (f_in_x.is_zero()) return f;
    for (std::size_t i = 0; i <= static_cast<std::size_t>(f_in_x.degree()); ++i) {
        f.c_.push_back(UniPoly::constant(f_in_x.modulus(), f_in_x.coeff(i)));
    }
    f.trim();
    return f;
}

void BiPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

bool BiPoly::is_monic_in_x() const {
    return !c_.empty() && c_.back() == UniPoly::constant(p_, 1);
}

UniPoly BiPoly::x_coeff(std::size_t i) const {
    if (i < c_.size()) return c_[i];
    return UniPoly::zero(p_);
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
    BiPoly out(p_);
    const std::size_t n = std::max(c_.size(), o.c_.size());
    out.c_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (i < c_.size() && i < o.c_.size()) {
            out.c_.push_back(c_[i] + o.c_[i]);
        } else if (i < c_.size()) {
            out.c_.push_back(c_[i]);
        } else {
            out.c_.push_back(o.c_[i]);
        }
    }
    out.trim();
    return out;
}

BiPoly BiPoly::operator-(const BiPoly& o) const {
    BiPoly out(p_);
    const std::size_t n = std::max(c_.size(), o.c_.size());
    out.c_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (i < c_.size() && i < o.c_.size()) {
            out.c_.push_back(c_[i] - o.c_[i]);
        } else if (i < c_.size()) {
            out.c_.push_back(c_[i]);
        } else {
            out.c_.push_back(-o.c_[i]);
        }
    }
    out.trim();
    return out;
}

BiPoly BiPoly::operator*(const BiPoly& o) const {
    BiPoly out(p_);
    if (is_zero() || o.is_zero()) return out;
    out.c_.assign(c_.size() + o.c_.size() - 1, UniPoly::zero(p_));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j].is_zero()) continue;
            out.c_[i + j] = out.c_[i + j] + c_[i] * o.c_[j];
        }
    }
    out.trim();
    return out;
}

bool BiPoly::operator==(const BiPoly& o) const {
    if (p_ != o.p_ || c_.size() != o.c_.size()) return false;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] != o.c_[i]) return false;
    }
    return true;
}

std::string BiPoly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + c_[i].to_string("y") + ")";
        if (i > 0) {
            out += "*x";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

UniPoly bi_eval_y(const BiPoly& f, std::uint32_t b) {
    UniPoly out(f.modulus());
    if (f.is_zero()) return out;
    const std::uint32_t bv = b % f.modulus().value();
    for (std::size_t i = 0; i <= static_cast<std::size_t>(f.x_degree()); ++i) {
        out.set_coeff(i, f.x_coeff(i).eval(bv));
    }
    out.trim();
    return out;
}

std::uint32_t bivariate_guard_max_p() {
    if (const char* env = std::getenv("REDEI_FORGE_MAX_P")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && v > 0) return static_cast<std::uint32_t>(v);
    }
    return 1000;
}

std::pair<BiPoly, BiPoly> bi_divrem_x(const BiPoly& n, const BiPoly& d) {
    const PrimeModulus p = n.modulus();
    if (d.is_zero()) throw DivisionByZeroPoly("bivariate division by zero");
    if (!d.is_monic_in_x()) {
        throw NonMonicDivisor("bivariate division requires a divisor monic in x");
    }
    if (n.x_degree() >= static_cast<std::int64_t>(p.value()) &&
        p.value() > bivariate_guard_max_p()) {
        throw ModulusTooLargeForBivariate(
            "bivariate division at x-degree " + std::to_string(n.x_degree()) +
            " over p = " + std::to_string(p.value()) +
            " exceeds the memory guard (set REDEI_FORGE_MAX_P to override)");
    }

    const std::int64_t dd = d.x_degree();
    if (n.x_degree() < dd) return {BiPoly::zero(p), n};

    std::vector<UniPoly> rem;
    rem.reserve(static_cast<std::size_t>(n.x_degree()) + 1);
    for (std::size_t i = 0; i <= static_cast<std::size_t>(n.x_degree()); ++i) {
        rem.push_back(n.x_coeff(i));
    }
    std::vector<UniPoly> quot(rem.size() - static_cast<std::size_t>(dd), UniPoly::zero(p));

    for (std::size_t i = rem.size(); i-- > static_cast<std::size_t>(dd);) {
        if (rem[i].is_zero()) continue;
        const UniPoly q = rem[i];
        quot[i - static_cast<std::size_t>(dd)] = q;
        // j = dd zeroes the current leading term because the divisor is monic.
        for (std::size_t j = 0; j <= static_cast<std::size_t>(dd); ++j) {
            const UniPoly dj = d.x_coeff(j);
            if (dj.is_zero()) continue;
            rem[i - static_cast<std::size_t>(dd) + j] =
                rem[i - static_cast<std::size_t>(dd) + j] - q * dj;
        }
    }

    rem.erase(rem.begin() + dd, rem.end());
    return {BiPoly::from_x_coeffs(p, std::move(quot)), BiPoly::from_x_coeffs(p, std::move(rem))};
}

UniPoly bi_coeff_x(const BiPoly& f, std::uint32_t i) {
    const std::uint32_t p = f.modulus().value();
    if (i > p || f.x_degree() < static_cast<std::int64_t>(p - i)) {
        throw IndexOutOfRange("profile index " + std::to_string(i) +
                              " is outside a degree-" + std::to_string(f.x_degree()) +
                              " polynomial over p = " + std::to_string(p));
    }
    return f.x_coeff(p - i);
}

} // namespace redei
