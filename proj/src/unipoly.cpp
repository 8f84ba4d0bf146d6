#include "redei/unipoly.hpp"

#include <algorithm>

namespace redei {

UniPoly::UniPoly(PrimeModulus p, std::vector<std::int64_t> coeffs) : p_(p) {
    c_.reserve(coeffs.size());
    for (std::int64_t v : coeffs) c_.push_back(p.reduce(v));
    trim();
}

UniPoly UniPoly::constant(PrimeModulus p, std::int64_t c) {
    return UniPoly(p, {c});
}

UniPoly UniPoly::x(PrimeModulus p) {
    return UniPoly(p, {0, 1});
}

UniPoly UniPoly::monomial(PrimeModulus p, std::int64_t c, std::size_t e) {
    UniPoly f(p);
    const std::uint32_t cv = p.reduce(c);
    if (cv != 0) {
        f.c_.assign(e + 1, 0);
        f.c_[e] = cv;
    }
    return f;
}

UniPoly UniPoly::from_roots(PrimeModulus p, const std::vector<std::int64_t>& roots) {
    UniPoly f = constant(p, 1);
    for (std::int64_t r : roots) {
        f = f * UniPoly(p, {-r, 1});
    }
    return f;
}

UniPoly UniPoly::x_pow_minus_x(PrimeModulus p) {
    UniPoly f(p);
    f.c_.assign(p.value() + 1, 0);
    f.c_[1] = p.value() - 1;
    f.c_[p.value()] = 1;
    return f;
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void UniPoly::set_coeff(std::size_t i, std::uint32_t v) {
    if (i >= c_.size()) {
        if (v == 0) return;
        c_.resize(i + 1, 0);
    }
    c_[i] = v;
    if (i + 1 == c_.size()) trim();
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    const std::uint32_t p = p_.value();
    UniPoly out(p_);
    out.c_.resize(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < out.c_.size(); ++i) {
        out.c_[i] = mod_add(coeff(i), o.coeff(i), p);
    }
    out.trim();
    return out;
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
    const std::uint32_t p = p_.value();
    UniPoly out(p_);
    out.c_.resize(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < out.c_.size(); ++i) {
        out.c_[i] = mod_sub(coeff(i), o.coeff(i), p);
    }
    out.trim();
    return out;
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly(p_);
    const std::uint32_t p = p_.value();
    UniPoly out(p_);
    out.c_.assign(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        // Reduced products stay below 2^31, so a u64 accumulator is safe for
        // any degree reachable at desk scale.
        for (std::size_t j = 0; j < o.c_.size(); ++j) {
            std::uint64_t acc = out.c_[i + j];
            acc += static_cast<std::uint64_t>(c_[i]) * o.c_[j] % p;
            out.c_[i + j] = static_cast<std::uint32_t>(acc % p);
        }
    }
    out.trim();
    return out;
}

UniPoly UniPoly::operator-() const {
    const std::uint32_t p = p_.value();
    UniPoly out(p_);
    out.c_.resize(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = mod_neg(c_[i], p);
    return out;
}

UniPoly UniPoly::scaled(std::uint32_t c) const {
    const std::uint32_t p = p_.value();
    UniPoly out(p_);
    if (c % p == 0) return out;
    out.c_.resize(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = mod_mul(c_[i], c, p);
    return out;
}

UniPoly UniPoly::shifted(std::size_t e) const {
    if (is_zero()) return UniPoly(p_);
    UniPoly out(p_);
    out.c_.assign(c_.size() + e, 0);
    std::copy(c_.begin(), c_.end(), out.c_.begin() + static_cast<std::ptrdiff_t>(e));
    return out;
}

std::uint32_t UniPoly::eval(std::uint32_t at) const {
    const std::uint32_t p = p_.value();
    std::uint64_t acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) {
        acc = (acc * at + c_[i]) % p;
    }
    return static_cast<std::uint32_t>(acc);
}

std::string UniPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        if (!out.empty()) out += " + ";
        if (i == 0 || c_[i] != 1) out += std::to_string(c_[i]);
        if (i > 0) {
            if (c_[i] != 1) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

std::pair<UniPoly, UniPoly> uni_divrem(const UniPoly& n, const UniPoly& d) {
    if (d.is_zero()) throw DivisionByZeroPoly("polynomial division by zero");
    const std::uint32_t p = n.modulus().value();
    if (n.degree() < d.degree()) return {UniPoly::zero(n.modulus()), n};

    const std::uint32_t lead_inv = mod_inv(d.leading(), p);
    std::vector<std::uint32_t> rem(n.coeffs());
    const std::size_t dd = static_cast<std::size_t>(d.degree());
    std::vector<std::uint32_t> quot(rem.size() - dd, 0);

    for (std::size_t i = rem.size(); i-- > dd;) {
        if (rem[i] == 0) continue;
        const std::uint32_t q = mod_mul(rem[i], lead_inv, p);
        quot[i - dd] = q;
        for (std::size_t j = 0; j <= dd; ++j) {
            rem[i - dd + j] = mod_sub(rem[i - dd + j], mod_mul(q, d.coeff(j), p), p);
        }
    }

    UniPoly qp(n.modulus());
    UniPoly rp(n.modulus());
    for (std::size_t i = 0; i < quot.size(); ++i) qp.set_coeff(i, quot[i]);
    for (std::size_t i = 0; i < dd; ++i) rp.set_coeff(i, rem[i]);
    qp.trim();
    rp.trim();
    return {qp, rp};
}

UniPoly derivative(const UniPoly& f) {
    const std::uint32_t p = f.modulus().value();
    UniPoly out(f.modulus());
    for (std::size_t i = 1; i <= static_cast<std::size_t>(std::max<std::int64_t>(f.degree(), 0)); ++i) {
        out.set_coeff(i - 1, mod_mul(f.coeff(i), static_cast<std::uint32_t>(i % p), p));
    }
    out.trim();
    return out;
}

std::uint32_t root_multiplicity(const UniPoly& f, std::uint32_t r) {
    if (f.is_zero()) throw ZeroPolynomial("root multiplicity of the zero polynomial");
    const std::uint32_t p = f.modulus().value();
    const std::uint32_t rv = r % p;
    // Repeated synthetic division by (x - r); each pass costs O(deg).
    std::vector<std::uint32_t> c(f.coeffs());
    std::uint32_t mult = 0;
    while (c.size() > 1 || (c.size() == 1 && c[0] == 0)) {
        // Evaluate while dividing: b_i = c_{i+1} + r*b_{i+1}.
        std::vector<std::uint32_t> q(c.size() - 1, 0);
        std::uint64_t carry = 0;
        for (std::size_t i = c.size(); i-- > 1;) {
            carry = (carry * rv + c[i]) % p;
            q[i - 1] = static_cast<std::uint32_t>(carry);
        }
        const std::uint32_t value = static_cast<std::uint32_t>((carry * rv + c[0]) % p);
        if (value != 0) break;
        ++mult;
        c = std::move(q);
        if (c.empty()) break;
    }
    return mult;
}

namespace {

// (a * b) mod f for a, b already reduced mod f; f non-constant.
std::vector<std::uint32_t> mulmod_poly(const std::vector<std::uint32_t>& a,
                                       const std::vector<std::uint32_t>& b,
                                       const UniPoly& f, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint32_t> prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            std::uint64_t acc = prod[i + j];
            acc += static_cast<std::uint64_t>(a[i]) * b[j] % p;
            prod[i + j] = static_cast<std::uint32_t>(acc % p);
        }
    }
    const std::size_t dd = static_cast<std::size_t>(f.degree());
    const std::uint32_t lead_inv = mod_inv(f.leading(), p);
    for (std::size_t i = prod.size(); i-- > dd;) {
        if (prod[i] == 0) continue;
        const std::uint32_t q = mod_mul(prod[i], lead_inv, p);
        for (std::size_t j = 0; j <= dd; ++j) {
            prod[i - dd + j] = mod_sub(prod[i - dd + j], mod_mul(q, f.coeff(j), p), p);
        }
    }
    prod.resize(dd);
    while (!prod.empty() && prod.back() == 0) prod.pop_back();
    return prod;
}

} // namespace

bool divides_xp_minus_x(const UniPoly& f) {
    if (f.is_zero()) throw DivisionByZeroPoly("divisibility by the zero polynomial");
    const std::uint32_t p = f.modulus().value();
    if (f.degree() == 0) return true;
    if (f.degree() > static_cast<std::int64_t>(p)) return false;

    // x^p mod f by square and multiply, then compare with x mod f.
    std::vector<std::uint32_t> result{1};
    std::vector<std::uint32_t> base{0, 1};
    if (f.degree() == 1) {
        // x reduces to a constant; fall back to a direct check: x^p - x has
        // every linear polynomial as a factor.
        return true;
    }
    std::uint64_t e = p;
    while (e > 0) {
        if (e & 1) result = mulmod_poly(result, base, f, p);
        base = mulmod_poly(base, base, f, p);
        e >>= 1;
    }
    // Subtract x.
    std::vector<std::uint32_t> xv{0, 1};
    std::vector<std::uint32_t> diff(std::max(result.size(), xv.size()), 0);
    for (std::size_t i = 0; i < diff.size(); ++i) {
        const std::uint32_t a = i < result.size() ? result[i] : 0;
        const std::uint32_t b = i < xv.size() ? xv[i] : 0;
        diff[i] = mod_sub(a, b, p);
    }
    for (std::uint32_t v : diff) {
        if (v != 0) return false;
    }
    return true;
}

} // namespace redei
