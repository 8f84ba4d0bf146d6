#include "redei/redei_engine.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "redei/errors.hpp"

namespace redei {

namespace {

void require_odd(PrimeModulus p, const char* where) {
    if (p.value() < 3) {
        throw ParamsOutOfRange(std::string(where) + ": modulus must be an odd prime");
    }
}

BiPoly product(PrimeModulus p, const std::vector<BiPoly>& factors) {
    BiPoly acc = BiPoly::lift(UniPoly::constant(p, 1));
    for (const auto& f : factors) acc = acc * f;
    return acc;
}

std::vector<std::uint32_t> checked_set(PrimeModulus p, std::vector<std::uint32_t> s,
                                       const char* label) {
    if (s.empty()) throw EmptySet(std::string(label) + " must be nonempty");
    std::sort(s.begin(), s.end());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] >= p.value()) {
            throw ParamsOutOfRange(std::string(label) + " element " + std::to_string(s[i]) +
                                   " is not a canonical residue mod " + std::to_string(p.value()));
        }
        if (i > 0 && s[i] == s[i - 1]) {
            throw ParamsOutOfRange(std::string(label) + " has duplicate element " +
                                   std::to_string(s[i]));
        }
    }
    return s;
}

} // namespace

std::string Construction::describe() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::Segments:
            os << "segments alpha=" << alpha << " beta=" << beta;
            break;
        case Kind::Cartesian:
            os << "cartesian |A|=" << a_set.size() << " |B|=" << b_set.size();
            if (strengthened) os << " strengthened";
            break;
        case Kind::PointSet:
            os << "pointset n=" << points.size();
            break;
        case Kind::Custom:
            os << "custom";
            break;
    }
    return os.str();
}

BiPoly build_h_segments(PrimeModulus p, std::uint32_t alpha, std::uint32_t beta) {
    require_odd(p, "build_h_segments");
    if (alpha < 1 || beta < 1) {
        throw ParamsOutOfRange("build_h_segments: alpha and beta must be at least 1");
    }
    if (static_cast<std::uint64_t>(alpha) * (beta + 1) > p.value() - 1) {
        throw ParamsOutOfRange("build_h_segments: requires alpha*(beta+1) <= p-1");
    }
    std::vector<BiPoly> factors;
    factors.reserve(static_cast<std::size_t>(alpha + 1) * (beta + 1));
    for (std::uint32_t k = 0; k <= alpha; ++k) {
        for (std::uint32_t j = 0; j <= beta; ++j) {
            factors.push_back(BiPoly::linear_factor(p, k, j));
        }
    }
    return product(p, factors);
}

BiPoly build_h_cartesian(PrimeModulus p, const std::vector<std::uint32_t>& A,
                         const std::vector<std::uint32_t>& B, bool strengthened) {
    require_odd(p, "build_h_cartesian");
    auto a = checked_set(p, A, "A");
    auto b = checked_set(p, B, "B");
    if (strengthened && a.front() == 0) {
        throw ZeroInA("build_h_cartesian: the strengthened product needs 0 outside A");
    }
    std::vector<BiPoly> factors;
    factors.reserve(a.size() * b.size() + (strengthened ? b.size() : 0));
    for (std::uint32_t av : a) {
        for (std::uint32_t bv : b) {
            factors.push_back(BiPoly::linear_factor(p, av, bv));
        }
    }
    if (strengthened) {
        for (std::uint32_t bv : b) factors.push_back(BiPoly::linear_factor(p, 0, bv));
    }
    return product(p, factors);
}

BiPoly build_h_pointset(PrimeModulus p,
                        const std::vector<std::pair<std::uint32_t, std::uint32_t>>& points) {
    require_odd(p, "build_h_pointset");
    if (points.empty()) throw EmptySet("build_h_pointset: point set must be nonempty");
    if (points.size() >= p.value()) {
        throw ParamsOutOfRange("build_h_pointset: needs fewer than p points");
    }
    std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
    std::vector<BiPoly> factors;
    factors.reserve(points.size());
    for (const auto& [a, b] : points) {
        if (a >= p.value() || b >= p.value()) {
            throw ParamsOutOfRange("build_h_pointset: coordinates must be canonical residues");
        }
        if (!seen.insert({a, b}).second) {
            throw DuplicatePoint("build_h_pointset: point (" + std::to_string(a) + "," +
                                 std::to_string(b) + ") repeats");
        }
        factors.push_back(BiPoly::linear_factor(p, a, b));
    }
    return product(p, factors);
}

RedeiBundle auxiliary_bundle(const BiPoly& H, const std::vector<std::uint32_t>& exceptional,
                             Construction construction) {
    PrimeModulus p = H.modulus();
    require_odd(p, "auxiliary_bundle");
    if (p.value() > bivariate_guard_max_p()) {
        throw ModulusTooLargeForBivariate(
            "auxiliary_bundle: p=" + std::to_string(p.value()) +
            " exceeds the dense-division guard (raise REDEI_FORGE_MAX_P to override)");
    }
    if (!H.is_monic_in_x()) throw NonMonicDivisor("auxiliary_bundle: H must be monic in x");
    const std::int64_t delta = H.x_degree();
    if (delta < 1 || delta > static_cast<std::int64_t>(p.value())) {
        throw ParamsOutOfRange("auxiliary_bundle: needs 1 <= deg_x H <= p, got " +
                               std::to_string(delta));
    }

    RedeiBundle out{p, H, BiPoly::zero(p), BiPoly::zero(p), BiPoly::zero(p),
                    static_cast<std::uint32_t>(delta), {}, std::move(construction)};
    auto [f, r] = bi_divrem_x(BiPoly::x_pow_minus_x(p), H);
    out.f = std::move(f);
    out.r = std::move(r);
    out.F = out.f * out.H;

    out.profile.reserve(p.value());
    for (std::uint32_t i = 1; i <= p.value(); ++i) {
        UniPoly h_i = bi_coeff_x(out.F, i);
        // Every factor of H has total degree 1, so F keeps total degree p and
        // the coefficient of x^(p-i) lives in degree <= i. A custom H of the
        // wrong shape breaks this and is rejected rather than reported on.
        if (h_i.degree() > static_cast<std::int64_t>(i)) {
            throw ParamsOutOfRange(
                "auxiliary_bundle: coefficient profile exceeds the triangular bound at index " +
                std::to_string(i) + "; H is not a product of factors x + a*y - b");
        }
        out.profile.push_back(std::move(h_i));
    }

    // Exceptional residues: r(x,b) must vanish identically and H(x,b) must
    // split into distinct linear factors.
    {
        std::vector<std::uint32_t> es = exceptional;
        std::sort(es.begin(), es.end());
        for (std::size_t i = 0; i < es.size(); ++i) {
            if (es[i] >= p.value()) {
                throw ParamsOutOfRange("auxiliary_bundle: exceptional residue " +
                                       std::to_string(es[i]) + " is not canonical mod " +
                                       std::to_string(p.value()));
            }
            if (i > 0 && es[i] == es[i - 1]) {
                throw ParamsOutOfRange("auxiliary_bundle: exceptional residue " +
                                       std::to_string(es[i]) + " repeats");
            }
        }
        for (std::uint32_t b : es) {
            if (!bi_eval_y(out.r, b).is_zero()) {
                throw ExceptionalSetInvalid("auxiliary_bundle: remainder does not vanish at y=" +
                                            std::to_string(b));
            }
            if (!divides_xp_minus_x(bi_eval_y(out.H, b))) {
                throw ExceptionalSetInvalid("auxiliary_bundle: H(x," + std::to_string(b) +
                                            ") does not divide x^p - x");
            }
        }
    }
    return out;
}

std::uint32_t smallest_nonzero_index(const UniPoly& slice) {
    const std::uint32_t p = slice.modulus().value();
    if (slice.degree() != static_cast<std::int64_t>(p) || !slice.is_monic()) {
        throw ParamsOutOfRange("smallest_nonzero_index: slice must be monic of degree p");
    }
    for (std::uint32_t i = 1; i <= p - 1; ++i) {
        if (slice.coeff(p - i) != 0) return i;
    }
    throw AllCoefficientsZero(
        "smallest_nonzero_index: slice is a p-th power x^p + c, every inner coefficient is zero");
}

StepanovReport stepanov_check(const RedeiBundle& bundle, std::uint32_t y0,
                              const std::vector<std::uint32_t>& designated_roots,
                              std::uint32_t required_multiplicity) {
    const std::uint32_t p = bundle.p.value();
    if (y0 >= p) throw ParamsOutOfRange("stepanov_check: y0 must be a canonical residue");

    StepanovReport rep{p, y0, 0, 0, {}, bi_eval_y(bundle.F, y0), false};
    rep.smallest_index = smallest_nonzero_index(rep.slice);

    std::set<std::uint32_t> roots;
    for (std::uint32_t rt : designated_roots) {
        if (rt >= p) throw ParamsOutOfRange("stepanov_check: root must be a canonical residue");
        if (!roots.insert(rt).second) {
            throw ParamsOutOfRange("stepanov_check: root " + std::to_string(rt) + " repeats");
        }
    }
    for (std::uint32_t rt : roots) {
        std::uint32_t m = root_multiplicity(rep.slice, rt);
        rep.multiplicity_table[rt] = m;
        if (m < required_multiplicity + 1) {
            throw MultiplicityDeficit("stepanov_check: root " + std::to_string(rt) +
                                      " has multiplicity " + std::to_string(m) + ", needs " +
                                      std::to_string(required_multiplicity + 1));
        }
    }
    rep.d_bound = static_cast<std::int64_t>(p) - 1 -
                  static_cast<std::int64_t>(required_multiplicity) *
                      static_cast<std::int64_t>(roots.size());
    rep.passed = static_cast<std::int64_t>(rep.smallest_index) <= rep.d_bound;
    return rep;
}

} // namespace redei
