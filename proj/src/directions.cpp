#include "redei/directions.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "redei/errors.hpp"

namespace redei {

PointSet::PointSet(PrimeModulus p_, std::vector<std::pair<std::uint32_t, std::uint32_t>> points_)
    : p(p_), points(std::move(points_)) {
    if (points.empty()) throw EmptySet("PointSet: needs at least one point");
    if (points.size() >= p.value()) {
        throw ParamsOutOfRange("PointSet: needs fewer than p points");
    }
    std::sort(points.begin(), points.end());
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i].first >= p.value() || points[i].second >= p.value()) {
            throw ParamsOutOfRange("PointSet: coordinates must be canonical residues");
        }
        if (i > 0 && points[i] == points[i - 1]) {
            throw DuplicatePoint("PointSet: point (" + std::to_string(points[i].first) + "," +
                                 std::to_string(points[i].second) + ") repeats");
        }
    }
}

RatioSetResult ratio_set(const PointSet& S) {
    if (S.size() < 2) throw TooFewPoints("ratio_set: needs at least two points");
    const std::uint32_t p = S.p.value();
    RatioSetResult out;
    std::set<std::uint32_t> q;
    for (std::size_t i = 0; i < S.points.size(); ++i) {
        for (std::size_t j = i + 1; j < S.points.size(); ++j) {
            const auto [ai, bi] = S.points[i];
            const auto [aj, bj] = S.points[j];
            if (bi == bj) {
                // distinct points, so ai != aj here
                out.has_infinite_direction = true;
                continue;
            }
            const std::uint32_t da = mod_sub(ai, aj, p);
            const std::uint32_t db = mod_sub(bi, bj, p);
            q.insert(mod_mul(da, mod_inv(db, p), p));
        }
    }
    out.q.assign(q.begin(), q.end());
    return out;
}

std::vector<std::uint32_t> weighted_sumset(const PointSet& S, std::uint32_t alpha) {
    const std::uint32_t p = S.p.value();
    if (alpha >= p) throw ParamsOutOfRange("weighted_sumset: alpha must be a canonical residue");
    std::set<std::uint32_t> vals;
    for (const auto& [a, b] : S.points) {
        vals.insert(mod_add(mod_mul(alpha, a, p), b, p));
    }
    return std::vector<std::uint32_t>(vals.begin(), vals.end());
}

std::optional<Line> is_collinear(const PointSet& S) {
    const std::uint32_t p = S.p.value();
    if (S.size() == 1) {
        return Line{false, 0, S.points.front().second, 0};
    }
    bool all_a_equal = true;
    for (const auto& pt : S.points) {
        if (pt.first != S.points.front().first) {
            all_a_equal = false;
            break;
        }
    }
    if (all_a_equal) {
        return Line{true, 0, 0, S.points.front().first};
    }
    // Two distinct a-values exist (points are sorted by a, so front/back
    // differ); fit b = m*a + c through them and test the rest.
    const auto [a1, b1] = S.points.front();
    const auto [a2, b2] = S.points.back();
    const std::uint32_t m =
        mod_mul(mod_sub(b2, b1, p), mod_inv(mod_sub(a2, a1, p), p), p);
    const std::uint32_t c = mod_sub(b1, mod_mul(m, a1, p), p);
    for (const auto& [a, b] : S.points) {
        if (mod_add(mod_mul(m, a, p), c, p) != b) return std::nullopt;
    }
    return Line{false, m, c, 0};
}

DirectionBoundReport verify_direction_bound(const PointSet& S, std::uint32_t alpha) {
    const std::uint32_t p = S.p.value();
    if (S.size() < 2) throw TooFewPoints("verify_direction_bound: needs at least two points");
    if (alpha == 0 || alpha >= p) {
        throw ParamsOutOfRange(
            "verify_direction_bound: alpha must lie in [1, p-1]; the alpha = 0 case is the "
            "Cartesian count, not this bound");
    }
    if (auto line = is_collinear(S); line && !line->vertical) {
        throw CollinearInput("verify_direction_bound: S fits b = " + std::to_string(line->m) +
                             "*a + " + std::to_string(line->c) +
                             "; the bound excludes collinear sets");
    }

    DirectionBoundReport rep;
    rep.p = p;
    rep.alpha = alpha;
    auto rs = ratio_set(S);
    rep.q = std::move(rs.q);
    rep.has_infinite_direction = rs.has_infinite_direction;
    rep.delta = weighted_sumset(S, alpha);
    rep.claimed = static_cast<std::int64_t>(S.size()) -
                  static_cast<std::int64_t>(rep.delta.size()) + 1;
    rep.observed = rep.q.size();
    rep.passed = static_cast<std::int64_t>(rep.observed) >= rep.claimed;
    return rep;
}

HpCheckResult hp_witness_check(PrimeModulus p, const std::vector<std::uint32_t>& A,
                               std::uint32_t d) {
    if (d == 0 || (p.value() - 1) % d != 0) {
        throw NotADivisor("hp_witness_check: d must divide p-1");
    }
    if (A.empty()) throw EmptySet("hp_witness_check: A must be nonempty");
    std::vector<std::uint32_t> a = A;
    std::sort(a.begin(), a.end());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] >= p.value()) {
            throw ParamsOutOfRange("hp_witness_check: element " + std::to_string(a[i]) +
                                   " is not a canonical residue");
        }
        if (i > 0 && a[i] == a[i - 1]) {
            throw ParamsOutOfRange("hp_witness_check: element " + std::to_string(a[i]) +
                                   " repeats");
        }
    }

    const auto zd = subgroup(p, d);
    std::vector<bool> in_zd(p.value(), false);
    for (std::uint32_t z : zd.elements) in_zd[z] = true;

    HpCheckResult res;
    res.d = d;
    res.member = true;
    for (std::size_t i = 0; i < a.size() && res.member; ++i) {
        for (std::size_t j = i + 1; j < a.size(); ++j) {
            const std::uint32_t diff = mod_sub(a[j], a[i], p.value());
            if (!in_zd[diff] || !in_zd[p.value() - diff]) {
                res.member = false;
                break;
            }
        }
    }
    res.product = static_cast<std::uint64_t>(a.size()) * (a.size() - 1);
    res.bound_holds = res.product <= d;
    return res;
}

namespace {

struct CliqueSearch {
    const std::vector<std::vector<bool>>& adj;
    std::uint64_t nodes = 0;
    std::uint64_t budget;
    std::vector<std::uint32_t> best;
    std::vector<std::uint32_t> cur;

    void extend(const std::vector<std::uint32_t>& cand) {
        if (++nodes > budget) {
            throw SearchBudgetExceeded("corollary_max_search: node budget exhausted");
        }
        if (cur.size() > best.size()) best = cur;
        if (cur.size() + cand.size() <= best.size()) return;
        for (std::size_t idx = 0; idx < cand.size(); ++idx) {
            if (cur.size() + (cand.size() - idx) <= best.size()) return;
            const std::uint32_t v = cand[idx];
            std::vector<std::uint32_t> next;
            for (std::size_t k = idx + 1; k < cand.size(); ++k) {
                if (adj[v][cand[k]]) next.push_back(cand[k]);
            }
            cur.push_back(v);
            extend(next);
            cur.pop_back();
        }
    }
};

} // namespace

CorollarySearchResult corollary_max_search(PrimeModulus p, std::uint32_t d) {
    if (p.value() > 101) {
        throw ParamsOutOfRange("corollary_max_search: exact search is limited to p <= 101");
    }
    if (d == 0 || (p.value() - 1) % d != 0) {
        throw NotADivisor("corollary_max_search: d must divide p-1");
    }

    const auto zd = subgroup(p, d);
    std::vector<bool> in_zd(p.value(), false);
    for (std::uint32_t z : zd.elements) in_zd[z] = true;
    // A - A is symmetric, so only differences whose negation also lies in
    // Z_d can join two elements of A.
    std::vector<std::uint32_t> zsym;
    for (std::uint32_t z : zd.elements) {
        if (in_zd[p.value() - z]) zsym.push_back(z);
    }

    CorollarySearchResult res;
    res.p = p.value();
    res.d = d;

    // Vertices are the elements of zsym (the candidates adjacent to the
    // fixed 0); adjacency is indexed by value.
    std::vector<bool> in_sym(p.value(), false);
    for (std::uint32_t z : zsym) in_sym[z] = true;
    std::vector<std::vector<bool>> av(p.value(), std::vector<bool>(p.value(), false));
    for (std::uint32_t u : zsym) {
        for (std::uint32_t v : zsym) {
            if (u != v && in_sym[mod_sub(u, v, p.value())]) av[u][v] = true;
        }
    }

    CliqueSearch search{av, 0, 20'000'000ull, {}, {}};
    search.extend(zsym);
    res.nodes = search.nodes;
    res.max_size = static_cast<std::uint32_t>(search.best.size()) + 1; // plus the fixed 0
    res.witness.push_back(0);
    res.witness.insert(res.witness.end(), search.best.begin(), search.best.end());
    std::sort(res.witness.begin(), res.witness.end());
    res.bound_holds =
        static_cast<std::uint64_t>(res.max_size) * (res.max_size - 1) <= d;
    return res;
}

PointSet random_noncollinear_pointset(PrimeModulus p, std::uint32_t n, std::mt19937& rng) {
    if (n < 3) throw ParamsOutOfRange("random_noncollinear_pointset: needs n >= 3");
    if (n >= p.value()) {
        throw ParamsOutOfRange("random_noncollinear_pointset: needs n < p");
    }
    for (;;) {
        std::set<std::pair<std::uint32_t, std::uint32_t>> pts;
        while (pts.size() < n) {
            const std::uint32_t a = static_cast<std::uint32_t>(rng() % p.value());
            const std::uint32_t b = static_cast<std::uint32_t>(rng() % p.value());
            pts.insert({a, b});
        }
        PointSet S(p, {pts.begin(), pts.end()});
        if (auto line = is_collinear(S); !line || line->vertical) return S;
    }
}

} // namespace redei
