// Python bindings: operation-level wrappers returning plain dicts and
// tuples, mirroring the CLI subcommands rather than the C++ class surface.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <utility>
#include <vector>

#include "redei/congruence.hpp"
#include "redei/directions.hpp"
#include "redei/errors.hpp"
#include "redei/power_pairs.hpp"
#include "redei/redei_engine.hpp"
#include "redei/report.hpp"
#include "redei/sweep.hpp"

namespace py = pybind11;
using namespace redei;

namespace {

using Pt = std::pair<std::uint32_t, std::uint32_t>;

py::dict expressible(std::uint32_t p, std::uint32_t alpha, std::uint32_t beta,
                     std::uint32_t mu, std::uint32_t nu) {
    auto rep = expressible_set(SegmentParams(PrimeModulus(p), alpha, beta, mu, nu));
    py::dict out;
    out["p"] = p;
    out["bound"] = rep.bound;
    out["bound_applies"] = rep.bound_applies;
    out["expressible"] = rep.expressible;
    out["inexpressible"] = rep.inexpressible;
    out["passed"] = rep.passed;
    py::list ws;
    for (const auto& w : rep.witnesses) {
        py::dict d;
        d["a"] = w.a;
        d["x"] = w.x;
        d["y"] = w.y;
        d["negative"] = w.negative;
        ws.append(d);
    }
    out["witnesses"] = ws;
    return out;
}

py::dict redei_audit(std::uint32_t pv, std::uint32_t alpha, std::uint32_t beta) {
    PrimeModulus p(pv);
    auto oracle = expressible_set(SegmentParams(p, alpha, beta));
    const std::uint64_t delta = static_cast<std::uint64_t>(alpha + 1) * (beta + 1);
    py::dict out;
    out["p"] = pv;
    out["alpha"] = alpha;
    out["beta"] = beta;
    out["delta"] = delta;
    out["exceptional"] = oracle.inexpressible;
    if (delta > pv) {
        out["branch"] = "delta-exceeds-p";
        out["passed"] = oracle.inexpressible.empty();
        return out;
    }
    Construction cons;
    cons.kind = Construction::Kind::Segments;
    cons.alpha = alpha;
    cons.beta = beta;
    RedeiBundle bundle =
        auxiliary_bundle(build_h_segments(p, alpha, beta), oracle.inexpressible, cons);
    std::vector<std::uint32_t> roots;
    for (std::uint32_t j = 0; j <= beta; ++j) roots.push_back(j);
    StepanovReport rep = stepanov_check(bundle, 0, roots, alpha);
    out["branch"] = "pipeline";
    out["division_ok"] = bundle.F + bundle.r == BiPoly::x_pow_minus_x(p);
    out["smallest_index"] = rep.smallest_index;
    out["d_bound"] = rep.d_bound;
    py::dict mult;
    for (const auto& [root, m] : rep.multiplicity_table)
        mult[py::int_(root)] = m;
    out["multiplicities"] = mult;
    out["passed"] = rep.passed &&
                    oracle.inexpressible.size() <= rep.smallest_index &&
                    rep.smallest_index <=
                        pv - 1 - static_cast<std::uint64_t>(alpha) * (beta + 1);
    return out;
}

py::dict find_pair(std::uint32_t pv, std::uint32_t k, std::uint32_t g, std::int64_t target) {
    PrimeModulus p(pv);
    PairParams params(p, k, g, normalize(target, p));
    const auto bounds = pair_bound_h(p, k, g);
    const auto w = find_congruent_pair(params, bounds.h_new);
    const auto c = find_pair_constructive(params);
    py::dict out;
    out["s"] = w.s;
    out["y"] = w.y;
    out["constructive_s"] = c.s;
    out["constructive_y"] = c.y;
    out["h_raw"] = bounds.raw;
    out["h_new"] = bounds.h_new;
    out["h_classic"] = bounds.h_classic;
    return out;
}

py::dict bounds_comparison(std::uint32_t pv, std::uint32_t k, std::uint32_t g) {
    auto c = compare_bounds(PrimeModulus(pv), k, g);
    py::dict out;
    out["h_raw"] = c.bounds.raw;
    out["h_new"] = c.bounds.h_new;
    out["h_classic"] = c.bounds.h_classic;
    out["claim_a_applicable"] = c.claim_a_applicable;
    out["claim_a_holds"] = c.claim_a_holds;
    out["claim_b_applicable"] = c.claim_b_applicable;
    out["claim_b_holds"] = c.claim_b_holds;
    return out;
}

py::dict directions_report(std::uint32_t pv, const std::vector<Pt>& points,
                           std::uint32_t alpha) {
    PointSet s(PrimeModulus(pv), points);
    auto rep = verify_direction_bound(s, alpha);
    py::dict out;
    out["q"] = rep.q;
    out["has_infinite_direction"] = rep.has_infinite_direction;
    out["delta"] = rep.delta;
    out["claimed"] = rep.claimed;
    out["observed"] = rep.observed;
    out["passed"] = rep.passed;
    return out;
}

py::dict ratios(std::uint32_t pv, const std::vector<Pt>& points) {
    auto r = ratio_set(PointSet(PrimeModulus(pv), points));
    py::dict out;
    out["q"] = r.q;
    out["has_infinite_direction"] = r.has_infinite_direction;
    return out;
}

py::dict hp_check(std::uint32_t pv, const std::vector<std::uint32_t>& A, std::uint32_t d) {
    auto r = hp_witness_check(PrimeModulus(pv), A, d);
    py::dict out;
    out["member"] = r.member;
    out["product"] = r.product;
    out["d"] = r.d;
    out["bound_holds"] = r.bound_holds;
    return out;
}

py::dict corollary_search(std::uint32_t pv, std::uint32_t d) {
    auto r = corollary_max_search(PrimeModulus(pv), d);
    py::dict out;
    out["max_size"] = r.max_size;
    out["witness"] = r.witness;
    out["bound_holds"] = r.bound_holds;
    out["nodes"] = r.nodes;
    return out;
}

py::dict sweep(const std::string& theorem, std::uint32_t p_min, std::uint32_t p_max,
               std::uint32_t workers, std::uint64_t seed, const std::string& format) {
    SweepConfig cfg;
    cfg.theorem = theorem;
    cfg.p_lo = p_min;
    cfg.p_hi = p_max;
    cfg.workers = workers;
    cfg.seed = seed;
    auto summary = run_sweep(cfg);
    py::dict out;
    out["records"] = summary.records.size();
    out["passed"] = summary.pass_count;
    out["failed"] = summary.fail_count;
    out["report"] = render_report(summary.records, format);
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "finite-field congruence, direction, and power-pair verification kernels";

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<TheoremViolation>(m, "TheoremViolation", PyExc_RuntimeError);
    py::register_exception<SearchBudgetExceeded>(m, "SearchBudgetExceeded",
                                                 PyExc_RuntimeError);
    py::register_exception<IoError>(m, "IoError", PyExc_OSError);

    m.def(
        "solve_thue",
        [](std::uint32_t p, std::int64_t a) {
            PrimeModulus pm(p);
            return thue_solve(normalize(a, pm));
        },
        py::arg("p"), py::arg("a"),
        "Smallest (x, y) with x, y <= ceil(sqrt(p)) and a*x = +-y (mod p).");

    m.def(
        "solve_vinogradov",
        [](std::uint32_t p, std::int64_t a, std::uint32_t alpha) {
            PrimeModulus pm(p);
            return vinogradov_solve(normalize(a, pm), alpha);
        },
        py::arg("p"), py::arg("a"), py::arg("alpha"),
        "Smallest (x, y) with x <= alpha, y <= floor(p/alpha), a*x = +-y (mod p).");

    m.def("expressible_set", &expressible, py::arg("p"), py::arg("alpha"), py::arg("beta"),
          py::arg("mu") = 1, py::arg("nu") = 1,
          "Scan of a*x = +-y over scaled segments, with the count bound verdict.");

    m.def("redei_audit", &redei_audit, py::arg("p"), py::arg("alpha"), py::arg("beta"),
          "Divide x^p - x by the segment product and audit the whole pipeline.");

    m.def("find_pair", &find_pair, py::arg("p"), py::arg("k"), py::arg("g"),
          py::arg("target"),
          "Exhaustive and constructive congruent-pair searches at the derived h.");

    m.def("compare_bounds", &bounds_comparison, py::arg("p"), py::arg("k"), py::arg("g"),
          "Both comparison sentences about the derived h versus ceil(p/g).");

    m.def(
        "sum_two_squares",
        [](std::uint32_t p) { return sum_two_squares(PrimeModulus(p)); }, py::arg("p"),
        "Exact x^2 + y^2 = p for p = 1 (mod 4), sorted ascending.");

    m.def("ratio_set", &ratios, py::arg("p"), py::arg("points"),
          "Pairwise direction ratios of a point set, plus the infinite flag.");

    m.def("verify_direction_bound", &directions_report, py::arg("p"), py::arg("points"),
          py::arg("alpha"),
          "The |Q| >= |S| - |Delta_alpha| + 1 verdict for one alpha.");

    m.def("hp_check", &hp_check, py::arg("p"), py::arg("a_set"), py::arg("d"),
          "Difference-set membership of A against the order-d subgroup.");

    m.def("corollary_max_search", &corollary_search, py::arg("p"), py::arg("d"),
          "Exact maximum difference-set size for the order-d subgroup, p <= 101.");

    m.def("run_sweep", &sweep, py::arg("theorem"), py::arg("p_min") = 3,
          py::arg("p_max") = 31, py::arg("workers") = 1, py::arg("seed") = 1,
          py::arg("format") = std::string("json"),
          "Grid sweep over one theorem family; returns counts and the rendered report.");
}
