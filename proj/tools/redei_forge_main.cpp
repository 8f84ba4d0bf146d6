#include <algorithm>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "redei/congruence.hpp"
#include "redei/directions.hpp"
#include "redei/errors.hpp"
#include "redei/field.hpp"
#include "redei/numbers.hpp"
#include "redei/power_pairs.hpp"
#include "redei/redei_engine.hpp"
#include "redei/report.hpp"
#include "redei/sweep.hpp"
#include "redei/unipoly.hpp"

namespace {

using nlohmann::ordered_json;
using namespace redei;

ordered_json to_json_array(const std::vector<std::uint32_t>& v) {
    ordered_json arr = ordered_json::array();
    for (std::uint32_t x : v) arr.push_back(x);
    return arr;
}

// Prints (or writes) a single-operation result. The CSV form uses the same
// columns as sweep reports so downstream tooling needs one parser only.
void emit_single(const ordered_json& body, const VerificationRecord& record,
                 const std::string& format, const std::string& out_path) {
    std::string text;
    if (format == "json") {
        text = body.dump(2) + "\n";
    } else {
        text = render_csv({record});
    }
    if (out_path.empty()) {
        std::cout << text;
    } else {
        write_text_file(out_path, text);
    }
}

std::uint32_t parse_residue(const std::string& token, PrimeModulus p) {
    std::size_t pos = 0;
    long long v = 0;
    try {
        v = std::stoll(token, &pos);
    } catch (const std::exception&) {
        throw ParamsOutOfRange("cannot parse integer '" + token + "'");
    }
    if (pos != token.size()) throw ParamsOutOfRange("cannot parse integer '" + token + "'");
    return p.reduce(v);
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> parse_point_tokens(
    const std::vector<std::string>& tokens, PrimeModulus p) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pts;
    for (const auto& t : tokens) {
        const auto colon = t.find(':');
        if (colon == std::string::npos) {
            throw ParamsOutOfRange("point '" + t + "' must look like a:b");
        }
        pts.push_back({parse_residue(t.substr(0, colon), p),
                       parse_residue(t.substr(colon + 1), p)});
    }
    return pts;
}

std::vector<std::uint32_t> parse_residue_tokens(const std::vector<std::string>& tokens,
                                                PrimeModulus p) {
    std::vector<std::uint32_t> out;
    for (const auto& t : tokens) out.push_back(parse_residue(t, p));
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"redei-forge: finite-field verification of segment-expressibility, "
                 "congruent-pair, and direction-set bounds"};
    app.require_subcommand(1);

    std::uint32_t p_val = 0;
    std::uint32_t alpha = 1;
    std::uint32_t beta = 1;
    std::uint32_t mu = 1;
    std::uint32_t nu = 1;
    std::uint32_t k = 2;
    std::uint32_t g = 2;
    long long target = 0;
    std::uint32_t d = 1;
    std::vector<std::string> point_tokens;
    std::string format = "json";
    std::string out_path;
    std::uint32_t workers = 1;
    std::uint64_t seed = 1;
    std::uint32_t p_min = 3;
    std::uint32_t p_max = 31;
    std::string theorem = "main";

    int exit_code = 0;

    auto* thue = app.add_subcommand("solve-thue", "small witness for a*x = +-y, x,y <= ceil(sqrt(p))");
    thue->add_option("--p", p_val, "prime modulus")->required();
    thue->add_option("--target", target, "the residue a to express")->required();
    thue->callback([&] {
        PrimeModulus p(p_val);
        const Fp a = normalize(target, p);
        const auto [x, y] = thue_solve(a);
        const bool neg = mod_mul(a.value(), x % p.value(), p.value()) != y % p.value();
        ordered_json out;
        out["op"] = "solve-thue";
        out["p"] = p.value();
        out["a"] = a.value();
        out["x"] = x;
        out["y"] = y;
        out["sign"] = neg ? "-" : "+";
        out["bound"] = ceil_sqrt(p.value());
        VerificationRecord rec{"solve-thue", p.value(), "a=" + std::to_string(a.value()),
                               "x,y<=" + std::to_string(ceil_sqrt(p.value())),
                               "(" + std::to_string(x) + "," + std::to_string(y) + ")",
                               true,
                               std::string(neg ? "-" : "+"),
                               0,
                               {}};
        emit_single(out, rec, format, out_path);
    });

    auto* vino = app.add_subcommand("solve-vinogradov", "witness with x <= alpha, y <= floor(p/alpha)");
    vino->add_option("--p", p_val, "prime modulus")->required();
    vino->add_option("--target", target, "the residue a to express")->required();
    vino->add_option("--alpha", alpha, "x-range bound")->required();
    vino->callback([&] {
        PrimeModulus p(p_val);
        const Fp a = normalize(target, p);
        const auto [x, y] = vinogradov_solve(a, alpha);
        const bool neg = mod_mul(a.value(), x % p.value(), p.value()) != y % p.value();
        ordered_json out;
        out["op"] = "solve-vinogradov";
        out["p"] = p.value();
        out["a"] = a.value();
        out["alpha"] = alpha;
        out["x"] = x;
        out["y"] = y;
        out["sign"] = neg ? "-" : "+";
        out["y_bound"] = p.value() / alpha;
        VerificationRecord rec{"solve-vinogradov", p.value(),
                               "a=" + std::to_string(a.value()) + " alpha=" + std::to_string(alpha),
                               "y<=" + std::to_string(p.value() / alpha),
                               "(" + std::to_string(x) + "," + std::to_string(y) + ")",
                               true,
                               std::string(neg ? "-" : "+"),
                               0,
                               {}};
        emit_single(out, rec, format, out_path);
    });

    auto* expr = app.add_subcommand("expressible", "exhaustive a*x = +-y scan over scaled segments");
    expr->add_option("--p", p_val, "prime modulus")->required();
    expr->add_option("--alpha", alpha, "x-segment length")->required();
    expr->add_option("--beta", beta, "y-segment length")->required();
    expr->add_option("--mu", mu, "x-segment scale");
    expr->add_option("--nu", nu, "y-segment scale");
    expr->callback([&] {
        SegmentParams params(PrimeModulus(p_val), alpha, beta, mu, nu);
        const auto rep = expressible_set(params);
        ordered_json out;
        out["op"] = "expressible";
        out["p"] = p_val;
        out["alpha"] = alpha;
        out["beta"] = beta;
        out["mu"] = mu;
        out["nu"] = nu;
        out["bound"] = rep.bound;
        out["bound_applies"] = rep.bound_applies;
        out["count"] = rep.expressible.size();
        out["expressible"] = to_json_array(rep.expressible);
        out["D"] = to_json_array(rep.inexpressible);
        out["passed"] = rep.passed;
        VerificationRecord rec{"expressible",
                               p_val,
                               "alpha=" + std::to_string(alpha) + " beta=" + std::to_string(beta) +
                                   " mu=" + std::to_string(mu) + " nu=" + std::to_string(nu),
                               std::to_string(rep.bound),
                               std::to_string(rep.expressible.size()),
                               rep.passed,
                               "D=" + render_set(rep.inexpressible),
                               0,
                               {}};
        emit_single(out, rec, format, out_path);
        if (!rep.passed) exit_code = 2;
    });

    auto* audit = app.add_subcommand(
        "redei-audit", "divide x^p-x by the segment product and check the whole pipeline");
    audit->add_option("--p", p_val, "prime modulus")->required();
    audit->add_option("--alpha", alpha, "x-segment length")->required();
    audit->add_option("--beta", beta, "y-segment length")->required();
    audit->callback([&] {
        PrimeModulus p(p_val);
        if (static_cast<std::uint64_t>(alpha) * (beta + 1) > p.value() - 1) {
            throw ParamsOutOfRange("redei-audit: requires alpha*(beta+1) <= p-1");
        }
        const auto oracle = expressible_set(SegmentParams(p, alpha, beta));
        const std::uint64_t delta =
            static_cast<std::uint64_t>(alpha + 1) * (beta + 1);

        ordered_json out;
        out["op"] = "redei-audit";
        out["p"] = p_val;
        out["alpha"] = alpha;
        out["beta"] = beta;
        out["delta"] = delta;
        out["D"] = to_json_array(oracle.inexpressible);
        out["bound"] = oracle.bound;
        bool passed = true;
        std::string claimed;
        std::string observed;

        if (delta > p.value()) {
            // More than p linear factors force a root collision at every y,
            // so no residue is exceptional; the oracle must agree.
            out["branch"] = "delta-exceeds-p";
            passed = oracle.inexpressible.empty();
            claimed = "D=[]";
            observed = "|D|=" + std::to_string(oracle.inexpressible.size());
        } else {
            out["branch"] = "pipeline";
            Construction cons;
            cons.kind = Construction::Kind::Segments;
            cons.alpha = alpha;
            cons.beta = beta;
            const auto H = build_h_segments(p, alpha, beta);
            const auto bundle = auxiliary_bundle(H, oracle.inexpressible, cons);
            const bool division_ok = bundle.F + bundle.r == BiPoly::x_pow_minus_x(p);
            const auto slice = bi_eval_y(bundle.F, 0);
            const std::uint32_t i = smallest_nonzero_index(slice);
            std::vector<std::uint32_t> roots;
            for (std::uint32_t j = 0; j <= beta; ++j) roots.push_back(j);
            const auto step = stepanov_check(bundle, 0, roots, alpha);
            const std::int64_t upper = static_cast<std::int64_t>(p.value()) - 1 -
                                       static_cast<std::int64_t>(alpha) * (beta + 1);
            const bool chain_ok =
                static_cast<std::int64_t>(oracle.inexpressible.size()) <=
                    static_cast<std::int64_t>(i) &&
                static_cast<std::int64_t>(i) <= upper;
            out["division_ok"] = division_ok;
            out["smallest_index"] = i;
            out["d_bound"] = step.d_bound;
            ordered_json mult = ordered_json::object();
            for (const auto& [root, m] : step.multiplicity_table) {
                mult[std::to_string(root)] = m;
            }
            out["multiplicities"] = mult;
            out["stepanov_passed"] = step.passed;
            passed = division_ok && chain_ok && step.passed;
            claimed = "|D|<=i<=" + std::to_string(upper);
            observed = "|D|=" + std::to_string(oracle.inexpressible.size()) +
                       " i=" + std::to_string(i);
        }
        out["passed"] = passed;
        VerificationRecord rec{"redei-audit",
                               p_val,
                               "alpha=" + std::to_string(alpha) + " beta=" + std::to_string(beta),
                               claimed,
                               observed,
                               passed,
                               "D=" + render_set(oracle.inexpressible),
                               0,
                               {}};
        emit_single(out, rec, format, out_path);
        if (!passed) exit_code = 2;
    });

    auto* pairs = app.add_subcommand("pairs", "congruent pair s^k*target = y^k with small s, y");
    pairs->add_option("--p", p_val, "prime modulus")->required();
    pairs->add_option("--k", k, "power, even");
    pairs->add_option("--g", g, "list length parameter")->required();
    auto* target_opt = pairs->add_option("--target", target, "k-th power residue (omit: all)");
    pairs->callback([&] {
        PrimeModulus p(p_val);
        const auto bounds = pair_bound_h(p, k, g);
        ordered_json out;
        out["op"] = "pairs";
        out["p"] = p_val;
        out["k"] = k;
        out["g"] = g;
        out["h_new"] = bounds.h_new;
        out["h_classic"] = bounds.h_classic;
        out["h_raw"] = bounds.raw;
        const auto cmp = compare_bounds(p, k, g);
        out["claim_g_ge_h_applies"] = cmp.claim_a_applicable;
        out["claim_g_ge_h_holds"] = cmp.claim_a_holds;
        out["claim_gkg_ge_p_applies"] = cmp.claim_b_applicable;
        out["claim_gkg_ge_p_holds"] = cmp.claim_b_holds;

        bool passed = cmp.claim_a_holds && cmp.claim_b_holds;
        std::string observed;
        if (*target_opt) {
            PairParams params(p, k, g, normalize(target, p));
            const auto w = find_congruent_pair(params, bounds.h_new);
            const auto c = find_pair_constructive(params);
            out["target"] = params.target.value();
            out["witness"] = {{"s", w.s}, {"y", w.y}};
            out["constructive"] = {{"s", c.s}, {"y", c.y}};
            observed = "(" + std::to_string(w.s) + "," + std::to_string(w.y) + ")";
        } else {
            const auto targets = kth_power_residues(p, k);
            ordered_json failures = ordered_json::array();
            std::uint64_t ok = 0;
            for (std::uint32_t t : targets) {
                PairParams params(p, k, g, Fp(p, t));
                try {
                    const auto w = find_congruent_pair(params, bounds.h_new);
                    const auto c = find_pair_constructive(params);
                    (void)w;
                    (void)c;
                    ++ok;
                } catch (const TheoremViolation& ex) {
                    failures.push_back({{"target", t}, {"error", ex.what()}});
                }
            }
            out["targets"] = targets.size();
            out["succeeded"] = ok;
            out["failures"] = failures;
            passed = passed && ok == targets.size();
            observed = std::to_string(ok) + "/" + std::to_string(targets.size());
        }
        out["passed"] = passed;
        VerificationRecord rec{"pairs",
                               p_val,
                               "k=" + std::to_string(k) + " g=" + std::to_string(g),
                               "h=" + std::to_string(bounds.h_new),
                               observed,
                               passed,
                               "",
                               0,
                               {}};
        emit_single(out, rec, format, out_path);
        if (!passed) exit_code = 2;
    });

    auto* twosq = app.add_subcommand("two-squares", "write p = 1 (mod 4) as x^2 + y^2");
    twosq->add_option("--p", p_val, "prime modulus")->required();
    twosq->callback([&] {
        const auto [x, y] = sum_two_squares(PrimeModulus(p_val));
        ordered_json out;
        out["op"] = "two-squares";
        out["p"] = p_val;
        out["x"] = x;
        out["y"] = y;
        out["check"] = std::to_string(x) + "^2+" + std::to_string(y) + "^2=" +
                       std::to_string(static_cast<std::uint64_t>(x) * x +
                                      static_cast<std::uint64_t>(y) * y);
        VerificationRecord rec{"two-squares", p_val, "",
                               "x^2+y^2=" + std::to_string(p_val),
                               "(" + std::to_string(x) + "," + std::to_string(y) + ")",
                               true,
                               "",
                               0,
                               {}};
        emit_single(out, rec, format, out_path);
    });

    auto* dirs = app.add_subcommand("directions", "ratio-set bound |Q| >= |S|-|Delta_alpha|+1");
    dirs->add_option("--p", p_val, "prime modulus")->required();
    dirs->add_option("--points", point_tokens, "points a:b")->required()->delimiter(',');
    auto* dir_alpha = dirs->add_option("--alpha", alpha, "single alpha (omit: all of F_p^*)");
    dirs->callback([&] {
        PrimeModulus p(p_val);
        const PointSet S(p, parse_point_tokens(point_tokens, p));
        const auto rs = ratio_set(S);
        ordered_json out;
        out["op"] = "directions";
        out["p"] = p_val;
        out["n"] = S.size();
        out["Q"] = to_json_array(rs.q);
        out["has_infinite_direction"] = rs.has_infinite_direction;
        std::vector<std::uint32_t> alphas;
        if (*dir_alpha) {
            alphas.push_back(alpha);
        } else {
            for (std::uint32_t a = 1; a < p.value(); ++a) alphas.push_back(a);
        }
        bool passed = true;
        ordered_json checks = ordered_json::array();
        for (std::uint32_t a : alphas) {
            const auto rep = verify_direction_bound(S, a);
            checks.push_back({{"alpha", a},
                              {"claimed", rep.claimed},
                              {"observed", rep.observed},
                              {"passed", rep.passed}});
            passed = passed && rep.passed;
        }
        out["checks"] = checks;
        out["passed"] = passed;
        VerificationRecord rec{"directions",
                               p_val,
                               "n=" + std::to_string(S.size()),
                               "|Q|>=|S|-|Delta|+1",
                               "|Q|=" + std::to_string(rs.q.size()),
                               passed,
                               "",
                               0,
                               {}};
        emit_single(out, rec, format, out_path);
        if (!passed) exit_code = 2;
    });

    auto* hp = app.add_subcommand("hp-check", "difference-set membership in Z_d and |A|(|A|-1) <= d");
    hp->add_option("--p", p_val, "prime modulus")->required();
    hp->add_option("--d", d, "subgroup order, divides p-1")->required();
    hp->add_option("--points", point_tokens, "elements of A")->required()->delimiter(',');
    hp->callback([&] {
        PrimeModulus p(p_val);
        const auto A = parse_residue_tokens(point_tokens, p);
        const auto res = hp_witness_check(p, A, d);
        const bool passed = !res.member || res.bound_holds;
        ordered_json out;
        out["op"] = "hp-check";
        out["p"] = p_val;
        out["d"] = d;
        std::vector<std::uint32_t> sorted_a = A;
        std::sort(sorted_a.begin(), sorted_a.end());
        out["A"] = to_json_array(sorted_a);
        out["member"] = res.member;
        out["product"] = res.product;
        out["bound_holds"] = res.bound_holds;
        out["passed"] = passed;
        VerificationRecord rec{"hp-check",
                               p_val,
                               "d=" + std::to_string(d) + " A=" + render_set(sorted_a),
                               "|A|(|A|-1)<=" + std::to_string(d),
                               std::to_string(res.product),
                               passed,
                               res.member ? "member" : "not-member",
                               0,
                               {}};
        emit_single(out, rec, format, out_path);
        if (!passed) exit_code = 2;
    });

    auto* sweep = app.add_subcommand("sweep", "grid verification over a prime range");
    sweep->add_option("--theorem", theorem,
                      "main|main2|strengthened|pairs|directions|corollary|remark2")
        ->required();
    sweep->add_option("--p-min", p_min, "lowest prime");
    sweep->add_option("--p-max", p_max, "highest prime");
    sweep->add_option("--workers", workers, "worker threads");
    sweep->add_option("--seed", seed, "seed for sampled grids");
    sweep->callback([&] {
        SweepConfig config;
        config.p_lo = p_min;
        config.p_hi = p_max;
        config.theorem = theorem;
        config.workers = workers;
        config.seed = seed;
        const auto summary = run_sweep(config);
        const std::string text = render_report(summary.records, format);
        std::ostringstream line;
        line << "sweep theorem=" << theorem << " primes=[" << p_min << "," << p_max << "]"
             << " records=" << summary.records.size() << " passed=" << summary.pass_count
             << " failed=" << summary.fail_count << " wall_ms=" << summary.wall_ms << "\n";
        if (out_path.empty()) {
            std::cout << text;
            std::cerr << line.str();
        } else {
            write_text_file(out_path, text);
            std::cout << line.str();
        }
        if (summary.fail_count > 0) exit_code = 2;
    });

    for (auto* sub : {thue, vino, expr, audit, pairs, twosq, dirs, hp, sweep}) {
        sub->add_option("--format", format, "json|csv");
        sub->add_option("--out", out_path, "write the report to this path");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const TheoremViolation& e) {
        std::cerr << "theorem violation: " << e.what() << "\n";
        return 2;
    } catch (const SearchBudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
