#include "limpoly/cli.hpp"

#include "limpoly/claims.hpp"
#include "limpoly/critical.hpp"
#include "limpoly/error.hpp"
#include "limpoly/expansion.hpp"
#include "limpoly/measure.hpp"
#include "limpoly/parse.hpp"
#include "limpoly/report.hpp"
#include "limpoly/search.hpp"

#include "CLI11.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <ostream>

namespace limpoly {

namespace {

std::string fixed6(double v)
{
    if (!std::isfinite(v))
        return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::string show(Complex z)
{
    if (z.imag() == 0.0)
        return fixed6(z.real());
    return fixed6(z.real()) + (z.imag() < 0 ? "-" : "+") + fixed6(std::abs(z.imag())) + "i";
}

template <typename Range, typename Fn>
std::string show_list(const Range& values, Fn fn)
{
    std::string s = "(";
    bool first = true;
    for (const auto& v : values) {
        if (!first)
            s += ", ";
        s += fn(v);
        first = false;
    }
    return s + ")";
}

std::string show_reals(const std::vector<double>& v)
{
    return show_list(v, fixed6);
}

std::string show_complex(const std::vector<Complex>& v)
{
    return show_list(v, show);
}

Json skipped(std::string_view reason, std::string detail)
{
    return {{"skipped", {{"reason", reason}, {"detail", std::move(detail)}}}};
}

bool is_skipped(const Json& j)
{
    return j.is_object() && j.contains("skipped");
}

RootMultiset parse_roots(const std::string& text)
{
    return RootMultiset(parse_complex_list(text));
}

// Options shared by the subcommands that evaluate claims.
struct CommonOptions {
    std::string roots;
    std::optional<double> eps;
    std::optional<double> delta;
    double tol_abs = Tolerance{}.abs;
    double tol_rel = Tolerance{}.rel;
    double index_band = default_index_band;
    bool json = false;

    Tolerance tolerance() const { return {tol_abs, tol_rel}; }
};

void add_tolerance_options(CLI::App* cmd, CommonOptions& o)
{
    cmd->add_option("--tol-abs", o.tol_abs, "absolute comparison tolerance")->capture_default_str();
    cmd->add_option("--tol-rel", o.tol_rel, "relative comparison tolerance")->capture_default_str();
    cmd->add_option("--index-band", o.index_band,
                    "half-width of the |s_t| = 1/t band for REAL_CASE")
        ->capture_default_str();
}

Json diagnostics_json(const CommonOptions& o)
{
    const SolverOptions solver;
    return {{"tolerance", to_json(o.tolerance())},
            {"index_band", o.index_band},
            {"solver", {{"max_sweeps", solver.max_sweeps}, {"step_tol", solver.step_tol},
                        {"cluster_tol", solver.cluster_tol}, {"max_residual", solver.max_residual}}}};
}

void print_verdict(std::ostream& out, const ClaimVerdict& v, std::string_view indent = "")
{
    out << indent << to_string(v.claim) << ": " << to_string(v.classification)
        << (v.boundary ? " (boundary)" : "") << '\n';
    for (const auto& h : v.hypotheses)
        out << indent << "  hypothesis " << h.name << ": " << (h.met ? "met" : "not met")
            << " (margin " << fixed6(h.margin) << ")\n";
    out << indent << "  conclusion " << v.conclusion.name << ": "
        << (v.conclusion.met ? "holds" : "fails") << " (margin " << fixed6(v.conclusion.margin)
        << ")\n";
    for (const auto& [name, value] : v.quantities)
        out << indent << "  " << name << " = " << fixed6(value) << '\n';
    for (const auto& [name, value] : v.flags)
        out << indent << "  " << name << ": " << (value ? "true" : "false") << '\n';
}

void print_index_table(std::ostream& out, const IndexBoundReport& r)
{
    out << "index bound (" << to_string(r.form) << "-form, bound " << fixed6(r.bound)
        << "): " << (r.all_hold ? "all hold" : "VIOLATED") << '\n';
    for (const auto& e : r.entries)
        out << "  k=" << e.k << "  |s_k|=" << fixed6(e.abs_s) << "  "
            << (e.holds ? "holds" : "VIOLATION") << '\n';
}

void print_expansion(std::ostream& out, const LocalExpansion& exp)
{
    out << "expansion (" << to_string(exp.form) << "-form) about a_" << exp.center_index + 1
        << " = " << fixed6(exp.center) << '\n';
    out << "  s = " << show_reals(exp.coeffs) << '\n';
    out << "  r = " << show_reals(exp.residuals) << '\n';
}

// Evaluates one claim for analyze, mapping library errors to a skipped section.
template <typename Fn>
Json guarded_claim(Fn&& fn, std::vector<ClaimVerdict>& verdicts)
{
    try {
        ClaimVerdict v = fn();
        Json j = to_json(v);
        verdicts.push_back(std::move(v));
        return j;
    } catch (const ConvergenceError& e) {
        return skipped("solver_failure", e.what());
    } catch (const Error& e) {
        return skipped("precondition", e.what());
    }
}

int cmd_analyze(const CommonOptions& o, double slack, std::ostream& out)
{
    const RootMultiset roots = parse_roots(o.roots);
    const Tolerance tol = o.tolerance();
    const std::size_t n = roots.size();
    const MonicPolynomial p = from_roots(roots);

    Json results;
    results["measure"] = measure(roots);
    results["limitedness"] = o.eps ? to_json(is_epsilon_limited(roots, *o.eps))
                                   : skipped("no_eps", "pass --eps to test limitedness");

    std::optional<LocalExpansion> exp;
    std::optional<IndexBoundReport> index;
    std::string positivity_reason;
    if (roots.is_positive_real()) {
        exp = local_expansion_min(roots);
        index = index_bound_check(*exp, roots);
        results["expansion"] = to_json(*exp);
        results["index_bound"] = to_json(*index);
    } else {
        positivity_reason = roots.is_real() ? "nonpositive_roots" : "complex_roots";
        const std::string detail = positivity_reason == "complex_roots"
                                       ? "complex roots: expansion skipped"
                                       : "nonpositive roots: expansion skipped";
        results["expansion"] = skipped(positivity_reason, detail);
        results["index_bound"] = skipped(positivity_reason, detail);
    }

    std::optional<CriticalSet> crit;
    if (n < 2) {
        results["critical_points"] = skipped("degree_below_2", "degree 1 has no critical points");
        results["sendov_distances"] = skipped("degree_below_2", "degree 1 has no critical points");
    } else {
        try {
            crit = critical_points(p);
            results["critical_points"] = to_json(*crit);
            results["sendov_distances"] = to_json(sendov_distances(roots, *crit));
        } catch (const ConvergenceError& e) {
            results["critical_points"] = skipped("solver_failure", e.what());
            results["sendov_distances"] = skipped("solver_failure", e.what());
        }
    }

    std::vector<ClaimVerdict> verdicts;
    Json claims = Json::object();
    const auto name = [](ClaimId id) { return std::string(to_string(id)); };
    claims[name(ClaimId::ProductProp)] = skipped("needs_two_root_sets", "use verify --claim product_prop");
    if (!roots.is_positive_real()) {
        for (const ClaimId id : all_claims)
            if (id != ClaimId::ProductProp)
                claims[name(id)] = skipped(positivity_reason, "claim needs positive real zeros");
    } else {
        claims[name(ClaimId::IndexBound)] =
            guarded_claim([&] { return check_index_bound(roots, tol); }, verdicts);
        if (n < 2) {
            for (const ClaimId id : all_claims)
                if (id != ClaimId::ProductProp && id != ClaimId::IndexBound)
                    claims[name(id)] = skipped("degree_below_2", "claim needs degree n >= 2");
        } else {
            claims[name(ClaimId::RealCase)] =
                guarded_claim([&] { return check_real_case(roots, tol, o.index_band); }, verdicts);
            if (o.eps) {
                const double eps = *o.eps;
                claims[name(ClaimId::BasicInequality)] =
                    guarded_claim([&] { return check_basic_inequality(roots, eps, tol); }, verdicts);
                claims[name(ClaimId::PermSumBound)] =
                    guarded_claim([&] { return check_perm_sum_bound(roots, eps, tol); }, verdicts);
                claims[name(ClaimId::DerivSumBound)] =
                    guarded_claim([&] { return check_deriv_sum_bound(roots, eps, tol); }, verdicts);
                claims[name(ClaimId::Squeeze)] =
                    o.delta ? guarded_claim([&] { return check_squeeze(roots, eps, *o.delta, tol); }, verdicts)
                            : skipped("no_delta", "pass --delta for SQUEEZE");
            } else {
                for (const ClaimId id : {ClaimId::BasicInequality, ClaimId::PermSumBound,
                                         ClaimId::DerivSumBound, ClaimId::Squeeze})
                    claims[name(id)] = skipped("no_eps", "pass --eps for this claim");
            }
        }
    }
    results["claims"] = std::move(claims);

    std::optional<PullbackReport> pullback;
    if (n < 2) {
        results["complex_pullback"] = skipped("degree_below_2", "needs degree n >= 2");
    } else {
        try {
            pullback = complex_pullback_check(roots, slack);
            results["complex_pullback"] = to_json(*pullback);
        } catch (const ConvergenceError& e) {
            results["complex_pullback"] = skipped("solver_failure", e.what());
        }
    }

    Json inputs = {{"roots", to_json(roots)}, {"slack", slack}};
    inputs["eps"] = o.eps ? Json(*o.eps) : Json(nullptr);
    inputs["delta"] = o.delta ? Json(*o.delta) : Json(nullptr);

    if (o.json) {
        out << dump_canonical(make_report("analyze", std::move(inputs), std::move(results),
                                          diagnostics_json(o)))
            << '\n';
        return exit_ok;
    }

    out << "roots: " << show_complex(roots.values()) << '\n';
    out << "measure: " << fixed6(results["measure"].get<double>()) << '\n';
    if (o.eps) {
        const Limitedness l = is_epsilon_limited(roots, *o.eps);
        out << "eps-limited (eps " << fixed6(l.epsilon) << "): " << (l.is_limited ? "yes" : "no") << '\n';
    }
    if (exp) {
        print_expansion(out, *exp);
        print_index_table(out, *index);
    } else {
        out << "expansion: skipped (" << positivity_reason << ")\n";
    }
    if (crit) {
        out << "critical points: " << show_complex(crit->points) << "  [" << to_string(crit->method)
            << "]\n";
        const SendovTable t = sendov_distances(roots, *crit);
        out << "nearest critical point per zero: " << show_reals(t.nearest) << '\n';
        out << "every zero within unit distance: " << (t.unit_disk_condition ? "yes" : "no") << '\n';
        out << "max distance from least zero: " << fixed6(t.max_from_min_zero) << '\n';
    } else if (n < 2) {
        out << "critical points: none (degree 1)\n";
    } else {
        out << "critical points: solver failure\n";
    }
    for (const auto& v : verdicts)
        print_verdict(out, v);
    for (const auto& [claim, section] : results["claims"].items())
        if (is_skipped(section))
            out << claim << ": skipped (" << section["skipped"]["reason"].get<std::string>() << ")\n";
    if (pullback) {
        out << "modulus projection: " << show_complex(pullback->projected.values()) << '\n';
        out << "min |b - a_j| over true critical points: " << fixed6(pullback->min_distance)
            << (pullback->within_slack ? " (< 1 + slack)" : " (>= 1 + slack)") << '\n';
    }
    return exit_ok;
}

int cmd_verify(const CommonOptions& o, const std::string& claim_name, const std::string& q_roots,
               std::ostream& out, std::ostream& err)
{
    const std::optional<ClaimId> claim = parse_claim_id(claim_name);
    if (!claim) {
        err << "unknown claim '" << claim_name << "'; valid claims:";
        for (const ClaimId id : all_claims)
            err << ' ' << to_string(id);
        err << '\n';
        return exit_error;
    }
    const RootMultiset roots = parse_roots(o.roots);
    const Tolerance tol = o.tolerance();
    const auto need = [&](const std::optional<double>& v, const char* flag) {
        if (!v)
            throw DomainError(std::string(to_string(*claim)) + " needs " + flag);
        return *v;
    };

    ClaimVerdict v;
    Json inputs = {{"claim", to_string(*claim)}, {"roots", to_json(roots)}};
    switch (*claim) {
    case ClaimId::RealCase: v = check_real_case(roots, tol, o.index_band); break;
    case ClaimId::IndexBound: v = check_index_bound(roots, tol); break;
    case ClaimId::BasicInequality: v = check_basic_inequality(roots, need(o.eps, "--eps"), tol); break;
    case ClaimId::Squeeze:
        v = check_squeeze(roots, need(o.eps, "--eps"), need(o.delta, "--delta"), tol);
        break;
    case ClaimId::PermSumBound: v = check_perm_sum_bound(roots, need(o.eps, "--eps"), tol); break;
    case ClaimId::DerivSumBound: v = check_deriv_sum_bound(roots, need(o.eps, "--eps"), tol); break;
    case ClaimId::ProductProp: {
        if (q_roots.empty())
            throw DomainError("PRODUCT_PROP needs --q-roots");
        const RootMultiset q = parse_roots(q_roots);
        inputs["q_roots"] = to_json(q);
        v = check_product_proposition(roots, q, need(o.eps, "--eps"), need(o.delta, "--delta"), tol);
        break;
    }
    }
    inputs["eps"] = o.eps ? Json(*o.eps) : Json(nullptr);
    inputs["delta"] = o.delta ? Json(*o.delta) : Json(nullptr);

    if (o.json)
        out << dump_canonical(make_report("verify", std::move(inputs), {{"verdict", to_json(v)}},
                                          diagnostics_json(o)))
            << '\n';
    else
        print_verdict(out, v);
    return v.classification == Classification::Counterexample ? exit_counterexample : exit_ok;
}

std::pair<int, int> parse_degree_range(const std::string& text)
{
    const std::size_t sep = text.find_first_of("-:");
    if (sep == std::string::npos) {
        const int d = static_cast<int>(parse_double(text));
        if (d != parse_double(text))
            throw DomainError("degree must be an integer, got '" + text + "'");
        return {d, d};
    }
    const double lo = parse_double(text.substr(0, sep));
    const double hi = parse_double(text.substr(sep + 1));
    if (lo != std::floor(lo) || hi != std::floor(hi))
        throw DomainError("degree range must be integers, got '" + text + "'");
    return {static_cast<int>(lo), static_cast<int>(hi)};
}

std::uint64_t default_seed()
{
    const char* env = std::getenv("LIMPOLY_SEED");
    if (!env)
        return 0;
    std::uint64_t seed = 0;
    const std::string_view s(env);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), seed);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw DomainError("LIMPOLY_SEED must be an unsigned integer, got '" + std::string(s) + "'");
    return seed;
}

struct SearchOptions {
    std::string claim = "squeeze";
    std::string degree = "3";
    std::int64_t samples = 1000;
    std::optional<std::uint64_t> seed;
    std::string dist = "loguniform:0.001,1000";
    std::string eps_policy = "measure-times:1.01";
    double delta = 1.0;
    std::size_t cap = 100;
    unsigned shards = 1;
    std::string out_path;
    bool timing = false;
};

int cmd_search(const CommonOptions& o, const SearchOptions& s, std::ostream& out, std::ostream& err)
{
    const std::optional<ClaimId> claim = parse_claim_id(s.claim);
    if (!claim) {
        err << "unknown claim '" << s.claim << "'; valid claims:";
        for (const ClaimId id : all_claims)
            err << ' ' << to_string(id);
        err << '\n';
        return exit_error;
    }
    if (s.samples < 1)
        throw DomainError("samples must be at least 1");
    if (s.shards < 1)
        throw DomainError("shards must be at least 1");

    SearchConfig config;
    config.claim = *claim;
    std::tie(config.degree_min, config.degree_max) = parse_degree_range(s.degree);
    config.samples = static_cast<std::uint64_t>(s.samples);
    config.seed = s.seed ? *s.seed : default_seed();
    config.distribution = Distribution::parse(s.dist);
    config.epsilon_policy = EpsilonPolicy::parse(s.eps_policy);
    config.delta = s.delta;
    config.tolerance = o.tolerance();
    config.index_band = o.index_band;
    config.counterexample_cap = s.cap;
    config.validate();

    const SearchReport report = run_search_parallel(config, s.shards);
    if (!s.out_path.empty())
        append_counterexample_log(s.out_path, report);

    if (o.json) {
        Json diagnostics = diagnostics_json(o);
        if (s.timing)
            diagnostics["wall_seconds"] = report.wall_seconds;
        out << dump_canonical(make_report("search", to_json(config), to_json(report), std::move(diagnostics)))
            << '\n';
    } else {
        out << "claim " << to_string(config.claim) << ", degree " << config.degree_min << ".."
            << config.degree_max << ", " << config.samples << " samples, seed " << config.seed << '\n';
        out << "distribution " << config.distribution.to_string() << ", eps policy "
            << config.epsilon_policy.to_string() << '\n';
        for (const auto c : {Classification::HypothesesNotMet, Classification::Confirmed,
                             Classification::Counterexample})
            out << "  " << to_string(c) << ": " << report.count(c) << '\n';
        out << "  SOLVER_FAILURE: " << report.solver_failures << '\n';
        for (const auto& cex : report.counterexamples)
            out << "  counterexample " << show_complex(cex.roots.values()) << "  margin "
                << fixed6(cex.verdict.conclusion.margin) << '\n';
        if (report.counterexamples_dropped() > 0)
            out << "  (" << report.counterexamples_dropped() << " more not stored)\n";
        if (s.timing)
            out << "wall time " << fixed6(report.wall_seconds) << " s\n";
    }
    return report.count(Classification::Counterexample) > 0 ? exit_counterexample : exit_ok;
}

int cmd_expand(const CommonOptions& o, const std::string& center, std::ostream& out)
{
    const RootMultiset roots = parse_roots(o.roots);
    Json inputs = {{"roots", to_json(roots)}, {"center", center}};
    Json results;

    if (center == "min" || center == "max-plus") {
        const LocalExpansion exp =
            center == "min" ? local_expansion_min(roots) : local_expansion_max_plus(roots);
        const IndexBoundReport index = index_bound_check(exp, roots);
        if (o.json) {
            results["expansion"] = to_json(exp);
            results["index_bound"] = to_json(index);
        } else {
            print_expansion(out, exp);
            print_index_table(out, index);
        }
    } else if (center.rfind("value:", 0) == 0) {
        const double c = parse_double(center.substr(6));
        const Coeffs t = taylor_shift(from_roots(roots), c);
        if (o.json) {
            Json coeffs = Json::array();
            for (const Complex tk : t)
                coeffs.push_back(to_json(tk));
            results["shift"] = {{"center", c}, {"t", std::move(coeffs)}};
            results["index_bound"] = skipped("center_not_extremal_zero", "index bounds apply to min and max-plus centers");
        } else {
            out << "shift about " << fixed6(c) << '\n';
            out << "  t = " << show_complex(t) << '\n';
        }
    } else {
        throw DomainError("center must be min, max-plus or value:<real>, got '" + center + "'");
    }
    if (o.json)
        out << dump_canonical(make_report("expand", std::move(inputs), std::move(results), diagnostics_json(o)))
            << '\n';
    return exit_ok;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Limited-polynomial calculus: measure, local expansions, critical points and claim checks"};
    app.name("limpoly");
    app.require_subcommand(1);

    CommonOptions common;

    auto* analyze = app.add_subcommand("analyze", "measure, expansion, critical points and every applicable claim");
    analyze->add_option("--roots", common.roots, "comma-separated zeros, e.g. 1,2,3 or 1+1i,2")->required();
    analyze->add_option("--eps", common.eps, "epsilon for limitedness and eps-claims");
    analyze->add_option("--delta", common.delta, "distance threshold for SQUEEZE");
    double slack = 0.0;
    analyze->add_option("--slack", slack, "slack for the complex pullback check")->capture_default_str();
    analyze->add_flag("--json", common.json, "machine-readable output");
    add_tolerance_options(analyze, common);

    auto* verify = app.add_subcommand("verify", "check one claim on one instance");
    std::string claim_name;
    std::string q_roots;
    verify->add_option("--claim", claim_name, "claim name (case-insensitive)")->required();
    verify->add_option("--roots", common.roots, "comma-separated zeros")->required();
    verify->add_option("--q-roots", q_roots, "zeros of Q for product_prop");
    verify->add_option("--eps", common.eps, "epsilon");
    verify->add_option("--delta", common.delta, "delta");
    verify->add_flag("--json", common.json, "machine-readable output");
    add_tolerance_options(verify, common);

    auto* search = app.add_subcommand("search", "seeded randomized sweep of one claim");
    SearchOptions sopt;
    search->add_option("--claim", sopt.claim, "claim name")->capture_default_str();
    search->add_option("--degree", sopt.degree, "degree or range lo-hi")->capture_default_str();
    search->add_option("--samples", sopt.samples, "number of instances")->capture_default_str();
    search->add_option("--seed", sopt.seed, "64-bit seed (default: $LIMPOLY_SEED or 0)");
    search->add_option("--dist", sopt.dist, "uniform:lo,hi | loguniform:lo,hi | disk:r")->capture_default_str();
    search->add_option("--eps-policy", sopt.eps_policy, "fixed:v | measure-times:f")->capture_default_str();
    search->add_option("--delta", sopt.delta, "distance threshold for SQUEEZE")->capture_default_str();
    search->add_option("--cap", sopt.cap, "stored counterexample limit")->capture_default_str();
    search->add_option("--shards", sopt.shards, "worker shards")->capture_default_str();
    search->add_option("--out", sopt.out_path, "append counterexamples to this log (one JSON object per line)");
    search->add_flag("--timing", sopt.timing, "report wall time");
    search->add_flag("--json", common.json, "machine-readable output");
    add_tolerance_options(search, common);

    auto* expand = app.add_subcommand("expand", "local expansion about a chosen center");
    std::string center = "min";
    expand->add_option("--roots", common.roots, "comma-separated zeros")->required();
    expand->add_option("--center", center, "min | max-plus | value:<real>")->capture_default_str();
    expand->add_flag("--json", common.json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_error;
    }

    try {
        if (analyze->parsed())
            return cmd_analyze(common, slack, out);
        if (verify->parsed())
            return cmd_verify(common, claim_name, q_roots, out, err);
        if (search->parsed())
            return cmd_search(common, sopt, out, err);
        if (expand->parsed())
            return cmd_expand(common, center, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_error;
    }
    return exit_error;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    std::vector<const char*> argv{"limpoly"};
    for (const auto& a : args)
        argv.push_back(a.c_str());
    return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

} // namespace limpoly
