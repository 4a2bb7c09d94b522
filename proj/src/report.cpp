#include "limpoly/report.hpp"

#include "limpoly/error.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

namespace limpoly {

namespace {

Json number(double v)
{
    return std::isfinite(v) ? Json(v) : Json(nullptr);
}

std::string hex64(std::uint64_t v)
{
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

std::uint64_t fnv1a(std::string_view s)
{
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (const unsigned char ch : s) {
        h ^= ch;
        h *= 0x100000001B3ULL;
    }
    return h;
}

} // namespace

Json to_json(Complex z)
{
    return Json::array({number(z.real()), number(z.imag())});
}

Json to_json(const RootMultiset& roots)
{
    Json arr = Json::array();
    for (const Complex a : roots)
        arr.push_back(to_json(a));
    return arr;
}

Json to_json(const Tolerance& tol)
{
    return {{"abs", tol.abs}, {"rel", tol.rel}};
}

Json to_json(const Check& check)
{
    return {{"name", check.name},
            {"met", check.met},
            {"margin", number(check.margin)},
            {"marginal", check.marginal}};
}

Json to_json(const ClaimVerdict& verdict)
{
    Json hyps = Json::array();
    for (const auto& h : verdict.hypotheses)
        hyps.push_back(to_json(h));
    Json quantities = Json::object();
    for (const auto& [name, value] : verdict.quantities)
        quantities[name] = number(value);
    Json flags = Json::object();
    for (const auto& [name, value] : verdict.flags)
        flags[name] = value;
    return {{"claim", to_string(verdict.claim)},
            {"hypotheses", std::move(hyps)},
            {"conclusion", to_json(verdict.conclusion)},
            {"classification", to_string(verdict.classification)},
            {"boundary", verdict.boundary},
            {"quantities", std::move(quantities)},
            {"flags", std::move(flags)}};
}

Json to_json(const Limitedness& l)
{
    return {{"measure", number(l.measure)}, {"epsilon", number(l.epsilon)}, {"is_limited", l.is_limited}};
}

Json to_json(const LocalExpansion& exp)
{
    Json s = Json::array();
    for (const double v : exp.coeffs)
        s.push_back(number(v));
    Json r = Json::array();
    for (const double v : exp.residuals)
        r.push_back(number(v));
    return {{"center", number(exp.center)},
            {"center_index", exp.center_index},
            {"form", to_string(exp.form)},
            {"s", std::move(s)},
            {"r", std::move(r)}};
}

Json to_json(const IndexBoundReport& report)
{
    Json entries = Json::array();
    for (const auto& e : report.entries)
        entries.push_back({{"k", e.k}, {"abs_s", number(e.abs_s)}, {"bound", number(e.bound)}, {"holds", e.holds}});
    return {{"form", to_string(report.form)},
            {"bound", number(report.bound)},
            {"entries", std::move(entries)},
            {"all_hold", report.all_hold}};
}

Json to_json(const CriticalSet& crit)
{
    Json pts = Json::array();
    for (const Complex b : crit.points)
        pts.push_back(to_json(b));
    Json res = Json::array();
    for (const double r : crit.residuals)
        res.push_back(number(r));
    return {{"points", std::move(pts)},
            {"residuals", std::move(res)},
            {"method", to_string(crit.method)},
            {"sweeps", crit.sweeps}};
}

Json to_json(const SendovTable& table)
{
    Json rows = Json::array();
    for (const auto& row : table.distances) {
        Json r = Json::array();
        for (const double d : row)
            r.push_back(number(d));
        rows.push_back(std::move(r));
    }
    Json nearest = Json::array();
    for (const double d : table.nearest)
        nearest.push_back(number(d));
    return {{"distances", std::move(rows)},
            {"nearest", std::move(nearest)},
            {"unit_disk_condition", table.unit_disk_condition},
            {"min_zero_index", table.min_zero_index},
            {"max_from_min_zero", number(table.max_from_min_zero)}};
}

Json to_json(const StirlingBound& b)
{
    return {{"n", b.n},
            {"factorial_sum", number(b.factorial_sum)},
            {"stirling_sum", number(b.stirling_sum)},
            {"log_factorial_sum", number(b.log_factorial_sum)},
            {"log_stirling_sum", number(b.log_stirling_sum)},
            {"stirling_below", b.stirling_below}};
}

Json to_json(const SearchConfig& c)
{
    return {{"claim", to_string(c.claim)},
            {"degree_min", c.degree_min},
            {"degree_max", c.degree_max},
            {"samples", c.samples},
            {"seed", c.seed},
            {"distribution", c.distribution.to_string()},
            {"epsilon_policy", c.epsilon_policy.to_string()},
            {"delta", number(c.delta)},
            {"tolerance", to_json(c.tolerance)},
            {"index_band", number(c.index_band)},
            {"counterexample_cap", c.counterexample_cap}};
}

Json to_json(const Counterexample& cex)
{
    return {{"sample_index", cex.sample_index},
            {"instance_hash", hex64(cex.hash)},
            {"roots", to_json(cex.roots)},
            {"verdict", to_json(cex.verdict)}};
}

Json to_json(const PullbackReport& r)
{
    Json projected_distances = Json::array();
    for (const double d : r.projected_distances)
        projected_distances.push_back(number(d));
    return {{"roots", to_json(r.roots)},
            {"projected_roots", to_json(r.projected)},
            {"zero_modulus", r.zero_modulus},
            {"center_index", r.center_index},
            {"slack", number(r.slack)},
            {"critical_points", to_json(r.critical)},
            {"distances", to_json(r.distances)},
            {"min_distance", number(r.min_distance)},
            {"within_slack", r.within_slack},
            {"projected_critical_points", to_json(r.projected_critical)},
            {"projected_distances", std::move(projected_distances)}};
}

Json to_json(const SearchReport& report, bool include_timing)
{
    Json counts = Json::object();
    for (const auto c : {Classification::HypothesesNotMet, Classification::Confirmed,
                         Classification::Counterexample})
        counts[std::string(to_string(c))] = report.count(c);
    counts["SOLVER_FAILURE"] = report.solver_failures;

    Json cexs = Json::array();
    for (const auto& c : report.counterexamples)
        cexs.push_back(to_json(c));

    Json edges = Json::array();
    for (const double e : margin_bin_edges)
        edges.push_back(e);
    Json hists = Json::object();
    for (const auto& [degree, hist] : report.margin_histograms)
        hists[std::to_string(degree)] = hist;

    Json j = {{"config", to_json(report.config)},
              {"config_hash", config_hash(report.config)},
              {"rng_algorithm", rng_algorithm},
              {"samples_run", report.samples_run},
              {"counts", std::move(counts)},
              {"counterexamples", std::move(cexs)},
              {"counterexamples_dropped", report.counterexamples_dropped()},
              {"margin_bin_edges", std::move(edges)},
              {"margin_histograms", std::move(hists)}};
    if (include_timing)
        j["wall_seconds"] = report.wall_seconds;
    return j;
}

std::string config_hash(const SearchConfig& config)
{
    return hex64(fnv1a(to_json(config).dump()));
}

Json make_report(std::string_view command, Json inputs, Json results, Json diagnostics)
{
    return {{"schema_version", schema_version},
            {"command", command},
            {"inputs", std::move(inputs)},
            {"results", std::move(results)},
            {"diagnostics", std::move(diagnostics)}};
}

std::string dump_canonical(const Json& doc)
{
    return doc.dump(2);
}

void append_counterexample_log(const std::filesystem::path& path, const SearchReport& report)
{
    std::ofstream out(path, std::ios::app);
    if (!out)
        throw Error("cannot open counterexample log " + path.string());
    const std::string hash = config_hash(report.config);
    for (const auto& c : report.counterexamples) {
        const Json line = {{"config_hash", hash}, {"roots", to_json(c.roots)}, {"verdict", to_json(c.verdict)}};
        out << line.dump() << '\n';
    }
}

} // namespace limpoly
