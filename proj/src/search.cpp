#include "limpoly/search.hpp"

#include "limpoly/claims.hpp"
#include "limpoly/error.hpp"
#include "limpoly/expansion.hpp"
#include "limpoly/measure.hpp"
#include "limpoly/parse.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <future>
#include <limits>
#include <numbers>
#include <sstream>

namespace limpoly {

namespace {

constexpr std::uint64_t golden_gamma = 0x9E3779B97F4A7C15ULL;

std::pair<std::string_view, std::string_view> split_kind(std::string_view text)
{
    const std::size_t colon = text.find(':');
    if (colon == std::string_view::npos)
        throw DomainError("expected kind:parameters, got '" + std::string(text) + "'");
    return {text.substr(0, colon), text.substr(colon + 1)};
}

std::string format_double(double v)
{
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

bool needs_positive_reals(ClaimId id)
{
    return id != ClaimId::ProductProp;
}

// Least zero by modulus (ties: first), and the product of the other moduli.
double others_measure(const RootMultiset& roots)
{
    std::size_t j = 0;
    for (std::size_t i = 1; i < roots.size(); ++i)
        if (std::abs(roots[i]) < std::abs(roots[j]))
            j = i;
    double prod = 1.0;
    for (std::size_t i = 0; i < roots.size(); ++i)
        if (i != j)
            prod *= std::abs(roots[i]);
    return prod;
}

double resolve_eps(const EpsilonPolicy& policy, double reference)
{
    if (policy.kind == EpsilonPolicy::Kind::Fixed)
        return policy.value;
    return policy.value * reference;
}

void record(SearchReport& report, std::uint64_t index, int degree, const RootMultiset& roots,
            const SearchConfig& config)
{
    ++report.samples_run;
    ClaimVerdict verdict;
    try {
        verdict = run_claim(config, roots);
    } catch (const Error&) {
        ++report.solver_failures;
        return;
    }
    if (std::isnan(verdict.conclusion.margin)) {
        ++report.solver_failures;
        return;
    }
    ++report.counts[static_cast<std::size_t>(verdict.classification)];
    auto& hist = report.margin_histograms[degree];
    ++hist[margin_bin(verdict.conclusion.margin)];
    if (verdict.classification == Classification::Counterexample)
        report.counterexamples.push_back({index, instance_hash(roots), roots, std::move(verdict)});
}

void normalize_counterexamples(std::vector<Counterexample>& list, std::size_t cap)
{
    std::sort(list.begin(), list.end(), [](const Counterexample& a, const Counterexample& b) {
        return std::tie(a.hash, a.sample_index) < std::tie(b.hash, b.sample_index);
    });
    if (list.size() > cap)
        list.resize(cap);
}

} // namespace

Distribution Distribution::uniform(double lo, double hi)
{
    Distribution d;
    d.kind = Kind::Uniform;
    d.lo = lo;
    d.hi = hi;
    d.validate();
    return d;
}

Distribution Distribution::log_uniform(double lo, double hi)
{
    Distribution d = uniform(lo, hi);
    d.kind = Kind::LogUniform;
    return d;
}

Distribution Distribution::complex_disk(double radius)
{
    Distribution d;
    d.kind = Kind::ComplexDisk;
    d.radius = radius;
    d.validate();
    return d;
}

Distribution Distribution::parse(std::string_view text)
{
    const auto [kind, params] = split_kind(text);
    if (kind == "disk" || kind == "complex-disk") {
        return complex_disk(parse_double(params));
    }
    const std::vector<double> bounds = parse_double_list(params);
    if (bounds.size() != 2)
        throw DomainError("distribution '" + std::string(text) + "' needs two bounds lo,hi");
    if (kind == "uniform")
        return uniform(bounds[0], bounds[1]);
    if (kind == "loguniform" || kind == "log-uniform")
        return log_uniform(bounds[0], bounds[1]);
    throw DomainError("unknown distribution '" + std::string(kind) +
                      "' (expected uniform, loguniform or disk)");
}

std::string Distribution::to_string() const
{
    switch (kind) {
    case Kind::Uniform: return "uniform:" + format_double(lo) + "," + format_double(hi);
    case Kind::LogUniform: return "loguniform:" + format_double(lo) + "," + format_double(hi);
    case Kind::ComplexDisk: return "disk:" + format_double(radius);
    }
    return {};
}

void Distribution::validate() const
{
    if (kind == Kind::ComplexDisk) {
        if (!(radius > 0.0) || !std::isfinite(radius))
            throw DomainError("disk radius must be positive and finite");
        return;
    }
    if (!(lo > 0.0) || !std::isfinite(hi) || !(hi >= lo))
        throw DomainError("real distributions need 0 < lo <= hi");
}

EpsilonPolicy EpsilonPolicy::parse(std::string_view text)
{
    const auto [kind, param] = split_kind(text);
    EpsilonPolicy p;
    p.value = parse_double(param);
    if (!(p.value > 0.0))
        throw DomainError("epsilon policy parameter must be positive");
    if (kind == "fixed")
        p.kind = Kind::Fixed;
    else if (kind == "measure-times")
        p.kind = Kind::MeasureTimes;
    else
        throw DomainError("unknown epsilon policy '" + std::string(kind) +
                          "' (expected fixed or measure-times)");
    return p;
}

std::string EpsilonPolicy::to_string() const
{
    return (kind == Kind::Fixed ? "fixed:" : "measure-times:") + format_double(value);
}

void SearchConfig::validate() const
{
    if (degree_min < 2)
        throw DomainError("degree_min must be at least 2");
    if (degree_max < degree_min)
        throw DomainError("degree_max must be >= degree_min");
    if (degree_max > 32)
        throw DomainError("degree_max must be at most 32");
    if (samples < 1)
        throw DomainError("samples must be at least 1");
    distribution.validate();
    if (!(epsilon_policy.value > 0.0))
        throw DomainError("epsilon policy parameter must be positive");
    if (!(delta > 0.0))
        throw DomainError("delta must be positive");
    if (index_band < 0.0)
        throw DomainError("index band must be nonnegative");
    if (needs_positive_reals(claim) && !distribution.is_real())
        throw DomainError(std::string(limpoly::to_string(claim)) +
                          " needs positive real roots; use a uniform or loguniform distribution");
}

std::uint64_t splitmix64(std::uint64_t x) noexcept
{
    x += golden_gamma;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

SampleRng::SampleRng(std::uint64_t seed, std::uint64_t sample_index)
    : engine_(splitmix64(seed + (sample_index + 1) * golden_gamma))
{
}

RootMultiset generate_roots(const Distribution& dist, int n, SampleRng& rng)
{
    if (n < 1)
        throw DomainError("generate_roots needs n >= 1");
    dist.validate();
    std::vector<Complex> roots;
    roots.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        switch (dist.kind) {
        case Distribution::Kind::Uniform:
            roots.emplace_back(dist.lo + (dist.hi - dist.lo) * rng.u01(), 0.0);
            break;
        case Distribution::Kind::LogUniform: {
            const double llo = std::log(dist.lo);
            const double lhi = std::log(dist.hi);
            roots.emplace_back(std::exp(llo + (lhi - llo) * rng.u01()), 0.0);
            break;
        }
        case Distribution::Kind::ComplexDisk: {
            const double rho = dist.radius * std::sqrt(rng.u01());
            const double theta = 2.0 * std::numbers::pi * rng.u01();
            roots.push_back(std::polar(rho, theta));
            break;
        }
        }
    }
    return RootMultiset(std::move(roots));
}

std::uint64_t instance_hash(const RootMultiset& roots) noexcept
{
    std::uint64_t h = 0xCBF29CE484222325ULL;
    auto mix = [&h](double v) {
        const auto bits = std::bit_cast<std::uint64_t>(v);
        for (int b = 0; b < 64; b += 8) {
            h ^= (bits >> b) & 0xFF;
            h *= 0x100000001B3ULL;
        }
    };
    for (const Complex a : roots) {
        mix(a.real());
        mix(a.imag());
    }
    return h;
}

ClaimVerdict run_claim(const SearchConfig& config, const RootMultiset& roots)
{
    const Tolerance& tol = config.tolerance;
    switch (config.claim) {
    case ClaimId::RealCase:
        return check_real_case(roots, tol, config.index_band);
    case ClaimId::IndexBound:
        return check_index_bound(roots, tol);
    case ClaimId::BasicInequality:
        return check_basic_inequality(roots, resolve_eps(config.epsilon_policy, others_measure(roots)), tol);
    case ClaimId::Squeeze:
        return check_squeeze(roots, resolve_eps(config.epsilon_policy, others_measure(roots)),
                             config.delta, tol);
    case ClaimId::PermSumBound:
        return check_perm_sum_bound(roots, resolve_eps(config.epsilon_policy, others_measure(roots)), tol);
    case ClaimId::DerivSumBound:
        return check_deriv_sum_bound(roots, resolve_eps(config.epsilon_policy, others_measure(roots)), tol);
    case ClaimId::ProductProp: {
        // First ceil(n/2) zeros form P, the rest Q.
        const auto& v = roots.values();
        const auto mid = v.begin() + static_cast<std::ptrdiff_t>((v.size() + 1) / 2);
        const RootMultiset p(std::vector<Complex>(v.begin(), mid));
        const RootMultiset q(std::vector<Complex>(mid, v.end()));
        return check_product_proposition(p, q, resolve_eps(config.epsilon_policy, measure(p)),
                                         resolve_eps(config.epsilon_policy, measure(q)), tol);
    }
    }
    throw DomainError("unknown claim");
}

std::size_t margin_bin(double margin) noexcept
{
    return static_cast<std::size_t>(
        std::upper_bound(margin_bin_edges.begin(), margin_bin_edges.end(), margin) -
        margin_bin_edges.begin());
}

SearchReport run_search_shard(const SearchConfig& config, std::uint64_t shard_index,
                              std::uint64_t shard_count)
{
    config.validate();
    if (shard_count == 0 || shard_index >= shard_count)
        throw DomainError("shard index must be below shard count");

    const auto start = std::chrono::steady_clock::now();
    SearchReport report;
    report.config = config;
    const auto span = static_cast<std::uint64_t>(config.degree_max - config.degree_min + 1);
    for (std::uint64_t i = shard_index; i < config.samples; i += shard_count) {
        SampleRng rng(config.seed, i);
        const int degree = config.degree_min + static_cast<int>(rng.next() % span);
        const RootMultiset roots = generate_roots(config.distribution, degree, rng);
        record(report, i, degree, roots, config);
        // keep memory bounded on long sweeps
        if (report.counterexamples.size() > 2 * config.counterexample_cap + 64)
            normalize_counterexamples(report.counterexamples, config.counterexample_cap);
    }
    normalize_counterexamples(report.counterexamples, config.counterexample_cap);
    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

SearchReport run_search(const SearchConfig& config)
{
    return run_search_shard(config, 0, 1);
}

SearchReport run_search_parallel(const SearchConfig& config, unsigned shard_count)
{
    if (shard_count <= 1)
        return run_search(config);
    config.validate();
    const auto start = std::chrono::steady_clock::now();
    std::vector<std::future<SearchReport>> shards;
    for (unsigned s = 0; s < shard_count; ++s)
        shards.push_back(std::async(std::launch::async, run_search_shard, std::cref(config), s,
                                    shard_count));
    SearchReport merged = shards.front().get();
    for (std::size_t s = 1; s < shards.size(); ++s)
        merged = merge_reports(merged, shards[s].get());
    merged.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return merged;
}

SearchReport merge_reports(const SearchReport& a, const SearchReport& b)
{
    SearchReport out = a;
    out.samples_run += b.samples_run;
    for (std::size_t c = 0; c < out.counts.size(); ++c)
        out.counts[c] += b.counts[c];
    out.solver_failures += b.solver_failures;
    out.counterexamples.insert(out.counterexamples.end(), b.counterexamples.begin(),
                               b.counterexamples.end());
    normalize_counterexamples(out.counterexamples, out.config.counterexample_cap);
    for (const auto& [degree, hist] : b.margin_histograms) {
        auto& dst = out.margin_histograms[degree];
        for (std::size_t i = 0; i < hist.size(); ++i)
            dst[i] += hist[i];
    }
    out.wall_seconds = std::max(a.wall_seconds, b.wall_seconds);
    return out;
}

RootMultiset modulus_projection(const RootMultiset& complex_roots)
{
    std::vector<Complex> out;
    out.reserve(complex_roots.size());
    for (const Complex a : complex_roots)
        out.emplace_back(std::abs(a), 0.0);
    return RootMultiset(std::move(out));
}

PullbackReport complex_pullback_check(const RootMultiset& complex_roots, double slack,
                                      const SolverOptions& solver)
{
    if (complex_roots.size() < 2)
        throw DomainError("complex_pullback_check needs degree n >= 2");
    if (!(slack >= 0.0))
        throw DomainError("slack must be nonnegative");

    PullbackReport r;
    r.roots = complex_roots;
    r.projected = modulus_projection(complex_roots);
    r.slack = slack;
    for (const Complex a : r.projected)
        r.zero_modulus = r.zero_modulus || a.real() == 0.0;

    r.critical = critical_points(from_roots(complex_roots), solver);
    r.distances = sendov_distances(complex_roots, r.critical);
    r.center_index = r.distances.min_zero_index;
    const Complex aj = complex_roots[r.center_index];
    r.min_distance = std::numeric_limits<double>::infinity();
    for (const Complex b : r.critical.points)
        r.min_distance = std::min(r.min_distance, std::abs(b - aj));
    r.within_slack = r.min_distance < 1.0 + slack;

    r.projected_critical = critical_points(from_roots(r.projected), solver);
    const double center = r.projected[r.center_index].real();
    for (const Complex c : r.projected_critical.points)
        r.projected_distances.push_back(std::abs(c - center));
    return r;
}

} // namespace limpoly
