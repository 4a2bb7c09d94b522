#pragma once

#include "limpoly/critical.hpp"
#include "limpoly/poly.hpp"
#include "limpoly/verdict.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace limpoly {

/// Root distribution for randomized instances.
struct Distribution {
    enum class Kind { Uniform, LogUniform, ComplexDisk };

    Kind kind = Kind::LogUniform;
    double lo = 1e-3;
    double hi = 1e3;
    /// Radius for ComplexDisk.
    double radius = 1.0;

    static Distribution uniform(double lo, double hi);
    static Distribution log_uniform(double lo, double hi);
    static Distribution complex_disk(double radius);

    /// "uniform:lo,hi", "loguniform:lo,hi" (also "log-uniform:"), "disk:r".
    /// Throws DomainError on malformed text or bounds.
    static Distribution parse(std::string_view text);
    std::string to_string() const;

    /// Throws DomainError on lo <= 0, hi < lo or radius <= 0.
    void validate() const;
    bool is_real() const noexcept { return kind != Kind::ComplexDisk; }
};

/// How eps is chosen per instance.
struct EpsilonPolicy {
    enum class Kind { Fixed, MeasureTimes };

    Kind kind = Kind::MeasureTimes;
    double value = 1.01;

    /// "fixed:v" or "measure-times:f".
    static EpsilonPolicy parse(std::string_view text);
    std::string to_string() const;
};

struct SearchConfig {
    ClaimId claim = ClaimId::Squeeze;
    int degree_min = 3;
    int degree_max = 3;
    std::uint64_t samples = 1000;
    std::uint64_t seed = 0;
    Distribution distribution;
    EpsilonPolicy epsilon_policy;
    /// Distance threshold for SQUEEZE.
    double delta = 1.0;
    Tolerance tolerance;
    /// Band for the REAL_CASE index hypothesis.
    double index_band = 1e-9;
    std::size_t counterexample_cap = 100;

    /// Throws DomainError when an invariant is violated (degree_min < 2,
    /// samples == 0, complex roots for a positive-real claim, ...).
    void validate() const;
};

/// Name of the generator embedded in every report: a per-sample mt19937_64
/// stream seeded with splitmix64(seed + (index + 1) * golden_gamma).
inline constexpr std::string_view rng_algorithm = "mt19937_64/splitmix64-per-sample/v1";

/// Deterministic generator for one sample; u01() draws from [0, 1) with 53 bits.
class SampleRng {
public:
    SampleRng(std::uint64_t seed, std::uint64_t sample_index);

    std::uint64_t next() { return engine_(); }
    double u01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// n independent draws. Throws DomainError for n < 1 or a malformed distribution.
RootMultiset generate_roots(const Distribution& dist, int n, SampleRng& rng);

/// FNV-1a over the bit patterns of the roots.
std::uint64_t instance_hash(const RootMultiset& roots) noexcept;

/// Runs the configured claim on one instance (eps resolved per policy).
ClaimVerdict run_claim(const SearchConfig& config, const RootMultiset& roots);

struct Counterexample {
    std::uint64_t sample_index = 0;
    std::uint64_t hash = 0;
    RootMultiset roots{Complex(1.0)};
    ClaimVerdict verdict;
};

/// Conclusion-margin histogram bin edges; bin b holds margins in [edge[b-1], edge[b]).
inline constexpr std::array<double, 9> margin_bin_edges{-1e3, -1.0, -1e-3, -1e-6, 0.0,
                                                        1e-6, 1e-3, 1.0, 1e3};
using MarginHistogram = std::array<std::uint64_t, margin_bin_edges.size() + 1>;

std::size_t margin_bin(double margin) noexcept;

struct SearchReport {
    SearchConfig config;
    std::uint64_t samples_run = 0;
    std::array<std::uint64_t, 3> counts{};
    std::uint64_t solver_failures = 0;
    /// The counterexample_cap entries with the smallest (hash, sample_index).
    std::vector<Counterexample> counterexamples;
    std::map<int, MarginHistogram> margin_histograms;
    double wall_seconds = 0.0;

    std::uint64_t count(Classification c) const { return counts[static_cast<std::size_t>(c)]; }
    /// Counterexamples found but not stored because of the cap.
    std::uint64_t counterexamples_dropped() const
    {
        return count(Classification::Counterexample) - counterexamples.size();
    }
};

/// Single-shot sweep over all samples.
SearchReport run_search(const SearchConfig& config);

/// Samples i with i % shard_count == shard_index.
SearchReport run_search_shard(const SearchConfig& config, std::uint64_t shard_index,
                              std::uint64_t shard_count);

/// Runs shard_count shards concurrently and merges them.
SearchReport run_search_parallel(const SearchConfig& config, unsigned shard_count);

/// Associative, commutative merge of two reports of the same config.
SearchReport merge_reports(const SearchReport& a, const SearchReport& b);

/// |a_i| entrywise. The measure is unchanged.
RootMultiset modulus_projection(const RootMultiset& complex_roots);

/// Diagnostic comparison of the true critical points of P with those of the
/// projected R(x) = prod (x - |a_i|), centered at the zero a_j of least modulus.
struct PullbackReport {
    RootMultiset roots{Complex(1.0)};
    RootMultiset projected{Complex(1.0)};
    /// Some |a_i| == 0, so R has a zero that is not positive.
    bool zero_modulus = false;
    std::size_t center_index = 0;
    double slack = 0.0;

    CriticalSet critical;
    /// |a_i - b_k| for the true critical points.
    SendovTable distances;
    /// min_k |b_k - a_j|
    double min_distance = 0.0;
    /// min_distance < 1 + slack
    bool within_slack = false;

    CriticalSet projected_critical;
    /// |c_k - |a_j|| for the critical points c_k of R.
    std::vector<double> projected_distances;
};

/// Requires n >= 2; solver failures propagate as ConvergenceError.
PullbackReport complex_pullback_check(const RootMultiset& complex_roots, double slack,
                                      const SolverOptions& solver = {});

} // namespace limpoly
