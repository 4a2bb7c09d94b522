#include "doctest.h"

#include "limpoly/error.hpp"
#include "limpoly/measure.hpp"
#include "limpoly/report.hpp"
#include "limpoly/search.hpp"
#include "test_support.hpp"

#include <filesystem>
#include <fstream>
#include <numeric>

using namespace limpoly;
using limpoly::testing::rel_err;

namespace {

SearchConfig squeeze_config()
{
    SearchConfig c;
    c.claim = ClaimId::Squeeze;
    c.degree_min = 3;
    c.degree_max = 3;
    c.samples = 2000;
    c.seed = 17;
    c.distribution = Distribution::log_uniform(1e-3, 1e3);
    c.epsilon_policy = EpsilonPolicy::parse("measure-times:1.01");
    c.delta = 1.0;
    return c;
}

std::uint64_t total(const SearchReport& r)
{
    return std::accumulate(r.counts.begin(), r.counts.end(), std::uint64_t{0}) + r.solver_failures;
}

} // namespace

TEST_CASE("generate_roots")
{
    SampleRng rng(1, 0);
    const RootMultiset ones = generate_roots(Distribution::uniform(1.0, 1.0), 3, rng);
    CHECK(ones == RootMultiset{1.0, 1.0, 1.0});

    for (std::uint64_t i = 0; i < 500; ++i) {
        SampleRng r(99, i);
        const RootMultiset disk = generate_roots(Distribution::complex_disk(1.0), 8, r);
        for (const Complex z : disk.values())
            CHECK(std::abs(z) <= 1.0);
        SampleRng u(99, i);
        const RootMultiset uni = generate_roots(Distribution::uniform(0.05, 0.5), 4, u);
        for (const Complex z : uni.values()) {
            CHECK(z.imag() == 0.0);
            CHECK(z.real() >= 0.05);
            CHECK(z.real() <= 0.5);
        }
    }

    // per-sample streams are reproducible and distinct
    SampleRng a(5, 3);
    SampleRng b(5, 3);
    SampleRng c(5, 4);
    const auto x = a.next();
    CHECK(x == b.next());
    CHECK(x != c.next());

    CHECK_THROWS_AS(generate_roots(Distribution::uniform(1.0, 2.0), 0, rng), DomainError);
}

TEST_CASE("log-uniform passes a Kolmogorov-Smirnov test")
{
    const double lo = 1e-3;
    const double hi = 1e3;
    std::vector<double> u;
    for (std::uint64_t i = 0; i < 10000; ++i) {
        SampleRng rng(2024, i);
        const double a = generate_roots(Distribution::log_uniform(lo, hi), 1, rng).values()[0].real();
        u.push_back((std::log(a) - std::log(lo)) / (std::log(hi) - std::log(lo)));
    }
    std::sort(u.begin(), u.end());
    double d = 0.0;
    const double n = static_cast<double>(u.size());
    for (std::size_t i = 0; i < u.size(); ++i)
        d = std::max({d, (i + 1) / n - u[i], u[i] - i / n});
    // 1% critical value
    CHECK(d < 1.63 / std::sqrt(n));
}

TEST_CASE("distribution and policy parsing")
{
    const Distribution u = Distribution::parse("uniform:0.05,0.5");
    CHECK(u.kind == Distribution::Kind::Uniform);
    CHECK(u.lo == 0.05);
    CHECK(u.hi == 0.5);
    CHECK(Distribution::parse("log-uniform:1e-3,1e3").kind == Distribution::Kind::LogUniform);
    CHECK(Distribution::parse("disk:2").radius == 2.0);
    CHECK(Distribution::parse(u.to_string()).hi == 0.5);
    CHECK_THROWS_AS(Distribution::parse("uniform:2,1"), DomainError);
    CHECK_THROWS_AS(Distribution::parse("uniform:0,1"), DomainError);
    CHECK_THROWS_AS(Distribution::parse("gauss:1,2"), DomainError);
    CHECK_THROWS_AS(Distribution::parse("disk:-1"), DomainError);

    CHECK(EpsilonPolicy::parse("fixed:2.5").kind == EpsilonPolicy::Kind::Fixed);
    CHECK(EpsilonPolicy::parse("measure-times:1.01").value == 1.01);
    CHECK_THROWS_AS(EpsilonPolicy::parse("fixed:-1"), DomainError);
    CHECK_THROWS_AS(EpsilonPolicy::parse("sometimes"), DomainError);
}

TEST_CASE("config validation")
{
    SearchConfig c = squeeze_config();
    c.samples = 0;
    CHECK_THROWS_AS(run_search(c), DomainError);

    c = squeeze_config();
    c.degree_min = 1;
    CHECK_THROWS_AS(c.validate(), DomainError);

    c = squeeze_config();
    c.degree_min = 5;
    c.degree_max = 4;
    CHECK_THROWS_AS(c.validate(), DomainError);

    c = squeeze_config();
    c.distribution = Distribution::complex_disk(1.0);
    CHECK_THROWS_AS(c.validate(), DomainError);
    c.claim = ClaimId::ProductProp;
    CHECK_NOTHROW(c.validate());
}

TEST_CASE("squeeze sweep finds the tiny-tiny-huge family")
{
    const SearchReport r = run_search(squeeze_config());
    CHECK(r.count(Classification::Counterexample) >= 1);
    CHECK(r.count(Classification::HypothesesNotMet) == 0);
    CHECK(total(r) == r.config.samples);
    CHECK(r.samples_run == r.config.samples);
    REQUIRE_FALSE(r.counterexamples.empty());
    CHECK(r.counterexamples.size() <= r.config.counterexample_cap);
    for (const Counterexample& cex : r.counterexamples) {
        CHECK(cex.verdict.classification == Classification::Counterexample);
        CHECK(cex.hash == instance_hash(cex.roots));
        CHECK(cex.verdict.quantity("max_distance") >= 1.0);
    }
    for (std::size_t i = 1; i < r.counterexamples.size(); ++i)
        CHECK(r.counterexamples[i - 1].hash <= r.counterexamples[i].hash);
    std::uint64_t hist = 0;
    for (const auto& [deg, h] : r.margin_histograms) {
        CHECK(deg == 3);
        hist += std::accumulate(h.begin(), h.end(), std::uint64_t{0});
    }
    CHECK(hist == r.count(Classification::Confirmed) + r.count(Classification::Counterexample));
}

TEST_CASE("index bound sweep over small uniform roots")
{
    SearchConfig c;
    c.claim = ClaimId::IndexBound;
    c.degree_min = c.degree_max = 3;
    c.samples = 1000;
    c.seed = 3;
    c.distribution = Distribution::uniform(0.05, 0.5);
    const SearchReport r = run_search(c);
    CHECK(r.count(Classification::Counterexample) > 0);
    CHECK(total(r) == 1000);
}

TEST_CASE("every claim sweeps with complete buckets")
{
    for (const ClaimId id : all_claims) {
        SearchConfig c;
        c.claim = id;
        c.degree_min = 2;
        c.degree_max = 6;
        c.samples = 200;
        c.seed = 11;
        c.distribution = id == ClaimId::ProductProp ? Distribution::complex_disk(1.5)
                                                    : Distribution::log_uniform(1e-2, 1e2);
        const SearchReport r = run_search(c);
        CHECK(total(r) == 200);
        CHECK(r.samples_run == 200);
    }
}

TEST_CASE("determinism and shard merging")
{
    SearchConfig c = squeeze_config();
    c.degree_min = 2;
    c.degree_max = 7;
    c.samples = 1500;
    c.counterexample_cap = 10;

    const SearchReport one = run_search(c);
    const std::string text = dump_canonical(to_json(one));
    CHECK(text == dump_canonical(to_json(run_search(c))));

    for (const unsigned shards : {2u, 3u, 7u}) {
        SearchReport merged = run_search_shard(c, 0, shards);
        for (unsigned s = 1; s < shards; ++s)
            merged = merge_reports(merged, run_search_shard(c, s, shards));
        CHECK(dump_canonical(to_json(merged)) == text);
        CHECK(dump_canonical(to_json(run_search_parallel(c, shards))) == text);
    }

    // associativity and commutativity at the report level
    const SearchReport a = run_search_shard(c, 0, 3);
    const SearchReport b = run_search_shard(c, 1, 3);
    const SearchReport d = run_search_shard(c, 2, 3);
    const std::string left = dump_canonical(to_json(merge_reports(merge_reports(a, b), d)));
    const std::string right = dump_canonical(to_json(merge_reports(a, merge_reports(d, b))));
    CHECK(left == right);

    CHECK(one.counterexamples.size() <= 10);
    CHECK(one.counterexamples_dropped() + one.counterexamples.size() == one.count(Classification::Counterexample));

    SearchConfig other = c;
    other.seed = c.seed + 1;
    CHECK(dump_canonical(to_json(run_search(other))) != text);
}

TEST_CASE("report json carries the generator id and no timing by default")
{
    SearchConfig c = squeeze_config();
    c.samples = 50;
    SearchReport r = run_search(c);
    const Json j = to_json(r);
    CHECK(j.dump().find(std::string(rng_algorithm)) != std::string::npos);
    CHECK(j.dump().find("wall_seconds") == std::string::npos);
    CHECK(to_json(r, true).dump().find("wall_seconds") != std::string::npos);
    CHECK(config_hash(c).size() == 16);
    CHECK(config_hash(c) == config_hash(r.config));
}

TEST_CASE("margin bins")
{
    CHECK(margin_bin(-1e9) == 0);
    CHECK(margin_bin(-1e3) == 1);
    CHECK(margin_bin(-0.5) == 2);
    CHECK(margin_bin(0.0) == 5);
    CHECK(margin_bin(-1e-300) == 4);
    CHECK(margin_bin(5e3) == 9);
}

TEST_CASE("modulus_projection")
{
    CHECK(modulus_projection(RootMultiset{Complex(0, 1), Complex(0, -1)}) == RootMultiset{1.0, 1.0});
    CHECK(modulus_projection(RootMultiset{Complex(3, 4)}) == RootMultiset{5.0});
    const RootMultiset mixed{Complex(1, 1), 2.0};
    const RootMultiset proj = modulus_projection(mixed);
    CHECK(std::abs(proj.values()[0].real() - std::sqrt(2.0)) <= 1e-15);
    CHECK(rel_err(measure(proj), 2.0 * std::sqrt(2.0)) <= 1e-15);
    CHECK(rel_err(measure(mixed), measure(proj)) <= 1e-12);

    limpoly::testing::Gen gen(77);
    for (int t = 0; t < 1000; ++t) {
        const RootMultiset r(gen.disk_roots(gen.integer(1, 30), gen.log_uniform(1e-2, 1e2)));
        CHECK(rel_err(measure(r), measure(modulus_projection(r))) <= 1e-12);
    }
}

TEST_CASE("complex_pullback_check")
{
    const PullbackReport half = complex_pullback_check(RootMultiset{0.5, Complex(0, 0.5)}, 0.0);
    REQUIRE(half.critical.points.size() == 1);
    CHECK(std::abs(half.min_distance - 0.35355339059327376) <= 1e-12);
    CHECK(half.within_slack);

    const Complex a(-0.4, 0.9);
    const PullbackReport dbl = complex_pullback_check(RootMultiset{a, a}, 0.0);
    CHECK(dbl.min_distance <= 1e-15);

    const PullbackReport quartic =
        complex_pullback_check(RootMultiset{1.0, Complex(0, 1), -1.0, Complex(0, -1)}, 1e-6);
    CHECK(std::abs(quartic.min_distance - 1.0) <= 1e-8);
    CHECK(quartic.within_slack);
    CHECK_FALSE(complex_pullback_check(RootMultiset{1.0, Complex(0, 1), -1.0, Complex(0, -1)}, 0.0)
                    .projected_distances.empty());

    const PullbackReport zero = complex_pullback_check(RootMultiset{0.0, Complex(1, 1)}, 0.0);
    CHECK(zero.zero_modulus);

    CHECK_THROWS_AS(complex_pullback_check(RootMultiset{Complex(1, 1)}, 0.0), DomainError);
}

TEST_CASE("counterexample log is one json object per line")
{
    SearchConfig c = squeeze_config();
    c.samples = 3000;
    c.counterexample_cap = 5;
    const SearchReport r = run_search(c);
    REQUIRE_FALSE(r.counterexamples.empty());

    const auto path = std::filesystem::temp_directory_path() / "limpoly_test_cex.ndjson";
    std::filesystem::remove(path);
    append_counterexample_log(path, r);
    append_counterexample_log(path, r);

    std::ifstream in(path);
    std::string line;
    std::size_t lines = 0;
    while (std::getline(in, line)) {
        const Json j = Json::parse(line);
        CHECK(j.at("config_hash") == config_hash(c));
        CHECK(j.at("verdict").at("classification") == "COUNTEREXAMPLE");
        CHECK(j.at("roots").is_array());
        ++lines;
    }
    CHECK(lines == 2 * r.counterexamples.size());
    std::filesystem::remove(path);
}
