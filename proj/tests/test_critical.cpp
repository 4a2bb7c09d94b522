#include "doctest.h"

#include "limpoly/critical.hpp"
#include "limpoly/error.hpp"
#include "test_support.hpp"

#include <numeric>

using namespace limpoly;
using limpoly::testing::Gen;
using limpoly::testing::rel_err;

namespace {

std::vector<double> sorted_real(const CriticalSet& cs)
{
    std::vector<double> out;
    for (const Complex b : cs.points)
        out.push_back(b.real());
    std::sort(out.begin(), out.end());
    return out;
}

// Same polynomial without its roots, which forces the simultaneous iteration.
MonicPolynomial coefficients_only(const RootMultiset& roots)
{
    return MonicPolynomial(from_roots(roots).coeffs());
}

} // namespace

TEST_CASE("critical points of (x-1)(x-2)(x-3)")
{
    const CriticalSet cs = critical_points(from_roots(RootMultiset{1.0, 2.0, 3.0}));
    CHECK(cs.method == CriticalMethod::InterlaceBisection);
    const auto b = sorted_real(cs);
    REQUIRE(b.size() == 2);
    CHECK(std::abs(b[0] - (2.0 - 1.0 / std::sqrt(3.0))) <= 1e-14);
    CHECK(std::abs(b[1] - (2.0 + 1.0 / std::sqrt(3.0))) <= 1e-14);
    CHECK(cs.max_residual() <= 1e-8);

    const CriticalSet viaiter = critical_points(coefficients_only(RootMultiset{1.0, 2.0, 3.0}));
    CHECK(viaiter.method == CriticalMethod::SimultaneousIteration);
    const auto c = sorted_real(viaiter);
    CHECK(std::abs(c[0] - 1.4226497308103742) <= 1e-12);
    CHECK(std::abs(c[1] - 2.5773502691896258) <= 1e-12);
}

TEST_CASE("repeated roots")
{
    const CriticalSet sq = critical_points(from_roots(RootMultiset{1.7, 1.7}));
    REQUIRE(sq.points.size() == 1);
    CHECK(sq.points[0] == Complex(1.7));

    const CriticalSet cs = critical_points(from_roots(RootMultiset{0.001, 0.001, 500.0}));
    const auto b = sorted_real(cs);
    REQUIRE(b.size() == 2);
    CHECK(b[0] == 0.001);
    CHECK(rel_err(b[1], 333.33366666666666667) <= 1e-14);

    // clustering merges roots closer than 1e-12
    const auto near = sorted_real(critical_points(from_roots(RootMultiset{2.0, 2.0 + 1e-14, 5.0})));
    REQUIRE(near.size() == 2);
    CHECK(near[0] == 2.0);
}

TEST_CASE("higher_derivative_zeros")
{
    const MonicPolynomial p = from_roots(RootMultiset{1.0, 2.0, 3.0});
    const CriticalSet second = higher_derivative_zeros(p, 2);
    REQUIRE(second.points.size() == 1);
    CHECK(std::abs(second.points[0] - Complex(2.0)) <= 1e-14);

    const CriticalSet iter = higher_derivative_zeros(coefficients_only(RootMultiset{1.0, 2.0, 3.0}), 2);
    CHECK(std::abs(iter.points[0] - Complex(2.0)) <= 1e-14);

    // last derivative vanishes at the centroid
    Gen gen(7);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = gen.integer(2, 9);
        const std::vector<double> a = gen.positive_roots(n, 0.1, 10.0);
        const double mean = std::accumulate(a.begin(), a.end(), 0.0) / n;
        const CriticalSet last = higher_derivative_zeros(from_roots(RootMultiset(a)), n - 1);
        REQUIRE(last.points.size() == 1);
        CHECK(rel_err(last.points[0].real(), mean) <= 1e-12);
    }

    for (int n = 2; n <= 7; ++n) {
        const MonicPolynomial power = from_roots(RootMultiset(std::vector<Complex>(static_cast<std::size_t>(n), 0.75)));
        for (int k = 1; k < n; ++k) {
            const CriticalSet z = higher_derivative_zeros(power, k);
            CHECK(z.points.size() == static_cast<std::size_t>(n - k));
            for (const Complex b : z.points)
                CHECK(b == Complex(0.75));
        }
    }

    CHECK_THROWS_AS(higher_derivative_zeros(p, 0), DomainError);
    CHECK_THROWS_AS(higher_derivative_zeros(p, 3), DomainError);
    CHECK_THROWS_AS(critical_points(from_roots(RootMultiset{1.0})), DomainError);
}

TEST_CASE("complex critical points")
{
    const CriticalSet quad = critical_points(from_roots(RootMultiset{0.5, Complex(0, 0.5)}));
    REQUIRE(quad.points.size() == 1);
    CHECK(std::abs(quad.points[0] - Complex(0.25, 0.25)) <= 1e-15);

    const CriticalSet fourth =
        critical_points(from_roots(RootMultiset{1.0, Complex(0, 1), -1.0, Complex(0, -1)}));
    REQUIRE(fourth.points.size() == 3);
    for (const Complex b : fourth.points)
        CHECK(std::abs(b) <= 1e-9);

    const Complex a(0.3, -1.2);
    const CriticalSet dbl = critical_points(from_roots(RootMultiset{a, a}));
    CHECK(std::abs(dbl.points[0] - a) <= 1e-15);
}

TEST_CASE("Gauss-Lucas, centroid and residuals on random complex sets")
{
    Gen gen(1234);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = gen.integer(2, 16);
        const std::vector<Complex> roots = gen.disk_roots(n, gen.log_uniform(0.1, 10.0));
        const CriticalSet cs = critical_points(from_roots(RootMultiset(roots)));
        REQUIRE(cs.points.size() == static_cast<std::size_t>(n - 1));
        CHECK(cs.max_residual() <= 1e-8);

        const auto hull = limpoly::testing::convex_hull(roots);
        double diameter = 0.0;
        for (const Complex x : roots)
            diameter = std::max(diameter, std::abs(x));
        for (const Complex b : cs.points)
            CHECK(limpoly::testing::distance_outside_hull(hull, b) <= 1e-8 * std::max(1.0, diameter));

        const Complex sum_roots = std::accumulate(roots.begin(), roots.end(), Complex(0.0));
        const Complex sum_crit = std::accumulate(cs.points.begin(), cs.points.end(), Complex(0.0));
        CHECK(std::abs(sum_crit - sum_roots * (n - 1.0) / double(n)) <= 1e-8 * std::max(1.0, std::abs(sum_roots)));
    }
}

TEST_CASE("interlacing for distinct real zeros")
{
    Gen gen(99);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = gen.integer(2, 16);
        std::vector<double> a = gen.positive_roots(n);
        const CriticalSet cs = critical_points(from_roots(RootMultiset(a)));
        std::sort(a.begin(), a.end());
        const auto b = sorted_real(cs);
        REQUIRE(b.size() == a.size() - 1);
        for (std::size_t i = 0; i < b.size(); ++i) {
            CHECK(a[i] < b[i]);
            CHECK(b[i] < a[i + 1]);
        }
    }
}

TEST_CASE("iteration budget exhaustion is reported")
{
    SolverOptions opts;
    opts.max_sweeps = 1;
    Gen gen(5);
    const MonicPolynomial p(from_roots(RootMultiset(gen.disk_roots(9, 3.0))).coeffs());
    try {
        (void)critical_points(p, opts);
        FAIL("expected ConvergenceError");
    } catch (const ConvergenceError& e) {
        CHECK(e.iterates().size() == 8);
        CHECK(e.residuals().size() == 8);
    }
}

TEST_CASE("sendov_distances")
{
    const RootMultiset r{1.0, 2.0, 3.0};
    const SendovTable t = sendov_distances(r, critical_points(from_roots(r)));
    CHECK(t.min_zero_index == 0);
    CHECK(std::abs(t.distances[0][0] - 0.42264973081037427) <= 1e-14);
    CHECK(std::abs(t.max_from_min_zero - 1.5773502691896258) <= 1e-14);
    CHECK(t.unit_disk_condition);

    for (const double a : {0.3, 7.0, 1234.5}) {
        const RootMultiset pair{a, a + 1.0};
        const SendovTable tp = sendov_distances(pair, critical_points(from_roots(pair)));
        CHECK(std::abs(tp.max_from_min_zero - 0.5) <= 1e-12);
    }

    const RootMultiset wide{0.001, 0.001, 500.0};
    const SendovTable tw = sendov_distances(wide, critical_points(from_roots(wide)));
    CHECK(std::abs(tw.max_from_min_zero - 333.33266666666666667) <= 1e-9);
    CHECK_FALSE(tw.unit_disk_condition);
}
