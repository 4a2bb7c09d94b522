#include "doctest.h"

#include "limpoly/error.hpp"
#include "limpoly/measure.hpp"
#include "test_support.hpp"

#include <numeric>

using namespace limpoly;
using limpoly::testing::Gen;
using limpoly::testing::rel_err;

TEST_CASE("measure is the product of moduli")
{
    CHECK(measure(RootMultiset{1.0, 2.0}) == 2.0);
    CHECK(measure(RootMultiset{Complex(0, 1), Complex(0, -1)}) == 1.0);
    CHECK(measure(RootMultiset{0.001, 0.001, 500.0}) == doctest::Approx(0.0005).epsilon(1e-14));
    CHECK(measure(RootMultiset{3.0, 0.0, 1e300}) == 0.0);
}

TEST_CASE("log-domain path survives extreme moduli")
{
    // 40 roots of 1e10: the linear product would overflow halfway.
    std::vector<Complex> big(40, Complex(1e10));
    big.push_back(Complex(1e-300));
    const double m = measure(RootMultiset(big));
    CHECK(std::isfinite(m));
    CHECK(rel_err(m, 1e100) < 1e-12);

    // n > 20 with ordinary moduli agrees with the direct product
    Gen gen(3);
    std::vector<double> r = gen.positive_roots(25, 0.5, 2.0);
    const double direct = std::accumulate(r.begin(), r.end(), 1.0, std::multiplies<>());
    CHECK(rel_err(measure(RootMultiset(r)), direct) < 1e-12);
}

TEST_CASE("is_epsilon_limited is strict")
{
    const Limitedness a = is_epsilon_limited(RootMultiset{0.5, 0.5}, 1.0);
    CHECK(a.is_limited);
    CHECK(a.measure == 0.25);

    CHECK_FALSE(is_epsilon_limited(RootMultiset{1.0, 2.0}, 2.0).is_limited);
    CHECK(is_epsilon_limited(RootMultiset{0.001, 500.0}, 1.0).is_limited);

    CHECK_THROWS_AS(is_epsilon_limited(RootMultiset{1.0}, 0.0), DomainError);
    CHECK_THROWS_AS(is_epsilon_limited(RootMultiset{1.0}, -1.0), DomainError);

    Gen gen(8);
    for (int i = 0; i < 1000; ++i) {
        const RootMultiset r(gen.positive_roots(gen.integer(1, 8)));
        CHECK_FALSE(is_epsilon_limited(r, measure(r)).is_limited);
    }
}

TEST_CASE("product proposition")
{
    const ClaimVerdict half = check_product_proposition(RootMultiset{0.5}, RootMultiset{0.5}, 1.0, 1.0);
    CHECK(half.quantity("measure_pq") == 0.25);
    // 0.5 and 0.5 coincide, so the zero sets are not disjoint
    CHECK_FALSE(half.hypothesis("disjoint_zero_sets").met);
    CHECK(half.conclusion.met);

    const ClaimVerdict v = check_product_proposition(RootMultiset{2.0}, RootMultiset{3.0}, 3.0, 4.0);
    CHECK(v.classification == Classification::Confirmed);
    CHECK(v.quantity("measure_pq") == 6.0);
    CHECK(v.quantity("eps_delta") == 12.0);
    CHECK(v.flag("measure_multiplicative"));

    const ClaimVerdict shared = check_product_proposition(RootMultiset{1.0}, RootMultiset{1.0}, 2.0, 2.0);
    CHECK(shared.classification == Classification::HypothesesNotMet);
    CHECK_FALSE(shared.hypothesis("disjoint_zero_sets").met);
    CHECK(shared.flag("measure_multiplicative"));

    CHECK_THROWS_AS(check_product_proposition(RootMultiset{1.0}, RootMultiset{2.0}, 0.0, 1.0), DomainError);
}

TEST_CASE("conjugate_roots")
{
    const RootMultiset r{Complex(0, 1), 2.0};
    const RootMultiset c = conjugate_roots(r);
    CHECK(c[0] == Complex(0, -1));
    CHECK(c[1] == Complex(2.0));
    CHECK(measure(c) == measure(r));

    const RootMultiset real{1.0, -4.0, 7.5};
    CHECK(conjugate_roots(real) == real);

    const RootMultiset one{Complex(1, 1)};
    CHECK(rel_err(measure(conjugate_roots(one)), std::sqrt(2.0)) < 1e-15);
}

TEST_CASE("rescale_roots")
{
    const std::vector<Complex> two{2.0, 2.0};
    const RootMultiset r = rescale_roots(RootMultiset{2.0, 2.0}, two);
    CHECK(r == RootMultiset{1.0, 1.0});
    CHECK(measure(r) == 1.0);

    const std::vector<Complex> three{3.0};
    CHECK(rescale_roots(RootMultiset{6.0}, three) == RootMultiset{2.0});

    const std::vector<Complex> unit{Complex(0, 1)};
    const RootMultiset rot = rescale_roots(RootMultiset{Complex(1, 1)}, unit);
    CHECK(std::abs(rot[0] - Complex(1, -1)) < 1e-15);
    CHECK(rel_err(measure(rot), std::sqrt(2.0)) < 1e-15);

    const std::vector<Complex> zero{1.0, 0.0};
    CHECK_THROWS_AS(rescale_roots(RootMultiset{1.0, 2.0}, zero), DomainError);
    CHECK_THROWS_AS(rescale_roots(RootMultiset{1.0, 2.0}, three), DomainError);
}

TEST_CASE("scalar_multiple_invariance")
{
    CHECK(scalar_multiple_invariance(RootMultiset{1.0, 2.0, 3.0}, 5.0));
    CHECK(scalar_multiple_invariance(RootMultiset{0.5, Complex(0, 2)}, -1.0));
    CHECK(scalar_multiple_invariance(RootMultiset{2.0, 3.0}, Complex(0, 1)));
    CHECK_THROWS_AS(scalar_multiple_invariance(RootMultiset{1.0}, 0.0), DomainError);
}

TEST_CASE("measure calculus properties")
{
    Gen gen(101);
    for (int trial = 0; trial < 2000; ++trial) {
        const RootMultiset a(gen.disk_roots(gen.integer(1, 10), 10.0));
        const RootMultiset b(gen.disk_roots(gen.integer(1, 10), 10.0));
        CHECK(rel_err(measure(concat(a, b)), measure(a) * measure(b)) <= 1e-12);
        CHECK(measure(conjugate_roots(a)) == measure(a));

        std::vector<Complex> lambdas;
        double lambda_prod = 1.0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            lambdas.push_back(gen.disk(3.0) + Complex(0.1, 0.0));
            lambda_prod *= std::abs(lambdas.back());
        }
        CHECK(rel_err(measure(rescale_roots(a, lambdas)) * lambda_prod, measure(a)) <= 1e-10);
    }
}
