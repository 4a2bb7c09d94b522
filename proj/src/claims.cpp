#include "limpoly/claims.hpp"

#include "limpoly/error.hpp"
#include "limpoly/expansion.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace limpoly {

namespace {

// Least zero of a positive-real multiset and the product of the others.
struct MinZero {
    std::vector<double> a;
    std::size_t j = 0;
    double others = 1.0;
};

MinZero min_zero(const RootMultiset& roots)
{
    MinZero m;
    m.a = roots.positive_reals();
    if (m.a.size() < 2)
        throw DomainError("claim checks need degree n >= 2");
    m.j = static_cast<std::size_t>(std::min_element(m.a.begin(), m.a.end()) - m.a.begin());
    for (std::size_t i = 0; i < m.a.size(); ++i)
        if (i != m.j)
            m.others *= m.a[i];
    return m;
}

void require_positive(double value, const char* name)
{
    if (!(value > 0.0))
        throw DomainError(std::string(name) + " must be positive");
}

Check limited_quotient(const MinZero& m, double eps, const Tolerance& tol)
{
    return upper_bound_check("quotient_eps_limited", m.others, eps, tol);
}

double log_sum_exp(const std::vector<double>& logs)
{
    const double top = *std::max_element(logs.begin(), logs.end());
    double acc = 0.0;
    for (const double l : logs)
        acc += std::exp(l - top);
    return top + std::log(acc);
}

} // namespace

StirlingBound stirling_bound_compare(int n)
{
    if (n < 1 || n > 120)
        throw DomainError("stirling_bound_compare needs 1 <= n <= 120");
    std::vector<double> log_fact;
    std::vector<double> log_stir;
    const double log_sqrt_2pi = 0.5 * std::log(2.0 * std::numbers::pi);
    for (int k = 1; k <= n; ++k) {
        log_fact.push_back(std::lgamma(k + 1.0));
        log_stir.push_back(log_sqrt_2pi - k + (k + 0.5) * std::log(static_cast<double>(k)));
    }
    StirlingBound b;
    b.n = n;
    b.log_factorial_sum = log_sum_exp(log_fact);
    b.log_stirling_sum = log_sum_exp(log_stir);
    b.factorial_sum = std::exp(b.log_factorial_sum);
    b.stirling_sum = std::exp(b.log_stirling_sum);
    b.stirling_below = b.log_stirling_sum < b.log_factorial_sum;
    return b;
}

ClaimVerdict check_real_case(const RootMultiset& roots, const Tolerance& tol, double index_band,
                             const SolverOptions& solver)
{
    const MinZero m = min_zero(roots);
    if (index_band < 0.0)
        throw DomainError("index band must be nonnegative");

    const LocalExpansion exp = local_expansion_min(roots);
    Check index;
    index.name = "index_reciprocal";
    index.margin = std::numeric_limits<double>::infinity();
    for (int t = 1; t < exp.degree(); ++t) {
        const double target = 1.0 / t;
        const double allowed = index_band * (1.0 + target);
        index.margin = std::min(index.margin, allowed - std::abs(std::abs(exp.s(t)) - target));
    }
    index.met = index.margin >= 0.0;

    const CriticalSet crit = critical_points(from_roots(roots), solver);
    double max_dist = 0.0;
    for (const Complex b : crit.points)
        max_dist = std::max(max_dist, std::abs(b - m.a[m.j]));

    return make_verdict(ClaimId::RealCase, {upper_bound_check("quotient_one_limited", m.others, 1.0, tol), index},
                        upper_bound_check("critical_points_within_unit", max_dist, 1.0, tol),
                        {{"center", m.a[m.j]},
                         {"quotient_measure", m.others},
                         {"s_1", exp.s(1)},
                         {"max_distance", max_dist}});
}

ClaimVerdict check_basic_inequality(const RootMultiset& roots, double eps, const Tolerance& tol)
{
    const MinZero m = min_zero(roots);
    require_positive(eps, "epsilon");
    const int n = static_cast<int>(m.a.size());

    const MonicPolynomial p = from_roots(roots);
    const LocalExpansion exp = local_expansion_min(roots);
    const StirlingBound stir = stirling_bound_compare(n);

    double l_sum = 0.0;
    double a_sum = 0.0;
    double factorial = 1.0;
    bool indices_below_eps = true;
    for (int k = 1; k <= n; ++k) {
        factorial *= k;
        l_sum += std::abs(derivative_at_order(p, k, m.a[m.j]));
        a_sum += factorial * std::abs(exp.s(k));
        indices_below_eps = indices_below_eps && std::abs(exp.s(k)) < eps;
    }
    const double b_val = eps * stir.factorial_sum;
    const double c_val = eps * stir.stirling_sum;

    return make_verdict(ClaimId::BasicInequality, {limited_quotient(m, eps, tol)},
                        upper_bound_check("derivative_sum_below_bound", l_sum, c_val, tol),
                        {{"center", m.a[m.j]},
                         {"quotient_measure", m.others},
                         {"L", l_sum},
                         {"A", a_sum},
                         {"B", b_val},
                         {"C", c_val}},
                        {{"identity_L_equals_A", tol.close(l_sum, a_sum)},
                         {"indices_below_eps", indices_below_eps},
                         {"chain_A_below_B", a_sum < b_val},
                         {"chain_B_at_most_C", b_val <= c_val}});
}

ClaimVerdict check_squeeze(const RootMultiset& roots, double eps, double delta, const Tolerance& tol,
                           const SolverOptions& solver)
{
    const MinZero m = min_zero(roots);
    require_positive(eps, "epsilon");
    require_positive(delta, "delta");
    const int n = static_cast<int>(m.a.size());

    const MonicPolynomial p = from_roots(roots);
    double max_dist = 0.0;
    int worst_order = 1;
    for (int k = 1; k < n; ++k) {
        for (const Complex b : higher_derivative_zeros(p, k, solver).points) {
            const double d = std::abs(b - m.a[m.j]);
            if (d > max_dist) {
                max_dist = d;
                worst_order = k;
            }
        }
    }
    return make_verdict(ClaimId::Squeeze, {limited_quotient(m, eps, tol)},
                        upper_bound_check("derivative_zeros_within_delta", max_dist, delta, tol),
                        {{"center", m.a[m.j]},
                         {"quotient_measure", m.others},
                         {"max_distance", max_dist},
                         {"worst_order", worst_order}});
}

ClaimVerdict check_perm_sum_bound(const RootMultiset& roots, double eps, const Tolerance& tol)
{
    const MinZero m = min_zero(roots);
    require_positive(eps, "epsilon");

    const double aj = m.a[m.j];
    const Complex sum = permutation_sum_derivative(roots, aj);
    double product = 1.0;
    for (std::size_t i = 0; i < m.a.size(); ++i)
        if (i != m.j)
            product *= aj - m.a[i];
    const double bound = eps * std::sqrt(2.0 * std::numbers::pi) / std::numbers::e;

    return make_verdict(ClaimId::PermSumBound, {limited_quotient(m, eps, tol)},
                        upper_bound_check("derivative_at_center_below_bound", std::abs(sum), bound, tol),
                        {{"center", aj},
                         {"quotient_measure", m.others},
                         {"derivative_at_center", sum.real()},
                         {"bound", bound}},
                        {{"product_form_identity", tol.close(sum, Complex(product))}});
}

ClaimVerdict check_deriv_sum_bound(const RootMultiset& roots, double eps, const Tolerance& tol)
{
    const MinZero m = min_zero(roots);
    require_positive(eps, "epsilon");
    const int n = static_cast<int>(m.a.size());

    const Coeffs dp = derivative(from_roots(roots));
    double lhs = 0.0;
    for (int s = 0; s < n; ++s)
        lhs += std::abs(derivative_at_order(dp, s, m.a[m.j]));
    const double bound = eps * stirling_bound_compare(n).stirling_sum;

    return make_verdict(ClaimId::DerivSumBound, {limited_quotient(m, eps, tol)},
                        upper_bound_check("derivative_sum_below_bound", lhs, bound, tol),
                        {{"center", m.a[m.j]},
                         {"quotient_measure", m.others},
                         {"lhs", lhs},
                         {"bound", bound}});
}

} // namespace limpoly
