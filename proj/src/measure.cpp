#include "limpoly/measure.hpp"

#include "limpoly/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace limpoly {

namespace {

constexpr std::size_t log_domain_degree = 20;
constexpr double linear_lo = 1e-6;
constexpr double linear_hi = 1e6;

} // namespace

double measure(const RootMultiset& roots)
{
    bool use_log = roots.size() > log_domain_degree;
    for (const Complex a : roots) {
        const double m = std::abs(a);
        if (m == 0.0)
            return 0.0;
        if (m < linear_lo || m > linear_hi)
            use_log = true;
    }
    if (!use_log) {
        double prod = 1.0;
        for (const Complex a : roots)
            prod *= std::abs(a);
        return prod;
    }
    double log_sum = 0.0;
    for (const Complex a : roots)
        log_sum += std::log(std::abs(a));
    return std::exp(log_sum);
}

Limitedness is_epsilon_limited(const RootMultiset& roots, double eps)
{
    if (!(eps > 0.0))
        throw DomainError("epsilon must be positive");
    Limitedness l;
    l.measure = measure(roots);
    l.epsilon = eps;
    l.is_limited = l.measure < eps;
    return l;
}

RootMultiset conjugate_roots(const RootMultiset& roots)
{
    std::vector<Complex> out;
    out.reserve(roots.size());
    for (const Complex a : roots)
        out.push_back(std::conj(a));
    return RootMultiset(std::move(out));
}

RootMultiset rescale_roots(const RootMultiset& roots, std::span<const Complex> lambdas)
{
    if (lambdas.size() != roots.size())
        throw DomainError("rescale_roots needs one lambda per root");
    std::vector<Complex> out;
    out.reserve(roots.size());
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (lambdas[i] == Complex(0.0))
            throw DomainError("rescale_roots: lambda #" + std::to_string(i + 1) + " is zero");
        out.push_back(roots[i] / lambdas[i]);
    }
    return RootMultiset(std::move(out));
}

bool scalar_multiple_invariance(const RootMultiset& roots, Complex lambda)
{
    if (lambda == Complex(0.0))
        throw DomainError("scaling by zero does not give a polynomial of the same degree");
    // lambda * P normalizes back to P, so it has the same zeros and the same measure.
    const MonicPolynomial p = from_roots(roots);
    Coeffs scaled = p.coeffs();
    for (auto& c : scaled)
        c *= lambda;
    const MonicPolynomial renormalized = MonicPolynomial::normalized(scaled);
    const Tolerance tol;
    for (std::size_t k = 0; k < scaled.size(); ++k)
        if (!tol.close(renormalized.coeffs()[k], p.coeffs()[k]))
            return false;
    return true;
}

RootMultiset concat(const RootMultiset& p, const RootMultiset& q)
{
    std::vector<Complex> out(p.begin(), p.end());
    out.insert(out.end(), q.begin(), q.end());
    return RootMultiset(std::move(out));
}

ClaimVerdict check_product_proposition(const RootMultiset& p_roots, const RootMultiset& q_roots,
                                       double eps, double delta, const Tolerance& tol)
{
    if (!(eps > 0.0) || !(delta > 0.0))
        throw DomainError("epsilon and delta must be positive");

    const double mp = measure(p_roots);
    const double mq = measure(q_roots);
    const double mpq = measure(concat(p_roots, q_roots));

    double separation = std::numeric_limits<double>::infinity();
    for (const Complex a : p_roots)
        for (const Complex b : q_roots)
            separation = std::min(separation, std::abs(a - b));

    Check disjoint;
    disjoint.name = "disjoint_zero_sets";
    disjoint.met = separation > 0.0;
    disjoint.margin = separation;
    disjoint.marginal = separation <= tol.abs;

    std::vector<Check> hyps{
        upper_bound_check("p_eps_limited", mp, eps, tol),
        upper_bound_check("q_delta_limited", mq, delta, tol),
        std::move(disjoint),
    };
    Check conclusion = upper_bound_check("product_eps_delta_limited", mpq, eps * delta, tol);

    return make_verdict(ClaimId::ProductProp, std::move(hyps), std::move(conclusion),
                        {{"measure_p", mp},
                         {"measure_q", mq},
                         {"measure_pq", mpq},
                         {"eps_delta", eps * delta},
                         {"separation", separation}},
                        {{"measure_multiplicative", tol.close(mpq, mp * mq)}});
}

} // namespace limpoly
