#pragma once

#include "limpoly/critical.hpp"
#include "limpoly/poly.hpp"
#include "limpoly/verdict.hpp"

namespace limpoly {

/// sum_{k=1}^n k! against its Stirling-form counterpart sqrt(2 pi) sum e^-k k^(k+1/2).
struct StirlingBound {
    int n = 0;
    double factorial_sum = 0.0;
    double stirling_sum = 0.0;
    double log_factorial_sum = 0.0;
    double log_stirling_sum = 0.0;
    /// stirling_sum < factorial_sum. The Stirling form undershoots k! termwise.
    bool stirling_below = false;
};

/// Both sums accumulated in the log domain. Throws DomainError outside 1 <= n <= 120.
StirlingBound stirling_bound_compare(int n);

/// Default half-width of the band used for the |s_t| = 1/t index hypothesis.
inline constexpr double default_index_band = 1e-9;

/// Weak real-case Sendov statement. Hypotheses: prod_{i != j} a_i < 1 and
/// | |s_t| - 1/t | <= index_band * (1 + 1/t) for t = 1..n-1. Conclusion:
/// every critical point lies within distance 1 of the least zero a_j.
ClaimVerdict check_real_case(const RootMultiset& roots, const Tolerance& tol = {},
                             double index_band = default_index_band,
                             const SolverOptions& solver = {});

/// sum_{s=1}^n |P^(s)(a_j)| < eps * stirling_sum(n) under prod_{i != j} a_i < eps.
/// Reports the proof chain L = sum k!|s_k| (= A) < eps sum k! (= B) <= eps stirling_sum (= C)
/// link by link as flags; none of the links is assumed.
ClaimVerdict check_basic_inequality(const RootMultiset& roots, double eps, const Tolerance& tol = {});

/// For every k = 1..n-1 and every zero b of P^(k): |a_j - b| < delta, under the
/// same limitedness hypothesis. The attained maximum distance is reported.
ClaimVerdict check_squeeze(const RootMultiset& roots, double eps, double delta,
                           const Tolerance& tol = {}, const SolverOptions& solver = {});

/// |P'(a_j)| < eps sqrt(2 pi) / e, with P'(a_j) taken from the product-rule sum.
ClaimVerdict check_perm_sum_bound(const RootMultiset& roots, double eps, const Tolerance& tol = {});

/// sum_{s=0}^{n-1} |(P')^(s)(a_j)| < eps * stirling_sum(n).
ClaimVerdict check_deriv_sum_bound(const RootMultiset& roots, double eps, const Tolerance& tol = {});

} // namespace limpoly
