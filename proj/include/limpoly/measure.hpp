#pragma once

#include "limpoly/verdict.hpp"
#include "limpoly/poly.hpp"

#include <span>

namespace limpoly {

/// Outcome of an eps-limitedness test. is_limited <=> measure < epsilon.
struct Limitedness {
    double measure = 0.0;
    double epsilon = 0.0;
    bool is_limited = false;
};

/// prod |a_i|. Exactly 0 if any root is 0. Switches to a log-domain sum for
/// n > 20 or when some modulus lies outside [1e-6, 1e6].
double measure(const RootMultiset& roots);

/// Strict comparison measure < eps. Throws DomainError for eps <= 0.
Limitedness is_epsilon_limited(const RootMultiset& roots, double eps);

/// Entrywise conjugate.
RootMultiset conjugate_roots(const RootMultiset& roots);

/// b_i = a_i / lambda_i. Throws DomainError on a length mismatch or a zero lambda.
RootMultiset rescale_roots(const RootMultiset& roots, std::span<const Complex> lambdas);

/// Scaling P by a nonzero constant leaves the root multiset, and so the
/// measure, untouched. Throws DomainError for lambda == 0.
bool scalar_multiple_invariance(const RootMultiset& roots, Complex lambda);

/// Concatenation a_1..a_n, b_1..b_m: the zeros of P*Q.
RootMultiset concat(const RootMultiset& p, const RootMultiset& q);

/// Checks that an eps-limited P times a delta-limited Q is (eps*delta)-limited.
/// Hypotheses: both limitedness conditions and disjoint zero sets. The measure
/// identity M(PQ) = M(P) M(Q) is always evaluated and reported as a quantity.
ClaimVerdict check_product_proposition(const RootMultiset& p_roots, const RootMultiset& q_roots,
                                       double eps, double delta, const Tolerance& tol = {});

} // namespace limpoly
