#pragma once

#include "limpoly/poly.hpp"
#include "limpoly/verdict.hpp"

#include <cstddef>
#include <vector>

namespace limpoly {

enum class ExpansionForm {
    /// prod (x - a_i) = sum s_k (x - a_j)^k about the least zero.
    Minus,
    /// prod (x + a_i) = sum s_k (x + a_j)^k about the largest a_i.
    Plus,
};

std::string_view to_string(ExpansionForm form) noexcept;

/// Local expansion sum_{k=1}^n s_k y^k of a positive-real-zero polynomial about
/// an extremal zero. There is no constant term since the center is a zero.
struct LocalExpansion {
    double center = 0.0;
    std::size_t center_index = 0;
    ExpansionForm form = ExpansionForm::Minus;
    /// s_1..s_n; coeffs.back() == 1.
    std::vector<double> coeffs;
    /// The n-1 offsets r_i of the other zeros from the center, original order.
    std::vector<double> residuals;

    int degree() const noexcept { return static_cast<int>(coeffs.size()); }
    /// s_k for 1 <= k <= n.
    double s(int k) const { return coeffs.at(static_cast<std::size_t>(k - 1)); }

    /// sum s_k y^k with y = x - center (Minus) or y = x + center (Plus).
    double reconstruct(double x) const noexcept;
};

/// Expansion about the least zero (ties go to the smallest index).
/// s_k are the coefficients of y * prod_{i != j} (y - r_i), r_i = a_i - a_j >= 0.
/// Throws PositivityError naming the first root that is not a positive real.
LocalExpansion local_expansion_min(const RootMultiset& roots);

/// Plus-form expansion of prod (x + a_i) about the largest a_i (ties: smallest
/// index), with r_i = a_j - a_i >= 0 and y = x + a_j.
LocalExpansion local_expansion_max_plus(const RootMultiset& roots);

struct IndexBoundEntry {
    int k = 0;
    double abs_s = 0.0;
    double bound = 0.0;
    bool holds = false;
};

/// |s_k| against the index bound for k = 1..n-1: prod_{i != j} |a_i| for the
/// minus form, |a_j|^n for the plus form. Strict inequality.
struct IndexBoundReport {
    ExpansionForm form = ExpansionForm::Minus;
    double bound = 0.0;
    std::vector<IndexBoundEntry> entries;
    bool all_hold = true;

    /// min over k of (bound - |s_k|); +inf when there is no index to check.
    double min_margin() const noexcept;
};

IndexBoundReport index_bound_check(const LocalExpansion& exp, const RootMultiset& roots);

/// INDEX_BOUND verdict from the minus-form expansion about the least zero.
ClaimVerdict check_index_bound(const RootMultiset& roots, const Tolerance& tol = {});

/// (A*B < 1) implies min(A, B) < 1, evaluated. Throws DomainError unless A, B > 0.
bool min_pair_lemma(double a, double b);

} // namespace limpoly
