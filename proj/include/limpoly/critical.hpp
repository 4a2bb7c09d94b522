#pragma once

#include "limpoly/poly.hpp"

#include <string_view>
#include <vector>

namespace limpoly {

enum class CriticalMethod {
    InterlaceBisection,
    SimultaneousIteration,
};

std::string_view to_string(CriticalMethod m) noexcept;

/// Zeros of some derivative P^(k), with multiplicity.
struct CriticalSet {
    std::vector<Complex> points;
    /// |P^(k)(b)| / sum |c_k| max(1,|b|)^k for each point.
    std::vector<double> residuals;
    CriticalMethod method = CriticalMethod::InterlaceBisection;
    /// Sweeps used by the simultaneous iteration, 0 on the real path.
    int sweeps = 0;

    double max_residual() const noexcept;
};

struct SolverOptions {
    int max_sweeps = 200;
    /// A point has converged once its last update was <= step_tol * (1 + |z|).
    double step_tol = 1e-13;
    /// Roots closer than this are merged into one cluster on the real path.
    double cluster_tol = 1e-12;
    double max_residual = 1e-8;
};

/// Zeros of P'. When p carries an all-real root multiset the zeros are bracketed
/// between consecutive distinct roots and refined there; a root of multiplicity m
/// contributes itself m - 1 times. Otherwise the monic-normalized derivative is
/// solved by Aberth-Ehrlich iteration from a circle of radius 1 + max |c_k|.
/// Throws DomainError for degree < 2 and ConvergenceError when the iteration
/// budget runs out or a residual exceeds the limit.
CriticalSet critical_points(const MonicPolynomial& p, const SolverOptions& opts = {});

/// Zeros of the k-th derivative, 1 <= k <= degree - 1. Count is degree - k.
CriticalSet higher_derivative_zeros(const MonicPolynomial& p, int k, const SolverOptions& opts = {});

/// All zeros of a monic polynomial by Aberth-Ehrlich iteration.
CriticalSet aberth_roots(const MonicPolynomial& q, const SolverOptions& opts = {});

/// Distances between zeros a_i and critical points b_k.
struct SendovTable {
    /// distances[i][k] = |a_i - b_k|
    std::vector<std::vector<double>> distances;
    /// min_k |a_i - b_k| per zero.
    std::vector<double> nearest;
    /// Every zero has a critical point at distance < 1.
    bool unit_disk_condition = true;
    /// Zero of least modulus (ties: smallest index).
    std::size_t min_zero_index = 0;
    /// max_k |a_j - b_k| for that zero.
    double max_from_min_zero = 0.0;
};

SendovTable sendov_distances(const RootMultiset& roots, const CriticalSet& crit);

} // namespace limpoly
