#include "limpoly/critical.hpp"

#include "limpoly/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace limpoly {

namespace {

struct Cluster {
    double value;
    int multiplicity;
};

std::vector<Cluster> cluster_sorted(std::vector<double> roots, double cluster_tol)
{
    std::sort(roots.begin(), roots.end());
    std::vector<Cluster> out;
    for (const double r : roots) {
        if (!out.empty() && r - out.back().value <= cluster_tol)
            ++out.back().multiplicity;
        else
            out.push_back({r, 1});
    }
    return out;
}

// The logarithmic derivative sum m_c / (x - r_c) falls strictly from +inf to
// -inf on (lo, hi) between consecutive clusters; its unique zero is the critical
// point there. Safeguarded Newton: fall back to bisection when a step leaves the bracket.
double critical_in_gap(const std::vector<Cluster>& clusters, double lo, double hi)
{
    double x = 0.5 * (lo + hi);
    for (int it = 0; it < 400; ++it) {
        double g = 0.0;
        double dg = 0.0;
        for (const auto& c : clusters) {
            const double inv = 1.0 / (x - c.value);
            g += c.multiplicity * inv;
            dg -= c.multiplicity * inv * inv;
        }
        if (g == 0.0)
            return x;
        if (g > 0.0)
            lo = x;
        else
            hi = x;
        double next = x - g / dg;
        if (!(next > lo && next < hi))
            next = 0.5 * (lo + hi);
        if (next == x || hi - lo <= 4 * std::numeric_limits<double>::epsilon() * std::abs(x))
            return next;
        x = next;
    }
    return x;
}

std::vector<double> real_critical(const std::vector<double>& roots, double cluster_tol)
{
    const std::vector<Cluster> clusters = cluster_sorted(roots, cluster_tol);
    std::vector<double> out;
    out.reserve(roots.size() - 1);
    for (std::size_t c = 0; c < clusters.size(); ++c) {
        for (int m = 1; m < clusters[c].multiplicity; ++m)
            out.push_back(clusters[c].value);
        if (c + 1 < clusters.size())
            out.push_back(critical_in_gap(clusters, clusters[c].value, clusters[c + 1].value));
    }
    return out;
}

std::vector<double> scaled_residuals(std::span<const Complex> coeffs, const std::vector<Complex>& pts)
{
    std::vector<double> res;
    res.reserve(pts.size());
    for (const Complex z : pts)
        res.push_back(std::abs(evaluate(coeffs, z)) / evaluation_scale(coeffs, z));
    return res;
}

CriticalSet finish(std::span<const Complex> coeffs, std::vector<Complex> pts, CriticalMethod method,
                   int sweeps, const SolverOptions& opts)
{
    CriticalSet cs;
    cs.residuals = scaled_residuals(coeffs, pts);
    cs.points = std::move(pts);
    cs.method = method;
    cs.sweeps = sweeps;
    if (cs.max_residual() > opts.max_residual)
        throw ConvergenceError("root residual above limit", cs.points, cs.residuals);
    return cs;
}

CriticalSet real_path(const MonicPolynomial& p, int k, const SolverOptions& opts)
{
    std::vector<double> current;
    for (const Complex a : *p.roots())
        current.push_back(a.real());
    for (int i = 0; i < k; ++i)
        current = real_critical(current, opts.cluster_tol);
    const Coeffs dk = nth_derivative(p.coeffs(), k);
    return finish(dk, std::vector<Complex>(current.begin(), current.end()),
                  CriticalMethod::InterlaceBisection, 0, opts);
}

CriticalSet complex_path(const MonicPolynomial& p, int k, const SolverOptions& opts)
{
    const Coeffs dk = nth_derivative(p.coeffs(), k);
    CriticalSet cs = aberth_roots(MonicPolynomial::normalized(dk), opts);
    cs.residuals = scaled_residuals(dk, cs.points);
    if (cs.max_residual() > opts.max_residual)
        throw ConvergenceError("root residual above limit", cs.points, cs.residuals);
    return cs;
}

bool has_real_roots(const MonicPolynomial& p)
{
    return p.roots().has_value() && p.roots()->is_real();
}

} // namespace

std::string_view to_string(CriticalMethod m) noexcept
{
    return m == CriticalMethod::InterlaceBisection ? "interlace-bisection" : "simultaneous-iteration";
}

double CriticalSet::max_residual() const noexcept
{
    double m = 0.0;
    for (const double r : residuals)
        m = std::max(m, r);
    return m;
}

CriticalSet aberth_roots(const MonicPolynomial& q, const SolverOptions& opts)
{
    const Coeffs& c = q.coeffs();
    const int n = q.degree();
    if (n == 1)
        return finish(c, {-c[0]}, CriticalMethod::SimultaneousIteration, 0, opts);

    double radius = 0.0;
    for (int k = 0; k < n; ++k)
        radius = std::max(radius, std::abs(c[static_cast<std::size_t>(k)]));
    radius += 1.0;

    std::vector<Complex> z(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        z[static_cast<std::size_t>(i)] = std::polar(radius, 2.0 * std::numbers::pi * i / n);

    const Coeffs dc = derivative(c);
    std::vector<bool> done(z.size(), false);
    int sweep = 0;
    for (; sweep < opts.max_sweeps; ++sweep) {
        bool all_done = true;
        for (std::size_t i = 0; i < z.size(); ++i) {
            if (done[i])
                continue;
            const Complex pv = evaluate(c, z[i]);
            const Complex dv = evaluate(dc, z[i]);
            Complex step;
            if (pv == Complex(0.0)) {
                step = 0.0;
            } else if (dv == Complex(0.0)) {
                // stationary point of q: nudge off it
                step = Complex(1e-7 * (1.0 + std::abs(z[i])), 1e-7);
            } else {
                const Complex newton = pv / dv;
                Complex repulsion = 0.0;
                for (std::size_t j = 0; j < z.size(); ++j)
                    if (j != i && z[i] != z[j])
                        repulsion += 1.0 / (z[i] - z[j]);
                step = newton / (1.0 - newton * repulsion);
            }
            z[i] -= step;
            if (std::abs(step) <= opts.step_tol * (1.0 + std::abs(z[i])))
                done[i] = true;
            else
                all_done = false;
        }
        if (all_done)
            break;
    }
    if (sweep == opts.max_sweeps)
        throw ConvergenceError("simultaneous iteration did not converge in " +
                                   std::to_string(opts.max_sweeps) + " sweeps",
                               z, scaled_residuals(c, z));

    // Newton polish, keeping a step only when it lowers the residual.
    for (auto& zi : z) {
        for (int it = 0; it < 5; ++it) {
            const Complex pv = evaluate(c, zi);
            const Complex dv = evaluate(dc, zi);
            if (pv == Complex(0.0) || dv == Complex(0.0))
                break;
            const Complex next = zi - pv / dv;
            if (std::abs(evaluate(c, next)) >= std::abs(pv))
                break;
            zi = next;
        }
    }
    return finish(c, std::move(z), CriticalMethod::SimultaneousIteration, sweep + 1, opts);
}

CriticalSet critical_points(const MonicPolynomial& p, const SolverOptions& opts)
{
    return higher_derivative_zeros(p, 1, opts);
}

CriticalSet higher_derivative_zeros(const MonicPolynomial& p, int k, const SolverOptions& opts)
{
    if (p.degree() < 2)
        throw DomainError("critical points need degree >= 2");
    if (k < 1 || k > p.degree() - 1)
        throw DomainError("derivative order must lie in 1..degree-1");
    return has_real_roots(p) ? real_path(p, k, opts) : complex_path(p, k, opts);
}

SendovTable sendov_distances(const RootMultiset& roots, const CriticalSet& crit)
{
    SendovTable t;
    for (std::size_t i = 1; i < roots.size(); ++i)
        if (std::abs(roots[i]) < std::abs(roots[t.min_zero_index]))
            t.min_zero_index = i;

    for (std::size_t i = 0; i < roots.size(); ++i) {
        std::vector<double> row;
        double nearest = std::numeric_limits<double>::infinity();
        for (const Complex b : crit.points) {
            row.push_back(std::abs(roots[i] - b));
            nearest = std::min(nearest, row.back());
        }
        if (i == t.min_zero_index && !row.empty())
            t.max_from_min_zero = *std::max_element(row.begin(), row.end());
        t.unit_disk_condition = t.unit_disk_condition && nearest < 1.0;
        t.nearest.push_back(nearest);
        t.distances.push_back(std::move(row));
    }
    return t;
}

} // namespace limpoly
