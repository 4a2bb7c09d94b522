#include "limpoly/expansion.hpp"

#include "limpoly/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace limpoly {

namespace {

// Ascending coefficients of y * prod (y - r_i), factors taken in order.
std::vector<double> expand_about_zero(const std::vector<double>& offsets)
{
    std::vector<double> c{1.0};
    c.reserve(offsets.size() + 1);
    for (const double r : offsets) {
        c.push_back(0.0);
        for (std::size_t k = c.size() - 1; k > 0; --k)
            c[k] = c[k - 1] - r * c[k];
        c[0] = -r * c[0];
    }
    // c[k] is now the coefficient of y^(k+1)
    return c;
}

LocalExpansion expand_about(const std::vector<double>& a, std::size_t j, ExpansionForm form)
{
    LocalExpansion e;
    e.center = a[j];
    e.center_index = j;
    e.form = form;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i == j)
            continue;
        e.residuals.push_back(form == ExpansionForm::Minus ? a[i] - a[j] : a[j] - a[i]);
    }
    e.coeffs = expand_about_zero(e.residuals);
    return e;
}

} // namespace

std::string_view to_string(ExpansionForm form) noexcept
{
    return form == ExpansionForm::Minus ? "minus" : "plus";
}

double LocalExpansion::reconstruct(double x) const noexcept
{
    const double y = form == ExpansionForm::Minus ? x - center : x + center;
    double acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = acc * y + *it;
    return acc * y;
}

LocalExpansion local_expansion_min(const RootMultiset& roots)
{
    const std::vector<double> a = roots.positive_reals();
    const auto j = static_cast<std::size_t>(std::min_element(a.begin(), a.end()) - a.begin());
    return expand_about(a, j, ExpansionForm::Minus);
}

LocalExpansion local_expansion_max_plus(const RootMultiset& roots)
{
    const std::vector<double> a = roots.positive_reals();
    const auto j = static_cast<std::size_t>(std::max_element(a.begin(), a.end()) - a.begin());
    return expand_about(a, j, ExpansionForm::Plus);
}

double IndexBoundReport::min_margin() const noexcept
{
    double m = std::numeric_limits<double>::infinity();
    for (const auto& e : entries)
        m = std::min(m, e.bound - e.abs_s);
    return m;
}

IndexBoundReport index_bound_check(const LocalExpansion& exp, const RootMultiset& roots)
{
    IndexBoundReport report;
    report.form = exp.form;
    const int n = exp.degree();
    if (exp.form == ExpansionForm::Minus) {
        double prod = 1.0;
        for (std::size_t i = 0; i < roots.size(); ++i)
            if (i != exp.center_index)
                prod *= std::abs(roots[i]);
        report.bound = prod;
    } else {
        report.bound = std::pow(std::abs(exp.center), n);
    }
    for (int k = 1; k < n; ++k) {
        IndexBoundEntry e;
        e.k = k;
        e.abs_s = std::abs(exp.s(k));
        e.bound = report.bound;
        e.holds = e.abs_s < e.bound;
        report.all_hold = report.all_hold && e.holds;
        report.entries.push_back(e);
    }
    return report;
}

ClaimVerdict check_index_bound(const RootMultiset& roots, const Tolerance& tol)
{
    const LocalExpansion exp = local_expansion_min(roots);
    const IndexBoundReport report = index_bound_check(exp, roots);

    Check positive;
    positive.name = "positive_real_zeros";
    positive.met = true;
    positive.margin = exp.center;

    Check conclusion;
    conclusion.name = "indices_below_bound";
    conclusion.met = report.all_hold;
    conclusion.margin = report.min_margin();
    double worst = 0.0;
    for (const auto& e : report.entries) {
        if (e.bound - e.abs_s <= conclusion.margin) {
            conclusion.marginal = tol.close(e.bound, e.abs_s);
            worst = e.abs_s;
        }
    }

    std::vector<std::pair<std::string, double>> quantities{
        {"center", exp.center},
        {"bound", report.bound},
        {"worst_abs_index", worst},
    };
    int violations = 0;
    for (const auto& e : report.entries)
        violations += e.holds ? 0 : 1;
    quantities.emplace_back("violations", violations);

    return make_verdict(ClaimId::IndexBound, {std::move(positive)}, std::move(conclusion),
                        std::move(quantities));
}

bool min_pair_lemma(double a, double b)
{
    if (!(a > 0.0) || !(b > 0.0))
        throw DomainError("min_pair_lemma needs positive A and B");
    return !(a * b < 1.0) || std::min(a, b) < 1.0;
}

} // namespace limpoly
