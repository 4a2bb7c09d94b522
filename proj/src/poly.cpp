#include "limpoly/poly.hpp"

#include "limpoly/error.hpp"

#include <algorithm>
#include <cmath>

namespace limpoly {

bool Tolerance::close(double u, double v) const noexcept
{
    return std::abs(u - v) <= abs + rel * std::max(std::abs(u), std::abs(v));
}

bool Tolerance::close(Complex u, Complex v) const noexcept
{
    return std::abs(u - v) <= abs + rel * std::max(std::abs(u), std::abs(v));
}

RootMultiset::RootMultiset(std::vector<Complex> roots) : roots_(std::move(roots))
{
    if (roots_.empty())
        throw DomainError("a root multiset needs at least one root");
}

RootMultiset::RootMultiset(std::span<const double> real_roots)
    : RootMultiset(std::vector<Complex>(real_roots.begin(), real_roots.end()))
{
}

RootMultiset::RootMultiset(std::initializer_list<Complex> roots)
    : RootMultiset(std::vector<Complex>(roots))
{
}

bool RootMultiset::is_real() const noexcept
{
    return std::all_of(roots_.begin(), roots_.end(), [](Complex a) { return a.imag() == 0.0; });
}

bool RootMultiset::is_positive_real() const noexcept
{
    return std::all_of(roots_.begin(), roots_.end(),
                       [](Complex a) { return a.imag() == 0.0 && a.real() > 0.0; });
}

std::vector<double> RootMultiset::positive_reals() const
{
    std::vector<double> out;
    out.reserve(roots_.size());
    for (std::size_t i = 0; i < roots_.size(); ++i) {
        const Complex a = roots_[i];
        // NaN fails the comparison as well
        if (!(a.imag() == 0.0 && a.real() > 0.0))
            throw PositivityError(i, a);
        out.push_back(a.real());
    }
    return out;
}

MonicPolynomial::MonicPolynomial(Coeffs coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.size() < 2)
        throw DomainError("a monic polynomial needs degree >= 1");
    if (coeffs_.back() != Complex(1.0))
        throw DomainError("leading coefficient must be exactly 1");
}

MonicPolynomial::MonicPolynomial(Coeffs coeffs, RootMultiset roots)
    : coeffs_(std::move(coeffs)), roots_(std::move(roots))
{
}

MonicPolynomial MonicPolynomial::normalized(std::span<const Complex> coeffs)
{
    if (coeffs.size() < 2)
        throw DomainError("cannot normalize a constant");
    const Complex lead = coeffs.back();
    if (lead == Complex(0.0))
        throw DomainError("cannot normalize: leading coefficient is zero");
    Coeffs c(coeffs.begin(), coeffs.end());
    for (auto& ck : c)
        ck /= lead;
    c.back() = 1.0;
    return MonicPolynomial(std::move(c));
}

MonicPolynomial from_roots(const RootMultiset& roots)
{
    Coeffs c{1.0};
    c.reserve(roots.size() + 1);
    // c <- c * (x - a)
    for (const Complex a : roots) {
        c.push_back(0.0);
        for (std::size_t k = c.size() - 1; k > 0; --k)
            c[k] = c[k - 1] - a * c[k];
        c[0] = -a * c[0];
    }
    c.back() = 1.0;
    return MonicPolynomial(std::move(c), roots);
}

Complex evaluate(std::span<const Complex> coeffs, Complex z) noexcept
{
    Complex acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = acc * z + *it;
    return acc;
}

Complex evaluate(const MonicPolynomial& p, Complex z) noexcept
{
    return evaluate(p.coeffs(), z);
}

double evaluation_scale(std::span<const Complex> coeffs, Complex z) noexcept
{
    const double r = std::max(1.0, std::abs(z));
    double acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = acc * r + std::abs(*it);
    return acc;
}

Coeffs derivative(std::span<const Complex> coeffs)
{
    if (coeffs.size() <= 1)
        return Coeffs{0.0};
    Coeffs d(coeffs.size() - 1);
    for (std::size_t k = 0; k < d.size(); ++k)
        d[k] = static_cast<double>(k + 1) * coeffs[k + 1];
    return d;
}

Coeffs derivative(const MonicPolynomial& p)
{
    return derivative(p.coeffs());
}

Coeffs nth_derivative(std::span<const Complex> coeffs, int s)
{
    Coeffs d(coeffs.begin(), coeffs.end());
    for (int i = 0; i < s; ++i)
        d = derivative(d);
    return d;
}

Complex derivative_at_order(std::span<const Complex> coeffs, int s, Complex z)
{
    if (s < 0)
        throw DomainError("derivative order must be nonnegative");
    if (s >= static_cast<int>(coeffs.size()))
        return 0.0;
    return evaluate(nth_derivative(coeffs, s), z);
}

Complex derivative_at_order(const MonicPolynomial& p, int s, Complex z)
{
    return derivative_at_order(p.coeffs(), s, z);
}

Coeffs taylor_shift(std::span<const Complex> coeffs, Complex c)
{
    // Pass k divides the running quotient by (x - c); the remainder is t_k.
    Coeffs t(coeffs.begin(), coeffs.end());
    const std::size_t n = t.size();
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = n - 1; i > k; --i)
            t[i - 1] += c * t[i];
    return t;
}

Coeffs taylor_shift(const MonicPolynomial& p, Complex c)
{
    return taylor_shift(p.coeffs(), c);
}

Complex permutation_sum_derivative(const RootMultiset& roots, Complex z)
{
    const std::size_t n = roots.size();
    if (n < 2)
        throw DomainError("permutation_sum_derivative needs at least two roots");
    Complex sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        Complex term = 1.0;
        for (std::size_t k = 0; k < n; ++k)
            if (k != i)
                term *= z - roots[k];
        sum += term;
    }
    return sum;
}

} // namespace limpoly
