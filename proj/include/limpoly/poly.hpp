#pragma once

#include <complex>
#include <optional>
#include <span>
#include <vector>

namespace limpoly {

using Complex = std::complex<double>;

/// Ascending coefficient vector c_0..c_n. Not necessarily monic.
using Coeffs = std::vector<Complex>;

/// Combined absolute/relative float comparison used for every numeric check.
struct Tolerance {
    double abs = 1e-10;
    double rel = 1e-9;

    /// |u - v| <= abs + rel * max(|u|, |v|)
    bool close(double u, double v) const noexcept;
    bool close(Complex u, Complex v) const noexcept;
};

/// Ordered multiset of zeros a_1..a_n, n >= 1. Duplicates are kept.
class RootMultiset {
public:
    explicit RootMultiset(std::vector<Complex> roots);
    explicit RootMultiset(std::span<const double> real_roots);
    RootMultiset(std::initializer_list<Complex> roots);

    std::size_t size() const noexcept { return roots_.size(); }
    const Complex& operator[](std::size_t i) const { return roots_[i]; }
    const std::vector<Complex>& values() const noexcept { return roots_; }
    auto begin() const noexcept { return roots_.begin(); }
    auto end() const noexcept { return roots_.end(); }

    /// True when every root has zero imaginary part and positive real part.
    bool is_positive_real() const noexcept;
    bool is_real() const noexcept;

    /// Real parts, valid only for positive-real multisets.
    /// Throws PositivityError naming the first offending root otherwise.
    std::vector<double> positive_reals() const;

    bool operator==(const RootMultiset&) const = default;

private:
    std::vector<Complex> roots_;
};

/// Monic polynomial stored as ascending coefficients with c_n == 1.
/// When built from roots, the defining multiset is kept alongside.
class MonicPolynomial {
public:
    /// Takes coefficients c_0..c_n; throws DomainError unless degree >= 1 and c_n == 1.
    explicit MonicPolynomial(Coeffs coeffs);

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const Coeffs& coeffs() const noexcept { return coeffs_; }
    const std::optional<RootMultiset>& roots() const noexcept { return roots_; }

    /// Divides through by the leading coefficient. The input must have degree >= 1
    /// and a nonzero leading term.
    static MonicPolynomial normalized(std::span<const Complex> coeffs);

private:
    friend MonicPolynomial from_roots(const RootMultiset& roots);
    MonicPolynomial(Coeffs coeffs, RootMultiset roots);

    Coeffs coeffs_;
    std::optional<RootMultiset> roots_;
};

/// Expands prod (x - a_i), multiplying the factors in the given order.
MonicPolynomial from_roots(const RootMultiset& roots);

/// Horner evaluation.
Complex evaluate(std::span<const Complex> coeffs, Complex z) noexcept;
Complex evaluate(const MonicPolynomial& p, Complex z) noexcept;

/// sum |c_k| max(1, |z|)^k, the scale against which residuals at z are judged.
double evaluation_scale(std::span<const Complex> coeffs, Complex z) noexcept;

/// Formal derivative; result k is (k+1) c_{k+1}. A constant maps to {0}.
Coeffs derivative(std::span<const Complex> coeffs);
Coeffs derivative(const MonicPolynomial& p);

/// Coefficients of the s-th derivative (s == 0 returns a copy).
Coeffs nth_derivative(std::span<const Complex> coeffs, int s);

/// Value of the s-th derivative at z. s > degree gives exactly 0.
Complex derivative_at_order(std::span<const Complex> coeffs, int s, Complex z);
Complex derivative_at_order(const MonicPolynomial& p, int s, Complex z);

/// t_0..t_n with P(x) = sum t_k (x - c)^k, via repeated synthetic division.
Coeffs taylor_shift(std::span<const Complex> coeffs, Complex c);
Coeffs taylor_shift(const MonicPolynomial& p, Complex c);

/// Product-rule form of P'(z) = sum_i prod_{k != i} (z - a_k). Requires n >= 2.
Complex permutation_sum_derivative(const RootMultiset& roots, Complex z);

} // namespace limpoly
