#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace limpoly {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on the arguments was violated (bad degree, eps <= 0, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// An operation needing strictly positive real roots got something else.
class PositivityError : public DomainError {
public:
    PositivityError(std::size_t index, std::complex<double> root);

    std::size_t index() const noexcept { return index_; }
    std::complex<double> root() const noexcept { return root_; }

private:
    std::size_t index_;
    std::complex<double> root_;
};

/// Simultaneous iteration ran out of sweeps. Carries the last iterates.
class ConvergenceError : public Error {
public:
    ConvergenceError(std::string what, std::vector<std::complex<double>> iterates,
                     std::vector<double> residuals);

    const std::vector<std::complex<double>>& iterates() const noexcept { return iterates_; }
    const std::vector<double>& residuals() const noexcept { return residuals_; }

private:
    std::vector<std::complex<double>> iterates_;
    std::vector<double> residuals_;
};

} // namespace limpoly
