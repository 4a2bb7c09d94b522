#include "limpoly/error.hpp"

#include <sstream>

namespace limpoly {

namespace {

std::string describe_root(std::size_t index, std::complex<double> root)
{
    std::ostringstream os;
    os.precision(17);
    os << "root #" << index + 1 << " (" << root.real();
    if (root.imag() != 0.0)
        os << (root.imag() < 0 ? "" : "+") << root.imag() << "i";
    os << ") is not a positive real number";
    return os.str();
}

} // namespace

PositivityError::PositivityError(std::size_t index, std::complex<double> root)
    : DomainError(describe_root(index, root)), index_(index), root_(root)
{
}

ConvergenceError::ConvergenceError(std::string what, std::vector<std::complex<double>> iterates,
                                   std::vector<double> residuals)
    : Error(std::move(what)), iterates_(std::move(iterates)), residuals_(std::move(residuals))
{
}

} // namespace limpoly
