#pragma once

#include "limpoly/poly.hpp"

#include <string_view>
#include <vector>

namespace limpoly {

/// Whole-token decimal parse; throws DomainError naming the token otherwise.
double parse_double(std::string_view token);

/// Complex literal `[-]a[(+|-)bi]`: "2", "-0.5", "1+1i", "3-4i", "1e-3+2e2i".
/// No whitespace. Throws DomainError naming the token.
Complex parse_complex(std::string_view token);

/// Comma-separated complex literals.
std::vector<Complex> parse_complex_list(std::string_view text);

/// Comma-separated doubles.
std::vector<double> parse_double_list(std::string_view text);

} // namespace limpoly
