#include "limpoly/parse.hpp"

#include "limpoly/error.hpp"

#include <charconv>
#include <cmath>
#include <string>

namespace limpoly {

namespace {

[[noreturn]] void bad_token(std::string_view token, std::string_view what)
{
    throw DomainError("cannot parse '" + std::string(token) + "' as " + std::string(what));
}

// Parses a leading unsigned-or-negative decimal; returns the number of chars used (0 on failure).
std::size_t parse_prefix(std::string_view s, double& out)
{
    if (s.empty() || s.front() == '+')
        return 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    if (ec != std::errc() || !std::isfinite(out))
        return 0;
    return static_cast<std::size_t>(ptr - s.data());
}

std::vector<std::string_view> split_commas(std::string_view text)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        out.push_back(text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                          : comma - start));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return out;
}

} // namespace

double parse_double(std::string_view token)
{
    double value = 0.0;
    if (parse_prefix(token, value) != token.size() || token.empty())
        bad_token(token, "a number");
    return value;
}

Complex parse_complex(std::string_view token)
{
    double re = 0.0;
    const std::size_t used = parse_prefix(token, re);
    if (used == 0)
        bad_token(token, "a complex literal");
    if (used == token.size())
        return {re, 0.0};

    std::string_view rest = token.substr(used);
    const char sign = rest.front();
    if ((sign != '+' && sign != '-') || rest.size() < 3 || rest.back() != 'i')
        bad_token(token, "a complex literal");
    rest = rest.substr(1, rest.size() - 2);
    double im = 0.0;
    if (rest.front() == '-' || parse_prefix(rest, im) != rest.size())
        bad_token(token, "a complex literal");
    return {re, sign == '-' ? -im : im};
}

std::vector<Complex> parse_complex_list(std::string_view text)
{
    std::vector<Complex> out;
    for (const auto token : split_commas(text))
        out.push_back(parse_complex(token));
    return out;
}

std::vector<double> parse_double_list(std::string_view text)
{
    std::vector<double> out;
    for (const auto token : split_commas(text))
        out.push_back(parse_double(token));
    return out;
}

} // namespace limpoly
