#include "limpoly/verdict.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace limpoly {

std::string_view to_string(ClaimId id) noexcept
{
    switch (id) {
    case ClaimId::RealCase: return "REAL_CASE";
    case ClaimId::BasicInequality: return "BASIC_INEQUALITY";
    case ClaimId::Squeeze: return "SQUEEZE";
    case ClaimId::PermSumBound: return "PERM_SUM_BOUND";
    case ClaimId::DerivSumBound: return "DERIV_SUM_BOUND";
    case ClaimId::IndexBound: return "INDEX_BOUND";
    case ClaimId::ProductProp: return "PRODUCT_PROP";
    }
    return "UNKNOWN";
}

std::string_view to_string(Classification c) noexcept
{
    switch (c) {
    case Classification::HypothesesNotMet: return "HYPOTHESES_NOT_MET";
    case Classification::Confirmed: return "CONFIRMED";
    case Classification::Counterexample: return "COUNTEREXAMPLE";
    }
    return "UNKNOWN";
}

std::optional<ClaimId> parse_claim_id(std::string_view name)
{
    std::string upper(name);
    std::transform(upper.begin(), upper.end(), upper.begin(), [](unsigned char ch) {
        return ch == '-' ? '_' : static_cast<char>(std::toupper(ch));
    });
    for (ClaimId id : all_claims)
        if (to_string(id) == upper)
            return id;
    return std::nullopt;
}

Check upper_bound_check(std::string name, double attained, double bound, const Tolerance& tol)
{
    Check c;
    c.name = std::move(name);
    c.met = attained < bound;
    c.margin = bound - attained;
    c.marginal = tol.close(bound, attained);
    return c;
}

double ClaimVerdict::quantity(std::string_view name) const
{
    for (const auto& [key, value] : quantities)
        if (key == name)
            return value;
    throw std::out_of_range("no quantity named " + std::string(name));
}

bool ClaimVerdict::flag(std::string_view name) const
{
    for (const auto& [key, value] : flags)
        if (key == name)
            return value;
    throw std::out_of_range("no flag named " + std::string(name));
}

const Check& ClaimVerdict::hypothesis(std::string_view name) const
{
    for (const auto& h : hypotheses)
        if (h.name == name)
            return h;
    throw std::out_of_range("no hypothesis named " + std::string(name));
}

ClaimVerdict make_verdict(ClaimId claim, std::vector<Check> hypotheses, Check conclusion,
                          std::vector<std::pair<std::string, double>> quantities,
                          std::vector<std::pair<std::string, bool>> flags)
{
    ClaimVerdict v;
    v.claim = claim;
    v.hypotheses = std::move(hypotheses);
    v.conclusion = std::move(conclusion);
    v.quantities = std::move(quantities);
    v.flags = std::move(flags);

    const bool all_met = std::all_of(v.hypotheses.begin(), v.hypotheses.end(),
                                     [](const Check& h) { return h.met; });
    const bool any_marginal = std::any_of(v.hypotheses.begin(), v.hypotheses.end(),
                                          [](const Check& h) { return h.marginal; });
    if (!all_met) {
        v.classification = Classification::HypothesesNotMet;
    } else if (!v.conclusion.met && !v.conclusion.marginal && !any_marginal) {
        v.classification = Classification::Counterexample;
    } else {
        v.classification = Classification::Confirmed;
        v.boundary = !v.conclusion.met;
    }
    return v;
}

} // namespace limpoly
