#pragma once

#include "limpoly/poly.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace limpoly {

enum class ClaimId {
    RealCase,
    BasicInequality,
    Squeeze,
    PermSumBound,
    DerivSumBound,
    IndexBound,
    ProductProp,
};

inline constexpr ClaimId all_claims[] = {
    ClaimId::RealCase,     ClaimId::BasicInequality, ClaimId::Squeeze,     ClaimId::PermSumBound,
    ClaimId::DerivSumBound, ClaimId::IndexBound,     ClaimId::ProductProp,
};

enum class Classification {
    HypothesesNotMet,
    Confirmed,
    Counterexample,
};

/// "REAL_CASE", "BASIC_INEQUALITY", ...
std::string_view to_string(ClaimId id) noexcept;
std::string_view to_string(Classification c) noexcept;

/// Case-insensitive; returns nullopt for unknown names.
std::optional<ClaimId> parse_claim_id(std::string_view name);

/// One side of a claim. margin is signed: positive means strictly satisfied
/// (bound - attained for an upper bound). marginal marks a margin that is
/// inside the tolerance band around zero.
struct Check {
    std::string name;
    bool met = false;
    double margin = 0.0;
    bool marginal = false;
};

/// attained < bound, with the margin and band taken from tol.
Check upper_bound_check(std::string name, double attained, double bound, const Tolerance& tol);

struct ClaimVerdict {
    ClaimId claim = ClaimId::RealCase;
    std::vector<Check> hypotheses;
    Check conclusion;
    Classification classification = Classification::HypothesesNotMet;
    /// Set when the conclusion failed but some margin sat inside its tolerance band,
    /// so the instance was not promoted to a counterexample.
    bool boundary = false;
    std::vector<std::pair<std::string, double>> quantities;
    std::vector<std::pair<std::string, bool>> flags;

    /// Throws std::out_of_range for an unknown name.
    double quantity(std::string_view name) const;
    bool flag(std::string_view name) const;
    const Check& hypothesis(std::string_view name) const;
};

/// Fills in classification and boundary:
///   any hypothesis unmet                                   -> HYPOTHESES_NOT_MET
///   conclusion failed, no margin within tolerance          -> COUNTEREXAMPLE
///   otherwise                                              -> CONFIRMED
ClaimVerdict make_verdict(ClaimId claim, std::vector<Check> hypotheses, Check conclusion,
                          std::vector<std::pair<std::string, double>> quantities = {},
                          std::vector<std::pair<std::string, bool>> flags = {});

} // namespace limpoly
