#pragma once

#include "limpoly/claims.hpp"
#include "limpoly/critical.hpp"
#include "limpoly/expansion.hpp"
#include "limpoly/measure.hpp"
#include "limpoly/search.hpp"
#include "limpoly/verdict.hpp"

#include "json.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace limpoly {

using Json = nlohmann::json;

/// Bumped whenever a report field changes.
inline constexpr std::string_view schema_version = "limpoly.report/1";

// Complex numbers serialize as [re, im]. Non-finite doubles become null.
Json to_json(Complex z);
Json to_json(const RootMultiset& roots);
Json to_json(const Tolerance& tol);
Json to_json(const Check& check);
Json to_json(const ClaimVerdict& verdict);
Json to_json(const Limitedness& l);
Json to_json(const LocalExpansion& exp);
Json to_json(const IndexBoundReport& report);
Json to_json(const CriticalSet& crit);
Json to_json(const SendovTable& table);
Json to_json(const StirlingBound& bound);
Json to_json(const SearchConfig& config);
Json to_json(const Counterexample& cex);
Json to_json(const PullbackReport& pullback);
/// Wall time is left out unless include_timing is set, so that equal configs
/// give byte-identical documents.
Json to_json(const SearchReport& report, bool include_timing = false);

/// FNV-1a over the canonical dump of the config, as 16 hex digits.
std::string config_hash(const SearchConfig& config);

/// Top-level document: {schema_version, command, inputs, results, diagnostics}.
Json make_report(std::string_view command, Json inputs, Json results, Json diagnostics);

/// Canonical text form: sorted keys, shortest round-trip doubles, 2-space indent.
std::string dump_canonical(const Json& doc);

/// Appends one line {config_hash, roots, verdict} per stored counterexample.
void append_counterexample_log(const std::filesystem::path& path, const SearchReport& report);

} // namespace limpoly
