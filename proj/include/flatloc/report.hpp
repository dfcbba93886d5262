#ifndef FLATLOC_REPORT_HPP
#define FLATLOC_REPORT_HPP

// Deterministic JSON and text renderings of verdicts.

#include "flatloc/verdict.hpp"

#include <json.hpp>

#include <string>

namespace flatloc {

enum class Format { Json, Text };

/// "json" or "text"; throws InputError otherwise.
Format parse_format(const std::string& name);

inline constexpr int kSchemaVersion = 1;

nlohmann::json witness_to_json(const Witness& w);
Witness witness_from_json(const nlohmann::json& j);

/// Object with sorted keys and "schema": 1.
nlohmann::json verdict_to_json(const Verdict& v);
/// Inverse of verdict_to_json; throws InputError on schema mismatch.
Verdict verdict_from_json(const nlohmann::json& j);

std::string verdict_to_text(const Verdict& v);
std::string report(const Verdict& v, Format format);

}  // namespace flatloc

#endif  // FLATLOC_REPORT_HPP
