#pragma once

#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "coverhfk/cover.hpp"
#include "coverhfk/torsion.hpp"

namespace coverhfk::report {

using json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "coverhfk 0.1.0";

/// Structured reports, one per CLI subcommand. Serialization is
/// deterministic: sorted degree keys, classes ordered by label, no
/// environment-dependent fields. Coefficients are emitted as strings.
json info_report(const TwoBridgeKnot& k, const std::string& command);
json base_report(const TwoBridgeKnot& k, const std::string& command);
json cover_report(const TwoBridgeKnot& k, int m, const std::string& command);
json torsion_report(const TwoBridgeKnot& k, int m,
                    const std::optional<std::vector<std::int64_t>>& chars,
                    const std::string& command);
json compare_report(const TwoBridgeKnot& k1, const TwoBridgeKnot& k2,
                    const std::string& command);

std::string render_table(const json& doc);

}  // namespace coverhfk::report
