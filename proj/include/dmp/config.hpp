#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "dmp/equilibrium.hpp"
#include "dmp/matching.hpp"

namespace dmp {

/// One economy as described by a JSON config file.
///
///   { "y": 0.61, "z": 0.6, "c": 0.1, "phi": 0.5, "s": 0.001,
///     "beta": 0.99985948030015349,            // or "r", or "annual_interest_rate"
///     "technology": { "family": "cobb_douglas", "alpha": 0.5, "efficiency": 0.0636 },
///     "target_u": 0.05 }                      // instead of an efficiency
struct EconomyConfig {
    EconomyParams params;
    Family family = Family::cobb_douglas;
    double shape = 0.5;
    std::optional<double> efficiency;
    std::optional<double> target_u;

    /// Technology with efficiency 1 when none was configured.
    MatchingTechnology shape_technology() const;
};

/// Validates keys and types, then the parameter ranges. Schema problems throw
/// SchemaError; out-of-range values throw DomainError.
EconomyConfig parse_economy_config(const nlohmann::json& doc);
EconomyConfig parse_economy_config_text(std::string_view text);
EconomyConfig load_economy_config(const std::filesystem::path& path);

nlohmann::json to_json(const EconomyConfig& config);

struct ResolvedTechnology {
    MatchingTechnology technology;
    bool calibrated = false;
};

/// Calibrates to target_u when set, otherwise uses the configured efficiency.
/// Throws SchemaError when neither is present.
ResolvedTechnology resolve_technology(const EconomyConfig& config);

}  // namespace dmp
