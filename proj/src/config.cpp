#include "dmp/config.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "dmp/calibration.hpp"
#include "dmp/errors.hpp"

namespace dmp {

namespace {

using nlohmann::json;

constexpr std::array<std::string_view, 10> kTopKeys{"y", "z", "c", "phi", "s", "r", "beta", "annual_interest_rate",
                                                    "technology", "target_u"};
constexpr std::array<std::string_view, 4> kTechKeys{"family", "alpha", "gamma", "efficiency"};

template <std::size_t N>
void reject_unknown(const json& obj, const std::array<std::string_view, N>& accepted, std::string_view where) {
    for (const auto& [key, _] : obj.items()) {
        if (std::find(accepted.begin(), accepted.end(), key) == accepted.end())
            throw SchemaError(fmt::format("unknown key '{}' in {}; accepted keys: {}", key, where,
                                          fmt::join(accepted, ", ")));
    }
}

double number(const json& obj, std::string_view key, std::string_view where) {
    const auto it = obj.find(std::string(key));
    if (it == obj.end()) throw SchemaError(fmt::format("missing required key '{}' in {}", key, where));
    if (!it->is_number()) throw SchemaError(fmt::format("key '{}' in {} must be a number", key, where));
    return it->get<double>();
}

std::optional<double> optional_number(const json& obj, std::string_view key, std::string_view where) {
    if (!obj.contains(std::string(key))) return std::nullopt;
    return number(obj, key, where);
}

}  // namespace

MatchingTechnology EconomyConfig::shape_technology() const {
    return MatchingTechnology::make(family, shape, efficiency.value_or(1.0));
}

EconomyConfig parse_economy_config(const json& doc) {
    if (!doc.is_object()) throw SchemaError("config must be a JSON object");
    reject_unknown(doc, kTopKeys, "config");

    const double y = number(doc, "y", "config");
    const double z = number(doc, "z", "config");
    const double c = number(doc, "c", "config");
    const double phi = number(doc, "phi", "config");
    const double s = number(doc, "s", "config");

    const auto r = optional_number(doc, "r", "config");
    const auto beta = optional_number(doc, "beta", "config");
    const auto annual = optional_number(doc, "annual_interest_rate", "config");
    const int given = int(r.has_value()) + int(beta.has_value()) + int(annual.has_value());
    if (given != 1)
        throw SchemaError(fmt::format("exactly one of r, beta, annual_interest_rate must be given (found {})", given));

    EconomyConfig cfg;
    if (r)
        cfg.params = EconomyParams::from_rate(y, z, c, phi, s, *r);
    else if (beta)
        cfg.params = EconomyParams::from_beta(y, z, c, phi, s, *beta);
    else
        cfg.params = EconomyParams::from_annual_rate(y, z, c, phi, s, *annual);

    const auto tech_it = doc.find("technology");
    if (tech_it == doc.end()) throw SchemaError("missing required key 'technology' in config");
    const json& tech = *tech_it;
    if (!tech.is_object()) throw SchemaError("'technology' must be an object");
    reject_unknown(tech, kTechKeys, "technology");
    if (!tech.contains("family") || !tech["family"].is_string())
        throw SchemaError("technology.family must be \"cobb_douglas\" or \"nonlinear\"");
    cfg.family = parse_family(tech["family"].get<std::string>());
    if (cfg.family == Family::cobb_douglas) {
        if (tech.contains("gamma")) throw SchemaError("technology.gamma applies to the nonlinear family only");
        cfg.shape = number(tech, "alpha", "technology");
    } else {
        if (tech.contains("alpha")) throw SchemaError("technology.alpha applies to the cobb_douglas family only");
        cfg.shape = number(tech, "gamma", "technology");
    }
    cfg.efficiency = optional_number(tech, "efficiency", "technology");
    cfg.target_u = optional_number(doc, "target_u", "config");
    if (cfg.efficiency && cfg.target_u)
        throw SchemaError("give either technology.efficiency or target_u, not both");
    if (cfg.target_u && !(*cfg.target_u > 0.0 && *cfg.target_u < 1.0))
        throw DomainError(fmt::format("target_u must lie in (0,1), got {}", *cfg.target_u));

    // Constructing the technology range-checks alpha/gamma/efficiency.
    (void)cfg.shape_technology();
    return cfg;
}

EconomyConfig parse_economy_config_text(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SchemaError(fmt::format("invalid JSON: {}", e.what()));
    }
    return parse_economy_config(doc);
}

EconomyConfig load_economy_config(const std::filesystem::path& path) {
    std::ifstream file(path);
    if (!file) throw IoError(fmt::format("cannot open config {}", path.string()));
    std::ostringstream buf;
    buf << file.rdbuf();
    try {
        return parse_economy_config_text(buf.str());
    } catch (const SchemaError& e) {
        throw SchemaError(fmt::format("{}: {}", path.string(), e.what()));
    } catch (const DomainError& e) {
        throw DomainError(fmt::format("{}: {}", path.string(), e.what()));
    }
}

json to_json(const EconomyConfig& config) {
    const EconomyParams& p = config.params;
    json tech{{"family", std::string(family_name(config.family))}};
    tech[config.family == Family::cobb_douglas ? "alpha" : "gamma"] = config.shape;
    if (config.efficiency) tech["efficiency"] = *config.efficiency;
    json doc{{"y", p.y}, {"z", p.z}, {"c", p.c}, {"phi", p.phi}, {"s", p.s}, {"r", p.r}, {"technology", tech}};
    if (config.target_u) doc["target_u"] = *config.target_u;
    return doc;
}

ResolvedTechnology resolve_technology(const EconomyConfig& config) {
    if (config.target_u) {
        const Calibration cal = calibrate_efficiency({*config.target_u, config.params, config.shape_technology()});
        return {cal.technology, true};
    }
    if (!config.efficiency)
        throw SchemaError("config needs technology.efficiency or target_u to pin down matching efficiency");
    return {config.shape_technology(), false};
}

}  // namespace dmp
