#include <doctest.h>

#include <cmath>

#include "dmp/config.hpp"
#include "dmp/errors.hpp"

using namespace dmp;

namespace {

const char* kValid = R"({"y": 0.61, "z": 0.6, "c": 0.1, "phi": 0.5, "s": 0.001,
  "beta": 0.99985948030015349, "technology": {"family": "cobb_douglas", "alpha": 0.5}, "target_u": 0.05})";

nlohmann::json valid() { return nlohmann::json::parse(kValid); }

}  // namespace

TEST_CASE("a valid config parses") {
    const auto cfg = parse_economy_config_text(kValid);
    CHECK(cfg.params.y == 0.61);
    CHECK(cfg.family == Family::cobb_douglas);
    CHECK(cfg.shape == 0.5);
    CHECK(cfg.target_u == 0.05);
    CHECK_FALSE(cfg.efficiency);
    const auto res = resolve_technology(cfg);
    CHECK(res.calibrated);
    CHECK(res.technology.efficiency() == doctest::Approx(0.063587773906584392).epsilon(1e-12));

    const auto again = parse_economy_config(to_json(cfg));
    CHECK(again.params.r == cfg.params.r);
    CHECK(again.target_u == cfg.target_u);
}

TEST_CASE("interest rate keys") {
    auto doc = valid();
    doc["r"] = 0.001;
    CHECK_THROWS_AS(parse_economy_config(doc), SchemaError);
    doc.erase("beta");
    CHECK(parse_economy_config(doc).params.r == 0.001);
    doc.erase("r");
    CHECK_THROWS_AS(parse_economy_config(doc), SchemaError);
    doc["annual_interest_rate"] = 0.05;
    CHECK(parse_economy_config(doc).params.r == doctest::Approx(std::expm1(std::log1p(0.05) / 365)).epsilon(1e-14));
}

TEST_CASE("schema errors") {
    auto unknown = valid();
    unknown["zz"] = 1;
    CHECK_THROWS_AS(parse_economy_config(unknown), SchemaError);

    auto missing = valid();
    missing.erase("c");
    CHECK_THROWS_AS(parse_economy_config(missing), SchemaError);

    auto wrong_type = valid();
    wrong_type["y"] = "0.61";
    CHECK_THROWS_AS(parse_economy_config(wrong_type), SchemaError);

    auto bad_family = valid();
    bad_family["technology"]["family"] = "leontief";
    CHECK_THROWS_AS(parse_economy_config(bad_family), SchemaError);

    auto mismatched = valid();
    mismatched["technology"] = {{"family", "nonlinear"}, {"alpha", 0.5}};
    CHECK_THROWS_AS(parse_economy_config(mismatched), SchemaError);

    auto both = valid();
    both["technology"]["efficiency"] = 0.06;
    CHECK_THROWS_AS(parse_economy_config(both), SchemaError);

    auto neither = valid();
    neither.erase("target_u");
    CHECK_THROWS_AS(resolve_technology(parse_economy_config(neither)), SchemaError);

    CHECK_THROWS_AS(parse_economy_config_text("{not json"), SchemaError);
    CHECK_THROWS_AS(parse_economy_config_text("[1,2]"), SchemaError);
    CHECK_THROWS_AS(load_economy_config("/nonexistent/config.json"), IoError);
}

TEST_CASE("range errors") {
    auto doc = valid();
    doc["phi"] = 1.0;
    CHECK_THROWS_AS(parse_economy_config(doc), DomainError);
    doc = valid();
    doc["target_u"] = 1.5;
    CHECK_THROWS_AS(parse_economy_config(doc), DomainError);
    doc = valid();
    doc["technology"]["alpha"] = 1.2;
    CHECK_THROWS_AS(parse_economy_config(doc), DomainError);
    // y <= z parses; it is rejected later as a missing equilibrium.
    doc = valid();
    doc["y"] = 0.6;
    CHECK_NOTHROW(parse_economy_config(doc));
    CHECK_THROWS_AS(resolve_technology(parse_economy_config(doc)), ExistenceError);
}
