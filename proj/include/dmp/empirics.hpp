#pragma once

#include <compare>
#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dmp/matching.hpp"

namespace dmp {

struct YearMonth {
    int year = 0;
    int month = 0;

    /// Accepts YYYY-MM-DD or YYYY-MM; the day is discarded.
    static std::optional<YearMonth> parse(std::string_view text);
    /// First-of-month ISO date, as in FRED exports.
    std::string to_string() const;

    auto operator<=>(const YearMonth&) const = default;
};

/// Month in which the JOLTS openings series begins.
inline constexpr YearMonth kJoltsStart{2000, 12};

struct Observation {
    YearMonth date;
    double value = 0.0;  ///< thousands of persons
};

struct LaborSeries {
    std::string id;
    std::vector<Observation> observations;  ///< strictly increasing dates
    std::size_t rows_read = 0;
    std::size_t missing_count = 0;  ///< rows whose value was the "." marker

    std::size_t size() const noexcept { return observations.size(); }
};

inline const std::vector<std::string> kDefaultDateColumns{"DATE", "observation_date"};

/// Loads a FRED-style export: one date column, one value column, "." for missing.
///
/// An empty `value_column` selects the only non-date column. Rows are returned
/// sorted by month; a repeated month is a ParseError.
LaborSeries load_series(const std::filesystem::path& path, const std::string& value_column = {},
                        const std::vector<std::string>& date_columns = kDefaultDateColumns);
LaborSeries load_series(std::istream& in, const std::string& source, const std::string& value_column = {},
                        const std::vector<std::string>& date_columns = kDefaultDateColumns);

struct JoinedObservation {
    YearMonth date;
    double unemployed = 0.0;
    double vacancies = 0.0;
};

struct TightnessSeries {
    std::vector<YearMonth> dates;
    std::vector<double> theta;
    /// 1/eta_{M,u}(theta_t); empty until bound_series() fills it.
    std::vector<double> bound;
    std::size_t dropped_before_floor = 0;

    std::size_t size() const noexcept { return dates.size(); }
};

struct BeveridgeCurve {
    std::vector<JoinedObservation> points;
    /// Pearson correlation of unemployment and vacancies; absent with fewer
    /// than two points or a constant series.
    std::optional<double> correlation;
    std::size_t dropped_before_floor = 0;
};

/// Months present in both series, on or after `floor`. Throws JoinError when none remain.
std::vector<JoinedObservation> join_series(const LaborSeries& unemployed, const LaborSeries& vacancies,
                                           YearMonth floor, std::size_t* dropped_before_floor = nullptr);

TightnessSeries tightness_series(const LaborSeries& unemployed, const LaborSeries& vacancies,
                                 YearMonth floor = kJoltsStart);
/// Fills `bound` with 1/eta_{M,u}(theta_t) for the technology's shape.
TightnessSeries bound_series(TightnessSeries ts, const MatchingTechnology& shape);
BeveridgeCurve beveridge_points(const LaborSeries& unemployed, const LaborSeries& vacancies,
                                YearMonth floor = kJoltsStart);

std::optional<double> pearson_correlation(const std::vector<double>& x, const std::vector<double>& y);

/// date,theta,bound_cd,bound_nl
void write_bounds_csv(std::ostream& out, const TightnessSeries& ts, double alpha = 0.5, double gamma = 1.27);
/// date,u_thousands,v_thousands
void write_beveridge_csv(std::ostream& out, const BeveridgeCurve& curve);

}  // namespace dmp
