#include "dmp/empirics.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "dmp/csv.hpp"
#include "dmp/errors.hpp"

namespace dmp {

namespace {

std::optional<int> parse_int(std::string_view s) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return v;
}

}  // namespace

std::optional<YearMonth> YearMonth::parse(std::string_view text) {
    if (text.size() != 7 && text.size() != 10) return std::nullopt;
    if (text[4] != '-') return std::nullopt;
    const auto year = parse_int(text.substr(0, 4));
    const auto month = parse_int(text.substr(5, 2));
    if (!year || !month || *month < 1 || *month > 12) return std::nullopt;
    if (text.size() == 10) {
        if (text[7] != '-') return std::nullopt;
        const auto day = parse_int(text.substr(8, 2));
        if (!day || *day < 1 || *day > 31) return std::nullopt;
    }
    return YearMonth{*year, *month};
}

std::string YearMonth::to_string() const { return fmt::format("{:04d}-{:02d}-01", year, month); }

LaborSeries load_series(std::istream& in, const std::string& source, const std::string& value_column,
                        const std::vector<std::string>& date_columns) {
    CsvReader reader(in, source);
    const auto& header = reader.header();

    auto date_it = std::find_first_of(header.begin(), header.end(), date_columns.begin(), date_columns.end());
    if (date_it == header.end())
        throw SchemaError(fmt::format("{}: no date column; expected one of [{}], found [{}]", source,
                                      fmt::join(date_columns, ", "), fmt::join(header, ", ")));
    const std::size_t date_idx = static_cast<std::size_t>(date_it - header.begin());

    std::size_t value_idx = header.size();
    if (!value_column.empty()) {
        auto it = std::find(header.begin(), header.end(), value_column);
        if (it == header.end())
            throw SchemaError(fmt::format("{}: value column '{}' not found; columns are [{}]", source, value_column,
                                          fmt::join(header, ", ")));
        value_idx = static_cast<std::size_t>(it - header.begin());
    } else {
        if (header.size() != 2)
            throw SchemaError(fmt::format("{}: cannot infer the value column from [{}]; name it explicitly", source,
                                          fmt::join(header, ", ")));
        value_idx = 1 - date_idx;
    }

    LaborSeries series;
    series.id = header[value_idx];
    std::vector<std::pair<Observation, std::size_t>> rows;
    std::vector<std::string> fields;
    while (reader.next(fields)) {
        ++series.rows_read;
        if (fields.size() != header.size())
            throw ParseError(source, reader.line(),
                             fmt::format("expected {} fields, got {}", header.size(), fields.size()));
        const auto date = YearMonth::parse(fields[date_idx]);
        if (!date) throw ParseError(source, reader.line(), fmt::format("cannot parse date '{}'", fields[date_idx]));
        if (fields[value_idx] == ".") {
            ++series.missing_count;
            continue;
        }
        const double value = parse_number(fields[value_idx], source, reader.line());
        if (!(value > 0.0))
            throw ParseError(source, reader.line(), fmt::format("value must be positive, got {}", value));
        rows.push_back({{*date, value}, reader.line()});
    }

    std::stable_sort(rows.begin(), rows.end(),
                     [](const auto& a, const auto& b) { return a.first.date < b.first.date; });
    for (std::size_t i = 1; i < rows.size(); ++i)
        if (rows[i].first.date == rows[i - 1].first.date)
            throw ParseError(source, std::max(rows[i].second, rows[i - 1].second),
                             fmt::format("duplicate observation for {}", rows[i].first.date.to_string()));
    series.observations.reserve(rows.size());
    for (const auto& [obs, line] : rows) series.observations.push_back(obs);
    return series;
}

LaborSeries load_series(const std::filesystem::path& path, const std::string& value_column,
                        const std::vector<std::string>& date_columns) {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw IoError(fmt::format("cannot open {}", path.string()));
    return load_series(file, path.string(), value_column, date_columns);
}

std::vector<JoinedObservation> join_series(const LaborSeries& unemployed, const LaborSeries& vacancies,
                                           YearMonth floor, std::size_t* dropped_before_floor) {
    if (unemployed.observations.empty() || vacancies.observations.empty())
        throw JoinError("cannot join: one of the series has no observations");
    std::vector<JoinedObservation> out;
    std::size_t dropped = 0;
    auto a = unemployed.observations.begin();
    auto b = vacancies.observations.begin();
    while (a != unemployed.observations.end() && b != vacancies.observations.end()) {
        if (a->date < b->date) {
            ++a;
        } else if (b->date < a->date) {
            ++b;
        } else {
            if (a->date < floor)
                ++dropped;
            else
                out.push_back({a->date, a->value, b->value});
            ++a;
            ++b;
        }
    }
    if (dropped_before_floor) *dropped_before_floor = dropped;
    if (out.empty())
        throw JoinError(fmt::format("series {} and {} share no months on or after {}", unemployed.id, vacancies.id,
                                    floor.to_string()));
    return out;
}

TightnessSeries tightness_series(const LaborSeries& unemployed, const LaborSeries& vacancies, YearMonth floor) {
    TightnessSeries ts;
    const auto joined = join_series(unemployed, vacancies, floor, &ts.dropped_before_floor);
    ts.dates.reserve(joined.size());
    ts.theta.reserve(joined.size());
    for (const auto& o : joined) {
        ts.dates.push_back(o.date);
        ts.theta.push_back(o.vacancies / o.unemployed);
    }
    return ts;
}

TightnessSeries bound_series(TightnessSeries ts, const MatchingTechnology& shape) {
    ts.bound.resize(ts.theta.size());
    std::transform(ts.theta.begin(), ts.theta.end(), ts.bound.begin(),
                   [&](double theta) { return 1.0 / match_elasticity(shape, theta); });
    return ts;
}

std::optional<double> pearson_correlation(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = std::min(x.size(), y.size());
    if (n < 2) return std::nullopt;
    const double mx = std::accumulate(x.begin(), x.begin() + n, 0.0) / n;
    const double my = std::accumulate(y.begin(), y.begin() + n, 0.0) / n;
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = x[i] - mx, dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0) return std::nullopt;
    return sxy / std::sqrt(sxx * syy);
}

BeveridgeCurve beveridge_points(const LaborSeries& unemployed, const LaborSeries& vacancies, YearMonth floor) {
    BeveridgeCurve curve;
    curve.points = join_series(unemployed, vacancies, floor, &curve.dropped_before_floor);
    std::vector<double> u, v;
    for (const auto& p : curve.points) {
        u.push_back(p.unemployed);
        v.push_back(p.vacancies);
    }
    curve.correlation = pearson_correlation(u, v);
    return curve;
}

void write_bounds_csv(std::ostream& out, const TightnessSeries& ts, double alpha, double gamma) {
    const auto cd = bound_series(ts, CobbDouglas{1.0, alpha});
    const auto nl = bound_series(ts, Nonlinear{1.0, gamma});
    out << "date,theta,bound_cd,bound_nl\n";
    for (std::size_t i = 0; i < ts.size(); ++i)
        out << fmt::format("{},{:.17g},{:.17g},{:.17g}\n", ts.dates[i].to_string(), ts.theta[i], cd.bound[i],
                           nl.bound[i]);
}

void write_beveridge_csv(std::ostream& out, const BeveridgeCurve& curve) {
    out << "date,u_thousands,v_thousands\n";
    for (const auto& p : curve.points)
        out << fmt::format("{},{:.17g},{:.17g}\n", p.date.to_string(), p.unemployed, p.vacancies);
}

}  // namespace dmp
