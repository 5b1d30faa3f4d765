#include "dmp/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "dmp/calibration.hpp"
#include "dmp/csv.hpp"
#include "dmp/elasticity.hpp"

namespace dmp {

double monthly_rate(double daily_p, int days) {
    if (!(daily_p >= 0.0 && daily_p <= 1.0))
        throw DomainError(fmt::format("daily probability must lie in [0,1], got {}", daily_p));
    if (days < 1) throw DomainError(fmt::format("days must be >= 1, got {}", days));
    if (daily_p == 1.0) return 1.0;
    return -std::expm1(days * std::log1p(-daily_p));
}

SweepRowError::SweepRowError(std::string economy, double y, const std::string& cause)
    : MathError(fmt::format("economy {} at y = {:.17g}: {}", economy, y, cause)), economy_(std::move(economy)), y_(y) {}

std::vector<double> linear_grid(double y_min, double y_max, int points) {
    if (points < 1) throw DomainError(fmt::format("grid needs at least one point, got {}", points));
    if (!(y_min <= y_max)) throw DomainError(fmt::format("grid bounds reversed: {} > {}", y_min, y_max));
    if (points == 1) return {0.5 * (y_min + y_max)};
    std::vector<double> grid(points);
    const double step = (y_max - y_min) / (points - 1);
    for (int i = 0; i < points; ++i) grid[i] = y_min + step * i;
    grid.back() = y_max;
    return grid;
}

std::vector<double> centered_grid(double base_y, double half_width, int points) {
    if (points == 1) return {base_y};
    if (!(half_width >= 0.0)) throw DomainError(fmt::format("half width must be nonnegative, got {}", half_width));
    auto grid = linear_grid(base_y - half_width, base_y + half_width, points);
    if (points % 2 == 1) grid[points / 2] = base_y;
    return grid;
}

std::vector<double> with_base(std::vector<double> grid, double base_y) {
    grid.push_back(base_y);
    std::sort(grid.begin(), grid.end());
    // Points within a few ulps of each other are the same productivity level.
    auto same = [](double a, double b) { return std::fabs(a - b) <= 1e-12 * std::max(std::fabs(a), std::fabs(b)); };
    std::vector<double> out;
    for (double y : grid) {
        if (!out.empty() && same(out.back(), y)) {
            if (y == base_y) out.back() = base_y;
            continue;
        }
        out.push_back(y);
    }
    return out;
}

std::string economy_label(Family family, double base_y) {
    return fmt::format("{}@y={:g}", family_name(family), base_y);
}

SweepRow solve_row(const std::string& economy, const EconomyParams& p, const MatchingTechnology& tech) {
    const Equilibrium eq = solve_equilibrium(p, tech);
    const ElasticityReport el = tightness_elasticity(p, tech, eq.theta);
    SweepRow row;
    row.economy = economy;
    row.family = tech.family();
    row.y = p.y;
    row.theta = eq.theta;
    row.u = eq.u;
    row.w = eq.w;
    row.q_daily = eq.q;
    row.f_daily = eq.f;
    row.q_monthly = monthly_rate(eq.q);
    row.f_monthly = monthly_rate(eq.f);
    row.upsilon = el.upsilon;
    row.eta_theta_y = el.eta_theta_y;
    row.eta_w_y = el.eta_w_y;
    row.eta_M_u = el.eta_M_u;
    return row;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
    const EconomyParams& base = spec.base_params;
    base.validate();
    if (spec.y_grid.empty()) throw DomainError("sweep grid is empty");
    for (double y : spec.y_grid)
        if (!(y > base.z)) throw DomainError(fmt::format("grid value y = {} does not exceed z = {}", y, base.z));
    const bool has_base = std::any_of(spec.y_grid.begin(), spec.y_grid.end(), [&](double y) { return y == base.y; });
    if (!has_base) throw DomainError(fmt::format("sweep grid must contain the base productivity {}", base.y));

    MatchingTechnology tech = spec.technology;
    if (spec.target_u) {
        try {
            tech = calibrate_efficiency({*spec.target_u, base, spec.technology}).technology;
        } catch (const MathError& e) {
            throw SweepRowError(spec.economy, base.y, fmt::format("calibration failed: {}", e.what()));
        }
    }

    std::vector<double> grid = spec.y_grid;
    std::sort(grid.begin(), grid.end());
    std::vector<SweepRow> rows;
    rows.reserve(grid.size());
    for (double y : grid) {
        try {
            rows.push_back(solve_row(spec.economy, base.with_y(y), tech));
        } catch (const MathError& e) {
            throw SweepRowError(spec.economy, y, e.what());
        }
    }
    return rows;
}

std::vector<SweepSpec> reference_sweeps(double half_width, int points) {
    std::vector<SweepSpec> specs;
    for (double y : {0.61, 0.63, 0.65}) {
        for (const MatchingTechnology& tech : {MatchingTechnology{CobbDouglas{1.0, 0.5}},
                                               MatchingTechnology{Nonlinear{1.0, 1.27}}}) {
            specs.push_back({economy_label(tech.family(), y), reference_economy(y), tech, 0.05,
                             centered_grid(y, half_width, points)});
        }
    }
    return specs;
}

void emit_csv(const std::vector<SweepRow>& rows, std::ostream& out) {
    if (rows.empty()) throw DomainError("emit_csv: no rows to write");
    out << kSweepCsvHeader << '\n';
    for (const SweepRow& r : rows) {
        out << fmt::format("{},{},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},"
                           "{:.17g},{:.17g}\n",
                           r.economy, family_name(r.family), r.y, r.theta, r.u, r.w, r.q_daily, r.f_daily,
                           r.q_monthly, r.f_monthly, r.upsilon, r.eta_theta_y, r.eta_w_y, r.eta_M_u);
    }
}

void emit_csv(const std::vector<SweepRow>& rows, const std::filesystem::path& path) {
    std::ostringstream buf;
    emit_csv(rows, buf);
    std::ofstream file(path, std::ios::binary);
    if (!file) throw IoError(fmt::format("cannot open {} for writing", path.string()));
    file << buf.str();
    if (!file.flush()) throw IoError(fmt::format("write to {} failed", path.string()));
}

std::vector<SweepRow> load_csv(std::istream& in) {
    const std::string source = "<sweep csv>";
    CsvReader reader(in, source);
    const auto header = reader.header();
    if (join_fields(header) != kSweepCsvHeader)
        throw SchemaError(fmt::format("unexpected sweep header; expected '{}'", kSweepCsvHeader));
    std::vector<SweepRow> rows;
    std::vector<std::string> fields;
    while (reader.next(fields)) {
        if (fields.size() != header.size())
            throw ParseError(source, reader.line(), fmt::format("expected {} fields, got {}", header.size(), fields.size()));
        SweepRow r;
        r.economy = fields[0];
        r.family = parse_family(fields[1]);
        double* targets[] = {&r.y,         &r.theta,     &r.u,       &r.w,       &r.q_daily, &r.f_daily,
                             &r.q_monthly, &r.f_monthly, &r.upsilon, &r.eta_theta_y, &r.eta_w_y, &r.eta_M_u};
        for (std::size_t i = 0; i < std::size(targets); ++i) *targets[i] = parse_number(fields[i + 2], source, reader.line());
        rows.push_back(std::move(r));
    }
    return rows;
}

std::vector<SweepRow> load_csv(const std::filesystem::path& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw IoError(fmt::format("cannot open {}", path.string()));
    return load_csv(file);
}

}  // namespace dmp
