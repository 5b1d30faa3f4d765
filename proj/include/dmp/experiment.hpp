#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dmp/equilibrium.hpp"
#include "dmp/errors.hpp"
#include "dmp/matching.hpp"

namespace dmp {

inline constexpr int kDaysPerMonth = 30;

/// Probability of at least one success in `days` independent daily draws.
double monthly_rate(double daily_p, int days = kDaysPerMonth);

/// Productivity sweep around one calibrated economy.
///
/// With a target the efficiency of `technology` is calibrated once at
/// base_params.y and then held fixed; without one it is used as given.
struct SweepSpec {
    std::string economy;
    EconomyParams base_params;
    MatchingTechnology technology = CobbDouglas{};
    std::optional<double> target_u = 0.05;
    std::vector<double> y_grid;
};

struct SweepRow {
    std::string economy;
    Family family = Family::cobb_douglas;
    double y = 0.0;
    double theta = 0.0;
    double u = 0.0;
    double w = 0.0;
    double q_daily = 0.0;
    double f_daily = 0.0;
    double q_monthly = 0.0;
    double f_monthly = 0.0;
    double upsilon = 0.0;
    double eta_theta_y = 0.0;
    double eta_w_y = 0.0;
    double eta_M_u = 0.0;
};

/// A row of a sweep failed to solve; the message names the economy and y.
class SweepRowError : public MathError {
public:
    SweepRowError(std::string economy, double y, const std::string& cause);
    const std::string& economy() const noexcept { return economy_; }
    double y() const noexcept { return y_; }

private:
    std::string economy_;
    double y_;
};

/// `points` evenly spaced values on [base - half_width, base + half_width].
/// One point gives {base}.
std::vector<double> centered_grid(double base_y, double half_width = 0.005, int points = 11);
/// `points` evenly spaced values on [y_min, y_max].
std::vector<double> linear_grid(double y_min, double y_max, int points);
/// Sorted, deduplicated, and guaranteed to contain `base_y`.
std::vector<double> with_base(std::vector<double> grid, double base_y);

std::string economy_label(Family family, double base_y);

SweepRow solve_row(const std::string& economy, const EconomyParams& p, const MatchingTechnology& tech);
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

/// The six reference economies: y in {0.61, 0.63, 0.65} x {Cobb-Douglas alpha=0.5,
/// nonlinear gamma=1.27}, each calibrated to 5 percent unemployment.
std::vector<SweepSpec> reference_sweeps(double half_width = 0.005, int points = 11);

inline constexpr const char* kSweepCsvHeader =
    "economy,family,y,theta,u,w,q_daily,f_daily,q_monthly,f_monthly,upsilon,eta_theta_y,eta_w_y,eta_M_u";

void emit_csv(const std::vector<SweepRow>& rows, std::ostream& out);
void emit_csv(const std::vector<SweepRow>& rows, const std::filesystem::path& path);
std::vector<SweepRow> load_csv(std::istream& in);
std::vector<SweepRow> load_csv(const std::filesystem::path& path);

}  // namespace dmp
