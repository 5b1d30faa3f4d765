// Command-line front end: solve, calibrate, elasticity, sweep, bounds, beveridge, convert-rate.
//
// Exit codes: 0 success, 2 bad input or schema, 3 no admissible equilibrium.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "dmp/calibration.hpp"
#include "dmp/config.hpp"
#include "dmp/elasticity.hpp"
#include "dmp/empirics.hpp"
#include "dmp/equilibrium.hpp"
#include "dmp/errors.hpp"
#include "dmp/experiment.hpp"

namespace {

constexpr int kExitInput = 2;
constexpr int kExitMath = 3;

using nlohmann::json;

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw dmp::IoError(fmt::format("cannot open {} for writing", out_path));
    file << text;
    if (!file.flush()) throw dmp::IoError(fmt::format("write to {} failed", out_path));
}

std::string technology_note(const dmp::ResolvedTechnology& rt, const dmp::EconomyConfig& cfg) {
    if (rt.calibrated) return fmt::format("{} calibrated to u={}", dmp::describe(rt.technology), *cfg.target_u);
    return dmp::describe(rt.technology);
}

// ---- solve / elasticity ---------------------------------------------------

struct SolveOptions {
    std::string config;
    std::string format = "text";
    double tol = 1e-12;
};

int cmd_solve(const SolveOptions& o, bool elasticity_focus) {
    const dmp::EconomyConfig cfg = dmp::load_economy_config(o.config);
    const auto rt = dmp::resolve_technology(cfg);
    const dmp::EconomyParams& p = cfg.params;
    const dmp::Equilibrium eq = dmp::solve_equilibrium(p, rt.technology, o.tol);
    const dmp::ElasticityReport el = dmp::tightness_elasticity(p, rt.technology, eq.theta);

    if (o.format == "csv") {
        std::ostringstream out;
        dmp::emit_csv({dmp::solve_row(dmp::economy_label(rt.technology.family(), p.y), p, rt.technology)}, out);
        write_output(out.str(), "");
        return 0;
    }
    if (o.format == "json") {
        json doc{
            {"technology", {{"family", std::string(dmp::family_name(rt.technology.family()))},
                            {"shape", rt.technology.shape()},
                            {"efficiency", rt.technology.efficiency()},
                            {"calibrated", rt.calibrated}}},
            {"equilibrium",
             {{"theta", eq.theta}, {"u", eq.u}, {"w", eq.w}, {"q", eq.q}, {"f", eq.f}, {"J", eq.J}, {"V", eq.V},
              {"E", eq.E}, {"U", eq.U}, {"S", eq.S}, {"annuity_U", eq.annuity_U}}},
            {"elasticity",
             {{"eta_theta_y", el.eta_theta_y}, {"upsilon", el.upsilon},
              {"inverse_surplus_fraction", el.inverse_surplus_fraction}, {"eta_M_u", el.eta_M_u},
              {"upsilon_upper_bound", el.upsilon_upper_bound}, {"eta_w_y", el.eta_w_y},
              {"dtheta_dy", el.dtheta_dy}, {"dw_dy", el.dw_dy}, {"bounds_hold", el.bounds_hold}}},
        };
        std::cout << doc.dump(2) << '\n';
        return 0;
    }

    std::cout << fmt::format("technology={}\n", technology_note(rt, cfg));
    if (!elasticity_focus) {
        std::cout << fmt::format("theta*={:.7f}\nu*={:.7f}\nw*={:.7f}\nq*={:.7f}\nf*={:.7f}\n", eq.theta, eq.u, eq.w,
                                 eq.q, eq.f);
        std::cout << fmt::format("upsilon={:.7f}\neta_theta_y={:.7f}\neta_w_y={:.7f}\n", el.upsilon, el.eta_theta_y,
                                 el.eta_w_y);
        return 0;
    }
    std::cout << fmt::format("theta*={:.7f}\n", eq.theta);
    std::cout << fmt::format("eta_theta_y={:.7f}\nupsilon={:.7f}\ninverse_surplus_fraction={:.7f}\n", el.eta_theta_y,
                             el.upsilon, el.inverse_surplus_fraction);
    std::cout << fmt::format("eta_M_u={:.7f}\nupsilon_upper_bound={:.7f}\nbounds_hold={}\n", el.eta_M_u,
                             el.upsilon_upper_bound, el.bounds_hold);
    std::cout << fmt::format("dtheta_dy={:.7f}\ndw_dy={:.7f}\neta_w_y={:.7f}\n", el.dtheta_dy, el.dw_dy, el.eta_w_y);
    return 0;
}

// ---- calibrate -------------------------------------------------------------

struct CalibrateOptions {
    std::string config;
    std::string format = "text";
};

int cmd_calibrate(const CalibrateOptions& o) {
    dmp::EconomyConfig cfg = dmp::load_economy_config(o.config);
    if (!cfg.target_u) throw dmp::SchemaError("calibrate needs target_u in the config");
    const dmp::Calibration cal = dmp::calibrate_efficiency({*cfg.target_u, cfg.params, cfg.shape_technology()});
    const dmp::Equilibrium eq = dmp::solve_equilibrium(cfg.params, cal.technology);

    if (o.format == "json") {
        cfg.efficiency = cal.technology.efficiency();
        cfg.target_u.reset();
        std::cout << dmp::to_json(cfg).dump(2) << '\n';
        return 0;
    }
    std::cout << fmt::format("technology={}\nefficiency={:.17g}\n", dmp::describe(cal.technology),
                             cal.technology.efficiency());
    std::cout << fmt::format("theta*={:.7f}\nq*={:.7f}\nf*={:.7f}\nu*={:.7f}\n", cal.theta, cal.fill, cal.find, eq.u);
    return 0;
}

// ---- sweep -----------------------------------------------------------------

struct SweepOptions {
    std::vector<std::string> configs;
    std::optional<double> y_min, y_max;
    int points = 11;
    double half_width = 0.005;
    bool both_families = false;
    double alpha = 0.5;
    double gamma = 1.27;
    std::string out;
};

std::vector<double> grid_for(const SweepOptions& o, double base_y) {
    if (o.y_min.has_value() != o.y_max.has_value()) throw dmp::InputError("--y-min and --y-max go together");
    if (o.y_min) return dmp::with_base(dmp::linear_grid(*o.y_min, *o.y_max, o.points), base_y);
    return dmp::centered_grid(base_y, o.half_width, o.points);
}

int cmd_sweep(const SweepOptions& o) {
    std::vector<dmp::SweepSpec> specs;
    for (const std::string& path : o.configs) {
        const dmp::EconomyConfig cfg = dmp::load_economy_config(path);
        const double base_y = cfg.params.y;
        const auto grid = grid_for(o, base_y);
        std::vector<dmp::MatchingTechnology> techs;
        if (o.both_families) {
            if (!cfg.target_u) throw dmp::SchemaError(fmt::format("{}: --both-families needs target_u", path));
            const bool cd = cfg.family == dmp::Family::cobb_douglas;
            techs.push_back(dmp::CobbDouglas{1.0, cd ? cfg.shape : o.alpha});
            techs.push_back(dmp::Nonlinear{1.0, cd ? o.gamma : cfg.shape});
        } else {
            if (!cfg.target_u && !cfg.efficiency)
                throw dmp::SchemaError(fmt::format("{}: needs technology.efficiency or target_u", path));
            techs.push_back(cfg.shape_technology());
        }
        for (const auto& tech : techs)
            specs.push_back({dmp::economy_label(tech.family(), base_y), cfg.params, tech, cfg.target_u, grid});
    }

    // All or nothing: nothing is written unless every row solves.
    std::vector<dmp::SweepRow> rows;
    for (const auto& spec : specs) {
        auto part = dmp::run_sweep(spec);
        rows.insert(rows.end(), part.begin(), part.end());
    }
    std::ostringstream out;
    dmp::emit_csv(rows, out);
    write_output(out.str(), o.out);
    return 0;
}

// ---- empirics ------------------------------------------------------------

struct EmpiricsOptions {
    std::string unemp_csv;
    std::string vac_csv;
    std::string unemp_column;
    std::string vac_column;
    std::string since = "2000-12";
    double alpha = 0.5;
    double gamma = 1.27;
    std::string out;
};

dmp::YearMonth parse_since(const std::string& text) {
    const auto ym = dmp::YearMonth::parse(text);
    if (!ym) throw dmp::InputError(fmt::format("--since expects YYYY-MM or YYYY-MM-DD, got '{}'", text));
    return *ym;
}

int cmd_bounds(const EmpiricsOptions& o) {
    const auto unemp = dmp::load_series(o.unemp_csv, o.unemp_column);
    const auto vac = dmp::load_series(o.vac_csv, o.vac_column);
    // Validate the shapes before producing any output.
    (void)dmp::MatchingTechnology{dmp::CobbDouglas{1.0, o.alpha}};
    (void)dmp::MatchingTechnology{dmp::Nonlinear{1.0, o.gamma}};
    const auto ts = dmp::tightness_series(unemp, vac, parse_since(o.since));
    std::ostringstream out;
    dmp::write_bounds_csv(out, ts, o.alpha, o.gamma);
    write_output(out.str(), o.out);
    return 0;
}

int cmd_beveridge(const EmpiricsOptions& o) {
    const auto unemp = dmp::load_series(o.unemp_csv, o.unemp_column);
    const auto vac = dmp::load_series(o.vac_csv, o.vac_column);
    const auto curve = dmp::beveridge_points(unemp, vac, parse_since(o.since));
    std::ostringstream out;
    dmp::write_beveridge_csv(out, curve);
    write_output(out.str(), o.out);
    if (curve.correlation)
        std::cerr << fmt::format("correlation={:.6f} n={}\n", *curve.correlation, curve.points.size());
    else
        std::cerr << fmt::format("correlation=absent n={}\n", curve.points.size());
    return 0;
}

// ---- convert-rate ----------------------------------------------------------

struct ConvertOptions {
    double daily = 0.0;
    int days = dmp::kDaysPerMonth;
};

int cmd_convert_rate(const ConvertOptions& o) {
    std::cout << fmt::format("{:.17g}\n", dmp::monthly_rate(o.daily, o.days));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Steady-state search-and-matching model: solve, calibrate, sweep, and analyze"};
    app.require_subcommand(1);

    SolveOptions solve_opt, elast_opt;
    auto* solve = app.add_subcommand("solve", "Solve one economy and report equilibrium and elasticities");
    solve->add_option("config", solve_opt.config, "JSON economy config")->required()->check(CLI::ExistingFile);
    solve->add_option("--format", solve_opt.format, "text, csv or json")->check(CLI::IsMember({"text", "csv", "json"}));
    solve->add_option("--tol", solve_opt.tol, "Relative residual tolerance")->check(CLI::PositiveNumber);

    auto* elast = app.add_subcommand("elasticity", "Report the tightness-elasticity decomposition");
    elast->add_option("config", elast_opt.config, "JSON economy config")->required()->check(CLI::ExistingFile);
    elast->add_option("--format", elast_opt.format, "text, csv or json")->check(CLI::IsMember({"text", "csv", "json"}));

    CalibrateOptions cal_opt;
    auto* calibrate = app.add_subcommand("calibrate", "Calibrate matching efficiency to the config's target_u");
    calibrate->add_option("config", cal_opt.config, "JSON economy config")->required()->check(CLI::ExistingFile);
    calibrate->add_option("--format", cal_opt.format, "text or json (json emits a config with the efficiency)")
        ->check(CLI::IsMember({"text", "json"}));

    SweepOptions sweep_opt;
    auto* sweep = app.add_subcommand("sweep", "Productivity sweep around each configured economy, as CSV");
    sweep->add_option("configs", sweep_opt.configs, "One or more JSON economy configs")
        ->required()
        ->check(CLI::ExistingFile);
    sweep->add_option("--y-min", sweep_opt.y_min, "Lowest productivity in the grid");
    sweep->add_option("--y-max", sweep_opt.y_max, "Highest productivity in the grid");
    sweep->add_option("--points", sweep_opt.points, "Grid points")->check(CLI::PositiveNumber);
    sweep->add_option("--half-width", sweep_opt.half_width, "Grid half width around base y when no bounds given");
    sweep->add_flag("--both-families", sweep_opt.both_families, "Run Cobb-Douglas and nonlinear for every config");
    sweep->add_option("--alpha", sweep_opt.alpha, "Cobb-Douglas alpha for --both-families");
    sweep->add_option("--gamma", sweep_opt.gamma, "Nonlinear gamma for --both-families");
    sweep->add_option("--out", sweep_opt.out, "Write CSV here instead of stdout");

    EmpiricsOptions bounds_opt, bev_opt;
    auto add_empirics = [](CLI::App* cmd, EmpiricsOptions& o) {
        cmd->add_option("unemp_csv", o.unemp_csv, "Unemployment level export (e.g. UNEMPLOY)")
            ->required()
            ->check(CLI::ExistingFile);
        cmd->add_option("vac_csv", o.vac_csv, "Job openings export (e.g. JTSJOL)")->required()->check(CLI::ExistingFile);
        cmd->add_option("--unemp-column", o.unemp_column, "Value column in the unemployment file");
        cmd->add_option("--vac-column", o.vac_column, "Value column in the openings file");
        cmd->add_option("--since", o.since, "First month kept (YYYY-MM)");
        cmd->add_option("--out", o.out, "Write CSV here instead of stdout");
    };
    auto* bounds = app.add_subcommand("bounds", "Tightness series and 1/eta bounds from FRED-style CSVs");
    add_empirics(bounds, bounds_opt);
    bounds->add_option("--alpha", bounds_opt.alpha, "Cobb-Douglas alpha");
    bounds->add_option("--gamma", bounds_opt.gamma, "Nonlinear gamma");
    auto* beveridge = app.add_subcommand("beveridge", "Paired unemployment/openings points and their correlation");
    add_empirics(beveridge, bev_opt);

    ConvertOptions conv_opt;
    auto* convert = app.add_subcommand("convert-rate", "Daily probability to a monthly probability");
    convert->add_option("--daily", conv_opt.daily, "Daily probability")->required();
    convert->add_option("--days", conv_opt.days, "Days per month");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    try {
        if (*solve) return cmd_solve(solve_opt, false);
        if (*elast) return cmd_solve(elast_opt, true);
        if (*calibrate) return cmd_calibrate(cal_opt);
        if (*sweep) return cmd_sweep(sweep_opt);
        if (*bounds) return cmd_bounds(bounds_opt);
        if (*beveridge) return cmd_beveridge(bev_opt);
        if (*convert) return cmd_convert_rate(conv_opt);
    } catch (const dmp::InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const dmp::MathError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitMath;
    }
    return kExitInput;
}
