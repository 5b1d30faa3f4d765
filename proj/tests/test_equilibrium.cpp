#include <doctest.h>

#include <cmath>
#include <limits>

#include "dmp/calibration.hpp"
#include "dmp/equilibrium.hpp"
#include "dmp/errors.hpp"
#include "test_support.hpp"

using namespace dmp;
using dmp::testing::log_grid;
using dmp::testing::rel_err;

namespace {

// mpmath, 40 digits.
constexpr double kBeta = 0.99985948030015349;  // 0.95^(1/365)
constexpr double kRate = 1.4053944840761824e-4;
constexpr double kExistenceLhs = 4.3838904537504838;  // (1-phi)(y-z)/(r+s) at y=0.61
constexpr double kInitialVacancy = 4.2838904537504838;

std::vector<EconomyParams> test_economies() {
    std::vector<EconomyParams> out;
    for (double y : {0.61, 0.63, 0.65, 0.8}) out.push_back(reference_economy(y));
    out.push_back(EconomyParams::from_rate(1.0, 0.4, 0.3, 0.72, 0.034, 0.004));
    return out;
}

std::vector<MatchingTechnology> calibrated(const EconomyParams& p) {
    return {calibrate_efficiency({0.05, p, CobbDouglas{1.0, 0.5}}).technology,
            calibrate_efficiency({0.05, p, Nonlinear{1.0, 1.27}}).technology};
}

}  // namespace

TEST_CASE("reference parameters") {
    const EconomyParams p = reference_economy(0.61);
    CHECK(rel_err(p.beta(), kBeta) < 1e-15);
    CHECK(rel_err(p.r, kRate) < 1e-12);
    const auto from_annual = EconomyParams::from_annual_rate(0.61, 0.6, 0.1, 0.5, 0.001, 1.0 / 0.95 - 1.0);
    CHECK(rel_err(from_annual.beta(), kBeta) < 1e-14);
    CHECK_THROWS_AS(EconomyParams::from_rate(0.61, 0.6, 0.1, 1.0, 0.001, 0.01), DomainError);
    CHECK_THROWS_AS(EconomyParams::from_rate(0.61, 0.6, 0.1, 0.5, 0.0, 0.01), DomainError);
    CHECK_THROWS_AS(EconomyParams::from_rate(0.61, 0.6, -0.1, 0.5, 0.001, 0.01), DomainError);
    CHECK_THROWS_AS(EconomyParams::from_beta(0.61, 0.6, 0.1, 0.5, 0.001, 1.0), DomainError);
}

TEST_CASE("existence: worked examples") {
    const auto rep = check_existence(reference_economy(0.61));
    CHECK(rep.surplus_condition_holds);
    CHECK(rel_err(rep.initial_vacancy_value, kInitialVacancy) < 1e-12);
    const EconomyParams p = reference_economy(0.61);
    CHECK(rel_err((1 - p.phi) * (p.y - p.z) / (p.r + p.s), kExistenceLhs) < 1e-12);

    const auto none = check_existence(reference_economy(0.6));
    CHECK_FALSE(none.surplus_condition_holds);
    CHECK(none.initial_vacancy_value < 0.0);
    CHECK_THROWS_AS(solve_tightness(reference_economy(0.6), CobbDouglas{}), ExistenceError);
    CHECK_THROWS_AS(solve_tightness(reference_economy(0.59), CobbDouglas{}), ExistenceError);
}

TEST_CASE("existence condition and positive initial vacancy value agree across the boundary") {
    for (double phi : {0.0, 0.1, 0.5, 0.9}) {
        for (double c : {0.01, 0.1, 1.0}) {
            const EconomyParams base = EconomyParams::from_beta(1.0, 0.6, c, phi, 0.001, kBeta);
            const double y_edge = base.z + c * (base.r + base.s) / (1.0 - phi);
            for (double rel : {-1e-3, -1e-6, -1e-9, 1e-9, 1e-6, 1e-3}) {
                const EconomyParams p = base.with_y(y_edge * (1.0 + rel));
                const auto rep = check_existence(p);
                CAPTURE(phi);
                CAPTURE(rel);
                CHECK(rep.surplus_condition_holds == (rep.initial_vacancy_value > 0.0));
                CHECK(rep.surplus_condition_holds == (rel > 0.0));
                if (!rep.surplus_condition_holds) CHECK_THROWS_AS(solve_tightness(p, CobbDouglas{0.05, 0.5}), ExistenceError);
            }
        }
    }
}

TEST_CASE("tightness residual limits") {
    const EconomyParams p = reference_economy(0.61);
    // Cobb-Douglas q grows without bound as theta -> 0; the nonlinear q tends to its efficiency.
    const MatchingTechnology cd = CobbDouglas{0.0636, 0.5};
    CHECK(tightness_residual(p, cd, 1e-20) == doctest::Approx((p.y - p.z) / p.c).epsilon(1e-8));
    CHECK(tightness_residual(p, cd, 1e6) < 0.0);
    const MatchingTechnology nl = Nonlinear{0.2206, 1.27};
    const double gap = (p.y - p.z) / p.c - (p.r + p.s) / ((1 - p.phi) * nl.efficiency());
    CHECK(tightness_residual(p, nl, 1e-14) == doctest::Approx(gap).epsilon(1e-10));
    CHECK(tightness_residual(p, nl, 1e6) < 0.0);
}

TEST_CASE("residual changes sign once and the root lies inside the bracket") {
    for (const auto& p : test_economies()) {
        for (const auto& tech : calibrated(p)) {
            const auto rep = check_existence(p);
            const double theta = solve_tightness(p, tech);
            CHECK(theta > rep.bracket_lower);
            CHECK(theta < rep.bracket_upper);
            CHECK(rep.bracket_lower == 0.0);
            const double top = std::isfinite(rep.bracket_upper) ? rep.bracket_upper : 1e6;
            const auto grid = log_grid(1e-10 * top, top, 1000);
            int changes = 0;
            double prev = tightness_residual(p, tech, grid.front());
            for (std::size_t i = 1; i < grid.size(); ++i) {
                const double cur = tightness_residual(p, tech, grid[i]);
                if ((prev > 0.0) != (cur > 0.0)) ++changes;
                prev = cur;
            }
            CHECK(changes == 1);
        }
    }
}

TEST_CASE("zero bargaining power") {
    const EconomyParams p0 = EconomyParams::from_beta(0.61, 0.6, 0.1, 0.0, 0.001, kBeta);
    CHECK(std::isinf(check_existence(p0).bracket_upper));
    const Equilibrium eq = solve_equilibrium(p0, CobbDouglas{0.0636, 0.5});
    CHECK(eq.w == doctest::Approx(p0.z).epsilon(1e-15));
    CHECK(bellman_residuals(p0, eq).max_abs() < 1e-9);
}

TEST_CASE("steady state unemployment") {
    CHECK(rel_err(steady_state_unemployment(0.001, 1.0), 0.000999000999000999) < 1e-15);
    CHECK(steady_state_unemployment(0.001, 0.019) == doctest::Approx(0.05).epsilon(1e-14));
    CHECK_THROWS_AS(steady_state_unemployment(0.0, 0.5), DomainError);
    CHECK_THROWS_AS(steady_state_unemployment(0.001, 1.5), DomainError);
    CHECK_THROWS_AS(steady_state_unemployment(0.001, 0.0), DomainError);
}

TEST_CASE("wage equations at a hand-picked point") {
    const EconomyParams p = reference_economy(0.61);
    const MatchingTechnology cd = CobbDouglas{0.0636, 0.5};
    // mpmath: y - (r+s)c/q
    CHECK(wage_from_free_entry(p, cd, 0.0893) == doctest::Approx(0.60946410596270454).epsilon(1e-14));
    CHECK(wage_from_bargaining(p, 0.0893) == doctest::Approx(0.609465).epsilon(1e-12));
}

TEST_CASE("equilibrium identities") {
    for (const auto& p : test_economies()) {
        for (const auto& tech : calibrated(p)) {
            CAPTURE(p.y);
            CAPTURE(describe(tech));
            const Equilibrium eq = solve_equilibrium(p, tech);
            const double tol = 1e-9;
            CHECK(std::fabs(eq.V) <= tol);
            CHECK(std::fabs(eq.J - p.c / (p.beta() * eq.q)) <= tol * std::max(1.0, eq.J));
            CHECK(std::fabs(eq.E - eq.U - p.phi * eq.S) <= tol * std::max(1.0, eq.S));
            CHECK(std::fabs(eq.J - (1 - p.phi) * eq.S) <= tol * std::max(1.0, eq.J));
            CHECK(std::fabs(eq.annuity_U - (p.z + p.phi * p.c * eq.theta / (1 - p.phi))) <= tol);
            CHECK(std::fabs(eq.annuity_U - p.r * eq.U / (1 + p.r)) <= tol);
            CHECK(std::fabs(wage_from_free_entry(p, tech, eq.theta) - wage_from_bargaining(p, eq.theta)) <= tol);
            CHECK(bellman_residuals(p, eq).max_abs() <= tol * std::max(1.0, std::fabs(eq.U)));
            CHECK(eq.u == doctest::Approx(0.05).epsilon(1e-10));
            CHECK(std::fabs(tightness_residual(p, tech, eq.theta)) <= 1e-12 * (p.y - p.z) / p.c);
        }
    }
}

TEST_CASE("higher productivity lowers unemployment") {
    for (const auto& p : test_economies()) {
        for (const auto& tech : calibrated(p)) {
            const double u0 = solve_equilibrium(p, tech).u;
            const double u1 = solve_equilibrium(p.with_y(p.y + 1e-3), tech).u;
            CHECK(u1 < u0);
        }
    }
}

TEST_CASE("probability out of range is reported") {
    // A huge efficiency makes q* > 1.
    const EconomyParams p = reference_economy(0.61);
    CHECK_THROWS_AS(solve_equilibrium(p, CobbDouglas{50.0, 0.5}), ProbabilityRangeError);
    CHECK_THROWS_AS(solve_equilibrium(p, CobbDouglas{50.0, 0.5}), MathError);
}
