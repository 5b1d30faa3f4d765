#include "dmp/equilibrium.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "dmp/errors.hpp"
#include "dmp/root_finding.hpp"

namespace dmp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kIdentityTol = 1e-9;
// phi = 0 has no analytic upper bracket; expand geometrically up to this cap.
constexpr double kExpansionCap = 1e12;
constexpr double kLowerFloor = 1e-300;

bool finite_all(std::initializer_list<double> xs) {
    return std::all_of(xs.begin(), xs.end(), [](double x) { return std::isfinite(x); });
}

void check_identity(double lhs, double rhs, double scale, const char* name) {
    if (std::fabs(lhs - rhs) > kIdentityTol * std::max(1.0, std::fabs(scale)))
        throw InvariantError(fmt::format("equilibrium identity '{}' violated: {:.17g} vs {:.17g}", name, lhs, rhs));
}

}  // namespace

EconomyParams EconomyParams::from_rate(double y, double z, double c, double phi, double s, double r) {
    EconomyParams p{y, z, c, phi, s, r};
    p.validate();
    return p;
}

EconomyParams EconomyParams::from_beta(double y, double z, double c, double phi, double s, double beta) {
    if (!(beta > 0.0 && beta < 1.0)) throw DomainError(fmt::format("beta must lie in (0,1), got {}", beta));
    return from_rate(y, z, c, phi, s, (1.0 - beta) / beta);
}

EconomyParams EconomyParams::from_annual_rate(double y, double z, double c, double phi, double s, double annual,
                                              int days) {
    if (!(annual > 0.0) || !std::isfinite(annual))
        throw DomainError(fmt::format("annual interest rate must be positive, got {}", annual));
    if (days < 1) throw DomainError(fmt::format("days per year must be >= 1, got {}", days));
    return from_rate(y, z, c, phi, s, std::expm1(std::log1p(annual) / days));
}

void EconomyParams::validate() const {
    if (!finite_all({y, z, c, phi, s, r})) throw DomainError("economy parameters must be finite");
    if (!(z > 0.0)) throw DomainError(fmt::format("z must be positive, got {}", z));
    if (!(y > 0.0)) throw DomainError(fmt::format("y must be positive, got {}", y));
    if (!(c > 0.0)) throw DomainError(fmt::format("c must be positive, got {}", c));
    if (!(phi >= 0.0 && phi < 1.0)) throw DomainError(fmt::format("phi must lie in [0,1), got {}", phi));
    if (!(s > 0.0 && s < 1.0)) throw DomainError(fmt::format("s must lie in (0,1), got {}", s));
    if (!(r > 0.0)) throw DomainError(fmt::format("r must be positive, got {}", r));
}

EconomyParams EconomyParams::with_y(double new_y) const {
    EconomyParams p = *this;
    p.y = new_y;
    return p;
}

EconomyParams reference_economy(double y) {
    return EconomyParams::from_beta(y, 0.6, 0.1, 0.5, 0.001, std::pow(0.95, 1.0 / 365.0));
}

ExistenceReport check_existence(const EconomyParams& p) {
    p.validate();
    ExistenceReport rep;
    const double beta = p.beta();
    rep.surplus_condition_holds = (1.0 - p.phi) * (p.y - p.z) / (p.r + p.s) > p.c;
    rep.initial_vacancy_value = -p.c + beta * (1.0 - p.phi) * (p.y - p.z) / (1.0 - beta * (1.0 - p.s));
    rep.bracket_lower = 0.0;
    rep.bracket_upper = p.phi > 0.0 ? (1.0 - p.phi) * (p.y - p.z) / (p.phi * p.c) : kInf;
    return rep;
}

double tightness_residual(const EconomyParams& p, const MatchingTechnology& tech, double theta) {
    if (!(theta > 0.0)) throw DomainError(fmt::format("tightness_residual: theta must be positive, got {}", theta));
    const double q = fill_prob(tech, theta);
    // Split form keeps the two terms separately finite as q -> 0.
    return (p.y - p.z) / p.c - (p.r + p.s) / ((1.0 - p.phi) * q) - p.phi * theta / (1.0 - p.phi);
}

double solve_tightness(const EconomyParams& p, const MatchingTechnology& tech, double tol) {
    if (!(tol > 0.0)) throw DomainError(fmt::format("solve_tightness: tol must be positive, got {}", tol));
    const ExistenceReport ex = check_existence(p);
    if (!ex.surplus_condition_holds)
        throw ExistenceError(fmt::format(
            "no equilibrium: the value of an initial vacancy is not positive "
            "(lim V = {:.6g}; need (1-phi)(y-z)/(r+s) > c)",
            ex.initial_vacancy_value));

    auto T = [&](double th) { return tightness_residual(p, tech, th); };

    double hi = ex.bracket_upper;
    double t_hi;
    if (std::isfinite(hi)) {
        t_hi = T(hi);
    } else {
        hi = 1.0;
        t_hi = T(hi);
        while (!(t_hi < 0.0)) {
            hi *= 2.0;
            if (hi > kExpansionCap)
                throw BracketError(fmt::format("residual still positive at theta = {:g}", kExpansionCap));
            t_hi = T(hi);
        }
    }
    if (!(t_hi < 0.0))
        throw BracketError(fmt::format("residual not negative at the upper bracket theta = {:.6g}", hi));

    double lo = hi;
    double t_lo = t_hi;
    while (!(t_lo > 0.0)) {
        lo /= 10.0;
        if (lo < kLowerFloor)
            throw BracketError(fmt::format(
                "residual never turns positive as theta -> 0 for {}; matching efficiency too low for this economy",
                describe(tech)));
        t_lo = T(lo);
    }

    const double f_tol = tol * (p.y - p.z) / p.c;
    const RootResult res = brent(T, lo, hi, t_lo, t_hi, f_tol);
    if (!res.converged)
        throw MathError(fmt::format("tightness solve stalled at theta = {:.17g} with residual {:.3g} (tol {:.3g})",
                                    res.root, res.residual, f_tol));
    return res.root;
}

double steady_state_unemployment(double s, double f) {
    if (!(s > 0.0 && s < 1.0)) throw DomainError(fmt::format("s must lie in (0,1), got {}", s));
    if (!(f > 0.0 && f <= 1.0)) throw DomainError(fmt::format("f must lie in (0,1], got {}", f));
    return s / (s + f);
}

double wage_from_free_entry(const EconomyParams& p, const MatchingTechnology& tech, double theta) {
    return p.y - (p.r + p.s) * p.c / fill_prob(tech, theta);
}

double wage_from_bargaining(const EconomyParams& p, double theta) {
    return p.z + p.phi * (p.y - p.z + theta * p.c);
}

double BellmanResiduals::max_abs() const {
    return std::max({std::fabs(filled_job), std::fabs(vacancy), std::fabs(employment), std::fabs(unemployment)});
}

BellmanResiduals bellman_residuals(const EconomyParams& p, const Equilibrium& eq) {
    const double beta = p.beta();
    BellmanResiduals b;
    b.filled_job = eq.J - (p.y - eq.w + beta * (p.s * eq.V + (1.0 - p.s) * eq.J));
    b.vacancy = eq.V - (-p.c + beta * (eq.q * eq.J + (1.0 - eq.q) * eq.V));
    b.employment = eq.E - (eq.w + beta * (p.s * eq.U + (1.0 - p.s) * eq.E));
    b.unemployment = eq.U - (p.z + beta * (eq.f * eq.E + (1.0 - eq.f) * eq.U));
    return b;
}

Equilibrium solve_equilibrium(const EconomyParams& p, const MatchingTechnology& tech, double tol) {
    Equilibrium eq;
    eq.theta = solve_tightness(p, tech, tol);
    eq.q = fill_prob(tech, eq.theta);
    eq.f = find_prob(tech, eq.theta);
    if (!(eq.q > 0.0 && eq.q <= 1.0) || !(eq.f > 0.0 && eq.f <= 1.0))
        throw ProbabilityRangeError(
            eq.q, eq.f,
            fmt::format("per-period probabilities outside (0,1]: fill q = {:.6g}, find f = {:.6g}; "
                        "shorten the model period or lower the matching efficiency",
                        eq.q, eq.f));

    const double beta = p.beta();
    eq.u = steady_state_unemployment(p.s, eq.f);
    eq.w = wage_from_bargaining(p, eq.theta);
    eq.J = (p.y - eq.w) / (1.0 - beta * (1.0 - p.s));
    eq.V = 0.0;
    eq.annuity_U = p.z + p.phi * p.c * eq.theta / (1.0 - p.phi);
    eq.U = eq.annuity_U * (1.0 + p.r) / p.r;
    eq.S = eq.J / (1.0 - p.phi);
    eq.E = eq.U + p.phi * eq.S;

    check_identity(eq.J, p.c / (beta * eq.q), eq.J, "free entry J = c/(beta q)");
    check_identity(wage_from_free_entry(p, tech, eq.theta), eq.w, eq.w, "wage equations agree");
    const BellmanResiduals b = bellman_residuals(p, eq);
    check_identity(b.filled_job, 0.0, eq.J, "Bellman: filled job");
    check_identity(b.vacancy, 0.0, eq.J, "Bellman: vacancy");
    check_identity(b.employment, 0.0, eq.E, "Bellman: employment");
    check_identity(b.unemployment, 0.0, eq.U, "Bellman: unemployment");
    return eq;
}

}  // namespace dmp
