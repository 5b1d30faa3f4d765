#pragma once

#include "dmp/matching.hpp"

namespace dmp {

/// One economy, per model period (a day in the reference calibration).
///
/// The interest rate is the stored quantity; the discount factor is derived
/// as beta = 1/(1+r). Use the named constructors to enter either one.
struct EconomyParams {
    double y = 0.0;    ///< output per worker
    double z = 0.0;    ///< value of nonwork
    double c = 0.0;    ///< vacancy posting cost
    double phi = 0.0;  ///< worker bargaining power, in [0,1)
    double s = 0.0;    ///< separation probability
    double r = 0.0;    ///< interest rate

    static EconomyParams from_rate(double y, double z, double c, double phi, double s, double r);
    static EconomyParams from_beta(double y, double z, double c, double phi, double s, double beta);
    /// beta = (1/(1+annual))^(1/days)
    static EconomyParams from_annual_rate(double y, double z, double c, double phi, double s, double annual,
                                          int days = 365);

    double beta() const noexcept { return 1.0 / (1.0 + r); }
    double fundamental_surplus() const noexcept { return y - z; }

    /// Throws DomainError on out-of-range parameters. y <= z is not rejected
    /// here; it fails the existence check instead.
    void validate() const;
    EconomyParams with_y(double new_y) const;
};

/// The daily reference economy: z=0.6, c=0.1, phi=0.5, s=0.001, beta=0.95^(1/365).
EconomyParams reference_economy(double y);

struct ExistenceReport {
    bool surplus_condition_holds = false;  ///< (1-phi)(y-z)/(r+s) > c
    double initial_vacancy_value = 0.0;    ///< lim_{theta->0} V
    double bracket_lower = 0.0;
    double bracket_upper = 0.0;  ///< +inf when phi = 0
};

ExistenceReport check_existence(const EconomyParams& p);

/// T(theta) = (y-z)/c - [r+s+phi theta q(theta)] / [(1-phi) q(theta)].
/// Root of T is the equilibrium tightness; T is strictly decreasing.
double tightness_residual(const EconomyParams& p, const MatchingTechnology& tech, double theta);

/// |T(theta*)| <= tol * (y-z)/c on return.
double solve_tightness(const EconomyParams& p, const MatchingTechnology& tech, double tol = 1e-12);

/// u = s / (s + f)
double steady_state_unemployment(double s, double f);

/// w = y - (r+s) c / q(theta), from free entry and the filled-job value.
double wage_from_free_entry(const EconomyParams& p, const MatchingTechnology& tech, double theta);
/// w = z + phi (y - z + theta c), the bargained wage.
double wage_from_bargaining(const EconomyParams& p, double theta);

struct Equilibrium {
    double theta = 0.0;
    double u = 0.0;
    double w = 0.0;
    double q = 0.0;  ///< fill probability
    double f = 0.0;  ///< find probability
    double J = 0.0;  ///< filled job
    double V = 0.0;  ///< vacancy, zero by free entry
    double E = 0.0;  ///< employment
    double U = 0.0;  ///< unemployment
    double S = 0.0;  ///< match surplus
    double annuity_U = 0.0;  ///< r U / (1+r)
};

/// Residuals of the four Bellman equations at a candidate solution, each LHS - RHS.
struct BellmanResiduals {
    double filled_job = 0.0;
    double vacancy = 0.0;
    double employment = 0.0;
    double unemployment = 0.0;

    double max_abs() const;
};

BellmanResiduals bellman_residuals(const EconomyParams& p, const Equilibrium& eq);

/// Solves tightness then assembles every steady-state object.
///
/// Throws ExistenceError / BracketError from the tightness solve,
/// ProbabilityRangeError when q* or f* leaves (0,1], and InvariantError if an
/// accounting identity fails by more than 1e-9.
Equilibrium solve_equilibrium(const EconomyParams& p, const MatchingTechnology& tech, double tol = 1e-12);

}  // namespace dmp
