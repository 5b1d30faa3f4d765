#include "dmp/elasticity.hpp"

#include <cmath>

#include <fmt/format.h>

#include "dmp/errors.hpp"

namespace dmp {

namespace {

// Relative residual below which theta counts as the solved tightness.
constexpr double kEquilibriumTol = 1e-8;

}  // namespace

double upsilon_formula(double rs, double eta, double phi_find) {
    return 1.0 + rs * (1.0 - eta) / (rs * eta + phi_find);
}

double wage_derivative_formula(double rs, double eta, double find, double phi) {
    return phi * (rs * eta + find) / (rs * eta + phi * find);
}

double upsilon(const EconomyParams& p, const MatchingTechnology& tech, double theta) {
    return upsilon_chi(p, tech, theta, 1.0);
}

double upsilon_chi(const EconomyParams& p, const MatchingTechnology& tech, double theta, double chi) {
    if (!(chi >= 0.0 && chi <= 1.0)) throw DomainError(fmt::format("upsilon_chi: chi must lie in [0,1], got {}", chi));
    const double eta = match_elasticity(tech, theta);
    return upsilon_formula(p.r + p.s, eta, chi * p.phi * find_prob(tech, theta));
}

double tightness_derivative(const EconomyParams& p, const MatchingTechnology& tech, double theta) {
    const double rs = p.r + p.s;
    const double eta = match_elasticity(tech, theta);
    const double phi_f = p.phi * find_prob(tech, theta);
    return (rs + phi_f) / (rs * eta + phi_f) * theta / (p.y - p.z);
}

double wage_derivative(const EconomyParams& p, const MatchingTechnology& tech, double theta) {
    return wage_derivative_formula(p.r + p.s, match_elasticity(tech, theta), find_prob(tech, theta), p.phi);
}

double wage_elasticity(const EconomyParams& p, const MatchingTechnology& tech, double theta) {
    return wage_derivative(p, tech, theta) * p.y / wage_from_bargaining(p, theta);
}

ElasticityReport tightness_elasticity(const EconomyParams& p, const MatchingTechnology& tech, double theta) {
    ElasticityReport rep;
    rep.eta_M_u = match_elasticity(tech, theta);
    rep.upsilon = upsilon(p, tech, theta);
    rep.inverse_surplus_fraction = p.y / (p.y - p.z);
    rep.eta_theta_y = rep.upsilon * rep.inverse_surplus_fraction;
    rep.upsilon_upper_bound = 1.0 / rep.eta_M_u;
    rep.dtheta_dy = tightness_derivative(p, tech, theta);
    rep.dw_dy = wage_derivative(p, tech, theta);
    rep.eta_w_y = rep.dw_dy * p.y / wage_from_bargaining(p, theta);

    const double scale = (p.y - p.z) / p.c;
    rep.at_equilibrium = std::fabs(tightness_residual(p, tech, theta)) <= kEquilibriumTol * std::fabs(scale);
    rep.bounds_hold = p.phi > 0.0 ? (rep.upsilon > 1.0 && rep.upsilon < rep.upsilon_upper_bound)
                                  : std::fabs(rep.upsilon - rep.upsilon_upper_bound) <=
                                        1e-12 * rep.upsilon_upper_bound;
    return rep;
}

}  // namespace dmp
