#pragma once

#include "dmp/equilibrium.hpp"
#include "dmp/matching.hpp"

namespace dmp {

/// Decomposition of the tightness elasticity, eta_{theta,y} = Upsilon * y/(y-z).
struct ElasticityReport {
    double eta_theta_y = 0.0;
    double upsilon = 0.0;
    double inverse_surplus_fraction = 0.0;  ///< y/(y-z)
    double eta_M_u = 0.0;
    double upsilon_upper_bound = 0.0;  ///< 1/eta_{M,u}
    double eta_w_y = 0.0;
    double dtheta_dy = 0.0;
    double dw_dy = 0.0;
    /// False when theta was not an equilibrium of the economy; the formulas
    /// then lack their derivation's premise.
    bool at_equilibrium = false;
    bool bounds_hold = false;  ///< 1 < Upsilon < 1/eta (or equality at phi = 0)
};

/// Upsilon as a function of its ingredients: rs = r+s, phi_find = chi * phi * theta q(theta).
double upsilon_formula(double rs, double eta, double phi_find);
/// dw/dy = phi [rs eta + f] / [rs eta + phi f]; phi = 1 is admissible here.
double wage_derivative_formula(double rs, double eta, double find, double phi);

double upsilon(const EconomyParams& p, const MatchingTechnology& tech, double theta);
/// Upsilon(chi); chi = 1 gives upsilon(), chi = 0 gives 1/eta.
double upsilon_chi(const EconomyParams& p, const MatchingTechnology& tech, double theta, double chi);
/// dtheta/dy by implicit differentiation of the equilibrium condition.
double tightness_derivative(const EconomyParams& p, const MatchingTechnology& tech, double theta);
/// dw/dy along the equilibrium.
double wage_derivative(const EconomyParams& p, const MatchingTechnology& tech, double theta);
/// eta_{w,y} = dw/dy * y / w, with w the bargained wage at theta.
double wage_elasticity(const EconomyParams& p, const MatchingTechnology& tech, double theta);

ElasticityReport tightness_elasticity(const EconomyParams& p, const MatchingTechnology& tech, double theta);

}  // namespace dmp
