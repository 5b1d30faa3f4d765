#include "dmp/calibration.hpp"

#include <cmath>

#include <fmt/format.h>

#include "dmp/errors.hpp"

namespace dmp {

double required_find_prob(double s, double target_u) {
    if (!(s > 0.0 && s < 1.0)) throw DomainError(fmt::format("s must lie in (0,1), got {}", s));
    if (!(target_u > 0.0 && target_u < 1.0))
        throw DomainError(fmt::format("target unemployment must lie in (0,1), got {}", target_u));
    const double f = s * (1.0 - target_u) / target_u;
    if (f > 1.0)
        throw InfeasibleTargetError(fmt::format(
            "target u = {} with s = {} needs a per-period finding probability of {:.6g} > 1", target_u, s, f));
    return f;
}

Calibration calibrate_efficiency(const CalibrationTarget& target) {
    const EconomyParams& p = target.params;
    const ExistenceReport ex = check_existence(p);
    if (!ex.surplus_condition_holds)
        throw ExistenceError(fmt::format(
            "cannot calibrate: the value of an initial vacancy is not positive (lim V = {:.6g})",
            ex.initial_vacancy_value));

    const double f = required_find_prob(p.s, target.target_u);
    const double q = p.c * (p.r + p.s + p.phi * f) / ((1.0 - p.phi) * (p.y - p.z));
    if (!(q > 0.0 && q <= 1.0))
        throw ProbabilityRangeError(q, f, fmt::format("calibrated fill probability {:.6g} outside (0,1]", q));
    const double theta = f / q;
    const double efficiency = q / target.shape.unit_fill_prob(theta);
    return {target.shape.with_efficiency(efficiency), theta, q, f};
}

std::pair<EconomyParams, MatchingTechnology> renormalize(const EconomyParams& p, const MatchingTechnology& tech,
                                                         const Equilibrium& eq, double zeta) {
    if (!(zeta > 0.0 && zeta < 1.0 / eq.q))
        throw NormalizationRangeError(
            fmt::format("normalization scale must lie in (0, 1/q*) = (0, {:.6g}), got {}", 1.0 / eq.q, zeta));
    EconomyParams scaled = p;
    scaled.c = zeta * p.c;
    const double efficiency =
        zeta * tech.efficiency() * tech.unit_fill_prob(eq.theta) / tech.unit_fill_prob(eq.theta / zeta);
    return {scaled, tech.with_efficiency(efficiency)};
}

}  // namespace dmp
