#pragma once

#include <utility>

#include "dmp/equilibrium.hpp"
#include "dmp/matching.hpp"

namespace dmp {

/// Calibrate the efficiency of `shape` so that `params` has unemployment `target_u`.
/// The efficiency carried by `shape` is ignored; alpha/gamma stay fixed.
struct CalibrationTarget {
    double target_u = 0.05;
    EconomyParams params;
    MatchingTechnology shape = CobbDouglas{};
};

struct Calibration {
    MatchingTechnology technology;
    double theta = 0.0;
    double fill = 0.0;
    double find = 0.0;
};

/// f* = s(1-u)/u. Throws InfeasibleTargetError when f* > 1.
double required_find_prob(double s, double target_u);

/// Closed-form inversion of the equilibrium condition: given f*, the condition
/// is linear in 1/q, which fixes q*, then theta* = f*/q*, then the efficiency.
Calibration calibrate_efficiency(const CalibrationTarget& target);

/// Alternative (c, A) pair with identical unemployment and job finding.
///
/// c' = zeta c and A' = zeta A qbar(theta*)/qbar(theta*/zeta), where qbar is the
/// unit-efficiency fill function. Requires 0 < zeta < 1/q*.
std::pair<EconomyParams, MatchingTechnology> renormalize(const EconomyParams& p, const MatchingTechnology& tech,
                                                         const Equilibrium& eq, double zeta);

}  // namespace dmp
