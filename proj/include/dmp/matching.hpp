#pragma once

#include <string>
#include <string_view>
#include <variant>

namespace dmp {

/// Cobb-Douglas matching, M(u,v) = A u^alpha v^(1-alpha).
struct CobbDouglas {
    double efficiency = 1.0;
    double alpha = 0.5;

    double unit_fill(double theta) const;
    double unit_fill_derivative(double theta) const;
    double elasticity(double theta) const;
};

/// Den Haan-Ramey-Watson matching, M(u,v) = A uv / (u^gamma + v^gamma)^(1/gamma).
struct Nonlinear {
    double efficiency = 1.0;
    double gamma = 1.27;

    double unit_fill(double theta) const;
    double unit_fill_derivative(double theta) const;
    double elasticity(double theta) const;
};

enum class Family { cobb_douglas, nonlinear };

std::string_view family_name(Family family);
/// Accepts "cobb_douglas" or "nonlinear"; throws SchemaError otherwise.
Family parse_family(std::string_view name);

/// A constant-returns matching technology with a multiplicative efficiency.
///
/// All rates are expressed in tightness theta = v/u. The "unit" functions drop
/// the efficiency constant, so fill_prob(theta) = efficiency * unit_fill_prob(theta).
/// Probabilities are not clamped; range checks belong to the equilibrium solver.
class MatchingTechnology {
public:
    using Spec = std::variant<CobbDouglas, Nonlinear>;

    MatchingTechnology(CobbDouglas spec);
    MatchingTechnology(Nonlinear spec);

    /// Builds a technology from its family and shape parameter (alpha or gamma).
    static MatchingTechnology make(Family family, double shape, double efficiency = 1.0);

    Family family() const noexcept;
    double efficiency() const noexcept;
    /// alpha for Cobb-Douglas, gamma for the nonlinear form.
    double shape() const noexcept;
    const Spec& spec() const noexcept { return spec_; }

    MatchingTechnology with_efficiency(double efficiency) const;

    double unit_fill_prob(double theta) const;

private:
    explicit MatchingTechnology(Spec spec);
    Spec spec_;
};

/// M(u,v). Zero when either side of the market is empty.
double matches(const MatchingTechnology& tech, double u, double v);
/// q(theta) = M(u,v)/v.
double fill_prob(const MatchingTechnology& tech, double theta);
/// theta q(theta) = M(u,v)/u.
double find_prob(const MatchingTechnology& tech, double theta);
/// q'(theta), analytic.
double fill_prob_derivative(const MatchingTechnology& tech, double theta);
/// eta_{M,u}(theta) = -theta q'(theta) / q(theta). Independent of efficiency.
double match_elasticity(const MatchingTechnology& tech, double theta);

std::string describe(const MatchingTechnology& tech);

}  // namespace dmp
