#include "dmp/matching.hpp"

#include <cmath>

#include <fmt/format.h>

#include "dmp/errors.hpp"

namespace dmp {

namespace {

// Past this point (1 + theta^gamma) is evaluated in log space.
constexpr double kOverflowGuard = 1e300;

void require_positive_theta(double theta, const char* op) {
    if (!(theta > 0.0) || !std::isfinite(theta))
        throw DomainError(fmt::format("{}: tightness must be positive and finite, got {}", op, theta));
}

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

double CobbDouglas::unit_fill(double theta) const { return std::pow(theta, -alpha); }

double CobbDouglas::unit_fill_derivative(double theta) const {
    return -alpha * std::pow(theta, -alpha - 1.0);
}

double CobbDouglas::elasticity(double) const { return alpha; }

double Nonlinear::unit_fill(double theta) const {
    const double x = std::pow(theta, gamma);
    if (x > kOverflowGuard || !std::isfinite(x)) {
        // log(1 + x) = log x + log1p(1/x)
        const double log_x = gamma * std::log(theta);
        const double log_1px = log_x + std::log1p(std::exp(-log_x));
        return std::exp(-log_1px / gamma);
    }
    return std::pow(1.0 + x, -1.0 / gamma);
}

double Nonlinear::unit_fill_derivative(double theta) const {
    // q' = -A theta^(gamma-1) (1 + theta^gamma)^(-1/gamma - 1) = -q eta / theta
    return -unit_fill(theta) * elasticity(theta) / theta;
}

double Nonlinear::elasticity(double theta) const {
    const double x = std::pow(theta, gamma);
    if (x <= 1.0) return x / (1.0 + x);
    return 1.0 / (1.0 + std::pow(theta, -gamma));
}

std::string_view family_name(Family family) {
    switch (family) {
        case Family::cobb_douglas: return "cobb_douglas";
        case Family::nonlinear: return "nonlinear";
    }
    return "unknown";
}

Family parse_family(std::string_view name) {
    if (name == "cobb_douglas") return Family::cobb_douglas;
    if (name == "nonlinear") return Family::nonlinear;
    throw SchemaError(fmt::format("unknown matching family '{}'; expected cobb_douglas or nonlinear", name));
}

MatchingTechnology::MatchingTechnology(CobbDouglas spec) : MatchingTechnology(Spec{spec}) {}
MatchingTechnology::MatchingTechnology(Nonlinear spec) : MatchingTechnology(Spec{spec}) {}

MatchingTechnology::MatchingTechnology(Spec spec) : spec_(spec) {
    std::visit(Overloaded{
                   [](const CobbDouglas& cd) {
                       if (!(cd.efficiency > 0.0) || !std::isfinite(cd.efficiency))
                           throw DomainError(fmt::format("efficiency must be positive, got {}", cd.efficiency));
                       if (!(cd.alpha > 0.0 && cd.alpha < 1.0))
                           throw DomainError(fmt::format("alpha must lie in (0,1), got {}", cd.alpha));
                   },
                   [](const Nonlinear& nl) {
                       if (!(nl.efficiency > 0.0) || !std::isfinite(nl.efficiency))
                           throw DomainError(fmt::format("efficiency must be positive, got {}", nl.efficiency));
                       if (!(nl.gamma > 0.0) || !std::isfinite(nl.gamma))
                           throw DomainError(fmt::format("gamma must be positive, got {}", nl.gamma));
                   },
               },
               spec_);
}

MatchingTechnology MatchingTechnology::make(Family family, double shape, double efficiency) {
    if (family == Family::cobb_douglas) return CobbDouglas{efficiency, shape};
    return Nonlinear{efficiency, shape};
}

Family MatchingTechnology::family() const noexcept {
    return std::holds_alternative<CobbDouglas>(spec_) ? Family::cobb_douglas : Family::nonlinear;
}

double MatchingTechnology::efficiency() const noexcept {
    return std::visit([](const auto& s) { return s.efficiency; }, spec_);
}

double MatchingTechnology::shape() const noexcept {
    return std::visit(Overloaded{[](const CobbDouglas& cd) { return cd.alpha; },
                                 [](const Nonlinear& nl) { return nl.gamma; }},
                      spec_);
}

MatchingTechnology MatchingTechnology::with_efficiency(double efficiency) const {
    return make(family(), shape(), efficiency);
}

double MatchingTechnology::unit_fill_prob(double theta) const {
    require_positive_theta(theta, "unit_fill_prob");
    return std::visit([theta](const auto& s) { return s.unit_fill(theta); }, spec_);
}

double matches(const MatchingTechnology& tech, double u, double v) {
    if (!(u >= 0.0) || !(v >= 0.0))
        throw DomainError(fmt::format("matches: u and v must be nonnegative, got u={} v={}", u, v));
    if (u == 0.0 || v == 0.0) return 0.0;
    return u * find_prob(tech, v / u);
}

double fill_prob(const MatchingTechnology& tech, double theta) {
    require_positive_theta(theta, "fill_prob");
    return tech.efficiency() * tech.unit_fill_prob(theta);
}

double find_prob(const MatchingTechnology& tech, double theta) {
    require_positive_theta(theta, "find_prob");
    return theta * fill_prob(tech, theta);
}

double fill_prob_derivative(const MatchingTechnology& tech, double theta) {
    require_positive_theta(theta, "fill_prob_derivative");
    return tech.efficiency() *
           std::visit([theta](const auto& s) { return s.unit_fill_derivative(theta); }, tech.spec());
}

double match_elasticity(const MatchingTechnology& tech, double theta) {
    require_positive_theta(theta, "match_elasticity");
    return std::visit([theta](const auto& s) { return s.elasticity(theta); }, tech.spec());
}

std::string describe(const MatchingTechnology& tech) {
    if (tech.family() == Family::cobb_douglas)
        return fmt::format("cobb_douglas(A={:.10g}, alpha={})", tech.efficiency(), tech.shape());
    return fmt::format("nonlinear(A={:.10g}, gamma={})", tech.efficiency(), tech.shape());
}

}  // namespace dmp
