#include "cones/football.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <numbers>

namespace cones {

double FootballReport::sigma_r_area(double r) const {
    return 2.0 * std::numbers::pi * theta.to_double() * (1.0 - std::cos(r));
}

FootballReport build_football(const Rational& theta) {
    if (!theta.is_positive())
        throw NonPositiveTheta("football needs theta > 0, got " + theta.str());

    FootballReport report;
    report.theta = theta;
    const double t = theta.to_double();
    report.area = 4.0 * std::numbers::pi * t;
    report.pole_distance = std::numbers::pi;

    const auto circumference = [t](double r) {
        return 2.0 * std::numbers::pi * t * std::sin(r);
    };
    report.quadrature_area = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
        circumference, 0.0, std::numbers::pi, 10, 1e-14);
    return report;
}

}  // namespace cones
