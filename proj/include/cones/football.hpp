#pragma once

/**
 * @file football.hpp
 * @brief Analytic model of the two-cone-point sphere (Troyanov football).
 *
 * The football with both cone angles 2*pi*theta carries the rotation
 * metric dr^2 + theta^2 sin^2(r) dphi^2 on r in [0, pi]. Its area is
 * 4*pi*theta in closed form; build_football cross-checks that value by
 * numeric quadrature of the area integral. The two poles sit at
 * meridian distance exactly pi.
 */

#include "cones/rational.hpp"

namespace cones {

struct NonPositiveTheta : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FootballReport {
    Rational theta;
    double area = 0.0;             // closed form 4*pi*theta
    double quadrature_area = 0.0;  // integral of 2*pi*theta*sin(r), r in [0, pi]
    double pole_distance = 0.0;    // meridian length, exactly pi

    /// Area of the closed r-neighborhood of a pole: 2*pi*theta*(1 - cos r).
    double sigma_r_area(double r) const;
};

FootballReport build_football(const Rational& theta);

}  // namespace cones
