#pragma once

/**
 * @file triangle.hpp
 * @brief Spherical triangles solved from their corner angles.
 *
 * A triangle with angles A, B, C in (0, pi) exists on the unit sphere
 * iff A+B+C > pi and each of A+B-C, B+C-A, C+A-B is < pi. Sides come
 * from the dual spherical law of cosines,
 *   cos a = (cos A + cos B cos C) / (sin B sin C),
 * with side a opposite angle A. The area is the spherical excess
 * A + B + C - pi.
 */

#include <array>
#include <stdexcept>
#include <string>

namespace cones {

struct InvalidTriangle : std::runtime_error {
    InvalidTriangle(std::string condition, const std::string& detail)
        : std::runtime_error("invalid spherical triangle: " + detail),
          failed_condition(std::move(condition)) {}
    std::string failed_condition;  // the inequality that failed
};

struct SphericalTriangle {
    std::array<double, 3> angles;  // (A, B, C), radians, each in (0, pi)
    std::array<double, 3> sides;   // (a, b, c), radians; a opposite A
};

SphericalTriangle triangle_from_angles(double A, double B, double C);

/// Spherical excess A + B + C - pi; always in (0, 2*pi).
double triangle_area(const SphericalTriangle& t);

/// Inverse route: angles from sides via the spherical law of cosines,
/// cos A = (cos a - cos b cos c) / (sin b sin c). Used by audits.
std::array<double, 3> angles_from_sides(double a, double b, double c);

}  // namespace cones
