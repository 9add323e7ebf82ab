#include "cones/triangle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace cones {

namespace {

constexpr double kPi = std::numbers::pi;

std::string triple(double x, double y, double z) {
    return "(" + std::to_string(x) + ", " + std::to_string(y) + ", " +
           std::to_string(z) + ")";
}

double clamped_acos(double c) {
    return std::acos(std::clamp(c, -1.0, 1.0));
}

}  // namespace

SphericalTriangle triangle_from_angles(double A, double B, double C) {
    const std::string where = " for angles " + triple(A, B, C);
    if (!(A > 0.0 && B > 0.0 && C > 0.0 && A < kPi && B < kPi && C < kPi))
        throw InvalidTriangle("angles in (0, pi)", "angle out of (0, pi)" + where);
    if (!(A + B + C > kPi))
        throw InvalidTriangle("A+B+C > pi", "angle sum not above pi" + where);
    if (!(A + B - C < kPi))
        throw InvalidTriangle("A+B-C < pi", "A+B-C reaches pi" + where);
    if (!(B + C - A < kPi))
        throw InvalidTriangle("B+C-A < pi", "B+C-A reaches pi" + where);
    if (!(C + A - B < kPi))
        throw InvalidTriangle("C+A-B < pi", "C+A-B reaches pi" + where);

    SphericalTriangle t;
    t.angles = {A, B, C};
    for (int i = 0; i < 3; ++i) {
        const double self = t.angles[i];
        const double next = t.angles[(i + 1) % 3];
        const double prev = t.angles[(i + 2) % 3];
        t.sides[i] = clamped_acos((std::cos(self) + std::cos(next) * std::cos(prev)) /
                                  (std::sin(next) * std::sin(prev)));
    }
    return t;
}

double triangle_area(const SphericalTriangle& t) {
    return t.angles[0] + t.angles[1] + t.angles[2] - kPi;
}

std::array<double, 3> angles_from_sides(double a, double b, double c) {
    const std::array<double, 3> s = {a, b, c};
    std::array<double, 3> angles;
    for (int i = 0; i < 3; ++i) {
        const double self = s[i];
        const double next = s[(i + 1) % 3];
        const double prev = s[(i + 2) % 3];
        angles[i] = clamped_acos((std::cos(self) - std::cos(next) * std::cos(prev)) /
                                 (std::sin(next) * std::sin(prev)));
    }
    return angles;
}

}  // namespace cones
