#pragma once

/**
 * @file angles.hpp
 * @brief Cone-angle vectors, divisors and their Euler characteristic.
 *
 * An AngleVector holds the multipliers theta_i > 0; the cone angle at
 * index i is 2*pi*theta_i. The associated divisor is beta = theta - 1,
 * and chi = sum(beta_i) + 2 on the sphere. Everything here is exact
 * rational arithmetic; the only floating-point output is target_area,
 * which feeds geometry audits.
 */

#include <string>
#include <vector>

#include "cones/rational.hpp"

namespace cones {

struct NonPositiveAngle : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonPositiveChi : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Integrality trichotomy over the entries (N = {1,2,3,...}).
enum class IntegralityClass { AllNonIntegral, AllIntegral, Mixed, Empty };

const char* to_string(IntegralityClass c);

class AngleVector {
public:
    AngleVector() = default;
    /// Throws NonPositiveAngle unless every entry is strictly positive.
    explicit AngleVector(std::vector<Rational> entries);

    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    const Rational& operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<Rational>& entries() const { return entries_; }

    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    friend bool operator==(const AngleVector& a, const AngleVector& b) {
        return a.entries_ == b.entries_;
    }

private:
    std::vector<Rational> entries_;
};

struct Divisor {
    std::vector<Rational> entries;  // beta_i = theta_i - 1, each > -1
    int base_euler = 2;             // chi of the underlying sphere
};

/// Parse angle tokens ("3/2", "1.25", "2"); signs are rejected.
AngleVector parse_angles(const std::vector<std::string>& tokens);

Divisor divisor(const AngleVector& theta);

/// chi = sum(beta_i) + base_euler, exact.
Rational euler_characteristic(const Divisor& d);

/// 2*pi*chi, the total area a curvature-1 metric must have.
/// Throws NonPositiveChi when chi <= 0.
double target_area(const Divisor& d);

IntegralityClass integrality_class(const AngleVector& theta);

}  // namespace cones
