#include "cones/angles.hpp"

#include <cmath>
#include <numbers>

namespace cones {

const char* to_string(IntegralityClass c) {
    switch (c) {
        case IntegralityClass::AllNonIntegral: return "AllNonIntegral";
        case IntegralityClass::AllIntegral: return "AllIntegral";
        case IntegralityClass::Mixed: return "Mixed";
        case IntegralityClass::Empty: return "Empty";
    }
    return "?";
}

AngleVector::AngleVector(std::vector<Rational> entries) : entries_(std::move(entries)) {
    for (const Rational& t : entries_)
        if (!t.is_positive())
            throw NonPositiveAngle("angle multiplier must be > 0, got " + t.str());
}

AngleVector parse_angles(const std::vector<std::string>& tokens) {
    std::vector<Rational> values;
    values.reserve(tokens.size());
    for (const std::string& tok : tokens)
        values.push_back(Rational::parse(tok, /*allow_sign=*/false));
    return AngleVector(std::move(values));
}

Divisor divisor(const AngleVector& theta) {
    Divisor d;
    d.entries.reserve(theta.size());
    for (const Rational& t : theta) d.entries.push_back(t - Rational(1));
    return d;
}

Rational euler_characteristic(const Divisor& d) {
    Rational chi(d.base_euler);
    for (const Rational& b : d.entries) chi += b;
    return chi;
}

double target_area(const Divisor& d) {
    const Rational chi = euler_characteristic(d);
    if (!chi.is_positive())
        throw NonPositiveChi("chi = " + chi.str() + " is not positive");
    return 2.0 * std::numbers::pi * chi.to_double();
}

IntegralityClass integrality_class(const AngleVector& theta) {
    if (theta.empty()) return IntegralityClass::Empty;
    std::size_t integral = 0;
    for (const Rational& t : theta)
        if (t.is_integer()) ++integral;  // entries are > 0, so integer means in N
    if (integral == 0) return IntegralityClass::AllNonIntegral;
    if (integral == theta.size()) return IntegralityClass::AllIntegral;
    return IntegralityClass::Mixed;
}

}  // namespace cones
