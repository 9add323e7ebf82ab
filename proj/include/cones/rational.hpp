#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational scalar used by all angle/lattice computations.
 *
 * Thin value wrapper around GMP's mpq_class. Always canonical: lowest
 * terms, denominator > 0. Parsing accepts integers ("2"), fractions
 * ("5/4") and decimal numerals ("1.25"), all converted exactly; decimal
 * strings never round-trip through binary floating point.
 */

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cones {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long num, long den);
    explicit Rational(mpq_class q);

    /// Parse "INT", "INT/POSINT" or "INT.INT". With allow_sign a single
    /// leading '-' or '+' is accepted; otherwise any sign is a ParseError.
    static Rational parse(std::string_view token, bool allow_sign = true);

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    bool is_integer() const { return v_.get_den() == 1; }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_positive() const { return sgn(v_) > 0; }
    bool is_negative() const { return sgn(v_) < 0; }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t());
        return c < 0   ? std::strong_ordering::less
               : c > 0 ? std::strong_ordering::greater
                       : std::strong_ordering::equal;
    }

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    mpz_class floor() const;
    mpz_class ceil() const;
    /// Nearest integer; exact halves round toward -infinity.
    mpz_class round_half_down() const;

    double to_double() const { return v_.get_d(); }

    /// Canonical form: "p/q", or just "p" when integral.
    std::string str() const;

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace cones
