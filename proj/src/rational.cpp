#include "cones/rational.hpp"

#include <cctype>
#include <ostream>

namespace cones {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

mpz_class parse_integer(std::string_view s, std::string_view full) {
    if (!all_digits(s))
        throw ParseError("malformed number '" + std::string(full) + "'");
    return mpz_class(std::string(s), 10);
}

}  // namespace

Rational::Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_.canonicalize();
}

Rational::Rational(mpq_class q) : v_(std::move(q)) {
    if (v_.get_den() == 0) throw std::domain_error("Rational: zero denominator");
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::parse(std::string_view token, bool allow_sign) {
    std::string_view body = token;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        if (!allow_sign)
            throw ParseError("sign not allowed in '" + std::string(token) + "'");
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    if (body.empty()) throw ParseError("empty number token");

    mpq_class value;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        const mpz_class num = parse_integer(body.substr(0, slash), token);
        const mpz_class den = parse_integer(body.substr(slash + 1), token);
        if (den == 0)
            throw ParseError("zero denominator in '" + std::string(token) + "'");
        value = mpq_class(num, den);
    } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
        const std::string_view int_part = body.substr(0, dot);
        const std::string_view frac_part = body.substr(dot + 1);
        const mpz_class ip = parse_integer(int_part, token);
        const mpz_class fp = parse_integer(frac_part, token);
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac_part.size());
        value = mpq_class(ip * scale + fp, scale);
    } else {
        value = mpq_class(parse_integer(body, token));
    }
    value.canonicalize();
    if (negative) value = -value;
    return Rational(std::move(value));
}

mpz_class Rational::floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return q;
}

mpz_class Rational::ceil() const {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return q;
}

mpz_class Rational::round_half_down() const {
    // round_half_down(x) == ceil(x - 1/2)
    return Rational(*this - Rational(1, 2)).ceil();
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

}  // namespace cones
