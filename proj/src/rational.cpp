#include "euclid/rational.hpp"

#include <ostream>

#include "euclid/errors.hpp"

namespace euclid {

namespace {

Integer gcd_abs(const Integer& a, const Integer& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
    return Integer(std::move(g));
}

}  // namespace

Rational::Rational(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw domain_error("zero denominator");
    if (den_.sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = Integer(1);
        return;
    }
    Integer g = gcd_abs(num_, den_);
    if (!g.is_one()) {
        num_ = divexact(num_, g);
        den_ = divexact(den_, g);
    }
}

Rational normalize_rational(const Integer& num, const Integer& den) { return Rational(num, den); }

Rational Rational::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(Integer::parse(text));
    return Rational(Integer::parse(text.substr(0, slash)), Integer::parse(text.substr(slash + 1)));
}

Rational Rational::parse_decimal(std::string_view text) {
    auto dot = text.find('.');
    if (dot == std::string_view::npos) return parse(text);
    std::string_view whole = text.substr(0, dot), frac = text.substr(dot + 1);
    if (frac.empty() || frac.front() == '+' || frac.front() == '-')
        throw parse_error("malformed decimal: '" + std::string(text) + "'");
    std::string digits(whole);
    if (digits.empty() || digits == "-" || digits == "+") digits += '0';
    return Rational(Integer::parse(digits + std::string(frac)), Integer(10).pow(frac.size()));
}

std::string Rational::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw domain_error("zero denominator");
    if (num_.sign() < 0) return Rational(-den_, -num_, Reduced{});
    return Rational(den_, num_, Reduced{});
}

Rational& Rational::operator+=(const Rational& o) {
    *this = Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    *this = Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    *this = Rational(num_ * o.num_, den_ * o.den_);
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw domain_error("zero denominator");
    *this = Rational(num_ * o.den_, den_ * o.num_);
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.to_string(); }

}  // namespace euclid
