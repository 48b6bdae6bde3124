#pragma once

/**
 * @file rational.hpp
 * @brief Exact rationals over Integer.
 *
 * Always stored in lowest terms with a positive denominator, so two
 * rationals are equal exactly when their fields are equal. Zero is 0/1.
 */

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include "euclid/integer.hpp"

namespace euclid {

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(Integer n) : num_(std::move(n)), den_(1) {}
    Rational(int n) : num_(n), den_(1) {}
    Rational(long n) : num_(n), den_(1) {}
    Rational(Integer num, Integer den);  // throws domain_error("zero denominator")

    // "p/q" or "p", with p, q optional-sign decimal integers.
    static Rational parse(std::string_view text);
    // Also accepts a terminating decimal such as "3.14159", read exactly.
    static Rational parse_decimal(std::string_view text);
    // "p/q", or "p" when the denominator is 1.
    std::string to_string() const;

    const Integer& num() const { return num_; }
    const Integer& den() const { return den_; }

    int sign() const { return num_.sign(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_.is_one(); }

    Integer floor() const { return floor_div(num_, den_); }
    Rational reciprocal() const;  // throws domain_error on zero
    Rational abs() const { return Rational(num_.abs(), den_, Reduced{}); }

    Rational operator-() const { return Rational(-num_, den_, Reduced{}); }

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ <=> b.num_ * a.den_;
    }

private:
    struct Reduced {};
    Rational(Integer num, Integer den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}

    Integer num_;
    Integer den_;
};

// num/den in lowest terms with a positive denominator.
Rational normalize_rational(const Integer& num, const Integer& den);

std::ostream& operator<<(std::ostream& os, const Rational& x);

}  // namespace euclid
