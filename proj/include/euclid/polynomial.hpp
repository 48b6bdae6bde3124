#pragma once

/**
 * @file polynomial.hpp
 * @brief Dense univariate polynomials over the rationals.
 *
 * Coefficients are stored in ascending degree with no trailing zeros; the
 * zero polynomial has no coefficients and degree -1.
 */

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "euclid/rational.hpp"

namespace euclid {

class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coefficients);
    Polynomial(std::initializer_list<Rational> coefficients)
        : Polynomial(std::vector<Rational>(coefficients)) {}

    static Polynomial constant(Rational c) { return Polynomial({std::move(c)}); }
    static Polynomial monomial(Rational c, std::size_t degree);

    // Comma-separated rationals, constant term first: "-1,0,0,1" is x^3 - 1.
    static Polynomial parse(std::string_view text);
    std::string to_coefficient_string() const;
    // Descending-degree human form, e.g. "x^3 - 1", "1/2*x^2 + 3".
    std::string to_string() const;

    const std::vector<Rational>& coefficients() const { return c_; }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Rational& leading() const;  // requires nonzero
    Rational coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(); }
    bool is_monic() const { return !is_zero() && leading() == Rational(1); }

    Rational evaluate(const Rational& x) const;
    Polynomial monic() const;  // requires nonzero

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const Rational& s);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void trim();
    std::vector<Rational> c_;
};

struct PolyDivMod {
    Polynomial quotient;
    Polynomial remainder;
};

// a = q·b + r with r = 0 or deg r < deg b. Throws domain_error when b = 0.
PolyDivMod poly_divmod(const Polynomial& a, const Polynomial& b);

// Monic greatest common divisor. Throws domain_error when both are zero.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

// b | a over the rationals.
bool poly_divides(const Polynomial& b, const Polynomial& a);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace euclid
