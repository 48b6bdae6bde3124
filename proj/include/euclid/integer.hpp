#pragma once

/**
 * @file integer.hpp
 * @brief Arbitrary-precision signed integer.
 *
 * A value type over GMP's mpz. Arithmetic is exact; there is no overflow
 * and zero has a single representation. Division comes in three flavours:
 *
 *   operator/ and operator%   truncate toward zero, like built-in ints
 *   floor_div / floor_mod     round toward negative infinity
 *   euclid_divmod             remainder in [0, |b|)
 */

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

namespace euclid {

class Integer {
public:
    Integer() = default;
    Integer(int v) : v_(static_cast<long>(v)) {}
    Integer(long v) : v_(v) {}
    Integer(long long v) : v_(static_cast<long>(v)) {}
    Integer(unsigned long v) : v_(v) {}
    Integer(unsigned long long v) : v_(static_cast<unsigned long>(v)) {}
    explicit Integer(mpz_class v) : v_(std::move(v)) {}

    // Optional sign followed by one or more decimal digits; nothing else.
    static Integer parse(std::string_view text);
    std::string to_string() const { return v_.get_str(10); }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sign() == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_odd() const { return mpz_odd_p(v_.get_mpz_t()) != 0; }

    // Number of bits in |x|; 0 for zero.
    std::size_t bit_length() const;

    bool fits_int64() const;
    std::int64_t to_int64() const;  // throws domain_error when it does not fit
    double to_double() const { return v_.get_d(); }

    Integer abs() const { return Integer(mpz_class(::abs(v_))); }
    Integer pow(unsigned long exponent) const;
    bool divides(const Integer& other) const;  // *this | other; 0 | x only for x = 0

    const mpz_class& raw() const { return v_; }

    Integer operator-() const { return Integer(mpz_class(-v_)); }

    Integer& operator+=(const Integer& o) { v_ += o.v_; return *this; }
    Integer& operator-=(const Integer& o) { v_ -= o.v_; return *this; }
    Integer& operator*=(const Integer& o) { v_ *= o.v_; return *this; }
    Integer& operator/=(const Integer& o);
    Integer& operator%=(const Integer& o);

    friend Integer operator+(Integer a, const Integer& b) { return a += b; }
    friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
    friend Integer operator*(Integer a, const Integer& b) { return a *= b; }
    friend Integer operator/(Integer a, const Integer& b) { return a /= b; }
    friend Integer operator%(Integer a, const Integer& b) { return a %= b; }

    friend bool operator==(const Integer& a, const Integer& b) { return cmp(a.v_, b.v_) == 0; }
    friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
        return cmp(a.v_, b.v_) <=> 0;
    }

private:
    mpz_class v_;
};

struct DivMod {
    Integer quotient;
    Integer remainder;
};

Integer floor_div(const Integer& a, const Integer& b);
Integer floor_mod(const Integer& a, const Integer& b);

// a = q*b + r with 0 <= r < |b|.
DivMod euclid_divmod(const Integer& a, const Integer& b);

// Exact quotient; the caller guarantees b | a.
Integer divexact(const Integer& a, const Integer& b);

std::ostream& operator<<(std::ostream& os, const Integer& x);

}  // namespace euclid
