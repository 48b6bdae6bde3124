#pragma once

/**
 * @file oracles.hpp
 * @brief Brute-force reference answers.
 *
 * Nothing here calls into the algorithms it is used to check. Everything is
 * exhaustive or textbook-direct and only meant for small inputs.
 */

#include <cstdint>
#include <vector>

#include "euclid/integer.hpp"
#include "euclid/polynomial.hpp"
#include "euclid/rational.hpp"

namespace euclid::oracle {

// Largest d dividing both, by trial division downward from min(x, y).
std::int64_t trial_gcd(std::int64_t x, std::int64_t y);

// Every d in [1, limit] dividing both x and y.
std::vector<std::int64_t> common_divisors(std::int64_t x, std::int64_t y, std::int64_t limit);

// floor(n^(1/k)) by counting m = 0, 1, 2, ... while m^k <= n.
std::int64_t scan_kth_root(std::int64_t n, int k);

// The m in [1, b] with a·m ≡ 1 (mod b), or 0 when there is none, by testing
// every m.
std::int64_t scan_inverse(std::int64_t a, std::int64_t b);

// Determinant of the Sylvester matrix, by Gaussian elimination over ℚ.
// Zero exactly when a and b share a nonconstant factor.
Rational resultant(const Polynomial& a, const Polynomial& b);

// ∏ (x - r) over the given roots.
Polynomial from_roots(const std::vector<Rational>& roots);

// Decimal string "d.ddd" as an exact rational.
Rational decimal(const char* text);

// Bounds on π good to 30 decimal places; the true value lies strictly
// between them.
Rational pi_lower_30();
Rational pi_upper_30();

}  // namespace euclid::oracle
