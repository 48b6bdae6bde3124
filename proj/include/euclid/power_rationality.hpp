#pragma once

#include <optional>

#include "euclid/integer.hpp"

namespace euclid {

// The integer b with b^k = n, if any. A positive integer that is the k-th
// power of a rational is already the k-th power of an integer, so nullopt
// certifies that n^(1/k) is irrational. Requires n >= 1 and k >= 2.
std::optional<Integer> rational_kth_root(const Integer& n, const Integer& k);

struct PowerCheck {
    bool holds;          // (b/a)^k == n
    bool contradiction;  // holds with a > 1: a reduced non-integer fraction has an integer k-th power
};

// Tests the reduced-fraction argument directly: with gcd(a, b) = 1,
// (b/a)^k = n forces a^k = 1 and b^k = n.
PowerCheck reduced_power_check(const Integer& a, const Integer& b, const Integer& k, const Integer& n);

}  // namespace euclid
