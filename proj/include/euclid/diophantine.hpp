#pragma once

/**
 * @file diophantine.hpp
 * @brief Bézout certificates and the linear equation a·x + b·y = c.
 *
 * Two historical routes to the same certificate are provided: back
 * substitution through the remainder chain (extended_gcd), and a scan of
 * the residues a·r mod b for r = 1..b (gauss_inverse with Method::scan).
 * The brute-force enumerators at the bottom exist to check the closed-form
 * answers and are bounded to desk-scale inputs.
 */

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "euclid/integer.hpp"

namespace euclid {

// a·m + b·n = g, g > 0.
struct BezoutCertificate {
    Integer a, b;
    Integer g;
    Integer m, n;

    bool holds() const { return a * m + b * n == g; }
};

// m·x − n·y = sign·gcd(x, y) with m, n >= 0.
struct EuclidForm {
    Integer x, y;
    Integer m, n;
    int sign;
    Integer g;
};

// All solutions (x0 + k·dx, y0 + k·dy), k ∈ ℤ.
struct SolutionFamily {
    Integer a, b, c;
    Integer x0, y0;
    Integer dx, dy;

    std::pair<Integer, Integer> at(const Integer& k) const { return {x0 + k * dx, y0 + k * dy}; }
};

BezoutCertificate extended_gcd(const Integer& a, const Integer& b);

// Shift along the homogeneous solution so that 0 <= m < |b|/g.
BezoutCertificate canonicalize(const BezoutCertificate& cert);

EuclidForm euclid_form(const Integer& x, const Integer& y);

enum class InverseMethod { scan, euclid };

inline constexpr std::int64_t kMaxInverseScan = 10'000'000;

// The m in [1, b] with a·m ≡ 1 (mod b).
Integer gauss_inverse(const Integer& a, const Integer& b, InverseMethod method);

// nullopt when gcd(a, b) does not divide c.
std::optional<SolutionFamily> solve_linear(const Integer& a, const Integer& b, const Integer& c);

inline constexpr std::int64_t kMaxBoxCoefficient = 10'000;

// Every (x, y) with a·x + b·y = c and |x| <= bound, ascending in x, found by
// testing each x in turn.
std::vector<std::pair<Integer, Integer>> all_solutions_in_box(const Integer& a, const Integer& b,
                                                              const Integer& c, const Integer& bound);

struct IdealCheck {
    bool equal;
    Integer g;
    std::vector<std::int64_t> reachable;  // {a·s + b·t} ∩ [−N, N], ascending
};

// Enumerates a·s + b·t over a window of s large enough to reach every
// representable value in [−N, N] and compares the result with the multiples
// of gcd(a, b) in the same range.
IdealCheck ideal_equality_check(const Integer& a, const Integer& b, const Integer& bound);

}  // namespace euclid
