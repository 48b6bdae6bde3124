#pragma once

/**
 * @file continued_fraction.hpp
 * @brief Finite continued fractions, convergents and interval expansions.
 *
 * A ContinuedFraction [c0; c1, ..., cl] has c0 >= 0 and ci >= 1 for i >= 1.
 * The canonical expansion of a positive rational ends in a quotient >= 2
 * (unless it is a single term); a trailing 1 may be present in input and is
 * evaluated normally.
 *
 * Convergents come from the running product of the matrices
 *
 *     | c 1 |
 *     | 1 0 |
 *
 * whose n-th partial product is [[p_n, p_{n-1}], [q_n, q_{n-1}]]. The
 * determinant of that product is (-1)^{n+1}.
 */

#include <array>
#include <cstddef>
#include <functional>
#include <vector>

#include "euclid/integer.hpp"
#include "euclid/rational.hpp"

namespace euclid {

// Partial quotients of a continued fraction. Validated on construction.
class ContinuedFraction {
public:
    explicit ContinuedFraction(std::vector<Integer> quotients);

    const std::vector<Integer>& quotients() const { return q_; }
    std::size_t size() const { return q_.size(); }
    const Integer& operator[](std::size_t i) const { return q_[i]; }
    bool is_canonical() const;

    friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;

private:
    std::vector<Integer> q_;
};

struct Convergent {
    std::size_t index;
    Integer p;
    Integer q;

    Rational value() const { return Rational(p, q); }
    friend bool operator==(const Convergent&, const Convergent&) = default;
};

template <typename T>
struct Matrix2 {
    std::array<T, 4> m;  // row-major

    const T& operator()(int r, int c) const { return m[static_cast<std::size_t>(2 * r + c)]; }
    T det() const { return m[0] * m[3] - m[1] * m[2]; }

    friend Matrix2 operator*(const Matrix2& x, const Matrix2& y) {
        return {{x.m[0] * y.m[0] + x.m[1] * y.m[2], x.m[0] * y.m[1] + x.m[1] * y.m[3],
                 x.m[2] * y.m[0] + x.m[3] * y.m[2], x.m[2] * y.m[1] + x.m[3] * y.m[3]}};
    }
};

ContinuedFraction cf_from_rational(const Rational& r);
Rational cf_value(const ContinuedFraction& cf);
std::vector<Convergent> convergents(const ContinuedFraction& cf);

// The product [[c0,1],[1,0]]···[[cn,1],[1,0]] for n = index.
Matrix2<Integer> convergent_matrix(const ContinuedFraction& cf, std::size_t index);

struct LagrangeSolution {
    Integer r, s;    // p_{l-1}, q_{l-1} of a/b = [c0, ..., cl]
    int sign;        // a·s − b·r
    std::size_t length;  // l
};

// Truncates the expansion of a/b by its last quotient.
LagrangeSolution lagrange_solution(const Integer& a, const Integer& b);

// Longest run of quotients shared by every real in [lo, hi], at most
// max_terms long.
std::vector<Integer> interval_quotients(const Rational& lo, const Rational& hi, std::size_t max_terms);

}  // namespace euclid
