#include "euclid/oracles.hpp"

#include <algorithm>

#include "euclid/errors.hpp"

namespace euclid::oracle {

std::int64_t trial_gcd(std::int64_t x, std::int64_t y) {
    x = x < 0 ? -x : x;
    y = y < 0 ? -y : y;
    if (x == 0) return y;
    if (y == 0) return x;
    for (std::int64_t d = std::min(x, y); d > 1; --d)
        if (x % d == 0 && y % d == 0) return d;
    return 1;
}

std::vector<std::int64_t> common_divisors(std::int64_t x, std::int64_t y, std::int64_t limit) {
    std::vector<std::int64_t> out;
    for (std::int64_t d = 1; d <= limit; ++d)
        if (x % d == 0 && y % d == 0) out.push_back(d);
    return out;
}

std::int64_t scan_kth_root(std::int64_t n, int k) {
    auto power_le = [&](std::int64_t m) {
        std::int64_t p = 1;
        for (int i = 0; i < k; ++i) {
            if (p > n / m) return false;
            p *= m;
        }
        return true;
    };
    std::int64_t m = 0;
    while (power_le(m + 1)) ++m;
    return m;
}

std::int64_t scan_inverse(std::int64_t a, std::int64_t b) {
    a %= b;
    if (a < 0) a += b;
    for (std::int64_t m = 1; m <= b; ++m)
        if ((a * m) % b == 1 % b) return m;
    return 0;
}

Rational resultant(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Rational(0);
    const auto m = static_cast<std::size_t>(a.degree());
    const auto n = static_cast<std::size_t>(b.degree());
    const std::size_t size = m + n;
    if (size == 0) return Rational(1);
    std::vector<std::vector<Rational>> mat(size, std::vector<Rational>(size));
    // n shifted rows of a's coefficients, then m shifted rows of b's, each
    // written from the leading coefficient down.
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t i = 0; i <= m; ++i) mat[r][r + i] = a.coefficient(m - i);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t i = 0; i <= n; ++i) mat[n + r][r + i] = b.coefficient(n - i);

    Rational det(1);
    for (std::size_t col = 0; col < size; ++col) {
        std::size_t pivot = col;
        while (pivot < size && mat[pivot][col].is_zero()) ++pivot;
        if (pivot == size) return Rational(0);
        if (pivot != col) {
            std::swap(mat[pivot], mat[col]);
            det = -det;
        }
        det *= mat[col][col];
        for (std::size_t r = col + 1; r < size; ++r) {
            if (mat[r][col].is_zero()) continue;
            Rational f = mat[r][col] / mat[col][col];
            for (std::size_t c = col; c < size; ++c) mat[r][c] -= f * mat[col][c];
        }
    }
    return det;
}

Polynomial from_roots(const std::vector<Rational>& roots) {
    Polynomial p = Polynomial::constant(1);
    for (const auto& r : roots) p *= Polynomial({-r, Rational(1)});
    return p;
}

Rational decimal(const char* text) { return Rational::parse_decimal(text); }

// π = 3.14159265358979323846264338327950288...
Rational pi_lower_30() { return decimal("3.141592653589793238462643383279"); }
Rational pi_upper_30() { return decimal("3.141592653589793238462643383280"); }

}  // namespace euclid::oracle
