#include "euclid/power_rationality.hpp"

#include "euclid/anthyphairesis.hpp"
#include "euclid/errors.hpp"
#include "euclid/kth_root.hpp"

namespace euclid {

std::optional<Integer> rational_kth_root(const Integer& n, const Integer& k) {
    if (n < Integer(1) || k < Integer(2)) throw domain_error("domain: need n >= 1 and k >= 2");
    auto [root, exact] = integer_kth_root(n, k);
    if (!exact) return std::nullopt;
    return root;
}

PowerCheck reduced_power_check(const Integer& a, const Integer& b, const Integer& k, const Integer& n) {
    if (a.sign() <= 0 || b.sign() <= 0 || n.sign() <= 0 || k < Integer(2))
        throw domain_error("domain: need a, b, n >= 1 and k >= 2");
    if (!gcd_divide(a, b).is_one()) throw domain_error("not coprime");
    if (!k.fits_int64() || k.to_int64() > 1'000'000) throw domain_error("domain: exponent too large");
    const auto e = static_cast<unsigned long>(k.to_int64());
    // b^k / a^k == n / 1, compared by cross-multiplication.
    const bool holds = b.pow(e) == n * a.pow(e);
    return {holds, holds && a > Integer(1)};
}

}  // namespace euclid
