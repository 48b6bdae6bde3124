#include "euclid/kth_root.hpp"

#include "euclid/errors.hpp"

namespace euclid {

KthRoot integer_kth_root(const Integer& n, const Integer& k) {
    if (n.sign() < 0 || k < Integer(1)) throw domain_error("domain");
    if (n.is_zero()) return {Integer(0), true};

    const std::size_t bits = n.bit_length();
    // 2^k > n once k >= bit_length(n), leaving 1 as the only candidate.
    if (k >= Integer(static_cast<unsigned long>(bits))) return {Integer(1), n.is_one()};

    const auto e = static_cast<unsigned long>(k.to_int64());
    // root < 2^ceil(bits/k)
    Integer lo(1);
    Integer hi = Integer(2).pow((bits + e - 1) / e);
    // Invariant: lo^k <= n < hi^k.
    while (hi - lo > Integer(1)) {
        Integer mid = floor_div(lo + hi, Integer(2));
        if (mid.pow(e) <= n)
            lo = std::move(mid);
        else
            hi = std::move(mid);
    }
    bool exact = lo.pow(e) == n;
    return {std::move(lo), exact};
}

}  // namespace euclid
