#pragma once

#include "euclid/integer.hpp"

namespace euclid {

struct KthRoot {
    Integer root;  // floor(n^(1/k))
    bool exact;    // root^k == n
};

// Binary search on the magnitude of the root. Requires n >= 0 and k >= 1,
// otherwise throws domain_error("domain").
KthRoot integer_kth_root(const Integer& n, const Integer& k);

}  // namespace euclid
