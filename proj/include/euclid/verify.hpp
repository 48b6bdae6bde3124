#pragma once

/**
 * @file verify.hpp
 * @brief Cross-algorithm property suite behind `euclid-kit verify`.
 *
 * Every property draws its inputs from its own mt19937_64 stream derived
 * from the seed, so a report depends only on (seed, trials).
 */

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "euclid/continued_fraction.hpp"
#include "euclid/integer.hpp"

namespace euclid {

// Replaceable entry points; the defaults are the library functions. Tests
// swap in broken versions to make sure the suite notices.
struct VerifyHooks {
    std::function<std::vector<Convergent>(const ContinuedFraction&)> convergents = &euclid::convergents;
};

struct PropertyResult {
    std::string name;
    std::size_t checked = 0;
    std::size_t failed = 0;
    std::string first_failure;
};

struct VerifyReport {
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    std::string first_case;  // the first input pair drawn, for reproducibility checks
    std::vector<PropertyResult> properties;

    bool ok() const;
};

VerifyReport run_verify(std::uint64_t seed, std::size_t trials, const VerifyHooks& hooks = {});

// A value in [1, 2^max_bits). The bit length is drawn uniformly first so
// that small and large magnitudes both show up.
Integer random_positive(std::mt19937_64& rng, unsigned max_bits);

}  // namespace euclid
