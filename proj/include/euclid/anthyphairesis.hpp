#pragma once

/**
 * @file anthyphairesis.hpp
 * @brief Euclid's subtraction process on two positive integers.
 *
 * The less is repeatedly taken from the greater. Each step records how many
 * times it was taken (the quotient) and what was left over. Quotients are
 * found using subtraction and doubling only; no division is performed, which
 * keeps this route independent of the division-based GCD it is checked
 * against.
 */

#include <iosfwd>
#include <string>
#include <vector>

#include "euclid/integer.hpp"

namespace euclid {

struct AnthyphairesisStep {
    Integer larger;
    Integer smaller;
    Integer quotient;   // >= 1
    Integer remainder;  // 0 <= remainder < smaller

    friend bool operator==(const AnthyphairesisStep&, const AnthyphairesisStep&) = default;
};

struct AnthyphairesisTrace {
    std::vector<AnthyphairesisStep> steps;
    Integer terminal;  // the last nonzero length: the greatest common measure
};

// Partial quotients of max(x, y) : min(x, y). Canonical: the last entry is
// >= 2 unless the sequence has length 1.
using QuotientSequence = std::vector<Integer>;

AnthyphairesisTrace subtract_trace(const Integer& x, const Integer& y);
QuotientSequence quotient_sequence(const Integer& x, const Integer& y);
Integer gcd_anthyphairesis(const Integer& x, const Integer& y);

// Division-remainder form of the same algorithm.
Integer gcd_divide(const Integer& x, const Integer& y);

// Whether x1:y1 and x2:y2 are the same ratio once each is oriented max:min.
bool same_ratio(const Integer& x1, const Integer& y1, const Integer& x2, const Integer& y2);

// "L = q·S + r" per step, then "gcd = t".
std::string render_trace(const AnthyphairesisTrace& trace);

}  // namespace euclid
