#pragma once

#include <stdexcept>
#include <string>

namespace euclid {

// Raised when an argument lies outside an operation's mathematical domain
// (zero where the algorithm has no zero, non-coprime input, bounds exceeded).
class domain_error : public std::domain_error {
public:
    explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

// Raised for text that does not parse as a number or polynomial.
class parse_error : public std::invalid_argument {
public:
    explicit parse_error(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace euclid
