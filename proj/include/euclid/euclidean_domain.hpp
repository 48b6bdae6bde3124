#pragma once

/**
 * @file euclidean_domain.hpp
 * @brief One extended-GCD routine for every Euclidean domain.
 *
 * T models EuclideanDomain when, besides ring arithmetic, these are found by
 * argument-dependent lookup:
 *
 *     is_zero(a)         -> bool
 *     divmod(a, b)       -> std::pair<T, T>   a = q·b + r, r = 0 or size(r) < size(b)
 *     euclidean_size(a)  -> totally ordered, for nonzero a
 *     canonical_unit(a)  -> T                 unit u making u·a the chosen associate
 *
 * Only the remainder-shrinking law is assumed of euclidean_size; it need not
 * be multiplicative. Integers take the positive associate and polynomials
 * over the rationals the monic one.
 */

#include <concepts>
#include <utility>
#include <vector>

#include "euclid/errors.hpp"
#include "euclid/integer.hpp"
#include "euclid/polynomial.hpp"

namespace euclid {

template <typename T>
concept EuclideanDomain = std::regular<T> && requires(const T& a, const T& b) {
    { a + b } -> std::convertible_to<T>;
    { a - b } -> std::convertible_to<T>;
    { a * b } -> std::convertible_to<T>;
    { -a } -> std::convertible_to<T>;
    { is_zero(a) } -> std::same_as<bool>;
    { divmod(a, b) } -> std::same_as<std::pair<T, T>>;
    { euclidean_size(a) } -> std::totally_ordered;
    { canonical_unit(a) } -> std::convertible_to<T>;
    T{1};  // multiplicative identity; T{} is zero
};

// Integers: remainder in [0, |b|), size |a|.
inline bool is_zero(const Integer& a) { return a.is_zero(); }
inline std::pair<Integer, Integer> divmod(const Integer& a, const Integer& b) {
    auto [q, r] = euclid_divmod(a, b);
    return {std::move(q), std::move(r)};
}
inline Integer euclidean_size(const Integer& a) { return a.abs(); }
inline Integer canonical_unit(const Integer& a) { return Integer(a.sign() < 0 ? -1 : 1); }

// Polynomials over ℚ: size is the degree.
inline bool is_zero(const Polynomial& a) { return a.is_zero(); }
inline std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    auto [q, r] = poly_divmod(a, b);
    return {std::move(q), std::move(r)};
}
inline long euclidean_size(const Polynomial& a) { return a.degree(); }
inline Polynomial canonical_unit(const Polynomial& a) {
    return a.is_zero() ? Polynomial::constant(1) : Polynomial::constant(a.leading().reciprocal());
}

template <EuclideanDomain T>
struct ExtendedGcd {
    T g;  // canonical associate
    T u;
    T v;  // u·a + v·b = g
};

template <EuclideanDomain T>
ExtendedGcd<T> generic_extended_gcd(const T& a, const T& b) {
    if (is_zero(a) && is_zero(b)) throw domain_error("domain: both arguments are zero");
    T r0 = a, r1 = b;
    T u0{1}, u1{};
    T v0{}, v1{1};
    while (!is_zero(r1)) {
        auto [q, r] = divmod(r0, r1);
        T u = u0 - q * u1;
        T v = v0 - q * v1;
        r0 = std::move(r1);
        r1 = std::move(r);
        u0 = std::move(u1);
        u1 = std::move(u);
        v0 = std::move(v1);
        v1 = std::move(v);
    }
    const T unit = canonical_unit(r0);
    return {unit * r0, unit * u0, unit * v0};
}

template <EuclideanDomain T>
T generic_gcd(const T& a, const T& b) {
    return generic_extended_gcd(a, b).g;
}

// a, b, r1, r2, ... up to and including the first zero remainder.
template <EuclideanDomain T>
std::vector<T> remainder_chain(const T& a, const T& b) {
    if (is_zero(b)) throw domain_error("domain: divisor is zero");
    std::vector<T> chain{a, b};
    while (!is_zero(chain.back())) chain.push_back(divmod(chain[chain.size() - 2], chain.back()).second);
    return chain;
}

}  // namespace euclid
