#include "euclid/integer.hpp"

#include <limits>
#include <ostream>

#include "euclid/errors.hpp"

namespace euclid {

namespace {

void require_nonzero(const Integer& b) {
    if (b.is_zero()) throw domain_error("division by zero");
}

}  // namespace

Integer Integer::parse(std::string_view text) {
    std::size_t pos = 0;
    if (!text.empty() && (text[0] == '+' || text[0] == '-')) pos = 1;
    if (pos == text.size()) throw parse_error("malformed integer: '" + std::string(text) + "'");
    for (std::size_t i = pos; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9')
            throw parse_error("malformed integer: '" + std::string(text) + "'");
    }
    // mpz_set_str rejects a leading '+'.
    std::string digits(text[0] == '+' ? text.substr(1) : text);
    return Integer(mpz_class(digits, 10));
}

std::size_t Integer::bit_length() const {
    if (is_zero()) return 0;
    return mpz_sizeinbase(v_.get_mpz_t(), 2);
}

bool Integer::fits_int64() const {
    static const mpz_class lo(std::to_string(std::numeric_limits<std::int64_t>::min()));
    static const mpz_class hi(std::to_string(std::numeric_limits<std::int64_t>::max()));
    return v_ >= lo && v_ <= hi;
}

std::int64_t Integer::to_int64() const {
    if (!fits_int64()) throw domain_error("integer does not fit in 64 bits");
    static_assert(sizeof(long) == sizeof(std::int64_t));
    return v_.get_si();
}

Integer Integer::pow(unsigned long exponent) const {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), v_.get_mpz_t(), exponent);
    return Integer(std::move(r));
}

bool Integer::divides(const Integer& other) const {
    if (is_zero()) return other.is_zero();
    return mpz_divisible_p(other.v_.get_mpz_t(), v_.get_mpz_t()) != 0;
}

Integer& Integer::operator/=(const Integer& o) {
    require_nonzero(o);
    mpz_tdiv_q(v_.get_mpz_t(), v_.get_mpz_t(), o.v_.get_mpz_t());
    return *this;
}

Integer& Integer::operator%=(const Integer& o) {
    require_nonzero(o);
    mpz_tdiv_r(v_.get_mpz_t(), v_.get_mpz_t(), o.v_.get_mpz_t());
    return *this;
}

Integer floor_div(const Integer& a, const Integer& b) {
    require_nonzero(b);
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
    return Integer(std::move(q));
}

Integer floor_mod(const Integer& a, const Integer& b) {
    require_nonzero(b);
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
    return Integer(std::move(r));
}

DivMod euclid_divmod(const Integer& a, const Integer& b) {
    require_nonzero(b);
    mpz_class q, r;
    if (b.sign() > 0)
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
    else
        mpz_cdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
    return {Integer(std::move(q)), Integer(std::move(r))};
}

Integer divexact(const Integer& a, const Integer& b) {
    require_nonzero(b);
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
    return Integer(std::move(q));
}

std::ostream& operator<<(std::ostream& os, const Integer& x) { return os << x.to_string(); }

}  // namespace euclid
