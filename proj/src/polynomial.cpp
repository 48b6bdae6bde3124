#include "euclid/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "euclid/errors.hpp"
#include "euclid/euclidean_domain.hpp"

namespace euclid {

Polynomial::Polynomial(std::vector<Rational> coefficients) : c_(std::move(coefficients)) { trim(); }

void Polynomial::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Polynomial Polynomial::monomial(Rational c, std::size_t degree) {
    std::vector<Rational> v(degree + 1);
    v[degree] = std::move(c);
    return Polynomial(std::move(v));
}

Polynomial Polynomial::parse(std::string_view text) {
    std::vector<Rational> coeffs;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = text.find(',', start);
        std::string_view field = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
        while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
        while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
        if (field.empty()) throw parse_error("malformed polynomial: '" + std::string(text) + "'");
        coeffs.push_back(Rational::parse(field));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return Polynomial(std::move(coeffs));
}

std::string Polynomial::to_coefficient_string() const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) out += ',';
        out += c_[i].to_string();
    }
    return out;
}

std::string Polynomial::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const Rational& c = c_[i];
        if (c.is_zero()) continue;
        const Rational mag = c.abs();
        if (first)
            os << (c.sign() < 0 ? "-" : "");
        else
            os << (c.sign() < 0 ? " - " : " + ");
        first = false;
        if (i == 0) {
            os << mag;
            continue;
        }
        if (mag != Rational(1)) os << mag << '*';
        os << 'x';
        if (i > 1) os << '^' << i;
    }
    return os.str();
}

const Rational& Polynomial::leading() const {
    if (c_.empty()) throw domain_error("domain: zero polynomial has no leading coefficient");
    return c_.back();
}

Rational Polynomial::evaluate(const Rational& x) const {
    Rational acc;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

Polynomial Polynomial::monic() const { return *this * leading().reciprocal(); }

Polynomial Polynomial::operator-() const {
    Polynomial out = *this;
    for (auto& c : out.c_) c = -c;
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    if (c_.empty() || o.c_.empty()) {
        c_.clear();
        return *this;
    }
    std::vector<Rational> out(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
    c_ = std::move(out);
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
    for (auto& c : c_) c *= s;
    trim();
    return *this;
}

PolyDivMod poly_divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw domain_error("division by zero polynomial");
    const Rational lead_inv = b.leading().reciprocal();
    const long db = b.degree();
    std::vector<Rational> quot(static_cast<std::size_t>(std::max(a.degree() - db + 1, 0L)));
    Polynomial rem = a;
    while (!rem.is_zero() && rem.degree() >= db) {
        const auto shift = static_cast<std::size_t>(rem.degree() - db);
        Rational factor = rem.leading() * lead_inv;
        quot[shift] = factor;
        // Cancels the leading term exactly, so the degree strictly drops.
        rem -= Polynomial::monomial(factor, shift) * b;
    }
    return {Polynomial(std::move(quot)), std::move(rem)};
}

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) { return generic_gcd(a, b); }

bool poly_divides(const Polynomial& b, const Polynomial& a) {
    if (b.is_zero()) return a.is_zero();
    return poly_divmod(a, b).remainder.is_zero();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

}  // namespace euclid
