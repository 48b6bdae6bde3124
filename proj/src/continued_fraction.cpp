#include "euclid/continued_fraction.hpp"

#include "euclid/anthyphairesis.hpp"
#include "euclid/errors.hpp"

namespace euclid {

namespace {

Matrix2<Integer> step_matrix(const Integer& c) { return {{c, Integer(1), Integer(1), Integer(0)}}; }

}  // namespace

ContinuedFraction::ContinuedFraction(std::vector<Integer> quotients) : q_(std::move(quotients)) {
    if (q_.empty()) throw domain_error("domain: empty continued fraction");
    if (q_[0].sign() < 0) throw domain_error("domain: first quotient must be >= 0");
    for (std::size_t i = 1; i < q_.size(); ++i)
        if (q_[i].sign() <= 0) throw domain_error("domain: quotients after the first must be >= 1");
}

bool ContinuedFraction::is_canonical() const { return q_.size() == 1 || q_.back() >= Integer(2); }

ContinuedFraction cf_from_rational(const Rational& r) {
    if (r.sign() <= 0) throw domain_error("domain: value must be positive");
    std::vector<Integer> q;
    Integer num = r.num(), den = r.den();
    while (!den.is_zero()) {
        DivMod dm = euclid_divmod(num, den);
        q.push_back(std::move(dm.quotient));
        num = std::move(den);
        den = std::move(dm.remainder);
    }
    return ContinuedFraction(std::move(q));
}

Rational cf_value(const ContinuedFraction& cf) {
    // Fold from the innermost term outward.
    const auto& q = cf.quotients();
    Rational acc(q.back());
    for (std::size_t i = q.size() - 1; i-- > 0;) acc = Rational(q[i]) + acc.reciprocal();
    return acc;
}

Matrix2<Integer> convergent_matrix(const ContinuedFraction& cf, std::size_t index) {
    if (index >= cf.size()) throw domain_error("domain: convergent index out of range");
    Matrix2<Integer> acc = step_matrix(cf[0]);
    for (std::size_t i = 1; i <= index; ++i) acc = acc * step_matrix(cf[i]);
    return acc;
}

std::vector<Convergent> convergents(const ContinuedFraction& cf) {
    std::vector<Convergent> out;
    out.reserve(cf.size());
    // Identity seeds (p_{-1}, q_{-1}) = (1, 0) and (p_{-2}, q_{-2}) = (0, 1).
    Matrix2<Integer> acc{{Integer(1), Integer(0), Integer(0), Integer(1)}};
    for (std::size_t n = 0; n < cf.size(); ++n) {
        acc = acc * step_matrix(cf[n]);
        out.push_back({n, acc(0, 0), acc(1, 0)});
    }
    return out;
}

LagrangeSolution lagrange_solution(const Integer& a, const Integer& b) {
    if (a.sign() <= 0 || b.sign() <= 0) throw domain_error("domain: inputs must be positive");
    if (!gcd_divide(a, b).is_one()) throw domain_error("not coprime");
    const ContinuedFraction cf = cf_from_rational(Rational(a, b));
    const std::size_t length = cf.size() - 1;
    LagrangeSolution out{Integer(1), Integer(0), length % 2 == 0 ? -1 : 1, length};
    if (length > 0) {
        const auto conv = convergents(ContinuedFraction(
            std::vector<Integer>(cf.quotients().begin(), cf.quotients().end() - 1)));
        out.r = conv.back().p;
        out.s = conv.back().q;
    }
    return out;
}

std::vector<Integer> interval_quotients(const Rational& lo, const Rational& hi, std::size_t max_terms) {
    if (lo.sign() <= 0) throw domain_error("domain: lower bound must be positive");
    if (hi < lo) throw domain_error("domain: empty interval");
    std::vector<Integer> out;
    Rational low = lo, high = hi;
    while (out.size() < max_terms) {
        Integer q = low.floor();
        if (q != high.floor()) break;
        out.push_back(q);
        Rational low_rest = low - Rational(q);
        Rational high_rest = high - Rational(q);
        if (low_rest.is_zero() || high_rest.is_zero()) break;
        // x -> 1/(x - q) reverses the order of the endpoints.
        low = high_rest.reciprocal();
        high = low_rest.reciprocal();
    }
    return out;
}

}  // namespace euclid
