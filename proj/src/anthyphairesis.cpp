#include "euclid/anthyphairesis.hpp"

#include <sstream>

#include "euclid/errors.hpp"

namespace euclid {

namespace {

void require_positive(const Integer& v) {
    if (v.sign() <= 0) throw domain_error("domain: inputs must be positive");
}

// Remove `smaller` from `larger` as many times as it fits. Multiples
// smaller·2^j are built by doubling and taken off largest first, so the
// count of subtractions is logarithmic in the quotient.
DivMod take_away(const Integer& larger, const Integer& smaller) {
    std::vector<Integer> multiples{smaller};
    std::vector<Integer> weights{Integer(1)};
    while (true) {
        Integer next = multiples.back() + multiples.back();
        if (next > larger) break;
        multiples.push_back(std::move(next));
        weights.push_back(weights.back() + weights.back());
    }
    Integer rest = larger;
    Integer count(0);
    for (std::size_t i = multiples.size(); i-- > 0;) {
        if (multiples[i] <= rest) {
            rest -= multiples[i];
            count += weights[i];
        }
    }
    return {std::move(count), std::move(rest)};
}

}  // namespace

AnthyphairesisTrace subtract_trace(const Integer& x, const Integer& y) {
    require_positive(x);
    require_positive(y);
    AnthyphairesisTrace trace;
    Integer larger = x >= y ? x : y;
    Integer smaller = x >= y ? y : x;
    while (true) {
        auto [q, r] = take_away(larger, smaller);
        trace.steps.push_back({larger, smaller, q, r});
        if (r.is_zero()) break;
        larger = std::move(smaller);
        smaller = std::move(r);
    }
    trace.terminal = trace.steps.back().smaller;
    return trace;
}

QuotientSequence quotient_sequence(const Integer& x, const Integer& y) {
    // The final remainder is zero, so the last quotient is >= 2 whenever
    // there is more than one step: smaller = q·remainder' with
    // remainder' < smaller forces q >= 2.
    QuotientSequence qs;
    for (auto& step : subtract_trace(x, y).steps) qs.push_back(std::move(step.quotient));
    return qs;
}

Integer gcd_anthyphairesis(const Integer& x, const Integer& y) { return subtract_trace(x, y).terminal; }

Integer gcd_divide(const Integer& x, const Integer& y) {
    require_positive(x);
    require_positive(y);
    Integer a = x, b = y;
    while (!b.is_zero()) {
        Integer r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

bool same_ratio(const Integer& x1, const Integer& y1, const Integer& x2, const Integer& y2) {
    return quotient_sequence(x1, y1) == quotient_sequence(x2, y2);
}

std::string render_trace(const AnthyphairesisTrace& trace) {
    std::ostringstream os;
    for (const auto& s : trace.steps)
        os << s.larger << " = " << s.quotient << "·" << s.smaller << " + " << s.remainder << '\n';
    os << "gcd = " << trace.terminal << '\n';
    return os.str();
}

}  // namespace euclid
