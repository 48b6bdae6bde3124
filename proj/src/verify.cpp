#include "euclid/verify.hpp"

#include <algorithm>
#include <sstream>

#include "euclid/anthyphairesis.hpp"
#include "euclid/diophantine.hpp"
#include "euclid/euclidean_domain.hpp"
#include "euclid/kth_root.hpp"
#include "euclid/oracles.hpp"
#include "euclid/polynomial.hpp"
#include "euclid/power_rationality.hpp"

namespace euclid {

namespace {

class Tally {
public:
    explicit Tally(std::string name) { result_.name = std::move(name); }

    template <typename Describe>
    void check(bool ok, Describe&& describe) {
        ++result_.checked;
        if (ok) return;
        if (result_.failed++ == 0) result_.first_failure = describe();
    }

    PropertyResult take() { return std::move(result_); }

private:
    PropertyResult result_;
};

std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

Integer random_nonzero(std::mt19937_64& rng, unsigned max_bits) {
    Integer v = random_positive(rng, max_bits);
    return uniform(rng, 0, 1) ? -v : v;
}

template <typename... Ts>
std::string describe(const Ts&... parts) {
    std::ostringstream os;
    ((os << parts << ' '), ...);
    std::string s = os.str();
    if (!s.empty()) s.pop_back();
    return s;
}

// Coprime pair with a in [a_lo, a_hi], b in [b_lo, b_hi].
std::pair<std::int64_t, std::int64_t> coprime_pair(std::mt19937_64& rng, std::int64_t a_lo, std::int64_t a_hi,
                                                   std::int64_t b_lo, std::int64_t b_hi) {
    while (true) {
        std::int64_t a = uniform(rng, a_lo, a_hi);
        std::int64_t b = uniform(rng, b_lo, b_hi);
        if (oracle::trial_gcd(a, b) == 1) return {a, b};
    }
}

Polynomial random_polynomial(std::mt19937_64& rng, int max_degree) {
    const auto degree = uniform(rng, 0, max_degree);
    std::vector<Rational> c;
    for (std::int64_t i = 0; i <= degree; ++i) c.emplace_back(Integer(uniform(rng, -9, 9)), Integer(uniform(rng, 1, 9)));
    if (c.back().is_zero()) c.back() = Rational(uniform(rng, 1, 9));
    return Polynomial(std::move(c));
}

using Rng = std::mt19937_64;

PropertyResult gcd_methods_agree(Rng& rng, std::size_t trials, std::string& first_case) {
    Tally t("gcd_methods_agree");
    for (std::size_t i = 0; i < trials; ++i) {
        Integer x = random_positive(rng, 256), y = random_positive(rng, 256);
        if (i == 0) first_case = describe(x, y);
        Integer s = gcd_anthyphairesis(x, y), d = gcd_divide(x, y), g = generic_gcd(x, y);
        t.check(s == d && d == g, [&] { return describe(x, y, "->", s, d, g); });
    }
    return t.take();
}

PropertyResult bezout_identity(Rng& rng, std::size_t trials) {
    Tally t("bezout_identity");
    for (std::size_t i = 0; i < trials; ++i) {
        Integer a = random_nonzero(rng, 256), b = random_nonzero(rng, 256);
        auto c = extended_gcd(a, b);
        bool ok = c.holds() && c.g == gcd_anthyphairesis(a.abs(), b.abs()) && c.g.divides(a) && c.g.divides(b);
        t.check(ok, [&] { return describe(a, b, "->", c.g, c.m, c.n); });
    }
    return t.take();
}

PropertyResult canonical_certificate(Rng& rng, std::size_t trials) {
    Tally t("canonical_certificate");
    for (std::size_t i = 0; i < trials; ++i) {
        Integer a = random_nonzero(rng, 128), b = random_nonzero(rng, 128);
        auto c = canonicalize(extended_gcd(a, b));
        Integer step = divexact(b.abs(), c.g);
        bool ok = c.holds() && c.m.sign() >= 0 && c.m < step;
        auto again = canonicalize(c);
        ok = ok && again.m == c.m && again.n == c.n;
        t.check(ok, [&] { return describe(a, b, "->", c.m, c.n); });
    }
    return t.take();
}

PropertyResult nonnegative_euclid_form(Rng& rng, std::size_t trials) {
    Tally t("euclid_form");
    for (std::size_t i = 0; i < trials; ++i) {
        Integer x(uniform(rng, 1, 300)), y(uniform(rng, 1, 300));
        auto f = euclid_form(x, y);
        bool ok = f.m.sign() >= 0 && f.n.sign() >= 0 && (f.m * x - f.n * y).abs() == f.g &&
                  f.g == Integer(oracle::trial_gcd(x.to_int64(), y.to_int64()));
        t.check(ok, [&] { return describe(x, y, "->", f.m, f.n); });
    }
    return t.take();
}

PropertyResult gauss_consistency(Rng& rng, std::size_t trials) {
    Tally t("gauss_inverse");
    for (std::size_t i = 0; i < trials; ++i) {
        auto [a, b] = coprime_pair(rng, 1, 200, 2, 200);
        Integer scan = gauss_inverse(Integer(a), Integer(b), InverseMethod::scan);
        Integer fast = gauss_inverse(Integer(a), Integer(b), InverseMethod::euclid);
        Integer cert_m = extended_gcd(Integer(a), Integer(b)).m;
        bool ok = scan == fast && floor_mod(Integer(a) * scan, Integer(b)).is_one() &&
                  Integer(b).divides(cert_m - scan);
        t.check(ok, [&] { return describe(a, b, "->", scan, fast, cert_m); });
    }
    return t.take();
}

PropertyResult family_completeness(Rng& rng, std::size_t trials) {
    Tally t("solution_family");
    const Integer bound(100);
    for (std::size_t i = 0; i < trials; ++i) {
        Integer a(uniform(rng, 1, 50) * (uniform(rng, 0, 1) ? -1 : 1));
        Integer b(uniform(rng, 1, 50) * (uniform(rng, 0, 1) ? -1 : 1));
        Integer c(uniform(rng, -50, 50));
        auto box = all_solutions_in_box(a, b, c, bound);
        std::vector<std::pair<Integer, Integer>> from_family;
        if (auto fam = solve_linear(a, b, c)) {
            // x0 + k·dx within [-bound, bound]
            Integer dx = fam->dx.abs();
            Integer start = floor_mod(fam->x0 + bound, dx) - bound;
            for (Integer x = start; x <= bound; x += dx) {
                Integer k = divexact(x - fam->x0, fam->dx);
                from_family.push_back(fam->at(k));
            }
        }
        t.check(box == from_family, [&] { return describe(a, b, c); });
    }
    return t.take();
}

PropertyResult cf_round_trip(Rng& rng, std::size_t trials) {
    Tally t("cf_round_trip");
    for (std::size_t i = 0; i < trials; ++i) {
        Rational r(Integer(uniform(rng, 1, 1000)), Integer(uniform(rng, 1, 1000)));
        auto cf = cf_from_rational(r);
        auto conv = convergents(cf);
        bool ok = cf.is_canonical() && cf_value(cf) == r && conv.back().value() == r &&
                  conv.back().p == r.num() && conv.back().q == r.den();
        t.check(ok, [&] { return describe(r); });
    }
    return t.take();
}

PropertyResult determinant_identity(Rng& rng, std::size_t trials, const VerifyHooks& hooks) {
    Tally t("determinant_identity");
    for (std::size_t i = 0; i < trials; ++i) {
        Rational r(Integer(uniform(rng, 1, 1000)), Integer(uniform(rng, 1, 1000)));
        auto conv = hooks.convergents(cf_from_rational(r));
        Integer p_prev(1), q_prev(0);
        bool ok = !conv.empty();
        for (std::size_t n = 0; n < conv.size() && ok; ++n) {
            const Integer expected(n % 2 == 0 ? -1 : 1);  // (-1)^{n+1}
            ok = conv[n].p * q_prev - p_prev * conv[n].q == expected;
            p_prev = conv[n].p;
            q_prev = conv[n].q;
        }
        t.check(ok, [&] { return describe(r); });
    }
    return t.take();
}

PropertyResult convergent_alternation(Rng& rng, std::size_t trials) {
    Tally t("convergent_alternation");
    for (std::size_t i = 0; i < trials; ++i) {
        Rational r(Integer(uniform(rng, 1, 1000)), Integer(uniform(rng, 1, 1000)));
        bool ok = true;
        for (const auto& c : convergents(cf_from_rational(r)))
            ok = ok && (c.index % 2 == 0 ? c.value() <= r : c.value() >= r);
        t.check(ok, [&] { return describe(r); });
    }
    return t.take();
}

PropertyResult lagrange_truncation(Rng& rng, std::size_t trials) {
    Tally t("lagrange_truncation");
    for (std::size_t i = 0; i < trials; ++i) {
        auto [a, b] = coprime_pair(rng, 1, 500, 1, 500);
        auto sol = lagrange_solution(Integer(a), Integer(b));
        int expected = sol.length % 2 == 0 ? -1 : 1;
        auto cert = extended_gcd(Integer(a), Integer(b));
        // (s, -r) solves a·x + b·y = sign; so does sign·(m, n).
        bool ok = Integer(a) * sol.s - Integer(b) * sol.r == Integer(expected) && sol.sign == expected &&
                  Integer(b).divides(sol.s - Integer(expected) * cert.m);
        t.check(ok, [&] { return describe(a, b, "->", sol.r, sol.s); });
    }
    return t.take();
}

PropertyResult interval_prefix(Rng& rng, std::size_t trials) {
    Tally t("interval_prefix");
    for (std::size_t i = 0; i < trials; ++i) {
        Integer den(uniform(rng, 1, 1'000'000));
        Integer lo_num(uniform(rng, 1, 5'000'000));
        Rational lo(lo_num, den), hi(lo_num + Integer(uniform(rng, 0, 50)), den);
        auto prefix = interval_quotients(lo, hi, 64);
        std::vector<Rational> samples{lo, hi, (lo + hi) * Rational(Integer(1), Integer(2))};
        samples.push_back(lo + (hi - lo) * Rational(Integer(uniform(rng, 0, 1000)), Integer(1000)));
        bool ok = true;
        for (const auto& x : samples) {
            const auto q = cf_from_rational(x).quotients();
            ok = ok && q.size() >= prefix.size() && std::equal(prefix.begin(), prefix.end(), q.begin());
        }
        t.check(ok, [&] { return describe(lo, hi); });
    }
    return t.take();
}

PropertyResult polynomial_bezout(Rng& rng, std::size_t trials) {
    Tally t("polynomial_bezout");
    for (std::size_t i = 0; i < trials; ++i) {
        Polynomial a = random_polynomial(rng, 6), b = random_polynomial(rng, 6);
        auto e = generic_extended_gcd(a, b);
        bool ok = e.u * a + e.v * b == e.g && e.g.is_monic() && poly_divides(e.g, a) && poly_divides(e.g, b);
        t.check(ok, [&] { return describe(a.to_coefficient_string(), b.to_coefficient_string()); });
    }
    return t.take();
}

PropertyResult polynomial_constructed_gcd(Rng& rng, std::size_t trials) {
    Tally t("polynomial_constructed_gcd");
    for (std::size_t i = 0; i < trials; ++i) {
        Polynomial g = random_polynomial(rng, 3);
        Polynomial a1, b1;
        do {
            a1 = random_polynomial(rng, 3);
            b1 = random_polynomial(rng, 3);
        } while (oracle::resultant(a1, b1).is_zero());
        Polynomial got = poly_gcd(g * a1, g * b1);
        t.check(got == g.monic(), [&] {
            return describe(g.to_coefficient_string(), a1.to_coefficient_string(), b1.to_coefficient_string());
        });
    }
    return t.take();
}

PropertyResult remainder_law(Rng& rng, std::size_t trials) {
    Tally t("remainder_law");
    for (std::size_t i = 0; i < trials; ++i) {
        Integer x = random_nonzero(rng, 128), y = random_nonzero(rng, 128);
        auto ic = remainder_chain(x, y);
        bool ok = true;
        for (std::size_t k = 2; k + 1 < ic.size(); ++k) ok = ok && euclidean_size(ic[k]) < euclidean_size(ic[k - 1]);
        Polynomial a = random_polynomial(rng, 6), b = random_polynomial(rng, 6);
        if (!b.is_zero()) {
            auto pc = remainder_chain(a, b);
            for (std::size_t k = 2; k + 1 < pc.size(); ++k)
                ok = ok && euclidean_size(pc[k]) < euclidean_size(pc[k - 1]);
        }
        t.check(ok, [&] { return describe(x, y); });
    }
    return t.take();
}

PropertyResult generic_matches_extended(Rng& rng, std::size_t trials) {
    Tally t("generic_matches_extended");
    for (std::size_t i = 0; i < trials; ++i) {
        Integer a = random_nonzero(rng, 256), b = random_nonzero(rng, 256);
        auto e = generic_extended_gcd(a, b);
        auto c = extended_gcd(a, b);
        t.check(e.g == c.g && e.u * a + e.v * b == e.g, [&] { return describe(a, b); });
    }
    return t.take();
}

PropertyResult porism(Rng& rng, std::size_t trials) {
    Tally t("porism");
    for (std::size_t i = 0; i < trials; ++i) {
        std::int64_t x = uniform(rng, 1, 10'000), y = uniform(rng, 1, 10'000);
        Integer g = gcd_anthyphairesis(Integer(x), Integer(y));
        std::int64_t expected = oracle::trial_gcd(x, y);
        bool ok = g == Integer(expected);
        for (auto d : oracle::common_divisors(x, y, 1000)) ok = ok && Integer(d).divides(g);
        ok = ok && (g.is_one() == (expected == 1));
        t.check(ok, [&] { return describe(x, y, "->", g); });
    }
    return t.take();
}

PropertyResult ratio_equality(Rng& rng, std::size_t trials) {
    Tally t("same_ratio");
    for (std::size_t i = 0; i < trials; ++i) {
        Integer x1(uniform(rng, 1, 60)), y1(uniform(rng, 1, 60));
        Integer x2(uniform(rng, 1, 60)), y2(uniform(rng, 1, 60));
        if (uniform(rng, 0, 1)) {  // force a match half the time
            Integer k(uniform(rng, 1, 20));
            x2 = x1 * k;
            y2 = y1 * k;
            if (uniform(rng, 0, 1)) std::swap(x2, y2);
        }
        auto hi1 = std::max(x1, y1), lo1 = std::min(x1, y1);
        auto hi2 = std::max(x2, y2), lo2 = std::min(x2, y2);
        bool expected = hi1 * lo2 == hi2 * lo1;
        t.check(same_ratio(x1, y1, x2, y2) == expected, [&] { return describe(x1, y1, x2, y2); });
    }
    return t.take();
}

PropertyResult kth_root_scan(Rng& rng, std::size_t trials) {
    Tally t("kth_root_scan");
    for (std::size_t i = 0; i < trials; ++i) {
        std::int64_t n = uniform(rng, 0, 1'000'000);
        int k = static_cast<int>(uniform(rng, 1, 6));
        auto r = integer_kth_root(Integer(n), Integer(k));
        std::int64_t root = oracle::scan_kth_root(n, k);
        bool exact = Integer(root).pow(static_cast<unsigned long>(k)) == Integer(n);
        bool ok = r.root == Integer(root) && r.exact == exact;
        if (k >= 2 && n >= 1) ok = ok && rational_kth_root(Integer(n), Integer(k)).has_value() == exact;
        t.check(ok, [&] { return describe(n, k, "->", r.root); });
    }
    return t.take();
}

PropertyResult power_theorem(Rng& rng, std::size_t trials) {
    Tally t("power_theorem");
    for (std::size_t i = 0; i < trials; ++i) {
        auto [a, b] = coprime_pair(rng, 2, 50, 1, 50);
        Integer k(uniform(rng, 2, 5));
        const auto e = static_cast<unsigned long>(k.to_int64());
        // Closest integer candidate for (b/a)^k.
        Integer n = floor_div(Integer(b).pow(e), Integer(a).pow(e));
        if (n.is_zero()) n = Integer(1);
        auto check = reduced_power_check(Integer(a), Integer(b), k, n);
        t.check(!check.holds && !check.contradiction, [&] { return describe(a, b, k, n); });
    }
    return t.take();
}

}  // namespace

Integer random_positive(std::mt19937_64& rng, unsigned max_bits) {
    const auto bits = static_cast<unsigned>(uniform(rng, 1, max_bits));
    Integer v(0);
    unsigned have = 0;
    while (have < bits) {
        v = v * Integer(static_cast<unsigned long>(1) << 32) + Integer(static_cast<unsigned long>(rng() >> 32));
        have += 32;
    }
    // Keep exactly `bits` bits and force the top one so the length is as drawn.
    Integer modulus = Integer(2).pow(bits);
    v = floor_mod(v, modulus);
    Integer top = Integer(2).pow(bits - 1);
    if (v < top) v += top;
    return v;
}

bool VerifyReport::ok() const {
    return std::all_of(properties.begin(), properties.end(), [](const auto& p) { return p.failed == 0; });
}

VerifyReport run_verify(std::uint64_t seed, std::size_t trials, const VerifyHooks& hooks) {
    VerifyReport report;
    report.seed = seed;
    report.trials = trials;
    std::uint64_t stream = 0;
    auto next_rng = [&] {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(stream++)};
        return Rng(seq);
    };
    auto run = [&](auto&& property) {
        Rng rng = next_rng();
        report.properties.push_back(property(rng));
    };
    run([&](Rng& r) { return gcd_methods_agree(r, trials, report.first_case); });
    run([&](Rng& r) { return bezout_identity(r, trials); });
    run([&](Rng& r) { return canonical_certificate(r, trials); });
    run([&](Rng& r) { return nonnegative_euclid_form(r, trials); });
    run([&](Rng& r) { return gauss_consistency(r, trials); });
    run([&](Rng& r) { return family_completeness(r, trials); });
    run([&](Rng& r) { return cf_round_trip(r, trials); });
    run([&](Rng& r) { return determinant_identity(r, trials, hooks); });
    run([&](Rng& r) { return convergent_alternation(r, trials); });
    run([&](Rng& r) { return lagrange_truncation(r, trials); });
    run([&](Rng& r) { return interval_prefix(r, trials); });
    run([&](Rng& r) { return polynomial_bezout(r, trials); });
    run([&](Rng& r) { return polynomial_constructed_gcd(r, trials); });
    run([&](Rng& r) { return remainder_law(r, trials); });
    run([&](Rng& r) { return generic_matches_extended(r, trials); });
    run([&](Rng& r) { return porism(r, trials); });
    run([&](Rng& r) { return ratio_equality(r, trials); });
    run([&](Rng& r) { return kth_root_scan(r, trials); });
    run([&](Rng& r) { return power_theorem(r, trials); });
    return report;
}

}  // namespace euclid
