// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "euclid/anthyphairesis.hpp"
#include "euclid/continued_fraction.hpp"
#include "euclid/diophantine.hpp"
#include "euclid/euclidean_domain.hpp"
#include "euclid/oracles.hpp"
#include "euclid/polynomial.hpp"
#include "euclid/power_rationality.hpp"
#include "euclid/verify.hpp"

using namespace euclid;

namespace {

struct Criterion {
    int id;
    std::string title;
    double time_limit_s;  // 0: no limit
    std::function<std::string()> body;  // empty string on success, else the reason
};

std::vector<Integer> ints(std::initializer_list<long> xs) {
    std::vector<Integer> out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

std::string c1_quotient_sequences() {
    auto expected = ints({3, 1, 1, 2});
    if (quotient_sequence(Integer(54), Integer(15)) != expected) return "54:15 mismatch";
    if (quotient_sequence(Integer(36), Integer(10)) != expected) return "36:10 mismatch";
    return {};
}

std::string c2_bezout_instance() {
    auto c = extended_gcd(Integer(12), Integer(41));
    if (c.g != Integer(1)) return "g != 1";
    if (Integer(12) * c.m + Integer(41) * c.n != Integer(1)) return "12m + 41n != 1";
    auto f = euclid_form(Integer(12), Integer(41));
    if (f.m.sign() < 0 || f.n.sign() < 0) return "euclid_form has a negative coefficient";
    if (f.m != Integer(17) || f.n != Integer(5)) return "euclid_form is not (17, 5)";
    if ((Integer(12) * f.m - Integer(41) * f.n).abs() != Integer(1)) return "|12m − 41n| != 1";
    return {};
}

std::string c3_pi() {
    auto q = interval_quotients(oracle::decimal("3.14159265358979"), oracle::decimal("3.14159265358980"), 64);
    if (q.size() < 5 || std::vector<Integer>(q.begin(), q.begin() + 5) != ints({3, 7, 15, 1, 292}))
        return "interval prefix is not [3,7,15,1,292,...]";
    // every emitted quotient must also belong to π itself
    auto exact = interval_quotients(oracle::pi_lower_30(), oracle::pi_upper_30(), 64);
    if (exact.size() < q.size() || !std::equal(q.begin(), q.end(), exact.begin()))
        return "14-digit prefix disagrees with the 30-digit expansion";
    auto conv = convergents(ContinuedFraction(ints({3, 7, 15, 1})));
    if (conv.back().value() != Rational(Integer(355), Integer(113))) return "last convergent is not 355/113";
    const Rational tol(Integer(1), Integer(1'000'000));
    const Rational approx = conv.back().value();
    // π lies strictly inside [lo, hi], so both distances bound |355/113 − π|.
    if ((approx - oracle::pi_lower_30()).abs() >= tol || (approx - oracle::pi_upper_30()).abs() >= tol)
        return "|355/113 − π| >= 1e-6";
    return {};
}

std::string c4_golden_ratio() {
    auto q = interval_quotients(oracle::decimal("1.6180339"), oracle::decimal("1.6180340"), 64);
    std::size_t ones = 0;
    while (ones < q.size() && q[ones] == Integer(1)) ++ones;
    if (ones < 10) return "only " + std::to_string(ones) + " leading 1s";
    return {};
}

std::string c5_gcd_equivalence() {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 10'000; ++i) {
        Integer x = random_positive(rng, 256), y = random_positive(rng, 256);
        Integer s = gcd_anthyphairesis(x, y), d = gcd_divide(x, y), g = generic_gcd(x, y);
        if (s != d || d != g) return "disagreement at " + x.to_string() + ", " + y.to_string();
    }
    return {};
}

std::string c6_gauss_euclid() {
    for (std::int64_t a = 1; a <= 200; ++a)
        for (std::int64_t b = 2; b <= 200; ++b) {
            if (oracle::trial_gcd(a, b) != 1) continue;
            Integer A(a), B(b);
            Integer scan = gauss_inverse(A, B, InverseMethod::scan);
            Integer fast = gauss_inverse(A, B, InverseMethod::euclid);
            if (scan != fast) return "methods differ at " + std::to_string(a) + ", " + std::to_string(b);
            // two solutions of a·t + b·u = 1: (scan, (1 − a·scan)/b) and the certificate
            Integer u = divexact(Integer(1) - A * scan, B);
            if (A * scan + B * u != Integer(1)) return "scan solution invalid";
            auto cert = extended_gcd(A, B);
            if (!B.divides(cert.m - scan)) return "first coordinates not congruent mod b";
            auto canon = canonicalize(cert);
            if (!B.divides(canon.m - cert.m)) return "canonical certificate not congruent mod b";
        }
    return {};
}

std::string c7_lagrange() {
    for (std::int64_t a = 2; a <= 500; ++a)
        for (std::int64_t b = 1; b < a; ++b) {
            if (oracle::trial_gcd(a, b) != 1) continue;
            auto s = lagrange_solution(Integer(a), Integer(b));
            const Integer expected(s.length % 2 == 0 ? -1 : 1);  // (−1)^{l+1}
            if (Integer(a) * s.s - Integer(b) * s.r != expected || Integer(s.sign) != expected)
                return "fails at " + std::to_string(a) + "/" + std::to_string(b);
        }
    return {};
}

std::string c8_determinant() {
    for (std::int64_t p = 1; p <= 1000; ++p)
        for (std::int64_t q = 1; q <= 1000; ++q) {
            if (std::gcd(p, q) != 1) continue;  // each rational once, in lowest terms
            auto conv = convergents(cf_from_rational(Rational(Integer(p), Integer(q))));
            Integer p_prev(1), q_prev(0);
            for (const auto& c : conv) {
                const Integer expected(c.index % 2 == 0 ? -1 : 1);
                if (c.p * q_prev - p_prev * c.q != expected)
                    return "fails at " + std::to_string(p) + "/" + std::to_string(q);
                p_prev = c.p;
                q_prev = c.q;
            }
        }
    return {};
}

std::string c9_ideal() {
    auto a = ideal_equality_check(Integer(12), Integer(41), Integer(100));
    if (!a.equal || a.g != Integer(1)) return "(12, 41) failed";
    auto b = ideal_equality_check(Integer(15), Integer(54), Integer(100));
    if (!b.equal || b.g != Integer(3)) return "(15, 54) failed";
    return {};
}

std::string c10_family_completeness() {
    const Integer bound(100);
    for (long a = -50; a <= 50; ++a)
        for (long b = -50; b <= 50; ++b) {
            if (a == 0 || b == 0) continue;
            for (long c = -50; c <= 50; ++c) {
                auto box = all_solutions_in_box(Integer(a), Integer(b), Integer(c), bound);
                auto fam = solve_linear(Integer(a), Integer(b), Integer(c));
                std::vector<std::pair<Integer, Integer>> listed;
                if (fam) {
                    const Integer dx = fam->dx.abs();
                    for (Integer x = floor_mod(fam->x0 + bound, dx) - bound; x <= bound; x += dx)
                        listed.push_back(fam->at(divexact(x - fam->x0, fam->dx)));
                }
                if (listed != box)
                    return "mismatch at " + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c);
            }
        }
    return {};
}

std::string c11_polynomial_bezout() {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> deg(0, 6), num(-9, 9), den(1, 9);
    int done = 0;
    while (done < 200) {
        Polynomial ab[2];
        for (auto& p : ab) {
            std::vector<Rational> c;
            for (long i = 0, d = deg(rng); i <= d; ++i) c.emplace_back(Integer(num(rng)), Integer(den(rng)));
            p = Polynomial(std::move(c));
        }
        if (ab[0].is_zero() && ab[1].is_zero()) continue;
        auto e = generic_extended_gcd(ab[0], ab[1]);
        if (e.u * ab[0] + e.v * ab[1] != e.g) return "identity fails for " + ab[0].to_string() + ", " + ab[1].to_string();
        ++done;
    }
    if (poly_gcd(Polynomial::parse("-1,0,0,1"), Polynomial::parse("-1,0,1")) != Polynomial::parse("-1,1"))
        return "gcd(x^3 − 1, x^2 − 1) != x − 1";
    return {};
}

std::string c12_kth_power() {
    for (int k = 2; k <= 6; ++k)
        for (std::int64_t n = 1; n <= 100'000; ++n) {
            std::int64_t root = oracle::scan_kth_root(n, k);
            bool is_power = Integer(root).pow(static_cast<unsigned long>(k)) == Integer(n);
            auto got = rational_kth_root(Integer(n), Integer(k));
            if (got.has_value() != is_power || (got && *got != Integer(root)))
                return "fails at n=" + std::to_string(n) + ", k=" + std::to_string(k);
        }
    if (rational_kth_root(Integer(2), Integer(2)).has_value()) return "sqrt(2) reported rational";
    return {};
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "quotient sequences 54:15 and 36:10 are [3,1,1,2]", 0.001, c1_quotient_sequences},
        {2, "Bezout instance 12, 41 and Euclid form (17, 5)", 0, c2_bezout_instance},
        {3, "pi interval prefix [3,7,15,1,292]; 355/113 within 1e-6", 0, c3_pi},
        {4, "golden ratio interval gives >= 10 ones", 0, c4_golden_ratio},
        {5, "subtract/divide/generic gcd agree on 10^4 pairs to 2^256", 5.0, c5_gcd_equivalence},
        {6, "Gauss scan and Euclid inverse agree; solutions congruent mod b", 0, c6_gauss_euclid},
        {7, "Lagrange truncation a*s - b*r = (-1)^(l+1), a <= 500", 0, c7_lagrange},
        {8, "determinant identity for all p/q with p, q <= 1000", 0, c8_determinant},
        {9, "ideal equality for (12,41,100) and (15,54,100)", 1.0, c9_ideal},
        {10, "solution family equals box enumeration, |a|,|b|,|c| <= 50", 0, c10_family_completeness},
        {11, "polynomial Bezout on 200 pairs; gcd(x^3-1, x^2-1) = x-1", 2.0, c11_polynomial_bezout},
        {12, "kth-power theorem vs scan, n <= 10^5, k <= 6; sqrt(2) irrational", 5.0, c12_kth_power},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::string reason = c.body();
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (reason.empty() && c.time_limit_s > 0 && secs >= c.time_limit_s)
            reason = "took " + std::to_string(secs) + " s, limit " + std::to_string(c.time_limit_s) + " s";
        const bool pass = reason.empty();
        failures += pass ? 0 : 1;
        std::printf("%s [%2d] %s (%.3f s)%s%s\n", pass ? "PASS" : "FAIL", c.id, c.title.c_str(), secs,
                    pass ? "" : ": ", reason.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
