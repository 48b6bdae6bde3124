#include <doctest.h>

#include "euclid/anthyphairesis.hpp"
#include "euclid/continued_fraction.hpp"
#include "euclid/errors.hpp"
#include "euclid/oracles.hpp"

using namespace euclid;

namespace {

std::vector<Integer> ints(std::initializer_list<long> xs) {
    std::vector<Integer> out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

void check_trace_invariants(const AnthyphairesisTrace& t) {
    REQUIRE_FALSE(t.steps.empty());
    for (std::size_t i = 0; i < t.steps.size(); ++i) {
        const auto& s = t.steps[i];
        CHECK(s.larger == s.quotient * s.smaller + s.remainder);
        CHECK(s.quotient >= Integer(1));
        CHECK(s.remainder.sign() >= 0);
        CHECK(s.remainder < s.smaller);
        if (i + 1 < t.steps.size()) {
            CHECK(t.steps[i + 1].larger == s.smaller);
            CHECK(t.steps[i + 1].smaller == s.remainder);
        }
    }
    CHECK(t.steps.back().remainder.is_zero());
    CHECK(t.terminal == t.steps.back().smaller);
}

}  // namespace

TEST_CASE("subtract_trace: 15 and 54 end with 3") {
    auto t = subtract_trace(Integer(15), Integer(54));
    check_trace_invariants(t);
    CHECK(t.terminal == Integer(3));
    CHECK(Integer(3).divides(Integer(15)));
    CHECK(Integer(3).divides(Integer(54)));
}

TEST_CASE("subtract_trace: equal lengths take one step") {
    auto t = subtract_trace(Integer(7), Integer(7));
    check_trace_invariants(t);
    REQUIRE(t.steps.size() == 1);
    CHECK(t.steps[0].quotient == Integer(1));
    CHECK(t.terminal == Integer(7));
}

TEST_CASE("subtract_trace: 12 and 41 leave 5, 2, 1") {
    auto t = subtract_trace(Integer(12), Integer(41));
    check_trace_invariants(t);
    REQUIRE(t.steps.size() == 4);
    CHECK(t.steps[0].quotient == Integer(3));  // 12 taken three times from 41
    CHECK(t.steps[0].remainder == Integer(5));
    CHECK(t.steps[1].remainder == Integer(2));
    CHECK(t.steps[2].remainder == Integer(1));
    CHECK(t.terminal == Integer(1));
}

TEST_CASE("subtract_trace rejects nonpositive input") {
    CHECK_THROWS_AS(subtract_trace(Integer(0), Integer(5)), domain_error);
    CHECK_THROWS_AS(subtract_trace(Integer(5), Integer(-5)), domain_error);
    CHECK_THROWS_AS(gcd_anthyphairesis(Integer(-1), Integer(5)), domain_error);
    CHECK_THROWS_AS(quotient_sequence(Integer(0), Integer(0)), domain_error);
}

TEST_CASE("quotient sequences") {
    CHECK(quotient_sequence(Integer(54), Integer(15)) == ints({3, 1, 1, 2}));
    CHECK(quotient_sequence(Integer(36), Integer(10)) == ints({3, 1, 1, 2}));
    CHECK(quotient_sequence(Integer(15), Integer(54)) == ints({3, 1, 1, 2}));
    CHECK(quotient_sequence(Integer(5), Integer(1)) == ints({5}));
    CHECK(quotient_sequence(Integer(7), Integer(7)) == ints({1}));
}

TEST_CASE("quotient sequences are canonical and evaluate to max:min") {
    for (long x = 1; x <= 120; ++x)
        for (long y = 1; y <= 120; ++y) {
            auto qs = quotient_sequence(Integer(x), Integer(y));
            REQUIRE((qs.size() == 1 || qs.back() >= Integer(2)));
            Rational expected(Integer(std::max(x, y)), Integer(std::min(x, y)));
            REQUIRE(cf_value(ContinuedFraction(qs)) == expected);
        }
}

TEST_CASE("gcd_anthyphairesis examples") {
    CHECK(gcd_anthyphairesis(Integer(15), Integer(54)) == Integer(3));
    CHECK(gcd_anthyphairesis(Integer(12), Integer(41)) == Integer(1));
    CHECK(gcd_anthyphairesis(Integer(1'000'000), Integer(1'000'000)) == Integer(1'000'000));
}

TEST_CASE("gcd_anthyphairesis matches trial division on [1, 10^4]^2 (sampled grid)") {
    // The full square is 10^8 pairs; every pair in [1, 300]^2 plus a stride
    // over the rest keeps the run short while touching every magnitude.
    for (std::int64_t x = 1; x <= 300; ++x)
        for (std::int64_t y = 1; y <= 300; ++y)
            REQUIRE(gcd_anthyphairesis(Integer(x), Integer(y)) == Integer(oracle::trial_gcd(x, y)));
    for (std::int64_t x = 1; x <= 10000; x += 97)
        for (std::int64_t y = 1; y <= 10000; y += 89)
            REQUIRE(gcd_anthyphairesis(Integer(x), Integer(y)) == Integer(oracle::trial_gcd(x, y)));
}

TEST_CASE("porism: every common divisor divides the greatest common measure") {
    for (std::int64_t x = 1; x <= 10000; x += 37)
        for (std::int64_t y = 6; y <= 10000; y += 41) {
            Integer g = gcd_anthyphairesis(Integer(x), Integer(y));
            for (auto d : oracle::common_divisors(x, y, 1000)) REQUIRE(Integer(d).divides(g));
            // terminal 1 exactly when there is no common divisor above 1
            REQUIRE(g.is_one() == (oracle::common_divisors(x, y, std::min(x, y)).size() == 1));
        }
}

TEST_CASE("subtraction route agrees with division route on large inputs") {
    Integer x = Integer::parse("340282366920938463463374607431768211457");
    Integer y = Integer::parse("18446744073709551629");
    CHECK(gcd_anthyphairesis(x, y) == gcd_divide(x, y));
    Integer g = Integer::parse("99999999999999999989");
    CHECK(gcd_anthyphairesis(x * g, y * g) == gcd_divide(x, y) * g);
    // a huge first quotient is found without unit subtractions
    auto t = subtract_trace(Integer(2).pow(200) + Integer(1), Integer(2));
    CHECK(t.steps[0].quotient == Integer(2).pow(199));
}

TEST_CASE("same_ratio") {
    CHECK(same_ratio(Integer(15), Integer(54), Integer(10), Integer(36)));
    CHECK(same_ratio(Integer(1), Integer(2), Integer(2), Integer(1)));
    CHECK_FALSE(same_ratio(Integer(2), Integer(3), Integer(3), Integer(5)));
    // 5e : 18e for any e
    CHECK(same_ratio(Integer(5), Integer(18), Integer(5 * 37), Integer(18 * 37)));
}

TEST_CASE("same_ratio agrees with cross-multiplication of max:min") {
    for (long x1 = 1; x1 <= 12; ++x1)
        for (long y1 = 1; y1 <= 12; ++y1)
            for (long x2 = 1; x2 <= 12; ++x2)
                for (long y2 = 1; y2 <= 12; ++y2) {
                    bool expected = std::max(x1, y1) * std::min(x2, y2) == std::max(x2, y2) * std::min(x1, y1);
                    REQUIRE(same_ratio(Integer(x1), Integer(y1), Integer(x2), Integer(y2)) == expected);
                }
}

TEST_CASE("trace rendering") {
    std::string text = render_trace(subtract_trace(Integer(15), Integer(54)));
    CHECK(text ==
          "54 = 3·15 + 9\n"
          "15 = 1·9 + 6\n"
          "9 = 1·6 + 3\n"
          "6 = 2·3 + 0\n"
          "gcd = 3\n");
}
