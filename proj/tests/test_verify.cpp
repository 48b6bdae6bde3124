#include <doctest.h>

#include "euclid/verify.hpp"

using namespace euclid;

TEST_CASE("verify passes with a fixed seed") {
    auto report = run_verify(1, 1000);
    for (const auto& p : report.properties) {
        INFO(p.name << ": " << p.first_failure);
        CHECK(p.checked == 1000);
        CHECK(p.failed == 0);
    }
    CHECK(report.ok());
}

TEST_CASE("verify is deterministic in the seed") {
    auto a = run_verify(1, 1);
    auto b = run_verify(1, 1);
    CHECK_FALSE(a.first_case.empty());
    CHECK(a.first_case == b.first_case);
    CHECK(run_verify(2, 1).first_case != a.first_case);
}

TEST_CASE("a broken convergent recurrence is caught") {
    VerifyHooks broken;
    // q_n = c_n·q_{n-1} + q_{n-2} + 1 instead of + q_{n-2}
    broken.convergents = [](const ContinuedFraction& cf) {
        std::vector<Convergent> out;
        Integer p2(0), q2(1), p1(1), q1(0);
        for (std::size_t n = 0; n < cf.size(); ++n) {
            Integer p = cf[n] * p1 + p2;
            Integer q = cf[n] * q1 + q2 + Integer(1);
            out.push_back({n, p, q});
            p2 = p1;
            q2 = q1;
            p1 = p;
            q1 = q;
        }
        return out;
    };
    auto report = run_verify(1, 50, broken);
    CHECK_FALSE(report.ok());
    for (const auto& p : report.properties) {
        if (p.name == "determinant_identity")
            CHECK(p.failed > 0);
        else
            CHECK(p.failed == 0);
    }
}

TEST_CASE("random_positive respects its bit bound") {
    std::mt19937_64 rng(99);
    bool saw_long = false;
    for (int i = 0; i < 2000; ++i) {
        Integer v = random_positive(rng, 256);
        REQUIRE(v.sign() > 0);
        REQUIRE(v.bit_length() <= 256);
        saw_long = saw_long || v.bit_length() == 256;
    }
    CHECK(saw_long);
}
