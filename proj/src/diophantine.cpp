#include "euclid/diophantine.hpp"

#include "euclid/anthyphairesis.hpp"
#include "euclid/errors.hpp"

namespace euclid {

namespace {

void require_nonzero(const Integer& a, const Integer& b) {
    if (a.is_zero() || b.is_zero()) throw domain_error("domain: inputs must be non-zero");
}

void require_within(const Integer& v, std::int64_t limit, const char* what) {
    if (v.abs() > Integer(limit))
        throw domain_error(std::string("domain: ") + what + " exceeds " + std::to_string(limit));
}

}  // namespace

BezoutCertificate extended_gcd(const Integer& a, const Integer& b) {
    require_nonzero(a, b);
    // Each remainder in the chain is carried as an explicit combination
    // u·|a| + v·|b| of the two starting lengths.
    Integer prev = a.abs(), cur = b.abs();
    Integer prev_u(1), prev_v(0);
    Integer cur_u(0), cur_v(1);
    while (true) {
        Integer q = prev / cur;
        Integer r = prev - q * cur;
        if (r.is_zero()) break;
        Integer r_u = prev_u - q * cur_u;
        Integer r_v = prev_v - q * cur_v;
        prev = std::move(cur);
        prev_u = std::move(cur_u);
        prev_v = std::move(cur_v);
        cur = std::move(r);
        cur_u = std::move(r_u);
        cur_v = std::move(r_v);
    }
    if (a.sign() < 0) cur_u = -cur_u;
    if (b.sign() < 0) cur_v = -cur_v;
    return {a, b, std::move(cur), std::move(cur_u), std::move(cur_v)};
}

BezoutCertificate canonicalize(const BezoutCertificate& cert) {
    if (cert.b.is_zero() || cert.g.sign() <= 0 || !cert.holds())
        throw domain_error("domain: invalid certificate");
    const Integer step = divexact(cert.b.abs(), cert.g);
    BezoutCertificate out = cert;
    out.m = floor_mod(cert.m, step);
    out.n = divexact(cert.g - cert.a * out.m, cert.b);
    return out;
}

EuclidForm euclid_form(const Integer& x, const Integer& y) {
    if (x.sign() <= 0 || y.sign() <= 0) throw domain_error("domain: inputs must be positive");
    const BezoutCertificate cert = extended_gcd(x, y);
    // x·m' + y·n' = g with m', n' of opposite sign (or one zero).
    EuclidForm f{x, y, {}, {}, 1, cert.g};
    if (cert.m.sign() >= 0 && cert.n.sign() <= 0) {
        f.m = cert.m;
        f.n = -cert.n;
        f.sign = 1;
    } else {
        f.m = -cert.m;
        f.n = cert.n;
        f.sign = -1;
    }
    return f;
}

Integer gauss_inverse(const Integer& a, const Integer& b, InverseMethod method) {
    if (b <= Integer(1)) throw domain_error("domain: modulus must exceed 1");
    const Integer residue = floor_mod(a, b);
    if (residue.is_zero() || !gcd_divide(residue, b).is_one()) throw domain_error("not invertible");

    if (method == InverseMethod::euclid) {
        Integer m = floor_mod(extended_gcd(residue, b).m, b);
        return m.is_zero() ? b : m;
    }

    if (b > Integer(kMaxInverseScan)) throw domain_error("scan too large");
    // a·r for r = 1..b runs through every residue class mod b exactly once.
    const std::int64_t modulus = b.to_int64();
    const std::int64_t step = residue.to_int64();
    std::int64_t value = 0;
    for (std::int64_t r = 1; r <= modulus; ++r) {
        value += step;
        if (value >= modulus) value -= modulus;
        if (value == 1) return Integer(r);
    }
    throw domain_error("not invertible");  // unreachable for coprime input
}

std::optional<SolutionFamily> solve_linear(const Integer& a, const Integer& b, const Integer& c) {
    require_nonzero(a, b);
    const BezoutCertificate cert = extended_gcd(a, b);
    if (!cert.g.divides(c)) return std::nullopt;
    const Integer scale = divexact(c, cert.g);
    return SolutionFamily{a,           b, c, cert.m * scale, cert.n * scale, divexact(b, cert.g),
                          -divexact(a, cert.g)};
}

std::vector<std::pair<Integer, Integer>> all_solutions_in_box(const Integer& a, const Integer& b,
                                                              const Integer& c, const Integer& bound) {
    require_nonzero(a, b);
    require_within(a, kMaxBoxCoefficient, "|a|");
    require_within(b, kMaxBoxCoefficient, "|b|");
    if (bound.sign() <= 0) throw domain_error("domain: bound must be positive");
    require_within(bound, kMaxBoxCoefficient, "bound");

    std::vector<std::pair<Integer, Integer>> out;
    const std::int64_t limit = bound.to_int64();
    if (c.abs() < Integer(std::int64_t{1} << 60)) {
        // |a·x| <= 10^8, so the whole scan fits in 64 bits.
        const std::int64_t A = a.to_int64(), B = b.to_int64(), C = c.to_int64();
        for (std::int64_t x = -limit; x <= limit; ++x) {
            const std::int64_t rest = C - A * x;
            if (rest % B == 0) out.emplace_back(Integer(x), Integer(rest / B));
        }
        return out;
    }
    for (std::int64_t x = -limit; x <= limit; ++x) {
        Integer rest = c - a * Integer(x);
        if (b.divides(rest)) out.emplace_back(Integer(x), divexact(rest, b));
    }
    return out;
}

IdealCheck ideal_equality_check(const Integer& a, const Integer& b, const Integer& bound) {
    require_nonzero(a, b);
    require_within(a, kMaxBoxCoefficient, "|a|");
    require_within(b, kMaxBoxCoefficient, "|b|");
    if (bound.sign() <= 0) throw domain_error("domain: bound must be positive");
    require_within(bound, kMaxBoxCoefficient, "N");

    const std::int64_t A = a.to_int64();
    const std::int64_t B = b.abs().to_int64();
    const std::int64_t N = bound.to_int64();

    // Every value a·s + b·t has a representation with |s| <= |b|, because s
    // can be shifted by |b| at the cost of changing t by a. For each such s
    // all t landing in [−N, N] are visited.
    std::vector<bool> hit(static_cast<std::size_t>(2 * N + 1), false);
    for (std::int64_t s = -B; s <= B; ++s) {
        const std::int64_t base = A * s;
        // smallest t with base + B·t >= −N
        std::int64_t t = floor_div(Integer(-N - base + B - 1), Integer(B)).to_int64();
        for (std::int64_t v = base + B * t; v <= N; v += B) hit[static_cast<std::size_t>(v + N)] = true;
    }

    IdealCheck out{true, gcd_anthyphairesis(a.abs(), b.abs()), {}};
    const std::int64_t g = out.g.to_int64();
    for (std::int64_t v = -N; v <= N; ++v) {
        const bool reachable = hit[static_cast<std::size_t>(v + N)];
        if (reachable) out.reachable.push_back(v);
        if (reachable != (v % g == 0)) out.equal = false;
    }
    return out;
}

}  // namespace euclid
