#include "euclid/cli.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "euclid/anthyphairesis.hpp"
#include "euclid/continued_fraction.hpp"
#include "euclid/diophantine.hpp"
#include "euclid/errors.hpp"
#include "euclid/euclidean_domain.hpp"
#include "euclid/polynomial.hpp"
#include "euclid/power_rationality.hpp"
#include "euclid/verify.hpp"

namespace euclid::cli {

namespace {

using nlohmann::ordered_json;
using json = ordered_json;

// Integers within 64 bits are JSON numbers; larger ones are decimal strings
// so that no precision is lost to a consumer's double parsing.
json to_json(const Integer& v) {
    if (v.fits_int64()) return v.to_int64();
    return v.to_string();
}

json to_json(const Rational& v) { return v.to_string(); }

json to_json(const std::vector<Integer>& vs) {
    json arr = json::array();
    for (const auto& v : vs) arr.push_back(to_json(v));
    return arr;
}

json to_json(const Polynomial& p) {
    json coeffs = json::array();
    for (const auto& c : p.coefficients()) coeffs.push_back(c.to_string());
    return {{"text", p.to_string()}, {"coefficients", coeffs}};
}

json to_json(const std::vector<Convergent>& cs) {
    json arr = json::array();
    for (const auto& c : cs) arr.push_back({{"n", c.index}, {"p", to_json(c.p)}, {"q", to_json(c.q)}});
    return arr;
}

struct Output {
    json inputs = json::object();
    json result = json::object();
    std::optional<json> trace;
    std::string text;
};

std::string join(const std::vector<Integer>& vs, const char* sep) {
    std::string s;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) s += sep;
        s += vs[i].to_string();
    }
    return s;
}

std::vector<Integer> parse_quotients(const std::vector<std::string>& args) {
    // A single "p/q" argument stands for its own expansion.
    if (args.size() == 1 && args[0].find('/') != std::string::npos)
        return cf_from_rational(Rational::parse(args[0])).quotients();
    std::vector<Integer> out;
    for (const auto& a : args) out.push_back(Integer::parse(a));
    return out;
}

struct Args {
    std::string x, y, z;
    std::string method;
    std::string lo, hi;
    std::vector<std::string> list;
    std::size_t max_terms = 20;
    std::string bound = "10";
    std::uint64_t seed = 1;
    std::size_t trials = 1000;
    bool trace = false;
    bool canonical = false;
};

Output cmd_gcd(const Args& a) {
    Integer x = Integer::parse(a.x), y = Integer::parse(a.y);
    if (x.is_zero() || y.is_zero()) throw domain_error("domain: inputs must be non-zero");
    const std::string method = a.method.empty() ? "subtract" : a.method;
    Output o;
    o.inputs = {{"x", to_json(x)}, {"y", to_json(y)}, {"method", method}};
    Integer g;
    if (method == "subtract")
        g = gcd_anthyphairesis(x.abs(), y.abs());
    else if (method == "divide")
        g = gcd_divide(x.abs(), y.abs());
    else
        g = generic_gcd(x, y);
    o.result = {{"gcd", to_json(g)}};
    if (a.trace) {
        auto tr = subtract_trace(x.abs(), y.abs());
        json steps = json::array();
        for (const auto& s : tr.steps)
            steps.push_back({{"larger", to_json(s.larger)},
                             {"smaller", to_json(s.smaller)},
                             {"quotient", to_json(s.quotient)},
                             {"remainder", to_json(s.remainder)}});
        o.trace = steps;
        o.text = render_trace(tr);
    } else {
        o.text = "gcd = " + g.to_string() + "\n";
    }
    return o;
}

Output cmd_bezout(const Args& a) {
    Integer x = Integer::parse(a.x), y = Integer::parse(a.y);
    auto c = extended_gcd(x, y);
    if (a.canonical) c = canonicalize(c);
    Output o;
    o.inputs = {{"a", to_json(x)}, {"b", to_json(y)}, {"canonical", a.canonical}};
    o.result = {{"a", to_json(c.a)}, {"b", to_json(c.b)}, {"g", to_json(c.g)}, {"m", to_json(c.m)}, {"n", to_json(c.n)}};
    std::ostringstream t;
    t << c.a << "·(" << c.m << ") + " << c.b << "·(" << c.n << ") = " << c.g << '\n';
    o.text = t.str();
    return o;
}

Output cmd_euclid_form(const Args& a) {
    Integer x = Integer::parse(a.x), y = Integer::parse(a.y);
    auto f = euclid_form(x, y);
    Output o;
    o.inputs = {{"x", to_json(x)}, {"y", to_json(y)}};
    o.result = {{"x", to_json(f.x)}, {"y", to_json(f.y)}, {"m", to_json(f.m)},
                {"n", to_json(f.n)}, {"sign", f.sign},    {"g", to_json(f.g)}};
    std::ostringstream t;
    t << f.m << "·" << f.x << " − " << f.n << "·" << f.y << " = " << (f.sign < 0 ? "-" : "") << f.g << '\n';
    o.text = t.str();
    return o;
}

Output cmd_inverse(const Args& a) {
    Integer x = Integer::parse(a.x), m = Integer::parse(a.y);
    const std::string method = a.method.empty() ? "euclid" : a.method;
    Integer inv = gauss_inverse(x, m, method == "scan" ? InverseMethod::scan : InverseMethod::euclid);
    Output o;
    o.inputs = {{"a", to_json(x)}, {"b", to_json(m)}, {"method", method}};
    o.result = {{"m", to_json(inv)}};
    o.text = inv.to_string() + "\n";
    return o;
}

Output cmd_solve(const Args& a) {
    Integer x = Integer::parse(a.x), y = Integer::parse(a.y), c = Integer::parse(a.z);
    auto fam = solve_linear(x, y, c);
    Output o;
    o.inputs = {{"a", to_json(x)}, {"b", to_json(y)}, {"c", to_json(c)}};
    if (!fam) {
        o.result = {{"solvable", false}};
        o.text = "unsolvable\n";
        return o;
    }
    o.result = {{"x0", to_json(fam->x0)}, {"y0", to_json(fam->y0)}, {"dx", to_json(fam->dx)},
                {"dy", to_json(fam->dy)}, {"solvable", true}};
    std::ostringstream t;
    t << "x = " << fam->x0 << " + k·(" << fam->dx << "), y = " << fam->y0 << " + k·(" << fam->dy << ")\n";
    o.text = t.str();
    return o;
}

Output cmd_box(const Args& a) {
    Integer x = Integer::parse(a.x), y = Integer::parse(a.y), c = Integer::parse(a.z);
    Integer bound = Integer::parse(a.bound);
    auto sols = all_solutions_in_box(x, y, c, bound);
    Output o;
    o.inputs = {{"a", to_json(x)}, {"b", to_json(y)}, {"c", to_json(c)}, {"bound", to_json(bound)}};
    json arr = json::array();
    std::ostringstream t;
    for (const auto& [sx, sy] : sols) {
        arr.push_back(json::array({to_json(sx), to_json(sy)}));
        t << sx << ' ' << sy << '\n';
    }
    o.result = {{"solutions", arr}};
    o.text = sols.empty() ? "no solutions\n" : t.str();
    return o;
}

Output cmd_ideal(const Args& a) {
    Integer x = Integer::parse(a.x), y = Integer::parse(a.y), n = Integer::parse(a.z);
    auto chk = ideal_equality_check(x, y, n);
    Output o;
    o.inputs = {{"a", to_json(x)}, {"b", to_json(y)}, {"N", to_json(n)}};
    o.result = {{"equal", chk.equal}, {"g", to_json(chk.g)}, {"reachable_count", chk.reachable.size()}};
    o.text = std::string(chk.equal ? "true" : "false") + " (g = " + chk.g.to_string() + ")\n";
    return o;
}

Output cmd_cf(const Args& a) {
    Rational r = Rational::parse(a.x);
    auto cf = cf_from_rational(r);
    Output o;
    o.inputs = {{"value", to_json(r)}};
    o.result = {{"quotients", to_json(cf.quotients())}};
    o.text = "[" + join(cf.quotients(), ",") + "]\n";
    return o;
}

Output cmd_value(const Args& a) {
    ContinuedFraction cf(parse_quotients(a.list));
    Rational v = cf_value(cf);
    Output o;
    o.inputs = {{"quotients", to_json(cf.quotients())}};
    o.result = {{"value", to_json(v)}};
    o.text = v.to_string() + "\n";
    return o;
}

Output cmd_convergents(const Args& a) {
    ContinuedFraction cf(parse_quotients(a.list));
    auto cs = convergents(cf);
    Output o;
    o.inputs = {{"quotients", to_json(cf.quotients())}};
    o.result = {{"convergents", to_json(cs)}};
    std::ostringstream t;
    for (const auto& c : cs) t << c.index << ": " << c.p << "/" << c.q << '\n';
    o.text = t.str();
    return o;
}

Output cmd_lagrange(const Args& a) {
    Integer x = Integer::parse(a.x), y = Integer::parse(a.y);
    auto s = lagrange_solution(x, y);
    Output o;
    o.inputs = {{"a", to_json(x)}, {"b", to_json(y)}};
    o.result = {{"r", to_json(s.r)}, {"s", to_json(s.s)}, {"sign", s.sign}, {"length", s.length}};
    std::ostringstream t;
    t << x << "·" << s.s << " − " << y << "·" << s.r << " = " << s.sign << '\n';
    o.text = t.str();
    return o;
}

Output cmd_approx(const Args& a) {
    Rational lo = Rational::parse_decimal(a.lo), hi = Rational::parse_decimal(a.hi);
    auto qs = interval_quotients(lo, hi, a.max_terms);
    Output o;
    o.inputs = {{"lo", to_json(lo)}, {"hi", to_json(hi)}, {"max_terms", a.max_terms}};
    o.result = {{"quotients", to_json(qs)}};
    std::ostringstream t;
    t << "[" << join(qs, ",") << "]\n";
    if (!qs.empty()) {
        auto cs = convergents(ContinuedFraction(qs));
        o.result["convergents"] = to_json(cs);
        for (const auto& c : cs) t << c.index << ": " << c.p << "/" << c.q << '\n';
    }
    o.text = t.str();
    return o;
}

Output cmd_polygcd(const Args& a) {
    Polynomial p = Polynomial::parse(a.x), q = Polynomial::parse(a.y);
    Polynomial g = poly_gcd(p, q);
    Output o;
    o.inputs = {{"a", to_json(p)}, {"b", to_json(q)}};
    o.result = {{"gcd", to_json(g)}};
    o.text = g.to_string() + "\n";
    return o;
}

Output cmd_polybezout(const Args& a) {
    Polynomial p = Polynomial::parse(a.x), q = Polynomial::parse(a.y);
    auto e = generic_extended_gcd(p, q);
    Output o;
    o.inputs = {{"a", to_json(p)}, {"b", to_json(q)}};
    o.result = {{"g", to_json(e.g)}, {"u", to_json(e.u)}, {"v", to_json(e.v)}};
    o.text = "g = " + e.g.to_string() + "\nu = " + e.u.to_string() + "\nv = " + e.v.to_string() + "\n";
    return o;
}

Output cmd_kthpower(const Args& a) {
    Integer n = Integer::parse(a.x), k = Integer::parse(a.y);
    auto root = rational_kth_root(n, k);
    Output o;
    o.inputs = {{"n", to_json(n)}, {"k", to_json(k)}};
    o.result = {{"n", to_json(n)}, {"k", to_json(k)}, {"root", root ? to_json(*root) : json(nullptr)},
                {"is_power", root.has_value()}};
    o.text = root ? root->to_string() + "\n" : "none (the root is irrational)\n";
    return o;
}

struct VerifyOutcome {
    Output output;
    bool ok;
};

VerifyOutcome cmd_verify(const Args& a) {
    if (a.trials < 1) throw CLI::ValidationError("--trials", "must be at least 1");
    auto report = run_verify(a.seed, a.trials);
    Output o;
    o.inputs = {{"seed", a.seed}, {"trials", a.trials}};
    json props = json::array();
    std::ostringstream t;
    for (const auto& p : report.properties) {
        props.push_back({{"name", p.name}, {"checked", p.checked}, {"failed", p.failed},
                         {"first_failure", p.first_failure}});
        t << (p.failed ? "FAIL " : "ok   ") << p.name << " " << p.checked - p.failed << "/" << p.checked;
        if (p.failed) t << "  first failure: " << p.first_failure;
        t << '\n';
    }
    o.result = {{"ok", report.ok()}, {"first_case", report.first_case}, {"properties", props}};
    t << (report.ok() ? "all properties hold" : "property violations found") << '\n';
    o.text = t.str();
    return {std::move(o), report.ok()};
}

void emit(std::ostream& out, bool json_mode, const std::string& command, const Output& o) {
    if (!json_mode) {
        out << o.text;
        return;
    }
    json env = {{"command", command}, {"inputs", o.inputs}, {"result", o.result}};
    if (o.trace) env["trace"] = *o.trace;
    out << env.dump() << '\n';
}

void emit_error(std::ostream& out, std::ostream& err, bool json_mode, const std::string& command,
                const std::string& kind, const std::string& message) {
    err << message << '\n';
    if (json_mode) {
        json env = {{"command", command.empty() ? json(nullptr) : json(command)},
                    {"error", {{"kind", kind}, {"message", message}}}};
        out << env.dump() << '\n';
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool json_default) {
    CLI::App app{"Euclid's algorithm and its descendants, in exact arithmetic", "euclid-kit"};
    app.require_subcommand(1);
    app.fallthrough();
    bool json_flag = false;
    app.add_flag("--json", json_flag, "Emit one JSON object");

    Args a;
    std::map<std::string, std::function<Output(const Args&)>> handlers;

    auto two = [&](const char* name, const char* help, const char* n1, const char* n2, auto handler) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option(n1, a.x)->required();
        sub->add_option(n2, a.y)->required();
        handlers[name] = handler;
        return sub;
    };
    auto three = [&](const char* name, const char* help, const char* n1, const char* n2, const char* n3,
                     auto handler) {
        auto* sub = two(name, help, n1, n2, handler);
        sub->add_option(n3, a.z)->required();
        return sub;
    };

    auto* gcd = two("gcd", "Greatest common divisor", "x", "y", cmd_gcd);
    gcd->add_flag("--trace", a.trace, "Show each subtraction stage");
    gcd->add_option("--method", a.method, "subtract | divide | generic")
        ->check(CLI::IsMember({"subtract", "divide", "generic"}));
    auto* bez = two("bezout", "Certificate a·m + b·n = gcd(a, b)", "a", "b", cmd_bezout);
    bez->add_flag("--canonical", a.canonical, "Choose 0 <= m < |b|/g");
    two("euclid-form", "Non-negative m, n with |m·x − n·y| = gcd(x, y)", "x", "y", cmd_euclid_form);
    two("inverse", "m in [1, b] with a·m ≡ 1 (mod b)", "a", "b", cmd_inverse)
        ->add_option("--method", a.method, "scan | euclid")
        ->check(CLI::IsMember({"scan", "euclid"}));
    three("solve", "All integer solutions of a·x + b·y = c", "a", "b", "c", cmd_solve);
    three("box", "Solutions of a·x + b·y = c with |x| <= bound, by enumeration", "a", "b", "c", cmd_box)
        ->add_option("--bound", a.bound, "Largest |x| to test");
    three("ideal", "Compare {a·s + b·t} with the multiples of gcd(a, b) on [−N, N]", "a", "b", "N", cmd_ideal);

    auto* cf = app.add_subcommand("cf", "Continued fraction of p/q");
    cf->add_option("value", a.x)->required();
    handlers["cf"] = cmd_cf;
    auto* value = app.add_subcommand("value", "Value of a continued fraction");
    value->add_option("quotients", a.list)->required();
    handlers["value"] = cmd_value;
    auto* conv = app.add_subcommand("convergents", "Convergents of a continued fraction (quotients or p/q)");
    conv->add_option("quotients", a.list)->required();
    handlers["convergents"] = cmd_convergents;
    two("lagrange", "Solve a·s − b·r = ±1 by truncating the expansion of a/b", "a", "b", cmd_lagrange);
    auto* approx = app.add_subcommand("approx", "Quotients shared by every real in [lo, hi]");
    approx->add_option("--lo", a.lo, "Lower bound, p/q or decimal")->required();
    approx->add_option("--hi", a.hi, "Upper bound, p/q or decimal")->required();
    approx->add_option("--max-terms", a.max_terms, "Longest prefix to report")->check(CLI::PositiveNumber);
    handlers["approx"] = cmd_approx;
    two("polygcd", "Monic gcd of two polynomials (coefficients ascending, comma-separated)", "a", "b", cmd_polygcd);
    two("polybezout", "u·a + v·b = gcd(a, b) for polynomials", "a", "b", cmd_polybezout);
    two("kthpower", "Integer k-th root of n, or none when n^(1/k) is irrational", "n", "k", cmd_kthpower);
    auto* verify = app.add_subcommand("verify", "Run the cross-algorithm property suite");
    verify->add_option("--seed", a.seed, "Pseudo-random seed");
    verify->add_option("--trials", a.trials, "Trials per property");

    std::string command;
    bool json_mode = json_default;
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        json_mode = json_mode || json_flag;
        command = app.get_subcommands().front()->get_name();
        if (command == "verify") {
            auto [o, ok] = cmd_verify(a);
            emit(out, json_mode, command, o);
            return ok ? kExitOk : kExitDomain;
        }
        emit(out, json_mode, command, handlers.at(command)(a));
        return kExitOk;
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        json_mode = json_mode || json_flag;
        emit_error(out, err, json_mode, command, "usage", std::string("usage: ") + e.what());
        return kExitUsage;
    } catch (const parse_error& e) {
        emit_error(out, err, json_mode, command, "usage", std::string("usage: ") + e.what());
        return kExitUsage;
    } catch (const domain_error& e) {
        emit_error(out, err, json_mode, command, "domain", e.what());
        return kExitDomain;
    }
}

}  // namespace euclid::cli
