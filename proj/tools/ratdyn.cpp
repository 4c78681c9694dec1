// ratdyn: command line front end for the multisection dynamics toolkit.

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <sstream>

#include "ratdyn/expr.hpp"
#include "ratdyn/json_io.hpp"
#include "ratdyn/verify.hpp"

using namespace ratdyn;
using io::Json;

namespace {

enum Exit { Ok = 0, CheckFailed = 1, Usage = 2, InternalFailure = 3 };

struct Options {
    bool json = false;

    std::string op = "F";
    std::string expr;
    long iterations = 1;
    long max_steps = 64;
    int max_n = 8;
    int n = 1;
    long m = 0;
    std::optional<long> j;
    bool orbits = false;
    bool verify_congruence = false;
    long p_max = 16;
    std::vector<long> moduli;
    std::optional<long> q;
    long window = 20;
    long r_max = 15;
    long order_bound = 64;
    std::string suite = "all";
};

// Each command fills `result` and returns its exit status; `text` is the
// human-readable rendering.
struct Output {
    Json result;
    std::string text;
    int status = Ok;
};

std::string join(const std::vector<long>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

Output cmd_apply(const Options& o)
{
    const RatFunc in = expr::parse_ratfunc(o.expr);
    if (o.iterations < 0) fail(ErrorKind::InvalidArgument, "--iterations must be nonnegative");
    RatFunc out = in;
    for (long i = 0; i < o.iterations; ++i) {
        if (o.op == "F") out = apply_F(out);
        else if (o.op == "E") out = apply_E(out);
        else if (o.op == "T1") out = apply_T(out, 1);
        else if (o.op == "T2") out = apply_T(out, 2);
        else if (o.op == "T3") out = apply_T(out, 3);
        else fail(ErrorKind::InvalidArgument, "unknown operator " + o.op);
    }
    return {Json{{"command", "apply"}, {"op", o.op}, {"iterations", o.iterations}, {"input", io::to_json(in)},
                 {"result", io::to_json(out)}},
            format(out), Ok};
}

Output cmd_orbit(const Options& o)
{
    const RatFunc in = expr::parse_ratfunc(o.expr);
    const auto rec = detect_cycle(in, o.max_steps);
    Json j{{"command", "orbit"}, {"input", io::to_json(in)}};
    j.update(io::to_json(rec));
    std::ostringstream t;
    t << "preperiod " << rec.preperiod << ", period " << rec.period << "\n";
    for (std::size_t i = 0; i < rec.witness.size(); ++i) t << "  " << i << ": " << format(rec.witness[i]) << "\n";
    return {j, t.str(), Ok};
}

Output cmd_depth(const Options& o)
{
    const RatFunc in = expr::parse_ratfunc(o.expr);
    const int depth = vanish_depth(in, o.max_n);
    return {Json{{"command", "depth"}, {"input", io::to_json(in)}, {"depth", depth}}, "depth " + std::to_string(depth), Ok};
}

Output cmd_decompose(const Options& o)
{
    const RatFunc in = expr::parse_ratfunc(o.expr);
    const auto parts = dyadic_decompose(in, o.n);
    Json arr = Json::array();
    std::ostringstream t;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        arr.push_back(io::to_json(parts[i]));
        t << "S_" << i + 1 << "," << o.n << " = " << format(parts[i]) << "\n";
    }
    return {Json{{"command", "decompose"}, {"input", io::to_json(in)}, {"n", o.n}, {"parts", arr}}, t.str(), Ok};
}

Output cmd_gamma(const Options& o)
{
    if (o.m < 1 || o.m % 2 == 0) fail(ErrorKind::InvalidArgument, "--m must be odd and positive");
    const int modes = (o.j ? 1 : 0) + (o.orbits ? 1 : 0) + (o.verify_congruence ? 1 : 0);
    if (modes != 1) fail(ErrorKind::InvalidArgument, "give exactly one of --j, --orbits, --verify-congruence");
    if (o.j) {
        const long g = intdyn::gamma(o.m, *o.j);
        Json j{{"command", "gamma"}, {"m", o.m}, {"j", *o.j}, {"gamma", g}, {"delta", nullptr}};
        std::string t = "gamma_" + std::to_string(o.m) + "(" + std::to_string(*o.j) + ") = " + std::to_string(g);
        if (*o.j >= 0 && *o.j <= o.m - 2) {
            const long dl = intdyn::delta(o.m, *o.j);
            j["delta"] = dl;
            t += "\ndelta_" + std::to_string(o.m) + "(" + std::to_string(*o.j) + ") = " + std::to_string(dl);
        }
        return {j, t, Ok};
    }
    if (o.orbits) {
        const auto part = intdyn::orbit_partition(o.m);
        Json j{{"command", "gamma"}};
        j.update(io::to_json(part));
        std::ostringstream t;
        for (const auto& cyc : part.orbits) t << "(" << join(cyc) << ")\n";
        return {j, t.str(), Ok};
    }
    if (o.p_max < 0) fail(ErrorKind::InvalidArgument, "--p-max must be nonnegative");
    Json failures = Json::array();
    long checked = 0;
    for (long jj = 0; jj < o.m; ++jj)
        for (long p = 0; p <= o.p_max; ++p, ++checked)
            if (!intdyn::verify_congruence(o.m, jj, p)) failures.push_back(Json{{"j", jj}, {"p", p}});
    const bool passed = failures.empty();
    return {Json{{"command", "gamma"}, {"m", o.m}, {"p_max", o.p_max}, {"checked", checked}, {"passed", passed},
                 {"failures", failures}},
            std::string(passed ? "congruence holds" : "congruence FAILS") + " for " + std::to_string(checked) + " cases",
            passed ? Ok : CheckFailed};
}

Output cmd_euler(const Options& o)
{
    if (o.m < 0) fail(ErrorKind::InvalidArgument, "--m must be nonnegative");
    const RationalPoly a = eulerian(o.m);
    Json c = Json::array();
    for (std::size_t i = 0; i < a.size(); ++i) c.push_back(a[i].to_string());
    const std::string text = format(RatFunc::from_poly(a));
    return {Json{{"command", "euler"}, {"m", o.m}, {"coefficients", c}, {"text", text}}, text, Ok};
}

Output cmd_limit(const Options& o)
{
    const auto spec = ClassSpec::make(o.moduli);
    Json j{{"command", "limit"}, {"moduli", o.moduli}, {"n", spec.n()}, {"L", spec.L().to_string()}, {"d", spec.d()},
           {"j", nullptr}, {"branch", nullptr}, {"q", nullptr}};
    RatFunc lim = RatFunc::zero(Rational(1));
    if (!o.j) {
        if (o.q) fail(ErrorKind::InvalidArgument, "--q needs --j");
        lim = limit_d1(spec);
        j["branch"] = "d1";
    } else {
        j["j"] = *o.j;
        const auto cls = intdyn::classify_backward(spec.d(), *o.j);
        if (const auto* in_a = std::get_if<intdyn::InA>(&cls)) {
            if (o.q) fail(ErrorKind::InvalidArgument, "--q applies to the cycle branch only");
            if (spec.d() == 1) {
                lim = in_a->fixed_point == 0 ? limit_d1(spec) : residue_class_limit(spec, in_a->fixed_point);
                j["branch"] = "d1";
            } else {
                lim = limit_fixed_branch(spec, *o.j);
                j["branch"] = "fixed";
            }
        } else {
            const long q = o.q.value_or(0);
            lim = limit_cycle_branch(spec, *o.j, q);
            j["branch"] = "cycle";
            j["q"] = q;
        }
    }
    j["limit"] = io::to_json(lim);
    return {j, format(lim), Ok};
}

Output cmd_converge(const Options& o)
{
    if (!o.j) fail(ErrorKind::InvalidArgument, "--j is required");
    const auto spec = ClassSpec::make(o.moduli);
    const auto rep = convergence_report(spec, *o.j, 0, o.p_max, o.window);
    Json j{{"command", "converge"}};
    j.update(io::to_json(rep));
    std::ostringstream t;
    t << "branch " << to_string(rep.branch) << ", entry steps " << rep.entry_steps << ", rho " << rep.rho << "\n";
    for (const auto& row : rep.rows) {
        t << "p = " << row.p;
        if (row.q) t << "  q = " << *row.q;
        t << "  D = " << row.deviation.to_string() << "\n";
    }
    return {j, t.str(), Ok};
}

Output cmd_fixed_basis(const Options& o)
{
    const auto basis = enumerate_basis(o.r_max);
    Json arr = Json::array();
    std::ostringstream t;
    for (const auto& e : basis) {
        arr.push_back(io::to_json(e));
        if (e.kind == FixedPointBasisElement::Kind::PoleAtZero)
            t << "1/x\n";
        else
            t << "f_{" << e.r << "," << e.n << "} = " << format(e.value) << "\n";
    }
    return {arr, t.str(), Ok};
}

Output cmd_fixed_decompose(const Options& o)
{
    const RatFunc in = expr::parse_ratfunc(o.expr);
    const auto dec = decompose_fixed(in, o.order_bound);
    Json j{{"command", "fixed-decompose"}, {"input", io::to_json(in)}};
    j.update(io::to_json(dec));
    std::ostringstream t;
    t << "order " << dec.order << "\nc0 = " << dec.c0.to_string() << "\n";
    for (const auto& term : dec.terms) t << term.alpha.to_string() << " * f_{" << term.r << "," << term.n << "}\n";
    return {j, t.str(), Ok};
}

Output cmd_verify(const Options& o)
{
    const auto suite = verify::suite_from_string(o.suite);
    if (!suite) fail(ErrorKind::InvalidArgument, "unknown suite " + o.suite);
    const auto t0 = std::chrono::steady_clock::now();
    const auto results = verify::run_suite(*suite);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    Json checks = Json::array();
    std::ostringstream t;
    bool all = true;
    for (const auto& r : results) {
        all = all && r.passed;
        checks.push_back(Json{{"suite", r.suite}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail},
                              {"seconds", r.seconds}});
        t << (r.passed ? "PASS " : "FAIL ") << "[" << r.suite << "] " << r.name;
        if (!r.passed) t << ": " << r.detail;
        t << "\n";
    }
    t << results.size() << " checks, " << (all ? "all passed" : "FAILURES") << " (" << secs << " s)";
    return {Json{{"command", "verify"}, {"suite", o.suite}, {"passed", all}, {"seconds", secs}, {"checks", checks}}, t.str(),
            all ? Ok : CheckFailed};
}

int exit_code_for(ErrorKind kind)
{
    if (is_internal(kind)) return InternalFailure;
    if (kind == ErrorKind::NotWithinBound) return CheckFailed;
    return Usage;
}

void report_error(const std::string& kind, const std::string& message, const SyntaxError* syn = nullptr)
{
    Json e{{"error", kind}, {"message", message}};
    if (syn) {
        e["position"] = syn->position();
        e["expected"] = syn->expected();
    }
    std::cerr << e.dump() << "\n";
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact multisection dynamics of rational functions"};
    app.require_subcommand(1);
    Options o;
    app.add_flag("--json", o.json, "Emit JSON on stdout")->configurable(false);

    std::map<CLI::App*, Output (*)(const Options&)> handlers;
    auto sub = [&](const char* name, const char* help, Output (*fn)(const Options&)) {
        CLI::App* s = app.add_subcommand(name, help);
        s->fallthrough();
        handlers[s] = fn;
        return s;
    };

    auto* apply = sub("apply", "Apply F, E, T1, T2 or T3", cmd_apply);
    apply->add_option("--op", o.op)->check(CLI::IsMember({"F", "E", "T1", "T2", "T3"}))->required();
    apply->add_option("--expr", o.expr)->required();
    apply->add_option("--iterations", o.iterations);

    auto* orbit = sub("orbit", "Preperiod and period of the F-orbit", cmd_orbit);
    orbit->add_option("--expr", o.expr)->required();
    orbit->add_option("--max-steps", o.max_steps);

    auto* depth = sub("depth", "Least n with F^n(S) = 0", cmd_depth);
    depth->add_option("--expr", o.expr)->required();
    depth->add_option("--max-n", o.max_n);

    auto* decompose = sub("decompose", "Dyadic decomposition into 2^n parts", cmd_decompose);
    decompose->add_option("--expr", o.expr)->required();
    decompose->add_option("--n", o.n)->required();

    auto* gamma = sub("gamma", "The integer map gamma_m", cmd_gamma);
    gamma->add_option("--m", o.m)->required();
    gamma->add_option("--j", o.j);
    gamma->add_flag("--orbits", o.orbits);
    gamma->add_flag("--verify-congruence", o.verify_congruence);
    gamma->add_option("--p-max", o.p_max);

    auto* euler = sub("euler", "Eulerian polynomial A_m", cmd_euler);
    euler->add_option("--m", o.m)->required();

    auto* limit = sub("limit", "Limit function of a class", cmd_limit);
    limit->add_option("--moduli", o.moduli)->delimiter(',')->required();
    limit->add_option("--j", o.j);
    limit->add_option("--q", o.q);

    auto* converge = sub("converge", "Deviation table of normalized iterates", cmd_converge);
    converge->add_option("--moduli", o.moduli)->delimiter(',')->required();
    converge->add_option("--j", o.j)->required();
    converge->add_option("--p-max", o.p_max)->required();
    converge->add_option("--window", o.window)->required();

    auto* basis = sub("fixed-basis", "Fixed points 1/x and f_{r,n} for odd r <= R", cmd_fixed_basis);
    basis->add_option("--r-max", o.r_max)->required();

    auto* fdec = sub("fixed-decompose", "Write a fixed point in the coset basis", cmd_fixed_decompose);
    fdec->add_option("--expr", o.expr)->required();
    fdec->add_option("--order-bound", o.order_bound)->required();

    auto* ver = sub("verify", "Run verification suites", cmd_verify);
    ver->add_option("--suite", o.suite)
        ->check(CLI::IsMember({"kernel", "congruence", "orbits", "asymptotics", "fixedpoints", "all"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        report_error("UsageError", e.what());
        return Usage;
    }

    CLI::App* chosen = app.get_subcommands().front();
    try {
        Output out = handlers.at(chosen)(o);
        if (o.json)
            std::cout << out.result.dump(2) << "\n";
        else
            std::cout << out.text << (out.text.empty() || out.text.back() == '\n' ? "" : "\n");
        return out.status;
    } catch (const SyntaxError& e) {
        report_error(std::string(to_string(e.kind())), e.what(), &e);
        return Usage;
    } catch (const Error& e) {
        report_error(std::string(to_string(e.kind())), e.what());
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        report_error("Internal", e.what());
        return InternalFailure;
    }
}
