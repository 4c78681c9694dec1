#include "ratdyn/eulerian.hpp"

#include <numeric>

#include "ratdyn/error.hpp"
#include "ratdyn/intdyn.hpp"
#include "ratdyn/transform.hpp"

namespace ratdyn {

namespace {

RationalPoly x_power_minus_one(long d)
{
    std::vector<Rational> c(static_cast<std::size_t>(d) + 1);
    c[0] = Rational(-1);
    c.back() = Rational(1);
    return RationalPoly(std::move(c));
}

RationalPoly poly_pow(const RationalPoly& p, long e)
{
    RationalPoly out = RationalPoly::constant(Rational(1));
    for (long i = 0; i < e; ++i) out = out * p;
    return out;
}

BigInt factorial(long n)
{
    BigInt f = 1;
    for (long i = 2; i <= n; ++i) f *= i;
    return f;
}

BigInt binomial(long n, long k)
{
    BigInt b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return b;
}

void require_gcd_above_one(const ClassSpec& spec)
{
    if (spec.d() == 1) fail(ErrorKind::WrongGcd, "this branch needs gcd(m_k) > 1");
}

} // namespace

RationalPoly eulerian(long m)
{
    if (m < 0) fail(ErrorKind::InvalidArgument, "eulerian needs m >= 0");
    // row[k] = a(m, k); a(0, 0) = 1.
    std::vector<BigInt> row{1};
    for (long i = 1; i <= m; ++i) {
        std::vector<BigInt> next(static_cast<std::size_t>(i) + 1, 0);
        for (long k = 0; k <= i; ++k) {
            BigInt v = 0;
            if (k < i) v += k * row[static_cast<std::size_t>(k)];
            if (k >= 1) v += (i - k + 1) * row[static_cast<std::size_t>(k - 1)];
            next[static_cast<std::size_t>(k)] = v;
        }
        row = std::move(next);
    }
    std::vector<Rational> c;
    for (const auto& a : row) c.emplace_back(a);
    return RationalPoly(std::move(c));
}

ClassSpec ClassSpec::make(std::vector<long> m_list)
{
    if (m_list.empty()) fail(ErrorKind::InvalidArgument, "class needs at least one modulus");
    ClassSpec s;
    BigInt prod = 1;
    long sum = 0, g = 0;
    RationalPoly q = RationalPoly::constant(Rational(1));
    for (long m : m_list) {
        if (m < 1 || m % 2 == 0) fail(ErrorKind::InvalidArgument, "moduli must be odd and positive, got " + std::to_string(m));
        prod *= m;
        sum += m;
        g = std::gcd(g, m);
        q = q * x_power_minus_one(m);
    }
    s.m_ = std::move(m_list);
    s.l_ = Rational(BigInt(1), prod);
    s.m_star_ = sum - 2;
    s.d_ = g;
    s.q_ = RatFunc::from_poly(q);
    return s;
}

RatFunc residue_class_limit(const ClassSpec& spec, long g)
{
    const long n = spec.n(), d = spec.d();
    const RationalPoly xd1 = x_power_minus_one(d);
    RationalPoly sum;
    RationalPoly xd1_pow = RationalPoly::constant(Rational(1));
    for (long l = 0; l < n; ++l) {
        BigInt gl, dl;
        mpz_pow_ui(gl.get_mpz_t(), BigInt(g + 1).get_mpz_t(), static_cast<unsigned long>(l));
        mpz_pow_ui(dl.get_mpz_t(), BigInt(d).get_mpz_t(), static_cast<unsigned long>(n - l));
        BigInt coef = binomial(n - 1, l) * gl * dl;
        if (l % 2 == 1) coef = -coef;
        const RationalPoly a = eulerian(n - 1 - l).substitute_power(static_cast<std::size_t>(d));
        sum = sum + (xd1_pow * a).scaled(Rational(coef));
        xd1_pow = xd1_pow * xd1;
    }
    const Rational scale = spec.L() / Rational(factorial(n - 1));
    if (sum.is_zero()) return RatFunc::zero(Rational(1));
    return RatFunc::from_parts(g, sum.scaled(scale), poly_pow(xd1, n));
}

RatFunc limit_d1(const ClassSpec& spec)
{
    if (spec.d() != 1) fail(ErrorKind::WrongGcd, "limit_d1 needs gcd(m_k) = 1, got " + std::to_string(spec.d()));
    const long n = spec.n();
    // L/((n-1)! x) * (A_{n-1}(x)/(x-1)^n + [n = 1])
    const Rational scale = spec.L() / Rational(factorial(n - 1));
    RatFunc main = RatFunc::from_parts(-1, eulerian(n - 1).scaled(scale), poly_pow(x_power_minus_one(1), n));
    if (n == 1) main = main + RatFunc::monomial(scale, -1);
    return main;
}

RatFunc limit_fixed_branch(const ClassSpec& spec, long j)
{
    require_gcd_above_one(spec);
    const auto cls = intdyn::classify_backward(spec.d(), j);
    const auto* in_a = std::get_if<intdyn::InA>(&cls);
    if (!in_a) fail(ErrorKind::NotInBackwardOrbit, std::to_string(j) + " enters a gamma cycle, not a fixed point");
    return residue_class_limit(spec, in_a->fixed_point);
}

RatFunc limit_cycle_branch(const ClassSpec& spec, long j, long q)
{
    require_gcd_above_one(spec);
    const auto cls = intdyn::classify_backward(spec.d(), j);
    const auto* entry = std::get_if<intdyn::CycleEntry>(&cls);
    if (!entry) fail(ErrorKind::NotOnCycle, std::to_string(j) + " reaches a fixed point of gamma");
    const long period = intdyn::rho(spec.d(), entry->j_star);
    if (q < 0 || q >= period)
        fail(ErrorKind::ResidueOutOfRange, "q must lie in [0, " + std::to_string(period) + ")");
    return residue_class_limit(spec, intdyn::gamma_iterate(spec.d(), entry->j_star, q));
}

std::string to_string(LimitBranch b)
{
    switch (b) {
    case LimitBranch::D1: return "d1";
    case LimitBranch::Fixed: return "fixed";
    case LimitBranch::Cycle: return "cycle";
    }
    return "?";
}

ConvergenceReport convergence_report(const ClassSpec& spec, long j, long p_min, long p_max, long k_window,
                                     kernels::Execution exec)
{
    if (k_window < 1) fail(ErrorKind::InvalidArgument, "coefficient window K must be >= 1");
    if (p_min < 0 || p_max < p_min) fail(ErrorKind::InvalidArgument, "p range must satisfy 0 <= p_min <= p_max");

    ConvergenceReport rep;
    rep.m_list = spec.m_list();
    rep.j = j;
    rep.k_window = k_window;

    // One limit per phase of the cycle; a single limit otherwise.
    std::vector<RatFunc> limits;
    const auto cls = intdyn::classify_backward(spec.d(), j);
    if (const auto* in_a = std::get_if<intdyn::InA>(&cls)) {
        rep.branch = spec.d() == 1 ? LimitBranch::D1 : LimitBranch::Fixed;
        rep.entry_steps = in_a->entry_steps;
        if (spec.d() == 1 && in_a->fixed_point == 0) {
            limits.push_back(limit_d1(spec));
        } else {
            limits.push_back(residue_class_limit(spec, in_a->fixed_point));
        }
    } else {
        const auto& entry = std::get<intdyn::CycleEntry>(cls);
        rep.branch = LimitBranch::Cycle;
        rep.entry_steps = entry.entry_steps;
        rep.rho = intdyn::rho(spec.d(), entry.j_star);
        for (long q = 0; q < rep.rho; ++q) limits.push_back(limit_cycle_branch(spec, j, q));
        for (long a = 0; a < rep.rho; ++a)
            for (long b = a + 1; b < rep.rho; ++b)
                if (limits[static_cast<std::size_t>(a)] == limits[static_cast<std::size_t>(b)]) rep.equal_limits.emplace_back(a, b);
    }

    std::vector<SeriesWindow<Rational>> limit_series;
    for (const auto& lim : limits) limit_series.push_back(lim.series(0, k_window));

    // Iterates depend on each other, so they are produced serially; the
    // per-p comparison is independent work.
    std::vector<RatFunc> iterates;
    RatFunc cur = RatFunc::monomial(Rational(1), j) / spec.q_n();
    for (long p = 0; p <= p_max; ++p) {
        if (p >= p_min) iterates.push_back(cur);
        if (p < p_max) cur = apply_F(cur);
    }

    const long n = spec.n();
    rep.rows = kernels::map_indices(exec, iterates.size(), [&](std::size_t i) {
        const long p = p_min + static_cast<long>(i);
        ConvergenceRow row;
        row.p = p;
        std::size_t which = 0;
        if (rep.branch == LimitBranch::Cycle) {
            const long q = detail::floor_mod(p - rep.entry_steps, rep.rho);
            row.q = q;
            which = static_cast<std::size_t>(q);
        }
        BigInt scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 2, static_cast<unsigned long>((n - 1) * p));
        const Rational inv_scale(BigInt(1), scale);
        const auto s = iterates[i].series(0, k_window);
        Rational worst;
        for (long k = 0; k <= k_window; ++k) {
            Rational diff = abs(s.at(k) * inv_scale - limit_series[which].at(k));
            if (diff > worst) worst = diff;
        }
        row.deviation = worst;
        return row;
    });
    return rep;
}

} // namespace ratdyn
