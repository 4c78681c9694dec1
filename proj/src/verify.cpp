#include "ratdyn/verify.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "ratdyn/eulerian.hpp"
#include "ratdyn/fixedpoints.hpp"
#include "ratdyn/intdyn.hpp"
#include "ratdyn/transform.hpp"

namespace ratdyn::verify {

namespace {

// A failed check returns a description of the first counterexample.
using Check = std::function<std::optional<std::string>()>;

class Runner {
public:
    explicit Runner(std::string suite) : suite_(std::move(suite)) {}

    void add(std::string name, const Check& fn)
    {
        const auto t0 = std::chrono::steady_clock::now();
        CheckResult r{suite_, std::move(name), false, "", 0};
        try {
            auto failure = fn();
            r.passed = !failure;
            r.detail = failure.value_or("");
        } catch (const std::exception& e) {
            r.detail = std::string("exception: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        results_.push_back(std::move(r));
    }

    std::vector<CheckResult> take() { return std::move(results_); }

private:
    std::string suite_;
    std::vector<CheckResult> results_;
};

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

    RationalPoly poly(int max_degree, long bound)
    {
        for (;;) {
            const long d = integer(0, max_degree);
            std::vector<Rational> c;
            for (long i = 0; i <= d; ++i) c.emplace_back(integer(-bound, bound));
            RationalPoly p(std::move(c));
            if (!p.is_zero()) return p;
        }
    }

    RatFunc ratfunc(int max_degree = 6, long bound = 9)
    {
        RationalPoly d = poly(max_degree, bound);
        while (d[0].is_zero()) d = poly(max_degree, bound);
        return RatFunc::from_parts(integer(-2, 2), poly(max_degree, bound), d);
    }

private:
    std::mt19937_64 rng_;
};

RatFunc xpow(long e) { return RatFunc::monomial(Rational(1), e); }

// x^j / (x^m - 1)
RatFunc monomial_over(long j, long m)
{
    std::vector<Rational> c(static_cast<std::size_t>(m) + 1);
    c[0] = Rational(-1);
    c.back() = Rational(1);
    return xpow(j) / RatFunc::from_poly(RationalPoly(std::move(c)));
}

std::string show(const RatFunc& r) { return format(r); }

// Coefficient k of multisection(R, d, r) against coefficient d*k + r of R.
std::optional<std::string> residue_oracle(const RatFunc& R, const RatFunc& section, int d, int r, long K)
{
    const auto a = section.series(0, K);
    const auto b = R.series(0, d * K + r);
    for (long k = 0; k <= K; ++k)
        if (!(a.at(k) == b.at(d * k + r)))
            return "R = " + show(R) + ", d = " + std::to_string(d) + ", r = " + std::to_string(r) + ", k = " +
                   std::to_string(k);
    return std::nullopt;
}

std::vector<CheckResult> kernel_suite(kernels::Execution)
{
    Runner run("kernel");

    run.add("multisection series oracle (200 random R, coefficients 0..64)", [] () -> std::optional<std::string> {
        Gen g(1001);
        for (int i = 0; i < 200; ++i) {
            const RatFunc R = g.ratfunc();
            if (auto f = residue_oracle(R, apply_F(R), 2, 1, 64)) return f;
            if (auto f = residue_oracle(R, apply_E(R), 2, 0, 64)) return f;
            for (int k = 1; k <= 3; ++k)
                if (auto f = residue_oracle(R, apply_T(R, k), 3, k - 1, 64)) return f;
        }
        return std::nullopt;
    });

    run.add("even/odd and degree-3 reconstruction (100 random R)", [] () -> std::optional<std::string> {
        Gen g(1002);
        for (int i = 0; i < 100; ++i) {
            const RatFunc R = g.ratfunc();
            if (!(apply_E(R).substitute_power(2) + apply_F(R).substitute_power(2).shifted(1) == R))
                return "E/F identity fails for " + show(R);
            RatFunc sum = RatFunc::zero(Rational(1));
            for (int r = 0; r < 3; ++r) sum = sum + apply_T(R, r + 1).substitute_power(3).shifted(r);
            if (!(sum == R)) return "T identity fails for " + show(R);
        }
        return std::nullopt;
    });

    run.add("multisection oracle for d = 4, 5 and linearity", [] () -> std::optional<std::string> {
        Gen g(1003);
        for (int i = 0; i < 20; ++i) {
            const RatFunc R = g.ratfunc(4, 6), S = g.ratfunc(4, 6);
            const Rational a(g.integer(-4, 4)), b(g.integer(1, 4));
            for (int d : {4, 5}) {
                for (int r = 0; r < d; ++r) {
                    if (auto f = residue_oracle(R, multisection(R, d, r), d, r, 24)) return f;
                    if (!(multisection(R.scaled(a) + S.scaled(b), d, r) ==
                          multisection(R, d, r).scaled(a) + multisection(S, d, r).scaled(b)))
                        return "linearity fails for " + show(R) + ", " + show(S);
                }
            }
        }
        return std::nullopt;
    });

    run.add("F(x^j/(x^m-1)) = x^gamma_m(j)/(x^m-1), odd m <= 51, 0 <= j <= 2m", [] () -> std::optional<std::string> {
        for (long m = 1; m <= 51; m += 2)
            for (long j = 0; j <= 2 * m; ++j)
                if (!(apply_F(monomial_over(j, m)) == monomial_over(intdyn::gamma(m, j), m)))
                    return "m = " + std::to_string(m) + ", j = " + std::to_string(j);
        return std::nullopt;
    });

    run.add("iterate coefficient oracle f(2^p(k+1)-1), p <= 5", [] () -> std::optional<std::string> {
        Gen g(1004);
        for (int i = 0; i < 40; ++i) {
            const RatFunc R = g.ratfunc(5, 7);
            for (long p = 0; p <= 5; ++p)
                if (auto k = iterate_oracle_mismatch(R, iterate_F(R, p), p, -2, 12))
                    return show(R) + ", p = " + std::to_string(p) + ", k = " + std::to_string(*k);
        }
        return std::nullopt;
    });

    run.add("dyadic decomposition reconstructs S, n <= 4", [] () -> std::optional<std::string> {
        Gen g(1005);
        for (int i = 0; i < 20; ++i) {
            const RatFunc S = g.ratfunc(5, 6);
            for (int n = 1; n <= 4; ++n)
                if (!(dyadic_reconstruct(dyadic_decompose(S, n), Rational(1)) == S))
                    return show(S) + ", n = " + std::to_string(n);
        }
        return std::nullopt;
    });

    run.add("vanish depth of prefixed constructions is exact and certified, n <= 5", [] () -> std::optional<std::string> {
        Gen g(1006);
        for (int n = 1; n <= 5; ++n) {
            for (int t = 0; t < 50; ++t) {
                const std::size_t top = std::size_t{1} << n;
                const RatFunc den = RatFunc::from_poly(g.poly(3, 5));
                std::vector<RatFunc> parts;
                for (std::size_t j = 0; j + 1 < top; ++j) parts.push_back(RatFunc::from_poly(g.poly(3, 5)) / den);
                const RatFunc S = build_prefixed(n, parts, RatFunc::zero(Rational(1)));
                if (vanish_depth(S, 8) != n) return "depth mismatch at n = " + std::to_string(n);
                if (iterate_F(S, n - 1).is_zero()) return "kernel nesting: F^(n-1) vanished, n = " + std::to_string(n);
            }
        }
        return std::nullopt;
    });

    run.add("F preserves denominators over products of x^m - 1", [] () -> std::optional<std::string> {
        const std::vector<std::vector<long>> classes{{3}, {3, 5}, {5, 7}, {3, 5, 7}, {9, 3}, {1, 11}};
        for (const auto& ms : classes) {
            const RatFunc q = ClassSpec::make(ms).q_n();
            long deg = 0;
            for (long m : ms) deg += m;
            for (long j = -3; j <= 2 * deg; ++j) {
                const RatFunc out = apply_F(xpow(j) / q);
                if (!out.is_zero() && !divides(out.den(), q.num())) return "j = " + std::to_string(j);
            }
        }
        return std::nullopt;
    });

    run.add("orbits in a class enter the exponent window [-1, m* + 1] and stay", [] () -> std::optional<std::string> {
        Gen g(1007);
        const std::vector<std::vector<long>> classes{{3}, {3, 5}, {5, 7}, {3, 3, 5}, {3, 5, 7}};
        for (const auto& ms : classes) {
            const auto spec = ClassSpec::make(ms);
            const RatFunc& q = spec.q_n();
            for (int t = 0; t < 6; ++t) {
                RatFunc r = RatFunc::from_parts(g.integer(-8, 0), g.poly(10, 9).substitute_power(2), RationalPoly::constant(Rational(1))) / q;
                int entered = -1;
                for (int step = 0; step < 30 && !r.is_zero(); ++step) {
                    const RatFunc p = r * q;
                    if (!p.is_laurent_polynomial()) return "denominator escaped Q_n";
                    const bool inside = p.v() >= -1 && p.v() + p.num().degree() <= spec.m_star() + 1;
                    if (entered >= 0 && !inside) return "left the window";
                    if (inside && entered < 0) entered = step;
                    r = apply_F(r);
                }
                if (entered < 0 && !r.is_zero()) return "never entered the window";
            }
        }
        return std::nullopt;
    });

    run.add("serial and parallel convolution agree", [] () -> std::optional<std::string> {
        Gen g(1008);
        for (int i = 0; i < 6; ++i) {
            std::vector<Rational> a, b;
            for (int k = 0; k < 150 + 20 * i; ++k) a.emplace_back(g.integer(-99, 99), g.integer(1, 9));
            for (int k = 0; k < 120; ++k) b.emplace_back(g.integer(-99, 99), g.integer(1, 9));
            if (kernels::serial::convolve(a, b) != kernels::parallel::convolve(a, b)) return "size " + std::to_string(a.size());
        }
        return std::nullopt;
    });

    return run.take();
}

std::vector<CheckResult> congruence_suite(kernels::Execution)
{
    Runner run("congruence");
    run.add("2^p (gamma^(p)(j) + 1) = j + 1 mod m, odd m <= 99, j < m, p <= 16", [] () -> std::optional<std::string> {
        for (long m = 1; m <= 99; m += 2)
            for (long j = 0; j < m; ++j)
                for (long p = 0; p <= 16; ++p)
                    if (!intdyn::verify_congruence(m, j, p))
                        return "m = " + std::to_string(m) + ", j = " + std::to_string(j) + ", p = " + std::to_string(p);
        return std::nullopt;
    });
    run.add("delta inverts gamma on {0, ..., m-2}, odd m <= 201", [] () -> std::optional<std::string> {
        for (long m = 3; m <= 201; m += 2)
            for (long k = 0; k <= m - 2; ++k)
                if (intdyn::gamma(m, intdyn::delta(m, k)) != k || intdyn::delta(m, intdyn::gamma(m, k)) != k)
                    return "m = " + std::to_string(m) + ", k = " + std::to_string(k);
        return std::nullopt;
    });
    run.add("gamma fixes -1 and m-1", [] () -> std::optional<std::string> {
        for (long m = 1; m <= 201; m += 2)
            if (intdyn::gamma(m, -1) != -1 || intdyn::gamma(m, m - 1) != m - 1) return "m = " + std::to_string(m);
        return std::nullopt;
    });
    return run.take();
}

bool is_prime(long m)
{
    if (m < 2) return false;
    for (long p = 2; p * p <= m; ++p)
        if (m % p == 0) return false;
    return true;
}

std::vector<CheckResult> orbits_suite(kernels::Execution)
{
    Runner run("orbits");
    run.add("orbit partitions cover {0, ..., m-2} with gamma-cycles, odd m <= 99", [] () -> std::optional<std::string> {
        for (long m = 3; m <= 99; m += 2) {
            const auto part = intdyn::orbit_partition(m);
            std::vector<long> all;
            for (const auto& cyc : part.orbits) {
                for (std::size_t i = 0; i < cyc.size(); ++i)
                    if (intdyn::gamma(m, cyc[i]) != cyc[(i + 1) % cyc.size()]) return "successor fails, m = " + std::to_string(m);
                all.insert(all.end(), cyc.begin(), cyc.end());
            }
            std::sort(all.begin(), all.end());
            for (std::size_t i = 0; i < all.size(); ++i)
                if (all[i] != static_cast<long>(i)) return "cover fails, m = " + std::to_string(m);
            if (all.size() != static_cast<std::size_t>(m - 1)) return "cover size, m = " + std::to_string(m);
        }
        return std::nullopt;
    });
    run.add("prime m <= 101: every orbit has length ord2(m)", [] () -> std::optional<std::string> {
        for (long m = 3; m <= 101; m += 2) {
            if (!is_prime(m)) continue;
            for (const auto& cyc : intdyn::orbit_partition(m).orbits)
                if (static_cast<long>(cyc.size()) != intdyn::ord2(m)) return "m = " + std::to_string(m);
        }
        const auto p11 = intdyn::orbit_partition(11), p29 = intdyn::orbit_partition(29), p7 = intdyn::orbit_partition(7);
        if (p11.orbits.size() != 1 || p29.orbits.size() != 1) return "11 or 29 not a single orbit";
        if (p7.orbits.size() != 2 || p7.orbits[0].size() != 3 || p7.orbits[1].size() != 3) return "m = 7 shape";
        return std::nullopt;
    });
    run.add("rho(d, j) equals the gamma_d orbit length, odd d <= 99", [] () -> std::optional<std::string> {
        for (long d = 3; d <= 99; d += 2)
            for (const auto& cyc : intdyn::orbit_partition(d).orbits)
                for (long j : cyc)
                    if (intdyn::rho(d, j) != static_cast<long>(cyc.size()))
                        return "d = " + std::to_string(d) + ", j = " + std::to_string(j);
        return std::nullopt;
    });
    run.add("2-cyclotomic cosets partition Z/r, odd r <= 99", [] () -> std::optional<std::string> {
        for (long r = 1; r <= 99; r += 2) {
            std::set<std::vector<long>> distinct;
            for (long n = 0; n < r; ++n) distinct.insert(intdyn::cyclotomic_coset(r, n));
            std::vector<long> all;
            for (const auto& c : distinct) all.insert(all.end(), c.begin(), c.end());
            std::sort(all.begin(), all.end());
            for (std::size_t i = 0; i < all.size(); ++i)
                if (all[i] != static_cast<long>(i)) return "r = " + std::to_string(r);
            if (all.size() != static_cast<std::size_t>(r)) return "r = " + std::to_string(r);
        }
        return std::nullopt;
    });
    run.add("1/(x^(2^r-1) - 1) has preperiod 0 and period r, r <= 8", [] () -> std::optional<std::string> {
        for (long r = 1; r <= 8; ++r) {
            const long m = (1L << r) - 1;
            const auto rec = detect_cycle(monomial_over(0, m), 4 * r + 4);
            if (rec.preperiod != 0 || rec.period != r) return "r = " + std::to_string(r);
        }
        return std::nullopt;
    });
    run.add("backward classification terminates within 2(|j| + d)", [] () -> std::optional<std::string> {
        for (long d = 1; d <= 41; d += 2)
            for (long j = -300; j <= 300; ++j) intdyn::classify_backward(d, j);
        return std::nullopt;
    });
    return run.take();
}

// Ratio test on a deviation sequence indexed by p.
std::optional<std::string> ratio_test(const ConvergenceReport& rep, long stride)
{
    auto dev = [&](long p) { return rep.rows[static_cast<std::size_t>(p)].deviation; };
    for (long p = 6; p <= 12; ++p)
        if (dev(p + stride) > dev(p) * Rational(3, 4))
            return "j = " + std::to_string(rep.j) + ", ratio fails at p = " + std::to_string(p);
    if (!(dev(12) < dev(6) / Rational(8))) return "j = " + std::to_string(rep.j) + ": D_12 >= D_6/8";
    return std::nullopt;
}

std::vector<CheckResult> asymptotics_suite(kernels::Execution exec)
{
    Runner run("asymptotics");
    run.add("Eulerian polynomials match (1-x)^(m+1) sum k^m x^k, m <= 8", [] () -> std::optional<std::string> {
        const long K = 40;
        for (long m = 0; m <= 8; ++m) {
            RatFunc series = RatFunc::zero(Rational(1));
            std::vector<Rational> c;
            for (long k = 0; k <= K; ++k) {
                BigInt v;
                mpz_ui_pow_ui(v.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(m));
                c.emplace_back(v);
            }
            RationalPoly s(std::move(c));
            const RationalPoly one_minus_x(std::vector<Rational>{Rational(1), Rational(-1)});
            for (long t = 0; t <= m; ++t) s = s * one_minus_x;
            const RationalPoly a = eulerian(m);
            for (long k = 0; k <= K - m - 1; ++k)
                if (!(s.coeff_or_zero(static_cast<std::size_t>(k), Rational(1)) ==
                      a.coeff_or_zero(static_cast<std::size_t>(k), Rational(1))))
                    return "m = " + std::to_string(m) + ", k = " + std::to_string(k);
            Rational fact(1);
            for (long i = 2; i <= m; ++i) fact = fact * Rational(i);
            if (!(a.evaluate(Rational(1)) == fact)) return "A_m(1) != m!, m = " + std::to_string(m);
        }
        return std::nullopt;
    });

    run.add("gcd 1 classes converge at ratio <= 3/4 (coefficients 0..20)", [exec] () -> std::optional<std::string> {
        for (auto ms : std::vector<std::vector<long>>{{3, 5}, {3, 7}, {5, 7}, {3, 5, 7}}) {
            const auto spec = ClassSpec::make(ms);
            for (long j = 0; j <= spec.m_star(); ++j)
                if (auto f = ratio_test(convergence_report(spec, j, 0, 13, 20, exec), 1)) return *f;
        }
        return std::nullopt;
    });

    run.add("class (3,9): fixed and cycle branches converge at ratio <= 3/4", [exec] () -> std::optional<std::string> {
        const auto spec = ClassSpec::make({3, 9});
        for (long j = 0; j <= spec.m_star(); ++j) {
            const auto rep = convergence_report(spec, j, 0, 14, 20, exec);
            if (rep.branch == LimitBranch::Cycle) {
                for (long p = 6; p <= 12; ++p) {
                    const auto& a = rep.rows[static_cast<std::size_t>(p)];
                    const auto& b = rep.rows[static_cast<std::size_t>(p + rep.rho)];
                    if (a.q != b.q) return "residue bookkeeping";
                    if (b.deviation > a.deviation * Rational(3, 4)) return "cycle j = " + std::to_string(j);
                }
                if (!(rep.rows[12].deviation < rep.rows[6].deviation / Rational(8))) return "cycle j = " + std::to_string(j);
            } else if (auto f = ratio_test(rep, 1)) {
                return *f;
            }
        }
        return std::nullopt;
    });

    run.add("single modulus: limits reproduce the exact orbits", [exec] () -> std::optional<std::string> {
        for (long d = 3; d <= 21; d += 2) {
            const auto spec = ClassSpec::make({d});
            for (long j = 0; j <= d - 1; ++j) {
                const auto rep = convergence_report(spec, j, 0, 10, 16, exec);
                for (const auto& row : rep.rows)
                    if (!row.deviation.is_zero()) return "d = " + std::to_string(d) + ", j = " + std::to_string(j);
            }
        }
        return std::nullopt;
    });

    run.add("branch selector agrees with backward classification", [] () -> std::optional<std::string> {
        for (long d : {3L, 5L, 9L, 15L}) {
            const auto spec = ClassSpec::make({d, 3 * d});
            for (long j = -20; j <= 40; ++j) {
                const bool in_a = std::holds_alternative<intdyn::InA>(intdyn::classify_backward(d, j));
                bool fixed_ok = true, cycle_ok = true;
                try {
                    limit_fixed_branch(spec, j);
                } catch (const Error&) {
                    fixed_ok = false;
                }
                try {
                    limit_cycle_branch(spec, j, 0);
                } catch (const Error&) {
                    cycle_ok = false;
                }
                if (fixed_ok != in_a || cycle_ok == in_a) return "d = " + std::to_string(d) + ", j = " + std::to_string(j);
            }
        }
        return std::nullopt;
    });

    run.add("d = 1 limit equals the residue-class formula at gamma = 0", [] () -> std::optional<std::string> {
        for (auto ms : std::vector<std::vector<long>>{{1}, {3, 5}, {5, 7}, {3, 5, 7}, {3, 5, 7, 11}}) {
            const auto spec = ClassSpec::make(ms);
            if (!(limit_d1(spec) == residue_class_limit(spec, 0))) return "class of size " + std::to_string(ms.size());
        }
        return std::nullopt;
    });
    return run.take();
}

CycRatFunc lift_q(const RatFunc& r, long order) { return lift_to_field(r, CyclotomicField::make(static_cast<int>(order))); }

std::vector<CheckResult> fixedpoints_suite(kernels::Execution exec)
{
    Runner run("fixedpoints");
    run.add("F(f_{r,n}) = f_{r,n}, odd r <= 21", [] () -> std::optional<std::string> {
        for (long r = 1; r <= 21; r += 2)
            for (long n : intdyn::coset_representatives(r))
                if (!is_fixed(coset_function(r, n))) return "r = " + std::to_string(r) + ", n = " + std::to_string(n);
        return std::nullopt;
    });
    run.add("f_{7,0} + f_{7,1} + f_{7,3} = 7 x^6/(1 - x^7); all cosets of r sum to r x^(r-1)/(1 - x^r)", [] () -> std::optional<std::string> {
        for (long r = 1; r <= 15; r += 2) {
            auto field = CyclotomicField::make(static_cast<int>(r));
            CycRatFunc sum = CycRatFunc::zero(CyclotomicNumber::one(field));
            for (long n : intdyn::coset_representatives(r)) sum = sum + coset_function(r, n);
            if (!(sum == lift_q(monomial_over(r - 1, r).scaled(Rational(-r)), r))) return "r = " + std::to_string(r);
        }
        return std::nullopt;
    });
    run.add("decompose_fixed recovers random basis combinations (r <= 15)", [] () -> std::optional<std::string> {
        Gen g(5005);
        int done = 0;
        while (done < 30) {
            const long count = g.integer(1, 4);
            std::vector<std::pair<long, long>> chosen;
            long L = 1;
            for (long i = 0; i < count; ++i) {
                const long r = 2 * g.integer(0, 7) + 1;
                const auto reps = intdyn::coset_representatives(r);
                chosen.emplace_back(r, reps[static_cast<std::size_t>(g.integer(0, static_cast<long>(reps.size()) - 1))]);
                L = std::lcm(L, r);
            }
            if (L > 45) continue;
            const auto field = CyclotomicField::make(static_cast<int>(L));
            const Rational c0(g.integer(-5, 5), g.integer(1, 4));
            CycRatFunc combo = c0.is_zero() ? CycRatFunc::zero(CyclotomicNumber::one(field))
                                            : CycRatFunc::monomial(CyclotomicNumber::from_rational(field, c0), -1);
            for (auto [r, n] : chosen) {
                const Rational a(g.integer(-6, 6), g.integer(1, 5));
                combo = combo + embed_into(coset_function(r, n), field).scaled(CyclotomicNumber::from_rational(field, a));
            }
            const auto dec = decompose_fixed(combo, L);
            if (!(embed_into(reconstruct(dec), field) == combo)) return "reconstruction fails";
            if (!simple_pole_check(combo)) return "simple pole check fails";
            if (!phi_representation_check(combo, 100)) return "coefficient condition fails";
            ++done;
        }
        return std::nullopt;
    });
    run.add("basis elements and their B_r images are fixed with simple poles", [exec] () -> std::optional<std::string> {
        const auto basis = enumerate_basis(15, exec);
        for (const auto& e : basis) {
            if (!is_fixed(e.value) || !simple_pole_check(e.value) || !phi_representation_check(e.value, 100))
                return "basis element r = " + std::to_string(e.r) + ", n = " + std::to_string(e.n);
            if (e.r > 9) continue;
            for (long r = 1; r <= 9; r += 2) {
                const auto s = shift_B(r, e.value);
                if (!is_fixed(s) || !simple_pole_check(s) || !phi_representation_check(s, 100))
                    return "B_" + std::to_string(r) + " of r = " + std::to_string(e.r) + ", n = " + std::to_string(e.n);
            }
        }
        return std::nullopt;
    });
    run.add("rational fixed points x^(m-1)/(x^m-1) and 1/x decompose", [] () -> std::optional<std::string> {
        for (long m = 1; m <= 15; m += 2) {
            const auto dec = decompose_fixed(monomial_over(m - 1, m), m);
            if (dec.order != m) return "order for m = " + std::to_string(m);
            const Rational expect(-1, m);
            for (const auto& t : dec.terms)
                if (!(t.alpha == CyclotomicNumber::from_rational(dec.field, expect))) return "alpha for m = " + std::to_string(m);
        }
        const auto d = decompose_fixed(xpow(-1), 1);
        if (!d.terms.empty() || !(d.c0 == CyclotomicNumber::from_rational(d.field, Rational(1)))) return "1/x";
        return std::nullopt;
    });
    run.add("serial and parallel basis enumeration agree", [] () -> std::optional<std::string> {
        const auto a = enumerate_basis(15, kernels::Execution::Serial);
        const auto b = enumerate_basis(15, kernels::Execution::Parallel);
        if (a.size() != b.size()) return "sizes differ";
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i].r != b[i].r || a[i].n != b[i].n || !(a[i].value == b[i].value)) return "element " + std::to_string(i);
        return std::nullopt;
    });
    return run.take();
}

} // namespace

std::optional<Suite> suite_from_string(std::string_view name)
{
    static const std::map<std::string_view, Suite> names{{"kernel", Suite::Kernel},           {"congruence", Suite::Congruence},
                                                         {"orbits", Suite::Orbits},           {"asymptotics", Suite::Asymptotics},
                                                         {"fixedpoints", Suite::FixedPoints}, {"all", Suite::All}};
    auto it = names.find(name);
    if (it == names.end()) return std::nullopt;
    return it->second;
}

std::string to_string(Suite s)
{
    switch (s) {
    case Suite::Kernel: return "kernel";
    case Suite::Congruence: return "congruence";
    case Suite::Orbits: return "orbits";
    case Suite::Asymptotics: return "asymptotics";
    case Suite::FixedPoints: return "fixedpoints";
    case Suite::All: return "all";
    }
    return "?";
}

std::vector<CheckResult> run_suite(Suite suite, kernels::Execution exec)
{
    if (suite == Suite::All) {
        std::vector<CheckResult> all;
        for (Suite s : {Suite::Kernel, Suite::Congruence, Suite::Orbits, Suite::Asymptotics, Suite::FixedPoints}) {
            auto part = run_suite(s, exec);
            all.insert(all.end(), part.begin(), part.end());
        }
        return all;
    }
    switch (suite) {
    case Suite::Kernel: return kernel_suite(exec);
    case Suite::Congruence: return congruence_suite(exec);
    case Suite::Orbits: return orbits_suite(exec);
    case Suite::Asymptotics: return asymptotics_suite(exec);
    case Suite::FixedPoints: return fixedpoints_suite(exec);
    case Suite::All: break;
    }
    return {};
}

} // namespace ratdyn::verify
