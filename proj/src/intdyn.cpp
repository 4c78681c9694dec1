#include "ratdyn/intdyn.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "ratdyn/error.hpp"

namespace ratdyn::intdyn {

namespace {

void require_odd_modulus(long m, const char* what)
{
    if (m < 1 || m % 2 == 0) fail(ErrorKind::InvalidArgument, std::string(what) + " requires an odd positive modulus");
}

long floor_div2(long j) { return j >= 0 ? j / 2 : -((-j + 1) / 2); }

long mod(long a, long m) { return ((a % m) + m) % m; }

long pow2_mod(long p, long m)
{
    long result = 1 % m, base = 2 % m;
    while (p > 0) {
        if (p & 1) result = result * base % m;
        base = base * base % m;
        p >>= 1;
    }
    return result;
}

} // namespace

long gamma(long m, long j)
{
    require_odd_modulus(m, "gamma");
    return m * floor_div2(j) - (m - 1) / 2 * (j - 1);
}

long gamma_iterate(long m, long j, long p)
{
    for (long i = 0; i < p; ++i) j = gamma(m, j);
    return j;
}

long delta(long m, long k)
{
    require_odd_modulus(m, "delta");
    if (k < 0 || k > m - 2) fail(ErrorKind::OutOfRange, "delta_m is defined on {0, ..., m-2}");
    return 2 * k <= m - 2 ? 2 * k + 1 : 2 * k + 1 - m;
}

GammaOrbitPartition orbit_partition(long m)
{
    require_odd_modulus(m, "orbit_partition");
    GammaOrbitPartition out{m, {}};
    std::vector<bool> seen(static_cast<std::size_t>(std::max(m - 1, 0L)), false);
    for (long start = 0; start <= m - 2; ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        std::vector<long> cycle;
        long j = start;
        do {
            seen[static_cast<std::size_t>(j)] = true;
            cycle.push_back(j);
            j = gamma(m, j);
        } while (j != start);
        out.orbits.push_back(std::move(cycle));
    }
    return out;
}

long ord2(long m)
{
    require_odd_modulus(m, "ord2");
    if (m == 1) return 1;
    long t = 1, v = 2 % m;
    while (v != 1) {
        v = v * 2 % m;
        ++t;
    }
    return t;
}

long rho(long d, long i)
{
    require_odd_modulus(d, "rho");
    return ord2(d / std::gcd(i + 1, d));
}

bool verify_congruence(long m, long j, long p)
{
    require_odd_modulus(m, "verify_congruence");
    if (j < 0 || j >= m) fail(ErrorKind::OutOfRange, "verify_congruence requires 0 <= j < m");
    if (p < 0) fail(ErrorKind::InvalidArgument, "verify_congruence requires p >= 0");
    const long x = gamma_iterate(m, j, p);
    if (x < 0 || x >= m) return false;
    return pow2_mod(p, m) * mod(x + 1, m) % m == mod(j + 1, m);
}

BackwardClass classify_backward(long d, long j, std::optional<long> step_bound)
{
    require_odd_modulus(d, "classify_backward");
    const long bound = step_bound.value_or(default_step_bound(d, j));
    if (bound < 1) fail(ErrorKind::InvalidArgument, "classify_backward step bound must be >= 1");
    long cur = j;
    for (long steps = 0; steps <= bound; ++steps) {
        if (cur == -1 || cur == d - 1) return InA{cur, steps};
        if (cur >= 0 && cur <= d - 1) return CycleEntry{cur, steps};
        cur = gamma(d, cur);
    }
    fail(ErrorKind::BoundExceeded, "gamma_" + std::to_string(d) + " orbit of " + std::to_string(j) +
                                       " did not settle within " + std::to_string(bound) + " steps");
}

std::vector<long> cyclotomic_coset(long r, long n)
{
    require_odd_modulus(r, "cyclotomic_coset");
    if (n < 0 || n >= r) fail(ErrorKind::OutOfRange, "cyclotomic_coset requires 0 <= n < r");
    std::vector<long> out;
    long cur = n;
    do {
        out.push_back(cur);
        cur = 2 * cur % r;
    } while (cur != n);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<long> coset_representatives(long r)
{
    require_odd_modulus(r, "coset_representatives");
    std::vector<bool> seen(static_cast<std::size_t>(r), false);
    std::vector<long> reps;
    for (long n = 0; n < r; ++n) {
        if (seen[static_cast<std::size_t>(n)]) continue;
        reps.push_back(n);
        for (long k : cyclotomic_coset(r, n)) seen[static_cast<std::size_t>(k)] = true;
    }
    return reps;
}

} // namespace ratdyn::intdyn
