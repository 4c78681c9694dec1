#pragma once

#include <optional>
#include <variant>
#include <vector>

// Integer shadow of the odd-coefficient map on x^j/(x^m - 1): the map
// gamma_m, its inverse on {0, ..., m-2}, cycle structure, and 2-cyclotomic
// cosets. All functions are pure integer arithmetic.
namespace ratdyn::intdyn {

// m*floor(j/2) - (m-1)(j-1)/2, i.e. (m-1+j)/2 for even j and (j-1)/2 for odd j.
long gamma(long m, long j);

// gamma_m iterated p times.
long gamma_iterate(long m, long j, long p);

// Inverse of gamma_m on {0, ..., m-2}; throws OutOfRange outside it.
long delta(long m, long k);

struct GammaOrbitPartition {
    long m = 0;
    // Each cycle starts at its least element and follows gamma_m.
    std::vector<std::vector<long>> orbits;
};

GammaOrbitPartition orbit_partition(long m);

// Least t >= 1 with 2^t = 1 (mod m), m odd.
long ord2(long m);

// Ord(2; d / gcd(i+1, d)); equals the gamma_d orbit length of i on {0, ..., d-2}.
long rho(long d, long i);

// 2^p (gamma_m^(p)(j) + 1) = j + 1 (mod m) with the iterate in [0, m).
bool verify_congruence(long m, long j, long p);

struct InA {
    long fixed_point = 0;   // -1 or d-1
    long entry_steps = 0;
    friend bool operator==(const InA&, const InA&) = default;
};

struct CycleEntry {
    long j_star = 0;
    long entry_steps = 0;
    friend bool operator==(const CycleEntry&, const CycleEntry&) = default;
};

using BackwardClass = std::variant<InA, CycleEntry>;

inline long default_step_bound(long d, long j) { return 2 * ((j < 0 ? -j : j) + d); }

// Follows gamma_d from j until it hits a fixed point (-1 or d-1) or lands in
// {0, ..., d-1}. Throws BoundExceeded past step_bound.
BackwardClass classify_backward(long d, long j, std::optional<long> step_bound = std::nullopt);

// {2^s n mod r : s >= 0}, sorted ascending.
std::vector<long> cyclotomic_coset(long r, long n);

// Least element of each distinct coset mod r, ascending.
std::vector<long> coset_representatives(long r);

} // namespace ratdyn::intdyn
