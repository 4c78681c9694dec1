#pragma once

#include <optional>
#include <vector>

#include "ratdyn/kernels.hpp"
#include "ratdyn/ratfunc.hpp"
#include "ratdyn/transform.hpp"

namespace ratdyn {

// x^{r-1} R(x^r); maps fixed points of F to fixed points.
template <class F>
RationalFunction<F> shift_B(long r, const RationalFunction<F>& R)
{
    if (r < 1 || r % 2 == 0) fail(ErrorKind::InvalidArgument, "shift_B needs an odd r >= 1");
    return R.substitute_power(r).shifted(r - 1);
}

template <class F>
bool is_fixed(const RationalFunction<F>& R)
{
    return apply_F(R) == R;
}

// Valuation >= -1 and square-free denominator.
template <class F>
bool simple_pole_check(const RationalFunction<F>& R)
{
    if (R.is_zero()) return true;
    if (R.v() < -1) return false;
    return gcd(R.den(), R.den().derivative()).degree() <= 0;
}

// With x R(x) = sum g(n) x^n: g(2n) = g(n) for 1 <= n <= N, and at most a
// simple pole at 0. In terms of R's own coefficients this is f(2n-1) = f(n-1).
template <class F>
bool phi_representation_check(const RationalFunction<F>& R, long N)
{
    if (N < 0) fail(ErrorKind::InvalidArgument, "phi_representation_check needs N >= 0");
    if (R.is_zero()) return true;
    if (R.v() < -1) return false;
    const auto s = R.series(-1, 2 * N);
    for (long n = 1; n <= N; ++n)
        if (!(s.at(2 * n - 1) == s.at(n - 1))) return false;
    return true;
}

// sum_{m in C_{r,n}} lambda^m / (1 - lambda^m x) over Q(zeta_r).
CycRatFunc coset_function(long r, long n);

struct FixedPointBasisElement {
    enum class Kind { PoleAtZero, CosetFunction };
    Kind kind = Kind::PoleAtZero;
    long r = 0;   // coset functions only
    long n = 0;
    CycRatFunc value;
};

// 1/x, then f_{r,n} for odd r <= r_max and each least coset representative n.
std::vector<FixedPointBasisElement> enumerate_basis(long r_max,
                                                    kernels::Execution exec = kernels::default_execution());

struct CosetTerm {
    long r = 1;
    long n = 0;
    CyclotomicNumber alpha;
};

// R = c0/x + sum alpha_i f_{r_i,n_i}, all scalars in Q(zeta_order).
struct FixedDecomposition {
    long order = 1;   // least M with D | x^M - 1
    FieldPtr field;
    CyclotomicNumber c0;
    std::vector<CosetTerm> terms;   // sorted by (r, n)
};

FixedDecomposition decompose_fixed(const CycRatFunc& R, long order_bound);
FixedDecomposition decompose_fixed(const RatFunc& R, long order_bound);

CycRatFunc reconstruct(const FixedDecomposition& dec);

} // namespace ratdyn
