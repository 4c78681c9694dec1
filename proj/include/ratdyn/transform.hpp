#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ratdyn/error.hpp"
#include "ratdyn/ratfunc.hpp"

namespace ratdyn {

template <class F>
RationalFunction<F> apply_F(const RationalFunction<F>& r) { return multisection(r, 2, 1); }

template <class F>
RationalFunction<F> apply_E(const RationalFunction<F>& r) { return multisection(r, 2, 0); }

// T_k keeps exponents congruent to k-1 mod 3.
template <class F>
RationalFunction<F> apply_T(const RationalFunction<F>& r, int k)
{
    if (k < 1 || k > 3) fail(ErrorKind::InvalidArgument, "T_k needs k in {1, 2, 3}");
    return multisection(r, 3, k - 1);
}

// Coefficient k of F^(p)(R) against coefficient 2^p(k+1)-1 of R, for k in
// [k_min, k_max]. Returns the first mismatching k, if any.
template <class F>
std::optional<long> iterate_oracle_mismatch(const RationalFunction<F>& r, const RationalFunction<F>& iterate, long p,
                                            long k_min, long k_max)
{
    const long scale = 1L << p;
    const auto lhs = iterate.series(k_min, k_max);
    const auto rhs = r.series(scale * (k_min + 1) - 1, scale * (k_max + 1) - 1);
    for (long k = k_min; k <= k_max; ++k)
        if (!(lhs.at(k) == rhs.at(scale * (k + 1) - 1))) return k;
    return std::nullopt;
}

struct OracleWindow {
    long k_min = -1;
    long k_max = 8;
};

template <class F>
RationalFunction<F> iterate_F(const RationalFunction<F>& r, long p, std::optional<OracleWindow> check = std::nullopt)
{
    if (p < 0) fail(ErrorKind::InvalidArgument, "iterate_F needs p >= 0");
    RationalFunction<F> cur = r;
    for (long i = 0; i < p && !cur.is_zero(); ++i) cur = apply_F(cur);
    if (check) {
        if (p > 40) fail(ErrorKind::InvalidArgument, "oracle check supports p <= 40");
        if (auto k = iterate_oracle_mismatch(r, cur, p, check->k_min, check->k_max))
            fail(ErrorKind::Internal, "iterate_F disagrees with the series oracle at k = " + std::to_string(*k));
    }
    return cur;
}

// S_{1,n}, ..., S_{2^n,n} with S(x) = sum x^{j-1} S_{j,n}(x^{2^n}).
template <class F>
std::vector<RationalFunction<F>> dyadic_decompose(const RationalFunction<F>& s, int n)
{
    if (n < 1 || n > 20) fail(ErrorKind::InvalidArgument, "dyadic_decompose needs 1 <= n <= 20");
    std::vector<RationalFunction<F>> parts{s};
    for (int level = 0; level < n; ++level) {
        const std::size_t half = parts.size();
        std::vector<RationalFunction<F>> next(2 * half, RationalFunction<F>::zero(s.one()));
        for (std::size_t j = 0; j < half; ++j) {
            if (parts[j].is_zero()) continue;
            auto [even, odd] = even_odd_split(parts[j]);
            next[j] = std::move(even);
            next[j + half] = std::move(odd);
        }
        parts = std::move(next);
    }
    return parts;
}

// Inverse of dyadic_decompose.
template <class F>
RationalFunction<F> dyadic_reconstruct(const std::vector<RationalFunction<F>>& parts, const F& like)
{
    const std::size_t stride = parts.size();
    RationalFunction<F> out = RationalFunction<F>::zero(like);
    for (std::size_t j = 0; j < stride; ++j)
        if (!parts[j].is_zero())
            out = out + parts[j].substitute_power(static_cast<long>(stride)).shifted(static_cast<long>(j));
    return out;
}

// Least n <= n_max with F^(n)(S) = 0. A found depth n >= 1 is certified by
// S_{2^n,n} = 0 and S_{2^{n-1},n} != 0.
template <class F>
int vanish_depth(const RationalFunction<F>& s, int n_max)
{
    if (n_max < 1) fail(ErrorKind::InvalidArgument, "vanish_depth needs n_max >= 1");
    if (s.is_zero()) return 0;
    RationalFunction<F> cur = s;
    for (int n = 1; n <= n_max; ++n) {
        cur = apply_F(cur);
        if (!cur.is_zero()) continue;
        if (n <= 12) {
            const auto parts = dyadic_decompose(s, n);
            const std::size_t top = std::size_t{1} << n;
            if (!parts[top - 1].is_zero() || parts[top / 2 - 1].is_zero())
                fail(ErrorKind::Internal, "depth " + std::to_string(n) + " fails the dyadic criterion");
        }
        return n;
    }
    fail(ErrorKind::NotWithinBound, "no iterate vanished within " + std::to_string(n_max) + " steps");
}

// sum_{j=1}^{2^n-1} x^{j-1} parts_j(x^{2^n}) - fixed_point.
template <class F>
RationalFunction<F> build_prefixed(int n, const std::vector<RationalFunction<F>>& parts,
                                   const RationalFunction<F>& fixed_point)
{
    if (n < 1 || n > 20) fail(ErrorKind::InvalidArgument, "build_prefixed needs 1 <= n <= 20");
    const std::size_t top = std::size_t{1} << n;
    if (parts.size() != top - 1)
        fail(ErrorKind::InvalidParts, "expected " + std::to_string(top - 1) + " parts, got " +
                                          std::to_string(parts.size()));
    if (parts[top / 2 - 1].is_zero())
        fail(ErrorKind::InvalidParts, "part " + std::to_string(top / 2) + " must be nonzero");
    if (!(apply_F(fixed_point) == fixed_point)) fail(ErrorKind::NotFixed, "fixed_point is not fixed by F");
    std::vector<RationalFunction<F>> full = parts;
    full.push_back(RationalFunction<F>::zero(fixed_point.one()));
    return dyadic_reconstruct(full, fixed_point.one()) - fixed_point;
}

template <class F>
struct OrbitRecord {
    long preperiod = 0;
    long period = 0;
    // F^(0)(R), ..., F^(preperiod + period - 1)(R)
    std::vector<RationalFunction<F>> witness;
};

template <class F>
OrbitRecord<F> detect_cycle(const RationalFunction<F>& r, long max_steps)
{
    if (max_steps < 1) fail(ErrorKind::InvalidArgument, "detect_cycle needs max_steps >= 1");
    OrbitRecord<F> rec;
    rec.witness.push_back(r);
    for (long step = 1; step <= max_steps; ++step) {
        RationalFunction<F> next = apply_F(rec.witness.back());
        for (std::size_t i = 0; i < rec.witness.size(); ++i) {
            if (rec.witness[i] == next) {
                rec.preperiod = static_cast<long>(i);
                rec.period = step - static_cast<long>(i);
                return rec;
            }
        }
        rec.witness.push_back(std::move(next));
    }
    fail(ErrorKind::NotWithinBound, "no repetition within " + std::to_string(max_steps) + " steps");
}

} // namespace ratdyn
