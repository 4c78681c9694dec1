#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ratdyn/kernels.hpp"
#include "ratdyn/ratfunc.hpp"

namespace ratdyn {

// A_m(x), with A_0 = 1 and A_m(x) = sum_k a(m,k) x^k for m >= 1.
RationalPoly eulerian(long m);

// A denominator class prod_k (x^{m_k} - 1) with odd m_k.
class ClassSpec {
public:
    // Throws InvalidArgument unless every modulus is odd and positive.
    static ClassSpec make(std::vector<long> m_list);

    const std::vector<long>& m_list() const noexcept { return m_; }
    long n() const noexcept { return static_cast<long>(m_.size()); }
    const Rational& L() const noexcept { return l_; }
    long m_star() const noexcept { return m_star_; }
    long d() const noexcept { return d_; }
    // prod (x^{m_k} - 1), canonicalized
    const RatFunc& q_n() const noexcept { return q_; }

    friend bool operator==(const ClassSpec& a, const ClassSpec& b) { return a.m_ == b.m_; }

private:
    ClassSpec() = default;
    std::vector<long> m_;
    Rational l_;
    long m_star_ = 0;
    long d_ = 1;
    RatFunc q_ = RatFunc::zero(Rational(1));
};

// L x^g / ((n-1)! (x^d - 1)^n) * sum_l (-1)^l C(n-1,l) (g+1)^l d^{n-l} (x^d - 1)^l A_{n-1-l}(x^d)
RatFunc residue_class_limit(const ClassSpec& spec, long g);

// Limit of 2^{-(n-1)p} F^(p)(x^j/Q_n) when gcd(m_k) = 1.
RatFunc limit_d1(const ClassSpec& spec);

// d > 1 and j eventually reaches a fixed point of gamma_d.
RatFunc limit_fixed_branch(const ClassSpec& spec, long j);

// d > 1 and j enters a gamma_d cycle at j*; q indexes the phase along that cycle.
RatFunc limit_cycle_branch(const ClassSpec& spec, long j, long q);

enum class LimitBranch { D1, Fixed, Cycle };

std::string to_string(LimitBranch b);

struct ConvergenceRow {
    long p = 0;
    std::optional<long> q;   // cycle branch only
    Rational deviation;
};

struct ConvergenceReport {
    std::vector<long> m_list;
    long j = 0;
    long k_window = 0;
    LimitBranch branch = LimitBranch::D1;
    long entry_steps = 0;   // steps before the gamma_d orbit of j settles
    long rho = 1;           // number of distinct limits
    std::vector<ConvergenceRow> rows;
    // Pairs q < q' whose limit functions coincide.
    std::vector<std::pair<long, long>> equal_limits;
};

// Exact max |coefficient difference| over degrees 0..K between the
// normalized iterate and its limit, for p in [p_min, p_max].
ConvergenceReport convergence_report(const ClassSpec& spec, long j, long p_min, long p_max, long k_window,
                                     kernels::Execution exec = kernels::default_execution());

} // namespace ratdyn
