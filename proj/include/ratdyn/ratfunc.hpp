#pragma once

#include <cstdlib>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ratdyn/cyclotomic.hpp"
#include "ratdyn/error.hpp"
#include "ratdyn/laurent.hpp"
#include "ratdyn/polynomial.hpp"
#include "ratdyn/rational.hpp"

namespace ratdyn {

// Exact Laurent coefficients of a rational function on [k_min, k_min + size).
template <class F>
struct SeriesWindow {
    long k_min = 0;
    std::vector<F> coeffs;

    long k_max() const { return k_min + static_cast<long>(coeffs.size()) - 1; }
    const F& at(long k) const { return coeffs[static_cast<std::size_t>(k - k_min)]; }
};

// Canonical x^v * N(x) / D(x): N(0) != 0 unless N = 0, D(0) = 1, gcd(N, D) = 1.
// The zero function is v = 0, N = 0, D = 1. Canonical fields make structural
// equality value equality.
template <class F>
class RationalFunction {
public:
    using Coeff = F;
    using PolyF = Poly<F>;
    using Laurent = LaurentPolynomial<F>;

    // Canonical form of numerator / denominator; throws ZeroDenominator.
    static RationalFunction normalize(const Laurent& numerator, const Laurent& denominator)
    {
        if (denominator.is_zero()) fail(ErrorKind::ZeroDenominator, "rational function with zero denominator");
        auto [vd, d] = denominator.split();
        if (numerator.is_zero()) return zero(d.lead());
        auto [vn, n] = numerator.split();
        return from_parts(vn - vd, std::move(n), std::move(d));
    }

    // x^v * n / d for arbitrary polynomials; brings the triple to canonical form.
    static RationalFunction from_parts(long v, PolyF n, PolyF d)
    {
        if (d.is_zero()) fail(ErrorKind::ZeroDenominator, "rational function with zero denominator");
        if (n.is_zero()) return zero(d.lead());
        const std::size_t vn = n.valuation(), vd = d.valuation();
        if (vn) n = n.unshifted(vn);
        if (vd) d = d.unshifted(vd);
        v += static_cast<long>(vn) - static_cast<long>(vd);
        if (d.degree() > 0 && n.degree() > 0) {
            PolyF g = gcd(n, d);
            if (g.degree() > 0) {
                n = exact_quotient(n, g);
                d = exact_quotient(d, g);
            }
        }
        if (!(d[0] == one_like(d[0]))) {
            F s = one_like(d[0]) / d[0];
            n = n.scaled(s);
            d = d.scaled(s);
        }
        RationalFunction out;
        out.v_ = v;
        out.num_ = std::move(n);
        out.den_ = std::move(d);
        return out;
    }

    static RationalFunction zero(const F& like)
    {
        RationalFunction out;
        out.den_ = PolyF::constant(one_like(like));
        return out;
    }

    static RationalFunction constant(const F& c)
    {
        if (c.is_zero()) return zero(c);
        return monomial(c, 0);
    }

    // c * x^e
    static RationalFunction monomial(const F& c, long e)
    {
        if (c.is_zero()) return zero(c);
        RationalFunction out;
        out.v_ = e;
        out.num_ = PolyF::constant(c);
        out.den_ = PolyF::constant(one_like(c));
        return out;
    }

    static RationalFunction from_poly(const PolyF& p, long shift = 0)
    {
        if (p.is_zero()) fail(ErrorKind::InvalidArgument, "from_poly needs a nonzero polynomial; use zero()");
        return from_parts(shift, p, PolyF::constant(one_like(p.lead())));
    }

    long v() const noexcept { return v_; }
    const PolyF& num() const noexcept { return num_; }
    const PolyF& den() const noexcept { return den_; }
    const F& one() const { return den_[0]; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_laurent_polynomial() const noexcept { return den_.degree() == 0; }

    LaurentPolynomial<F> numerator_laurent() const { return Laurent::from_poly(num_, v_); }
    LaurentPolynomial<F> denominator_laurent() const { return Laurent::from_poly(den_); }

    RationalFunction operator-() const
    {
        RationalFunction out = *this;
        out.num_ = -num_;
        return out;
    }

    RationalFunction scaled(const F& s) const
    {
        if (s.is_zero() || is_zero()) return zero(one());
        RationalFunction out = *this;
        out.num_ = num_.scaled(s);
        return out;
    }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b)
    {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        const long v = std::min(a.v_, b.v_);
        PolyF lhs = a.num_.shifted(static_cast<std::size_t>(a.v_ - v));
        PolyF rhs = b.num_.shifted(static_cast<std::size_t>(b.v_ - v));
        if (a.den_ == b.den_) return from_parts(v, lhs + rhs, a.den_);
        return from_parts(v, lhs * b.den_ + rhs * a.den_, a.den_ * b.den_);
    }

    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b)
    {
        if (a.is_zero()) return a;
        if (b.is_zero()) return b;
        return from_parts(a.v_ + b.v_, a.num_ * b.num_, a.den_ * b.den_);
    }

    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b)
    {
        if (b.is_zero()) fail(ErrorKind::ZeroDenominator, "division by the zero rational function");
        if (a.is_zero()) return a;
        return from_parts(a.v_ - b.v_, a.num_ * b.den_, a.den_ * b.num_);
    }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b)
    {
        return a.v_ == b.v_ && a.num_ == b.num_ && a.den_ == b.den_;
    }

    RationalFunction pow(long e) const
    {
        if (e < 0) return (RationalFunction::constant(one()) / *this).pow(-e);
        RationalFunction result = constant(one()), base = *this;
        while (e > 0) {
            if (e & 1) result = result * base;
            e >>= 1;
            if (e) base = base * base;
        }
        return result;
    }

    // Exact Laurent coefficients at 0 on [k_min, k_max], obtained by
    // inverting D as a power series (D(0) = 1) and shifting by v.
    SeriesWindow<F> series(long k_min, long k_max) const
    {
        if (k_min > k_max) fail(ErrorKind::InvalidArgument, "series window requires k_min <= k_max");
        SeriesWindow<F> w{k_min, {}};
        w.coeffs.reserve(static_cast<std::size_t>(k_max - k_min + 1));
        const F zero_c = zero_like(one());
        const long top = k_max - v_;
        std::vector<F> c;
        if (!is_zero() && top >= 0) {
            c.reserve(static_cast<std::size_t>(top) + 1);
            const std::size_t dd = den_.size() - 1;
            for (long i = 0; i <= top; ++i) {
                const auto iu = static_cast<std::size_t>(i);
                F acc = num_.coeff_or_zero(iu, zero_c);
                const std::size_t tmax = std::min(iu, dd);
                for (std::size_t t = 1; t <= tmax; ++t)
                    if (!den_[t].is_zero()) acc -= den_[t] * c[iu - t];
                c.push_back(std::move(acc));
            }
        }
        for (long k = k_min; k <= k_max; ++k) {
            const long i = k - v_;
            w.coeffs.push_back(i >= 0 && i < static_cast<long>(c.size()) ? c[static_cast<std::size_t>(i)] : zero_c);
        }
        return w;
    }

    // R(x^r) in canonical form.
    RationalFunction substitute_power(long r) const
    {
        if (r < 1) fail(ErrorKind::InvalidArgument, "substitute_power requires r >= 1");
        if (is_zero() || r == 1) return *this;
        const auto ru = static_cast<std::size_t>(r);
        // N(x^r), D(x^r) stay coprime with D(0) = 1 and N(0) != 0.
        RationalFunction out;
        out.v_ = v_ * r;
        out.num_ = num_.substitute_power(ru);
        out.den_ = den_.substitute_power(ru);
        return out;
    }

    // x^k * R(x)
    RationalFunction shifted(long k) const
    {
        if (is_zero()) return *this;
        RationalFunction out = *this;
        out.v_ += k;
        return out;
    }

private:
    RationalFunction() = default;

    long v_ = 0;
    PolyF num_;
    PolyF den_;
};

using RatFunc = RationalFunction<Rational>;
using CycRatFunc = RationalFunction<CyclotomicNumber>;

namespace detail {

// prod_{k=1}^{d-1} D(omega_d^k x) with rational coefficients: formed over
// Q(zeta_d) and coerced back. Galois invariance makes the coercion exact;
// a failure is an internal error.
inline Poly<Rational> multisection_cofactor(const Poly<Rational>& den, int d)
{
    if (d == 2) return den.negate_variable();   // omega_2 = -1 is rational
    auto field = CyclotomicField::make(d);
    std::vector<CyclotomicNumber> lifted;
    lifted.reserve(den.size());
    for (const auto& c : den.coeffs()) lifted.push_back(CyclotomicNumber::from_rational(field, c));
    const Poly<CyclotomicNumber> base(std::move(lifted));
    Poly<CyclotomicNumber> w = Poly<CyclotomicNumber>::constant(CyclotomicNumber::one(field));
    for (int k = 1; k < d; ++k) w = w * base.scale_variable(CyclotomicNumber::root_power(field, k));
    std::vector<Rational> out;
    out.reserve(w.size());
    for (const auto& c : w.coeffs()) {
        if (!c.is_rational())
            fail(ErrorKind::CoercionFailure, "multisection cofactor coefficient " + c.to_string() + " is not rational");
        out.push_back(c.rational_part());
    }
    return Poly<Rational>(std::move(out));
}

// Over Q(zeta_r) the d-th roots of unity must already live in the field.
inline Poly<CyclotomicNumber> multisection_cofactor(const Poly<CyclotomicNumber>& den, int d)
{
    const auto& field = den[0].field();
    const int r = field->order();
    CyclotomicNumber omega = CyclotomicNumber::one(field);
    if (d == 2) {
        omega = -omega;
    } else if (r % d == 0) {
        omega = CyclotomicNumber::root_power(field, r / d);
    } else {
        fail(ErrorKind::OrderMismatch, "multisection degree " + std::to_string(d) + " needs roots of unity outside Q(zeta_" +
                                           std::to_string(r) + ")");
    }
    Poly<CyclotomicNumber> w = Poly<CyclotomicNumber>::constant(CyclotomicNumber::one(field));
    CyclotomicNumber step = omega;
    for (int k = 1; k < d; ++k) {
        w = w * den.scale_variable(step);
        step *= omega;
    }
    return w;
}

// Keeps the coefficients of x^(d*i) and reindexes them to x^i; any other
// nonzero coefficient is an internal error.
template <class F>
Poly<F> compress_power(const Poly<F>& p, std::size_t d)
{
    if (p.is_zero()) return p;
    std::vector<F> out;
    out.reserve(p.size() / d + 1);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i % d == 0) {
            out.push_back(p[i]);
        } else if (!p[i].is_zero()) {
            fail(ErrorKind::CoercionFailure, "lifted denominator is not a polynomial in x^" + std::to_string(d));
        }
    }
    return Poly<F>(std::move(out));
}

inline long floor_div(long a, long b)
{
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline long floor_mod(long a, long b) { return a - b * floor_div(a, b); }

} // namespace detail

// R(x) = A(x^2) + x*B(x^2), via N(x)D(-x) / (D(x)D(-x)).
template <class F>
std::pair<RationalFunction<F>, RationalFunction<F>> even_odd_split(const RationalFunction<F>& R)
{
    using RF = RationalFunction<F>;
    if (R.is_zero()) return {R, R};
    const Poly<F> dm = R.den().negate_variable();
    const Poly<F> e = detail::compress_power(R.den() * dm, 2);
    const Poly<F> m = R.num() * dm;
    LaurentPolynomial<F> even, odd;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i].is_zero()) continue;
        const long ex = R.v() + static_cast<long>(i);
        if (detail::floor_mod(ex, 2) == 0) {
            even.add_term(ex / 2, m[i]);
        } else {
            odd.add_term((ex - 1) / 2, m[i]);
        }
    }
    const auto den = LaurentPolynomial<F>::from_poly(e);
    return {RF::normalize(even, den), RF::normalize(odd, den)};
}

// If R = sum a_k x^k then the result is sum_k a_{d*k + r} x^k. Computed in
// closed form: multiply through by prod_{k=1}^{d-1} D(omega^k x) so the
// denominator becomes a polynomial in x^d, keep the numerator terms in the
// residue class r, and substitute x^d -> x.
template <class F>
RationalFunction<F> multisection(const RationalFunction<F>& R, int d, int r)
{
    if (d < 1) fail(ErrorKind::InvalidArgument, "multisection degree must be >= 1");
    if (r < 0 || r >= d) fail(ErrorKind::InvalidArgument, "multisection residue must lie in [0, d)");
    if (d == 1 || R.is_zero()) return R;
    const Poly<F> w = detail::multisection_cofactor(R.den(), d);
    const Poly<F> e = detail::compress_power(R.den() * w, static_cast<std::size_t>(d));
    const Poly<F> m = R.num() * w;
    LaurentPolynomial<F> picked;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i].is_zero()) continue;
        const long ex = R.v() + static_cast<long>(i) - r;
        if (detail::floor_mod(ex, d) == 0) picked.add_term(ex / d, m[i]);
    }
    if (picked.is_zero()) return RationalFunction<F>::zero(R.one());
    return RationalFunction<F>::normalize(picked, LaurentPolynomial<F>::from_poly(e));
}

template <class F>
RationalFunction<F> substitute_power(const RationalFunction<F>& R, long r)
{
    return R.substitute_power(r);
}

// Applies a field homomorphism coefficientwise, e.g. an embedding Q -> Q(zeta_r).
template <class G, class F, class Fn>
RationalFunction<G> map_coefficients(const RationalFunction<F>& R, Fn&& fn, const G& like)
{
    if (R.is_zero()) return RationalFunction<G>::zero(like);
    auto lift = [&](const Poly<F>& p) {
        std::vector<G> c;
        c.reserve(p.size());
        for (const auto& a : p.coeffs()) c.push_back(fn(a));
        return Poly<G>(std::move(c));
    };
    return RationalFunction<G>::from_parts(R.v(), lift(R.num()), lift(R.den()));
}

inline CycRatFunc lift_to_field(const RatFunc& R, const FieldPtr& field)
{
    return map_coefficients(R, [&](const Rational& q) { return CyclotomicNumber::from_rational(field, q); },
                            CyclotomicNumber::one(field));
}

inline CycRatFunc embed_into(const CycRatFunc& R, const FieldPtr& field)
{
    if (R.one().order() == field->order()) return R;
    return map_coefficients(R, [&](const CyclotomicNumber& z) { return z.embed(field); }, CyclotomicNumber::one(field));
}

// Human-readable / re-parseable rendering, denominator made monic in
// descending powers: x^4/(x^7-1) rather than -x^4/(1-x^7).
std::string format_polynomial_terms(const LaurentPolynomial<Rational>& p);
std::string format(const RatFunc& R);
std::string format(const CycRatFunc& R);

} // namespace ratdyn
