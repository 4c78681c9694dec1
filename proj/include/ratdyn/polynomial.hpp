#pragma once

#include <cstddef>
#include <tuple>
#include <utility>
#include <vector>

#include "ratdyn/error.hpp"
#include "ratdyn/kernels.hpp"
#include "ratdyn/rational.hpp"

namespace ratdyn {

// Dense univariate polynomial over an exact field F, coefficients stored in
// ascending order with no trailing zeros (the zero polynomial is empty).
//
// F must provide field arithmetic, is_zero(), and the free functions
// zero_like(const F&) / one_like(const F&) that build constants in the same
// field as a sample element.
template <class F>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly constant(F value) { return Poly(std::vector<F>{std::move(value)}); }

    static Poly monomial(F value, std::size_t degree)
    {
        if (value.is_zero()) return {};
        std::vector<F> c(degree + 1, zero_like(value));
        c[degree] = std::move(value);
        return Poly(std::move(c));
    }

    bool is_zero() const noexcept { return c_.empty(); }
    // -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    std::size_t size() const noexcept { return c_.size(); }
    const std::vector<F>& coeffs() const noexcept { return c_; }
    const F& operator[](std::size_t i) const { return c_[i]; }
    const F& lead() const { return c_.back(); }

    // Coefficient of x^i, with `like` supplying the field for the zero case.
    F coeff_or_zero(std::size_t i, const F& like) const
    {
        return i < c_.size() ? c_[i] : zero_like(like);
    }

    // Smallest exponent with a nonzero coefficient; 0 for the zero polynomial.
    std::size_t valuation() const noexcept
    {
        std::size_t i = 0;
        while (i < c_.size() && c_[i].is_zero()) ++i;
        return i == c_.size() ? 0 : i;
    }

    Poly operator-() const
    {
        std::vector<F> c;
        c.reserve(c_.size());
        for (const auto& a : c_) c.push_back(-a);
        return Poly(std::move(c));
    }

    friend Poly operator+(const Poly& a, const Poly& b)
    {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        const Poly& big = a.size() >= b.size() ? a : b;
        const Poly& small = a.size() >= b.size() ? b : a;
        std::vector<F> c = big.c_;
        for (std::size_t i = 0; i < small.size(); ++i) c[i] += small.c_[i];
        return Poly(std::move(c));
    }

    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    friend Poly operator*(const Poly& a, const Poly& b)
    {
        if (a.is_zero() || b.is_zero()) return {};
        return Poly(kernels::convolve(a.c_, b.c_));
    }

    Poly scaled(const F& s) const
    {
        if (s.is_zero()) return {};
        std::vector<F> c;
        c.reserve(c_.size());
        for (const auto& a : c_) c.push_back(a * s);
        return Poly(std::move(c));
    }

    // Multiply by x^k.
    Poly shifted(std::size_t k) const
    {
        if (is_zero() || k == 0) return *this;
        std::vector<F> c(k, zero_like(c_[0]));
        c.insert(c.end(), c_.begin(), c_.end());
        return Poly(std::move(c));
    }

    // Divide by x^k; the low k coefficients must be zero.
    Poly unshifted(std::size_t k) const
    {
        if (k >= c_.size()) return {};
        return Poly(std::vector<F>(c_.begin() + static_cast<long>(k), c_.end()));
    }

    Poly monic() const
    {
        if (is_zero() || lead() == one_like(lead())) return *this;
        return scaled(one_like(lead()) / lead());
    }

    // p(x) -> p(x^k)
    Poly substitute_power(std::size_t k) const
    {
        if (is_zero() || k == 1) return *this;
        std::vector<F> c((c_.size() - 1) * k + 1, zero_like(c_[0]));
        for (std::size_t i = 0; i < c_.size(); ++i) c[i * k] = c_[i];
        return Poly(std::move(c));
    }

    // p(x) -> p(s*x)
    Poly scale_variable(const F& s) const
    {
        if (is_zero()) return {};
        std::vector<F> c;
        c.reserve(c_.size());
        F power = one_like(s);
        for (const auto& a : c_) {
            c.push_back(a * power);
            power *= s;
        }
        return Poly(std::move(c));
    }

    // p(x) -> p(-x)
    Poly negate_variable() const
    {
        std::vector<F> c = c_;
        for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
        return Poly(std::move(c));
    }

    Poly derivative() const
    {
        if (c_.size() <= 1) return {};
        std::vector<F> c;
        c.reserve(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i)
            c.push_back(c_[i] * from_rational(Rational(static_cast<long>(i)), c_[i]));
        return Poly(std::move(c));
    }

    F evaluate(const F& x) const
    {
        if (is_zero()) return zero_like(x);
        F acc = c_.back();
        for (std::size_t i = c_.size() - 1; i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

private:
    void trim()
    {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<F> c_;
};

// Euclidean division a = q*b + r with deg r < deg b.
template <class F>
std::pair<Poly<F>, Poly<F>> divmod(const Poly<F>& a, const Poly<F>& b)
{
    if (b.is_zero()) fail(ErrorKind::DivisionByZero, "polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly<F>{}, a};
    std::vector<F> rem = a.coeffs();
    const std::size_t nb = b.size();
    const std::size_t nq = rem.size() - nb + 1;
    std::vector<F> quo(nq, zero_like(b.lead()));
    const F inv_lead = one_like(b.lead()) / b.lead();
    for (std::size_t k = nq; k-- > 0;) {
        F q = rem[k + nb - 1] * inv_lead;
        if (q.is_zero()) continue;
        for (std::size_t i = 0; i < nb; ++i) rem[k + i] -= q * b[i];
        quo[k] = std::move(q);
    }
    rem.erase(rem.begin() + static_cast<long>(nb - 1), rem.end());
    return {Poly<F>(std::move(quo)), Poly<F>(std::move(rem))};
}

// Division that must be exact; a nonzero remainder is an internal error.
template <class F>
Poly<F> exact_quotient(const Poly<F>& a, const Poly<F>& b)
{
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) fail(ErrorKind::Internal, "polynomial division left a remainder");
    return q;
}

template <class F>
bool divides(const Poly<F>& b, const Poly<F>& a)
{
    return divmod(a, b).second.is_zero();
}

// Monic greatest common divisor; gcd(0, 0) = 0.
template <class F>
Poly<F> gcd(Poly<F> a, Poly<F> b)
{
    while (!b.is_zero()) {
        Poly<F> r = divmod(a, b).second.monic();
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

// Returns (g, s, t) with s*a + t*b = g = gcd(a, b), g monic.
template <class F>
std::tuple<Poly<F>, Poly<F>, Poly<F>> extended_gcd(const Poly<F>& a, const Poly<F>& b)
{
    Poly<F> r0 = a, r1 = b;
    Poly<F> s0, s1, t0, t1;
    const F& like = a.is_zero() ? b.lead() : a.lead();
    s0 = Poly<F>::constant(one_like(like));
    t1 = Poly<F>::constant(one_like(like));
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        Poly<F> s2 = s0 - q * s1;
        Poly<F> t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    F inv = one_like(r0.lead()) / r0.lead();
    return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

} // namespace ratdyn
