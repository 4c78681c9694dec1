#pragma once

#include <map>
#include <utility>

#include "ratdyn/polynomial.hpp"

namespace ratdyn {

// Finite sum of c*x^e with integer exponents of either sign. Zero
// coefficients are never stored.
template <class F>
class LaurentPolynomial {
public:
    using Terms = std::map<long, F>;

    LaurentPolynomial() = default;
    explicit LaurentPolynomial(const Terms& terms)
    {
        for (const auto& [e, c] : terms) add_term(e, c);
    }

    static LaurentPolynomial monomial(F c, long e)
    {
        LaurentPolynomial p;
        p.add_term(e, std::move(c));
        return p;
    }

    // x^shift * p(x)
    static LaurentPolynomial from_poly(const Poly<F>& p, long shift = 0)
    {
        LaurentPolynomial out;
        for (std::size_t i = 0; i < p.size(); ++i)
            if (!p[i].is_zero()) out.terms_.emplace(shift + static_cast<long>(i), p[i]);
        return out;
    }

    bool is_zero() const noexcept { return terms_.empty(); }
    const Terms& terms() const noexcept { return terms_; }
    // Minimum / maximum exponent; only meaningful for nonzero values.
    long valuation() const { return terms_.begin()->first; }
    long degree() const { return terms_.rbegin()->first; }

    void add_term(long e, const F& c)
    {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (inserted) return;
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }

    // Writes the value as x^valuation * p(x) with p(0) != 0; nonzero only.
    std::pair<long, Poly<F>> split() const
    {
        const long lo = valuation();
        const F& like = terms_.begin()->second;
        std::vector<F> c(static_cast<std::size_t>(degree() - lo) + 1, zero_like(like));
        for (const auto& [e, a] : terms_) c[static_cast<std::size_t>(e - lo)] = a;
        return {lo, Poly<F>(std::move(c))};
    }

    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b)
    {
        for (const auto& [e, c] : b.terms_) a.add_term(e, c);
        return a;
    }

    friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b)
    {
        for (const auto& [e, c] : b.terms_) a.add_term(e, -c);
        return a;
    }

    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b)
    {
        LaurentPolynomial out;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
        return out;
    }

    friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) { return a.terms_ == b.terms_; }

private:
    Terms terms_;
};

} // namespace ratdyn
