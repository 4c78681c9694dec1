#include "ratdyn/ratfunc.hpp"

namespace ratdyn {

namespace {

std::string monomial_text(const Rational& magnitude, long e)
{
    if (e == 0) return magnitude.to_string();
    std::string var = e == 1 ? "x" : "x^" + std::to_string(e);
    if (magnitude.is_one()) return var;
    return magnitude.to_string() + "*" + var;
}

bool is_single_term(const LaurentPolynomial<Rational>& p) { return p.terms().size() == 1; }

} // namespace

// Descending powers, e.g. "x^7 - 1/2*x + 3 - x^-1".
std::string format_polynomial_terms(const LaurentPolynomial<Rational>& p)
{
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        if (first) {
            if (c.sign() < 0) out += "-";
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        out += monomial_text(abs(c), e);
        first = false;
    }
    return out;
}

std::string format(const RatFunc& R)
{
    if (R.is_zero()) return "0";
    const Rational lead = R.den().lead();
    const Rational inv = lead.inverse();
    const auto num = LaurentPolynomial<Rational>::from_poly(R.num().scaled(inv), R.v());
    if (R.den().degree() == 0) return format_polynomial_terms(num);
    const auto den = LaurentPolynomial<Rational>::from_poly(R.den().scaled(inv));
    std::string top = format_polynomial_terms(num);
    if (!is_single_term(num)) top = "(" + top + ")";
    return top + "/(" + format_polynomial_terms(den) + ")";
}

namespace {

// Rational coefficients print as in format(RatFunc); others are parenthesized.
std::string cyc_poly_text(const Poly<CyclotomicNumber>& p, long shift)
{
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t i = p.size(); i-- > 0;) {
        if (p[i].is_zero()) continue;
        const long e = shift + static_cast<long>(i);
        if (p[i].is_rational()) {
            const Rational c = p[i].rational_part();
            if (first)
                out += c.sign() < 0 ? "-" : "";
            else
                out += c.sign() < 0 ? " - " : " + ";
            out += monomial_text(abs(c), e);
        } else {
            out += first ? "(" : " + (";
            out += p[i].to_string() + ")";
            if (e == 1) out += "*x";
            else if (e != 0) out += "*x^" + std::to_string(e);
        }
        first = false;
    }
    return out;
}

} // namespace

std::string format(const CycRatFunc& R)
{
    if (R.is_zero()) return "0";
    std::string top = cyc_poly_text(R.num(), R.v());
    if (R.den().degree() == 0) return top;
    return "(" + top + ")/(" + cyc_poly_text(R.den(), 0) + ")";
}

} // namespace ratdyn
