#include "ratdyn/rational.hpp"

#include <cctype>
#include <ostream>

#include "ratdyn/error.hpp"

namespace ratdyn {

Rational::Rational(const BigInt& num, const BigInt& den)
{
    if (den == 0) fail(ErrorKind::DivisionByZero, "rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero()) fail(ErrorKind::DivisionByZero, "rational division by zero");
    q_ /= o.q_;
    return *this;
}

namespace {

BigInt parse_integer(std::string_view text, std::size_t offset)
{
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        negative = text[i] == '-';
        ++i;
    }
    if (i == text.size()) throw SyntaxError(ErrorKind::SyntaxError, offset + i, "digit");
    for (std::size_t k = i; k < text.size(); ++k) {
        if (!std::isdigit(static_cast<unsigned char>(text[k])))
            throw SyntaxError(ErrorKind::SyntaxError, offset + k, "digit");
    }
    BigInt value(std::string(text.substr(i)), 10);
    return negative ? BigInt(-value) : value;
}

} // namespace

Rational Rational::parse(std::string_view text)
{
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text, 0));
    BigInt num = parse_integer(text.substr(0, slash), 0);
    std::string_view den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
        throw SyntaxError(ErrorKind::SyntaxError, slash + 1, "unsigned denominator");
    return Rational(num, parse_integer(den_text, slash + 1));
}

std::string Rational::to_string() const
{
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational abs(const Rational& a) { return a.sign() < 0 ? -a : a; }

Rational pow(const Rational& base, long exponent)
{
    if (exponent < 0) return pow(base.inverse(), -exponent);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return Rational(num, den);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

} // namespace ratdyn
