#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ratdyn {

using BigInt = mpz_class;

// Exact rational scalar. Always stored in lowest terms with a positive
// denominator, so structural equality is value equality.
class Rational {
public:
    Rational() = default;
    Rational(long n) : q_(n) {}                       // NOLINT(google-explicit-constructor)
    Rational(int n) : q_(static_cast<long>(n)) {}     // NOLINT(google-explicit-constructor)
    Rational(const BigInt& n) : q_(n) {}              // NOLINT(google-explicit-constructor)
    Rational(const BigInt& num, const BigInt& den);
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    // Accepts "p", "-p", "p/q"; throws SyntaxError on malformed input and
    // DivisionByZero on q = 0.
    static Rational parse(std::string_view text);

    BigInt numerator() const { return q_.get_num(); }
    BigInt denominator() const { return q_.get_den(); }
    const mpq_class& raw() const noexcept { return q_; }

    bool is_zero() const noexcept { return sgn(q_) == 0; }
    bool is_one() const noexcept { return q_ == 1; }
    bool is_integer() const noexcept { return q_.get_den() == 1; }
    int sign() const noexcept { return sgn(q_); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    Rational inverse() const { return Rational(1) / *this; }

    // "p/q", or "p" when q = 1; sign carried on the numerator.
    std::string to_string() const;

private:
    mpq_class q_;
};

Rational abs(const Rational& a);
Rational pow(const Rational& base, long exponent);
std::ostream& operator<<(std::ostream& os, const Rational& r);

inline Rational zero_like(const Rational&) { return Rational(); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline Rational from_rational(const Rational& q, const Rational&) { return q; }

} // namespace ratdyn
