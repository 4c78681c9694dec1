#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ratdyn/polynomial.hpp"
#include "ratdyn/rational.hpp"

namespace ratdyn {

using RationalPoly = Poly<Rational>;

// Phi_r, built by dividing x^r - 1 by Phi_d for every proper divisor d of r.
RationalPoly cyclotomic_polynomial(int r);

long euler_phi(long r);

// Q(zeta_r) = Q[x]/(Phi_r). Immutable once built; values share it by pointer.
class CyclotomicField {
public:
    static std::shared_ptr<const CyclotomicField> make(int order);

    int order() const noexcept { return order_; }
    int degree() const noexcept { return degree_; }
    const RationalPoly& modulus() const noexcept { return modulus_; }
    // Canonical coefficients of x^j mod Phi_r, for 0 <= j < r.
    const std::vector<Rational>& power(int j) const { return powers_[static_cast<std::size_t>(j)]; }

private:
    explicit CyclotomicField(int order);

    int order_;
    int degree_;
    RationalPoly modulus_;
    std::vector<std::vector<Rational>> powers_;
};

using FieldPtr = std::shared_ptr<const CyclotomicField>;

// Element of Q(zeta_r) stored as its residue mod Phi_r: exactly phi(r)
// rational coefficients on the basis 1, zeta, ..., zeta^(phi(r)-1).
class CyclotomicNumber {
public:
    CyclotomicNumber(FieldPtr field, std::vector<Rational> coeffs);

    static CyclotomicNumber zero(const FieldPtr& field);
    static CyclotomicNumber one(const FieldPtr& field);
    static CyclotomicNumber from_rational(const FieldPtr& field, const Rational& q);
    // zeta^k for any integer k (reduced mod r).
    static CyclotomicNumber root_power(const FieldPtr& field, long k);

    int order() const noexcept { return field_->order(); }
    const FieldPtr& field() const noexcept { return field_; }
    const std::vector<Rational>& coeffs() const noexcept { return c_; }

    bool is_zero() const noexcept;
    bool is_rational() const noexcept;
    // Throws NotRational unless every non-constant coefficient is zero.
    Rational rational_part() const;

    CyclotomicNumber operator-() const;
    CyclotomicNumber& operator+=(const CyclotomicNumber& o);
    CyclotomicNumber& operator-=(const CyclotomicNumber& o);
    CyclotomicNumber& operator*=(const CyclotomicNumber& o);
    CyclotomicNumber& operator/=(const CyclotomicNumber& o);

    friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
    friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
    friend CyclotomicNumber operator*(CyclotomicNumber a, const CyclotomicNumber& b) { return a *= b; }
    friend CyclotomicNumber operator/(CyclotomicNumber a, const CyclotomicNumber& b) { return a /= b; }

    // Same order and identical canonical coefficients.
    friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b)
    {
        return a.order() == b.order() && a.c_ == b.c_;
    }

    CyclotomicNumber inverse() const;

    // The automorphism zeta -> zeta^2 (r odd) or, generally, zeta -> zeta^a.
    CyclotomicNumber galois_square() const { return galois_power(2); }
    CyclotomicNumber galois_power(long a) const;

    // Image under Q(zeta_r) -> Q(zeta_R), zeta_r -> zeta_R^(R/r); r must divide R.
    CyclotomicNumber embed(const FieldPtr& target) const;

    // e.g. "1/2 + z - 3*z^2", with z the field generator.
    std::string to_string() const;

private:
    void require_same_order(const CyclotomicNumber& o) const;

    FieldPtr field_;
    std::vector<Rational> c_;
};

std::ostream& operator<<(std::ostream& os, const CyclotomicNumber& z);

inline CyclotomicNumber zero_like(const CyclotomicNumber& z) { return CyclotomicNumber::zero(z.field()); }
inline CyclotomicNumber one_like(const CyclotomicNumber& z) { return CyclotomicNumber::one(z.field()); }
inline CyclotomicNumber from_rational(const Rational& q, const CyclotomicNumber& like)
{
    return CyclotomicNumber::from_rational(like.field(), q);
}

} // namespace ratdyn
