#include "ratdyn/cyclotomic.hpp"

#include <map>
#include <ostream>
#include <sstream>

#include "ratdyn/error.hpp"

namespace ratdyn {

long euler_phi(long r)
{
    long result = r;
    for (long p = 2; p * p <= r; ++p) {
        if (r % p != 0) continue;
        while (r % p == 0) r /= p;
        result -= result / p;
    }
    if (r > 1) result -= result / r;
    return result;
}

RationalPoly cyclotomic_polynomial(int r)
{
    if (r < 1) fail(ErrorKind::InvalidArgument, "cyclotomic_polynomial requires r >= 1");
    std::map<int, RationalPoly> phi;
    for (int d = 1; d <= r; ++d) {
        if (r % d != 0) continue;
        // x^d - 1
        std::vector<Rational> c(static_cast<std::size_t>(d) + 1);
        c[0] = Rational(-1);
        c[static_cast<std::size_t>(d)] = Rational(1);
        RationalPoly p(std::move(c));
        for (const auto& [e, phi_e] : phi)
            if (d % e == 0) p = exact_quotient(p, phi_e);
        phi.emplace(d, std::move(p));
    }
    return phi.at(r);
}

std::shared_ptr<const CyclotomicField> CyclotomicField::make(int order)
{
    if (order < 1) fail(ErrorKind::InvalidArgument, "cyclotomic field order must be >= 1");
    return std::shared_ptr<const CyclotomicField>(new CyclotomicField(order));
}

CyclotomicField::CyclotomicField(int order)
    : order_(order), degree_(static_cast<int>(euler_phi(order))), modulus_(cyclotomic_polynomial(order))
{
    const auto n = static_cast<std::size_t>(degree_);
    powers_.reserve(static_cast<std::size_t>(order));
    // x^j for j < phi is a basis vector; beyond that, shift and reduce once.
    std::vector<Rational> cur(n);
    cur[0] = Rational(1);
    for (int j = 0; j < order; ++j) {
        powers_.push_back(cur);
        Rational top = cur[n - 1];
        for (std::size_t i = n - 1; i > 0; --i) cur[i] = cur[i - 1];
        cur[0] = Rational();
        if (!top.is_zero()) {
            // x^n = -(m_0 + ... + m_{n-1} x^{n-1}) for monic modulus
            for (std::size_t i = 0; i < n; ++i) cur[i] -= top * modulus_[i];
        }
    }
}

CyclotomicNumber::CyclotomicNumber(FieldPtr field, std::vector<Rational> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs))
{
    if (c_.size() != static_cast<std::size_t>(field_->degree()))
        fail(ErrorKind::InvalidArgument, "cyclotomic coefficient vector must have phi(r) entries");
}

CyclotomicNumber CyclotomicNumber::zero(const FieldPtr& field)
{
    return CyclotomicNumber(field, std::vector<Rational>(static_cast<std::size_t>(field->degree())));
}

CyclotomicNumber CyclotomicNumber::one(const FieldPtr& field) { return from_rational(field, Rational(1)); }

CyclotomicNumber CyclotomicNumber::from_rational(const FieldPtr& field, const Rational& q)
{
    std::vector<Rational> c(static_cast<std::size_t>(field->degree()));
    c[0] = q;
    return CyclotomicNumber(field, std::move(c));
}

CyclotomicNumber CyclotomicNumber::root_power(const FieldPtr& field, long k)
{
    long r = field->order();
    long j = ((k % r) + r) % r;
    return CyclotomicNumber(field, field->power(static_cast<int>(j)));
}

bool CyclotomicNumber::is_zero() const noexcept
{
    for (const auto& a : c_)
        if (!a.is_zero()) return false;
    return true;
}

bool CyclotomicNumber::is_rational() const noexcept
{
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

Rational CyclotomicNumber::rational_part() const
{
    if (!is_rational()) fail(ErrorKind::NotRational, "cyclotomic number " + to_string() + " is not rational");
    return c_[0];
}

void CyclotomicNumber::require_same_order(const CyclotomicNumber& o) const
{
    if (order() != o.order())
        fail(ErrorKind::OrderMismatch, "cyclotomic orders differ: " + std::to_string(order()) + " vs " +
                                           std::to_string(o.order()));
}

CyclotomicNumber CyclotomicNumber::operator-() const
{
    CyclotomicNumber out = *this;
    for (auto& a : out.c_) a = -a;
    return out;
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& o)
{
    require_same_order(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& o)
{
    require_same_order(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& o)
{
    require_same_order(o);
    const std::size_t n = c_.size();
    if (n == 1) {
        c_[0] *= o.c_[0];
        return *this;
    }
    std::vector<Rational> prod(2 * n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (o.c_[j].is_zero()) continue;
            prod[i + j] += c_[i] * o.c_[j];
        }
    }
    const int r = order();
    std::vector<Rational> out(prod.begin(), prod.begin() + static_cast<long>(n));
    for (std::size_t k = n; k < prod.size(); ++k) {
        if (prod[k].is_zero()) continue;
        const auto& red = field_->power(static_cast<int>(k % static_cast<std::size_t>(r)));
        for (std::size_t i = 0; i < n; ++i)
            if (!red[i].is_zero()) out[i] += prod[k] * red[i];
    }
    c_ = std::move(out);
    return *this;
}

CyclotomicNumber CyclotomicNumber::inverse() const
{
    if (is_zero()) fail(ErrorKind::DivisionByZero, "cyclotomic division by zero");
    if (is_rational()) return from_rational(field_, c_[0].inverse());
    auto [g, s, t] = extended_gcd(RationalPoly(c_), field_->modulus());
    if (g.degree() != 0) fail(ErrorKind::Internal, "cyclotomic modulus is not irreducible");
    std::vector<Rational> c = divmod(s, field_->modulus()).second.coeffs();
    c.resize(c_.size());
    return CyclotomicNumber(field_, std::move(c));
}

CyclotomicNumber& CyclotomicNumber::operator/=(const CyclotomicNumber& o)
{
    require_same_order(o);
    return *this *= o.inverse();
}

CyclotomicNumber CyclotomicNumber::galois_power(long a) const
{
    const long r = order();
    CyclotomicNumber out = zero(field_);
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k].is_zero()) continue;
        long e = (static_cast<long>(k) * (((a % r) + r) % r)) % r;
        const auto& img = field_->power(static_cast<int>(e));
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!img[i].is_zero()) out.c_[i] += c_[k] * img[i];
    }
    return out;
}

CyclotomicNumber CyclotomicNumber::embed(const FieldPtr& target) const
{
    if (target->order() % order() != 0)
        fail(ErrorKind::OrderMismatch, "cannot embed order " + std::to_string(order()) + " into order " +
                                           std::to_string(target->order()));
    const long step = target->order() / order();
    CyclotomicNumber out = zero(target);
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k].is_zero()) continue;
        const auto& img = target->power(static_cast<int>(static_cast<long>(k) * step % target->order()));
        for (std::size_t i = 0; i < img.size(); ++i)
            if (!img[i].is_zero()) out.c_[i] += c_[k] * img[i];
    }
    return out;
}

std::string CyclotomicNumber::to_string() const
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        const Rational& a = c_[k];
        if (a.is_zero()) continue;
        Rational mag = abs(a);
        if (first) {
            if (a.sign() < 0) os << '-';
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
        }
        first = false;
        if (k == 0) {
            os << mag;
            continue;
        }
        if (!mag.is_one()) os << mag << '*';
        os << 'z';
        if (k > 1) os << '^' << k;
    }
    if (first) os << '0';
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const CyclotomicNumber& z) { return os << z.to_string(); }

} // namespace ratdyn
