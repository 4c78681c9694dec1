#include "ratdyn/fixedpoints.hpp"

#include <algorithm>
#include <numeric>

#include "ratdyn/error.hpp"
#include "ratdyn/intdyn.hpp"

namespace ratdyn {

namespace {

using CycPoly = Poly<CyclotomicNumber>;

// 1 - c x
CycPoly one_minus(const CyclotomicNumber& c)
{
    return CycPoly(std::vector<CyclotomicNumber>{one_like(c), -c});
}

CycPoly x_power_minus_one(const FieldPtr& field, long m)
{
    std::vector<CyclotomicNumber> c(static_cast<std::size_t>(m) + 1, CyclotomicNumber::zero(field));
    c[0] = -CyclotomicNumber::one(field);
    c.back() = CyclotomicNumber::one(field);
    return CycPoly(std::move(c));
}

} // namespace

CycRatFunc coset_function(long r, long n)
{
    const auto coset = intdyn::cyclotomic_coset(r, n);
    const auto field = CyclotomicField::make(static_cast<int>(r));
    std::vector<CyclotomicNumber> roots;
    for (long m : coset) roots.push_back(CyclotomicNumber::root_power(field, m));

    CycPoly den = CycPoly::constant(CyclotomicNumber::one(field));
    for (const auto& l : roots) den = den * one_minus(l);
    CycPoly num;
    for (std::size_t i = 0; i < roots.size(); ++i) {
        CycPoly term = CycPoly::constant(roots[i]);
        for (std::size_t k = 0; k < roots.size(); ++k)
            if (k != i) term = term * one_minus(roots[k]);
        num = num + term;
    }
    if (num.is_zero()) return CycRatFunc::zero(CyclotomicNumber::one(field));
    return CycRatFunc::from_parts(0, num, den);
}

std::vector<FixedPointBasisElement> enumerate_basis(long r_max, kernels::Execution exec)
{
    if (r_max < 1) fail(ErrorKind::InvalidArgument, "enumerate_basis needs r_max >= 1");
    using Elem = FixedPointBasisElement;
    const auto field1 = CyclotomicField::make(1);
    std::vector<Elem> out;
    out.push_back(Elem{Elem::Kind::PoleAtZero, 0, 0, CycRatFunc::monomial(CyclotomicNumber::one(field1), -1)});

    const std::size_t count = static_cast<std::size_t>((r_max + 1) / 2);
    auto per_r = kernels::map_indices(exec, count, [](std::size_t i) {
        const long r = 2 * static_cast<long>(i) + 1;
        std::vector<Elem> elems;
        for (long n : intdyn::coset_representatives(r)) {
            Elem e{Elem::Kind::CosetFunction, r, n, coset_function(r, n)};
            if (!is_fixed(e.value))
                fail(ErrorKind::Internal, "f_{" + std::to_string(r) + "," + std::to_string(n) + "} is not fixed");
            elems.push_back(std::move(e));
        }
        return elems;
    });
    for (auto& block : per_r)
        for (auto& e : block) out.push_back(std::move(e));
    return out;
}

FixedDecomposition decompose_fixed(const RatFunc& R, long order_bound)
{
    return decompose_fixed(lift_to_field(R, CyclotomicField::make(1)), order_bound);
}

FixedDecomposition decompose_fixed(const CycRatFunc& R, long order_bound)
{
    if (order_bound < 1) fail(ErrorKind::InvalidArgument, "order bound must be >= 1");
    const FieldPtr base = R.one().field();
    if (!simple_pole_check(R)) fail(ErrorKind::MultiplePoles, "denominator is not square-free or the pole at 0 has order > 1");

    long M = 0;
    for (long m = 1; m <= order_bound && M == 0; ++m)
        if (divides(R.den(), x_power_minus_one(base, m))) M = m;
    if (M == 0)
        fail(ErrorKind::PolesNotRootsOfUnity, "denominator divides no x^M - 1 with M <= " + std::to_string(order_bound));
    if (!is_fixed(R)) fail(ErrorKind::NotFixed, "function is not fixed by F");
    if (M % 2 == 0) fail(ErrorKind::Internal, "fixed point with poles at roots of unity of even order");

    const long N = std::lcm(M, static_cast<long>(base->order()));
    const FieldPtr field = CyclotomicField::make(static_cast<int>(N));
    FixedDecomposition dec{M, field, CyclotomicNumber::zero(field), {}};
    if (R.is_zero()) return dec;

    const CycRatFunc Rk = embed_into(R, field);
    const CycPoly& num = Rk.num();
    const CycPoly& den = Rk.den();
    const CycPoly dden = den.derivative();
    const long step = N / M;
    const long v = Rk.v();
    if (v == -1) dec.c0 = num[0];

    // Partial fractions: the term beta/(1 - lambda^k x) has beta = alpha lambda^k with
    // alpha = -a^v N(a) / D'(a), a = lambda^-k.
    std::vector<CyclotomicNumber> alpha(static_cast<std::size_t>(M), CyclotomicNumber::zero(field));
    for (long k = 0; k < M; ++k) {
        const auto a = CyclotomicNumber::root_power(field, -k * step);
        if (!den.evaluate(a).is_zero()) continue;
        alpha[static_cast<std::size_t>(k)] =
            -(CyclotomicNumber::root_power(field, -k * step * v) * num.evaluate(a) / dden.evaluate(a));
    }

    for (long k0 : intdyn::coset_representatives(M)) {
        const auto& a0 = alpha[static_cast<std::size_t>(k0)];
        for (long k : intdyn::cyclotomic_coset(M, k0))
            if (!(alpha[static_cast<std::size_t>(k)] == a0))
                fail(ErrorKind::Internal, "residues are not constant along the coset of " + std::to_string(k0));
        if (a0.is_zero()) continue;
        const long g = std::gcd(k0, M);
        dec.terms.push_back(CosetTerm{M / g, k0 / g, a0});
    }
    std::sort(dec.terms.begin(), dec.terms.end(),
              [](const CosetTerm& a, const CosetTerm& b) { return std::pair(a.r, a.n) < std::pair(b.r, b.n); });

    if (!(reconstruct(dec) == Rk)) fail(ErrorKind::Internal, "fixed-point decomposition does not reconstruct the input");
    return dec;
}

CycRatFunc reconstruct(const FixedDecomposition& dec)
{
    const auto one = CyclotomicNumber::one(dec.field);
    CycRatFunc out = CycRatFunc::zero(one);
    if (!dec.c0.is_zero()) out = CycRatFunc::monomial(dec.c0, -1);
    for (const auto& t : dec.terms) out = out + embed_into(coset_function(t.r, t.n), dec.field).scaled(t.alpha);
    return out;
}

} // namespace ratdyn
