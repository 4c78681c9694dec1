#include <doctest.h>

#include <map>
#include <numeric>

#include "ratdyn/fixedpoints.hpp"
#include "ratdyn/intdyn.hpp"
#include "test_support.hpp"

using namespace ratdyn;
using namespace ratdyn::testing;

namespace {

ErrorKind kind_of(auto&& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::Internal;
}

CycRatFunc lift(const RatFunc& r, long order) { return lift_to_field(r, CyclotomicField::make(static_cast<int>(order))); }

} // namespace

TEST_CASE("shift_B examples")
{
    CHECK(shift_B(7, monomial_over(0, 1)) == monomial_over(6, 7));
    RandomRatFunc gen(3);
    auto r = gen();
    CHECK(shift_B(1, r) == r);
    CHECK(shift_B(3, xpow(-1)) == xpow(-1));
    CHECK(kind_of([] { shift_B(4, xpow(-1)); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("coset function examples")
{
    const RatFunc geo = rf({{0, 1}}, {{0, 1}, {1, -1}});
    for (long r = 1; r <= 15; r += 2) CHECK(coset_function(r, 0) == lift(geo, r));

    auto sum7 = coset_function(7, 0) + coset_function(7, 1) + coset_function(7, 3);
    CHECK(sum7 == lift(monomial_over(6, 7).scaled(Rational(-7)), 7));

    auto f31 = coset_function(3, 1);
    CHECK(f31 == lift(rf({{0, -1}, {1, -2}}, {{0, 1}, {1, 1}, {2, 1}}), 3));
    for (const auto& c : f31.num().coeffs()) CHECK(c.is_rational());

    // f_{7,1} alone has coefficients outside Q.
    bool all_rational = true;
    for (const auto& c : coset_function(7, 1).num().coeffs()) all_rational = all_rational && c.is_rational();
    CHECK_FALSE(all_rational);
}

TEST_CASE("coset functions are fixed")
{
    for (long r = 1; r <= 21; r += 2)
        for (long n : intdyn::coset_representatives(r)) REQUIRE(is_fixed(coset_function(r, n)));
}

TEST_CASE("coset functions over all cosets sum to r x^{r-1}/(1 - x^r)")
{
    for (long r = 1; r <= 15; r += 2) {
        auto field = CyclotomicField::make(static_cast<int>(r));
        CycRatFunc sum = CycRatFunc::zero(CyclotomicNumber::one(field));
        for (long n : intdyn::coset_representatives(r)) sum = sum + coset_function(r, n);
        REQUIRE(sum == lift(monomial_over(r - 1, r).scaled(Rational(-r)), r));
    }
}

TEST_CASE("is_fixed examples")
{
    CHECK(is_fixed(monomial_over(6, 7)));
    CHECK(is_fixed(xpow(-1)));
    CHECK_FALSE(is_fixed(rf({{0, 1}}, {{0, 1}, {2, -1}})));
}

TEST_CASE("phi representation and simple pole checks")
{
    const RatFunc geo = rf({{0, 1}}, {{0, 1}, {1, -1}});
    CHECK(phi_representation_check(monomial_over(6, 7), 50));
    CHECK(phi_representation_check(geo, 50));
    CHECK_FALSE(phi_representation_check(geo * geo, 50));
    CHECK_FALSE(phi_representation_check(xpow(-2), 5));

    CHECK(simple_pole_check(monomial_over(6, 7)));
    CHECK_FALSE(simple_pole_check(geo * geo));
    CHECK(simple_pole_check(xpow(-1)));
    CHECK_FALSE(simple_pole_check(xpow(-2)));
}

TEST_CASE("decompose_fixed examples")
{
    auto d7 = decompose_fixed(monomial_over(6, 7), 50);
    CHECK(d7.order == 7);
    CHECK(d7.c0.is_zero());
    REQUIRE(d7.terms.size() == 3);
    const std::vector<std::pair<long, long>> keys{{1, 0}, {7, 1}, {7, 3}};
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(std::pair(d7.terms[i].r, d7.terms[i].n) == keys[i]);
        CHECK(d7.terms[i].alpha == CyclotomicNumber::from_rational(d7.field, Rational(-1, 7)));
    }

    auto d1 = decompose_fixed(monomial_over(0, 1), 10);
    CHECK(d1.order == 1);
    REQUIRE(d1.terms.size() == 1);
    CHECK(d1.terms[0].r == 1);
    CHECK(d1.terms[0].alpha == CyclotomicNumber::from_rational(d1.field, Rational(-1)));

    auto dx = decompose_fixed(xpow(-1), 10);
    CHECK(dx.c0 == CyclotomicNumber::from_rational(dx.field, Rational(1)));
    CHECK(dx.terms.empty());

    auto d0 = decompose_fixed(RatFunc::zero(Rational(1)), 10);
    CHECK(d0.terms.empty());
    CHECK(d0.c0.is_zero());
}

TEST_CASE("decompose_fixed errors")
{
    const RatFunc geo = rf({{0, 1}}, {{0, 1}, {1, -1}});
    CHECK(kind_of([&] { decompose_fixed(geo * geo, 20); }) == ErrorKind::MultiplePoles);
    CHECK(kind_of([] { decompose_fixed(rf({{0, 1}}, {{0, 1}, {1, -2}}), 20); }) == ErrorKind::PolesNotRootsOfUnity);
    CHECK(kind_of([] { decompose_fixed(monomial_over(6, 7), 6); }) == ErrorKind::PolesNotRootsOfUnity);
    CHECK(kind_of([] { decompose_fixed(rf({{0, 1}}, {{0, 1}, {2, -1}}), 20); }) == ErrorKind::NotFixed);
    CHECK(kind_of([] { decompose_fixed(monomial_over(2, 7), 20); }) == ErrorKind::NotFixed);
}

TEST_CASE("decompose and reconstruct random combinations")
{
    std::mt19937_64 rng(777);
    std::uniform_int_distribution<long> pick_r(0, 7), pick_count(1, 4), pick_num(-6, 6), pick_den(1, 5);
    int done = 0;
    while (done < 25) {
        const long count = pick_count(rng);
        std::vector<std::pair<long, long>> chosen;
        long L = 1;
        for (long i = 0; i < count; ++i) {
            const long r = 2 * pick_r(rng) + 1;
            const auto reps = intdyn::coset_representatives(r);
            const long n = reps[std::uniform_int_distribution<std::size_t>(0, reps.size() - 1)(rng)];
            chosen.emplace_back(r, n);
            L = std::lcm(L, r);
        }
        if (L > 45) continue;
        auto field = CyclotomicField::make(static_cast<int>(L));
        const Rational c0(pick_num(rng), pick_den(rng));
        CycRatFunc combo = CycRatFunc::monomial(CyclotomicNumber::from_rational(field, Rational(1)), -1)
                               .scaled(CyclotomicNumber::from_rational(field, c0));
        if (c0.is_zero()) combo = CycRatFunc::zero(CyclotomicNumber::one(field));
        std::map<std::pair<long, long>, Rational> expected;
        for (auto [r, n] : chosen) {
            const Rational a(pick_num(rng), pick_den(rng));
            combo = combo + embed_into(coset_function(r, n), field).scaled(CyclotomicNumber::from_rational(field, a));
            const long g = std::gcd(n, r);
            expected[{r / g, n / g}] += a;
        }
        REQUIRE(is_fixed(combo));
        REQUIRE(simple_pole_check(combo));
        REQUIRE(phi_representation_check(combo, 40));

        auto dec = decompose_fixed(combo, L);
        REQUIRE(embed_into(reconstruct(dec), field) == combo);
        CHECK(dec.c0 == CyclotomicNumber::from_rational(dec.field, c0));
        std::size_t nonzero = 0;
        for (const auto& [key, a] : expected) {
            if (a.is_zero()) continue;
            ++nonzero;
            bool found = false;
            for (const auto& t : dec.terms)
                if (std::pair(t.r, t.n) == key) {
                    found = true;
                    CHECK(t.alpha == CyclotomicNumber::from_rational(dec.field, a));
                }
            CHECK(found);
        }
        CHECK(dec.terms.size() == nonzero);
        ++done;
    }
}

TEST_CASE("enumerate_basis")
{
    auto b1 = enumerate_basis(1);
    REQUIRE(b1.size() == 2);
    CHECK(b1[0].kind == FixedPointBasisElement::Kind::PoleAtZero);
    CHECK(b1[1].r == 1);
    CHECK(b1[1].n == 0);

    auto b7 = enumerate_basis(7);
    int hits = 0;
    for (const auto& e : b7) {
        CHECK(is_fixed(e.value));
        if (e.r == 7 && (e.n == 0 || e.n == 1 || e.n == 3)) ++hits;
        if (e.kind == FixedPointBasisElement::Kind::CosetFunction) {
            auto coset = intdyn::cyclotomic_coset(e.r, e.n);
            CHECK(coset.front() == e.n);
        }
    }
    CHECK(hits == 3);

    auto serial = enumerate_basis(15, kernels::Execution::Serial);
    auto par = enumerate_basis(15, kernels::Execution::Parallel);
    REQUIRE(serial.size() == par.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].r == par[i].r);
        CHECK(serial[i].n == par[i].n);
        CHECK(serial[i].value == par[i].value);
    }
}

TEST_CASE("shift_B preserves fixedness on basis elements")
{
    for (const auto& e : enumerate_basis(9)) {
        for (long r = 1; r <= 9; r += 2) {
            auto s = shift_B(r, e.value);
            REQUIRE(is_fixed(s));
            REQUIRE(simple_pole_check(s));
            REQUIRE(phi_representation_check(s, 30));
        }
    }
}
