#include "ratdyn/json_io.hpp"

#include "ratdyn/error.hpp"

namespace ratdyn::io {

namespace {

template <class F>
Json terms(const Poly<F>& p)
{
    Json out = Json::array();
    for (std::size_t i = 0; i < p.size(); ++i)
        if (!p[i].is_zero()) out.push_back(Json::array({static_cast<long>(i), to_json(p[i])}));
    return out;
}

template <class F>
Json ratfunc_json(const RationalFunction<F>& r)
{
    Json out;
    out["v"] = r.v();
    out["num"] = terms(r.num());
    out["den"] = terms(r.den());
    out["text"] = format(r);
    return out;
}

RationalPoly poly_from_terms(const Json& arr)
{
    if (!arr.is_array()) fail(ErrorKind::InvalidArgument, "term list must be an array");
    long top = -1;
    for (const auto& t : arr) top = std::max(top, t.at(0).get<long>());
    std::vector<Rational> c(static_cast<std::size_t>(top + 1));
    for (const auto& t : arr) {
        const long e = t.at(0).get<long>();
        if (e < 0) fail(ErrorKind::InvalidArgument, "exponents in num/den must be nonnegative");
        c[static_cast<std::size_t>(e)] += Rational::parse(t.at(1).get<std::string>());
    }
    return RationalPoly(std::move(c));
}

} // namespace

Json to_json(const Rational& q) { return q.to_string(); }

Json to_json(const CyclotomicNumber& z)
{
    Json c = Json::array();
    for (const auto& a : z.coeffs()) c.push_back(a.to_string());
    return Json{{"order", z.order()}, {"coeffs", c}};
}

Json to_json(const RatFunc& r) { return ratfunc_json(r); }
Json to_json(const CycRatFunc& r) { return ratfunc_json(r); }

RatFunc ratfunc_from_json(const Json& j)
{
    try {
        const RationalPoly num = poly_from_terms(j.at("num"));
        const RationalPoly den = poly_from_terms(j.at("den"));
        if (num.is_zero()) {
            if (den.is_zero()) fail(ErrorKind::ZeroDenominator, "rational function with zero denominator");
            return RatFunc::zero(Rational(1));
        }
        return RatFunc::from_parts(j.at("v").get<long>(), num, den);
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorKind::InvalidArgument, std::string("malformed rational function JSON: ") + e.what());
    }
}

Json to_json(const OrbitRecord<Rational>& rec)
{
    Json w = Json::array();
    for (const auto& r : rec.witness) w.push_back(to_json(r));
    return Json{{"preperiod", rec.preperiod}, {"period", rec.period}, {"witness", w}};
}

Json to_json(const intdyn::GammaOrbitPartition& part)
{
    return Json{{"m", part.m}, {"orbits", part.orbits}};
}

Json to_json(const ConvergenceReport& rep)
{
    Json rows = Json::array();
    for (const auto& row : rep.rows) {
        Json r{{"p", row.p}, {"q", nullptr}, {"deviation", row.deviation.to_string()}};
        if (row.q) r["q"] = *row.q;
        rows.push_back(r);
    }
    Json eq = Json::array();
    for (auto [a, b] : rep.equal_limits) eq.push_back(Json::array({a, b}));
    return Json{{"moduli", rep.m_list}, {"j", rep.j},           {"window", rep.k_window},
                {"branch", to_string(rep.branch)}, {"entry_steps", rep.entry_steps}, {"rho", rep.rho},
                {"rows", rows}, {"equal_limits", eq}};
}

Json to_json(const FixedPointBasisElement& e)
{
    if (e.kind == FixedPointBasisElement::Kind::PoleAtZero)
        return Json{{"kind", "pole_at_zero"}, {"r", nullptr}, {"coset", nullptr}, {"value", to_json(e.value)}};
    return Json{{"kind", "coset_function"},
                {"r", e.r},
                {"coset", intdyn::cyclotomic_coset(e.r, e.n)},
                {"value", to_json(e.value)}};
}

Json to_json(const FixedDecomposition& dec)
{
    Json t = Json::array();
    for (const auto& term : dec.terms)
        t.push_back(Json{{"r", term.r}, {"n", term.n}, {"alpha", to_json(term.alpha)}});
    return Json{{"order", dec.order}, {"field_order", dec.field->order()}, {"c0", to_json(dec.c0)}, {"terms", t}};
}

} // namespace ratdyn::io
