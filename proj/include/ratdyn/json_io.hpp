#pragma once

#include <json.hpp>

#include "ratdyn/eulerian.hpp"
#include "ratdyn/fixedpoints.hpp"
#include "ratdyn/intdyn.hpp"
#include "ratdyn/transform.hpp"

namespace ratdyn::io {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& q);
Json to_json(const CyclotomicNumber& z);   // {"order": r, "coeffs": ["p/q", ...]}

// {"v": int, "num": [[e, c], ...], "den": [[e, c], ...], "text": "..."}
Json to_json(const RatFunc& r);
Json to_json(const CycRatFunc& r);

RatFunc ratfunc_from_json(const Json& j);

Json to_json(const OrbitRecord<Rational>& rec);
Json to_json(const intdyn::GammaOrbitPartition& part);
Json to_json(const ConvergenceReport& rep);
Json to_json(const FixedPointBasisElement& e);
Json to_json(const FixedDecomposition& dec);

} // namespace ratdyn::io
