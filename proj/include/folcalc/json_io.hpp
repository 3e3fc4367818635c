#pragma once

/**
 * @file json_io.hpp
 * @brief JSON encoding/decoding for all public types.  Rationals are
 *        {"num", "den"} in lowest terms with positive denominator, emitted
 *        as JSON integers when they fit in 64 bits and as decimal strings
 *        otherwise; both forms are accepted on input.
 */

#include <folcalc/covers.hpp>
#include <folcalc/dynamics.hpp>
#include <folcalc/existence.hpp>
#include <folcalc/forms.hpp>
#include <folcalc/seifert.hpp>

#include <json.hpp>

#include <stdexcept>

namespace folcalc {

using Json = nlohmann::json;

/// Structural problems with the input (unparseable JSON, missing fields,
/// wrong shapes), as opposed to domain errors on well-formed values.
struct MalformedInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Json::parse wrapper translating parse errors to MalformedInput.
Json parse_json(const std::string& text);

Json to_json(const BigInt& n);
BigInt bigint_from_json(const Json& j);

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json to_json(const SeifertInvariants& inv);
SeifertInvariants seifert_from_json(const Json& j);

Json to_json(const Decision& d);
Json to_json(const ConsistencyReport& r);
Json to_json(const BranchedCoverResult& r);
Json to_json(const BrieskornReport& r);

Json to_json(const LiftedCircleMap& f);
LiftedCircleMap map_from_json(const Json& j);

Json to_json(const SurfaceGroupRep& rep);
SurfaceGroupRep rep_from_json(const Json& j);

Json to_json(const TranslationEstimate& t);
Json to_json(const StabilityReport& r);
Json to_json(const ClassifyResult& r);

}  // namespace folcalc
