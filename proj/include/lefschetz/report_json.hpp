#ifndef LEFSCHETZ_REPORT_JSON_HPP
#define LEFSCHETZ_REPORT_JSON_HPP

#include <json.hpp>

#include "lefschetz/region.hpp"
#include "lefschetz/tiling.hpp"
#include "lefschetz/wlp.hpp"

namespace lefschetz {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "lefschetz-lab/1";

/// Integers that fit in int64 become JSON numbers, larger ones strings.
Json big_to_json(const BigInt& v);
BigInt big_from_json(const Json& j);

Json to_json(const Balance& b);
Balance balance_from_json(const Json& j);

Json to_json(const SignedEnumeration& e);
SignedEnumeration enumeration_from_json(const Json& j);

Json to_json(const DegreeReport& r);
DegreeReport degree_report_from_json(const Json& j);

Json to_json(const WlpReport& r);
/// Throws ParseError on a malformed document or a schema mismatch.
WlpReport wlp_report_from_json(const Json& j);

}  // namespace lefschetz

#endif  // LEFSCHETZ_REPORT_JSON_HPP
