#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "massform/local_model.hpp"
#include "massform/mass.hpp"
#include "massform/order_zeta.hpp"

namespace massform {

using Json = nlohmann::ordered_json;

/// Malformed JSON shapes raise ParseError; semantic failures raise the
/// error of the constructor that rejects the value.

Json to_json(const BigRational& x);
BigRational rational_from_json(const Json& j);

/// {"q", "genus", "l_poly" (lowest degree first), "deg_inf"}.
Json to_json(const FunctionFieldData& field);
FunctionFieldData field_from_json(const Json& j);

/// {"deg", "inv": "b/d", "inf"}.
Json to_json(const RamifiedPlace& place);
RamifiedPlace place_from_json(const Json& j);

/// {"rank", "places": [...]}.
Json to_json(const RamificationData& data);
RamificationData ramification_from_json(const Json& j, const FunctionFieldData& field);

/// "inf:-1/3,1:1/3,2:1/2": comma-separated <deg|inf>:<b>/<d> tokens.
/// Whitespace around tokens is ignored; the empty string means no places.
std::vector<RamifiedPlace> parse_ramification_shorthand(std::string_view text, int deg_inf);

/// "1,1,2" -> {1, 1, 2}.
std::vector<BigInt> parse_integer_list(std::string_view text);

Json to_json(const MassReport& report);
MassReport mass_report_from_json(const Json& j);

/// {"num": [...], "den": [...]}, coefficient strings lowest degree first.
Json to_json(const RationalFunctionQ& f);
RationalFunctionQ ratfun_from_json(const Json& j);

/// {"order", "coeffs": [...]}.
Json to_json(const TruncatedSeriesQ& s);
TruncatedSeriesQ series_from_json(const Json& j);

Json to_json(const ModelCheckReport& report);

}  // namespace massform
