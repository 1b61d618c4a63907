#pragma once

// JSON encodings of every value type. Arrays are nested row-major lists;
// pivot sets are 0-based row indices. Doubles are written with round-trip
// precision, so decode(encode(x)) == x exactly.

#include "jetcalc/contact.hpp"
#include "jetcalc/groups.hpp"
#include "jetcalc/jets.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>

namespace jetcalc::codec {

using json = nlohmann::json;

/// Malformed or inconsistent JSON input.
class CodecError : public Error {
 public:
  using Error::Error;
};

enum class ValueKind {
  velocity,
  double_velocity,
  vertical_vector,
  jet_group,
  principal,
  second_order,
  contact,
  double_contact,
  quotient_vertical,
};

std::string_view to_string(ValueKind kind);

/// Identifies the encoded type from its field names.
ValueKind detect(const json& j);

json encode(const Velocity& v);
json encode(const DoubleVelocity& dv);
json encode(const VerticalVector& k);
json encode(const JetGroupElement& g);
json encode(const PrincipalJetElement& p);
json encode(const SecondOrderJetElement& q);
json encode(const ContactElement& c);
json encode(const DoubleContactElement& d);
json encode(const QuotientVerticalVector& q);

Velocity decode_velocity(const json& j);
DoubleVelocity decode_double_velocity(const json& j);
VerticalVector decode_vertical_vector(const json& j);
JetGroupElement decode_jet_group(const json& j);
PrincipalJetElement decode_principal(const json& j);
SecondOrderJetElement decode_second_order(const json& j);
ContactElement decode_contact(const json& j);
DoubleContactElement decode_double_contact(const json& j);
QuotientVerticalVector decode_quotient_vertical(const json& j);

/// Parses text, throwing CodecError on malformed JSON.
json parse(std::string_view text);

/// Serializes compactly, or with two-space indentation when pretty.
std::string dump(const json& j, bool pretty = false);

}  // namespace jetcalc::codec
