#pragma once

#include <string>

#include <json.hpp>

#include "freeimm/ansatz.hpp"
#include "freeimm/rat_poly.hpp"
#include "freeimm/sturm.hpp"
#include "freeimm/trig_poly.hpp"
#include "freeimm/weierstrass.hpp"

namespace freeimm {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

// Rationals are always "p/q" strings. Parsers throw ValidationError with
// field-level messages.

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j, const std::string& where = "value");

Json to_json(const RatPoly& p);
RatPoly rat_poly_from_json(const Json& j, const std::string& where = "polynomial");

Json to_json(const TrigPoly& p);
/// Accepts the object form or a bare "p/q" string for constants.
TrigPoly trig_poly_from_json(const Json& j, const std::string& where = "trig polynomial");

Json to_json(const WeierstrassForm& w);
WeierstrassForm weierstrass_from_json(const Json& j);

Json to_json(const AnsatzSpec& s);
/// Structural validation plus the critical-dimension check.
AnsatzSpec validate_spec(const Json& j);

Json to_json(const ExtendedAnsatzSpec& s);
ExtendedAnsatzSpec extended_spec_from_json(const Json& j);

Json to_json(const PositivityCertificate& c);
PositivityCertificate positivity_from_json(const Json& j);

Json to_json(const std::vector<SignTableRow>& rows);
Json to_json(const ObstructionReport& r);

/// Adds "schema_version": 1 to a top-level document.
Json with_schema(Json j);

/// Parses inline JSON (starts with '{' or '[') or reads a file.
Json load_json_argument(const std::string& arg);

/// Canonical bytes: sorted keys, two-space indent, trailing newline.
std::string dump_canonical(const Json& j);

}  // namespace freeimm
