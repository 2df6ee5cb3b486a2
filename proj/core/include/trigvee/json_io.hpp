#pragma once

#include <string>

#include "json.hpp"
#include "trigvee/catalog.hpp"
#include "trigvee/configuration.hpp"
#include "trigvee/restriction.hpp"
#include "trigvee/veesystem.hpp"
#include "trigvee/wdvv_numeric.hpp"

namespace trigvee {

using Json = nlohmann::ordered_json;

/// Rationals travel as strings; integral JSON numbers are accepted on input,
/// numbers with a fractional part are rejected with ParseError.
Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json to_json(const Configuration& cfg);
/// Throws ParseError on malformed documents and InvalidConfiguration when the
/// data violates the configuration invariants.
Configuration config_from_json(const Json& j);

Configuration parse_config(const std::string& text);
std::string serialize(const Configuration& cfg);

Configuration read_config_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

Json to_json(const VeeReport& report);
Json to_json(const RestrictionResult& res);
Json to_json(const SubsystemHandle& sub);
Json to_json(const ResidualReport& rep);
Json to_json(const Catalog& cat);

}  // namespace trigvee
