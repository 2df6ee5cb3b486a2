#include "trigvee/json_io.hpp"

#include <fstream>
#include <sstream>

#include "trigvee/errors.hpp"

namespace trigvee {

Json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Rational(mpq_class(mpz_class(std::to_string(j.get<unsigned long long>()))));
    return Rational(mpq_class(mpz_class(std::to_string(j.get<long long>()))));
  }
  if (j.is_number_float()) {
    const double d = j.get<double>();
    throw ParseError("fractional JSON number " + std::to_string(d) + " is not allowed; write it as a string \"p/q\"");
  }
  throw ParseError("expected a rational string, got " + std::string(j.type_name()));
}

Json to_json(const Configuration& cfg) {
  Json j;
  j["dim"] = cfg.dim;
  Json covs = Json::array();
  for (const auto& a : cfg.covectors) {
    Json row = Json::array();
    for (const auto& x : a) row.push_back(to_json(x));
    covs.push_back(std::move(row));
  }
  j["covectors"] = std::move(covs);
  Json mults = Json::array();
  for (const auto& c : cfg.multiplicities) mults.push_back(to_json(c));
  j["multiplicities"] = std::move(mults);
  if (!cfg.name.empty()) j["name"] = cfg.name;
  return j;
}

Configuration config_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("configuration must be a JSON object");
  for (const char* key : {"dim", "covectors", "multiplicities"})
    if (!j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  if (!j["dim"].is_number_integer() || j["dim"].get<long long>() <= 0)
    throw ParseError("'dim' must be a positive integer");
  if (!j["covectors"].is_array() || !j["multiplicities"].is_array())
    throw ParseError("'covectors' and 'multiplicities' must be arrays");
  Configuration cfg;
  cfg.dim = j["dim"].get<std::size_t>();
  for (const auto& row : j["covectors"]) {
    if (!row.is_array()) throw ParseError("each covector must be an array");
    CoVec v;
    for (const auto& x : row) v.push_back(rational_from_json(x));
    cfg.covectors.push_back(std::move(v));
  }
  for (const auto& x : j["multiplicities"]) cfg.multiplicities.push_back(rational_from_json(x));
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw ParseError("'name' must be a string");
    cfg.name = j["name"].get<std::string>();
  }
  if (cfg.covectors.empty()) throw InvalidConfiguration("configuration has no covectors");
  cfg.validate();
  return cfg;
}

Configuration parse_config(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return config_from_json(j);
}

std::string serialize(const Configuration& cfg) { return to_json(cfg).dump(2) + "\n"; }

Configuration read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
}

namespace {

const char* status_name(LambdaStatus s) {
  switch (s) {
    case LambdaStatus::Ok: return "ok";
    case LambdaStatus::NotProportional: return "not_proportional";
    case LambdaStatus::ZeroG2: return "zero_g2";
    case LambdaStatus::NotComputed: return "not_computed";
  }
  return "unknown";
}

}  // namespace

Json to_json(const VeeReport& report) {
  Json j;
  j["is_vee"] = report.is_vee;
  j["lambda_sq"] = report.lambda_sq ? Json(report.lambda_sq->str()) : Json(nullptr);
  j["proportionality_ok"] = report.proportionality_ok;
  j["lambda_status"] = status_name(report.lambda_status);
  j["g2_positive_independent"] =
      report.g2_positive_independent ? Json(*report.g2_positive_independent) : Json(nullptr);
  Json warnings = Json::array();
  for (const auto& w : report.c_delta_warnings) warnings.push_back({{"anchor", w.anchor}, {"subset", w.subset}});
  j["warnings"] = std::move(warnings);
  Json series = Json::object();
  for (const auto& s : report.series) {
    const std::string key = std::to_string(s.alpha);
    if (!series.contains(key)) series[key] = Json::array();
    series[key].push_back({{"members", s.members}, {"signs", s.signs}, {"residual", s.residual.str()}});
  }
  j["series"] = std::move(series);
  return j;
}

Json to_json(const RestrictionResult& res) {
  Json j;
  j["child"] = to_json(res.child);
  Json basis = Json::array();
  for (const auto& b : res.basis) {
    Json row = Json::array();
    for (const auto& x : b) row.push_back(to_json(x));
    basis.push_back(std::move(row));
  }
  j["basis"] = std::move(basis);
  j["provenance"] = res.provenance;
  j["zero_multiplicity_dropped"] = res.zero_multiplicity_dropped;
  return j;
}

Json to_json(const SubsystemHandle& sub) {
  Json j;
  j["members"] = sub.members;
  j["basis"] = sub.basis;
  j["rank"] = sub.rank();
  j["is_isotropic"] = sub.is_isotropic;
  Json g = Json::array();
  for (std::size_t r = 0; r < sub.w_gram.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < sub.w_gram.cols(); ++c) row.push_back(to_json(sub.w_gram(r, c)));
    g.push_back(std::move(row));
  }
  j["restricted_gram"] = std::move(g);
  return j;
}

Json to_json(const ResidualReport& rep) {
  Json j;
  j["max_residual"] = rep.max_residual;
  j["tol"] = rep.tol;
  j["pass"] = rep.pass;
  j["points"] = rep.points;
  j["seed"] = rep.seed;
  return j;
}

Json to_json(const Catalog& cat) {
  Json j;
  j["source"] = cat.source;
  j["parent_lambda_sq"] = cat.parent_lambda_sq.str();
  j["max_corank"] = cat.max_corank;
  j["orbit_representatives"] = cat.orbit_representatives;
  j["skipped"] = cat.skipped;
  Json entries = Json::array();
  for (const auto& e : cat.entries) {
    Json je;
    je["corank"] = e.corank;
    je["subsystem"] = e.members;
    je["digest"] = e.digest;
    je["lambda_sq"] = e.lambda_sq ? Json(e.lambda_sq->str()) : Json(nullptr);
    je["child_is_vee"] = e.child_is_vee;
    je["covector_count"] = e.covector_count;
    je["child_dim"] = e.child_dim;
    je["sources"] = e.sources;
    je["child"] = to_json(e.child);
    entries.push_back(std::move(je));
  }
  j["entries"] = std::move(entries);
  return j;
}

}  // namespace trigvee
