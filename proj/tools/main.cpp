// trigvee command-line front-end. Exit codes: 0 success, 1 check failed, 2 input error.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "trigvee/catalog.hpp"
#include "trigvee/errors.hpp"
#include "trigvee/families.hpp"
#include "trigvee/gamma.hpp"
#include "trigvee/json_io.hpp"
#include "trigvee/restriction.hpp"
#include "trigvee/rootdata.hpp"
#include "trigvee/veesystem.hpp"
#include "trigvee/wdvv_numeric.hpp"

using namespace trigvee;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kInputError = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  bool json = false;
  std::uint64_t seed = 42;
  std::string out;
};

void emit(const Globals& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
  } else {
    write_text_file(g.out, text.back() == '\n' ? text : text + "\n");
  }
}

std::vector<std::size_t> parse_indices(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw InputError("bad index list: " + text);
    out.push_back(std::stoul(item));
  }
  if (out.empty()) throw InputError("empty index list");
  return out;
}

void check_indices(const Configuration& cfg, const std::vector<std::size_t>& idx) {
  for (std::size_t i : idx)
    if (i >= cfg.size()) throw InputError("index " + std::to_string(i) + " out of range");
}

FamilySpec family_spec(const std::string& family, std::size_t rank, const std::vector<std::string>& params,
                       const std::string& partition, bool rational_partition) {
  FamilySpec spec;
  spec.family = parse_family(family);
  spec.rank = rank;
  for (const auto& kv : params) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw InputError("--param expects name=value, got " + kv);
    spec.params[kv.substr(0, eq)] = Rational::parse(kv.substr(eq + 1));
  }
  if (!partition.empty()) {
    std::stringstream ss(partition);
    std::string item;
    while (std::getline(ss, item, ',')) spec.partition.push_back(Rational::parse(item));
  }
  spec.rational_partition = rational_partition;
  return spec;
}

std::string text_lines(const std::vector<std::pair<std::string, std::string>>& rows) {
  std::string s;
  for (const auto& [k, v] : rows) s += k + ": " + v + "\n";
  return s;
}

std::string opt_str(const std::optional<Rational>& r) { return r ? r->str() : "undefined"; }

int cmd_gen(const Globals& g, const FamilySpec& spec) {
  emit(g, serialize(generate(spec)));
  return kOk;
}

int cmd_check(const Globals& g, const std::string& path, int flips) {
  const Configuration cfg = read_config_file(path);
  VeeReport rep = vee_check(cfg);
  rep.g2_positive_independent = positive_system_probe(cfg, flips, g.seed);
  const bool ok = rep.is_vee && rep.proportionality_ok && *rep.g2_positive_independent;
  if (g.json) {
    emit(g, to_json(rep).dump(2));
  } else {
    std::size_t bad = 0;
    for (const auto& s : rep.series) bad += s.residual.is_zero() ? 0 : 1;
    emit(g, text_lines({{"is_vee", rep.is_vee ? "true" : "false"},
                        {"failing_series", std::to_string(bad)},
                        {"c_delta_warnings", std::to_string(rep.c_delta_warnings.size())},
                        {"lambda_sq", opt_str(rep.lambda_sq)},
                        {"g2_positive_independent", *rep.g2_positive_independent ? "true" : "false"}}));
  }
  return ok ? kOk : kFailed;
}

int cmd_wdvv(const Globals& g, const std::string& path, const std::string& lambda_text, int samples, double tol) {
  const Configuration cfg = read_config_file(path);
  Rational l2;
  if (lambda_text.empty()) {
    try {
      l2 = lambda_sq(cfg);
    } catch (const Error& e) {
      throw InputError(std::string("no lambda^2 given and none can be computed: ") + e.what());
    }
  } else {
    l2 = Rational::parse(lambda_text);
  }
  const ResidualReport rep = wdvv_residual(cfg, l2, samples, g.seed, tol);
  Json j = to_json(rep);
  j["lambda_sq"] = l2.str();
  if (l2.sign() > 0) {
    const auto assoc = associativity_residual(cfg, std::sqrt(l2.to_double()), samples, g.seed, tol);
    j["associativity"] = to_json(assoc.residual);
    j["verdicts_agree"] = assoc.agrees;
  }
  if (g.json) {
    emit(g, j.dump(2));
  } else {
    std::ostringstream max;
    max << rep.max_residual;
    std::vector<std::pair<std::string, std::string>> rows = {
        {"lambda_sq", l2.str()}, {"max_residual", max.str()}, {"pass", rep.pass ? "true" : "false"}};
    if (j.contains("verdicts_agree")) rows.emplace_back("verdicts_agree", j["verdicts_agree"] ? "true" : "false");
    emit(g, text_lines(rows));
  }
  return rep.pass ? kOk : kFailed;
}

int cmd_restrict(const Globals& g, const std::string& path, const std::string& kernel_of) {
  const Configuration cfg = read_config_file(path);
  const auto idx = parse_indices(kernel_of);
  check_indices(cfg, idx);
  const RestrictionResult res = restrict(cfg, idx);
  emit(g, to_json(res).dump(2));
  return kOk;
}

int cmd_subsystem(const Globals& g, const std::string& path, const std::string& span) {
  const Configuration cfg = read_config_file(path);
  const auto idx = parse_indices(span);
  check_indices(cfg, idx);
  const SubsystemHandle sub = subsystem(cfg, idx);
  Json j = to_json(sub);
  bool ok = !sub.is_isotropic;
  if (ok) {
    const Configuration alone = standalone(sub);
    const VeeReport rep = vee_check(alone);
    ok = rep.is_vee;
    j["standalone"] = to_json(alone);
    j["standalone_is_vee"] = rep.is_vee;
    const EigenDecomposition eig = m_operator(sub);
    Json spaces = Json::array();
    for (std::size_t i = 0; i < eig.eigenvalues.size(); ++i) {
      Json basis = Json::array();
      for (const auto& v : eig.ambient[i]) {
        Json row = Json::array();
        for (const auto& x : v) row.push_back(to_json(x));
        basis.push_back(std::move(row));
      }
      spaces.push_back({{"eigenvalue", eig.eigenvalues[i].str()}, {"basis", std::move(basis)}});
    }
    j["eigenspaces"] = std::move(spaces);
    j["member_eigenvalue"] = eig.member_eigenvalue;
  }
  if (g.json) {
    emit(g, j.dump(2));
  } else {
    std::string eigen;
    for (const auto& s : j.value("eigenspaces", Json::array()))
      eigen += (eigen.empty() ? "" : ", ") + s["eigenvalue"].get<std::string>();
    emit(g, text_lines({{"members", std::to_string(sub.members.size())},
                        {"rank", std::to_string(sub.rank())},
                        {"isotropic", sub.is_isotropic ? "true" : "false"},
                        {"eigenvalues", eigen.empty() ? "-" : eigen},
                        {"standalone_is_vee", j.value("standalone_is_vee", false) ? "true" : "false"}}));
  }
  return ok ? kOk : kFailed;
}

int cmd_gamma(const Globals& g, const std::string& family, std::size_t rank,
              const std::map<std::string, std::string>& given) {
  FamilySpec spec;
  spec.family = parse_family(family);
  spec.rank = rank;
  const RootData rd = root_data(spec.family, family_dim(spec));
  ClassMultiplicities mult;
  for (const auto& [k, v] : given)
    if (!v.empty()) mult[k] = Rational::parse(v);
  if (mult.empty()) throw InputError("no multiplicities given");

  auto attempt = [](auto&& f) -> std::optional<Rational> {
    try {
      return f();
    } catch (const NoATable&) {
      return std::nullopt;
    }
  };
  const auto highest = attempt([&] { return gamma_tilde_sq(rd, mult); });
  const auto dual = attempt([&] { return gamma_tilde_sq_dual(rd, mult); });
  const auto rescaled = attempt([&] { return gamma_sq_rescaled(rd, mult); });
  const Configuration cfg = generate(spec_for_classes(rd, mult));
  const Rational direct = gamma_sq_direct(cfg, rd, mult);

  auto js = [](const std::optional<Rational>& r) { return r ? Json(r->str()) : Json(nullptr); };
  if (g.json) {
    Json j;
    j["family"] = to_string(spec.family);
    j["rank"] = rd.rank;
    j["gamma_tilde_sq_highest_root"] = js(highest);
    j["gamma_tilde_sq_dual"] = js(dual);
    j["gamma_sq_rescaled"] = js(rescaled);
    j["gamma_sq"] = direct.str();
    j["h"] = census_h(rd, mult).str();
    j["lambda_sq"] = lambda_sq(cfg).str();
    emit(g, j.dump(2));
  } else {
    emit(g, text_lines({{"gamma_tilde_sq (highest root)", opt_str(highest)},
                        {"gamma_tilde_sq (dual roots)", opt_str(dual)},
                        {"gamma_sq (rescaled multiplicities)", opt_str(rescaled)},
                        {"gamma_sq = -4h^3/lambda^2", direct.str()}}));
  }
  return highest && dual && *highest != *dual ? kFailed : kOk;
}

int cmd_catalog(const Globals& g, const std::string& path, const std::string& family, const FamilySpec& spec,
                std::size_t max_corank) {
  Catalog cat;
  if (!path.empty()) {
    cat = build_catalog(read_config_file(path), max_corank);
  } else {
    if (family.empty()) throw InputError("catalog needs a configuration file or --family");
    if (spec.family == Family::RestrictedA || spec.family == Family::RestrictedBC)
      throw InputError("catalog does not enumerate restricted families");
    cat = build_catalog(spec, max_corank);
  }
  bool ok = true;
  for (const auto& e : cat.entries)
    ok = ok && e.child_is_vee && (e.child_dim < 2 || e.lambda_sq == cat.parent_lambda_sq);
  if (g.json || !g.out.empty()) {
    emit(g, to_json(cat).dump(2));
  } else {
    std::ostringstream os;
    os << "source: " << cat.source << "\nparent_lambda_sq: " << cat.parent_lambda_sq.str()
       << "\norbit_representatives: " << cat.orbit_representatives << "\nskipped: " << cat.skipped << "\n";
    for (const auto& e : cat.entries)
      os << "corank " << e.corank << "  dim " << e.child_dim << "  covectors " << e.covector_count << "  lambda_sq "
         << opt_str(e.lambda_sq) << "  digest " << e.digest << "\n";
    emit(g, os.str());
  }
  return ok ? kOk : kFailed;
}

int classify(const Error& e) {
  if (dynamic_cast<const NotProportional*>(&e) || dynamic_cast<const ZeroG2*>(&e) ||
      dynamic_cast<const NotEigen*>(&e) || dynamic_cast<const CDeltaZero*>(&e) ||
      dynamic_cast<const DegenerateRestrictedGram*>(&e) || dynamic_cast<const EmptyChild*>(&e) ||
      dynamic_cast<const PoleTooClose*>(&e))
    return kFailed;
  return kInputError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Trigonometric vee-systems: generate, check, restrict and verify."};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "Print JSON instead of text");
  app.add_option("--seed", g.seed, "Seed for sampling and probes")->capture_default_str();
  app.add_option("-o,--output", g.out, "Write the result to a file");

  std::string family, partition, config, lambda_text, kernel_of, span;
  std::size_t rank = 0, max_corank = 2;
  std::vector<std::string> params;
  bool rational_partition = false;
  int samples = 20, flips = 10;
  double tol = 1e-8;
  std::map<std::string, std::string> classes{{"p", ""}, {"q", ""}, {"t", ""}, {"r", ""}, {"s", ""}};

  auto* gen = app.add_subcommand("gen", "Generate a family configuration");
  gen->add_option("--family", family, "Family identifier")->required();
  gen->add_option("--rank", rank, "Rank for the classical series");
  gen->add_option("--param", params, "Parameter as name=value, repeatable");
  gen->add_option("--partition", partition, "Partition for the restricted families, e.g. 2,2,1");
  gen->add_flag("--rational-partition", rational_partition, "Allow non-integer partition entries");

  auto* check = app.add_subcommand("check", "Check the vee-conditions and compute lambda^2");
  check->add_option("config", config, "Configuration JSON file")->required();
  check->add_option("--flips", flips, "Positive systems tried by the g2 probe")->capture_default_str();

  auto* wdvv = app.add_subcommand("wdvv", "Floating-point WDVV and associativity residuals");
  wdvv->add_option("config", config, "Configuration JSON file")->required();
  wdvv->add_option("--lambda-sq", lambda_text, "lambda^2 as a rational; computed when omitted");
  wdvv->add_option("--samples", samples, "Number of sample points")->capture_default_str()->check(CLI::PositiveNumber);
  wdvv->add_option("--tol", tol, "Residual tolerance")->capture_default_str();

  auto* restr = app.add_subcommand("restrict", "Restrict to the common kernel of some covectors");
  restr->add_option("config", config, "Configuration JSON file")->required();
  restr->add_option("--kernel-of", kernel_of, "Comma-separated covector indices")->required();

  auto* sub = app.add_subcommand("subsystem", "Subsystem spanned by some covectors");
  sub->add_option("config", config, "Configuration JSON file")->required();
  sub->add_option("--span", span, "Comma-separated covector indices")->required();

  auto* gamma = app.add_subcommand("gamma", "gamma^2 for a root system with class multiplicities");
  gamma->add_option("--family", family, "Root system")->required();
  gamma->add_option("--rank", rank, "Rank for the classical series");
  for (auto& [name, value] : classes)
    gamma->add_option("--" + name, value, "Multiplicity of class " + name);

  auto* cat = app.add_subcommand("catalog", "Catalogue the restrictions of a family");
  cat->add_option("config", config, "Configuration JSON file instead of --family");
  cat->add_option("--family", family, "Family identifier");
  cat->add_option("--rank", rank, "Rank for the classical series");
  cat->add_option("--param", params, "Parameter as name=value, repeatable");
  cat->add_option("--max-corank", max_corank, "Largest subsystem rank")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*gen) return cmd_gen(g, family_spec(family, rank, params, partition, rational_partition));
    if (*check) return cmd_check(g, config, flips);
    if (*wdvv) return cmd_wdvv(g, config, lambda_text, samples, tol);
    if (*restr) return cmd_restrict(g, config, kernel_of);
    if (*sub) return cmd_subsystem(g, config, span);
    if (*gamma) return cmd_gamma(g, family, rank, classes);
    if (*cat) {
      FamilySpec spec;
      if (config.empty() && !family.empty()) spec = family_spec(family, rank, params, "", false);
      if (spec.params.empty() && !family.empty())
        for (const auto& p : parameter_names(spec.family)) spec.params[p] = 1;
      return cmd_catalog(g, config, family, spec, max_corank);
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return classify(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
