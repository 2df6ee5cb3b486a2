#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "random.hpp"
#include "trigvee/catalog.hpp"
#include "trigvee/errors.hpp"
#include "trigvee/families.hpp"
#include "trigvee/json_io.hpp"

using namespace trigvee;

namespace {

Configuration family(Family f, std::size_t rank, std::map<std::string, Rational> params) {
  return generate(FamilySpec{f, rank, std::move(params)});
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("rationals travel as strings") {
    CHECK(to_json(Rational(-3, 7)) == Json("-3/7"));
    CHECK(rational_from_json(Json("5/10")) == Rational(1, 2));
    CHECK(rational_from_json(Json(4)) == 4);
    CHECK_THROWS_AS(rational_from_json(Json(0.5)), ParseError);
    CHECK_THROWS_AS(rational_from_json(Json::array()), ParseError);
  }

  TEST_CASE("configuration round trip is byte identical") {
    for (Family f : {Family::BC, Family::G2, Family::Planar6, Family::E7}) {
      FamilySpec s{f, f == Family::BC ? std::size_t{3} : 0, {}};
      for (const auto& p : parameter_names(f)) s.params[p] = Rational(2, 3);
      if (f == Family::Planar6) s.params["b"] = Rational(1, 5);
      const Configuration cfg = generate(s);
      const std::string text = serialize(cfg);
      const Configuration back = parse_config(text);
      CHECK(back == cfg);
      CHECK(serialize(back) == text);
    }
  }

  TEST_CASE("malformed configurations are rejected") {
    CHECK_THROWS_AS(parse_config("{"), ParseError);
    CHECK_THROWS_AS(parse_config(R"({"dim": 2, "covectors": [], "multiplicities": []})"), InvalidConfiguration);
    CHECK_THROWS_AS(parse_config(R"({"dim": 2, "covectors": [["1", "0"]], "multiplicities": [0.5]})"), ParseError);
    CHECK_THROWS_AS(parse_config(R"({"dim": 2, "covectors": [["1"]], "multiplicities": ["1"]})"),
                    InvalidConfiguration);
    CHECK_THROWS_AS(parse_config(R"({"covectors": [["1"]], "multiplicities": ["1"]})"), ParseError);
    const Configuration ok = parse_config(R"({"dim": 2, "covectors": [["1", "-1/2"], [0, 1]], "multiplicities": ["3", 2]})");
    CHECK(ok.covectors[0][1] == Rational(-1, 2));
    CHECK(ok.multiplicities[1] == 2);
  }

  TEST_CASE("vee report json") {
    const Json j = to_json(vee_check(family(Family::BC, 3, {{"r", 1}, {"s", 1}, {"q", 1}})));
    CHECK(j.at("is_vee") == true);
    CHECK(j.at("lambda_sq") == "1458/11");
    CHECK(j.contains("series"));
    CHECK(j.contains("warnings"));
    const Json bad = to_json(vee_check(Configuration{2, {{1, 0}, {0, 1}, {1, 2}}, {1, 1, 1}, {}}));
    CHECK(bad.at("is_vee") == false);
  }

  TEST_CASE("digest is invariant under changes of coordinates and relabelling") {
    testing::RandomRationals rnd(71);
    const Configuration f4 = family(Family::F4, 0, {{"r", 1}, {"s", 2}});
    const std::string d = digest(f4);
    CHECK(d.size() == 16);
    for (int k = 0; k < 3; ++k) {
      const Configuration t = transform(f4, rnd.unimodular(4));
      std::vector<std::size_t> order(t.size());
      std::iota(order.begin(), order.end(), std::size_t{0});
      std::shuffle(order.begin(), order.end(), rnd.engine());
      Configuration moved{t.dim, {}, {}, {}};
      for (std::size_t i : order) {
        moved.covectors.push_back(t.covectors[i]);
        moved.multiplicities.push_back(t.multiplicities[i]);
      }
      CHECK(digest(moved) == d);
      CHECK(digest(normalize_positive(moved).cfg) == d);
    }
    CHECK(digest(family(Family::F4, 0, {{"r", 2}, {"s", 1}})) != d);
  }

  TEST_CASE("catalog at corank zero is the family itself") {
    const FamilySpec spec{Family::G2, 0, {{"p", 1}, {"q", 2}}};
    const Catalog cat = build_catalog(spec, 0);
    REQUIRE(cat.entries.size() == 1);
    CHECK(cat.entries[0].corank == 0);
    CHECK(cat.entries[0].digest == digest(generate(spec)));
    CHECK(cat.entries[0].lambda_sq == expected_lambda_sq(spec));
  }

  TEST_CASE("catalog entries keep lambda and include the BC2 restriction") {
    const FamilySpec spec{Family::BC, 4, {{"r", 1}, {"s", 1}, {"q", 1}}};
    const Catalog cat = build_catalog(spec, 2);
    const std::string target =
        digest(restricted_family(FamilySpec{Family::RestrictedBC, 0, {{"r", 1}, {"s", 1}, {"q", 1}}, {2, 2}}));
    bool found = false;
    for (const auto& e : cat.entries) {
      CHECK(e.child_is_vee);
      CHECK(e.lambda_sq == cat.parent_lambda_sq);
      found = found || e.digest == target;
    }
    CHECK(found);
  }

  TEST_CASE("catalog json is deterministic") {
    const FamilySpec spec{Family::F4, 0, {{"r", 1}, {"s", 1}}};
    CHECK(to_json(build_catalog(spec, 2)).dump() == to_json(build_catalog(spec, 2)).dump());
  }

  TEST_CASE("catalog does not depend on the thread count") {
    const FamilySpec spec{Family::E7, 0, {{"t", 1}}};
    const std::string serial = to_json(build_catalog(spec, 3, 1)).dump();
    CHECK(to_json(build_catalog(spec, 3, 4)).dump() == serial);
    CHECK(to_json(build_catalog(spec, 3, 13)).dump() == serial);
  }

  TEST_CASE("catalog rejects non vee-systems") {
    CHECK_THROWS_AS(build_catalog(Configuration{2, {{1, 0}, {0, 1}, {1, 2}}, {1, 1, 1}, {}}, 1), InvalidConfiguration);
  }
}
