#include <doctest.h>

#include "random.hpp"
#include "trigvee/catalog.hpp"
#include "trigvee/errors.hpp"
#include "trigvee/families.hpp"
#include "trigvee/gamma.hpp"
#include "trigvee/rootdata.hpp"
#include "trigvee/veesystem.hpp"

using namespace trigvee;

namespace {

Configuration family(Family f, std::size_t rank, std::map<std::string, Rational> params) {
  return generate(FamilySpec{f, rank, std::move(params)});
}

FamilySpec random_spec(testing::RandomRationals& rnd, Family f, std::size_t rank) {
  FamilySpec s{f, rank, {}};
  for (const auto& p : parameter_names(f)) s.params[p] = rnd.positive();
  if (f == Family::Planar6 || f == Family::Planar8 || f == Family::Planar9) {
    // keep b small against a so every multiplicity and denominator is generic
    s.params["b"] = s.params["a"] * Rational(rnd.integer(1, 9), 40);
  }
  return s;
}

ClassMultiplicities pq(Rational p, Rational q) { return {{"p", p}, {"q", q}}; }

}  // namespace

TEST_SUITE("families") {
  TEST_CASE("generate examples") {
    const Configuration b2 = family(Family::BC, 2, {{"r", 1}, {"s", 1}, {"q", 1}});
    CHECK(b2.covectors ==
          std::vector<CoVec>{{1, 0}, {0, 1}, {2, 0}, {0, 2}, {1, 1}, {1, -1}});
    CHECK(b2.multiplicities == std::vector<Rational>(6, 1));
    CHECK(family(Family::E8, 0, {{"t", 1}}).size() == 120);
    CHECK(family(Family::E7, 0, {{"t", 1}}).size() == 63);
    CHECK(family(Family::E6, 0, {{"t", 1}}).size() == 36);
    CHECK(family(Family::F4, 0, {{"r", 1}, {"s", 1}}).size() == 24);
    const Configuration p10 = family(Family::Planar10, 0, {{"a", 1}});
    CHECK(p10.multiplicities == std::vector<Rational>{6, Rational(3, 2), 6, Rational(3, 2), 4, 4, 1, 1, 1, 1});
    CHECK(family(Family::FourDim, 0, {{"r", 1}, {"s", 4}}).size() == 18);
    CHECK_THROWS_AS(family(Family::BC, 2, {{"r", 1}, {"s", 1}}), UnsupportedParams);
    CHECK_THROWS_AS(family(Family::A, 2, {{"x", 1}}), UnsupportedParams);
    CHECK_THROWS_AS(parse_family("H3"), UnsupportedParams);
    for (Family f : all_families()) CHECK(parse_family(to_string(f)) == f);
  }

  TEST_CASE("expected lambda examples") {
    CHECK(expected_lambda_sq(FamilySpec{Family::A, 4, {{"t", 1}}}) == 100);
    CHECK(expected_lambda_sq(FamilySpec{Family::F4, 0, {{"r", 1}, {"s", 1}}}) == Rational(972, 5));
    CHECK(expected_lambda_sq(FamilySpec{Family::E6, 0, {{"t", 1}}}) == 288);
    CHECK(expected_lambda_sq(FamilySpec{Family::E7, 0, {{"t", 1}}}) == 486);
    CHECK(expected_lambda_sq(FamilySpec{Family::E8, 0, {{"t", 1}}}) == 900);
    CHECK_THROWS_AS(expected_lambda_sq(FamilySpec{Family::G2, 0, {{"p", -9}, {"q", 1}}}), DegenerateParams);
  }

  TEST_CASE("lambda matches the closed form at random parameters") {
    testing::RandomRationals rnd(51);
    const std::vector<std::pair<Family, std::size_t>> cases = {
        {Family::BC, 2}, {Family::BC, 3}, {Family::B, 3}, {Family::C, 3}, {Family::D, 4},
        {Family::A, 2},  {Family::A, 5},  {Family::F4, 0}, {Family::G2, 0}, {Family::FourDim, 0},
        {Family::FourDimA1, 0}, {Family::FourDimA2, 0}, {Family::Planar6, 0}, {Family::Planar8, 0},
        {Family::Planar9, 0}, {Family::Planar10, 0},
    };
    for (const auto& [f, rank] : cases)
      for (int trial = 0; trial < 4; ++trial) {
        const FamilySpec spec = random_spec(rnd, f, rank);
        CAPTURE(to_string(f));
        const Configuration cfg = generate(spec);
        const auto rep = vee_check(cfg);
        CHECK(rep.is_vee);
        REQUIRE(rep.lambda_sq.has_value());
        CHECK(*rep.lambda_sq == expected_lambda_sq(spec));
      }
  }

  TEST_CASE("restricted family tables") {
    const Configuration bc = restricted_family(FamilySpec{Family::RestrictedBC, 0, {{"r", 1}, {"s", 1}, {"q", 1}}, {2, 2}});
    CHECK(bc.covectors == std::vector<CoVec>{{1, 0}, {0, 1}, {2, 0}, {0, 2}, {1, 1}, {1, -1}});
    CHECK(bc.multiplicities == std::vector<Rational>{2, 2, 3, 3, 4, 4});

    const Configuration a2 = restricted_family(FamilySpec{Family::RestrictedA, 0, {{"t", 3}}, {1, 1, 1}});
    CHECK(a2 == Configuration{2, family(Family::A, 2, {{"t", 3}}).covectors, {3, 3, 3}, a2.name});

    const Configuration a211 = restricted_family(FamilySpec{Family::RestrictedA, 0, {{"t", 1}}, {2, 1, 1}});
    CHECK(a211.multiplicities == std::vector<Rational>{2, 2, 1});
    const Configuration a221 = restricted_family(FamilySpec{Family::RestrictedA, 0, {{"t", 1}}, {2, 2, 1}});
    CHECK(a221.multiplicities == std::vector<Rational>{4, 2, 2});

    CHECK_THROWS_AS(restricted_family(FamilySpec{Family::RestrictedA, 0, {{"t", 1}}, {Rational(1, 2), 1}}),
                    UnsupportedParams);
    FamilySpec rational{Family::RestrictedA, 0, {{"t", 1}}, {Rational(1, 2), Rational(3, 2), 2}};
    rational.rational_partition = true;
    const Configuration ra = restricted_family(rational);
    CHECK(vee_check(ra).is_vee);
  }

  TEST_CASE("restricted BC lambda equals the parent lambda for rational partitions") {
    testing::RandomRationals rnd(52);
    for (int trial = 0; trial < 5; ++trial) {
      FamilySpec s{Family::RestrictedBC, 0, {{"r", rnd.positive()}, {"s", rnd.positive()}, {"q", rnd.positive()}}, {}};
      s.partition = {rnd.positive() + Rational(1), rnd.positive(), rnd.positive()};
      s.rational_partition = true;
      const Configuration c = restricted_family(s);
      CHECK(vee_check(c).is_vee);
      CHECK(lambda_sq(c) == expected_lambda_sq(s));
    }
  }

  TEST_CASE("four-dimensional family degenerates to D4 at r = 0") {
    const Rational s(7, 3);
    const Configuration fd = family(Family::FourDim, 0, {{"r", 0}, {"s", s}});
    const Configuration d4 = family(Family::D, 4, {{"t", s}});
    CHECK(lambda_sq(fd) == lambda_sq(d4));
    CHECK(digest(fd) == digest(d4));
  }

  TEST_CASE("unconstrained four-dimensional family") {
    CHECK(vee_check(four_dim_unconstrained(6, 1, 1, 4)).is_vee);
    CHECK_FALSE(vee_check(four_dim_unconstrained(7, 1, 1, 4)).is_vee);
    CHECK_FALSE(vee_check(four_dim_unconstrained(6, 2, 1, 4)).is_vee);
  }

  TEST_CASE("planar nine at b = 0 has the G2 lambda") {
    const Rational a(5, 2);
    const FamilySpec p9{Family::Planar9, 0, {{"a", a}, {"b", 0}}};
    CHECK(expected_lambda_sq(p9) == Rational(36) * a);
    const Configuration g2 = family(Family::G2, 0, {{"p", a}, {"q", a / Rational(3)}});
    CHECK(lambda_sq(generate(p9)) == lambda_sq(g2));
    CHECK(digest(generate(p9)) == digest(g2));
  }

  TEST_CASE("root data") {
    CHECK(root_data(Family::E8, 8).positive_roots.size() == 120);
    CHECK(root_data(Family::E7, 7).positive_roots.size() == 63);
    CHECK(root_data(Family::E6, 6).positive_roots.size() == 36);
    CHECK(root_data(Family::F4, 4).positive_roots.size() == 24);
    CHECK(root_data(Family::G2, 2).positive_roots.size() == 6);
    CHECK(root_data(Family::B, 4).positive_roots.size() == 16);
    CHECK(root_data(Family::A, 5).positive_roots.size() == 15);
    CHECK(root_data(Family::E8, 8).highest == std::vector<long>{2, 3, 4, 6, 5, 4, 3, 2});
    CHECK(root_data(Family::F4, 4).highest == std::vector<long>{2, 3, 4, 2});
    CHECK(root_data(Family::G2, 2).highest == std::vector<long>{2, 3});
    CHECK(root_data(Family::C, 3).theta_norm == 4);
    CHECK(root_data(Family::B, 3).theta_norm == 2);
    CHECK_THROWS_AS(root_data(Family::Planar6, 2), UnsupportedParams);

    for (const auto& rd : {root_data(Family::B, 3), root_data(Family::F4, 4), root_data(Family::G2, 2)}) {
      Rational theta;
      const std::size_t n = rd.rank;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          theta += Rational(rd.highest[i] * rd.highest[j]) * rd.simple_gram(i, j);
      CHECK(theta == rd.theta_norm);
      std::size_t count = 0;
      for (const auto& c : rd.census) count += c.count;
      CHECK(count == rd.positive_roots.size());
    }
  }

  TEST_CASE("census h matches the gram form") {
    testing::RandomRationals rnd(53);
    for (int trial = 0; trial < 4; ++trial) {
      const Rational p = rnd.positive(), q = rnd.positive();
      const Configuration b = family(Family::B, 3, {{"p", p}, {"q", q}});
      CHECK(gram(b) == census_h(root_data(Family::B, 3), pq(p, q)) * RatMatrix::identity(3));
      const Configuration c = family(Family::C, 4, {{"p", p}, {"q", q}});
      CHECK(gram(c) == census_h(root_data(Family::C, 4), pq(p, q)) * RatMatrix::identity(4));
      const Configuration f = family(Family::F4, 0, {{"r", q}, {"s", p}});
      CHECK(gram(f) == census_h(root_data(Family::F4, 4), pq(p, q)) * RatMatrix::identity(4));
    }
  }

  TEST_CASE("gamma tilde examples") {
    CHECK(gamma_tilde_sq(root_data(Family::B, 3), pq(1, 1)) == -2);
    CHECK(gamma_tilde_sq(root_data(Family::G2, 2), pq(1, 1)) == -3);
    CHECK(gamma_tilde_sq(root_data(Family::A, 2), {{"t", 1}}) == Rational(-3, 4));
    CHECK(gamma_tilde_sq_dual(root_data(Family::B, 3), pq(1, 1)) == -2);
    CHECK(gamma_tilde_sq_dual(root_data(Family::F4, 4), pq(1, 1)) == -6);
    CHECK(gamma_tilde_sq_dual(root_data(Family::C, 3), pq(1, 1)) == -3);
    CHECK_THROWS_AS(gamma_tilde_sq(root_data(Family::BC, 3), {{"r", 1}, {"s", 1}, {"q", 1}}), NoATable);
  }

  TEST_CASE("gamma tilde closed forms and dual formula") {
    testing::RandomRationals rnd(54);
    for (int trial = 0; trial < 5; ++trial) {
      const Rational p = rnd.positive(), q = rnd.positive();
      for (std::size_t n = 2; n <= 5; ++n) {
        const Rational nn(static_cast<long>(n));
        const RootData b = root_data(Family::B, n), c = root_data(Family::C, n);
        CHECK(gamma_tilde_sq(b, pq(p, q)) == -q * (p + (nn - Rational(2)) * q));
        CHECK(gamma_tilde_sq(c, pq(p, q)) == -p * (Rational(2) * q + (nn - Rational(2)) * p));
        CHECK(gamma_tilde_sq_dual(b, pq(p, q)) == gamma_tilde_sq(b, pq(p, q)));
        CHECK(gamma_tilde_sq_dual(c, pq(p, q)) == gamma_tilde_sq(c, pq(p, q)));
      }
      const RootData f4 = root_data(Family::F4, 4), g2 = root_data(Family::G2, 2);
      CHECK(gamma_tilde_sq(f4, pq(p, q)) == -(p + q) * (p + Rational(2) * q));
      CHECK(gamma_tilde_sq(g2, pq(p, q)) == Rational(-3, 8) * (p + q) * (p + Rational(3) * q));
      CHECK(gamma_tilde_sq_dual(f4, pq(p, q)) == gamma_tilde_sq(f4, pq(p, q)));
      CHECK(gamma_tilde_sq_dual(g2, pq(p, q)) == gamma_tilde_sq(g2, pq(p, q)));
    }
  }

  TEST_CASE("gamma tilde equals gamma for the rescaled multiplicities") {
    testing::RandomRationals rnd(55);
    for (int trial = 0; trial < 3; ++trial) {
      const Rational p = rnd.positive(), q = rnd.positive();
      for (const auto& rd : {root_data(Family::B, 3), root_data(Family::C, 3), root_data(Family::F4, 4),
                             root_data(Family::G2, 2)})
        CHECK(gamma_tilde_sq(rd, pq(p, q)) == gamma_sq_rescaled(rd, pq(p, q)));
    }
    for (const auto& rd : {root_data(Family::A, 3), root_data(Family::D, 4), root_data(Family::E6, 6)})
      CHECK(gamma_tilde_sq(rd, {{"t", 2}}) == gamma_sq_rescaled(rd, {{"t", 2}}));
  }

  TEST_CASE("gamma from lambda and h") {
    testing::RandomRationals rnd(56);
    for (int trial = 0; trial < 3; ++trial) {
      const Rational r = rnd.positive(), s = rnd.positive(), q = rnd.positive();
      for (std::size_t n = 2; n <= 4; ++n) {
        const Configuration cfg = family(Family::BC, n, {{"r", r}, {"s", s}, {"q", q}});
        const Rational expected =
            Rational(-2) * q * (r + Rational(8) * s + Rational(2) * Rational(static_cast<long>(n) - 2) * q);
        CHECK(gamma_sq_direct(cfg, root_data(Family::BC, n), {{"r", r}, {"s", s}, {"q", q}}) == expected);
      }
      const Configuration f4 = family(Family::F4, 0, {{"r", r}, {"s", s}});
      CHECK(gamma_sq_direct(f4, root_data(Family::F4, 4), pq(s, r)) ==
            -(s + Rational(2) * r) * (s + Rational(4) * r));
      const Configuration g2 = family(Family::G2, 0, {{"p", r}, {"q", s}});
      CHECK(gamma_sq_direct(g2, root_data(Family::G2, 2), pq(r, s)) ==
            Rational(-3, 8) * (r + Rational(3) * s) * (r + Rational(9) * s));
    }
  }
}
