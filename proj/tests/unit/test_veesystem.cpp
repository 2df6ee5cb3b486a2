#include <doctest.h>

#include "random.hpp"
#include "trigvee/errors.hpp"
#include "trigvee/families.hpp"
#include "trigvee/veesystem.hpp"

using namespace trigvee;

namespace {

Configuration family(Family f, std::size_t rank, std::map<std::string, Rational> params) {
  return generate(FamilySpec{f, rank, std::move(params)});
}

Configuration bc(std::size_t n, Rational r, Rational s, Rational q) {
  return family(Family::BC, n, {{"r", r}, {"s", s}, {"q", q}});
}

const Configuration kCounterexample{2, {{1, 0}, {0, 1}, {1, 2}}, {1, 1, 1}, {}};

Rational bilinear(const SymMat& g, const RatVec& u, const RatVec& v) { return dot(u, g * v); }

SymMat member_gram(const SubsystemHandle& h) {
  SymMat g(h.parent.dim, h.parent.dim);
  for (std::size_t b : h.members)
    add_rank_one(g, h.parent.covectors[b], h.parent.multiplicities[b]);
  return g;
}

std::vector<std::size_t> random_span(testing::RandomRationals& rnd, const Configuration& cfg, std::size_t k) {
  std::vector<std::size_t> span;
  for (std::size_t i = 0; i < k; ++i)
    span.push_back(static_cast<std::size_t>(rnd.integer(0, static_cast<long>(cfg.size()) - 1)));
  return span;
}

// sum over ordered pairs (i, j) of (eps^i ^ eps^j)^2 for the N+1 coordinate
// covectors restricted to the sum-zero hyperplane, in the A_N generator's coordinates.
WedgeForm sum_zero_pair_squares(std::size_t n) {
  std::vector<CoVec> eps;
  const Rational shift(1, static_cast<long>(n) + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    CoVec e(n, -shift);
    if (i < n) e[i] += 1;
    eps.push_back(e);
  }
  WedgeForm f(n * (n - 1) / 2, n * (n - 1) / 2);
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) f += wedge_square(eps[i], eps[j]);
  return Rational(2) * f;
}

}  // namespace

TEST_SUITE("veesystem") {
  TEST_CASE("BC3 is a vee-system for random multiplicities") {
    testing::RandomRationals rnd(31);
    for (int trial = 0; trial < 10; ++trial) {
      const Rational r = rnd.positive(), s = rnd.positive(), q = rnd.positive();
      const auto rep = vee_check(bc(3, r, s, q));
      CHECK(rep.is_vee);
      for (const auto& sr : rep.series) CHECK(sr.residual.is_zero());
      REQUIRE(rep.lambda_sq.has_value());
      CHECK(*rep.lambda_sq == expected_lambda_sq(FamilySpec{Family::BC, 3, {{"r", r}, {"s", s}, {"q", q}}}));
      CHECK(rep.c_delta_warnings.empty());
    }
  }

  TEST_CASE("counterexample is not a vee-system") {
    const auto rep = vee_check(kCounterexample);
    CHECK_FALSE(rep.is_vee);
    bool nonzero = false;
    for (const auto& sr : rep.series) nonzero = nonzero || !sr.residual.is_zero();
    CHECK(nonzero);
  }

  TEST_CASE("four-dimensional family at r=1, s=4") {
    const auto rep = vee_check(family(Family::FourDim, 0, {{"r", 1}, {"s", 4}}));
    CHECK(rep.is_vee);
    REQUIRE(rep.lambda_sq.has_value());
    CHECK(*rep.lambda_sq == 486);
  }

  TEST_CASE("C_delta warnings are reported, not fatal") {
    const Configuration c{2, {{1, 0}, {2, 0}, {0, 1}, {1, 1}}, {4, -1, 1, 1}, {}};
    const auto rep = vee_check(c);
    REQUIRE_FALSE(rep.c_delta_warnings.empty());
    CHECK(rep.c_delta_warnings[0].subset == std::vector<std::size_t>{0, 1});
  }

  TEST_CASE("G1 and G2 examples") {
    const Configuration b2 = bc(2, 1, 1, 1);
    RatMatrix one(1, 1);
    one(0, 0) = 392;
    CHECK(g1(b2) == one);
    one(0, 0) = Rational(144, 7);
    CHECK(g2(b2) == one);
    CHECK(g1(Configuration{2, {{1, 0}}, {3}, {}}).is_zero());
    const Configuration single{1, {{2}}, {3}, {}};
    CHECK(g1(single).is_zero());
    CHECK(g2(single).is_zero());
  }

  TEST_CASE("fast forms agree with the pairwise sums") {
    testing::RandomRationals rnd(32);
    const std::vector<Configuration> cfgs = {
        bc(3, rnd.positive(), rnd.positive(), rnd.positive()),
        family(Family::F4, 0, {{"r", 2}, {"s", 3}}),
        family(Family::A, 4, {{"t", Rational(1, 3)}}),
        kCounterexample,
        Configuration{3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}, {1, -1, 2}}, {1, 2, 3, 4, 5}, {}},
    };
    for (const auto& c : cfgs) {
      CHECK(g1(c) == g1_by_pairs(c));
      CHECK(g2(c) == g2_by_pairs(c));
    }
  }

  TEST_CASE("A_N forms against the sum-zero pair squares") {
    for (std::size_t n = 2; n <= 4; ++n) {
      const Rational t(3, 2);
      const Configuration a = family(Family::A, n, {{"t", t}});
      const WedgeForm base = sum_zero_pair_squares(n);
      const Rational np1(static_cast<long>(n) + 1);
      CHECK(g1(a) == np1 * np1 * t * t * base);
      CHECK(g2(a) == t * base);
    }
  }

  TEST_CASE("lambda_sq examples and errors") {
    CHECK(lambda_sq(family(Family::A, 2, {{"t", 1}})) == 36);
    CHECK(lambda_sq(bc(2, 1, 1, 1)) == Rational(686, 9));
    CHECK(lambda_sq(family(Family::E8, 0, {{"t", 1}})) == 900);
    CHECK_THROWS_AS(lambda_sq(Configuration{2, {{1, 0}, {0, 1}}, {1, 1}, {}}), ZeroG2);
    CHECK_THROWS_AS(lambda_sq(Configuration{3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}}, {1, 1, 1, 1}, {}}),
                    NotProportional);
    const auto rep = vee_check(Configuration{2, {{1, 0}, {0, 1}}, {1, 1}, {}});
    CHECK(rep.is_vee);
    CHECK(rep.lambda_status == LambdaStatus::ZeroG2);
    CHECK_FALSE(rep.lambda_sq.has_value());
    CHECK_FALSE(rep.proportionality_ok);
  }

  TEST_CASE("singular gram is reported") {
    CHECK_THROWS_AS(vee_check(Configuration{2, {{1, 0}}, {1}, {}}), SingularMatrix);
  }

  TEST_CASE("g2 does not depend on the positive system") {
    const std::vector<Configuration> cfgs = {
        bc(3, 1, 2, 3),
        family(Family::G2, 0, {{"p", 1}, {"q", 2}}),
        family(Family::FourDim, 0, {{"r", 1}, {"s", 4}}),
        family(Family::Planar6, 0, {{"a", 1}, {"b", Rational(1, 3)}}),
    };
    for (const auto& c : cfgs) CHECK(positive_system_probe(c, 10, 99));
  }

  TEST_CASE("lambda is invariant under unimodular changes of coordinates") {
    testing::RandomRationals rnd(33);
    const Configuration f4 = family(Family::F4, 0, {{"r", 1}, {"s", 2}});
    const Rational l = lambda_sq(f4);
    for (int k = 0; k < 5; ++k) {
      const RatMatrix t = rnd.unimodular(4);
      REQUIRE(determinant(t).abs() == 1);
      const Configuration moved = transform(f4, t);
      CHECK(lambda_sq(moved) == l);
      CHECK(vee_check(moved).is_vee);
    }
  }

  TEST_CASE("subsystem examples") {
    const Configuration b3 = bc(3, 1, 1, 1);
    const auto h = subsystem(b3, {7});
    REQUIRE(b3.covectors[7] == CoVec{1, -1, 0});
    CHECK(h.members == std::vector<std::size_t>{7});
    CHECK_FALSE(h.is_isotropic);

    const Configuration e8 = family(Family::E8, 0, {{"t", 1}});
    std::vector<std::size_t> d6;
    for (std::size_t i = 0; i < e8.size(); ++i) {
      const auto& v = e8.covectors[i];
      if (v[6].is_zero() && v[7].is_zero() && v[0].is_integer()) d6.push_back(i);
    }
    const auto hd = subsystem(e8, d6);
    CHECK(hd.members.size() == 30);
    CHECK(hd.rank() == 6);

    std::vector<std::size_t> all(b3.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    CHECK(subsystem(b3, {0, 1, 2}).members == all);
  }

  TEST_CASE("M operator examples") {
    const Configuration b3 = bc(3, 1, 2, 3);
    std::vector<std::size_t> all(b3.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    const auto full = m_operator(subsystem(b3, all));
    CHECK(full.eigenvalues == std::vector<Rational>{1});
    CHECK(full.spans_w_dual);

    const auto line = subsystem(b3, {0});
    CHECK(line.members == std::vector<std::size_t>{0, 3});
    const Rational h = Rational(1) + Rational(8) + Rational(2) * Rational(3) * Rational(2);
    CHECK(m_operator(line).eigenvalues == std::vector<Rational>{(Rational(1) + Rational(8)) / h});

    // On the whole space M is the identity, so the failure needs a proper subspace.
    CHECK(m_operator(subsystem(kCounterexample, {0, 2})).eigenvalues == std::vector<Rational>{1});
    const Configuration lifted{3, {{1, 0, 0}, {0, 1, 0}, {1, 2, 0}, {0, 0, 1}, {1, 0, 1}}, {1, 1, 1, 1, 1}, {}};
    CHECK_FALSE(vee_check(lifted).is_vee);
    CHECK_THROWS_AS(m_operator(subsystem(lifted, {0, 2})), NotEigen);
  }

  TEST_CASE("eigenspace invariants on random subsystems") {
    testing::RandomRationals rnd(34);
    const std::vector<Configuration> cfgs = {
        family(Family::E8, 0, {{"t", 1}}),
        family(Family::F4, 0, {{"r", 1}, {"s", 3}}),
        bc(4, 1, 2, 1),
    };
    for (const auto& cfg : cfgs) {
      const SymMat ga = gram(cfg);
      for (int trial = 0; trial < 8; ++trial) {
        const auto h = subsystem(cfg, random_span(rnd, cfg, static_cast<std::size_t>(rnd.integer(1, 3))));
        if (h.is_isotropic) continue;
        const auto eig = m_operator(h);
        CHECK(eig.spans_w_dual);
        const SymMat gb = member_gram(h);
        for (std::size_t i = 0; i < eig.eigenvalues.size(); ++i) {
          CHECK_FALSE(eig.eigenvalues[i].is_zero());
          for (const auto& u : eig.ambient[i])
            for (int k = 0; k < 3; ++k) {
              const RatVec v = rnd.vector(cfg.dim);
              CHECK(bilinear(gb, u, v) == eig.eigenvalues[i] * bilinear(ga, u, v));
            }
          for (std::size_t j = i + 1; j < eig.eigenvalues.size(); ++j)
            for (const auto& u : eig.ambient[i])
              for (const auto& w : eig.ambient[j]) {
                CHECK(bilinear(gb, u, w).is_zero());
                CHECK(bilinear(ga, u, w).is_zero());
              }
        }
        const Configuration alone = standalone(h);
        const auto coords = member_coordinates(h);
        for (std::size_t m = 0; m < h.members.size(); ++m) {
          const Rational mu = eig.eigenvalues[eig.member_eigenvalue[m]];
          CHECK(dual(alone, alone.covectors[m]) == scale(coords[m], mu.inverse()));
        }
        CHECK(vee_check(alone).is_vee);
      }
    }
  }

  TEST_CASE("isotropic subsystems are detected") {
    const Configuration c{2, {{1, 0}, {1, 1}, {1, -1}}, {1, 1, -1}, {}};
    const auto h = subsystem(c, {0});
    CHECK(h.is_isotropic);
  }
}
