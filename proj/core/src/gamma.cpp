#include "trigvee/gamma.hpp"

#include "trigvee/errors.hpp"
#include "trigvee/veesystem.hpp"

namespace trigvee {

namespace {

Rational need(const ClassMultiplicities& mult, const std::string& label) {
  const auto it = mult.find(label);
  if (it == mult.end()) throw NoATable("missing multiplicity for class '" + label + "'");
  return it->second;
}

}  // namespace

std::vector<Rational> a_table(const RootData& rd, const ClassMultiplicities& mult) {
  const std::size_t n = rd.rank;
  std::vector<Rational> a(n + 1);
  switch (rd.family) {
    case Family::A:
    case Family::D:
    case Family::E6:
    case Family::E7:
    case Family::E8: {
      const Rational t = need(mult, "t");
      for (auto& x : a) x = t * t;
      return a;
    }
    case Family::B:
    case Family::C: {
      const Rational p = need(mult, "p"), q = need(mult, "q");
      const Rational inner = rd.family == Family::B ? q * q : p * p;
      for (auto& x : a) x = inner;
      a[0] = a[1] = a[n] = p * q;
      return a;
    }
    case Family::F4: {
      const Rational p = need(mult, "p"), q = need(mult, "q");
      a = {p * q, p * p, p * q, q * q, p * q};
      return a;
    }
    case Family::G2: {
      const Rational p = need(mult, "p"), q = need(mult, "q");
      a = {p * p, p * q, q * q};
      return a;
    }
    default:
      throw NoATable("no a_i table for family " + to_string(rd.family));
  }
}

Rational gamma_tilde_sq(const RootData& rd, const ClassMultiplicities& mult) {
  const auto a = a_table(rd, mult);
  Rational s = a[0] * rd.theta_norm;
  for (std::size_t i = 0; i < rd.rank; ++i) {
    const Rational ni(rd.highest[i]);
    s += a[i + 1] * ni * ni * rd.simple_norms[i];
  }
  return -s / Rational(8);
}

Rational gamma_tilde_sq_dual(const RootData& rd, const ClassMultiplicities& mult) {
  const auto a = a_table(rd, mult);
  // <v^, v^> = 4 / <v, v> for the coroot v^ = 2 v / <v, v>
  Rational s = a[0] * Rational(4) / rd.theta_norm;
  for (std::size_t i = 0; i < rd.rank; ++i) {
    const Rational nbar = Rational(rd.highest[i]) * rd.simple_norms[i] / rd.theta_norm;
    s += nbar * nbar * a[i + 1] * Rational(4) / rd.simple_norms[i];
  }
  return -(rd.theta_norm * rd.theta_norm / Rational(32)) * s;
}

Rational census_h(const RootData& rd, const ClassMultiplicities& mult) {
  Rational s;
  for (const auto& e : rd.census) s += Rational(static_cast<long>(e.count)) * need(mult, e.label) * e.norm;
  return s / Rational(static_cast<long>(rd.rank));
}

Rational gamma_sq_direct(const Configuration& cfg, const RootData& rd, const ClassMultiplicities& mult) {
  const Rational h = census_h(rd, mult);
  const Rational l2 = lambda_sq(cfg);
  if (l2.is_zero()) throw DegenerateParams("lambda^2 vanishes");
  return Rational(-4) * h * h * h / l2;
}

FamilySpec spec_for_classes(const RootData& rd, const ClassMultiplicities& mult) {
  FamilySpec spec;
  spec.family = rd.family;
  spec.rank = rd.rank;
  switch (rd.family) {
    case Family::A:
    case Family::D:
    case Family::E6:
    case Family::E7:
    case Family::E8:
      spec.params = {{"t", need(mult, "t")}};
      break;
    case Family::B:
    case Family::C:
    case Family::G2:
      spec.params = {{"p", need(mult, "p")}, {"q", need(mult, "q")}};
      break;
    case Family::F4:
      spec.params = {{"r", need(mult, "q")}, {"s", need(mult, "p")}};
      break;
    case Family::BC:
      spec.params = {{"r", need(mult, "r")}, {"s", need(mult, "s")}, {"q", need(mult, "q")}};
      break;
    default:
      throw UnsupportedParams("no generator for root data of " + to_string(rd.family));
  }
  return spec;
}

Rational gamma_sq_rescaled(const RootData& rd, const ClassMultiplicities& mult) {
  ClassMultiplicities d;
  for (const auto& e : rd.census) d[e.label] = need(mult, e.label) / e.norm;
  return gamma_sq_direct(generate(spec_for_classes(rd, d)), rd, d);
}

}  // namespace trigvee
