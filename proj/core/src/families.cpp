#include "trigvee/families.hpp"

#include <algorithm>
#include <array>

#include "trigvee/errors.hpp"

namespace trigvee {

namespace {

struct FamilyInfo {
  Family family;
  const char* name;
  std::vector<std::string> params;
};

const std::vector<FamilyInfo>& table() {
  static const std::vector<FamilyInfo> t = {
      {Family::A, "A", {"t"}},
      {Family::B, "B", {"p", "q"}},
      {Family::C, "C", {"p", "q"}},
      {Family::D, "D", {"t"}},
      {Family::BC, "BC", {"r", "s", "q"}},
      {Family::E6, "E6", {"t"}},
      {Family::E7, "E7", {"t"}},
      {Family::E8, "E8", {"t"}},
      {Family::F4, "F4", {"r", "s"}},
      {Family::G2, "G2", {"p", "q"}},
      {Family::FourDim, "FourDim", {"r", "s"}},
      {Family::FourDimA1, "FourDimA1", {"r", "s"}},
      {Family::FourDimA2, "FourDimA2", {"r", "s"}},
      {Family::Planar6, "Planar6", {"a", "b"}},
      {Family::Planar8, "Planar8", {"a", "b"}},
      {Family::Planar9, "Planar9", {"a", "b"}},
      {Family::Planar10, "Planar10", {"a"}},
      {Family::RestrictedBC, "RestrictedBC", {"r", "s", "q"}},
      {Family::RestrictedA, "RestrictedA", {"t"}},
  };
  return t;
}

const FamilyInfo& info(Family f) {
  for (const auto& i : table())
    if (i.family == f) return i;
  throw UnsupportedParams("unknown family");
}

class Builder {
 public:
  explicit Builder(std::size_t dim, std::string name) {
    cfg_.dim = dim;
    cfg_.name = std::move(name);
  }
  void add(CoVec v, const Rational& c) {
    if (c.is_zero()) return;
    cfg_.covectors.push_back(std::move(v));
    cfg_.multiplicities.push_back(c);
  }
  Configuration take() { return std::move(cfg_); }

 private:
  Configuration cfg_;
};

CoVec vec(std::size_t n, std::initializer_list<std::pair<std::size_t, Rational>> entries) {
  CoVec v(n);
  for (const auto& [i, x] : entries) v.at(i) = x;
  return v;
}

Rational half(long v) { return Rational(v, 2); }

void check_rank(const FamilySpec& spec, std::size_t fixed) {
  if (spec.rank != 0 && spec.rank != fixed)
    throw UnsupportedParams(to_string(spec.family) + " has rank " + std::to_string(fixed));
}

std::string spec_name(const FamilySpec& spec) {
  std::string n = to_string(spec.family);
  if (spec.rank) n += std::to_string(spec.rank);
  std::string args;
  for (const auto& p : parameter_names(spec.family)) {
    if (!args.empty()) args += ",";
    args += p + "=" + spec.param(p).str();
  }
  if (!spec.partition.empty()) {
    args += ";m=";
    for (std::size_t i = 0; i < spec.partition.size(); ++i) args += (i ? "," : "") + spec.partition[i].str();
  }
  return n + "(" + args + ")";
}

// A_N realized on the sum-zero hyperplane with coordinates y_i = x_i - x_{N+1}.
Configuration gen_a(std::size_t n, const Rational& t, const std::string& name) {
  if (n < 1) throw UnsupportedParams("A_N needs N >= 1");
  Builder b(n, name);
  for (std::size_t i = 0; i < n + 1; ++i)
    for (std::size_t j = i + 1; j < n + 1; ++j) {
      CoVec v(n);
      v[i] = 1;
      if (j < n) v[j] = -1;
      b.add(std::move(v), t);
    }
  return b.take();
}

// e^i (r), 2e^i (s), then e^i + e^j, e^i - e^j (q) for i < j.
Configuration gen_bc(std::size_t n, const Rational& r, const Rational& s, const Rational& q, const std::string& name) {
  Builder b(n, name);
  for (std::size_t i = 0; i < n; ++i) b.add(vec(n, {{i, 1}}), r);
  for (std::size_t i = 0; i < n; ++i) b.add(vec(n, {{i, 2}}), s);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      b.add(vec(n, {{i, 1}, {j, 1}}), q);
      b.add(vec(n, {{i, 1}, {j, -1}}), q);
    }
  return b.take();
}

std::vector<CoVec> e8_roots() {
  std::vector<CoVec> roots;
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = i + 1; j < 8; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) roots.push_back(vec(8, {{i, si}, {j, sj}}));
  for (unsigned mask = 0; mask < 256; ++mask) {
    if (__builtin_popcount(mask) % 2) continue;
    CoVec v(8);
    for (std::size_t i = 0; i < 8; ++i) v[i] = (mask >> i & 1) ? half(-1) : half(1);
    roots.push_back(std::move(v));
  }
  return roots;
}

/// E-series as the roots of E8 orthogonal to the given vectors, expressed in a
/// basis of their common orthogonal complement.
Configuration gen_e(const std::vector<CoVec>& orth, const Rational& t, const std::string& name) {
  std::vector<RatVec> basis;
  if (orth.empty()) {
    for (std::size_t i = 0; i < 8; ++i) basis.push_back(unit(8, i));
  } else {
    basis = nullspace(RatMatrix::from_rows(orth, 8));
  }
  Configuration all;
  all.dim = basis.size();
  all.name = name;
  for (const auto& r : e8_roots()) {
    bool keep = true;
    for (const auto& o : orth)
      if (!dot(r, o).is_zero()) keep = false;
    if (!keep) continue;
    CoVec v(basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) v[k] = dot(r, basis[k]);
    all.covectors.push_back(std::move(v));
    all.multiplicities.push_back(t);
  }
  // Keep one root of each pair +-a; merging them would double the multiplicity.
  const CoVec f = generic_functional(all);
  Builder b(all.dim, name);
  for (std::size_t i = 0; i < all.size(); ++i)
    if (dot(f, all.covectors[i]).sign() > 0) b.add(all.covectors[i], t);
  return b.take();
}

Configuration gen_f4(const Rational& r, const Rational& s, const std::string& name) {
  Builder b(4, name);
  for (std::size_t i = 0; i < 4; ++i) b.add(vec(4, {{i, 1}}), s);
  for (unsigned mask = 0; mask < 8; ++mask) {
    CoVec v(4);
    v[0] = half(1);
    for (std::size_t i = 1; i < 4; ++i) v[i] = (mask >> (i - 1) & 1) ? half(-1) : half(1);
    b.add(std::move(v), s);
  }
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) {
      b.add(vec(4, {{i, 1}, {j, 1}}), r);
      b.add(vec(4, {{i, 1}, {j, -1}}), r);
    }
  return b.take();
}

Configuration gen_four_dim(const Rational& p, const Rational& q, const Rational& r, const Rational& s,
                           const std::string& name) {
  Builder b(4, name);
  for (std::size_t i = 0; i < 3; ++i) b.add(vec(4, {{i, 1}}), p);
  b.add(vec(4, {{3, 1}}), q);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) {
      b.add(vec(4, {{i, 1}, {j, 1}}), r);
      b.add(vec(4, {{i, 1}, {j, -1}}), r);
    }
  for (unsigned mask = 0; mask < 8; ++mask) {
    CoVec v(4);
    v[0] = half(1);
    for (std::size_t i = 1; i < 4; ++i) v[i] = (mask >> (i - 1) & 1) ? half(-1) : half(1);
    b.add(std::move(v), s);
  }
  return b.take();
}

std::pair<Rational, Rational> four_dim_pq(const Rational& r, const Rational& s) {
  const Rational den = Rational(4) * r + s;
  if (den.is_zero()) throw DegenerateParams("4r + s must be nonzero");
  return {Rational(2) * r + s, s * (s - Rational(2) * r) / den};
}

Configuration gen_restricted_bc(const FamilySpec& spec, const std::string& name) {
  const auto& m = spec.partition;
  const std::size_t n = m.size();
  const Rational r = spec.param("r"), s = spec.param("s"), q = spec.param("q");
  Builder b(n, name);
  for (std::size_t i = 0; i < n; ++i) b.add(vec(n, {{i, 1}}), r * m[i]);
  for (std::size_t i = 0; i < n; ++i) b.add(vec(n, {{i, 2}}), s * m[i] + half(1) * q * m[i] * (m[i] - Rational(1)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      b.add(vec(n, {{i, 1}, {j, 1}}), q * m[i] * m[j]);
      b.add(vec(n, {{i, 1}, {j, -1}}), q * m[i] * m[j]);
    }
  return b.take();
}

Configuration gen_restricted_a(const FamilySpec& spec, const std::string& name) {
  const auto& m = spec.partition;
  const std::size_t n = m.size() - 1;
  const Rational t = spec.param("t");
  Builder b(n, name);
  for (std::size_t i = 0; i < n + 1; ++i)
    for (std::size_t j = i + 1; j < n + 1; ++j) {
      CoVec v(n);
      v[i] = 1;
      if (j < n) v[j] = -1;
      b.add(std::move(v), t * m[i] * m[j]);
    }
  return b.take();
}

void check_partition(const FamilySpec& spec, std::size_t min_parts) {
  if (spec.partition.size() < min_parts)
    throw UnsupportedParams(to_string(spec.family) + " needs at least " + std::to_string(min_parts) +
                            " partition entries");
  for (const auto& x : spec.partition) {
    if (x.sign() <= 0 && !spec.rational_partition) throw UnsupportedParams("partition entries must be positive");
    if (!x.is_integer() && !spec.rational_partition)
      throw UnsupportedParams("partition entries must be integers unless rational partitions are enabled");
  }
  if (spec.rank != 0 && spec.rank != family_dim(spec))
    throw UnsupportedParams("rank does not match the partition length");
}

Rational bc_lambda_sq(const Rational& n, const Rational& r, const Rational& s, const Rational& q) {
  if (n < Rational(2)) throw DegenerateParams("BC_N lambda needs N >= 2");
  const Rational h = r + Rational(4) * s + Rational(2) * q * (n - Rational(1));
  const Rational den = q * (r + Rational(8) * s + Rational(2) * (n - Rational(2)) * q);
  if (den.is_zero()) throw DegenerateParams("q (r + 8s + 2(N-2)q) vanishes");
  return Rational(2) * h * h * h / den;
}

Rational bc_lambda_sq(std::size_t n, const Rational& r, const Rational& s, const Rational& q) {
  return bc_lambda_sq(Rational(static_cast<long>(n)), r, s, q);
}

Rational ratio(const Rational& num, const Rational& den, const char* what) {
  if (den.is_zero()) throw DegenerateParams(what);
  return num / den;
}

}  // namespace

std::string to_string(Family f) { return info(f).name; }

Family parse_family(const std::string& name) {
  for (const auto& i : table())
    if (name == i.name) return i.family;
  throw UnsupportedParams("unknown family '" + name + "'");
}

const std::vector<Family>& all_families() {
  static const std::vector<Family> all = [] {
    std::vector<Family> v;
    for (const auto& i : table()) v.push_back(i.family);
    return v;
  }();
  return all;
}

const std::vector<std::string>& parameter_names(Family f) { return info(f).params; }

Rational FamilySpec::param(const std::string& name) const {
  const auto& names = parameter_names(family);
  if (std::find(names.begin(), names.end(), name) == names.end())
    throw UnsupportedParams(to_string(family) + " has no parameter '" + name + "'");
  const auto it = params.find(name);
  if (it == params.end()) throw UnsupportedParams(to_string(family) + " needs parameter '" + name + "'");
  return it->second;
}

std::size_t family_dim(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::E6: return 6;
    case Family::E7: return 7;
    case Family::E8: return 8;
    case Family::F4:
    case Family::FourDim: return 4;
    case Family::FourDimA1:
    case Family::FourDimA2: return 3;
    case Family::G2:
    case Family::Planar6:
    case Family::Planar8:
    case Family::Planar9:
    case Family::Planar10: return 2;
    case Family::RestrictedBC: return spec.partition.size();
    case Family::RestrictedA: return spec.partition.empty() ? 0 : spec.partition.size() - 1;
    default: return spec.rank;
  }
}

Configuration four_dim_unconstrained(const Rational& p, const Rational& q, const Rational& r, const Rational& s) {
  return gen_four_dim(p, q, r, s, "FourDim(p=" + p.str() + ",q=" + q.str() + ",r=" + r.str() + ",s=" + s.str() + ")");
}

Configuration restricted_family(const FamilySpec& spec) {
  const std::string name = spec_name(spec);
  switch (spec.family) {
    case Family::RestrictedBC:
      check_partition(spec, 1);
      return gen_restricted_bc(spec, name);
    case Family::RestrictedA:
      check_partition(spec, 2);
      return gen_restricted_a(spec, name);
    default:
      throw UnsupportedParams("restricted_family needs RestrictedBC or RestrictedA");
  }
}

Configuration generate(const FamilySpec& spec) {
  for (const auto& [k, v] : spec.params) spec.param(k);  // rejects unknown names
  const std::string name = spec_name(spec);
  const std::size_t n = spec.rank;
  switch (spec.family) {
    case Family::A:
      return gen_a(n, spec.param("t"), name);
    case Family::B:
      if (n < 2) throw UnsupportedParams("B_N needs N >= 2");
      return gen_bc(n, spec.param("p"), Rational(0), spec.param("q"), name);
    case Family::C:
      if (n < 2) throw UnsupportedParams("C_N needs N >= 2");
      return gen_bc(n, Rational(0), spec.param("q"), spec.param("p"), name);
    case Family::D:
      if (n < 3) throw UnsupportedParams("D_N needs N >= 3");
      return gen_bc(n, Rational(0), Rational(0), spec.param("t"), name);
    case Family::BC:
      if (n < 1) throw UnsupportedParams("BC_N needs N >= 1");
      return gen_bc(n, spec.param("r"), spec.param("s"), spec.param("q"), name);
    case Family::E8:
      check_rank(spec, 8);
      return gen_e({}, spec.param("t"), name);
    case Family::E7:
      check_rank(spec, 7);
      return gen_e({vec(8, {{6, 1}, {7, 1}})}, spec.param("t"), name);
    case Family::E6:
      check_rank(spec, 6);
      return gen_e({vec(8, {{6, 1}, {7, 1}}), vec(8, {{5, 1}, {6, 1}})}, spec.param("t"), name);
    case Family::F4:
      check_rank(spec, 4);
      return gen_f4(spec.param("r"), spec.param("s"), name);
    case Family::G2: {
      check_rank(spec, 2);
      const Rational p = spec.param("p"), q = spec.param("q");
      Builder b(2, name);
      b.add(vec(2, {{0, 1}, {1, -1}}), p);
      b.add(vec(2, {{0, 1}}), p);
      b.add(vec(2, {{1, 1}}), p);
      b.add(vec(2, {{0, 2}, {1, -1}}), q);
      b.add(vec(2, {{0, 1}, {1, 1}}), q);
      b.add(vec(2, {{0, 1}, {1, -2}}), q);
      return b.take();
    }
    case Family::FourDim: {
      check_rank(spec, 4);
      const Rational r = spec.param("r"), s = spec.param("s");
      const auto [p, q] = four_dim_pq(r, s);
      return gen_four_dim(p, q, r, s, name);
    }
    case Family::FourDimA1: {
      check_rank(spec, 3);
      const Rational r = spec.param("r"), s = spec.param("s");
      const auto [p, q] = four_dim_pq(r, s);
      Builder b(3, name);
      b.add(vec(3, {{0, 2}}), r);
      b.add(vec(3, {{0, 1}}), Rational(2) * p);
      b.add(vec(3, {{1, 1}}), p);
      b.add(vec(3, {{2, 1}}), q);
      b.add(vec(3, {{0, 1}, {1, 1}}), Rational(2) * r);
      b.add(vec(3, {{0, 1}, {1, -1}}), Rational(2) * r);
      b.add(vec(3, {{1, half(1)}, {2, half(1)}}), Rational(2) * s);
      b.add(vec(3, {{1, half(1)}, {2, half(-1)}}), Rational(2) * s);
      for (int s2 : {1, -1})
        for (int s3 : {1, -1}) b.add(vec(3, {{0, 1}, {1, half(s2)}, {2, half(s3)}}), s);
      return b.take();
    }
    case Family::FourDimA2: {
      check_rank(spec, 3);
      const Rational r = spec.param("r"), s = spec.param("s");
      const auto [p, q] = four_dim_pq(r, s);
      Builder b(3, name);
      for (std::size_t i = 0; i < 3; ++i) b.add(vec(3, {{i, 1}}), p + s);
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j) b.add(vec(3, {{i, 1}, {j, 1}}), r + s);
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j) b.add(vec(3, {{i, 1}, {j, -1}}), r);
      b.add(vec(3, {{0, 1}, {1, 1}, {2, 1}}), q + s);
      return b.take();
    }
    case Family::Planar6: {
      check_rank(spec, 2);
      const Rational a = spec.param("a"), bb = spec.param("b");
      const Rational last = ratio(Rational(2) * a * bb, Rational(4) * a - Rational(3) * bb, "4a - 3b must be nonzero");
      Builder b(2, name);
      b.add(vec(2, {{0, 1}}), Rational(4) * a);
      b.add(vec(2, {{0, 2}}), a);
      b.add(vec(2, {{1, 1}}), Rational(2) * a);
      b.add(vec(2, {{0, 1}, {1, 1}}), Rational(2) * a);
      b.add(vec(2, {{0, 1}, {1, -1}}), Rational(2) * (a - bb));
      b.add(vec(2, {{0, 2}, {1, 1}}), last);
      return b.take();
    }
    case Family::Planar8: {
      check_rank(spec, 2);
      const Rational a = spec.param("a"), bb = spec.param("b");
      Builder b(2, name);
      b.add(vec(2, {{0, 1}}), Rational(2) * a);
      b.add(vec(2, {{0, 2}}), a / Rational(2) - bb / Rational(4));
      b.add(vec(2, {{1, 1}}), Rational(2) * bb);
      b.add(vec(2, {{1, 2}}), a);
      b.add(vec(2, {{0, 1}, {1, 1}}), bb);
      b.add(vec(2, {{0, 1}, {1, -1}}), bb);
      b.add(vec(2, {{0, 1}, {1, 2}}), a - bb / Rational(2));
      b.add(vec(2, {{0, 1}, {1, -2}}), a - bb / Rational(2));
      return b.take();
    }
    case Family::Planar9: {
      check_rank(spec, 2);
      const Rational a = spec.param("a"), bb = spec.param("b");
      Builder b(2, name);
      b.add(vec(2, {{0, 1}}), a);
      b.add(vec(2, {{0, 2}}), bb);
      b.add(vec(2, {{1, 1}}), a / Rational(3));
      b.add(vec(2, {{0, 1}, {1, 1}}), bb);
      b.add(vec(2, {{0, 1}, {1, -1}}), bb);
      b.add(vec(2, {{0, half(3)}, {1, half(1)}}), a / Rational(3));
      b.add(vec(2, {{0, half(3)}, {1, half(-1)}}), a / Rational(3));
      b.add(vec(2, {{0, half(1)}, {1, half(1)}}), a);
      b.add(vec(2, {{0, half(1)}, {1, half(-1)}}), a);
      return b.take();
    }
    case Family::Planar10: {
      check_rank(spec, 2);
      const Rational a = spec.param("a");
      Builder b(2, name);
      b.add(vec(2, {{0, 1}}), Rational(6) * a);
      b.add(vec(2, {{0, 2}}), Rational(3, 2) * a);
      b.add(vec(2, {{1, 1}}), Rational(6) * a);
      b.add(vec(2, {{1, 2}}), Rational(3, 2) * a);
      b.add(vec(2, {{0, 1}, {1, 1}}), Rational(4) * a);
      b.add(vec(2, {{0, 1}, {1, -1}}), Rational(4) * a);
      b.add(vec(2, {{0, 1}, {1, 2}}), a);
      b.add(vec(2, {{0, 1}, {1, -2}}), a);
      b.add(vec(2, {{0, 2}, {1, 1}}), a);
      b.add(vec(2, {{0, 2}, {1, -1}}), a);
      return b.take();
    }
    case Family::RestrictedBC:
    case Family::RestrictedA:
      return restricted_family(spec);
  }
  throw UnsupportedParams("unhandled family");
}

Rational expected_lambda_sq(const FamilySpec& spec) {
  const std::size_t n = spec.rank;
  auto four_dim = [&](const Rational& r, const Rational& s) {
    return ratio(Rational(108) * (Rational(2) * r + s) * (Rational(2) * r + s), Rational(4) * r + s,
                 "4r + s must be nonzero");
  };
  switch (spec.family) {
    case Family::A:
      if (n < 1) throw DegenerateParams("A_N needs N >= 1");
      return Rational(4) * Rational(static_cast<long>((n + 1) * (n + 1))) * spec.param("t");
    case Family::B:
      return bc_lambda_sq(n, spec.param("p"), Rational(0), spec.param("q"));
    case Family::C:
      return bc_lambda_sq(n, Rational(0), spec.param("q"), spec.param("p"));
    case Family::D: {
      if (n < 3) throw DegenerateParams("D_N needs N >= 3");
      const Rational m(static_cast<long>(n) - 1);
      return Rational(8) * spec.param("t") * m * m * m / Rational(static_cast<long>(n) - 2);
    }
    case Family::BC:
      return bc_lambda_sq(n, spec.param("r"), spec.param("s"), spec.param("q"));
    case Family::E6: return Rational(288) * spec.param("t");
    case Family::E7: return Rational(486) * spec.param("t");
    case Family::E8: return Rational(900) * spec.param("t");
    case Family::F4:
    case Family::FourDim:
    case Family::FourDimA1:
    case Family::FourDimA2:
      return four_dim(spec.param("r"), spec.param("s"));
    case Family::G2: {
      const Rational p = spec.param("p"), q = spec.param("q");
      return ratio(Rational(36) * (p + Rational(3) * q) * (p + Rational(3) * q), p + Rational(9) * q,
                   "p + 9q must be nonzero");
    }
    case Family::Planar6: {
      const Rational a = spec.param("a"), b = spec.param("b");
      const Rational u = Rational(2) * a - b;
      return ratio(Rational(108) * u * u, Rational(4) * a - Rational(3) * b, "4a - 3b must be nonzero");
    }
    case Family::Planar8: {
      const Rational a = spec.param("a"), b = spec.param("b");
      return ratio(Rational(216) * a * a, Rational(4) * a - b, "4a - b must be nonzero");
    }
    case Family::Planar9: {
      const Rational a = spec.param("a"), b = spec.param("b");
      const Rational u = a + Rational(2) * b;
      return ratio(Rational(36) * u * u, a + Rational(4) * b, "a + 4b must be nonzero");
    }
    case Family::Planar10: return Rational(225) * spec.param("a");
    case Family::RestrictedBC: {
      check_partition(spec, 2);
      Rational total;
      for (const auto& m : spec.partition) total += m;
      return bc_lambda_sq(total, spec.param("r"), spec.param("s"), spec.param("q"));
    }
    case Family::RestrictedA: {
      check_partition(spec, 2);
      Rational total;
      for (const auto& m : spec.partition) total += m;
      return Rational(4) * total * total * spec.param("t");
    }
  }
  throw UnsupportedParams("unhandled family");
}

}  // namespace trigvee
