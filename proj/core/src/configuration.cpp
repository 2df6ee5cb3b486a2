#include "trigvee/configuration.hpp"

#include <map>

#include "trigvee/errors.hpp"

namespace trigvee {

void Configuration::validate() const {
  if (dim == 0) throw InvalidConfiguration("dimension must be positive");
  if (covectors.size() != multiplicities.size())
    throw InvalidConfiguration("covector and multiplicity counts differ");
  for (std::size_t i = 0; i < covectors.size(); ++i) {
    if (covectors[i].size() != dim)
      throw InvalidConfiguration("covector " + std::to_string(i) + " has wrong length");
    if (is_zero(covectors[i])) throw InvalidConfiguration("covector " + std::to_string(i) + " is zero");
  }
}

SymMat gram(const Configuration& cfg) {
  const std::size_t n = cfg.dim;
  SymMat g(n, n);
  for (std::size_t k = 0; k < cfg.size(); ++k) {
    const CoVec& a = cfg.covectors[k];
    const Rational& c = cfg.multiplicities[k];
    if (c.is_zero()) continue;
    for (std::size_t i = 0; i < n; ++i) {
      if (a[i].is_zero()) continue;
      const Rational ca = c * a[i];
      for (std::size_t j = i; j < n; ++j)
        if (!a[j].is_zero()) g(i, j) += ca * a[j];
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) g(i, j) = g(j, i);
  return g;
}

RatVec dual(const SymMat& gram_inverse, const CoVec& gamma) { return gram_inverse * gamma; }

RatVec dual(const Configuration& cfg, const CoVec& gamma) {
  if (gamma.size() != cfg.dim) throw DimensionMismatch("dual: covector length differs from dim");
  return dual(invert(gram(cfg)), gamma);
}

RatMatrix pairing_matrix(const Configuration& cfg, const SymMat& gram_inverse) {
  const std::size_t m = cfg.size();
  std::vector<RatVec> duals;
  duals.reserve(m);
  for (const auto& a : cfg.covectors) duals.push_back(gram_inverse * a);
  RatMatrix k(m, m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a; b < m; ++b) {
      k(a, b) = dot(cfg.covectors[a], duals[b]);
      k(b, a) = k(a, b);
    }
  return k;
}

std::optional<Rational> proportionality(const CoVec& a, const CoVec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("proportionality: length mismatch");
  std::size_t p = 0;
  while (p < b.size() && b[p].is_zero()) ++p;
  if (p == b.size()) return std::nullopt;
  const Rational k = a[p] / b[p];
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != k * b[i]) return std::nullopt;
  return k;
}

namespace {

/// Scale-free key of the line through a: a divided by its first nonzero entry.
CoVec line_key(const CoVec& a) {
  std::size_t p = 0;
  while (p < a.size() && a[p].is_zero()) ++p;
  if (p == a.size()) return a;
  return scale(a, a[p].inverse());
}

}  // namespace

std::vector<CollinearClass> collinear_classes(const Configuration& cfg) {
  std::map<CoVec, std::size_t> by_line;
  std::vector<CollinearClass> classes;
  for (std::size_t i = 0; i < cfg.size(); ++i) {
    CoVec key = line_key(cfg.covectors[i]);
    auto [it, inserted] = by_line.try_emplace(std::move(key), classes.size());
    if (inserted) {
      classes.push_back({i, {{i, Rational(1)}}});
    } else {
      CollinearClass& cls = classes[it->second];
      const auto k = proportionality(cfg.covectors[i], cfg.covectors[cls.anchor]);
      cls.members.push_back({i, *k});
    }
  }
  return classes;
}

Rational c_delta(const Configuration& cfg, const std::vector<std::size_t>& subset, std::size_t anchor) {
  if (anchor >= cfg.size()) throw InvalidConfiguration("c_delta: anchor out of range");
  Rational sum;
  for (std::size_t g : subset) {
    if (g >= cfg.size()) throw InvalidConfiguration("c_delta: index out of range");
    const auto k = proportionality(cfg.covectors[g], cfg.covectors[anchor]);
    if (!k) throw MixedClass("c_delta: covector " + std::to_string(g) + " is not collinear with the anchor");
    sum += cfg.multiplicities[g] * *k * *k;
  }
  return sum;
}

namespace {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

CoVec generic_functional(const Configuration& cfg) {
  for (const auto& a : cfg.covectors)
    if (is_zero(a)) throw NoGenericFunctional("zero covector admits no generic functional");
  // A nonzero covector vanishes on (1, e, e^2, ...) for finitely many e only.
  for (long p = 2;; ++p) {
    if (!is_prime(p)) continue;
    CoVec f(cfg.dim);
    Rational e(1);
    for (std::size_t i = 0; i < cfg.dim; ++i) {
      f[i] = e;
      e /= Rational(p);
    }
    bool generic = true;
    for (const auto& a : cfg.covectors)
      if (dot(f, a).is_zero()) {
        generic = false;
        break;
      }
    if (generic) return f;
  }
}

namespace {

PositiveNormalization merge_impl(const Configuration& cfg, const CoVec* functional) {
  PositiveNormalization out;
  out.cfg.dim = cfg.dim;
  out.cfg.name = cfg.name;
  if (functional) out.functional = *functional;

  std::map<CoVec, std::size_t> slot;
  std::vector<CoVec> covs;
  std::vector<Rational> mults;
  std::vector<std::vector<std::size_t>> origin;
  for (std::size_t i = 0; i < cfg.size(); ++i) {
    CoVec a = cfg.covectors[i];
    if (functional && dot(*functional, a).sign() < 0) {
      for (auto& x : a) x = -x;
      out.flipped.push_back(i);
    }
    auto [it, inserted] = slot.try_emplace(a, covs.size());
    if (inserted) {
      covs.push_back(std::move(a));
      mults.push_back(cfg.multiplicities[i]);
      origin.push_back({i});
    } else {
      mults[it->second] += cfg.multiplicities[i];
      origin[it->second].push_back(i);
    }
  }
  for (std::size_t k = 0; k < covs.size(); ++k) {
    if (mults[k].is_zero()) {
      out.zero_multiplicity_dropped = true;
      continue;
    }
    out.cfg.covectors.push_back(std::move(covs[k]));
    out.cfg.multiplicities.push_back(mults[k]);
    out.origin.push_back(std::move(origin[k]));
  }
  return out;
}

}  // namespace

PositiveNormalization normalize_positive(const Configuration& cfg, const std::optional<CoVec>& functional) {
  CoVec f = functional ? *functional : generic_functional(cfg);
  if (f.size() != cfg.dim) throw DimensionMismatch("normalize_positive: functional length differs from dim");
  for (const auto& a : cfg.covectors)
    if (dot(f, a).is_zero()) throw NoGenericFunctional("functional vanishes on a covector");
  return merge_impl(cfg, &f);
}

PositiveNormalization merge_duplicates(const Configuration& cfg) { return merge_impl(cfg, nullptr); }

Configuration transform(const Configuration& cfg, const RatMatrix& t) {
  if (t.rows() != cfg.dim) throw DimensionMismatch("transform: matrix rows differ from dim");
  Configuration out;
  out.dim = t.cols();
  out.name = cfg.name;
  out.multiplicities = cfg.multiplicities;
  const RatMatrix tt = t.transpose();
  for (const auto& a : cfg.covectors) out.covectors.push_back(tt * a);
  return out;
}

}  // namespace trigvee
