#include "trigvee/restriction.hpp"

#include "trigvee/errors.hpp"

namespace trigvee {

std::vector<RatVec> kernel_basis(const std::vector<CoVec>& covectors, std::size_t dim) {
  if (covectors.empty()) {
    std::vector<RatVec> all;
    for (std::size_t i = 0; i < dim; ++i) all.push_back(unit(dim, i));
    return all;
  }
  return nullspace(RatMatrix::from_rows(covectors, dim));
}

RestrictionResult restrict(const Configuration& cfg, const SubsystemHandle& sub, const RestrictOptions& opts) {
  cfg.validate();
  if (opts.verify_parent) {
    VeeOptions vo;
    const VeeReport rep = vee_check(cfg, vo);
    if (!rep.is_vee || !rep.lambda_sq)
      throw InvalidConfiguration("restrict: parent is not a vee-system with a defined lambda");
  }

  for (std::size_t a : sub.basis) {
    Rational c;
    for (std::size_t g = 0; g < cfg.size(); ++g) {
      const auto k = proportionality(cfg.covectors[g], cfg.covectors[a]);
      if (k) c += cfg.multiplicities[g] * *k * *k;
    }
    if (c.is_zero()) throw CDeltaZero("restrict: C_delta vanishes for covector " + std::to_string(a));
  }

  std::vector<CoVec> span;
  for (std::size_t a : sub.basis) span.push_back(cfg.covectors[a]);
  RestrictionResult out;
  out.basis = kernel_basis(span, cfg.dim);
  const std::size_t d = out.basis.size();
  if (d == 0) throw EmptyChild("restrict: the kernel is zero-dimensional");

  Configuration raw;
  raw.dim = d;
  raw.name = cfg.name.empty() ? "restriction" : cfg.name + "/restriction";
  std::vector<std::size_t> parent_of;
  for (std::size_t a = 0; a < cfg.size(); ++a) {
    CoVec v(d);
    for (std::size_t k = 0; k < d; ++k) v[k] = dot(cfg.covectors[a], out.basis[k]);
    if (is_zero(v)) continue;
    raw.covectors.push_back(std::move(v));
    raw.multiplicities.push_back(cfg.multiplicities[a]);
    parent_of.push_back(a);
  }
  if (raw.empty()) throw EmptyChild("restrict: every covector vanishes on the kernel");

  if (determinant(gram(raw)).is_zero())
    throw DegenerateRestrictedGram("restrict: Gram form is degenerate on the kernel");

  PositiveNormalization norm = normalize_positive(raw);
  if (norm.cfg.empty()) throw EmptyChild("restrict: all merged multiplicities vanish");
  out.child = std::move(norm.cfg);
  out.zero_multiplicity_dropped = norm.zero_multiplicity_dropped;
  for (const auto& src : norm.origin) {
    std::vector<std::size_t> parents;
    for (std::size_t i : src) parents.push_back(parent_of[i]);
    out.provenance.push_back(std::move(parents));
  }
  return out;
}

RestrictionResult restrict(const Configuration& cfg, const std::vector<std::size_t>& kernel_of,
                           const RestrictOptions& opts) {
  return restrict(cfg, subsystem(cfg, kernel_of), opts);
}

}  // namespace trigvee
