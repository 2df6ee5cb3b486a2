#include "trigvee/veesystem.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "trigvee/errors.hpp"

namespace trigvee {

namespace {

void c_delta_scan(const Configuration& cfg, const VeeOptions& opts, VeeReport& report) {
  for (const auto& cls : collinear_classes(cfg)) {
    const std::size_t k = cls.members.size();
    std::vector<Rational> weight(k);
    for (std::size_t i = 0; i < k; ++i)
      weight[i] = cfg.multiplicities[cls.members[i].index] * cls.members[i].ratio * cls.members[i].ratio;
    if (k > opts.max_subset_class) {
      Rational total;
      for (const auto& w : weight) total += w;
      if (total.is_zero()) {
        std::vector<std::size_t> all;
        for (const auto& m : cls.members) all.push_back(m.index);
        report.c_delta_warnings.push_back({cls.anchor, all});
      }
      continue;
    }
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
      Rational total;
      std::vector<std::size_t> subset;
      for (std::size_t i = 0; i < k; ++i)
        if (mask >> i & 1) {
          total += weight[i];
          subset.push_back(cls.members[i].index);
        }
      if (total.is_zero()) report.c_delta_warnings.push_back({cls.anchor, std::move(subset)});
    }
  }
}

/// T[p](i, k) = sum c_a a_p a_i a_k.
std::vector<RatMatrix> cubic_tensor(const Configuration& cfg) {
  const std::size_t n = cfg.dim;
  std::vector<RatMatrix> t(n, RatMatrix(n, n));
  for (std::size_t a = 0; a < cfg.size(); ++a) {
    const CoVec& v = cfg.covectors[a];
    const Rational& c = cfg.multiplicities[a];
    for (std::size_t p = 0; p < n; ++p) {
      if (v[p].is_zero()) continue;
      const Rational cp = c * v[p];
      for (std::size_t i = 0; i < n; ++i) {
        if (v[i].is_zero()) continue;
        const Rational cpi = cp * v[i];
        for (std::size_t k = i; k < n; ++k)
          if (!v[k].is_zero()) t[p](i, k) += cpi * v[k];
      }
    }
  }
  for (auto& m : t)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < i; ++k) m(i, k) = m(k, i);
  return t;
}

WedgeForm g2_from_tensor(const Configuration& cfg, const SymMat& ginv) {
  const std::size_t n = cfg.dim;
  const WedgeIndex idx(n);
  const auto t = cubic_tensor(cfg);
  std::vector<RatMatrix> v(n, RatMatrix(n, n));
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      if (!ginv(p, q).is_zero()) v[p] += t[q] * ginv(p, q);
  // U(ik, jl) = sum_p T[p](i,k) V[p](j,l); G2(ij, kl) = 8 (U(ik, jl) - U(il, jk)).
  auto u = [&](std::size_t i, std::size_t k, std::size_t j, std::size_t l) {
    Rational s;
    for (std::size_t p = 0; p < n; ++p)
      if (!t[p](i, k).is_zero()) s += t[p](i, k) * v[p](j, l);
    return s;
  };
  WedgeForm f(idx.size(), idx.size());
  for (std::size_t a = 0; a < idx.size(); ++a) {
    const auto [i, j] = idx.pair(a);
    for (std::size_t b = a; b < idx.size(); ++b) {
      const auto [k, l] = idx.pair(b);
      f(a, b) = Rational(8) * (u(i, k, j, l) - u(i, l, j, k));
      f(b, a) = f(a, b);
    }
  }
  return f;
}

}  // namespace

VeeReport vee_check(const Configuration& cfg, const VeeOptions& opts) {
  cfg.validate();
  const SymMat ginv = invert(gram(cfg));
  const RatMatrix k = pairing_matrix(cfg, ginv);
  VeeReport report;
  report.is_vee = true;
  for (std::size_t a = 0; a < cfg.size(); ++a) {
    SeriesDecomposition dec = alpha_series(cfg, a, opts.series);
    for (std::size_t s = 0; s < dec.series.size(); ++s) {
      SeriesResidual r{a, std::move(dec.series[s]), std::move(dec.signs[s]), Rational(0)};
      for (std::size_t m = 0; m < r.members.size(); ++m) {
        const std::size_t b = r.members[m];
        const Rational term = cfg.multiplicities[b] * k(a, b);
        if (r.signs[m] > 0)
          r.residual += term;
        else
          r.residual -= term;
      }
      if (!r.residual.is_zero()) report.is_vee = false;
      report.series.push_back(std::move(r));
    }
  }
  c_delta_scan(cfg, opts, report);

  if (opts.compute_lambda) {
    const WedgeForm f1 = g1(cfg);
    try {
      report.lambda_sq = lambda_sq(f1, g2(cfg));
      report.proportionality_ok = true;
      report.lambda_status = LambdaStatus::Ok;
    } catch (const ZeroG2&) {
      // G1 = (lambda^2/4) * 0 can only hold when G1 vanishes as well
      report.lambda_status = LambdaStatus::ZeroG2;
      report.proportionality_ok = f1.is_zero();
    } catch (const NotProportional&) {
      report.lambda_status = LambdaStatus::NotProportional;
    }
  }
  return report;
}

WedgeForm g1(const Configuration& cfg) {
  // sum_{a,b} c_a c_b (a^b)(e_i^e_j)(a^b)(e_k^e_l) = 8 (G_ik G_jl - G_il G_jk)
  const SymMat g = gram(cfg);
  const WedgeIndex idx(cfg.dim);
  WedgeForm f(idx.size(), idx.size());
  for (std::size_t a = 0; a < idx.size(); ++a) {
    const auto [i, j] = idx.pair(a);
    for (std::size_t b = a; b < idx.size(); ++b) {
      const auto [k, l] = idx.pair(b);
      f(a, b) = Rational(8) * (g(i, k) * g(j, l) - g(i, l) * g(j, k));
      f(b, a) = f(a, b);
    }
  }
  return f;
}

WedgeForm g2_for_positive_system(const Configuration& cfg) {
  return g2_from_tensor(cfg, invert(gram(cfg)));
}

WedgeForm g2(const Configuration& cfg) { return g2_for_positive_system(normalize_positive(cfg).cfg); }

WedgeForm g1_by_pairs(const Configuration& cfg) {
  const WedgeIndex idx(cfg.dim);
  WedgeForm f(idx.size(), idx.size());
  for (std::size_t a = 0; a < cfg.size(); ++a)
    for (std::size_t b = 0; b < cfg.size(); ++b)
      add_rank_one(f, wedge_vector(cfg.covectors[a], cfg.covectors[b]),
                   cfg.multiplicities[a] * cfg.multiplicities[b]);
  return f;
}

WedgeForm g2_by_pairs(const Configuration& cfg) {
  const Configuration pos = normalize_positive(cfg).cfg;
  const RatMatrix k = pairing_matrix(pos, invert(gram(pos)));
  const WedgeIndex idx(pos.dim);
  WedgeForm f(idx.size(), idx.size());
  for (std::size_t a = 0; a < pos.size(); ++a)
    for (std::size_t b = 0; b < pos.size(); ++b)
      add_rank_one(f, wedge_vector(pos.covectors[a], pos.covectors[b]),
                   pos.multiplicities[a] * pos.multiplicities[b] * k(a, b));
  return f;
}

Rational lambda_sq(const WedgeForm& form1, const WedgeForm& form2) {
  if (form1.rows() != form2.rows() || form1.cols() != form2.cols())
    throw DimensionMismatch("lambda_sq: form shapes differ");
  std::optional<Rational> ratio;
  for (std::size_t a = 0; a < form2.rows() && !ratio; ++a)
    for (std::size_t b = 0; b < form2.cols(); ++b)
      if (!form2(a, b).is_zero()) {
        ratio = form1(a, b) / form2(a, b);
        break;
      }
  if (!ratio) throw ZeroG2("G2 vanishes identically");
  for (std::size_t a = 0; a < form2.rows(); ++a)
    for (std::size_t b = 0; b < form2.cols(); ++b)
      if (form1(a, b) != *ratio * form2(a, b)) throw NotProportional("G1 and G2 are not proportional");
  return Rational(4) * *ratio;
}

Rational lambda_sq(const Configuration& cfg) { return lambda_sq(g1(cfg), g2(cfg)); }

bool positive_system_probe(const Configuration& cfg, int flips, std::uint64_t seed) {
  const Configuration base = normalize_positive(cfg).cfg;
  const SymMat ginv = invert(gram(base));
  const WedgeForm ref = g2_from_tensor(base, ginv);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coord(-1000, 1000);
  for (int f = 0; f < flips; ++f) {
    CoVec functional(base.dim);
    bool generic = false;
    while (!generic) {
      for (auto& x : functional) x = Rational(coord(rng));
      generic = true;
      for (const auto& a : base.covectors) generic = generic && !dot(functional, a).is_zero();
    }
    // Positive system of a random half-space: whole collinearity classes change sign.
    const Configuration other = normalize_positive(base, functional).cfg;
    if (g2_from_tensor(other, ginv) != ref) return false;
  }
  return true;
}

SubsystemHandle subsystem(const Configuration& cfg, const std::vector<std::size_t>& span_indices) {
  return subsystem(cfg, span_indices, pairing_matrix(cfg, invert(gram(cfg))));
}

SubsystemHandle subsystem(const Configuration& cfg, const std::vector<std::size_t>& span_indices,
                          const RatMatrix& pairing) {
  if (span_indices.empty()) throw InvalidConfiguration("subsystem: empty span");
  SubsystemHandle h;
  h.parent = cfg;
  RowSpace rs(cfg.dim);
  for (std::size_t i : span_indices) {
    if (i >= cfg.size()) throw InvalidConfiguration("subsystem: index out of range");
    if (rs.add(cfg.covectors[i])) h.basis.push_back(i);
  }
  for (std::size_t i = 0; i < cfg.size(); ++i)
    if (rs.contains(cfg.covectors[i])) h.members.push_back(i);
  const std::size_t r = h.basis.size();
  h.w_gram = SymMat(r, r);
  for (std::size_t b : h.members)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t l = j; l < r; ++l)
        h.w_gram(j, l) += cfg.multiplicities[b] * pairing(b, h.basis[j]) * pairing(b, h.basis[l]);
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t l = 0; l < j; ++l) h.w_gram(j, l) = h.w_gram(l, j);
  h.is_isotropic = determinant(h.w_gram).is_zero();
  return h;
}

Configuration standalone(const SubsystemHandle& sub, const RatMatrix& pairing) {
  Configuration out;
  out.dim = sub.rank();
  out.name = sub.parent.name.empty() ? "subsystem" : sub.parent.name + "/subsystem";
  for (std::size_t b : sub.members) {
    CoVec v(sub.rank());
    for (std::size_t j = 0; j < sub.rank(); ++j) v[j] = pairing(b, sub.basis[j]);
    out.covectors.push_back(std::move(v));
    out.multiplicities.push_back(sub.parent.multiplicities[b]);
  }
  return out;
}

Configuration standalone(const SubsystemHandle& sub) {
  return standalone(sub, pairing_matrix(sub.parent, invert(gram(sub.parent))));
}

std::vector<RatVec> member_coordinates(const SubsystemHandle& sub) {
  std::vector<RatVec> basis;
  for (std::size_t j : sub.basis) basis.push_back(sub.parent.covectors[j]);
  std::vector<RatVec> coords;
  for (std::size_t b : sub.members) coords.push_back(*coordinates_in(basis, sub.parent.covectors[b]));
  return coords;
}

EigenDecomposition m_operator(const SubsystemHandle& sub) {
  const Configuration& cfg = sub.parent;
  const SymMat ginv = invert(gram(cfg));
  const RatMatrix k = pairing_matrix(cfg, ginv);
  const std::size_t r = sub.rank();
  const auto x = member_coordinates(sub);

  EigenDecomposition out;
  std::map<Rational, std::size_t> slot;
  std::vector<RowSpace> spaces;
  for (std::size_t m = 0; m < sub.members.size(); ++m) {
    const std::size_t b = sub.members[m];
    // M(b^v) = sum_g c_g g(b^v) g^v, in coordinates over S_j^v
    RatVec image(r);
    for (std::size_t g = 0; g < sub.members.size(); ++g) {
      const Rational f = cfg.multiplicities[sub.members[g]] * k(sub.members[g], b);
      if (f.is_zero()) continue;
      for (std::size_t j = 0; j < r; ++j) image[j] += f * x[g][j];
    }
    const auto mu = proportionality(image, x[m]);
    if (!mu) throw NotEigen("M(b^v) is not proportional to b^v for member " + std::to_string(b));
    auto [it, inserted] = slot.try_emplace(*mu, out.eigenvalues.size());
    if (inserted) {
      out.eigenvalues.push_back(*mu);
      spaces.emplace_back(r);
    }
    spaces[it->second].add(x[m]);
    out.member_eigenvalue.push_back(it->second);
  }
  std::size_t total = 0;
  std::vector<CoVec> s_cov;
  for (std::size_t j : sub.basis) s_cov.push_back(cfg.covectors[j]);
  for (const auto& sp : spaces) {
    total += sp.rank();
    out.eigenspaces.push_back(sp.echelon_rows());
    std::vector<RatVec> amb;
    for (const auto& y : sp.echelon_rows()) {
      RatVec cov(cfg.dim);
      for (std::size_t j = 0; j < r; ++j)
        if (!y[j].is_zero()) cov = add(cov, scale(s_cov[j], y[j]));
      amb.push_back(ginv * cov);
    }
    out.ambient.push_back(std::move(amb));
  }
  out.spans_w_dual = total == r;
  return out;
}

}  // namespace trigvee
