#include "trigvee/wdvv_numeric.hpp"

#include <cmath>
#include <complex>
#include <random>

#include "trigvee/errors.hpp"

namespace trigvee {

NumericConfig::NumericConfig(const Configuration& cfg) {
  const auto m = static_cast<Eigen::Index>(cfg.size());
  const auto n = static_cast<Eigen::Index>(cfg.dim);
  covectors.resize(m, n);
  multiplicities.resize(m);
  for (Eigen::Index a = 0; a < m; ++a) {
    for (Eigen::Index i = 0; i < n; ++i) covectors(a, i) = cfg.covectors[a][i].to_double();
    multiplicities(a) = cfg.multiplicities[a].to_double();
  }
  gram = covectors.transpose() * multiplicities.asDiagonal() * covectors;
}

SamplePoint make_point(const NumericConfig& nc, const Eigen::VectorXd& x, double y) {
  SamplePoint pt{x, y, 1.0};
  const Eigen::VectorXd values = nc.covectors * x;
  for (Eigen::Index a = 0; a < values.size(); ++a) pt.min_sine = std::min(pt.min_sine, std::abs(std::sin(values(a))));
  return pt;
}

std::vector<SamplePoint> sample_points(const NumericConfig& nc, int count, std::uint64_t seed, double guard) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-2.0, 2.0);
  std::vector<SamplePoint> pts;
  const auto n = static_cast<Eigen::Index>(nc.dim());
  while (static_cast<int>(pts.size()) < count) {
    Eigen::VectorXd x(n);
    for (Eigen::Index i = 0; i < n; ++i) x(i) = coord(rng);
    SamplePoint pt = make_point(nc, x, coord(rng));
    if (pt.min_sine >= guard) pts.push_back(std::move(pt));
  }
  return pts;
}

namespace {

void check_guard(const SamplePoint& pt, double guard) {
  if (pt.min_sine < guard) throw PoleTooClose("sample point is within the pole guard of a hyperplane");
}

/// Parts of F_i independent of lambda (S) and proportional to it (T), so F_i = lambda T_i + S_i.
struct SplitDerivs {
  std::vector<Eigen::MatrixXd> t;
  std::vector<Eigen::MatrixXd> s;
};

SplitDerivs split_derivs(const NumericConfig& nc, const SamplePoint& pt) {
  const auto n = static_cast<Eigen::Index>(nc.dim());
  const Eigen::VectorXd values = nc.covectors * pt.x;
  Eigen::VectorXd weight(values.size());
  for (Eigen::Index a = 0; a < values.size(); ++a) weight(a) = nc.multiplicities(a) / std::tan(values(a));
  SplitDerivs d;
  for (Eigen::Index i = 0; i <= n; ++i) {
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(n + 1, n + 1);
    Eigen::MatrixXd s = Eigen::MatrixXd::Zero(n + 1, n + 1);
    if (i < n) {
      const Eigen::VectorXd w = (weight.array() * nc.covectors.col(i).array()).matrix();
      t.topLeftCorner(n, n) = nc.covectors.transpose() * w.asDiagonal() * nc.covectors;
      s.block(0, n, n, 1) = 2.0 * nc.gram.col(i);
      s.block(n, 0, 1, n) = 2.0 * nc.gram.row(i);
    } else {
      s.topLeftCorner(n, n) = 2.0 * nc.gram;
      s(n, n) = 2.0;
    }
    d.t.push_back(std::move(t));
    d.s.push_back(std::move(s));
  }
  return d;
}

template <typename Scalar>
double residual_at(const SplitDerivs& d, Scalar lambda) {
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const std::size_t n = d.t.size() - 1;
  std::vector<Mat> f;
  for (std::size_t i = 0; i <= n; ++i) f.push_back(lambda * d.t[i].template cast<Scalar>() + d.s[i].template cast<Scalar>());
  const Eigen::FullPivLU<Mat> lu(f[n]);
  if (!lu.isInvertible()) throw SingularMatrix("F_{N+1} is singular");
  const Mat inv = lu.inverse();
  const double inv_norm = inv.norm();
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Mat comm = f[i] * inv * f[j] - f[j] * inv * f[i];
      const double scale = 1.0 + f[i].norm() * inv_norm * f[j].norm();
      worst = std::max(worst, comm.norm() / scale);
    }
  return worst;
}

}  // namespace

ThirdDerivSet third_derivs(const NumericConfig& nc, double lambda, const SamplePoint& pt, double guard) {
  check_guard(pt, guard);
  const SplitDerivs d = split_derivs(nc, pt);
  ThirdDerivSet out;
  out.lambda = lambda;
  for (std::size_t i = 0; i < d.t.size(); ++i) out.f.push_back(lambda * d.t[i] + d.s[i]);
  return out;
}

Eigen::MatrixXd trig_second_derivs(const NumericConfig& nc, double lambda, const Eigen::VectorXd& x) {
  const Eigen::VectorXd values = nc.covectors * x;
  Eigen::VectorXd w(values.size());
  for (Eigen::Index a = 0; a < values.size(); ++a)
    w(a) = lambda * nc.multiplicities(a) * std::log(std::abs(std::sin(values(a))));
  return nc.covectors.transpose() * w.asDiagonal() * nc.covectors;
}

ResidualReport wdvv_residual(const NumericConfig& nc, double lambda_sq, const std::vector<SamplePoint>& pts,
                             double tol) {
  ResidualReport rep;
  rep.tol = tol;
  rep.points = static_cast<int>(pts.size());
  for (const auto& pt : pts) {
    const SplitDerivs d = split_derivs(nc, pt);
    const double r = lambda_sq >= 0 ? residual_at<double>(d, std::sqrt(lambda_sq))
                                    : residual_at<std::complex<double>>(d, {0.0, std::sqrt(-lambda_sq)});
    rep.per_point.push_back(r);
    rep.max_residual = std::max(rep.max_residual, r);
  }
  rep.pass = rep.max_residual < tol;
  return rep;
}

ResidualReport wdvv_residual(const Configuration& cfg, const Rational& lambda_sq, int points, std::uint64_t seed,
                             double tol) {
  const NumericConfig nc(cfg);
  ResidualReport rep = wdvv_residual(nc, lambda_sq.to_double(), sample_points(nc, points, seed), tol);
  rep.seed = seed;
  return rep;
}

Eigen::VectorXd product(const NumericConfig& nc, double lambda, const SamplePoint& pt, const Eigen::VectorXd& a,
                        const Eigen::VectorXd& b, double guard) {
  check_guard(pt, guard);
  const auto n = static_cast<Eigen::Index>(nc.dim());
  if (a.size() != n + 1 || b.size() != n + 1) throw DimensionMismatch("product: vectors must have length N+1");
  const Eigen::VectorXd av = a.head(n), bv = b.head(n);
  const Eigen::VectorXd aa = nc.covectors * av, ab = nc.covectors * bv, values = nc.covectors * pt.x;
  // sum c a(a) a(b) cot a(x) a^v = G^-1 sum c a(a) a(b) cot a(x) a
  Eigen::VectorXd w(values.size());
  for (Eigen::Index k = 0; k < values.size(); ++k) w(k) = nc.multiplicities(k) * aa(k) * ab(k) / std::tan(values(k));
  Eigen::VectorXd out = Eigen::VectorXd::Zero(n + 1);
  if (nc.size() > 0 && nc.multiplicities.cwiseAbs().maxCoeff() > 0) {
    const Eigen::VectorXd cov = nc.covectors.transpose() * w;
    out.head(n) = 0.5 * lambda * nc.gram.fullPivLu().solve(cov);
  }
  out(n) = (nc.multiplicities.array() * aa.array() * ab.array()).sum();
  // E is the identity: (a_V + a_y E) * (b_V + b_y E)
  out.head(n) += a(n) * bv + b(n) * av;
  out(n) += a(n) * b(n);
  return out;
}

AssociativityReport associativity_residual(const Configuration& cfg, double lambda, int points, std::uint64_t seed,
                                           double tol) {
  const NumericConfig nc(cfg);
  const auto pts = sample_points(nc, points, seed);
  const auto n = static_cast<Eigen::Index>(nc.dim());
  std::mt19937_64 rng(seed ^ 0x5bd1e995ULL);
  std::normal_distribution<double> gauss;
  AssociativityReport out;
  out.residual.tol = tol;
  out.residual.points = points;
  out.residual.seed = seed;
  for (const auto& pt : pts) {
    const ThirdDerivSet d = third_derivs(nc, lambda, pt);
    const Eigen::MatrixXd inv = d.f[n].inverse();
    double kappa = 0.0;
    for (const auto& fi : d.f) kappa = std::max(kappa, (inv * fi).norm());
    double worst = 0.0;
    for (int trial = 0; trial < 4; ++trial) {
      Eigen::VectorXd a(n + 1), b(n + 1), c(n + 1);
      for (Eigen::Index i = 0; i <= n; ++i) {
        a(i) = gauss(rng);
        b(i) = gauss(rng);
        c(i) = gauss(rng);
      }
      const Eigen::VectorXd lhs = product(nc, lambda, pt, product(nc, lambda, pt, a, b), c);
      const Eigen::VectorXd rhs = product(nc, lambda, pt, a, product(nc, lambda, pt, b, c));
      const double scale = 1.0 + a.norm() * b.norm() * c.norm() * kappa * kappa;
      worst = std::max(worst, (lhs - rhs).norm() / scale);
    }
    out.residual.per_point.push_back(worst);
    out.residual.max_residual = std::max(out.residual.max_residual, worst);
  }
  out.residual.pass = out.residual.max_residual < tol;
  out.wdvv_pass = wdvv_residual(nc, lambda * lambda, pts, tol).pass;
  out.agrees = out.wdvv_pass == out.residual.pass;
  return out;
}

}  // namespace trigvee
