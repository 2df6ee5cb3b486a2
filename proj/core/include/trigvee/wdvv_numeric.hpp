#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

#include "trigvee/configuration.hpp"

namespace trigvee {

inline constexpr double kDefaultPoleGuard = 1.0 / 20.0;

/// Floating-point copy of a configuration: rows of A are covectors.
struct NumericConfig {
  Eigen::MatrixXd covectors;
  Eigen::VectorXd multiplicities;
  Eigen::MatrixXd gram;

  explicit NumericConfig(const Configuration& cfg);
  std::size_t dim() const { return static_cast<std::size_t>(covectors.cols()); }
  std::size_t size() const { return static_cast<std::size_t>(covectors.rows()); }
};

struct SamplePoint {
  Eigen::VectorXd x;
  double y = 0.0;
  double min_sine = 0.0;
};

/// Point with the given coordinates; min_sine is filled in.
SamplePoint make_point(const NumericConfig& nc, const Eigen::VectorXd& x, double y = 0.0);

/// Uniform points in (-2, 2)^N, resampled until every |sin a(x)| >= guard.
std::vector<SamplePoint> sample_points(const NumericConfig& nc, int count, std::uint64_t seed,
                                       double guard = kDefaultPoleGuard);

struct ThirdDerivSet {
  /// F_1..F_{N+1}, each (N+1) x (N+1).
  std::vector<Eigen::MatrixXd> f;
  double lambda = 0.0;
};

/// Third derivatives of the prepotential. Throws PoleTooClose.
ThirdDerivSet third_derivs(const NumericConfig& nc, double lambda, const SamplePoint& pt,
                           double guard = kDefaultPoleGuard);

/// Matrix of second derivatives d_i d_j of lambda sum c_a f(a(x)) with
/// f'' = log|sin|; its gradient reproduces the cot part of F_ijk.
Eigen::MatrixXd trig_second_derivs(const NumericConfig& nc, double lambda, const Eigen::VectorXd& x);

struct ResidualReport {
  double max_residual = 0.0;
  double tol = 0.0;
  bool pass = false;
  int points = 0;
  std::uint64_t seed = 0;
  std::vector<double> per_point;
};

/// Max over points and pairs i < j <= N of the scaled commutator
/// |F_i F_{N+1}^-1 F_j - F_j F_{N+1}^-1 F_i| / (1 + |F_i| |F_{N+1}^-1| |F_j|)
/// (Frobenius norms). Negative lambda^2 is handled with an imaginary lambda.
ResidualReport wdvv_residual(const Configuration& cfg, const Rational& lambda_sq, int points, std::uint64_t seed,
                             double tol);
ResidualReport wdvv_residual(const NumericConfig& nc, double lambda_sq, const std::vector<SamplePoint>& pts,
                             double tol);

/// a * b on V + U, a and b of length N+1 (last entry along E).
Eigen::VectorXd product(const NumericConfig& nc, double lambda, const SamplePoint& pt, const Eigen::VectorXd& a,
                        const Eigen::VectorXd& b, double guard = kDefaultPoleGuard);

struct AssociativityReport {
  ResidualReport residual;
  /// Verdict of wdvv_residual at the same points.
  bool wdvv_pass = false;
  bool agrees = false;
};

/// Max over random triples of |(a*b)*c - a*(b*c)| / (1 + |a||b||c| k^2), k the
/// largest Frobenius norm of a multiplication operator F_{N+1}^-1 F_i.
AssociativityReport associativity_residual(const Configuration& cfg, double lambda, int points, std::uint64_t seed,
                                           double tol);

}  // namespace trigvee
