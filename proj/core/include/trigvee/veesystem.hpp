#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trigvee/configuration.hpp"
#include "trigvee/series.hpp"
#include "trigvee/wedge.hpp"

namespace trigvee {

struct SeriesResidual {
  std::size_t alpha;
  std::vector<std::size_t> members;
  std::vector<int> signs;
  /// sum c_b alpha(b^v) sign_b over the series; zero for a vee-system.
  Rational residual;
};

struct CDeltaWarning {
  std::size_t anchor;
  std::vector<std::size_t> subset;
};

enum class LambdaStatus { Ok, NotProportional, ZeroG2, NotComputed };

struct VeeReport {
  bool is_vee = false;
  std::vector<SeriesResidual> series;
  std::vector<CDeltaWarning> c_delta_warnings;
  std::optional<Rational> lambda_sq;
  bool proportionality_ok = false;
  LambdaStatus lambda_status = LambdaStatus::NotComputed;
  /// Filled only by positive_system_probe; empty when not probed.
  std::optional<bool> g2_positive_independent;
};

struct VeeOptions {
  SeriesOptions series;
  bool compute_lambda = true;
  /// Classes larger than this only have their full C_delta checked.
  std::size_t max_subset_class = 16;
};

/// Evaluates the vee-condition on every alpha-series of every covector.
/// Throws SingularMatrix when the Gram form is degenerate.
VeeReport vee_check(const Configuration& cfg, const VeeOptions& opts = {});

/// sum over ordered pairs of the configuration as supplied of c_a c_b (a ^ b)^2.
WedgeForm g1(const Configuration& cfg);

/// sum over ordered pairs of the positive normalization of
/// c_a c_b G(a^v, b^v) (a ^ b)^2.
WedgeForm g2(const Configuration& cfg);

/// As g2, but summing over cfg exactly as given (no sign normalization).
WedgeForm g2_for_positive_system(const Configuration& cfg);

/// Pair-by-pair evaluation of the two sums; slow reference versions.
WedgeForm g1_by_pairs(const Configuration& cfg);
WedgeForm g2_by_pairs(const Configuration& cfg);

/// lambda^2 with g1 = (lambda^2 / 4) g2, checked on every entry.
/// Throws ZeroG2 or NotProportional.
Rational lambda_sq(const Configuration& cfg);
Rational lambda_sq(const WedgeForm& form1, const WedgeForm& form2);

/// Re-normalizes against random generic functionals, which flips whole
/// collinearity classes, and compares g2 of each resulting positive system
/// with the original.
bool positive_system_probe(const Configuration& cfg, int flips, std::uint64_t seed);

struct SubsystemHandle {
  Configuration parent;
  std::vector<std::size_t> members;
  /// Members forming a basis of W = span(members).
  std::vector<std::size_t> basis;
  /// Gram of the subsystem on W^v in the basis {S_j^v}; singular iff isotropic.
  SymMat w_gram;
  bool is_isotropic = false;

  std::size_t rank() const { return basis.size(); }
};

/// B = A intersected with the span of the chosen covectors.
SubsystemHandle subsystem(const Configuration& cfg, const std::vector<std::size_t>& span_indices);
SubsystemHandle subsystem(const Configuration& cfg, const std::vector<std::size_t>& span_indices,
                          const RatMatrix& pairing);

/// The members of B as a configuration on W^v: coordinates b(S_j^v).
Configuration standalone(const SubsystemHandle& sub);
Configuration standalone(const SubsystemHandle& sub, const RatMatrix& pairing);

struct EigenDecomposition {
  std::vector<Rational> eigenvalues;
  /// Eigenspace bases in W^v coordinates (coefficients over S_j^v).
  std::vector<std::vector<RatVec>> eigenspaces;
  /// The same bases as vectors of V.
  std::vector<std::vector<RatVec>> ambient;
  /// Eigenvalue index of each member of the subsystem.
  std::vector<std::size_t> member_eigenvalue;
  bool spans_w_dual = false;
};

/// Operator M = sum_{b in B} c_b b (x) b^v restricted to W^v. Throws NotEigen
/// if some b^v is not an eigenvector.
EigenDecomposition m_operator(const SubsystemHandle& sub);

/// Coordinates of every member in the basis S of W.
std::vector<RatVec> member_coordinates(const SubsystemHandle& sub);

}  // namespace trigvee
