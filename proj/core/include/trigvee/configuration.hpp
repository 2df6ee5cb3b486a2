#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "trigvee/linalg.hpp"

namespace trigvee {

/// A finite collection of covectors in V* with rational multiplicities.
struct Configuration {
  std::size_t dim = 0;
  std::vector<CoVec> covectors;
  std::vector<Rational> multiplicities;
  std::string name;

  std::size_t size() const { return covectors.size(); }
  bool empty() const { return covectors.empty(); }

  /// Throws InvalidConfiguration on zero covectors, ragged lengths or
  /// mismatched multiplicity count.
  void validate() const;

  friend bool operator==(const Configuration&, const Configuration&) = default;
};

/// Member of a collinearity class: covector index and ratio k with
/// covector = k * anchor.
struct ClassMember {
  std::size_t index;
  Rational ratio;
};

struct CollinearClass {
  std::size_t anchor;
  std::vector<ClassMember> members;
};

/// G = sum c_a a (x) a.
SymMat gram(const Configuration& cfg);

/// Vector gamma^v with G(gamma^v, v) = gamma(v) for every v.
RatVec dual(const Configuration& cfg, const CoVec& gamma);
RatVec dual(const SymMat& gram_inverse, const CoVec& gamma);

/// Matrix K with K(a, b) = alpha_a(alpha_b^v) = alpha_a G^{-1} alpha_b^T.
RatMatrix pairing_matrix(const Configuration& cfg, const SymMat& gram_inverse);

/// If a = k b for some rational k, returns k.
std::optional<Rational> proportionality(const CoVec& a, const CoVec& b);

/// Maximal classes of mutually proportional covectors. The anchor of each
/// class is its smallest index; classes are ordered by anchor.
std::vector<CollinearClass> collinear_classes(const Configuration& cfg);

/// C = sum_{g in subset} c_g k_g^2, k_g taken relative to the anchor.
/// Throws MixedClass if the subset or the anchor leaves one class.
Rational c_delta(const Configuration& cfg, const std::vector<std::size_t>& subset, std::size_t anchor);

struct PositiveNormalization {
  Configuration cfg;
  /// For each output covector, the input indices merged into it.
  std::vector<std::vector<std::size_t>> origin;
  /// Input indices whose sign was flipped.
  std::vector<std::size_t> flipped;
  /// Set when a merged multiplicity vanished and the covector was removed.
  bool zero_multiplicity_dropped = false;
  CoVec functional;
};

/// Functional (1, e, e^2, ...) with e = 1/P for the first prime P making it
/// nonzero on every covector. Throws NoGenericFunctional on a zero covector.
CoVec generic_functional(const Configuration& cfg);

/// Flips covectors to the positive side of the functional, merges exact
/// duplicates (summing multiplicities, first occurrence fixes the order) and
/// drops merged zero multiplicities.
PositiveNormalization normalize_positive(const Configuration& cfg, const std::optional<CoVec>& functional = std::nullopt);

/// Merges exactly equal covectors without flipping any sign.
PositiveNormalization merge_duplicates(const Configuration& cfg);

/// Applies x -> x T to every covector (a change of coordinates on V).
Configuration transform(const Configuration& cfg, const RatMatrix& t);

}  // namespace trigvee
