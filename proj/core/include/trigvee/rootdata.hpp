#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "trigvee/families.hpp"
#include "trigvee/linalg.hpp"

namespace trigvee {

struct CensusEntry {
  Rational norm;
  std::size_t count;
  /// Multiplicity class: "t" (simply laced), "p" (short), "q" (long);
  /// "r", "s", "q" for the three orbits of BC.
  std::string label;
};

/// Realization-independent data of a root system, in the normalization
/// long^2 = 2 (B, F4), short^2 = 2 (C), long^2 = 3 short^2 = 3 (G2), 2 (ADE).
struct RootData {
  Family family = Family::A;
  std::size_t rank = 0;
  SymMat simple_gram;
  std::vector<Rational> simple_norms;
  std::vector<std::string> simple_labels;
  /// Highest root coefficients n_i over the simple roots.
  std::vector<long> highest;
  Rational theta_norm;
  std::vector<CensusEntry> census;
  /// Positive roots in simple-root coordinates, ordered by height.
  std::vector<std::vector<long>> positive_roots;

  bool reduced() const { return family != Family::BC; }
};

/// Throws UnsupportedParams for families that are not root systems.
RootData root_data(Family family, std::size_t rank);

}  // namespace trigvee
