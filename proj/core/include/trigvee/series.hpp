#pragma once

#include <cstddef>
#include <vector>

#include "trigvee/configuration.hpp"

namespace trigvee {

struct SeriesOptions {
  /// Accept g1 +- g2 = m alpha for any rational m instead of integer m.
  bool rational_m = false;
};

struct SeriesDecomposition {
  std::size_t alpha = 0;
  /// Each series lists covector indices in increasing order; series are
  /// ordered by their smallest index. The union is the complement of the
  /// collinearity class of alpha.
  std::vector<std::vector<std::size_t>> series;
  /// signs[s][k] = +1 or -1 with alpha ^ series[s][k] = signs[s][k] * (alpha ^ series[s][0]).
  std::vector<std::vector<int>> signs;
};

/// Splits the covectors not proportional to alpha into maximal alpha-series.
SeriesDecomposition alpha_series(const Configuration& cfg, std::size_t alpha_index, const SeriesOptions& opts = {});

}  // namespace trigvee
