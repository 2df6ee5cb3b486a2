#pragma once

#include <cstddef>
#include <vector>

#include "trigvee/configuration.hpp"
#include "trigvee/veesystem.hpp"

namespace trigvee {

struct RestrictionResult {
  Configuration child;
  /// Basis b_1..b_d of W_B = {x : b(x) = 0 for all b in B}, as vectors of V.
  /// Child coordinates of a parent covector a are (a(b_1), ..., a(b_d)).
  std::vector<RatVec> basis;
  /// Parent covector indices merged into each child covector.
  std::vector<std::vector<std::size_t>> provenance;
  bool zero_multiplicity_dropped = false;
};

struct RestrictOptions {
  /// Run vee_check on the parent and require a defined lambda^2.
  bool verify_parent = true;
};

/// Restricts cfg to the common kernel of the subsystem. Nonzero restrictions
/// that coincide up to sign are merged with summed multiplicities.
/// Throws CDeltaZero, DegenerateRestrictedGram or EmptyChild when the
/// hypotheses of the construction fail.
RestrictionResult restrict(const Configuration& cfg, const SubsystemHandle& sub, const RestrictOptions& opts = {});

/// Convenience: restriction along the subsystem spanned by the given covectors.
RestrictionResult restrict(const Configuration& cfg, const std::vector<std::size_t>& kernel_of,
                           const RestrictOptions& opts = {});

/// Basis of the common kernel of the given covectors (RREF nullspace).
std::vector<RatVec> kernel_basis(const std::vector<CoVec>& covectors, std::size_t dim);

}  // namespace trigvee
