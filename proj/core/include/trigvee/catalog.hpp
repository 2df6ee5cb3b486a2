#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trigvee/configuration.hpp"
#include "trigvee/families.hpp"

namespace trigvee {

/// Canonical text of data invariant under invertible linear maps of V: one row
/// (c_a, K(a,a), sorted {(c_b, K(a,b))}) per covector, rows sorted, where
/// K(a,b) = a(b^v). Equal for linearly equivalent configurations.
std::string linear_invariant(const Configuration& cfg);

/// 64-bit FNV-1a hash of linear_invariant, as 16 hex digits.
std::string digest(const Configuration& cfg);

/// Orbits of flats are explored with the reflections a -> a - 2 K(a,b)/K(b,b) b
/// that permute the covectors up to sign and preserve multiplicities.
struct Symmetry {
  std::size_t root;
  std::vector<std::size_t> perm;
};
std::vector<Symmetry> reflection_symmetries(const Configuration& cfg);

struct CatalogEntry {
  std::size_t corank = 0;
  /// Parent covector indices lying in the span of the subsystem.
  std::vector<std::size_t> members;
  std::string digest;
  /// Empty when the child has dimension 1 and lambda is undefined.
  std::optional<Rational> lambda_sq;
  bool child_is_vee = false;
  std::size_t covector_count = 0;
  std::size_t child_dim = 0;
  /// Number of orbit representatives whose restriction has this digest.
  std::size_t sources = 1;
  Configuration child;
};

struct Catalog {
  std::string source;
  Configuration parent;
  Rational parent_lambda_sq;
  std::size_t max_corank = 0;
  std::size_t orbit_representatives = 0;
  std::size_t skipped = 0;
  std::vector<std::string> skipped_reasons;
  std::vector<CatalogEntry> entries;
};

/// Restrictions of cfg along every subsystem of rank <= max_corank, one per
/// orbit of flats, deduplicated by digest. Throws InvalidConfiguration if cfg
/// is not a vee-system with a defined lambda. Candidate flats are restricted
/// on up to `threads` threads (0: one per core); the result does not depend on it.
Catalog build_catalog(const Configuration& cfg, std::size_t max_corank, std::size_t threads = 0);
Catalog build_catalog(const FamilySpec& spec, std::size_t max_corank, std::size_t threads = 0);

}  // namespace trigvee
