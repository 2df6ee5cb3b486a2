#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "trigvee/configuration.hpp"

namespace trigvee {

enum class Family {
  A, B, C, D, BC, E6, E7, E8, F4, G2,
  FourDim, FourDimA1, FourDimA2,
  Planar6, Planar8, Planar9, Planar10,
  RestrictedBC, RestrictedA,
};

std::string to_string(Family f);
/// Throws UnsupportedParams for an unknown name.
Family parse_family(const std::string& name);
const std::vector<Family>& all_families();

/// Parameter names accepted by the family, in canonical order.
const std::vector<std::string>& parameter_names(Family f);

struct FamilySpec {
  Family family = Family::A;
  /// Rank N for the classical series; ignored (may be 0) for fixed-rank families
  /// and derived from the partition for the restricted families.
  std::size_t rank = 0;
  std::map<std::string, Rational> params;
  std::vector<Rational> partition;
  /// Allow non-integer partition entries in the restricted families.
  bool rational_partition = false;

  Rational param(const std::string& name) const;
};

/// Positive half of the family in an all-rational realization. Covectors
/// whose multiplicity is zero are omitted. Throws UnsupportedParams.
Configuration generate(const FamilySpec& spec);

/// Closed-form lambda^2. Throws DegenerateParams when a denominator vanishes.
Rational expected_lambda_sq(const FamilySpec& spec);

/// Restricted BC or A families built from their multiplicity tables.
Configuration restricted_family(const FamilySpec& spec);

/// The four-dimensional configuration with free p, q, r, s (no constraints).
Configuration four_dim_unconstrained(const Rational& p, const Rational& q, const Rational& r, const Rational& s);

/// Dimension of the ambient space of generate(spec).
std::size_t family_dim(const FamilySpec& spec);

}  // namespace trigvee
