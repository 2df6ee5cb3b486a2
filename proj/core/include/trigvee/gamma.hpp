#pragma once

#include <map>
#include <string>
#include <vector>

#include "trigvee/configuration.hpp"
#include "trigvee/rootdata.hpp"

namespace trigvee {

/// Multiplicity per class label of the census ("t", or "p"/"q", or "r"/"s"/"q").
using ClassMultiplicities = std::map<std::string, Rational>;

/// Coefficients a_0 (for the highest root), a_1..a_N. Throws NoATable.
std::vector<Rational> a_table(const RootData& rd, const ClassMultiplicities& mult);

/// -(1/8) (a_0 <theta,theta> + sum a_i n_i^2 <alpha_i,alpha_i>).
Rational gamma_tilde_sq(const RootData& rd, const ClassMultiplicities& mult);

/// The same quantity through coroots and the dual coefficients
/// n_i <alpha_i,alpha_i> / <theta,theta>.
Rational gamma_tilde_sq_dual(const RootData& rd, const ClassMultiplicities& mult);

/// h = (1/N) sum over the census of count * multiplicity * norm.
Rational census_h(const RootData& rd, const ClassMultiplicities& mult);

/// gamma^2 = -4 h^3 / lambda^2 with lambda^2 computed exactly from cfg.
Rational gamma_sq_direct(const Configuration& cfg, const RootData& rd, const ClassMultiplicities& mult);

/// Family spec generating the root system with the given per-class multiplicities.
FamilySpec spec_for_classes(const RootData& rd, const ClassMultiplicities& mult);

/// gamma_sq_direct for the multiplicities d = c / <alpha, alpha>.
Rational gamma_sq_rescaled(const RootData& rd, const ClassMultiplicities& mult);

}  // namespace trigvee
