#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "trigvee/linalg.hpp"

namespace trigvee {

/// Lexicographic enumeration of the pairs (i, j), i < j, indexing the basis
/// e_i ^ e_j of the exterior square. Indices are 0-based.
class WedgeIndex {
 public:
  explicit WedgeIndex(std::size_t n);

  std::size_t dim() const { return n_; }
  std::size_t size() const { return pairs_.size(); }
  std::size_t index(std::size_t i, std::size_t j) const;
  const std::pair<std::size_t, std::size_t>& pair(std::size_t k) const { return pairs_.at(k); }
  const std::vector<std::pair<std::size_t, std::size_t>>& pairs() const { return pairs_; }

 private:
  std::size_t n_;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
};

/// Symmetric bilinear form on the exterior square, C(N,2) x C(N,2).
using WedgeForm = RatMatrix;

/// B_{alpha,beta}(e_i ^ e_j) with e_i ^ e_j = e_i (x) e_j - e_j (x) e_i,
/// i.e. 2 (alpha_i beta_j - alpha_j beta_i).
Rational wedge_eval(const CoVec& alpha, const CoVec& beta, std::size_t i, std::size_t j);

/// All coordinates of alpha ^ beta in the lexicographic pair basis.
RatVec wedge_vector(const CoVec& alpha, const CoVec& beta);

/// The rank-one form (alpha ^ beta)^2.
WedgeForm wedge_square(const CoVec& alpha, const CoVec& beta);

/// form += coeff * w w^T
void add_rank_one(WedgeForm& form, const RatVec& w, const Rational& coeff);

}  // namespace trigvee
