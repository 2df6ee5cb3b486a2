#include "trigvee/wedge.hpp"

#include "trigvee/errors.hpp"

namespace trigvee {

WedgeIndex::WedgeIndex(std::size_t n) : n_(n) {
  pairs_.reserve(n * (n > 0 ? n - 1 : 0) / 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs_.emplace_back(i, j);
}

std::size_t WedgeIndex::index(std::size_t i, std::size_t j) const {
  if (i >= j || j >= n_) throw DimensionMismatch("WedgeIndex: need i < j < N");
  // pairs before row i: sum_{k<i} (n-1-k)
  return i * (2 * n_ - i - 1) / 2 + (j - i - 1);
}

Rational wedge_eval(const CoVec& alpha, const CoVec& beta, std::size_t i, std::size_t j) {
  if (alpha.size() != beta.size()) throw DimensionMismatch("wedge_eval: covector lengths differ");
  if (i >= alpha.size() || j >= alpha.size()) throw DimensionMismatch("wedge_eval: index out of range");
  return Rational(2) * (alpha[i] * beta[j] - alpha[j] * beta[i]);
}

RatVec wedge_vector(const CoVec& alpha, const CoVec& beta) {
  if (alpha.size() != beta.size()) throw DimensionMismatch("wedge_vector: covector lengths differ");
  const std::size_t n = alpha.size();
  RatVec w;
  w.reserve(n * (n > 0 ? n - 1 : 0) / 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) w.push_back(Rational(2) * (alpha[i] * beta[j] - alpha[j] * beta[i]));
  return w;
}

void add_rank_one(WedgeForm& form, const RatVec& w, const Rational& coeff) {
  if (form.rows() != w.size() || form.cols() != w.size()) throw DimensionMismatch("add_rank_one: shape mismatch");
  if (coeff.is_zero()) return;
  for (std::size_t a = 0; a < w.size(); ++a) {
    if (w[a].is_zero()) continue;
    const Rational ca = coeff * w[a];
    for (std::size_t b = 0; b < w.size(); ++b)
      if (!w[b].is_zero()) form(a, b) += ca * w[b];
  }
}

WedgeForm wedge_square(const CoVec& alpha, const CoVec& beta) {
  const RatVec w = wedge_vector(alpha, beta);
  WedgeForm f(w.size(), w.size());
  add_rank_one(f, w, Rational(1));
  return f;
}

}  // namespace trigvee
