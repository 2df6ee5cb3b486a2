#include "trigvee/series.hpp"

#include <algorithm>
#include <map>

#include "trigvee/errors.hpp"

namespace trigvee {

namespace {

/// Fractional part in [0, 1).
Rational frac(const Rational& x) {
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), x.num().get_mpz_t(), x.den().get_mpz_t());
  return x - Rational(mpq_class(fl));
}

}  // namespace

SeriesDecomposition alpha_series(const Configuration& cfg, std::size_t alpha_index, const SeriesOptions& opts) {
  if (alpha_index >= cfg.size()) throw InvalidConfiguration("alpha_series: index out of range");
  const CoVec& alpha = cfg.covectors[alpha_index];
  std::size_t p = 0;
  while (p < alpha.size() && alpha[p].is_zero()) ++p;
  if (p == alpha.size()) throw InvalidConfiguration("alpha_series: alpha is zero");

  // Write beta = t alpha + beta' with beta'_p = 0. Then b1 -+ b2 in Z alpha
  // iff b1' = +-b2' and t1 -+ t2 in Z. With beta' = sigma * canon and
  // s = sigma t, both cases reduce to canon1 = canon2 and s1 - s2 in Z.
  struct Key {
    CoVec canon;
    Rational s_frac;
    auto operator<=>(const Key&) const = default;
  };
  std::map<Key, std::size_t> bucket;
  SeriesDecomposition out;
  out.alpha = alpha_index;
  for (std::size_t b = 0; b < cfg.size(); ++b) {
    const CoVec& beta = cfg.covectors[b];
    const Rational t = beta[p] / alpha[p];
    CoVec rest = sub(beta, scale(alpha, t));
    std::size_t q = 0;
    while (q < rest.size() && rest[q].is_zero()) ++q;
    if (q == rest.size()) continue;  // collinear with alpha
    int sigma = rest[q].sign();
    if (sigma < 0)
      for (auto& x : rest) x = -x;
    const Rational s = sigma > 0 ? t : -t;
    Key key{std::move(rest), opts.rational_m ? Rational(0) : frac(s)};
    auto [it, inserted] = bucket.try_emplace(std::move(key), out.series.size());
    if (inserted) {
      out.series.push_back({b});
      out.signs.push_back({sigma});
    } else {
      out.series[it->second].push_back(b);
      out.signs[it->second].push_back(sigma);
    }
  }
  // Re-express signs relative to each series' first member.
  for (auto& sg : out.signs) {
    const int first = sg.front();
    for (auto& x : sg) x *= first;
  }
  return out;
}

}  // namespace trigvee
