#include "trigvee/linalg.hpp"

#include <sstream>
#include <utility>

#include "trigvee/errors.hpp"

namespace trigvee {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols) throw DimensionMismatch("RatMatrix: data size mismatch");
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(std::span<const RatVec> rows, std::size_t cols) {
  RatMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("from_rows: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

bool RatMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool RatMatrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

RatVec RatMatrix::row(std::size_t r) const {
  return RatVec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

RatVec RatMatrix::col(std::size_t c) const {
  RatVec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RatMatrix& RatMatrix::operator+=(const RatMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix +: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

RatMatrix& RatMatrix::operator-=(const RatMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix -: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

RatMatrix& RatMatrix::operator*=(const Rational& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix *: inner dimension mismatch");
  RatMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

RatVec operator*(const RatMatrix& a, const RatVec& v) {
  if (a.cols_ != v.size()) throw DimensionMismatch("matrix-vector *: dimension mismatch");
  RatVec out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k)
      if (!v[k].is_zero()) out[i] += a(i, k) * v[k];
  return out;
}

std::string RatMatrix::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c);
    os << "]";
  }
  os << "]";
  return os.str();
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot: length mismatch");
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  return s;
}

RatVec add(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw DimensionMismatch("add: length mismatch");
  RatVec out(a.begin(), a.end());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

RatVec sub(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw DimensionMismatch("sub: length mismatch");
  RatVec out(a.begin(), a.end());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

RatVec scale(std::span<const Rational> a, const Rational& s) {
  RatVec out(a.begin(), a.end());
  for (auto& x : out) x *= s;
  return out;
}

bool is_zero(std::span<const Rational> v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

RatVec unit(std::size_t n, std::size_t i) {
  RatVec v(n);
  v.at(i) = 1;
  return v;
}

namespace {

/// Common denominator of all entries.
mpz_class common_denominator(const RatMatrix& m) {
  mpz_class d = 1;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), m(r, c).den().get_mpz_t());
  return d;
}

std::vector<std::vector<mpz_class>> integer_copy(const RatMatrix& m, const mpz_class& d) {
  std::vector<std::vector<mpz_class>> a(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      a[r][c] = m(r, c).num() * (d / m(r, c).den());
  return a;
}

}  // namespace

RatMatrix invert(const RatMatrix& m) {
  if (!m.is_square()) throw DimensionMismatch("invert: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return m;
  const mpz_class d = common_denominator(m);

  // Augmented integer matrix [d*m | I].
  auto a = integer_copy(m, d);
  for (std::size_t r = 0; r < n; ++r) {
    a[r].resize(2 * n);
    a[r][n + r] = 1;
  }

  mpz_class prev = 1;
  mpz_class t;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) throw SingularMatrix("invert: matrix is singular");
    if (p != k) std::swap(a[p], a[k]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      for (std::size_t j = 0; j < 2 * n; ++j) {
        if (j == k) continue;
        t = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }

  // Left block is now diag(D, ..., D); inverse of d*m is right block / D.
  RatMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    const mpz_class& diag = a[r][r];
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = Rational(mpq_class(a[r][n + c] * d, diag));
  }
  return inv;
}

Rational determinant(const RatMatrix& m) {
  if (!m.is_square()) throw DimensionMismatch("determinant: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return Rational(1);
  const mpz_class d = common_denominator(m);
  auto a = integer_copy(m, d);
  mpz_class prev = 1;
  mpz_class t;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) return Rational(0);
    if (p != k) {
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        t = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[k][k];
  }
  mpz_class dn;
  mpz_pow_ui(dn.get_mpz_t(), d.get_mpz_t(), n);
  return Rational(mpq_class(sign * a[n - 1][n - 1], dn));
}

Rref rref(const RatMatrix& m) {
  RatMatrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    const Rational inv = a(r, c).inverse();
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      const Rational f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  RatMatrix reduced(r, a.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) reduced(i, j) = a(i, j);
  return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const RatMatrix& m) { return rref(m).pivots.size(); }

std::vector<RatVec> nullspace(const RatMatrix& m) {
  const Rref e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<RatVec> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVec v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

RatVec RowSpace::reduce(RatVec v) const {
  if (v.size() != dim_) throw DimensionMismatch("RowSpace: vector length mismatch");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Rational f = v[pivots_[i]];
    if (f.is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j)
      if (!rows_[i][j].is_zero()) v[j] -= f * rows_[i][j];
  }
  return v;
}

bool RowSpace::contains(const RatVec& v) const { return is_zero(reduce(v)); }

bool RowSpace::add(const RatVec& v) {
  RatVec r = reduce(v);
  std::size_t p = 0;
  while (p < dim_ && r[p].is_zero()) ++p;
  if (p == dim_) return false;
  const Rational inv = r[p].inverse();
  for (auto& x : r) x *= inv;
  // keep rows fully reduced against the new pivot
  for (auto& row : rows_) {
    const Rational f = row[p];
    if (f.is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j)
      if (!r[j].is_zero()) row[j] -= f * r[j];
  }
  rows_.push_back(std::move(r));
  pivots_.push_back(p);
  return true;
}

std::optional<RatVec> coordinates_in(std::span<const RatVec> basis, const RatVec& v) {
  const std::size_t k = basis.size();
  const std::size_t n = v.size();
  // Solve [b_1 .. b_k] x = v through the rref of the augmented n x (k+1) system.
  RatMatrix aug(n, k + 1);
  for (std::size_t j = 0; j < k; ++j) {
    if (basis[j].size() != n) throw DimensionMismatch("coordinates_in: length mismatch");
    for (std::size_t i = 0; i < n; ++i) aug(i, j) = basis[j][i];
  }
  for (std::size_t i = 0; i < n; ++i) aug(i, k) = v[i];
  const Rref e = rref(aug);
  if (!e.pivots.empty() && e.pivots.back() == k) return std::nullopt;
  if (e.pivots.size() != k) throw SingularMatrix("coordinates_in: basis is dependent");
  RatVec x(k);
  for (std::size_t i = 0; i < k; ++i) x[e.pivots[i]] = e.reduced(i, k);
  return x;
}

}  // namespace trigvee
