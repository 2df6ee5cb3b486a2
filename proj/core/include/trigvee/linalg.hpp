#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "trigvee/rational.hpp"

namespace trigvee {

using RatVec = std::vector<Rational>;
/// A covector in V*, written in the dual basis e^1..e^N.
using CoVec = RatVec;

/// Dense row-major rational matrix.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> data);

  static RatMatrix identity(std::size_t n);
  /// Builds a matrix whose rows are the given vectors (all of equal length).
  static RatMatrix from_rows(std::span<const RatVec> rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;
  bool is_zero() const;

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RatVec row(std::size_t r) const;
  RatVec col(std::size_t c) const;
  RatMatrix transpose() const;

  RatMatrix& operator+=(const RatMatrix& o);
  RatMatrix& operator-=(const RatMatrix& o);
  RatMatrix& operator*=(const Rational& s);

  friend RatMatrix operator+(RatMatrix a, const RatMatrix& b) { return a += b; }
  friend RatMatrix operator-(RatMatrix a, const RatMatrix& b) { return a -= b; }
  friend RatMatrix operator*(RatMatrix a, const Rational& s) { return a *= s; }
  friend RatMatrix operator*(const Rational& s, RatMatrix a) { return a *= s; }
  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend RatVec operator*(const RatMatrix& a, const RatVec& v);
  friend bool operator==(const RatMatrix& a, const RatMatrix& b) = default;

  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// The Gram-type matrices of the library are symmetric by construction.
using SymMat = RatMatrix;

Rational dot(std::span<const Rational> a, std::span<const Rational> b);
RatVec add(std::span<const Rational> a, std::span<const Rational> b);
RatVec sub(std::span<const Rational> a, std::span<const Rational> b);
RatVec scale(std::span<const Rational> a, const Rational& s);
bool is_zero(std::span<const Rational> v);
/// Standard unit covector e^{i} (0-based index) of length n.
RatVec unit(std::size_t n, std::size_t i);

/// Exact inverse by fraction-free Gauss-Jordan (Bareiss) elimination on the
/// integer matrix obtained by clearing denominators.
/// Throws SingularMatrix when m is singular, DimensionMismatch when not square.
RatMatrix invert(const RatMatrix& m);

/// Exact determinant via Bareiss elimination.
Rational determinant(const RatMatrix& m);

struct Rref {
  RatMatrix reduced;               ///< reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots; ///< pivot column of each nonzero row
};

Rref rref(const RatMatrix& m);
std::size_t rank(const RatMatrix& m);

/// Basis of {x : m x = 0}; one vector per free column, with a 1 in that column.
std::vector<RatVec> nullspace(const RatMatrix& m);

/// Incrementally maintained row space; used for span-membership tests.
class RowSpace {
 public:
  explicit RowSpace(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  /// Adds v; returns true if it enlarged the span.
  bool add(const RatVec& v);
  bool contains(const RatVec& v) const;
  /// Reduced form of v modulo the current span (zero iff contained).
  RatVec reduce(RatVec v) const;
  const std::vector<RatVec>& echelon_rows() const { return rows_; }

 private:
  std::size_t dim_;
  std::vector<RatVec> rows_;           // fully reduced, pivot entry 1
  std::vector<std::size_t> pivots_;
};

/// Coefficients x with sum_k x_k basis[k] = v, or nullopt when v is outside
/// the span. The basis vectors must be linearly independent.
std::optional<RatVec> coordinates_in(std::span<const RatVec> basis, const RatVec& v);

}  // namespace trigvee
