#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "nkoszul/scalar.hpp"

namespace nkoszul {

using Index = std::uint32_t;

struct Entry {
  Index col;
  Scalar value;
  bool operator==(const Entry&) const = default;
};

/// Sparse vector: entries sorted by column, no stored zeros.
using SparseVector = std::vector<Entry>;

/// a + scale * b.
SparseVector add_scaled(const SparseVector& a, const Scalar& scale, const SparseVector& b);
SparseVector scaled(const SparseVector& v, const Scalar& scale);
/// Builds a sparse vector from unordered (col, value) pairs, merging repeats.
SparseVector make_sparse(std::vector<Entry> entries);
Scalar value_at(const SparseVector& v, Index col);
std::vector<Scalar> to_dense(const SparseVector& v, Index dim);
SparseVector from_dense(std::span<const Scalar> v);

/// Accumulates linear combinations of sparse vectors without ordering work
/// until the result is extracted.
class SparseAccumulator {
 public:
  void add(Index col, const Scalar& value);
  void add_scaled(const Scalar& scale, const SparseVector& v);
  SparseVector take();
  bool empty() const { return values_.empty(); }

 private:
  std::unordered_map<Index, Scalar> values_;
};

/// Dimension mismatch between operands.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Matrix stored as sparse rows. Rows act on row vectors: the image of
/// basis vector i is row i.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Index rows, Index cols) : cols_(cols), rows_(rows) {}
  static Matrix from_rows(Index cols, std::vector<SparseVector> rows);
  static Matrix from_dense(const std::vector<std::vector<Scalar>>& rows);
  static Matrix identity(Index n);

  Index rows() const { return static_cast<Index>(rows_.size()); }
  Index cols() const { return cols_; }
  const SparseVector& row(Index i) const { return rows_[i]; }
  SparseVector& row(Index i) { return rows_[i]; }
  const std::vector<SparseVector>& row_data() const { return rows_; }
  Scalar at(Index i, Index j) const { return value_at(rows_[i], j); }
  std::size_t nonzeros() const;
  bool is_zero() const;

  /// Row-convention product: (*this)(i, :) = sum_k a(i,k) b(k, :).
  Matrix operator*(const Matrix& b) const;
  Matrix transpose() const;
  /// v * M for a row vector v.
  SparseVector left_apply(const SparseVector& v) const;

 private:
  Index cols_ = 0;
  std::vector<SparseVector> rows_;
};

/// A subspace of K^ambient held by its reduced row echelon basis.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(Index ambient) : ambient_(ambient) {}
  /// Span of arbitrary (possibly dependent) vectors.
  static Subspace span(Index ambient, std::vector<SparseVector> vectors);
  static Subspace whole(Index ambient);

  Index ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<SparseVector>& basis() const { return basis_; }
  const std::vector<Index>& pivots() const { return pivots_; }
  /// Row holding the given pivot column, if any.
  std::optional<std::size_t> pivot_row(Index col) const;

  /// v minus its projection along the echelon basis; zero iff v lies in the span.
  SparseVector reduce(const SparseVector& v) const;
  bool contains(const SparseVector& v) const;
  /// c with sum_i c_i basis_i = v. Throws std::domain_error if v is outside.
  std::vector<Scalar> coordinates(const SparseVector& v) const;
  /// Coordinates of a vector already known to lie in the subspace: its
  /// values at the pivot columns.
  SparseVector coordinates_unchecked(const SparseVector& v) const;

  /// Annihilator under the coordinate pairing.
  Subspace orthogonal_complement() const;

  bool operator==(const Subspace& other) const;

 private:
  friend class EchelonBuilder;
  Index ambient_ = 0;
  std::vector<SparseVector> basis_;
  std::vector<Index> pivots_;
};

/// Incremental Gaussian elimination. Rows are reduced against all previous
/// pivots on insertion, so the stored rows are in echelon form with unit
/// leading coefficients; `finish` back-substitutes to reduced form.
class EchelonBuilder {
 public:
  explicit EchelonBuilder(Index cols);
  /// Returns true when the row was independent of the rows inserted so far.
  bool insert(SparseVector row);
  /// Reduces v against the current rows (ordered elimination).
  SparseVector reduce(SparseVector v) const;
  std::size_t rank() const { return rows_.size(); }
  Subspace finish() &&;

 private:
  Index cols_;
  std::vector<SparseVector> rows_;
  std::unordered_map<Index, std::size_t> pivot_;
};

/// Reduced row echelon form of the row space and the rank.
std::pair<Subspace, std::size_t> rref(const Matrix& m);
/// Rank only; cheaper than rref since no back-substitution happens.
std::size_t rank(const Matrix& m);
/// Right kernel {v : M v = 0}.
Subspace kernel(const Matrix& m);
/// Left kernel {c : c M = 0}.
Subspace left_kernel(const Matrix& m);
Subspace sum(const Subspace& u, const Subspace& w);
Subspace intersect(const Subspace& u, const Subspace& w);
/// Inverse of a square matrix, or nullopt if singular.
std::optional<Matrix> inverse(const Matrix& m);

}  // namespace nkoszul
