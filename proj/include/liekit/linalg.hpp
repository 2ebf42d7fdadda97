#pragma once

#include <cstddef>
#include <memory>
#include <string_view>
#include <utility>
#include <vector>

#include "liekit/scalars.hpp"

namespace liekit {

/// Sparse coordinate vector: (index, nonzero value) pairs in increasing index order.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

SparseVector to_sparse(const Vector& v);
Vector to_dense(const SparseVector& v, std::size_t dim);
bool is_zero(const Vector& v);

/// Largest entry count a dense matrix may have. Defaults to 5'000'000.
std::size_t size_limit();
void set_size_limit(std::size_t entries);
/// Throws TooLarge when rows * cols exceeds the current limit.
void check_size(std::size_t rows, std::size_t cols, std::string_view what);

/// Dense row-major matrix of base-field scalars.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  Matrix transpose() const;
  bool is_zero() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix multiply(const Field& field, const Matrix& a, const Matrix& b);
Vector apply(const Field& field, const Matrix& m, const Vector& v);

/// Incrementally built subspace of K^dim.
///
/// Over Q the rows are kept as primitive integer vectors and combined
/// fraction-free; over F_p they are kept monic. Pivots are leading columns,
/// so the reduced echelon basis is independent of insertion order.
class RowSpace {
 public:
  RowSpace(const Field& field, std::size_t dim);
  ~RowSpace();
  RowSpace(RowSpace&&) noexcept;
  RowSpace& operator=(RowSpace&&) noexcept;
  RowSpace(const RowSpace&);
  RowSpace& operator=(const RowSpace&);

  /// Returns true when v was independent of the rows inserted so far.
  bool insert(const Vector& v);
  bool insert(const SparseVector& v);

  std::size_t rank() const;
  std::size_t dim() const;
  const Field& field() const;
  bool contains(const Vector& v) const;

  /// Reduced row echelon basis with leading coefficient 1, ordered by pivot column.
  std::vector<SparseVector> rref() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

struct RankNullspace {
  std::size_t rank = 0;
  /// Reduced echelon basis of the kernel: one vector per free column, 1 there.
  std::vector<Vector> nullspace;
};

RankNullspace rank_nullspace(const Field& field, const Matrix& m);
std::size_t rank(const Field& field, const Matrix& m);
std::size_t span_dim(const Field& field, std::size_t dim, const std::vector<Vector>& vectors);
/// Reduced echelon basis of the orthogonal complement {x : r . x = 0 for every row r}.
std::vector<Vector> nullspace(const RowSpace& rows);
/// Kernel of the map whose columns are `columns` (each of length `rows`).
std::vector<Vector> kernel_of_columns(const Field& field, std::size_t rows, const std::vector<Vector>& columns);

/// K^ambient modulo the span of a set of generators.
///
/// reduce() clears every pivot coordinate of the subspace's reduced echelon
/// basis; the surviving free coordinates are the canonical quotient coordinates.
class QuotientPresentation {
 public:
  QuotientPresentation() = default;
  QuotientPresentation(const Field& field, std::size_t ambient_dim, const std::vector<Vector>& generators);
  QuotientPresentation(const RowSpace& subspace);

  const Field& field() const noexcept { return field_; }
  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t subspace_dim() const noexcept { return basis_.size(); }
  std::size_t quotient_dim() const noexcept { return ambient_ - basis_.size(); }

  Vector reduce(const Vector& v) const;
  /// Coordinates of the class of v on the free columns.
  Vector coordinates(const Vector& v) const;
  bool contains(const Vector& v) const;
  /// Representative of a coordinate vector (zero on pivot columns).
  Vector lift(const Vector& coords) const;

  const std::vector<SparseVector>& subspace_basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivot_columns() const noexcept { return pivots_; }
  const std::vector<std::size_t>& free_columns() const noexcept { return free_; }

 private:
  void build(const RowSpace& space);

  Field field_ = Field::rationals();
  std::size_t ambient_ = 0;
  std::vector<SparseVector> basis_;
  std::vector<std::size_t> pivots_;
  std::vector<std::size_t> free_;
};

QuotientPresentation quotient(const Field& field, std::size_t ambient_dim, const std::vector<Vector>& generators);

/// An R-linear map between free R-modules, column by column: column c lists
/// (target index, coefficient in R).
using RColumn = std::vector<std::pair<std::size_t, RingElement>>;

/// Base-field matrix of an R-linear map of free modules of ranks `cols` -> `rows`.
/// Flat index of (module index i, ring basis element a) is i * d + a; column
/// (c, b) holds the coordinates of a_b times the image of basis vector c.
/// Over a field domain this is the plain matrix.
Matrix restrict_scalars(const ScalarDomain& domain, std::size_t rows, const std::vector<RColumn>& columns);
/// Same map, but returning the base-field columns in sparse form (avoids dense storage).
std::vector<SparseVector> restrict_scalars_sparse(const ScalarDomain& domain, const std::vector<RColumn>& columns);

}  // namespace liekit
