#pragma once

// Dense exact linear algebra over Q(zeta_m).

#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

#include "rgkm/cyclotomic.hpp"

namespace rgkm {

using Vector = std::vector<CycNum>;

/// Square matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n);
  Matrix(std::size_t n, std::vector<CycNum> entries);

  static Matrix identity(std::size_t n);

  std::size_t size() const { return n_; }
  const CycNum& operator()(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }
  CycNum& operator()(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }
  const std::vector<CycNum>& entries() const { return a_; }

  Matrix operator*(const Matrix& other) const;
  Matrix operator-(const Matrix& other) const;
  /// Row vector times matrix.
  Vector left_apply(const Vector& row) const;

  /// Throws SingularMatrix.
  Matrix inverse() const;
  std::optional<Matrix> try_inverse() const;
  CycNum determinant() const;
  std::size_t rank() const;
  CycNum trace() const;
  bool is_identity() const;

  friend bool operator==(const Matrix& a, const Matrix& b) = default;
  friend std::strong_ordering operator<=>(const Matrix& a, const Matrix& b);

 private:
  std::size_t n_ = 0;
  std::vector<CycNum> a_;
};

/// Reduced row echelon form of a list of rows of common length.
struct RowEchelon {
  std::vector<Vector> rows;          // nonzero rows only
  std::vector<std::size_t> pivots;   // pivot column of each row
  std::size_t ncols = 0;

  std::size_t rank() const { return rows.size(); }
};

RowEchelon row_reduce(std::vector<Vector> rows, std::size_t ncols);
std::size_t rank_of(std::vector<Vector> rows, std::size_t ncols);

/// Basis of {v : row . v = 0 for every row}, one vector per free column in
/// increasing column order, with a 1 in that column.
std::vector<Vector> nullspace(std::vector<Vector> rows, std::size_t ncols);

/// Echelon basis that grows one vector at a time; used for greedy basis
/// selection where each candidate is kept iff it is independent.
class IncrementalSpan {
 public:
  explicit IncrementalSpan(std::size_t ncols) : ncols_(ncols) {}

  /// Adds v if it is outside the current span; returns whether it was added.
  bool add(Vector v);
  bool contains(Vector v) const;
  std::size_t rank() const { return rows_.size(); }

 private:
  // Reduces v against the stored rows in place.
  void reduce(Vector& v) const;

  std::size_t ncols_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace rgkm
