#include "rgkm/linalg.hpp"

#include <algorithm>
#include <utility>

#include "rgkm/errors.hpp"

namespace rgkm {

Matrix::Matrix(std::size_t n) : n_(n), a_(n * n) {}

Matrix::Matrix(std::size_t n, std::vector<CycNum> entries) : n_(n), a_(std::move(entries)) {
  if (a_.size() != n * n) throw DimensionMismatch("matrix entry count is not n*n");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = CycNum(1L);
  return m;
}

Matrix Matrix::operator*(const Matrix& other) const {
  if (other.n_ != n_) throw DimensionMismatch("matrix size mismatch");
  Matrix r(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t k = 0; k < n_; ++k) {
      const CycNum& aik = (*this)(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        const CycNum& bkj = other(k, j);
        if (!bkj.is_zero()) r(i, j) += aik * bkj;
      }
    }
  }
  return r;
}

Matrix Matrix::operator-(const Matrix& other) const {
  if (other.n_ != n_) throw DimensionMismatch("matrix size mismatch");
  Matrix r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= other.a_[i];
  return r;
}

Vector Matrix::left_apply(const Vector& row) const {
  if (row.size() != n_) throw DimensionMismatch("vector length mismatch");
  Vector out(n_);
  for (std::size_t k = 0; k < n_; ++k) {
    if (row[k].is_zero()) continue;
    for (std::size_t j = 0; j < n_; ++j) {
      const CycNum& e = (*this)(k, j);
      if (!e.is_zero()) out[j] += row[k] * e;
    }
  }
  return out;
}

std::optional<Matrix> Matrix::try_inverse() const {
  // Gauss-Jordan on [A | I].
  std::vector<Vector> rows(n_, Vector(2 * n_));
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) rows[i][j] = (*this)(i, j);
    rows[i][n_ + i] = CycNum(1L);
  }
  for (std::size_t col = 0; col < n_; ++col) {
    std::size_t sel = col;
    while (sel < n_ && rows[sel][col].is_zero()) ++sel;
    if (sel == n_) return std::nullopt;
    std::swap(rows[sel], rows[col]);
    const CycNum inv = rows[col][col].inverse();
    for (auto& v : rows[col]) v *= inv;
    for (std::size_t r = 0; r < n_; ++r) {
      if (r == col || rows[r][col].is_zero()) continue;
      const CycNum f = rows[r][col];
      for (std::size_t c = col; c < 2 * n_; ++c) {
        if (!rows[col][c].is_zero()) rows[r][c] -= f * rows[col][c];
      }
    }
  }
  Matrix inv(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) inv(i, j) = rows[i][n_ + j];
  }
  return inv;
}

Matrix Matrix::inverse() const {
  auto inv = try_inverse();
  if (!inv) throw SingularMatrix("matrix is singular");
  return *std::move(inv);
}

CycNum Matrix::determinant() const {
  std::vector<Vector> rows(n_, Vector(n_));
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) rows[i][j] = (*this)(i, j);
  }
  CycNum det(1L);
  for (std::size_t col = 0; col < n_; ++col) {
    std::size_t sel = col;
    while (sel < n_ && rows[sel][col].is_zero()) ++sel;
    if (sel == n_) return CycNum();
    if (sel != col) {
      std::swap(rows[sel], rows[col]);
      det = -det;
    }
    det *= rows[col][col];
    const CycNum inv = rows[col][col].inverse();
    for (std::size_t r = col + 1; r < n_; ++r) {
      if (rows[r][col].is_zero()) continue;
      const CycNum f = rows[r][col] * inv;
      for (std::size_t c = col; c < n_; ++c) rows[r][c] -= f * rows[col][c];
    }
  }
  return det;
}

std::size_t Matrix::rank() const {
  std::vector<Vector> rows(n_, Vector(n_));
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) rows[i][j] = (*this)(i, j);
  }
  return rank_of(std::move(rows), n_);
}

CycNum Matrix::trace() const {
  CycNum t;
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

bool Matrix::is_identity() const {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      const CycNum& e = (*this)(i, j);
      if (i == j ? !e.is_one() : !e.is_zero()) return false;
    }
  }
  return true;
}

std::strong_ordering operator<=>(const Matrix& a, const Matrix& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.a_.begin(), a.a_.end(), b.a_.begin(),
                                                b.a_.end());
}

RowEchelon row_reduce(std::vector<Vector> rows, std::size_t ncols) {
  RowEchelon out;
  out.ncols = ncols;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < ncols && pivot_row < rows.size(); ++col) {
    std::size_t sel = pivot_row;
    while (sel < rows.size() && rows[sel][col].is_zero()) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[sel], rows[pivot_row]);
    Vector& p = rows[pivot_row];
    const CycNum inv = p[col].inverse();
    for (std::size_t c = col; c < ncols; ++c) {
      if (!p[c].is_zero()) p[c] *= inv;
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == pivot_row || rows[r][col].is_zero()) continue;
      const CycNum f = rows[r][col];
      for (std::size_t c = col; c < ncols; ++c) {
        if (!p[c].is_zero()) rows[r][c] -= f * p[c];
      }
    }
    out.pivots.push_back(col);
    ++pivot_row;
  }
  rows.resize(pivot_row);
  out.rows = std::move(rows);
  return out;
}

std::size_t rank_of(std::vector<Vector> rows, std::size_t ncols) {
  return row_reduce(std::move(rows), ncols).rank();
}

std::vector<Vector> nullspace(std::vector<Vector> rows, std::size_t ncols) {
  const RowEchelon ech = row_reduce(std::move(rows), ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (auto p : ech.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    Vector v(ncols);
    v[free] = CycNum(1L);
    for (std::size_t r = 0; r < ech.rows.size(); ++r) {
      const CycNum& e = ech.rows[r][free];
      if (!e.is_zero()) v[ech.pivots[r]] = -e;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

void IncrementalSpan::reduce(Vector& v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const std::size_t col = pivots_[r];
    if (v[col].is_zero()) continue;
    const CycNum f = v[col];
    for (std::size_t c = col; c < ncols_; ++c) {
      if (!rows_[r][c].is_zero()) v[c] -= f * rows_[r][c];
    }
  }
}

bool IncrementalSpan::contains(Vector v) const {
  if (v.size() != ncols_) throw DimensionMismatch("vector length mismatch");
  reduce(v);
  return std::all_of(v.begin(), v.end(), [](const CycNum& c) { return c.is_zero(); });
}

bool IncrementalSpan::add(Vector v) {
  if (v.size() != ncols_) throw DimensionMismatch("vector length mismatch");
  reduce(v);
  std::size_t col = 0;
  while (col < ncols_ && v[col].is_zero()) ++col;
  if (col == ncols_) return false;
  const CycNum inv = v[col].inverse();
  for (std::size_t c = col; c < ncols_; ++c) {
    if (!v[c].is_zero()) v[c] *= inv;
  }
  // Keep stored rows fully reduced against the new pivot.
  for (auto& row : rows_) {
    if (row[col].is_zero()) continue;
    const CycNum f = row[col];
    for (std::size_t c = col; c < ncols_; ++c) {
      if (!v[c].is_zero()) row[c] -= f * v[c];
    }
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(col);
  return true;
}

}  // namespace rgkm
