#pragma once

// Exact linear algebra over the rationals: matrices, row reduction, kernels,
// and linear subspaces ("flats") represented by their annihilating covectors.

#include <cstddef>
#include <utility>
#include <vector>

#include "hyparr/errors.hpp"
#include "hyparr/rational.hpp"

namespace hyparr {

using QVector = std::vector<Rat>;

class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static QMatrix from_rows(const std::vector<QVector>& rows, std::size_t cols) {
    QMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw DomainError("QMatrix: ragged rows");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static QMatrix identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  QVector row(std::size_t i) const {
    return QVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }

  QMatrix transpose() const {
    QMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  /// Stacks the rows of `other` below this matrix.
  QMatrix stacked(const QMatrix& other) const {
    if (other.cols_ != cols_ && rows_ && other.rows_) throw DomainError("QMatrix: column mismatch");
    QMatrix m(rows_ + other.rows_, rows_ ? cols_ : other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
    for (std::size_t i = 0; i < other.rows_; ++i)
      for (std::size_t j = 0; j < other.cols_; ++j) m(rows_ + i, j) = other(i, j);
    return m;
  }

  /// Drops rows that are entirely zero.
  QMatrix without_zero_rows() const {
    std::vector<QVector> kept;
    for (std::size_t i = 0; i < rows_; ++i) {
      QVector r = row(i);
      for (const Rat& x : r)
        if (x != 0) {
          kept.push_back(std::move(r));
          break;
        }
    }
    return from_rows(kept, cols_);
  }

  friend bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

struct RrefResult {
  QMatrix matrix;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form by Gauss-Jordan elimination. Zero rows sink to the
/// bottom, so the result has the same shape as the input.
inline RrefResult rref(QMatrix m) {
  RrefResult out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    const Rat inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Rat f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  out.matrix = std::move(m);
  return out;
}

inline std::size_t rank(const QMatrix& m) { return rref(m).rank; }

/// Basis of the right kernel {x : M x = 0}, one vector per free column.
inline std::vector<QVector> kernel(const QMatrix& m) {
  const RrefResult red = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : red.pivots) is_pivot[c] = true;
  std::vector<QVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    QVector v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < red.pivots.size(); ++i) v[red.pivots[i]] = -red.matrix(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// True iff `v` lies in the row space of `m`.
inline bool in_row_space(const QMatrix& m, const QVector& v) {
  if (m.rows() == 0) {
    for (const Rat& x : v)
      if (x != 0) return false;
    return true;
  }
  return rank(m.stacked(QMatrix::from_rows({v}, m.cols()))) == rank(m);
}

/// A linear subspace of Q^ℓ, stored as the RREF of the covectors vanishing on it.
/// The representation is canonical, so equality is structural.
class Flat {
 public:
  /// The whole space.
  explicit Flat(std::size_t ambient_dim) : dim_(ambient_dim), normals_(0, ambient_dim) {}

  /// The subspace annihilated by the rows of `normals` (any spanning set).
  Flat(std::size_t ambient_dim, const QMatrix& normals) : dim_(ambient_dim) {
    if (normals.rows() && normals.cols() != ambient_dim) throw DomainError("Flat: covector length mismatch");
    normals_ = rref(normals).matrix.without_zero_rows();
    if (normals_.rows() == 0) normals_ = QMatrix(0, ambient_dim);
  }

  static Flat hyperplane(const QVector& covector) {
    return Flat(covector.size(), QMatrix::from_rows({covector}, covector.size()));
  }

  std::size_t ambient_dim() const noexcept { return dim_; }
  std::size_t codim() const noexcept { return normals_.rows(); }
  const QMatrix& normals() const noexcept { return normals_; }

  /// Spanning vectors of the subspace itself.
  std::vector<QVector> basis() const {
    if (normals_.rows() == 0) {
      std::vector<QVector> b;
      for (std::size_t i = 0; i < dim_; ++i) {
        QVector e(dim_);
        e[i] = 1;
        b.push_back(std::move(e));
      }
      return b;
    }
    return kernel(normals_);
  }

  friend bool operator==(const Flat& a, const Flat& b) {
    return a.dim_ == b.dim_ && a.normals_ == b.normals_;
  }

 private:
  std::size_t dim_;
  QMatrix normals_;
};

/// F ∩ G.
inline Flat flat_meet(const Flat& f, const Flat& g) {
  if (f.ambient_dim() != g.ambient_dim()) throw DomainError("flat_meet: ambient dimension mismatch");
  return Flat(f.ambient_dim(), f.normals().stacked(g.normals()));
}

/// True iff G ⊆ F, i.e. every normal of F lies in the row space of G's normals.
inline bool flat_contains(const Flat& f, const Flat& g) {
  if (f.ambient_dim() != g.ambient_dim()) throw DomainError("flat_contains: ambient dimension mismatch");
  for (std::size_t i = 0; i < f.codim(); ++i)
    if (!in_row_space(g.normals(), f.normals().row(i))) return false;
  return true;
}

}  // namespace hyparr
