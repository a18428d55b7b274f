#pragma once

// Exact linear algebra over fields without rounding: row reduction, rank and
// nullspace for dense Eigen matrices, plus a sparse eliminator for the large
// but very sparse systems produced by coefficient extraction.

#include <Eigen/Core>

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

namespace skewo {

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// In-place reduced row echelon form. Returns pivot columns in order.
template <typename Scalar>
std::vector<Eigen::Index> rref_in_place(MatrixX<Scalar>& m) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index sel = -1;
    for (Eigen::Index r = row; r < m.rows(); ++r) {
      if (m(r, col) != Scalar(0)) {
        sel = r;
        break;
      }
    }
    if (sel < 0) continue;
    if (sel != row) m.row(sel).swap(m.row(row));
    const Scalar inv = Scalar(1) / m(row, col);
    for (Eigen::Index c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == Scalar(0)) continue;
      const Scalar factor = m(r, col);
      for (Eigen::Index c = col; c < m.cols(); ++c) m(r, c) -= factor * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <typename Scalar>
Eigen::Index exact_rank(MatrixX<Scalar> m) {
  return static_cast<Eigen::Index>(rref_in_place(m).size());
}

/// Columns of the result span the right nullspace of `m`; one basis vector
/// per free column, with a 1 in that column.
template <typename Scalar>
MatrixX<Scalar> nullspace(MatrixX<Scalar> m) {
  const auto pivots = rref_in_place(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (auto p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<Eigen::Index> free_cols;
  for (Eigen::Index c = 0; c < m.cols(); ++c)
    if (!is_pivot[static_cast<std::size_t>(c)]) free_cols.push_back(c);

  MatrixX<Scalar> basis = MatrixX<Scalar>::Zero(m.cols(), static_cast<Eigen::Index>(free_cols.size()));
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const auto fc = free_cols[k];
    basis(fc, static_cast<Eigen::Index>(k)) = Scalar(1);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      basis(pivots[r], static_cast<Eigen::Index>(k)) = -m(static_cast<Eigen::Index>(r), fc);
  }
  return basis;
}

/// Solves m * x = b for one particular solution; returns false if the system
/// is inconsistent.
template <typename Scalar>
bool solve_exact(const MatrixX<Scalar>& m, const VectorX<Scalar>& b, VectorX<Scalar>& x) {
  MatrixX<Scalar> aug(m.rows(), m.cols() + 1);
  aug.leftCols(m.cols()) = m;
  aug.col(m.cols()) = b;
  const auto pivots = rref_in_place(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return false;
  x = VectorX<Scalar>::Zero(m.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r)
    x(pivots[r]) = aug(static_cast<Eigen::Index>(r), m.cols());
  return true;
}

/// Incremental Gauss-Jordan over sparse rows (column index -> coefficient).
/// Rows are reduced against the current basis on insertion, so the stored
/// rows always form a reduced echelon basis of the row space.
template <typename Scalar>
class SparseEliminator {
 public:
  using Row = std::map<std::size_t, Scalar>;

  explicit SparseEliminator(std::size_t columns) : columns_(columns) {}

  /// Returns true if the row increased the rank.
  bool add_row(Row row) {
    reduce(row);
    if (row.empty()) return false;
    const std::size_t pivot = row.begin()->first;
    const Scalar inv = Scalar(1) / row.begin()->second;
    for (auto& [c, v] : row) v *= inv;
    for (auto& [p, other] : rows_) {
      auto it = other.find(pivot);
      if (it == other.end()) continue;
      const Scalar factor = it->second;
      axpy(other, row, -factor);
    }
    rows_.emplace(pivot, std::move(row));
    return true;
  }

  std::size_t rank() const { return rows_.size(); }
  std::size_t columns() const { return columns_; }
  std::size_t nullity() const { return columns_ - rows_.size(); }

  /// A column is forced to zero on the solution space iff it is a pivot whose
  /// reduced row has no other entry.
  bool forced_zero(std::size_t column) const {
    auto it = rows_.find(column);
    return it != rows_.end() && it->second.size() == 1;
  }

  const std::map<std::size_t, Row>& rows() const { return rows_; }

  /// Basis of the solution space: one vector per free column, with a 1 there.
  std::vector<Row> null_vectors() const {
    std::vector<Row> out;
    for (std::size_t fc = 0; fc < columns_; ++fc) {
      if (rows_.count(fc)) continue;
      Row v{{fc, Scalar(1)}};
      for (const auto& [p, row] : rows_) {
        auto it = row.find(fc);
        if (it != row.end()) v.emplace(p, -it->second);
      }
      out.push_back(std::move(v));
    }
    return out;
  }

 private:
  static void axpy(Row& target, const Row& source, const Scalar& factor) {
    for (const auto& [c, v] : source) {
      auto it = target.find(c);
      if (it == target.end()) {
        target.emplace(c, factor * v);
      } else {
        it->second += factor * v;
        if (it->second == Scalar(0)) target.erase(it);
      }
    }
  }

  void reduce(Row& row) const {
    for (auto it = row.begin(); it != row.end();) {
      if (it->second == Scalar(0)) {
        it = row.erase(it);
        continue;
      }
      auto basis = rows_.find(it->first);
      if (basis == rows_.end()) {
        ++it;
        continue;
      }
      const Scalar factor = -it->second;
      const std::size_t col = it->first;
      axpy(row, basis->second, factor);
      it = row.upper_bound(col);
    }
  }

  std::size_t columns_;
  std::map<std::size_t, Row> rows_;
};

}  // namespace skewo
