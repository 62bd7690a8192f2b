#ifndef CLASSYM_LINALG_HPP
#define CLASSYM_LINALG_HPP

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <vector>

#include "classym/types.hpp"

namespace classym {
namespace linalg {

/// In-place reduced row echelon form over the Gaussian rationals.
/// Returns the pivot column indices (also the rank).
inline std::vector<int> rref(QMat& m) {
  std::vector<int> pivots;
  Eigen::Index rows = m.rows(), cols = m.cols();
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
    Eigen::Index piv = -1;
    for (Eigen::Index r = row; r < rows; ++r)
      if (!m(r, col).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != row) m.row(piv).swap(m.row(row));
    QScalar inv = QScalar(1) / m(row, col);
    for (Eigen::Index c = col; c < cols; ++c) m(row, c) *= inv;
    for (Eigen::Index r = 0; r < rows; ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      QScalar f = m(r, col);
      for (Eigen::Index c = col; c < cols; ++c) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(static_cast<int>(col));
    ++row;
  }
  return pivots;
}

inline int rank(QMat m) { return static_cast<int>(rref(m).size()); }

/// Columns span the kernel of m. Basis is the standard RREF one
/// (one free column per basis vector, in increasing column order).
inline QMat nullspace(QMat m) {
  Eigen::Index cols = m.cols();
  std::vector<int> pivots = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (int p : pivots) is_pivot[p] = true;
  Eigen::Index nfree = cols - static_cast<Eigen::Index>(pivots.size());
  QMat basis = QMat::Constant(cols, nfree, QScalar(0));
  Eigen::Index out = 0;
  for (Eigen::Index free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    basis(free, out) = QScalar(1);
    for (size_t pr = 0; pr < pivots.size(); ++pr)
      basis(pivots[pr], out) = -m(static_cast<Eigen::Index>(pr), free);
    ++out;
  }
  return basis;
}

/// Numerical rank by singular-value threshold sigma >= rel * sigma_max.
inline int rank(const DMat& m, double rel) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Eigen::JacobiSVD<DMat> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  int r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) >= rel * sv(0)) ++r;
  return r;
}

/// Flattens a complex matrix into a row of 2*rows*cols rationals (Re then Im
/// per entry). Real-span ranks of complex matrices reduce to rational ranks.
inline void append_real_row(QMat& table, Eigen::Index row, const QMat& m) {
  Eigen::Index n = m.rows() * m.cols(), idx = 0;
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      table(row, idx) = QScalar(m(r, c).real());
      table(row, n + idx) = QScalar(m(r, c).imag());
      ++idx;
    }
}

inline QMat real_coordinate_table(const std::vector<QMat>& mats) {
  if (mats.empty()) return QMat(0, 0);
  Eigen::Index n = mats[0].rows() * mats[0].cols();
  QMat table = QMat::Constant(static_cast<Eigen::Index>(mats.size()), 2 * n, QScalar(0));
  for (size_t i = 0; i < mats.size(); ++i)
    append_real_row(table, static_cast<Eigen::Index>(i), mats[i]);
  return table;
}

/// Rank of the real span of a family of complex matrices.
inline int real_span_rank(const std::vector<QMat>& mats) {
  return rank(real_coordinate_table(mats));
}

/// Rank of the complex span (each matrix flattened over C).
inline int complex_span_rank(const std::vector<QMat>& mats) {
  if (mats.empty()) return 0;
  Eigen::Index n = mats[0].rows() * mats[0].cols();
  QMat table = QMat::Constant(static_cast<Eigen::Index>(mats.size()), n, QScalar(0));
  for (size_t i = 0; i < mats.size(); ++i) {
    Eigen::Index idx = 0;
    for (Eigen::Index r = 0; r < mats[i].rows(); ++r)
      for (Eigen::Index c = 0; c < mats[i].cols(); ++c) table(static_cast<Eigen::Index>(i), idx++) = mats[i](r, c);
  }
  return rank(std::move(table));
}

/// True iff x lies in the real span of mats (exact).
inline bool in_real_span(const std::vector<QMat>& mats, const QMat& x) {
  QMat table = real_coordinate_table(mats);
  int r0 = rank(table);
  QMat extended(table.rows() + 1, table.cols());
  extended.topRows(table.rows()) = table;
  append_real_row(extended, table.rows(), x);
  return rank(std::move(extended)) == r0;
}

inline bool in_complex_span(const std::vector<QMat>& mats, const QMat& x) {
  std::vector<QMat> all = mats;
  all.push_back(x);
  return complex_span_rank(all) == complex_span_rank(mats);
}

}  // namespace linalg
}  // namespace classym

#endif
