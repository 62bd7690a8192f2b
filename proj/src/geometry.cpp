#include "classym/geometry.hpp"

#include <stdexcept>

#include "classym/flag_models.hpp"
#include "classym/linalg.hpp"

namespace classym {

QVec tangent_chart_vector(const QMat& x, const QVec& z, int pivot) {
  QVec xz = x * z;
  QScalar mu = xz(pivot) / z(pivot);
  QVec v(z.size() - 1);
  Eigen::Index out = 0;
  for (Eigen::Index j = 0; j < z.size(); ++j) {
    if (j == pivot) continue;
    v(out++) = (xz(j) - mu * z(j)) / z(pivot);
  }
  return v;
}

DVec tangent_chart_vector(const DMat& x, const DVec& z, int pivot) {
  DVec xz = x * z;
  DScalar mu = xz(pivot) / z(pivot);
  DVec v(z.size() - 1);
  Eigen::Index out = 0;
  for (Eigen::Index j = 0; j < z.size(); ++j) {
    if (j == pivot) continue;
    v(out++) = (xz(j) - mu * z(j)) / z(pivot);
  }
  return v;
}

int orbit_dimension(const LieBasis& basis, const QVec& z) {
  if (z.size() != basis.matrix_size)
    throw std::invalid_argument("orbit_dimension: point size does not match basis");
  int piv = pivot_index(z);
  Eigen::Index m = z.size() - 1;
  QMat table = QMat::Constant(basis.dim(), 2 * m, QScalar(0));
  for (int i = 0; i < basis.dim(); ++i) {
    QVec v = tangent_chart_vector(basis.mats[i], z, piv);
    for (Eigen::Index j = 0; j < m; ++j) {
      table(i, j) = QScalar(v(j).real());
      table(i, m + j) = QScalar(v(j).imag());
    }
  }
  return linalg::rank(std::move(table));
}

int orbit_dimension(const LieBasis& basis, const DVec& z, const ToleranceContext& tol) {
  if (z.size() != basis.matrix_size)
    throw std::invalid_argument("orbit_dimension: point size does not match basis");
  int piv = pivot_index(z);
  Eigen::Index m = z.size() - 1;
  DMat table(basis.dim(), 2 * m);
  for (int i = 0; i < basis.dim(); ++i) {
    DVec v = tangent_chart_vector(to_float(basis.mats[i]), z, piv);
    for (Eigen::Index j = 0; j < m; ++j) {
      table(i, j) = DScalar(v(j).real(), 0.0);
      table(i, m + j) = DScalar(v(j).imag(), 0.0);
    }
  }
  return linalg::rank(table, tol.rank_rel);
}

}  // namespace classym
