#include "classym/parabolic.hpp"

#include <stdexcept>

#include "classym/linalg.hpp"

namespace classym {

namespace {

/// Rows spanning {c in C^k : c^T v = 0 for all columns v of span}.
QMat left_annihilator(const QMat& span) {
  QMat t = span.transpose();
  QMat kernel = linalg::nullspace(std::move(t));  // k x (k - m)
  return kernel.transpose();
}

}  // namespace

Subspace coordinate_subspace(int k, int m) {
  if (m < 1 || m >= k) throw std::invalid_argument("coordinate subspace needs 1 <= m < k");
  QMat span = QMat::Constant(k, m, QScalar(0));
  for (int j = 0; j < m; ++j) span(j, j) = QScalar(1);
  return {std::move(span), "L_" + std::to_string(m)};
}

Subspace isotropic_pair_subspace(int k, int m, bool primed) {
  if (m < 1 || 2 * m > k) throw std::invalid_argument("isotropic pair subspace needs 2m <= k");
  QMat span = QMat::Constant(k, m, QScalar(0));
  for (int j = 0; j < m; ++j) {
    span(2 * j, j) = (primed && j == 0) ? QScalar(-1) : QScalar(1);
    span(2 * j + 1, j) = QScalar::i();
  }
  return {std::move(span), std::string(primed ? "L'_" : "L_") + std::to_string(m)};
}

int stabilizer_dimension(const LieBasis& basis, const QMat& span) {
  if (span.rows() != basis.matrix_size)
    throw std::invalid_argument("subspace ambient size does not match basis");
  QMat ann = left_annihilator(span);  // (k - m) x k
  int d = basis.dim();
  Eigen::Index nconstraints = ann.rows() * span.cols();
  if (basis.real_field) {
    QMat table = QMat::Constant(2 * nconstraints, d, QScalar(0));
    for (int i = 0; i < d; ++i) {
      QMat vals = ann * basis.mats[i] * span;  // (k-m) x m
      Eigen::Index row = 0;
      for (Eigen::Index r = 0; r < vals.rows(); ++r)
        for (Eigen::Index c = 0; c < vals.cols(); ++c) {
          table(2 * row, i) = QScalar(vals(r, c).real());
          table(2 * row + 1, i) = QScalar(vals(r, c).imag());
          ++row;
        }
    }
    return d - linalg::rank(std::move(table));
  }
  QMat table = QMat::Constant(nconstraints, d, QScalar(0));
  for (int i = 0; i < d; ++i) {
    QMat vals = ann * basis.mats[i] * span;
    Eigen::Index row = 0;
    for (Eigen::Index r = 0; r < vals.rows(); ++r)
      for (Eigen::Index c = 0; c < vals.cols(); ++c) table(row++, i) = vals(r, c);
  }
  return d - linalg::rank(std::move(table));
}

std::string projective_model_name(int n) { return "P^" + std::to_string(n); }
std::string quadric_model_name(int n) { return "Q_" + std::to_string(n); }

std::vector<ParabolicClass> max_parabolic_classes(const SeriesTag& tag) {
  if (!series_tag_valid(tag)) throw std::invalid_argument("invalid series tag");
  int k = tag.k;
  LieBasis basis = build_complex_algebra(tag);
  int model_dim = (tag.series == Series::A || tag.series == Series::C) ? k - 1 : k - 2;

  std::vector<Subspace> candidates;
  switch (tag.series) {
    case Series::A:
      for (int m = 1; m < k; ++m) candidates.push_back(coordinate_subspace(k, m));
      break;
    case Series::C:
      for (int m = 1; m <= k / 2; ++m) candidates.push_back(coordinate_subspace(k, m));
      break;
    case Series::B:
      for (int m = 1; 2 * m <= k; ++m) candidates.push_back(isotropic_pair_subspace(k, m));
      break;
    case Series::D:
      for (int m = 1; 2 * m <= k; ++m) candidates.push_back(isotropic_pair_subspace(k, m));
      candidates.push_back(isotropic_pair_subspace(k, k / 2, true));
      break;
  }

  std::vector<ParabolicClass> classes;
  for (const Subspace& sub : candidates) {
    int stab = stabilizer_dimension(basis, sub.span);
    int codim = basis.dim() - stab;
    if (codim != model_dim) continue;
    ParabolicClass cls;
    cls.subspace = sub.name;
    cls.m = static_cast<int>(sub.span.cols());
    cls.stabilizer_dim = stab;
    cls.codim = codim;
    if (tag.series == Series::A || tag.series == Series::C)
      cls.quotient = projective_model_name(k - 1);
    else if (tag.series == Series::B && k == 5 && cls.m == 2)
      cls.quotient = projective_model_name(3);
    else
      cls.quotient = quadric_model_name(k - 2);
    classes.push_back(std::move(cls));
  }
  return classes;
}

SeriesTag normalized_complexification(const RealFormSpec& spec) {
  std::string why;
  if (!spec_valid(spec, &why)) throw std::invalid_argument("unsupported spec: " + why);
  SeriesTag tag;
  int k = ambient_size(spec);
  switch (spec.family) {
    case Family::SU:
    case Family::SL_R:
    case Family::SL_H:
      tag = {Series::A, k};
      break;
    case Family::SP_PQ:
    case Family::SP_R:
      tag = {Series::C, k};
      break;
    case Family::SO_PQ:
    case Family::SO_STAR:
      tag = {k % 2 ? Series::B : Series::D, k};
      break;
    case Family::COMPLEX:
      tag = spec.series;
      break;
  }
  if (tag.series == Series::C && tag.k == 4) tag = {Series::B, 5};
  if ((tag.series == Series::B || tag.series == Series::D) && tag.k == 6)
    tag = {Series::A, 4};
  return tag;
}

ConditionResult check_conditions(const RealFormSpec& spec, int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  ConditionResult res;
  res.normalized = normalized_complexification(spec);
  res.k = res.normalized.k;
  res.n = n;
  bool projective_series =
      res.normalized.series == Series::A || res.normalized.series == Series::C;
  if (projective_series) {
    res.condition_gt = res.k > n;
    res.condition_eq = res.k == n + 1;
  } else {
    res.condition_gt = res.k > n + 1;
    res.condition_eq = res.k == n + 2;
  }
  res.admissible = res.condition_gt && res.condition_eq;
  if (res.admissible) {
    if (projective_series)
      res.models = {projective_model_name(n)};
    else if (res.normalized.series == Series::B && res.k == 5)
      res.models = {projective_model_name(3), quadric_model_name(3)};
    else
      res.models = {quadric_model_name(n)};
  }
  return res;
}

}  // namespace classym
