#include "classym/flag_models.hpp"

#include <sstream>
#include <stdexcept>

#include "classym/linalg.hpp"

namespace classym {

int pivot_index(const QVec& z) {
  int best = -1;
  mpq_class best_norm(0);
  for (Eigen::Index j = 0; j < z.size(); ++j) {
    mpq_class n = z(j).norm2();
    if (n > best_norm) {
      best_norm = n;
      best = static_cast<int>(j);
    }
  }
  if (best < 0) throw std::invalid_argument("zero vector has no projective class");
  return best;
}

int pivot_index(const DVec& z) {
  int best = -1;
  double best_norm = 0.0;
  for (Eigen::Index j = 0; j < z.size(); ++j) {
    double n = std::norm(z(j));
    if (n > best_norm) {
      best_norm = n;
      best = static_cast<int>(j);
    }
  }
  if (best < 0) throw std::invalid_argument("zero vector has no projective class");
  return best;
}

QVec canonicalize(const QVec& z) {
  QScalar piv = z(pivot_index(z));
  QVec out(z.size());
  for (Eigen::Index j = 0; j < z.size(); ++j) out(j) = z(j) / piv;
  return out;
}

DVec canonicalize(const DVec& z) { return z / z(pivot_index(z)); }

QScalar square_sum(const QVec& z) {
  QScalar s(0);
  for (Eigen::Index j = 0; j < z.size(); ++j) s += z(j) * z(j);
  return s;
}

DScalar square_sum(const DVec& z) {
  DScalar s(0.0, 0.0);
  for (Eigen::Index j = 0; j < z.size(); ++j) s += z(j) * z(j);
  return s;
}

bool on_quadric(const QVec& z) { return square_sum(z).is_zero(); }

bool on_quadric(const DVec& z, const ToleranceContext& tol) {
  double scale = z.squaredNorm();
  return std::abs(square_sum(z)) <= tol.form_zero * (scale > 0 ? scale : 1.0);
}

bool is_projectively_real(const QVec& z) {
  QMat table = QMat::Constant(2, z.size(), QScalar(0));
  for (Eigen::Index j = 0; j < z.size(); ++j) {
    table(0, j) = QScalar(z(j).real());
    table(1, j) = QScalar(z(j).imag());
  }
  return linalg::rank(std::move(table)) <= 1;
}

bool is_projectively_real(const DVec& z, const ToleranceContext& tol) {
  DMat table(2, z.size());
  for (Eigen::Index j = 0; j < z.size(); ++j) {
    table(0, j) = DScalar(z(j).real(), 0.0);
    table(1, j) = DScalar(z(j).imag(), 0.0);
  }
  return linalg::rank(table, tol.rank_rel) <= 1;
}

QVec parse_point(const std::string& s) {
  std::vector<QScalar> entries;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ':')) entries.push_back(QScalar::parse(part));
  if (entries.size() < 2) throw std::invalid_argument("point needs at least two coordinates");
  QVec z(static_cast<Eigen::Index>(entries.size()));
  for (size_t j = 0; j < entries.size(); ++j) z(static_cast<Eigen::Index>(j)) = entries[j];
  if (is_zero(QMat(z))) throw std::invalid_argument("zero vector has no projective class");
  return z;
}

std::string point_to_string(const QVec& z) {
  std::string out;
  for (Eigen::Index j = 0; j < z.size(); ++j) {
    if (j) out += ":";
    out += z(j).str();
  }
  return out;
}

std::string point_to_string(const DVec& z) {
  std::ostringstream out;
  for (Eigen::Index j = 0; j < z.size(); ++j) {
    if (j) out << ":";
    out << z(j).real();
    if (z(j).imag() != 0.0) out << (z(j).imag() > 0 ? "+" : "") << z(j).imag() << "i";
  }
  return out.str();
}

DVec random_projective_point(int k, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  DVec z(k);
  do {
    for (int j = 0; j < k; ++j) z(j) = DScalar(gauss(rng), gauss(rng));
  } while (z.norm() < 1e-6);
  return canonicalize(z);
}

DVec random_quadric_point(int k, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  while (true) {
    Eigen::VectorXd x(k), y(k);
    for (int j = 0; j < k; ++j) x(j) = gauss(rng);
    for (int j = 0; j < k; ++j) y(j) = gauss(rng);
    y -= (x.dot(y) / x.squaredNorm()) * x;
    if (y.norm() < 1e-6 || x.norm() < 1e-6) continue;
    y *= x.norm() / y.norm();
    DVec z(k);
    for (int j = 0; j < k; ++j) z(j) = DScalar(x(j), y(j));
    return canonicalize(z);
  }
}

QVec random_quadric_point_exact(int k, std::mt19937_64& rng) {
  if (k < 3) throw std::invalid_argument("exact quadric sampling needs ambient dimension >= 3");
  std::uniform_int_distribution<int> small(-9, 9);
  while (true) {
    QVec u(k);
    for (int j = 0; j < k; ++j) u(j) = QScalar(static_cast<long>(small(rng)));
    QScalar uu(0);
    for (int j = 0; j < k; ++j) uu += u(j) * u(j);
    QScalar z0u = u(0) + QScalar::i() * u(1);  // bilinear dot with (1, i, 0, ...)
    QVec z = QVec::Constant(k, QScalar(0));
    z(0) = uu;
    z(1) = uu * QScalar::i();
    z -= QScalar(2) * z0u * u;
    if (is_zero(QMat(z))) continue;
    return canonicalize(z);
  }
}

}  // namespace classym
