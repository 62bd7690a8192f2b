#ifndef CLASSYM_TYPES_HPP
#define CLASSYM_TYPES_HPP

#include <Eigen/Dense>
#include <complex>

#include "classym/gaussian_rational.hpp"

namespace classym {

template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;

using QScalar = GaussianRational;
using DScalar = std::complex<double>;

using QMat = Mat<QScalar>;
using QVec = Vec<QScalar>;
using DMat = Eigen::MatrixXcd;
using DVec = Eigen::VectorXcd;

/// Tolerances for the floating-point mode. Exact mode ignores them.
struct ToleranceContext {
  double form_zero = 1e-10;       // |form| <= form_zero * scale counts as zero
  double boundary_band = 1e-8;    // values in (zero, band) * scale are flagged uncertain
  double rank_rel = 1e-8;         // sigma >= rank_rel * sigma_max counts toward rank
  double flow_residual = 1e-9;
};

template <class S>
struct scalar_ops;

template <>
struct scalar_ops<QScalar> {
  static constexpr bool exact = true;
  using real_t = mpq_class;
  static QScalar make(long re) { return QScalar(re); }
  static QScalar imag_unit() { return QScalar::i(); }
  static QScalar conjugate(const QScalar& z) { return z.conj(); }
  static real_t real_part(const QScalar& z) { return z.real(); }
  static real_t imag_part(const QScalar& z) { return z.imag(); }
  static real_t abs2(const QScalar& z) { return z.norm2(); }
  static bool is_zero(const QScalar& z) { return z.is_zero(); }
  static int sign(const real_t& r) { return sgn(r); }
  static double to_double(const real_t& r) { return r.get_d(); }
};

template <>
struct scalar_ops<DScalar> {
  static constexpr bool exact = false;
  using real_t = double;
  static DScalar make(long re) { return DScalar(static_cast<double>(re), 0.0); }
  static DScalar imag_unit() { return DScalar(0.0, 1.0); }
  static DScalar conjugate(const DScalar& z) { return std::conj(z); }
  static real_t real_part(const DScalar& z) { return z.real(); }
  static real_t imag_part(const DScalar& z) { return z.imag(); }
  static real_t abs2(const DScalar& z) { return std::norm(z); }
  static bool is_zero(const DScalar& z) { return z == DScalar(0.0, 0.0); }
  static int sign(double r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }
  static double to_double(double r) { return r; }
};

inline DMat to_float(const QMat& m) {
  DMat out(m.rows(), m.cols());
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) out(r, c) = m(r, c).to_complex();
  return out;
}

inline DVec to_float(const QVec& v) {
  DVec out(v.size());
  for (Eigen::Index r = 0; r < v.size(); ++r) out(r) = v(r).to_complex();
  return out;
}

/// Conjugate transpose for exact matrices (Eigen's adjoint() wants a complex
/// NumTraits, which the exact scalar deliberately does not advertise).
inline QMat adjoint(const QMat& m) {
  QMat out(m.cols(), m.rows());
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) out(c, r) = m(r, c).conj();
  return out;
}

inline QMat conjugate(const QMat& m) {
  QMat out(m.rows(), m.cols());
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) out(r, c) = m(r, c).conj();
  return out;
}

inline QScalar trace(const QMat& m) {
  QScalar t(0);
  for (Eigen::Index r = 0; r < m.rows(); ++r) t += m(r, r);
  return t;
}

inline bool is_zero(const QMat& m) {
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero()) return false;
  return true;
}

}  // namespace classym

#endif
