#include "classym/invariants.hpp"

#include <stdexcept>

#include "classym/flag_models.hpp"
#include "classym/geometry.hpp"
#include "classym/linalg.hpp"
#include "classym/triality.hpp"

namespace classym {

namespace {

/// Sign with a relative zero band and a wider uncertainty band.
int float_sign(double v, double scale, const ToleranceContext& tol, bool& uncertain) {
  double s = scale > 0 ? scale : 1.0;
  if (std::abs(v) <= tol.form_zero * s) return 0;
  uncertain = std::abs(v) <= tol.boundary_band * s;
  return v > 0 ? 1 : -1;
}

mpq_class signed_square_sum_real(int p, int q, const QVec& z, bool imag_part) {
  mpq_class s(0);
  for (int j = 0; j < p + q; ++j) {
    mpq_class c = imag_part ? z(j).imag() : z(j).real();
    if (j < p) s += c * c;
    else s -= c * c;
  }
  return s;
}

double signed_square_sum_real(int p, int q, const DVec& z, bool imag_part) {
  double s = 0;
  for (int j = 0; j < p + q; ++j) {
    double c = imag_part ? z(j).imag() : z(j).real();
    s += (j < p ? 1.0 : -1.0) * c * c;
  }
  return s;
}

/// Hermitian value z^dagger H z with the sp(p,q) slot pattern (+p,-q,+p,-q).
mpq_class sp_hermitian(int p, int q, const QVec& z) {
  int l = p + q;
  mpq_class s(0);
  for (int j = 0; j < 2 * l; ++j) {
    int slot = j % l;
    if (slot < p) s += z(j).norm2();
    else s -= z(j).norm2();
  }
  return s;
}

double sp_hermitian(int p, int q, const DVec& z) {
  int l = p + q;
  double s = 0;
  for (int j = 0; j < 2 * l; ++j) s += ((j % l) < p ? 1.0 : -1.0) * std::norm(z(j));
  return s;
}

/// diag(I_p, -i I_q) z, the inverse signature conjugation.
QVec unconjugate(int p, int q, const QVec& z) {
  QVec w = z;
  for (int j = p; j < p + q; ++j) w(j) = -QScalar::i() * w(j);
  return w;
}

DVec unconjugate(int p, int q, const DVec& z) {
  DVec w = z;
  for (int j = p; j < p + q; ++j) w(j) *= DScalar(0.0, -1.0);
  return w;
}

/// z^dagger H z for a Hermitian matrix H (real by construction).
mpq_class hermitian_value(const QMat& h, const QVec& z) {
  QScalar v(0);
  for (Eigen::Index r = 0; r < z.size(); ++r)
    for (Eigen::Index c = 0; c < z.size(); ++c) v += z(r).conj() * h(r, c) * z(c);
  return v.real();
}

double hermitian_value(const DMat& h, const DVec& z) {
  return (z.adjoint() * h * z)(0, 0).real();
}

/// i * M for the standard so* skew-Hermitian form on C^m: Hermitian, and the
/// sign of z^dagger (iM) z classifies the open orbits.
QMat so_star_hermitian(int m) {
  int h = m / 2;
  QMat f = QMat::Constant(m, m, QScalar(0));
  for (int r = 0; r < h; ++r) {
    f(r, h + r) = -QScalar::i();
    f(h + r, r) = QScalar::i();
  }
  return f;
}

OrbitLabel make(const std::string& name, int dim, bool uncertain = false) {
  return OrbitLabel{name, dim, uncertain};
}

struct So62Form {
  QMat hermitian;  // i * (skew-Hermitian invariant), normalized
  int space_dim = 0;
};

So62Form compute_so62_form(int twist) {
  LieBasis basis = twisted_real_form(6, 2, twist);
  const int k = 8;
  // Unknown M, column-indexed by a*k+b; rows are the entries of
  // X^dagger M + M X per basis element.
  QMat table = QMat::Constant(basis.dim() * k * k, k * k, QScalar(0));
  for (int e = 0; e < basis.dim(); ++e) {
    const QMat& x = basis.mats[e];
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < k; ++c) {
        Eigen::Index row = static_cast<Eigen::Index>(e) * k * k + r * k + c;
        for (int m = 0; m < k; ++m) {
          table(row, m * k + c) += x(m, r).conj();  // (X^dagger M)(r,c)
          table(row, r * k + m) += x(m, c);         // (M X)(r,c)
        }
      }
  }
  QMat kernel = linalg::nullspace(std::move(table));
  So62Form out;
  out.space_dim = static_cast<int>(kernel.cols());
  if (out.space_dim == 0)
    throw std::logic_error("no invariant sesquilinear form for twisted so(6,2)");
  QMat m0 = QMat::Constant(k, k, QScalar(0));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) m0(a, b) = kernel(a * k + b, 0);
  QMat m1 = m0 - adjoint(m0);  // skew-Hermitian representative
  if (is_zero(m1)) m1 = QScalar::i() * m0;
  QMat h = QScalar::i() * m1;  // Hermitian
  // Deterministic sign: first nonzero entry (row-major) gets positive real
  // part (positive imaginary part if its real part vanishes).
  for (int a = 0; a < k * k; ++a) {
    const QScalar& entry = h(a / k, a % k);
    if (entry.is_zero()) continue;
    int s = entry.real() != 0 ? sgn(entry.real()) : sgn(entry.imag());
    if (s < 0) h = QScalar(-1) * h;
    break;
  }
  out.hermitian = std::move(h);
  return out;
}

const So62Form& so62_form(int twist) {
  if (twist != 1 && twist != 2) throw std::invalid_argument("twist must be 1 or 2");
  static const So62Form forms[2] = {compute_so62_form(1), compute_so62_form(2)};
  return forms[twist - 1];
}

const LieBasis& so53_twisted_basis(int twist) {
  if (twist != 1 && twist != 2) throw std::invalid_argument("twist must be 1 or 2");
  static const LieBasis bases[2] = {twisted_real_form(5, 3, 1), twisted_real_form(5, 3, 2)};
  return bases[twist - 1];
}

void check_point_size(const RealFormSpec& spec, Eigen::Index size) {
  if (size != ambient_size(spec))
    throw std::invalid_argument("point has " + std::to_string(size) +
                                " coordinates; " + spec_name(spec) + " needs " +
                                std::to_string(ambient_size(spec)));
}

[[noreturn]] void reject_so44_twist() {
  throw std::invalid_argument(
      "twisted so(4,4) is conjugate to the standard embedding; classify with twist=0");
}

}  // namespace

mpq_class hermitian_form(int p, int q, const QVec& z) {
  mpq_class s(0);
  for (int j = 0; j < p + q; ++j) {
    if (j < p) s += z(j).norm2();
    else s -= z(j).norm2();
  }
  return s;
}

double hermitian_form(int p, int q, const DVec& z) {
  double s = 0;
  for (int j = 0; j < p + q; ++j) s += (j < p ? 1.0 : -1.0) * std::norm(z(j));
  return s;
}

QScalar bracket_form(int p, int q, const QVec& z) {
  QScalar s(0);
  for (int j = 0; j < p + q; ++j) {
    if (j < p) s += z(j) * z(j);
    else s -= z(j) * z(j);
  }
  return s;
}

DScalar bracket_form(int p, int q, const DVec& z) {
  DScalar s(0.0, 0.0);
  for (int j = 0; j < p + q; ++j) s += (j < p ? 1.0 : -1.0) * z(j) * z(j);
  return s;
}

mpq_class symplectic_real_form(const QVec& z) {
  int l = static_cast<int>(z.size()) / 2;
  mpq_class s(0);
  for (int j = 0; j < l; ++j)
    s += z(j).real() * z(l + j).imag() - z(l + j).real() * z(j).imag();
  return s;
}

double symplectic_real_form(const DVec& z) {
  int l = static_cast<int>(z.size()) / 2;
  double s = 0;
  for (int j = 0; j < l; ++j)
    s += z(j).real() * z(l + j).imag() - z(l + j).real() * z(j).imag();
  return s;
}

const QMat& twisted_so62_invariant_form(int twist) { return so62_form(twist).hermitian; }

int twisted_so62_form_space_dimension(int twist) { return so62_form(twist).space_dim; }

bool model_is_quadric(const RealFormSpec& spec) {
  switch (spec.family) {
    case Family::SO_PQ:
    case Family::SO_STAR: return true;
    case Family::COMPLEX: return spec.series.series == Series::B || spec.series.series == Series::D;
    default: return false;
  }
}

int model_projective_dimension(const RealFormSpec& spec) {
  return ambient_size(spec) - (model_is_quadric(spec) ? 2 : 1);
}

OrbitLabel classify_point(const RealFormSpec& spec, const QVec& z) {
  std::string why;
  if (!spec_valid(spec, &why)) throw std::invalid_argument("unsupported spec: " + why);
  check_point_size(spec, z.size());
  int n = model_projective_dimension(spec);
  if (model_is_quadric(spec) && !on_quadric(z))
    throw std::invalid_argument("point is not on the quadric");

  switch (spec.family) {
    case Family::SU: {
      if (spec.q == 0) return make("transitive", 2 * n);
      int s = sgn(hermitian_form(spec.p, spec.q, z));
      if (s > 0) return make("B+", 2 * n);
      if (s < 0) return make("B-", 2 * n);
      return make("Q", 2 * n - 1);
    }
    case Family::SL_R:
      return is_projectively_real(z) ? make("RPn", n) : make("open", 2 * n);
    case Family::SL_H:
    case Family::COMPLEX:
      return make("transitive", 2 * n);
    case Family::SP_PQ: {
      if (spec.q == 0) return make("transitive", 2 * n);
      int s = sgn(sp_hermitian(spec.p, spec.q, z));
      if (s > 0) return make("Bhat+", 2 * n);
      if (s < 0) return make("Bhat-", 2 * n);
      return make("Qhat", 2 * n - 1);
    }
    case Family::SP_R: {
      if (is_projectively_real(z)) return make("RPn", n);
      int s = sgn(symplectic_real_form(z));
      if (s > 0) return make("D+", 2 * n);
      if (s < 0) return make("D-", 2 * n);
      return make("Sigma", 2 * n - 1);
    }
    case Family::SO_PQ: {
      if (spec.twist != 0) {
        if (spec.p == 7) return make("transitive", 2 * n);
        if (spec.p == 4) reject_so44_twist();
        if (spec.p == 6) {
          int s = sgn(hermitian_value(twisted_so62_invariant_form(spec.twist), z));
          if (s > 0) return make("E+", 2 * n);
          if (s < 0) return make("E-", 2 * n);
          return make("S", 2 * n - 1);
        }
        // so(5,3) twisted: no invariant form; the orbit dimension decides.
        int d = orbit_dimension(so53_twisted_basis(spec.twist), z);
        if (d == 9) return make("Gamma", 9);
        if (d == 2 * n) return make("open", 2 * n);
        throw std::logic_error("unexpected twisted so(5,3) orbit dimension " + std::to_string(d));
      }
      if (spec.q == 0) return make("transitive", 2 * n);
      QVec w = unconjugate(spec.p, spec.q, z);
      if (is_projectively_real(w)) return make("S1", n);
      int s = sgn(signed_square_sum_real(spec.p, spec.q, w, false));
      if (s > 0) return make("Omega+", 2 * n);
      if (s < 0) return make("Omega-", 2 * n);
      return make("S2", 2 * n - 1);
    }
    case Family::SO_STAR: {
      int s = sgn(hermitian_value(so_star_hermitian(ambient_size(spec)), z));
      if (s > 0) return make("E+", 2 * n);
      if (s < 0) return make("E-", 2 * n);
      return make("S", 2 * n - 1);
    }
  }
  throw std::logic_error("unreachable");
}

OrbitLabel classify_point(const RealFormSpec& spec, const DVec& z,
                          const ToleranceContext& tol) {
  std::string why;
  if (!spec_valid(spec, &why)) throw std::invalid_argument("unsupported spec: " + why);
  check_point_size(spec, z.size());
  int n = model_projective_dimension(spec);
  if (model_is_quadric(spec) && !on_quadric(z, tol))
    throw std::invalid_argument("point is not on the quadric");
  double scale = z.squaredNorm();
  bool unc = false;

  switch (spec.family) {
    case Family::SU: {
      if (spec.q == 0) return make("transitive", 2 * n);
      int s = float_sign(hermitian_form(spec.p, spec.q, z), scale, tol, unc);
      if (s > 0) return make("B+", 2 * n, unc);
      if (s < 0) return make("B-", 2 * n, unc);
      return make("Q", 2 * n - 1);
    }
    case Family::SL_R:
      return is_projectively_real(z, tol) ? make("RPn", n) : make("open", 2 * n);
    case Family::SL_H:
    case Family::COMPLEX:
      return make("transitive", 2 * n);
    case Family::SP_PQ: {
      if (spec.q == 0) return make("transitive", 2 * n);
      int s = float_sign(sp_hermitian(spec.p, spec.q, z), scale, tol, unc);
      if (s > 0) return make("Bhat+", 2 * n, unc);
      if (s < 0) return make("Bhat-", 2 * n, unc);
      return make("Qhat", 2 * n - 1);
    }
    case Family::SP_R: {
      if (is_projectively_real(z, tol)) return make("RPn", n);
      int s = float_sign(symplectic_real_form(z), scale, tol, unc);
      if (s > 0) return make("D+", 2 * n, unc);
      if (s < 0) return make("D-", 2 * n, unc);
      return make("Sigma", 2 * n - 1);
    }
    case Family::SO_PQ: {
      if (spec.twist != 0) {
        if (spec.p == 7) return make("transitive", 2 * n);
        if (spec.p == 4) reject_so44_twist();
        if (spec.p == 6) {
          DMat h = to_float(twisted_so62_invariant_form(spec.twist));
          int s = float_sign(hermitian_value(h, z), h.norm() * scale, tol, unc);
          if (s > 0) return make("E+", 2 * n, unc);
          if (s < 0) return make("E-", 2 * n, unc);
          return make("S", 2 * n - 1);
        }
        int d = orbit_dimension(so53_twisted_basis(spec.twist), z, tol);
        if (d == 9) return make("Gamma", 9);
        if (d == 2 * n) return make("open", 2 * n);
        return make("open", 2 * n, true);
      }
      if (spec.q == 0) return make("transitive", 2 * n);
      DVec w = unconjugate(spec.p, spec.q, z);
      if (is_projectively_real(w, tol)) return make("S1", n);
      int s = float_sign(signed_square_sum_real(spec.p, spec.q, w, false),
                         w.squaredNorm(), tol, unc);
      if (s > 0) return make("Omega+", 2 * n, unc);
      if (s < 0) return make("Omega-", 2 * n, unc);
      return make("S2", 2 * n - 1);
    }
    case Family::SO_STAR: {
      DMat h = to_float(so_star_hermitian(ambient_size(spec)));
      int s = float_sign(hermitian_value(h, z), h.norm() * scale, tol, unc);
      if (s > 0) return make("E+", 2 * n, unc);
      if (s < 0) return make("E-", 2 * n, unc);
      return make("S", 2 * n - 1);
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace classym
