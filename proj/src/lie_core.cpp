#include "classym/lie_core.hpp"

#include <functional>

#include "classym/triality.hpp"

namespace classym {

bool series_tag_valid(const SeriesTag& tag) {
  if (tag.k > kMaxMatrixSize) return false;
  switch (tag.series) {
    case Series::A: return tag.k >= 2;
    case Series::B: return tag.k >= 5 && tag.k % 2 == 1;
    case Series::C: return tag.k >= 6 && tag.k % 2 == 0;
    case Series::D: return tag.k >= 8 && tag.k % 2 == 0;
  }
  return false;
}

std::string series_name(const SeriesTag& tag) {
  switch (tag.series) {
    case Series::A: return "sl_" + std::to_string(tag.k) + "(C)";
    case Series::C: return "sp_" + std::to_string(tag.k) + "(C)";
    default: return "so_" + std::to_string(tag.k) + "(C)";
  }
}

int series_dimension(const SeriesTag& tag) {
  int k = tag.k;
  switch (tag.series) {
    case Series::A: return k * k - 1;
    case Series::C: return (k / 2) * (k + 1);  // 2l^2 + l with k = 2l
    default: return k * (k - 1) / 2;
  }
}

bool spec_valid(const RealFormSpec& s, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  switch (s.family) {
    case Family::SU:
      if (s.p < s.q || s.q < 0 || s.p + s.q < 2) return fail("su(p,q) needs p >= q >= 0, p+q >= 2");
      break;
    case Family::SL_R:
      if (s.m < 2) return fail("sl(m,R) needs m >= 2");
      break;
    case Family::SL_H:
      if (s.m < 1) return fail("sl(m,H) needs m >= 1");
      break;
    case Family::SP_PQ:
      if (s.p < s.q || s.q < 0 || s.p + s.q < 2) return fail("sp(p,q) needs p >= q >= 0, p+q >= 2");
      break;
    case Family::SP_R:
      if (s.m < 4 || s.m % 2 != 0) return fail("sp(m,R) needs even m >= 4");
      break;
    case Family::SO_PQ:
      if (s.p < s.q || s.q < 0 || s.p + s.q < 5) return fail("so(p,q) needs p >= q >= 0, p+q >= 5");
      if (s.twist != 0 && s.p + s.q != 8) return fail("twist is only meaningful for p+q = 8");
      if (s.twist < 0 || s.twist > 2) return fail("twist must be 0, 1 or 2");
      break;
    case Family::SO_STAR:
      if (s.m < 8 || s.m % 2 != 0) return fail("so*(m) needs even m >= 8");
      break;
    case Family::COMPLEX:
      if (!series_tag_valid(s.series)) return fail("invalid series tag");
      break;
  }
  if (ambient_size(s) > kMaxMatrixSize) return fail("ambient matrix size exceeds 12");
  return true;
}

int ambient_size(const RealFormSpec& s) {
  switch (s.family) {
    case Family::SU: return s.p + s.q;
    case Family::SL_R: return s.m;
    case Family::SL_H: return 2 * s.m;
    case Family::SP_PQ: return 2 * (s.p + s.q);
    case Family::SP_R: return s.m;
    case Family::SO_PQ: return s.p + s.q;
    case Family::SO_STAR: return s.m;
    case Family::COMPLEX: return s.series.k;
  }
  return 0;
}

int real_dimension(const RealFormSpec& s) {
  int k = ambient_size(s);
  switch (s.family) {
    case Family::SU:
    case Family::SL_R:
    case Family::SL_H: return k * k - 1;
    case Family::SP_PQ:
    case Family::SP_R: return (k / 2) * (k + 1);
    case Family::SO_PQ:
    case Family::SO_STAR: return k * (k - 1) / 2;
    case Family::COMPLEX: return 2 * series_dimension(s.series);
  }
  return 0;
}

std::string spec_name(const RealFormSpec& s) {
  auto pq = [&] { return "(" + std::to_string(s.p) + "," + std::to_string(s.q) + ")"; };
  switch (s.family) {
    case Family::SU: return "su" + pq();
    case Family::SL_R: return "sl(" + std::to_string(s.m) + ",R)";
    case Family::SL_H: return "sl(" + std::to_string(s.m) + ",H)";
    case Family::SP_PQ: return "sp" + pq();
    case Family::SP_R: return "sp(" + std::to_string(s.m) + ",R)";
    case Family::SO_PQ: {
      std::string base = "so" + pq();
      if (s.twist != 0) base += "^" + std::to_string(s.twist);
      return base;
    }
    case Family::SO_STAR: return "so*(" + std::to_string(s.m) + ")";
    case Family::COMPLEX: return series_name(s.series) + "^R";
  }
  return "?";
}

namespace {

QMat unit(int k, int r, int c) {
  QMat m = QMat::Constant(k, k, QScalar(0));
  m(r, c) = QScalar(1);
  return m;
}

template <class S>
Mat<S> diag_signature(int p, int q) {
  Mat<S> h = Mat<S>::Constant(p + q, p + q, scalar_ops<S>::make(0));
  for (int j = 0; j < p; ++j) h(j, j) = scalar_ops<S>::make(1);
  for (int j = p; j < p + q; ++j) h(j, j) = scalar_ops<S>::make(-1);
  return h;
}

template <class S>
Mat<S> symplectic_form(int k) {
  int l = k / 2;
  Mat<S> j = Mat<S>::Constant(k, k, scalar_ops<S>::make(0));
  for (int r = 0; r < l; ++r) {
    j(r, l + r) = scalar_ops<S>::make(1);
    j(l + r, r) = scalar_ops<S>::make(-1);
  }
  return j;
}

template <class S>
Mat<S> skew_hermitian_form(int m) {
  int h = m / 2;
  Mat<S> f = Mat<S>::Constant(m, m, scalar_ops<S>::make(0));
  for (int r = 0; r < h; ++r) {
    f(r, h + r) = scalar_ops<S>::make(-1);
    f(h + r, r) = scalar_ops<S>::make(1);
  }
  return f;
}

template <class S>
Mat<S> sig_conj(int p, int q) {
  Mat<S> a = Mat<S>::Constant(p + q, p + q, scalar_ops<S>::make(0));
  for (int j = 0; j < p; ++j) a(j, j) = scalar_ops<S>::make(1);
  for (int j = p; j < p + q; ++j) a(j, j) = scalar_ops<S>::imag_unit();
  return a;
}

template <class S>
Mat<S> conj_mat(const Mat<S>& m) {
  Mat<S> out(m.rows(), m.cols());
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) out(r, c) = scalar_ops<S>::conjugate(m(r, c));
  return out;
}

template <class S>
Mat<S> adj_mat(const Mat<S>& m) {
  return conj_mat<S>(Mat<S>(m.transpose()));
}

template <class S>
Mat<S> trace_mat(const Mat<S>& m) {
  Mat<S> t = Mat<S>::Constant(1, 1, scalar_ops<S>::make(0));
  for (Eigen::Index r = 0; r < m.rows(); ++r) t(0, 0) += m(r, r);
  return t;
}

template <class S>
std::vector<Mat<S>> residuals_impl(const RealFormSpec& spec, const Mat<S>& x) {
  int k = ambient_size(spec);
  if (x.rows() != k || x.cols() != k)
    throw std::invalid_argument("defining_residuals: matrix size does not match " + spec_name(spec));
  switch (spec.family) {
    case Family::SU: {
      Mat<S> h = diag_signature<S>(spec.p, spec.q);
      return {adj_mat<S>(x) * h + h * x, trace_mat<S>(x)};
    }
    case Family::SL_R:
      return {x - conj_mat<S>(x), trace_mat<S>(x)};
    case Family::SL_H: {
      Mat<S> j = symplectic_form<S>(k);
      return {x * j - j * conj_mat<S>(x), trace_mat<S>(x)};
    }
    case Family::SP_PQ: {
      Mat<S> j = symplectic_form<S>(k);
      Mat<S> hd = diag_signature<S>(spec.p, spec.q);
      Mat<S> kk = Mat<S>::Constant(k, k, scalar_ops<S>::make(0));
      int l = k / 2;
      kk.topLeftCorner(l, l) = hd;
      kk.bottomRightCorner(l, l) = hd;
      return {Mat<S>(x.transpose()) * j + j * x, adj_mat<S>(x) * kk + kk * x};
    }
    case Family::SP_R: {
      Mat<S> j = symplectic_form<S>(k);
      return {Mat<S>(x.transpose()) * j + j * x, x - conj_mat<S>(x)};
    }
    case Family::SO_PQ: {
      if (spec.twist != 0)
        throw std::invalid_argument("twisted so(p,q) has no closed-form residuals; use span membership");
      Mat<S> a = sig_conj<S>(spec.p, spec.q);
      Mat<S> ainv = conj_mat<S>(a);  // diag(1,...,i,...) has inverse = conjugate
      Mat<S> w = ainv * x * a;
      Mat<S> g = diag_signature<S>(spec.p, spec.q);
      return {w - conj_mat<S>(w), Mat<S>(w.transpose()) * g + g * w};
    }
    case Family::SO_STAR: {
      Mat<S> mform = skew_hermitian_form<S>(k);
      return {Mat<S>(x.transpose()) + x, adj_mat<S>(x) * mform + mform * x};
    }
    case Family::COMPLEX: {
      switch (spec.series.series) {
        case Series::A: return {trace_mat<S>(x)};
        case Series::C: {
          Mat<S> j = symplectic_form<S>(k);
          return {Mat<S>(x.transpose()) * j + j * x};
        }
        default: return {Mat<S>(x.transpose()) + x};
      }
    }
  }
  return {};
}

/// Exact rational basis of {X : all residuals vanish}. Unknowns are the
/// real and imaginary parts of the k*k entries; the RREF nullspace order
/// fixes the basis ordering.
LieBasis solve_real_form(const RealFormSpec& spec) {
  int k = ambient_size(spec);
  std::vector<QMat> directions;
  directions.reserve(2 * k * k);
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c) directions.push_back(unit(k, r, c));
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c) directions.push_back(QScalar::i() * unit(k, r, c));

  // One block of rows per direction is wasteful; build columns instead.
  std::vector<std::vector<QScalar>> cols;
  size_t nrows = 0;
  for (const QMat& d : directions) {
    std::vector<QMat> res = residuals_impl<QScalar>(spec, d);
    std::vector<QScalar> col;
    for (const QMat& m : res)
      for (Eigen::Index r = 0; r < m.rows(); ++r)
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
          col.emplace_back(m(r, c).real());
          col.emplace_back(m(r, c).imag());
        }
    nrows = col.size();
    cols.push_back(std::move(col));
  }
  QMat table = QMat::Constant(static_cast<Eigen::Index>(nrows),
                              static_cast<Eigen::Index>(cols.size()), QScalar(0));
  for (size_t c = 0; c < cols.size(); ++c)
    for (size_t r = 0; r < nrows; ++r) table(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = cols[c][r];

  QMat kernel = linalg::nullspace(std::move(table));
  LieBasis basis;
  basis.matrix_size = k;
  basis.real_field = true;
  basis.name = spec_name(spec);
  for (Eigen::Index v = 0; v < kernel.cols(); ++v) {
    QMat x = QMat::Constant(k, k, QScalar(0));
    for (size_t d = 0; d < cols.size(); ++d)
      if (!kernel(static_cast<Eigen::Index>(d), v).is_zero())
        x += kernel(static_cast<Eigen::Index>(d), v) * directions[d];
    basis.mats.push_back(std::move(x));
  }
  return basis;
}

}  // namespace

LieBasis sl_matrix_basis(int k) {
  LieBasis b;
  b.matrix_size = k;
  b.name = "sl_" + std::to_string(k) + "(C)";
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c)
      if (r != c) b.mats.push_back(unit(k, r, c));
  for (int r = 0; r + 1 < k; ++r) b.mats.push_back(unit(k, r, r) - unit(k, r + 1, r + 1));
  return b;
}

LieBasis so_matrix_basis(int k) {
  LieBasis b;
  b.matrix_size = k;
  b.name = "so_" + std::to_string(k) + "(C)";
  for (int r = 0; r < k; ++r)
    for (int s = r + 1; s < k; ++s) b.mats.push_back(unit(k, r, s) - unit(k, s, r));
  return b;
}

LieBasis sp_matrix_basis(int k) {
  if (k % 2 != 0 || k < 4) throw std::invalid_argument("sp basis needs even k >= 4");
  int l = k / 2;
  LieBasis b;
  b.matrix_size = k;
  b.name = "sp_" + std::to_string(k) + "(C)";
  // Block form [[a, b], [c, -a^T]] with b, c symmetric.
  for (int r = 0; r < l; ++r)
    for (int c = 0; c < l; ++c) b.mats.push_back(unit(k, r, c) - unit(k, l + c, l + r));
  for (int r = 0; r < l; ++r)
    for (int c = r; c < l; ++c) {
      QMat m = unit(k, r, l + c);
      if (c != r) m += unit(k, c, l + r);
      b.mats.push_back(std::move(m));
    }
  for (int r = 0; r < l; ++r)
    for (int c = r; c < l; ++c) {
      QMat m = unit(k, l + r, c);
      if (c != r) m += unit(k, l + c, r);
      b.mats.push_back(std::move(m));
    }
  return b;
}

LieBasis build_complex_algebra(const SeriesTag& tag) {
  if (!series_tag_valid(tag))
    throw std::invalid_argument("invalid (series,k): " + series_name(tag));
  switch (tag.series) {
    case Series::A: return sl_matrix_basis(tag.k);
    case Series::C: return sp_matrix_basis(tag.k);
    default: return so_matrix_basis(tag.k);
  }
}

LieBasis real_form_basis(const RealFormSpec& spec) {
  std::string why;
  if (!spec_valid(spec, &why)) throw std::invalid_argument("unsupported spec: " + why);
  if (spec.family == Family::SO_PQ && spec.twist != 0)
    return twisted_real_form(spec.p, spec.q, spec.twist);
  if (spec.family == Family::COMPLEX) {
    LieBasis cx = build_complex_algebra(spec.series);
    LieBasis b;
    b.matrix_size = cx.matrix_size;
    b.real_field = true;
    b.name = spec_name(spec);
    for (const QMat& m : cx.mats) b.mats.push_back(m);
    for (const QMat& m : cx.mats) b.mats.push_back(QScalar::i() * m);
    return b;
  }
  return solve_real_form(spec);
}

std::vector<QMat> defining_residuals(const RealFormSpec& spec, const QMat& x) {
  return residuals_impl<QScalar>(spec, x);
}

std::vector<DMat> defining_residuals(const RealFormSpec& spec, const DMat& x) {
  return residuals_impl<DScalar>(spec, x);
}

bool satisfies_defining_relations(const RealFormSpec& spec, const QMat& x) {
  if (spec.family == Family::SO_PQ && spec.twist != 0) {
    LieBasis b = real_form_basis(spec);
    return linalg::in_real_span(b.mats, x);
  }
  for (const QMat& r : defining_residuals(spec, x))
    if (!is_zero(r)) return false;
  return true;
}

bool satisfies_defining_relations(const RealFormSpec& spec, const DMat& x,
                                  const ToleranceContext& tol) {
  double scale = 1.0 + x.norm();
  if (spec.family == Family::SO_PQ && spec.twist != 0) {
    // Least-squares distance to the real span of the twisted basis.
    LieBasis b = real_form_basis(spec);
    int k = b.matrix_size;
    Eigen::MatrixXd a(2 * k * k, b.dim());
    for (int i = 0; i < b.dim(); ++i) {
      DMat m = to_float(b.mats[i]);
      for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c) {
          a(r * k + c, i) = m(r, c).real();
          a(k * k + r * k + c, i) = m(r, c).imag();
        }
    }
    Eigen::VectorXd v(2 * k * k);
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < k; ++c) {
        v(r * k + c) = x(r, c).real();
        v(k * k + r * k + c) = x(r, c).imag();
      }
    Eigen::VectorXd fit = a.colPivHouseholderQr().solve(v);
    return (a * fit - v).norm() <= tol.flow_residual * scale;
  }
  for (const DMat& r : defining_residuals(spec, x))
    if (r.norm() > tol.flow_residual * scale) return false;
  return true;
}

bool bracket_closed(const LieBasis& basis) {
  for (size_t i = 0; i < basis.mats.size(); ++i)
    for (size_t j = i + 1; j < basis.mats.size(); ++j) {
      QMat br = bracket(basis.mats[i], basis.mats[j]);
      bool ok = basis.real_field ? linalg::in_real_span(basis.mats, br)
                                 : linalg::in_complex_span(basis.mats, br);
      if (!ok) return false;
    }
  return true;
}

QMat signature_conjugator(int p, int q) { return sig_conj<QScalar>(p, q); }
DMat signature_conjugator_f(int p, int q) { return sig_conj<DScalar>(p, q); }

}  // namespace classym
