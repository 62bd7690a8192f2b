#include "classym/triality.hpp"

#include <cstdlib>
#include <stdexcept>

#include "classym/lie_core.hpp"

namespace classym {

namespace {

// Image of each j_rs under theta, as four signed pairs, with an overall
// factor 1/2. Source pairs in lexicographic order; a signed pair +-uv means
// the coefficient of j_uv is +-1/2.
constexpr int kThetaImages[28][4] = {
    {12, -34, 56, -78},   // j12
    {13, 24, 57, 68},     // j13
    {-14, 23, 58, -67},   // j14
    {18, -27, 36, -45},   // j15
    {17, 28, 35, 46},     // j16
    {-16, -25, 38, 47},   // j17
    {-15, 26, 37, -48},   // j18
    {-14, 23, -58, 67},   // j23
    {-13, -24, 57, 68},   // j24
    {17, 28, -35, -46},   // j25
    {-18, 27, 36, -45},   // j26
    {15, -26, 37, -48},   // j27
    {-16, -25, -38, -47}, // j28
    {12, -34, -56, 78},   // j34
    {-16, 25, 38, -47},   // j35
    {-15, -26, 37, 48},   // j36
    {-18, -27, -36, -45}, // j37
    {-17, 28, -35, 46},   // j38
    {-15, -26, -37, -48}, // j45
    {16, -25, 38, -47},   // j46
    {17, -28, -35, 46},   // j47
    {-18, -27, 36, 45},   // j48
    {12, 34, -56, -78},   // j56
    {13, -24, -57, 68},   // j57
    {-14, -23, 58, 67},   // j58
    {14, 23, 58, 67},     // j67
    {13, -24, 57, -68},   // j68
    {-12, -34, -56, -78}, // j78
};

QMat build_theta_matrix() {
  QMat t = QMat::Constant(28, 28, QScalar(0));
  for (int src = 0; src < 28; ++src)
    for (int term = 0; term < 4; ++term) {
      int code = kThetaImages[src][term];
      int sign = code < 0 ? -1 : 1;
      int v = std::abs(code);
      int tgt = so8_pair_index(v / 10, v % 10);
      t(tgt, src) = QScalar::frac(sign, 2);
    }
  return t;
}

/// Coefficients of an antisymmetric 8x8 matrix in the j_rs basis.
QVec so8_coefficients(const QMat& x) {
  if (x.rows() != 8 || x.cols() != 8)
    throw std::invalid_argument("expected an 8x8 matrix");
  if (!is_zero(QMat(x + x.transpose())))
    throw std::invalid_argument("expected an antisymmetric matrix");
  QVec c(28);
  for (int idx = 0; idx < 28; ++idx) {
    auto [r, s] = so8_index_pair(idx);
    c(idx) = x(r - 1, s - 1);
  }
  return c;
}

QMat from_so8_coefficients(const QVec& c) {
  QMat x = QMat::Constant(8, 8, QScalar(0));
  for (int idx = 0; idx < 28; ++idx) {
    auto [r, s] = so8_index_pair(idx);
    x(r - 1, s - 1) = c(idx);
    x(s - 1, r - 1) = -c(idx);
  }
  return x;
}

QMat apply_coefficient_map(const QMat& map, const QMat& x) {
  return from_so8_coefficients(map * so8_coefficients(x));
}

std::array<mpq_class, 19> so53_residuals(const QMat& x) {
  auto re = [&](int r, int s) { return mpq_class(x(r - 1, s - 1).real()); };
  auto im = [&](int r, int s) { return mpq_class(x(r - 1, s - 1).imag()); };
  return {
      re(1, 2) + re(3, 4) - re(5, 6) - re(7, 8),
      re(1, 4) + re(2, 3) - re(5, 8) - re(6, 7),
      re(1, 3) - re(2, 4) - re(5, 7) + re(6, 8),
      re(1, 5) - re(2, 6),
      re(2, 6) - re(3, 7),
      re(3, 7) - re(4, 8),
      re(1, 8) + re(2, 7),
      re(2, 7) + re(3, 6),
      re(3, 6) + re(4, 5),
      re(1, 6) + re(2, 5),
      re(2, 5) - re(3, 8),
      re(3, 8) + re(4, 7),
      re(1, 7) - re(2, 8),
      re(2, 8) + re(3, 5),
      re(3, 5) - re(4, 6),
      im(1, 7) + im(2, 8) - im(3, 5) - im(4, 6),
      im(1, 8) - im(2, 7) + im(3, 6) - im(4, 5),
      im(1, 6) - im(2, 5) - im(3, 8) + im(4, 7),
      im(1, 5) + im(2, 6) + im(3, 7) + im(4, 8),
  };
}

const QMat& theta_inverse_matrix() {
  static const QMat inv = [] {
    // Exact inverse by RREF of [theta | I].
    QMat aug(28, 56);
    aug.leftCols(28) = theta_matrix();
    aug.rightCols(28) = QMat::Identity(28, 28);
    auto pivots = linalg::rref(aug);
    if (pivots.size() != 28) throw std::logic_error("theta matrix is singular");
    return QMat(aug.rightCols(28));
  }();
  return inv;
}

}  // namespace

int so8_pair_index(int r, int s) {
  if (r < 1 || s <= r || s > 8) throw std::invalid_argument("bad pair");
  int idx = 0;
  for (int a = 1; a < r; ++a) idx += 8 - a;
  return idx + (s - r - 1);
}

std::pair<int, int> so8_index_pair(int idx) {
  for (int r = 1; r < 8; ++r) {
    int block = 8 - r;
    if (idx < block) return {r, r + 1 + idx};
    idx -= block;
  }
  throw std::invalid_argument("bad index");
}

const QMat& theta_matrix() {
  static const QMat t = build_theta_matrix();
  return t;
}

QMat theta_apply(const QMat& x) { return apply_coefficient_map(theta_matrix(), x); }

QMat theta_inverse_apply(const QMat& x) {
  return apply_coefficient_map(theta_inverse_matrix(), x);
}

bool verify_theta_automorphism(std::string* why) {
  LieBasis so8 = so_matrix_basis(8);
  std::vector<QMat> images;
  images.reserve(28);
  for (const QMat& j : so8.mats) images.push_back(theta_apply(j));
  for (int a = 0; a < 28; ++a)
    for (int b = a + 1; b < 28; ++b) {
      QMat lhs = theta_apply(bracket(so8.mats[a], so8.mats[b]));
      QMat rhs = bracket(images[a], images[b]);
      if (!is_zero(QMat(lhs - rhs))) {
        if (why) {
          auto [r1, s1] = so8_index_pair(a);
          auto [r2, s2] = so8_index_pair(b);
          *why = "bracket mismatch at pair (j" + std::to_string(r1) + std::to_string(s1) +
                 ", j" + std::to_string(r2) + std::to_string(s2) + ")";
        }
        return false;
      }
    }
  for (const QMat& j : so8.mats)
    if (!is_zero(QMat(theta_inverse_apply(theta_apply(j)) - j))) {
      if (why) *why = "theta inverse does not invert theta";
      return false;
    }
  return true;
}

LieBasis twisted_real_form(int p, int q, int twist) {
  if (p + q != 8 || (twist != 1 && twist != 2))
    throw std::invalid_argument("twisted form needs p+q = 8 and twist in {1,2}");
  LieBasis base = real_form_basis(RealFormSpec::so_pq(p, q, 0));
  LieBasis out;
  out.matrix_size = 8;
  out.real_field = true;
  out.name = spec_name(RealFormSpec::so_pq(p, q, twist));
  for (const QMat& x : base.mats) {
    QMat y = theta_apply(x);
    if (twist == 2) y = theta_apply(y);
    out.mats.push_back(std::move(y));
  }
  return out;
}

So53ConditionReport check_so53_conditions(const QMat& x) {
  if (x.rows() != 8 || x.cols() != 8)
    throw std::invalid_argument("expected an 8x8 matrix");
  std::array<mpq_class, 19> res = so53_residuals(x);
  So53ConditionReport report;
  report.all = true;
  for (int i = 0; i < 19; ++i) {
    report.satisfied[i] = (res[i] == 0);
    if (!report.satisfied[i]) report.all = false;
  }
  return report;
}

int so53_condition_solution_dimension() {
  // Unknowns: Re a_rs then Im a_rs for the 28 pairs (56 real coordinates).
  // Rows: the 19 conditions evaluated on each unit direction.
  QMat table = QMat::Constant(19, 56, QScalar(0));
  for (int d = 0; d < 56; ++d) {
    QVec c = QVec::Constant(28, QScalar(0));
    c(d % 28) = d < 28 ? QScalar(1) : QScalar::i();
    std::array<mpq_class, 19> res = so53_residuals(from_so8_coefficients(c));
    for (int row = 0; row < 19; ++row) table(row, d) = QScalar(res[row]);
  }
  return 56 - linalg::rank(std::move(table));
}

QMat conjugate_by_reflection(const QMat& x) {
  QMat r = QMat::Identity(x.rows(), x.cols());
  r(0, 0) = QScalar(-1);
  return r * x * r;  // r is its own inverse
}

}  // namespace classym
