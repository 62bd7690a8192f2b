#ifndef CLASSYM_LIE_CORE_HPP
#define CLASSYM_LIE_CORE_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "classym/linalg.hpp"
#include "classym/types.hpp"

namespace classym {

enum class Series { A, B, C, D };

/// Matrix realization tag for a classical complex algebra. k is the size of
/// the defining representation. Conventions: sp4(C) is carried as (B,5) and
/// so6(C) as (A,4) at the classification level; at the matrix level B/D means
/// antisymmetric matrices and C means the symplectic condition.
struct SeriesTag {
  Series series;
  int k;
};

inline constexpr int kMaxMatrixSize = 12;

bool series_tag_valid(const SeriesTag& tag);
std::string series_name(const SeriesTag& tag);
int series_dimension(const SeriesTag& tag);  // complex dimension of the algebra

enum class Family { SU, SL_R, SL_H, SP_PQ, SP_R, SO_PQ, SO_STAR, COMPLEX };

/// Symbolic descriptor of a real form, in the matrix realizations used for
/// orbit classification. For SO_PQ with p+q=8 the twist selects the image
/// under the triality automorphism (0 = standard embedding).
struct RealFormSpec {
  Family family = Family::SU;
  int p = 0, q = 0;     // signature (SU, SP_PQ, SO_PQ)
  int m = 0;            // size parameter (SL_R, SL_H, SP_R, SO_STAR)
  SeriesTag series{Series::A, 0};  // COMPLEX only
  int twist = 0;        // SO_PQ with p+q=8 only

  static RealFormSpec su(int p, int q) { return {Family::SU, p, q}; }
  static RealFormSpec sl_r(int m) { return {Family::SL_R, 0, 0, m}; }
  static RealFormSpec sl_h(int m) { return {Family::SL_H, 0, 0, m}; }
  static RealFormSpec sp_pq(int p, int q) { return {Family::SP_PQ, p, q}; }
  static RealFormSpec sp_r(int m) { return {Family::SP_R, 0, 0, m}; }
  static RealFormSpec so_pq(int p, int q, int twist = 0) {
    RealFormSpec s{Family::SO_PQ, p, q};
    s.twist = twist;
    return s;
  }
  static RealFormSpec so_star(int m) { return {Family::SO_STAR, 0, 0, m}; }
  static RealFormSpec complex_as_real(SeriesTag tag) {
    RealFormSpec s;
    s.family = Family::COMPLEX;
    s.series = tag;
    return s;
  }

  bool type_two() const { return family == Family::COMPLEX; }
};

bool spec_valid(const RealFormSpec& spec, std::string* why = nullptr);
/// Size of the ambient complex matrix algebra the form is embedded in.
int ambient_size(const RealFormSpec& spec);
/// Expected real dimension (= complex dimension of the complexification,
/// twice that for type II).
int real_dimension(const RealFormSpec& spec);
std::string spec_name(const RealFormSpec& spec);

/// Ordered basis of a matrix Lie algebra over the stated field.
struct LieBasis {
  std::vector<QMat> mats;
  int matrix_size = 0;
  bool real_field = false;  // true: R-basis of a real form; false: C-basis
  std::string name;

  int dim() const { return static_cast<int>(mats.size()); }
};

template <class S>
Mat<S> bracket(const Mat<S>& x, const Mat<S>& y) {
  if (x.rows() != x.cols() || y.rows() != y.cols() || x.rows() != y.rows())
    throw std::invalid_argument("bracket: dimension mismatch");
  return x * y - y * x;
}

/// C-basis of sl_k, so_k or sp_k in the paper's matrix realizations.
/// Basis order is fixed: sl uses E_rs (r<s), E_sr (r<s) ... see lie_core.cpp;
/// so uses j_rs in lexicographic (r,s) order.
LieBasis build_complex_algebra(const SeriesTag& tag);

/// Matrix-level builders (no series normalization; sp_matrix_basis accepts
/// k=4 even though the classification carries sp4 as B).
LieBasis sl_matrix_basis(int k);
LieBasis so_matrix_basis(int k);
LieBasis sp_matrix_basis(int k);

/// R-basis of the real form embedded in its ambient complex matrix algebra.
/// Computed as the exact rational solution space of the defining relations;
/// twisted so(p,q) delegates to the triality module.
LieBasis real_form_basis(const RealFormSpec& spec);

/// Defining-relation residual matrices; all zero iff X lies in the form
/// (for twist=0 realizations; twisted membership is span membership).
std::vector<QMat> defining_residuals(const RealFormSpec& spec, const QMat& x);
std::vector<DMat> defining_residuals(const RealFormSpec& spec, const DMat& x);

bool satisfies_defining_relations(const RealFormSpec& spec, const QMat& x);
bool satisfies_defining_relations(const RealFormSpec& spec, const DMat& x,
                                  const ToleranceContext& tol = {});

/// Structure-constant closure: every bracket of basis elements lies in the
/// real (or complex) span of the basis. Exact.
bool bracket_closed(const LieBasis& basis);

/// The diagonal matrix diag(I_p, i I_q) conjugating the real orthogonal
/// picture into the complex antisymmetric one.
QMat signature_conjugator(int p, int q);
DMat signature_conjugator_f(int p, int q);

}  // namespace classym

#endif
