#ifndef CLASSYM_TRIALITY_HPP
#define CLASSYM_TRIALITY_HPP

#include <array>
#include <string>

#include "classym/types.hpp"

namespace classym {

struct LieBasis;

/// Index of the antisymmetric unit j_rs (1 <= r < s <= 8) in lexicographic
/// (r,s) order; the inverse of pair_of_index.
int so8_pair_index(int r, int s);
std::pair<int, int> so8_index_pair(int idx);

/// The 28x28 exact matrix of the outer automorphism theta of so8(C) in the
/// j_rs basis: column so8_pair_index(r,s) holds the coefficients of
/// theta(j_rs). All entries are 0 or +-1/2.
const QMat& theta_matrix();

/// theta applied to an antisymmetric 8x8 matrix (exact).
QMat theta_apply(const QMat& x);
QMat theta_inverse_apply(const QMat& x);

/// Checks theta([x,y]) = [theta(x), theta(y)] over all 378 unordered basis
/// pairs, plus invertibility. Exact; returns false and fills *why on failure.
bool verify_theta_automorphism(std::string* why = nullptr);

/// R-basis of theta^twist applied elementwise to the standard so(p,q)
/// embedding (p + q = 8, twist in {1,2}).
LieBasis twisted_real_form(int p, int q, int twist);

/// The 19 real-linear conditions cutting out the twisted so(5,3) copy,
/// evaluated on an antisymmetric 8x8 matrix. Exact residuals.
struct So53ConditionReport {
  std::array<bool, 19> satisfied{};
  bool all = false;
};
So53ConditionReport check_so53_conditions(const QMat& x);

/// Exact real dimension of the solution space of the 19 conditions inside
/// so8(C) viewed as a 56-dimensional real vector space.
int so53_condition_solution_dimension();

/// Conjugation by diag(-1, 1, ..., 1).
QMat conjugate_by_reflection(const QMat& x);

}  // namespace classym

#endif
