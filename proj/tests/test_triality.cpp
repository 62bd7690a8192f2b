#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "classym/lie_core.hpp"
#include "classym/triality.hpp"

using namespace classym;

namespace {

QMat unit_j(int r, int s) {
  QMat m = QMat::Constant(8, 8, QScalar(0));
  m(r - 1, s - 1) = QScalar(1);
  m(s - 1, r - 1) = QScalar(-1);
  return m;
}

}  // namespace

TEST_CASE("pair indexing round trip") {
  int idx = 0;
  for (int r = 1; r < 8; ++r)
    for (int s = r + 1; s <= 8; ++s) {
      CHECK(so8_pair_index(r, s) == idx);
      auto [rr, ss] = so8_index_pair(idx);
      CHECK(rr == r);
      CHECK(ss == s);
      ++idx;
    }
}

TEST_CASE("spot images of the coefficient table") {
  QScalar half = QScalar::frac(1, 2);
  QMat expected12 = half * (unit_j(1, 2) - unit_j(3, 4) + unit_j(5, 6) - unit_j(7, 8));
  CHECK(is_zero(QMat(theta_apply(unit_j(1, 2)) - expected12)));
  QMat expected78 = half * (-unit_j(1, 2) - unit_j(3, 4) - unit_j(5, 6) - unit_j(7, 8));
  CHECK(is_zero(QMat(theta_apply(unit_j(7, 8)) - expected78)));
  QMat expected15 = half * (unit_j(1, 8) - unit_j(2, 7) + unit_j(3, 6) - unit_j(4, 5));
  CHECK(is_zero(QMat(theta_apply(unit_j(1, 5)) - expected15)));
}

TEST_CASE("theta is a Lie algebra automorphism across all 378 pairs") {
  std::string why;
  CHECK_MESSAGE(verify_theta_automorphism(&why), why);
}

TEST_CASE("theta inverse undoes theta") {
  LieBasis so8 = so_matrix_basis(8);
  for (const QMat& j : so8.mats) {
    CHECK(is_zero(QMat(theta_inverse_apply(theta_apply(j)) - j)));
    CHECK(is_zero(QMat(theta_apply(theta_inverse_apply(j)) - j)));
  }
}

TEST_CASE("twisted real forms keep dimension 28 and close under bracket") {
  for (int p = 5; p <= 7; ++p)
    for (int twist = 1; twist <= 2; ++twist) {
      CAPTURE(p);
      CAPTURE(twist);
      LieBasis tw = twisted_real_form(p, 8 - p, twist);
      CHECK(tw.dim() == 28);
      CHECK(linalg::real_span_rank(tw.mats) == 28);
      CHECK(bracket_closed(tw));
    }
}

TEST_CASE("all twisted so(5,3) basis elements satisfy the 19 conditions") {
  LieBasis tw = twisted_real_form(5, 3, 1);
  for (const QMat& x : tw.mats) CHECK(check_so53_conditions(x).all);
}

TEST_CASE("untwisted elements violate the conditions") {
  // j15 has a_15 = 1 real, so the chain Re a15 = Re a26 fails.
  So53ConditionReport r = check_so53_conditions(unit_j(1, 5));
  CHECK_FALSE(r.all);
  CHECK_FALSE(r.satisfied[3]);
}

TEST_CASE("condition solution space dimension") {
  // 19 independent real conditions on the 56 real coordinates of so8(C).
  CHECK(so53_condition_solution_dimension() == 37);
}

TEST_CASE("reflection conjugation") {
  CHECK(is_zero(QMat(conjugate_by_reflection(unit_j(1, 2)) + unit_j(1, 2))));
  CHECK(is_zero(QMat(conjugate_by_reflection(unit_j(2, 3)) - unit_j(2, 3))));
}

TEST_CASE("theta rejects non-antisymmetric input") {
  CHECK_THROWS_AS(theta_apply(QMat::Identity(8, 8)), std::invalid_argument);
  CHECK_THROWS_AS(theta_apply(QMat::Identity(4, 4)), std::invalid_argument);
}
