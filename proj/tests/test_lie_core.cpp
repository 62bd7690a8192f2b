#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "classym/lie_core.hpp"

using namespace classym;

namespace {

const std::vector<RealFormSpec> kSweep = {
    RealFormSpec::su(2, 1),    RealFormSpec::su(3, 1),  RealFormSpec::su(2, 2),
    RealFormSpec::su(3, 0),    RealFormSpec::sl_r(3),   RealFormSpec::sl_r(4),
    RealFormSpec::sl_h(2),     RealFormSpec::sl_h(3),   RealFormSpec::sp_pq(1, 1),
    RealFormSpec::sp_pq(2, 1), RealFormSpec::sp_r(4),   RealFormSpec::sp_r(6),
    RealFormSpec::so_pq(3, 2), RealFormSpec::so_pq(4, 3), RealFormSpec::so_pq(5, 3),
    RealFormSpec::so_pq(6, 2), RealFormSpec::so_pq(7, 1), RealFormSpec::so_pq(5, 0),
    RealFormSpec::so_star(8),  RealFormSpec::so_star(10),
    RealFormSpec::complex_as_real({Series::A, 3}),
    RealFormSpec::complex_as_real({Series::B, 5}),
};

}  // namespace

TEST_CASE("series dimensions") {
  CHECK(series_dimension({Series::A, 4}) == 15);
  CHECK(series_dimension({Series::B, 5}) == 10);
  CHECK(series_dimension({Series::B, 7}) == 21);
  CHECK(series_dimension({Series::C, 6}) == 21);
  CHECK(series_dimension({Series::D, 8}) == 28);
  CHECK(series_dimension({Series::D, 10}) == 45);
}

TEST_CASE("series validity ranges") {
  CHECK(series_tag_valid({Series::A, 2}));
  CHECK_FALSE(series_tag_valid({Series::A, 13}));
  CHECK(series_tag_valid({Series::B, 5}));
  CHECK_FALSE(series_tag_valid({Series::B, 6}));
  CHECK_FALSE(series_tag_valid({Series::B, 3}));
  CHECK(series_tag_valid({Series::C, 6}));
  CHECK_FALSE(series_tag_valid({Series::C, 4}));
  CHECK(series_tag_valid({Series::D, 8}));
  CHECK_FALSE(series_tag_valid({Series::D, 6}));
}

TEST_CASE("complex bases have the right size and satisfy their relations") {
  for (SeriesTag tag : {SeriesTag{Series::A, 4}, SeriesTag{Series::B, 7},
                        SeriesTag{Series::C, 6}, SeriesTag{Series::D, 8}}) {
    LieBasis b = build_complex_algebra(tag);
    CHECK(b.dim() == series_dimension(tag));
    CHECK(linalg::complex_span_rank(b.mats) == b.dim());
    RealFormSpec cspec = RealFormSpec::complex_as_real(tag);
    for (const QMat& x : b.mats)
      for (const QMat& r : defining_residuals(cspec, x)) CHECK(is_zero(r));
  }
}

TEST_CASE("bracket properties") {
  LieBasis b = build_complex_algebra({Series::D, 8});
  const QMat& x = b.mats[3];
  const QMat& y = b.mats[11];
  const QMat& z = b.mats[20];
  CHECK(is_zero(QMat(bracket(x, y) + bracket(y, x))));
  QMat jacobi = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) +
                bracket(z, bracket(x, y));
  CHECK(is_zero(jacobi));
  // entrywise oracle
  QMat manual = QMat::Constant(8, 8, QScalar(0));
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 8; ++c)
      for (int k = 0; k < 8; ++k) manual(r, c) += x(r, k) * y(k, c) - y(r, k) * x(k, c);
  CHECK(is_zero(QMat(bracket(x, y) - manual)));
}

TEST_CASE("real form bases: dimension, independence, relations, closure") {
  for (const RealFormSpec& spec : kSweep) {
    CAPTURE(spec_name(spec));
    LieBasis b = real_form_basis(spec);
    CHECK(b.dim() == real_dimension(spec));
    CHECK(linalg::real_span_rank(b.mats) == b.dim());
    if (spec.family != Family::COMPLEX)
      for (const QMat& x : b.mats)
        CHECK(satisfies_defining_relations(spec, x));
    CHECK(bracket_closed(b));
  }
}

TEST_CASE("complexification spans the full complex algebra") {
  CHECK(linalg::complex_span_rank(real_form_basis(RealFormSpec::su(2, 1)).mats) == 8);
  CHECK(linalg::complex_span_rank(real_form_basis(RealFormSpec::sp_pq(1, 1)).mats) == 10);
  CHECK(linalg::complex_span_rank(real_form_basis(RealFormSpec::so_star(10)).mats) == 45);
  CHECK(linalg::complex_span_rank(real_form_basis(RealFormSpec::so_pq(5, 3)).mats) == 28);
}

TEST_CASE("signature conjugator squares to the signature matrix") {
  QMat a = signature_conjugator(5, 3);
  QMat sq = a * a;
  for (int j = 0; j < 8; ++j)
    CHECK(sq(j, j) == (j < 5 ? QScalar(1) : QScalar(-1)));
}

TEST_CASE("spec validation") {
  std::string why;
  CHECK_FALSE(spec_valid(RealFormSpec::su(1, 2), &why));  // wants p >= q
  CHECK_FALSE(spec_valid(RealFormSpec::so_pq(3, 1), &why));  // p+q < 5
  CHECK_FALSE(spec_valid(RealFormSpec::so_pq(4, 2, 1), &why));  // twist needs p+q=8
  CHECK(spec_valid(RealFormSpec::so_pq(5, 3, 0)));
  CHECK(spec_valid(RealFormSpec::so_pq(6, 2, 2)));
  CHECK_FALSE(spec_valid(RealFormSpec::so_star(7), &why));
  CHECK_FALSE(spec_valid(RealFormSpec::sp_r(5), &why));
  CHECK_FALSE(spec_valid(RealFormSpec::su(7, 6), &why));  // ambient 13 > 12
}

TEST_CASE("satisfies_defining_relations rejects outsiders") {
  RealFormSpec spec = RealFormSpec::su(2, 1);
  QMat x = QMat::Identity(3, 3);  // nonzero trace, not in su
  CHECK_FALSE(satisfies_defining_relations(spec, x));
  LieBasis b = real_form_basis(spec);
  QMat ix = QScalar::i() * b.mats[0];  // i times a basis element leaves the real form
  CHECK_FALSE(satisfies_defining_relations(spec, ix));
}
