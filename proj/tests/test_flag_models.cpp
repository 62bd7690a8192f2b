#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "classym/flag_models.hpp"

using namespace classym;

TEST_CASE("canonicalization is idempotent and scale invariant") {
  QVec z = parse_point("2:1+i:-3/2*i");
  QVec c = canonicalize(z);
  CHECK(point_to_string(canonicalize(c)) == point_to_string(c));
  QScalar s(mpq_class(-7, 3), mpq_class(2, 5));
  QVec scaled = s * z;
  CHECK(point_to_string(canonicalize(scaled)) == point_to_string(c));
  CHECK(c(pivot_index(c)) == QScalar(1));
}

TEST_CASE("pivot is the largest modulus entry, lowest index on ties") {
  CHECK(pivot_index(parse_point("1:2:2")) == 1);
  CHECK(pivot_index(parse_point("1:i:1")) == 0);
  CHECK(pivot_index(parse_point("0:1:3i")) == 2);
}

TEST_CASE("quadric membership") {
  CHECK(on_quadric(parse_point("1:i:0")));
  CHECK(on_quadric(parse_point("1:0:0:0:i:0:0:0")));
  CHECK_FALSE(on_quadric(parse_point("1:1:0")));
}

TEST_CASE("projective reality") {
  CHECK(is_projectively_real(parse_point("1:2:3")));
  CHECK(is_projectively_real(parse_point("i:2i:3i")));
  CHECK(is_projectively_real(parse_point("1+i:2+2i:0")));
  CHECK_FALSE(is_projectively_real(parse_point("1:i:0")));
}

TEST_CASE("point parsing round trip and errors") {
  QVec z = parse_point("1:i:0:3/4+1/2*i");
  CHECK(z.size() == 4);
  CHECK(point_to_string(z) == "1:i:0:3/4+1/2*i");
  CHECK_THROWS_AS(parse_point("1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_point("0:0:0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_point("1:x:0"), std::invalid_argument);
}

TEST_CASE("float quadric sampler lands on the quadric, deterministically") {
  std::mt19937_64 rng1(11), rng2(11);
  for (int trial = 0; trial < 100; ++trial) {
    DVec a = random_quadric_point(7, rng1);
    DVec b = random_quadric_point(7, rng2);
    CHECK((a - b).norm() == 0.0);  // same stream, same point
    CHECK(on_quadric(a));
    CHECK(std::abs(square_sum(a)) < 1e-10 * a.squaredNorm());
  }
}

TEST_CASE("exact quadric sampler is exactly on the quadric") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    QVec z = random_quadric_point_exact(8, rng);
    CHECK(on_quadric(z));
    CHECK(z(pivot_index(z)) == QScalar(1));
  }
}

TEST_CASE("exact and float representations agree") {
  std::mt19937_64 rng(17);
  QVec z = random_quadric_point_exact(6, rng);
  DVec f = to_float(z);
  CHECK(on_quadric(f));
  CHECK((canonicalize(f) - f).norm() < 1e-12);  // exact output is canonical already
}
