#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "classym/types.hpp"

using namespace classym;

namespace {

GaussianRational random_scalar(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-20, 20);
  std::uniform_int_distribution<long> den(1, 9);
  mpq_class re(num(rng), den(rng)), im(num(rng), den(rng));
  re.canonicalize();
  im.canonicalize();
  return {re, im};
}

}  // namespace

TEST_CASE("field axioms on random values") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    GaussianRational a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == GaussianRational(0));
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("arithmetic agrees with the floating oracle") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    GaussianRational a = random_scalar(rng), b = random_scalar(rng);
    auto close = [](std::complex<double> x, std::complex<double> y) {
      return std::abs(x - y) < 1e-12 * (1.0 + std::abs(x));
    };
    CHECK(close((a + b).to_complex(), a.to_complex() + b.to_complex()));
    CHECK(close((a - b).to_complex(), a.to_complex() - b.to_complex()));
    CHECK(close((a * b).to_complex(), a.to_complex() * b.to_complex()));
    if (!b.is_zero()) CHECK(close((a / b).to_complex(), a.to_complex() / b.to_complex()));
  }
}

TEST_CASE("conjugation and norm") {
  GaussianRational z{mpq_class(3, 4), mpq_class(-2, 5)};
  CHECK(z.conj().conj() == z);
  CHECK((z * z.conj()).is_real());
  CHECK(z.norm2() == mpq_class(3, 4) * mpq_class(3, 4) + mpq_class(2, 5) * mpq_class(2, 5));
  CHECK(GaussianRational::i() * GaussianRational::i() == GaussianRational(-1));
}

TEST_CASE("division by zero throws") {
  CHECK_THROWS_AS(GaussianRational(1) / GaussianRational(0), std::domain_error);
}

TEST_CASE("string round trip") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    GaussianRational z = random_scalar(rng);
    CHECK(GaussianRational::parse(z.str()) == z);
  }
  CHECK(GaussianRational::parse("i") == GaussianRational::i());
  CHECK(GaussianRational::parse("-i") == -GaussianRational::i());
  CHECK(GaussianRational::parse("2i") == GaussianRational(2) * GaussianRational::i());
  CHECK(GaussianRational::parse("1-2i") ==
        GaussianRational(1) - GaussianRational(2) * GaussianRational::i());
  CHECK(GaussianRational::parse("3/4+1/2*i") ==
        GaussianRational(mpq_class(3, 4), mpq_class(1, 2)));
  CHECK_THROWS_AS(GaussianRational::parse("abc"), std::invalid_argument);
  CHECK_THROWS_AS(GaussianRational::parse(""), std::invalid_argument);
}

TEST_CASE("Eigen matrix product matches the float oracle") {
  std::mt19937_64 rng(41);
  QMat a = QMat::Constant(4, 4, QScalar(0)), b = a;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      a(r, c) = random_scalar(rng);
      b(r, c) = random_scalar(rng);
    }
  DMat exact = to_float(QMat(a * b));
  DMat approx = to_float(a) * to_float(b);
  CHECK((exact - approx).norm() < 1e-10 * approx.norm());
}
