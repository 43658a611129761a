#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "kov/classify.hpp"
#include "kov/errors.hpp"
#include "kov/reduction.hpp"

using namespace kov;

TEST_CASE("scalar reduction is a polynomial identity") {
  const auto id = scalar_reduction_identity();
  CHECK(id.vs_p4mat);
  CHECK(id.vs_scalar);
}

TEST_CASE("reduction coefficients") {
  std::mt19937_64 rng(11);
  const auto f = default_family(FamilyId::P4_2, 2, rng);
  const SystemSpec sys = family_system(f);
  const auto k = reduction_coefficients(sys);
  CHECK(k.kappa == make_rational(-3, 2));
  CHECK(k.k1 == f.h2);
  CHECK(k.k2 == Rational(-1) * f.h2);
  CHECK(k.k3 == Rational(2) * f.h1);
  CHECK(k.k4 == Rational(-2) * QMatrix::identity(2) + make_rational(3, 2) * f.h2);
  // 2 c5 + (beta + 1/2) b5 = 4 h2 + 2 gamma - 5/2 h2
  CHECK(k.k5 == make_rational(3, 2) * f.h2 + (Rational(2) * f.gamma) * QMatrix::identity(2));
}

TEST_CASE("P4_1 and P4_2 reduce to the second-order matrix equation") {
  std::mt19937_64 rng(12);
  for (FamilyId id : {FamilyId::P4_1, FamilyId::P4_2})
    for (int n : {2, 3}) {
      const auto rep = reduce_second_order_check(family_system(default_family(id, n, rng)), 20, rng);
      CHECK(rep.jets.trials == 20);
      CHECK(rep.jets.ok());
    }
}

TEST_CASE("reduction rejects what it cannot handle and notices wrong systems") {
  std::mt19937_64 rng(13);
  SystemSpec p40 = family_system(default_family(FamilyId::P4_0, 2, rng));
  CHECK_THROWS_AS(reduce_second_order_check(p40, 3, rng), ConfigError);  // alpha = -1
  p40.alpha = 0;
  CHECK_FALSE(reduce_second_order_check(p40, 5, rng).jets.ok());  // b1 term is not in the reduced form
  SystemSpec s = family_system(default_family(FamilyId::P4_1, 2, rng));
  s.b[2] = MatPoly::identity(2);
  CHECK_THROWS_AS(reduce_second_order_check(s, 3, rng), ConfigError);
  s.b[2] = MatPoly(2, 2);
  s.b[4](0, 0) = PolyQ::variable("t");
  CHECK_THROWS_AS(reduce_second_order_check(s, 3, rng), ConfigError);
  CHECK_THROWS_AS(reduce_second_order_check(SystemSpec::make_homogeneous(2, 0, -2), 3, rng), ConfigError);
}

TEST_CASE("P2 system to equation map") {
  std::array<QMatrix, 4> zero{QMatrix(2, 2), QMatrix(2, 2), QMatrix(2, 2), QMatrix(2, 2)};
  auto e = p2_system_to_equation(-1, zero);
  CHECK(e.kappa == 0);
  CHECK(e.a == make_rational(-1, 2) * QMatrix::identity(2));
  CHECK(p2_system_to_equation(-2, zero).kappa == 1);
  CHECK(p2_system_to_equation(-3, zero).kappa == 2);

  std::mt19937_64 rng(14);
  for (int beta : {-3, -2, -1, 0, 4}) {
    const std::array<QMatrix, 4> c{random_jet_matrix(rng, 2), random_jet_matrix(rng, 2), random_jet_matrix(rng, 2),
                                   random_jet_matrix(rng, 2)};
    CHECK(p2_equation_check(beta, c, 10, rng).ok());
  }
}

TEST_CASE("P34 form") {
  std::mt19937_64 rng(15);
  CHECK(p34_check(QMatrix{{1}}, 20, rng).ok());
  const QMatrix a = random_jet_matrix(rng, 2);
  CHECK(p34_check(a, 20, rng).ok());
  const auto bad = p34_check(a, 20, rng, true);
  CHECK(bad.passed == 0);
}

TEST_CASE("jet samples are reproducible and invertible") {
  std::mt19937_64 r1(99), r2(99);
  int s1 = 0, s2 = 0;
  for (int i = 0; i < 20; ++i) {
    const QMatrix a = random_invertible(r1, 2, s1), b = random_invertible(r2, 2, s2);
    CHECK(a == b);
    CHECK(a.determinant() != 0);
  }
  CHECK(s1 == s2);
}
