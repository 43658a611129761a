#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "kov/errors.hpp"
#include "kov/matrix.hpp"
#include "kov/poly.hpp"
#include "kov/rational.hpp"

using namespace kov;

namespace {

PolyQ random_poly(std::mt19937_64& rng) {
  static const char* names[] = {"ra", "rb", "rc"};
  std::uniform_int_distribution<int> nterms(0, 4), coef(-5, 5), den(1, 4), ex(0, 2), ep(-2, 2);
  PolyQ p;
  for (int t = nterms(rng); t > 0; --t) {
    PolyQ m = make_rational(coef(rng), den(rng));
    for (const char* n : names) m *= PolyQ::variable(n, ex(rng));
    m *= PolyQ::variable(kEps, ep(rng));
    p += m;
  }
  return p;
}

}  // namespace

TEST_CASE("rational strings round trip") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> d(-100000, 100000);
  for (int i = 0; i < 200; ++i) {
    long den = d(rng);
    if (den == 0) den = 1;
    Rational r = make_rational(d(rng), den);
    CHECK(parse_rational(to_string(r)) == r);
  }
  CHECK(to_string(make_rational(6, -4)) == "-3/2");
  CHECK(to_string(make_rational(4, 2)) == "2");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 150; ++i) {
    PolyQ a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == PolyQ());
    CHECK(a * PolyQ(1) == a);
  }
}

TEST_CASE("substituting a parameter by itself is the identity") {
  std::mt19937_64 rng(13);
  Param ra = intern("ra");
  for (int i = 0; i < 100; ++i) {
    PolyQ p = random_poly(rng);
    CHECK(p.substitute(ra, PolyQ::variable(ra)) == p);
  }
}

TEST_CASE("parse and print") {
  PolyQ p = PolyQ::parse("2*a^2*b - 1/3*eps^-2 + (a+1)*(a-1)");
  CHECK(p == PolyQ::parse("2*b*a^2 + a^2 - 1 - 1/3*eps^-2"));
  CHECK(PolyQ::parse(p.to_string()) == p);
  CHECK(PolyQ::parse("x - x").is_zero());
  CHECK_THROWS_AS(PolyQ::parse("a +"), ParseError);
  CHECK_THROWS_AS(PolyQ::parse("a/b"), ParseError);
}

TEST_CASE("printing ignores registration order") {
  PolyQ p = PolyQ::parse("zz_late + aa_early");
  CHECK(p.to_string() == "aa_early + zz_late");
}

TEST_CASE("epsilon limit") {
  PolyQ ok = PolyQ::parse("a + 3*eps - eps^2*b");
  CHECK(ok.epsilon_limit() == PolyQ::parse("a"));
  PolyQ bad = PolyQ::parse("a + eps^-1");
  CHECK_THROWS_AS(bad.epsilon_limit(), DivergentLimit);
  CHECK(bad.min_eps_degree() == -1);
  CHECK(bad.eps_coefficient(-1) == PolyQ(1));
}

TEST_CASE("negative eps powers only expand into eps monomials") {
  Param x = intern("sx");
  PolyQ p = PolyQ::variable(kEps, -2) * PolyQ::variable(x);
  CHECK(p.substitute(x, PolyQ::variable(kEps, 3)) == PolyQ::variable(kEps, 1));
  CHECK_THROWS_AS(PolyQ::variable(kEps, -1).substitute(kEps, PolyQ::parse("1 + sx")),
                  SubstitutionCreatesNegativePower);
  CHECK(PolyQ::variable(kEps, -1).substitute(kEps, PolyQ::parse("2*eps^2")) ==
        PolyQ::parse("1/2*eps^-2"));
}

TEST_CASE("matrix basics") {
  QMatrix a{{1, 2}, {3, 4}};
  CHECK(a.determinant() == -2);
  CHECK(a * a.inverse() == QMatrix::identity(2));
  CHECK_THROWS_AS((QMatrix{{1, 2}, {2, 4}}).inverse(), SingularSample);
  QMatrix b{{0, 1}, {0, 0}};
  CHECK(commutator(a, b) == a * b - b * a);
  MatPoly s = MatPoly::symbolic(2, "m");
  CHECK(s(0, 1) == PolyQ::variable("m_12"));
  MatPoly t = commutator(s, MatPoly(b));
  // [s, E12](0,0) = -m_21
  CHECK(t(0, 0) == -PolyQ::variable("m_21"));
  CHECK(t.substitute(intern("m_21"), PolyQ(5))(0, 0) == PolyQ(-5));
}
