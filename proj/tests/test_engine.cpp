#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "kov/engine.hpp"
#include "kov/errors.hpp"

using namespace kov;

namespace {

QMatrix random_q(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> d(-6, 6), den(1, 4);
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = make_rational(d(rng), den(rng));
  return m;
}

ResidueShape random_shape(std::mt19937_64& rng, int n) {
  std::array<int, 4> k{};
  for (int i = 0; i < n; ++i) ++k[rng() % 4];
  return ResidueShape::diag(k[0], k[1], k[2], k[3]);
}

}  // namespace

TEST_CASE("L matrix agrees with the rule on random probes") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 20; ++t) {
    const int n = 1 + static_cast<int>(rng() % 3);
    const Rational a = make_rational(static_cast<long>(rng() % 9) - 5, 1 + static_cast<long>(rng() % 3));
    const Rational b = make_rational(static_cast<long>(rng() % 9) - 5, 1 + static_cast<long>(rng() % 3));
    ResiduePair pr = diag_residues(n, random_shape(rng, n));
    pr.p = random_q(rng, n);  // the rule is linear in (X,Y) for any p, q
    pr.q = random_q(rng, n);
    const LOperator l = build_L(pr, a, b);
    const QMatrix x = random_q(rng, n), y = random_q(rng, n);
    QVector v;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) v.push_back(x(i, j));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) v.push_back(y(i, j));
    const QVector lv = l.matrix * v;
    auto [l1, l2] = apply_L(pr, a, b, x, y);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        CHECK(lv[static_cast<std::size_t>(i * n + j)] == l1(i, j));
        CHECK(lv[static_cast<std::size_t>(n * n + i * n + j)] == l2(i, j));
      }
  }
}

TEST_CASE("L small cases") {
  const LOperator scalar = build_L(diag_residues(1, ResidueShape::of_type(1, 1)), -1, -1);
  auto nul = integer_nullities(scalar, -3, 3);
  CHECK(nul[-2] == 1);
  CHECK(nul[2] == 1);
  CHECK(nul[0] + nul[1] + nul[-1] + nul[3] + nul[-3] == 0);
  CHECK(build_L(diag_residues(2, ResidueShape::diag(0, 0, 0, 2)), 3, 5).matrix.is_zero());
  // (0,-3) non-commuting, n = 2
  const LOperator nc = build_L(noncommuting_residues(0, -3, 2, ResidueShape::noncommuting(1, 0, 0, 0, 0)), 0, -3);
  nul = integer_nullities(nc, -5, 6);
  const std::map<int, int> expected{{-5, 0}, {-4, 0}, {-3, 0}, {-2, 1}, {-1, 3}, {0, 2}, {1, 0},
                                    {2, 1},  {3, 1},  {4, 0},  {5, 0},  {6, 0}};
  CHECK(nul == expected);
}

TEST_CASE("rank of the 2x2 block at lambda = -2 - 2 alpha - beta") {
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b) {
      const Rational lam = -2 - 2 * a - b;
      if (lam == -1) continue;
      QMatrix m{{-1 - 2 * a, a}, {2 + 2 * b, -2 - b}};
      m(0, 0) -= lam;
      m(1, 1) -= lam;
      auto r = rref_rank_kernel(m);
      CHECK(r.rank == 1);
      CHECK(r.kernel_basis.size() == 1);
    }
}

TEST_CASE("spectrum table") {
  auto t1 = spectrum_dimensions(make_rational(1, 3), make_rational(2, 7), ResidueShape::of_type(1, 3));
  CHECK(t1.size() == 6);
  int total = 0;
  for (const auto& e : spectrum_dimensions(-2, 1, ResidueShape::diag(1, 1, 1, 1))) total += e.dim;
  CHECK(total == 32);
  auto z = spectrum_dimensions(4, 5, ResidueShape::diag(0, 0, 0, 3));
  REQUIRE(z.size() == 1);
  CHECK(z[0].lambda == 0);
  CHECK(z[0].dim == 18);
}

TEST_CASE("algebraic multiplicities match the spectrum table") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 60; ++t) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const ResidueShape sh = random_shape(rng, n);
    const int a = static_cast<int>(rng() % 8) - 5, b = static_cast<int>(rng() % 8) - 5;
    const LOperator l = build_L(diag_residues(n, sh), a, b);
    const auto table = spectrum_dimensions(a, b, sh);
    for (auto [k, m] : integer_multiplicities(l, -10, 10)) {
      CAPTURE(k);
      CHECK(m == spectrum_dim_at(table, k));
    }
  }
}

TEST_CASE("geometric nullity drops below the table on a Jordan block") {
  // (3,1) block at alpha = 1, beta = -3 is [[-3,1],[-4,1]]: eigenvalue -1 twice,
  // one eigenvector
  const ResidueShape sh = ResidueShape::diag(1, 0, 1, 0);
  const LOperator l = build_L(diag_residues(2, sh), 1, -3);
  const auto table = spectrum_dimensions(1, -3, sh);
  CHECK(spectrum_dim_at(table, -1) == 3);
  CHECK(integer_nullities(l, -1, -1).at(-1) == 2);
  CHECK(integer_multiplicities(l, -1, -1).at(-1) == 3);
}

TEST_CASE("f_gamma") {
  std::vector<MatPoly> zero{MatPoly(2, 2)};
  CHECK(f_gamma(3, zero, zero, 0).is_zero());
  const PolyQ a = PolyQ::variable("fa"), b = PolyQ::variable("fb");
  std::vector<MatPoly> xs{MatPoly::scalar(1, a)}, ys{MatPoly::scalar(1, b)};
  CHECK(f_gamma(make_rational(5, 2), xs, ys, 0)(0, 0) == a * a - PolyQ(2) * a * b);

  // transposing all inputs maps f_gamma to f_{-2-gamma}
  std::mt19937_64 rng(29);
  for (int t = 0; t < 10; ++t) {
    std::vector<MatPoly> x, y, xt, yt;
    for (int l = 0; l <= 3; ++l) {
      x.emplace_back(random_q(rng, 2));
      y.emplace_back(random_q(rng, 2));
      xt.push_back(x.back().transpose());
      yt.push_back(y.back().transpose());
    }
    const Rational g = make_rational(static_cast<long>(rng() % 7) - 3, 2);
    CHECK(f_gamma(g, xt, yt, 3).transpose() == f_gamma(-2 - g, x, y, 3));
  }
}

TEST_CASE("scalar type 1 series") {
  const SystemSpec sys = SystemSpec::make_homogeneous(1, -1, -1);
  const SeriesSolution s = expand_series(sys, diag_residues(1, ResidueShape::of_type(1, 1)), 6);
  const PolyQ sigma = PolyQ::variable("x2_11");
  const std::vector<PolyQ> u{0, 0, sigma, 0, 0, make_rational(-3, 7) * sigma * sigma, 0};
  const std::vector<PolyQ> v{0, 0, -sigma, 0, 0, make_rational(-3, 7) * sigma * sigma, 0};
  for (int k = 0; k <= 6; ++k) {
    CHECK(s.x[static_cast<std::size_t>(k)](0, 0) == u[static_cast<std::size_t>(k)]);
    CHECK(s.y[static_cast<std::size_t>(k)](0, 0) == v[static_cast<std::size_t>(k)]);
  }
  CHECK(s.obstructions.empty());
  CHECK(residual_check(sys, s));
  const MaximalityVerdict m = maximality(s);
  CHECK(m.total == 2);
  CHECK(m.maximal);

  SeriesSolution broken = s;
  broken.x[3](0, 0) += PolyQ(1);
  CHECK_FALSE(residual_check(sys, broken));
}

TEST_CASE("scalar maximal solutions carry two parameters") {
  for (int a = -4; a <= 2; ++a)
    for (int b = -4; b <= 2; ++b)
      for (int t = 1; t <= 3; ++t) {
        const MaximalityVerdict v = count_parameters(diag_residues(1, ResidueShape::of_type(t, 1)), a, b);
        if (v.maximal) CHECK(v.total == 2);
      }
}

TEST_CASE("scalar tailed system passes") {
  SystemSpec sys = SystemSpec::make_tail(1, -1, -1);
  // the scalar constants enter as b5 and c5
  sys.b[4](0, 0) = PolyQ::variable("sc1");
  sys.c[4](0, 0) = PolyQ::variable("sc2");
  for (int t = 1; t <= 3; ++t) {
    const SeriesSolution s = expand_series(sys, diag_residues(1, ResidueShape::of_type(t, 1)));
    CHECK(s.obstructions.empty());
    CHECK(residual_check(sys, s));
    CHECK(maximality(s).maximal);
  }
}

TEST_CASE("rhs at k = 1 picks up -b5") {
  SystemSpec sys = SystemSpec::make_tail(2, -1, -1);
  sys.b[4] = MatPoly::symbolic(2, "rb5");
  SeriesSolution s;
  s.n = 2;
  s.alpha = -1;
  s.beta = -1;
  s.z0 = intern("z0");
  s.residues = diag_residues(2, ResidueShape::diag(0, 0, 0, 2));
  s.x = {MatPoly(2, 2)};
  s.y = {MatPoly(2, 2)};
  auto [f1, f2] = rhs_inhomogeneous(sys, s, 1);
  CHECK(f1 == -sys.b[4]);
  CHECK(f2.is_zero());
  auto [g1, g2] = rhs_inhomogeneous(SystemSpec::make_homogeneous(2, -1, -1), s, 0);
  CHECK(g1.is_zero());
  CHECK(g2.is_zero());
}

TEST_CASE("n = 2 at (-1,-1): resonance blocks and maximality") {
  const SystemSpec sys = SystemSpec::make_homogeneous(2, -1, -1);
  for (int t = 1; t <= 3; ++t) {
    const SeriesSolution s = expand_series(sys, diag_residues(2, ResidueShape::of_type(t, 2)));
    std::vector<std::string> names;
    for (const auto& f : s.free_params) names.push_back(f.name());
    CHECK(names == std::vector<std::string>{"x0_22", "y0_22", "x1_12", "x1_21", "x2_11"});
    const MaximalityVerdict v = maximality(s);
    CHECK(v.param_count_in_coeffs == 5);
    CHECK(v.orbit_dim == 2);
    CHECK(v.total == 8);
    CHECK(v.maximal);
    CHECK(residual_check(sys, s));
  }
}

TEST_CASE("non-commuting maximality at (0,-3) and (0,-2)") {
  const SeriesSolution s = expand_series(SystemSpec::make_homogeneous(2, 0, -3),
                                         noncommuting_residues(0, -3, 2, ResidueShape::noncommuting(1, 0, 0, 0, 0)));
  const MaximalityVerdict v = maximality(s);
  CHECK(v.param_count_in_coeffs == 4);
  CHECK(v.orbit_dim == 3);
  CHECK(v.maximal);
  const MaximalityVerdict w = count_parameters(
      noncommuting_residues(0, -2, 2, ResidueShape::noncommuting(1, 0, 0, 0, 0)), 0, -2);
  CHECK_FALSE(w.maximal);
}

TEST_CASE("parameter count formulas at (0,-3) and (0,-2)") {
  for (int n = 2; n <= 4; ++n)
    for (int m = 1; 2 * m <= n; ++m)
      for (int k1 = 0; 2 * m + k1 <= n; ++k1)
        for (int k2 = 0; 2 * m + k1 + k2 <= n; ++k2)
          for (int k3 = 0; 2 * m + k1 + k2 + k3 <= n; ++k3) {
            const int k4 = n - 2 * m - k1 - k2 - k3;
            const auto sh = ResidueShape::noncommuting(m, k1, k2, k3, k4);
            CAPTURE(sh.to_string());
            const int m03 = 2 * n * n - m * m - m * (k1 + 2 * k2 + k3) - k1 * k1 - k2 * k2 - k3 * k3 -
                            k2 * (k1 + k3 + k4);
            CHECK(count_parameters(noncommuting_residues(0, -3, n, sh), 0, -3).total - 1 == m03);
            const int m02 = 2 * n * n - 2 * m * m - 2 * m * (k2 + k3) - k1 * k1 - k2 * k2 - k3 * k3 - k2 * k3;
            CHECK(count_parameters(noncommuting_residues(0, -2, n, sh), 0, -2).total - 1 == m02);
          }
}

TEST_CASE("expand rejects residues that do not fit") {
  ResiduePair bad = diag_residues(1, ResidueShape::of_type(1, 1));
  bad.p(0, 0) = 2;
  CHECK_THROWS_AS(expand_series(SystemSpec::make_homogeneous(1, 0, 0), bad), ResidueMismatch);
}
