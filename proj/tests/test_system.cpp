#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "kov/config.hpp"
#include "kov/errors.hpp"
#include "kov/system.hpp"

using namespace kov;

TEST_CASE("delta and mu") {
  CHECK(delta(-1, -1) == 0);
  CHECK(delta(0, 0) == 3);
  CHECK(delta(0, -3) == 3);
  MuValues m = mu_values(0, -3);
  CHECK(m.mu1 == 0);
  CHECK(m.mu2 == 1);
  CHECK(m.mu3 == 0);
  CHECK(m.mu4 == 0);
  m = mu_values(0, 0);
  CHECK(m.mu1 == 0);
  CHECK(m.mu2 == -1);
  CHECK(m.mu3 == 0);
  CHECK(m.mu4 == -1);
  CHECK_THROWS_AS(mu_values(-1, -1), DeltaZero);
}

TEST_CASE("non-commuting residues exist exactly on the twelve points") {
  CHECK(noncommuting_exists(0, -3));
  CHECK_FALSE(noncommuting_exists(-1, -1));
  CHECK_FALSE(noncommuting_exists(5, 7));
  std::vector<std::pair<int, int>> found;
  for (int a = -8; a <= 5; ++a)
    for (int b = -8; b <= 5; ++b)
      if (noncommuting_exists(a, b)) found.emplace_back(a, b);
  CHECK(found == sigma0_points());
  CHECK(sigma0_points().size() == 12);
  CHECK_FALSE(noncommuting_exists(make_rational(1, 2), 0));
}

TEST_CASE("diagonal residues") {
  ResiduePair t1 = diag_residues(1, ResidueShape::of_type(1, 1));
  CHECK(t1.p == QMatrix{{-1}});
  CHECK(t1.q == QMatrix{{-1}});
  CHECK(t1.type_tag == 1);
  ResiduePair t2 = diag_residues(2, ResidueShape::diag(0, 1, 0, 1));
  CHECK(t2.p == QMatrix{{1, 0}, {0, 0}});
  CHECK(t2.q.is_zero());
  CHECK(t2.type_tag == 2);
  ResiduePair all = diag_residues(4, ResidueShape::diag(1, 1, 1, 1));
  CHECK(all.p == QMatrix{{-1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}});
  CHECK(all.q == QMatrix{{-1, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 0}});
  CHECK_FALSE(all.type_tag.has_value());
  CHECK_THROWS_AS(diag_residues(3, ResidueShape::diag(1, 1, 0, 0)), BadPartition);
}

TEST_CASE("commuting residues solve the residue equations for any alpha, beta") {
  for (int n = 1; n <= 4; ++n)
    for (int k1 = 0; k1 <= n; ++k1)
      for (int k2 = 0; k1 + k2 <= n; ++k2)
        for (int k3 = 0; k1 + k2 + k3 <= n; ++k3) {
          ResiduePair r = diag_residues(n, ResidueShape::diag(k1, k2, k3, n - k1 - k2 - k3));
          for (int a = -3; a <= 2; ++a) CHECK(check_residue_equations(r, a, a * 2 - 1));
          CHECK(commutator(r.p, r.q).is_zero());
          CHECK(r.p * r.p * r.p == r.p);
          CHECK(r.q * r.q * r.q == r.q);
        }
}

TEST_CASE("non-commuting residues") {
  ResiduePair r = noncommuting_residues(0, -3, 2, ResidueShape::noncommuting(1, 0, 0, 0, 0));
  CHECK(r.p == QMatrix{{0, 0}, {0, 1}});
  CHECK(r.q == QMatrix{{0, -1}, {0, 0}});
  CHECK(commutator(r.p, r.q) == QMatrix{{0, 1}, {0, 0}});
  ResiduePair s = noncommuting_residues(-1, -2, 2, ResidueShape::noncommuting(1, 0, 0, 0, 0));
  MuValues mu = mu_values(-1, -2);
  CHECK(s.p(0, 0) == mu.mu1);
  CHECK(s.p(0, 1) == 1);
  CHECK(s.p(1, 1) == mu.mu2);
  CHECK(s.q(0, 1) == 0);
  CHECK_THROWS_AS(noncommuting_residues(-1, -1, 2, ResidueShape::noncommuting(1, 0, 0, 0, 0)), NotInSigma0);
  CHECK_THROWS_AS(noncommuting_residues(0, -3, 3, ResidueShape::noncommuting(1, 0, 0, 0, 0)), BadPartition);

  // every point, every shape up to n = 5
  for (auto [a, b] : sigma0_points()) {
    const MuValues m = mu_values(a, b);
    for (int n = 2; n <= 5; ++n)
      for (int mm = 1; 2 * mm <= n; ++mm)
        for (int k1 = 0; 2 * mm + k1 <= n; ++k1)
          for (int k2 = 0; 2 * mm + k1 + k2 <= n; ++k2)
            for (int k3 = 0; 2 * mm + k1 + k2 + k3 <= n; ++k3) {
              auto sh = ResidueShape::noncommuting(mm, k1, k2, k3, n - 2 * mm - k1 - k2 - k3);
              ResiduePair pr = noncommuting_residues(a, b, n, sh);
              CAPTURE(a);
              CAPTURE(b);
              CAPTURE(sh.to_string());
              CHECK(check_residue_equations(pr, a, b));
              const QMatrix k = commutator(pr.p, pr.q);
              CHECK_FALSE(k.is_zero());
              CHECK((k * k).is_zero());
              CHECK(pr.p * k == m.mu1 * k);
              CHECK(k * pr.p == m.mu2 * k);
              CHECK(pr.q * k == m.mu3 * k);
              CHECK(k * pr.q == m.mu4 * k);
            }
  }
}

TEST_CASE("residue equation check") {
  ResiduePair zero{QMatrix(2, 2), QMatrix(2, 2), ResidueShape::diag(0, 0, 0, 2), std::nullopt};
  CHECK(check_residue_equations(zero, 3, 4));
  ResiduePair id{QMatrix::identity(2), QMatrix(2, 2), ResidueShape::diag(0, 2, 0, 0), std::nullopt};
  CHECK(check_residue_equations(id, 0, 0));
  id.p = Rational(2) * QMatrix::identity(2);
  CHECK_FALSE(check_residue_equations(id, 0, 0));
}

TEST_CASE("dihedral action") {
  CHECK(dihedral_orbit(-1, -1) == std::set<RationalPoint>{{-1, -1}});
  auto o = dihedral_orbit(0, -3);
  CHECK(o.size() == 6);
  CHECK(o.count({0, 0}) == 1);
  CHECK(dihedral_orbit(1, -2).size() == 6);
  // Sigma splits into three orbits; Sigma0 into the two six-point ones
  std::set<RationalPoint> sigma0;
  for (auto [a, b] : sigma0_points()) sigma0.insert({a, b});
  std::set<std::set<RationalPoint>> orbits;
  for (const auto& x : sigma0) {
    auto orb = dihedral_orbit(x.first, x.second);
    for (const auto& y : orb) CHECK(sigma0.count(y) == 1);
    orbits.insert(orb);
  }
  CHECK(orbits.size() == 2);
  // generators are involutions and the group has order at most 12
  for (int a = -4; a <= 3; ++a)
    for (int b = -4; b <= 3; ++b) {
      RationalPoint x{a, b};
      CHECK(dihedral_swap(dihedral_swap(x)) == x);
      CHECK(dihedral_reflect(dihedral_reflect(x)) == x);
      CHECK(dihedral_shear(dihedral_shear(x)) == x);
      CHECK(dihedral_orbit(a, b).size() <= 12);
    }
}

TEST_CASE("orbit dimension") {
  for (int n = 1; n <= 4; ++n)
    for (int k1 = 0; k1 <= n; ++k1)
      for (int k2 = 0; k1 + k2 <= n; ++k2)
        for (int k3 = 0; k1 + k2 + k3 <= n; ++k3) {
          const int k4 = n - k1 - k2 - k3;
          ResiduePair r = diag_residues(n, ResidueShape::diag(k1, k2, k3, k4));
          CHECK(orbit_dimension(r) == n * n - (k1 * k1 + k2 * k2 + k3 * k3 + k4 * k4));
        }
  for (int n = 2; n <= 5; ++n)
    for (int t = 1; t <= 3; ++t) CHECK(orbit_dimension(diag_residues(n, ResidueShape::of_type(t, n))) == 2 * n - 2);
  for (int n = 2; n <= 5; ++n) {
    auto r = noncommuting_residues(0, -3, n, ResidueShape::noncommuting(1, 0, 0, 0, n - 2));
    CHECK(orbit_dimension(r) == 3 * n - 3);
  }
}

TEST_CASE("config round trip and errors") {
  auto j = nlohmann::json::parse(R"({"n": 2, "alpha": "0", "beta": -3,
      "b5": [["h2_11", "0"], ["0", "-h2_11"]], "c3": [[0, 0], ["1/2", 0]]})");
  SystemSpec s = system_from_json(j);
  CHECK(s.n == 2);
  CHECK(s.beta == -3);
  CHECK_FALSE(s.homogeneous);
  CHECK(s.b[4](1, 1) == -PolyQ::variable("h2_11"));
  CHECK(s.c[2](1, 0) == PolyQ(make_rational(1, 2)));
  SystemSpec back = system_from_json(system_to_json(s));
  for (int i = 0; i < 5; ++i) {
    CHECK(back.b[static_cast<std::size_t>(i)] == s.b[static_cast<std::size_t>(i)]);
    CHECK(back.c[static_cast<std::size_t>(i)] == s.c[static_cast<std::size_t>(i)]);
  }
  CHECK(system_from_json(nlohmann::json::parse(R"({"n":1,"alpha":"-1","beta":"-1"})")).homogeneous);
  CHECK_THROWS_AS(system_from_json(nlohmann::json::parse(R"({"n":2,"alpha":"x","beta":0})")), ConfigError);
  CHECK_THROWS_AS(system_from_json(nlohmann::json::parse(R"({"n":2,"alpha":0,"beta":0,"b1":[[1]]})")), ConfigError);
  CHECK_THROWS_AS(system_from_json(nlohmann::json::parse(R"({"n":1,"alpha":0,"beta":0,"d1":1})")), ConfigError);
  CHECK_THROWS_AS(system_from_json(nlohmann::json::parse(R"({"n":1,"alpha":0,"beta":0,"b1":[["eps^-1"]]})")), ConfigError);
}
