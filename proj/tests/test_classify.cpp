#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "kov/classify.hpp"
#include "kov/errors.hpp"

using namespace kov;

namespace {

std::size_t nonzero_rows(const std::vector<Obstruction>& obs) {
  std::size_t n = 0;
  for (const auto& o : obs) n += o.rows.size();
  return n;
}

void add_entries(std::map<int, PolyQ>& m, const std::string& name, const MatPoly& v) {
  for (int i = 0; i < v.rows(); ++i)
    for (int j = 0; j < v.cols(); ++j)
      m[intern(name + "_" + std::to_string(i + 1) + std::to_string(j + 1)).id] = v(i, j);
}

}  // namespace

TEST_CASE("scan of [-6,3]^2 at n = 2 finds exactly the sigma points with three maximal solutions") {
  const auto res = scan_sigma(-6, 3, 2, 2);
  REQUIRE(res.size() == 100);
  std::set<std::pair<int, int>> full;
  for (const auto& r : res) {
    CHECK(r.total_maximal <= 3);
    for (const auto& c : r.candidates)
      if (c.expanded) {
        CHECK(c.residual_ok);
        CHECK(c.obstructions.empty());  // homogeneous: no obstruction at n = 2
      }
    if (r.total_maximal == 3)
      full.emplace(static_cast<int>(r.point.first.get_num().get_si()), static_cast<int>(r.point.second.get_num().get_si()));
  }
  const auto sigma = sigma_points();
  CHECK(full == std::set<std::pair<int, int>>(sigma.begin(), sigma.end()));
  CHECK(full.size() == 13);
}

TEST_CASE("the classification does not depend on n") {
  std::set<std::pair<int, int>> n2, n3;
  for (const auto& r : scan_sigma(-6, 3, 2, 1))
    if (r.total_maximal == 3) n2.emplace(r.point.first.get_num().get_si(), r.point.second.get_num().get_si());
  for (const auto& r : scan_sigma(-6, 3, 3, 1))
    if (r.total_maximal == 3) n3.emplace(r.point.first.get_num().get_si(), r.point.second.get_num().get_si());
  CHECK(n2 == n3);
}

TEST_CASE("non-integer points never have three maximal solutions") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 20; ++t) {
    const Rational a = make_rational(static_cast<long>(rng() % 19) - 12, 2 + static_cast<long>(rng() % 4));
    const Rational b = make_rational(static_cast<long>(rng() % 19) - 12, 2 + static_cast<long>(rng() % 4));
    if (a.get_den() == 1 && b.get_den() == 1) continue;
    CAPTURE(to_string(a));
    CAPTURE(to_string(b));
    CHECK(classify_point(a, b, 2).total_maximal < 3);
  }
}

TEST_CASE("parallel and serial scans agree") {
  const auto a = scan_sigma(-3, 0, 2, 1), b = scan_sigma(-3, 0, 2, 3);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].point == b[i].point);
    CHECK(a[i].maximal_types == b[i].maximal_types);
    CHECK(a[i].noncommuting_maximal == b[i].noncommuting_maximal);
  }
}

TEST_CASE("maximal solution types at the family points") {
  auto r = classify_point(-1, -1, 2);
  CHECK(r.maximal_types == std::set<int>{1, 2, 3});
  CHECK_FALSE(r.noncommuting_maximal);
  r = classify_point(0, -3, 2);
  CHECK(r.maximal_types == std::set<int>{1, 3});
  CHECK(r.noncommuting_maximal);
  r = classify_point(0, -2, 2);
  CHECK(r.maximal_types == std::set<int>{1, 2, 3});
  r = classify_point(1, 1, 2);
  CHECK(r.total_maximal == 0);
}

TEST_CASE("family names") {
  CHECK(parse_family("P4_1") == FamilyId::P4_1);
  CHECK_THROWS_AS(parse_family("P4_9"), ConfigError);
  CHECK(family_point(FamilyId::P4_2) == RationalPoint(0, -3));
}

TEST_CASE("deformed families keep every maximal solution") {
  std::mt19937_64 rng(2024);
  for (FamilyId id : {FamilyId::P4_0, FamilyId::P4_1, FamilyId::P4_2})
    for (int n : {2, 3}) {
      CAPTURE(family_name(id));
      CAPTURE(n);
      const auto f = default_family(id, n, rng);
      const auto rep = verify_deformation(f, &rng);
      CHECK(rep.all_maximal);
      CHECK(rep.candidates.size() == 6);
      for (const auto& c : rep.candidates) CHECK(c.obstructions.empty());
    }
}

TEST_CASE("negative controls") {
  std::mt19937_64 rng(7);
  SUBCASE("P4_1 with a different matrix in c5") {
    auto f = default_family(FamilyId::P4_1, 2, rng);
    SystemSpec s = family_system(f);
    s.c[4] = s.c[4] + MatPoly(QMatrix{{0, 1}, {0, 0}});
    CHECK_FALSE(verify_system("x", s, family_candidates(FamilyId::P4_1, 2)).all_maximal);
  }
  SUBCASE("P4_2 with the commutator constraint broken") {
    auto f = default_family(FamilyId::P4_2, 2, rng);
    f.h1 = QMatrix{{1, 2}, {3, 4}};
    CHECK_THROWS_AS(verify_deformation(f), ConstraintViolated);
    const auto rep = verify_system("x", family_system_unchecked(f), family_candidates(FamilyId::P4_2, 2));
    CHECK_FALSE(rep.all_maximal);
    f = default_family(FamilyId::P4_2, 2, rng);
    f.h2 = QMatrix{{2, 0}, {0, -1}};
    CHECK_THROWS_AS(check_constraints(f), ConstraintViolated);
    CHECK_FALSE(verify_system("x", family_system_unchecked(f), family_candidates(FamilyId::P4_2, 2)).all_maximal);
  }
  SUBCASE("a point outside sigma has no maximal solutions") {
    CHECK(classify_point(1, 1, 2).total_maximal == 0);
    CHECK(classify_point(make_rational(1, 2), -1, 2).total_maximal < 3);
  }
}

TEST_CASE("conjugated candidates satisfy the residue equations") {
  std::mt19937_64 rng(3);
  for (const auto& c : family_candidates(FamilyId::P4_2, 3, &rng)) {
    const auto [a, b] = family_point(FamilyId::P4_2);
    CHECK(check_residue_equations(c.residues, a, b));
  }
}

TEST_CASE("parametric resonance conditions at (-1,-1)") {
  const auto par = parametric_obstructions(2);
  REQUIRE(par.by_type.size() == 3);
  for (const auto& t : par.by_type) CHECK(nonzero_rows(t) > 0);  // generic b, c obstruct

  auto at_k = [](const std::vector<Obstruction>& obs, int k) {
    std::vector<Obstruction> out;
    for (const auto& o : obs)
      if (o.k == k) out.push_back(o);
    return out;
  };
  // Type 2 and type 3 first resonate at k = 1.
  CHECK(nonzero_rows(at_k(par.by_type[1], 1)) > 0);
  CHECK(nonzero_rows(at_k(par.by_type[2], 1)) > 0);
  CHECK(nonzero_rows(substitute_obstructions(at_k(par.by_type[1], 1), type2_conditions())) == 0);
  CHECK(nonzero_rows(substitute_obstructions(at_k(par.by_type[2], 1), type3_conditions())) == 0);
  // Neither set alone suffices for the other type.
  CHECK(nonzero_rows(substitute_obstructions(at_k(par.by_type[2], 1), type2_conditions())) > 0);
  CHECK(nonzero_rows(substitute_obstructions(at_k(par.by_type[1], 1), type3_conditions())) > 0);

  const auto joint = joint_k1_conditions();
  const auto full = compose(joint, k2_conditions());
  SUBCASE("commuting b1, b2 clear every obstruction") {
    std::map<int, PolyQ> comm;
    add_entries(comm, "b2", PolyQ::variable("s") * MatPoly::symbolic(2, "b1") +
                                 MatPoly::scalar(2, PolyQ::variable("t")));
    const auto all = compose(full, comm);
    for (const auto& t : par.by_type) CHECK(nonzero_rows(substitute_obstructions(t, all)) == 0);
  }
  SUBCASE("b2 = -b1 without the k = 2 relations leaves a k = 2 obstruction") {
    std::map<int, PolyQ> anti;
    add_entries(anti, "b2", -MatPoly::symbolic(2, "b1"));
    const auto all = compose(joint, anti);
    for (const auto& t : par.by_type) CHECK(nonzero_rows(at_k(substitute_obstructions(t, all), 1)) == 0);
    std::size_t k2 = 0;
    for (const auto& t : par.by_type) k2 += nonzero_rows(at_k(substitute_obstructions(t, all), 2));
    CHECK(k2 > 0);
  }
  SUBCASE("type 1: [b1,b2] must equal -(g1 + g2)/2 (b1 + b2)") {
    // b1 = (c/2) H + r I + s E, b2 = E - b1 gives [b1,b2] = c E.
    const PolyQ c = PolyQ::variable("cc"), r = PolyQ::variable("r"), s = PolyQ::variable("s");
    MatPoly b1(2, 2);
    b1(0, 0) = make_rational(1, 2) * c + r;
    b1(1, 1) = -(make_rational(1, 2) * c) + r;
    b1(0, 1) = s;
    const MatPoly e(QMatrix{{0, 1}, {0, 0}});
    std::map<int, PolyQ> fam;
    add_entries(fam, "b1", b1);
    add_entries(fam, "b2", e - b1);
    const auto base = compose(joint, fam);
    std::map<int, PolyQ> good{{intern("cc").id, make_rational(-1, 2) * (PolyQ::variable("g1") + PolyQ::variable("g2"))}};
    CHECK(nonzero_rows(substitute_obstructions(at_k(par.by_type[0], 1), compose(base, good))) == 0);
    std::map<int, PolyQ> bad{{intern("cc").id, make_rational(-1, 2) * (PolyQ::variable("g1") + PolyQ::variable("g2")) + PolyQ(1)}};
    CHECK(nonzero_rows(substitute_obstructions(at_k(par.by_type[0], 1), compose(base, bad))) > 0);
  }
}
