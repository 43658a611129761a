#include "kov/classify.hpp"

#include <atomic>
#include <thread>

#include "kov/errors.hpp"

namespace kov {

CandidateReport run_candidate(const SystemSpec& sys, std::string name, const ResiduePair& pair, int depth) {
  CandidateReport r;
  r.name = std::move(name);
  r.residues = pair;
  r.verdict = count_parameters(pair, sys.alpha, sys.beta);
  if (!r.verdict.maximal) return r;
  const LOperator l = build_L(pair, sys.alpha, sys.beta);
  if (depth < 0) {
    const auto res = resonances(l);
    depth = res.empty() ? 0 : res.back();
  }
  const SeriesSolution s = expand_series(sys, pair, depth);
  r.expanded = true;
  r.verdict = maximality(s);
  r.obstructions = s.obstructions;
  r.residual_ok = residual_check(sys, s);
  return r;
}

namespace {

std::vector<NamedResidues> point_candidates(const Rational& a, const Rational& b, int n) {
  std::vector<NamedResidues> out;
  for (int t = 1; t <= 3; ++t)
    out.push_back({"type" + std::to_string(t), diag_residues(n, ResidueShape::of_type(t, n))});
  if (n >= 2 && noncommuting_exists(a, b)) {
    const int rest = n - 2;
    for (int k1 = 0; k1 <= rest; ++k1)
      for (int k2 = 0; k1 + k2 <= rest; ++k2)
        for (int k3 = 0; k1 + k2 + k3 <= rest; ++k3) {
          const auto sh = ResidueShape::noncommuting(1, k1, k2, k3, rest - k1 - k2 - k3);
          out.push_back({"noncommuting" + sh.to_string().substr(std::string("noncommuting").size()),
                         noncommuting_residues(a, b, n, sh)});
        }
  }
  return out;
}

}  // namespace

ClassificationResult classify_point(const Rational& alpha, const Rational& beta, int n) {
  ClassificationResult out;
  out.point = {alpha, beta};
  const SystemSpec sys = SystemSpec::make_homogeneous(n, alpha, beta);
  for (const auto& c : point_candidates(alpha, beta, n)) {
    CandidateReport r = run_candidate(sys, c.name, c.residues);
    if (r.verdict.maximal) {
      if (c.residues.shape.commuting)
        out.maximal_types.insert(*c.residues.type_tag);
      else
        out.noncommuting_maximal = true;
    }
    out.candidates.push_back(std::move(r));
  }
  out.total_maximal = static_cast<int>(out.maximal_types.size()) + (out.noncommuting_maximal ? 1 : 0);
  return out;
}

std::vector<ClassificationResult> scan_sigma(int lo, int hi, int n, int jobs) {
  std::vector<RationalPoint> points;
  for (int a = lo; a <= hi; ++a)
    for (int b = lo; b <= hi; ++b) points.emplace_back(a, b);
  std::vector<ClassificationResult> out(points.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < points.size(); i = next++)
      out[i] = classify_point(points[i].first, points[i].second, n);
  };
  const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(points.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return out;
}

std::string family_name(FamilyId id) {
  switch (id) {
    case FamilyId::P4_0: return "P4_0";
    case FamilyId::P4_1: return "P4_1";
    case FamilyId::P4_2: return "P4_2";
  }
  return "?";
}

FamilyId parse_family(const std::string& s) {
  for (FamilyId id : {FamilyId::P4_0, FamilyId::P4_1, FamilyId::P4_2})
    if (s == family_name(id)) return id;
  throw ConfigError("unknown family '" + s + "' (expected P4_0, P4_1 or P4_2)");
}

RationalPoint family_point(FamilyId id) {
  switch (id) {
    case FamilyId::P4_0: return {-1, -1};
    case FamilyId::P4_1: return {0, -2};
    case FamilyId::P4_2: return {0, -3};
  }
  return {0, 0};
}

namespace {

Rational small_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-5, 5), den(1, 3);
  return make_rational(num(rng), den(rng));
}

QMatrix random_matrix(std::mt19937_64& rng, int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = small_rational(rng);
  return m;
}

// Product of random elementary integer matrices: det 1, small entries.
QMatrix random_unimodular(std::mt19937_64& rng, int n) {
  QMatrix s = QMatrix::identity(n);
  if (n < 2) return s;
  std::uniform_int_distribution<int> idx(0, n - 1), c(-2, 2);
  for (int step = 0; step < 2 * n; ++step) {
    const int i = idx(rng), j = idx(rng);
    if (i == j) continue;
    QMatrix e = QMatrix::identity(n);
    e(i, j) = c(rng);
    s = s * e;
  }
  return s;
}

MatPoly scalar_matrix(int n, const Rational& c) { return MatPoly::scalar(n, PolyQ(c)); }

}  // namespace

DeformationFamily default_family(FamilyId id, int n, std::mt19937_64& rng) {
  DeformationFamily f;
  f.id = id;
  f.n = n;
  f.h = random_matrix(rng, n);
  f.gamma = small_rational(rng);
  f.gamma1 = small_rational(rng);
  f.gamma2 = small_rational(rng);
  f.h1 = QMatrix(n, n);
  f.h2 = QMatrix(n, n);
  if (n >= 2) {
    f.h2(0, 0) = 1;
    f.h2(1, 1) = -1;
    f.h1(1, 0) = 1;
  }
  return f;
}

void check_constraints(const DeformationFamily& f) {
  if (f.id != FamilyId::P4_2) return;
  const QMatrix lhs = commutator(f.h2, f.h1);
  if (!(lhs == Rational(-2) * f.h1))
    throw ConstraintViolated("P4_2 needs [h2,h1] = -2 h1");
}

SystemSpec family_system_unchecked(const DeformationFamily& f) {
  const auto [a, b] = family_point(f.id);
  SystemSpec s = SystemSpec::make_tail(f.n, a, b);
  switch (f.id) {
    case FamilyId::P4_0:
      s.b[0] = MatPoly(f.h);
      s.c[1] = -MatPoly(f.h);
      s.b[4] = scalar_matrix(f.n, f.gamma1);
      s.c[4] = scalar_matrix(f.n, f.gamma2);
      break;
    case FamilyId::P4_1:
      s.b[4] = MatPoly(f.h);
      s.c[4] = MatPoly(f.h) + scalar_matrix(f.n, f.gamma);
      break;
    case FamilyId::P4_2:
      s.b[4] = MatPoly(f.h2);
      s.c[2] = MatPoly(f.h1);
      s.c[4] = Rational(2) * MatPoly(f.h2) + scalar_matrix(f.n, f.gamma);
      break;
  }
  return s;
}

SystemSpec family_system(const DeformationFamily& f) {
  check_constraints(f);
  return family_system_unchecked(f);
}

std::vector<NamedResidues> family_candidates(FamilyId id, int n, std::mt19937_64* conjugator) {
  const auto [a, b] = family_point(id);
  std::vector<NamedResidues> out;
  const std::vector<int> types = id == FamilyId::P4_2 ? std::vector<int>{1, 3} : std::vector<int>{1, 2, 3};
  for (int t : types) out.push_back({"type" + std::to_string(t), diag_residues(n, ResidueShape::of_type(t, n))});
  if (id == FamilyId::P4_2)
    out.push_back({"noncommuting(m=1)", noncommuting_residues(a, b, n, ResidueShape::noncommuting(1, 0, 0, 0, n - 2))});
  if (conjugator) {
    const std::size_t base = out.size();
    for (std::size_t i = 0; i < base; ++i)
      out.push_back({out[i].name + "/conjugated", conjugate(out[i].residues, random_unimodular(*conjugator, n))});
  }
  return out;
}

DeformationReport verify_system(const std::string& label, const SystemSpec& sys,
                                const std::vector<NamedResidues>& candidates) {
  DeformationReport rep;
  rep.family = label;
  rep.system = sys;
  rep.all_maximal = true;
  for (const auto& c : candidates) {
    CandidateReport r = run_candidate(sys, c.name, c.residues);
    rep.all_maximal = rep.all_maximal && r.verdict.maximal && r.residual_ok;
    rep.candidates.push_back(std::move(r));
  }
  return rep;
}

DeformationReport verify_deformation(const DeformationFamily& f, std::mt19937_64* conjugator) {
  const SystemSpec sys = family_system(f);
  return verify_system(family_name(f.id), sys, family_candidates(f.id, f.n, conjugator));
}

// ---------------------------------------------------------------------------
// Parametric resonance conditions at (-1,-1)

namespace {

PolyQ var(const std::string& name) { return PolyQ::variable(name); }

std::string entry_name(const std::string& m, int i, int j) {
  return m + "_" + std::to_string(i + 1) + std::to_string(j + 1);
}

MatPoly sym(int n, const std::string& m) { return MatPoly::symbolic(n, m); }

void assign(std::map<int, PolyQ>& out, int n, const std::string& m, const MatPoly& value) {
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[intern(entry_name(m, i, j)).id] = value(i, j);
}

}  // namespace

ParametricObstructions parametric_obstructions(int n) {
  SystemSpec sys = SystemSpec::make_tail(n, -1, -1);
  for (int i = 0; i < 5; ++i) {
    sys.b[static_cast<std::size_t>(i)] = sym(n, "b" + std::to_string(i + 1));
    sys.c[static_cast<std::size_t>(i)] = sym(n, "c" + std::to_string(i + 1));
  }
  ParametricObstructions out;
  for (int t = 1; t <= 3; ++t)
    out.by_type.push_back(expand_series(sys, diag_residues(n, ResidueShape::of_type(t, n)), 2).obstructions);
  return out;
}

std::vector<Obstruction> substitute_obstructions(const std::vector<Obstruction>& obs,
                                                 const std::map<int, PolyQ>& subst) {
  std::vector<Obstruction> out;
  for (const auto& o : obs) {
    Obstruction r{o.k, {}};
    for (const auto& [label, p] : o.rows) {
      PolyQ v = p.substitute(subst);
      if (!v.is_zero()) r.rows.emplace_back(label, std::move(v));
    }
    if (!r.rows.empty()) out.push_back(std::move(r));
  }
  return out;
}

std::map<int, PolyQ> type2_conditions(int n) {
  const MatPoly id = MatPoly::identity(n);
  const MatPoly b1 = sym(n, "b1"), b2 = sym(n, "b2");
  const PolyQ g1 = var("g1"), g2 = var("g2"), g3 = var("g3"), g4 = var("g4"), g5 = var("g5");
  std::map<int, PolyQ> out;
  assign(out, n, "c1", -b2 + g1 * id);
  assign(out, n, "c2", -b1 + g2 * id);
  assign(out, n, "c3", g3 * id);
  assign(out, n, "c4", (g3 + g4) * id);
  assign(out, n, "c5", -((g3 + make_rational(1, 2) * g4) * (b1 + b2)) + g5 * id);
  return out;
}

std::map<int, PolyQ> type3_conditions(int n) {
  const MatPoly id = MatPoly::identity(n);
  const MatPoly b1 = sym(n, "b1"), b2 = sym(n, "b2");
  const PolyQ d1 = var("d1"), d2 = var("d2"), d3 = var("d3"), d4 = var("d4"), d5 = var("d5");
  std::map<int, PolyQ> out;
  assign(out, n, "c1", -b2 + d1 * id);
  assign(out, n, "c2", -b1 + d2 * id);
  assign(out, n, "b3", d3 * id);
  assign(out, n, "b4", (d3 + d4) * id);
  assign(out, n, "b5", (d3 + make_rational(1, 2) * d4) * (b1 + b2) + d5 * id);
  return out;
}

std::map<int, PolyQ> joint_k1_conditions(int n) {
  std::map<int, PolyQ> out = type2_conditions(n);
  for (const auto& [k, v] : type3_conditions(n)) {
    const std::string& name = label(Param{k});
    if (name.rfind("c1_", 0) == 0 || name.rfind("c2_", 0) == 0) continue;  // shared with type 2
    out[k] = v;
  }
  return out;
}

std::map<int, PolyQ> k2_conditions() {
  return {{intern("g2").id, -var("g1")}, {intern("g4").id, Rational(-2) * var("g3")},
          {intern("d4").id, Rational(-2) * var("d3")}};
}

std::map<int, PolyQ> compose(const std::map<int, PolyQ>& first, const std::map<int, PolyQ>& second) {
  std::map<int, PolyQ> out;
  for (const auto& [k, v] : first) out[k] = v.substitute(second);
  for (const auto& [k, v] : second)
    if (!out.count(k)) out[k] = v;
  return out;
}

}  // namespace kov
