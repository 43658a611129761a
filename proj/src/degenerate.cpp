#include "kov/degenerate.hpp"

#include "kov/errors.hpp"

namespace kov {

std::string p2_name(P2Id id) {
  switch (id) {
    case P2Id::P2_0: return "P2_0";
    case P2Id::P2_1: return "P2_1";
    case P2Id::P2_2: return "P2_2";
  }
  return "?";
}

std::pair<MatPoly, MatPoly> p2_rhs(const P2Target& t, const MatPoly& f, const MatPoly& g, const PolyQ& x) {
  const int n = f.rows();
  const MatPoly df = -(f * f) + g - MatPoly::scalar(n, make_rational(1, 2) * x) - t.c[0];
  const MatPoly dg = Rational(2) * (g * f) + t.beta * commutator(g, f) + t.c[1] * f + f * t.c[2] + t.c[3];
  return {df, dg};
}

std::string degeneration_name(DegenerationId id) {
  switch (id) {
    case DegenerationId::Scalar: return "scalar";
    case DegenerationId::P4_0: return "P4_0";
    case DegenerationId::P4_1: return "P4_1";
    case DegenerationId::P4_2: return "P4_2";
  }
  return "?";
}

DegenerationId parse_degeneration(const std::string& s) {
  for (DegenerationId id : {DegenerationId::Scalar, DegenerationId::P4_0, DegenerationId::P4_1, DegenerationId::P4_2})
    if (s == degeneration_name(id)) return id;
  throw ConfigError("unknown degeneration '" + s + "' (expected scalar, P4_0, P4_1 or P4_2)");
}

namespace {

PolyQ eps(int e = 1) { return PolyQ::variable(kEps, e); }
PolyQ var(const char* name) { return PolyQ::variable(name); }
MatPoly id_times(int n, const PolyQ& c) { return MatPoly::scalar(n, c); }

P2Target target(P2Id id, int n, const Rational& beta) {
  P2Target t;
  t.id = id;
  t.beta = beta;
  for (auto& m : t.c) m = MatPoly(n, n);
  return t;
}

}  // namespace

DegenerationCase degeneration_case(DegenerationId id, int n, int h2_exponent) {
  const MatPoly zero(n, n);
  switch (id) {
    case DegenerationId::Scalar: {
      SystemSpec s = SystemSpec::make_tail(1, 0, 0);
      s.c[4] = id_times(1, PolyQ(2) * var("theta"));
      P2Target t = target(P2Id::P2_0, 1, 0);
      t.c[3] = id_times(1, var("theta"));
      return {id, s, t};
    }
    case DegenerationId::P4_0: {
      const MatPoly b = MatPoly::symbolic(n, "B");
      SystemSpec s = SystemSpec::make_tail(n, -1, -1);
      s.b[0] = s.b[1] = PolyQ(2) * eps() * b;
      s.c[0] = s.c[1] = PolyQ(-2) * eps() * b;
      s.b[4] = id_times(n, var("gamma1"));
      s.c[4] = id_times(n, var("gamma2"));
      P2Target t = target(P2Id::P2_0, n, -1);
      t.c[0] = b;
      t.c[3] = id_times(n, make_rational(1, 2) * var("gamma2"));
      return {id, s, t};
    }
    case DegenerationId::P4_2: {
      const MatPoly a = MatPoly::symbolic(n, "A"), b = MatPoly::symbolic(n, "B");
      const PolyQ gamma = var("gamma");
      const MatPoly h2 = PolyQ(make_rational(-4, 3)) * eps() * b;
      const MatPoly h1 = Rational(3) * h2, h3 = Rational(3) * h2;
      const MatPoly h4 = a - id_times(n, make_rational(1, 2) * gamma);
      SystemSpec s = SystemSpec::make_tail(n, 0, -3);
      s.b[0] = Rational(-3) * h2 + h1;
      s.b[1] = -h1;
      s.b[2] = h2;
      s.b[4] = h4;
      s.c[0] = h1;
      s.c[1] = Rational(3) * h2 - h1;
      s.c[2] = h3;
      s.c[3] = Rational(-3) * h2;
      s.c[4] = Rational(2) * h4 + make_rational(1, 2) * (h3 * h2) + id_times(n, gamma);
      P2Target t = target(P2Id::P2_2, n, -3);
      t.c[0] = b;
      t.c[1] = Rational(2) * b;
      t.c[2] = Rational(-2) * b;
      t.c[3] = a;
      t.ab = std::make_pair(a, b);
      return {id, s, t};
    }
    case DegenerationId::P4_1: {
      const MatPoly a = MatPoly::symbolic(n, "A"), hh = MatPoly::symbolic(n, "H");
      const PolyQ gamma = var("gamma");
      const MatPoly h1 = zero, h2 = eps(h2_exponent) * hh, h3 = Rational(2) * a;
      SystemSpec s = SystemSpec::make_tail(n, 0, -2);
      s.b[0] = -h1;
      s.b[1] = h1 + Rational(2) * h2;
      s.b[2] = -h2;
      s.b[4] = h3 + id_times(n, gamma);
      s.c[0] = -h1 - Rational(2) * h2;
      s.c[1] = h1;
      s.c[3] = h2;
      s.c[4] = h3;
      P2Target t = target(P2Id::P2_1, n, -2);
      t.c[3] = a;
      return {id, s, t};
    }
  }
  throw ConfigError("unknown degeneration");
}

std::pair<MatPoly, MatPoly> transformed_system(const SystemSpec& sys, const MatPoly& f, const MatPoly& g,
                                               const PolyQ& x) {
  const int n = sys.n;
  const PolyQ quarter = make_rational(1, 4);
  const PolyQ z = quarter * eps(-3) - eps() * x;
  const MatPoly u = id_times(n, -(quarter * eps(-3))) - eps(-1) * f;
  const MatPoly v = PolyQ(-2) * eps() * g;
  SystemSpec shifted = sys;
  shifted.homogeneous = false;
  shifted.b[4] = sys.b[4] + id_times(n, make_rational(-1, 16) * eps(-6));
  auto [du, dv] = system_rhs(shifted, u, v, z);
  // d/dz = -eps^-1 d/dx, so f' = eps^2 u' and g' = v'/2.
  return {eps(2) * du, make_rational(1, 2) * dv};
}

DegenerationResult degenerate_to_p2(DegenerationId id, int n, int h2_exponent) {
  if (id == DegenerationId::Scalar) n = 1;
  const DegenerationCase dc = degeneration_case(id, n, h2_exponent);
  const MatPoly f = MatPoly::symbolic(n, "f"), g = MatPoly::symbolic(n, "g");
  const PolyQ x = var("x");
  const auto [df, dg] = transformed_system(dc.system, f, g, x);
  DegenerationResult r;
  r.name = degeneration_name(id);
  r.target = dc.target.id;
  r.kappa = Rational(-1) - dc.target.beta;
  r.f_limit = df.epsilon_limit();
  r.g_limit = dg.epsilon_limit();
  std::tie(r.f_target, r.g_target) = p2_rhs(dc.target, f, g, x);
  r.match = r.f_limit == r.f_target && r.g_limit == r.g_target;
  if (id == DegenerationId::P4_2) {
    const MatPoly a = dc.target.ab->first, b = dc.target.ab->second;
    const MatPoly side = commutator(a, b) + Rational(2) * b;
    // Recover the h's from the system: h2 = b3, h4 = b5, h1 = c1, h3 = c3.
    const MatPoly &h2 = dc.system.b[2], &h4 = dc.system.b[4], &h1 = dc.system.c[0], &h3 = dc.system.c[2];
    const MatPoly r1 = commutator(h4, h2 - h3) + Rational(2) * (h2 - h3);
    const MatPoly r2 = commutator(h4, Rational(2) * h1 - Rational(5) * h2) + Rational(2) * h2;
    const bool commuting = commutator(h1, h2).is_zero() && commutator(h1, h3).is_zero() && commutator(h2, h3).is_zero();
    r.constraint_maps = commuting && r1 == PolyQ(make_rational(8, 3)) * eps() * side &&
                        r2 == PolyQ(make_rational(-4, 3)) * eps() * side;
  }
  return r;
}

}  // namespace kov
