#pragma once

#include <optional>
#include <string>

#include "kov/system.hpp"

namespace kov {

enum class P2Id { P2_0, P2_1, P2_2 };
std::string p2_name(P2Id id);

/// f' = -f^2 + g - x/2 - c1,  g' = 2gf + beta [g,f] + c2 f + f c3 + c4,
/// equivalent to y'' = kappa [y,y'] + 2y^3 + xy + b1 y + y b2 + a with
/// kappa = -1 - beta. Entries may be symbolic.
struct P2Target {
  P2Id id = P2Id::P2_0;
  Rational beta;
  std::array<MatPoly, 4> c;
  /// For P2_2: the matrices a, b of the side condition [a,b] = -2b.
  std::optional<std::pair<MatPoly, MatPoly>> ab;
};

/// Right-hand sides of the P2 system at symbolic f, g and scalar x.
std::pair<MatPoly, MatPoly> p2_rhs(const P2Target& t, const MatPoly& f, const MatPoly& g, const PolyQ& x);

enum class DegenerationId { Scalar, P4_0, P4_1, P4_2 };
std::string degeneration_name(DegenerationId id);
/// "scalar", "P4_0", "P4_1", "P4_2". Throws ConfigError.
DegenerationId parse_degeneration(const std::string& s);

struct DegenerationCase {
  DegenerationId id;
  SystemSpec system;  // coefficients polynomial in eps and symbolic matrices
  P2Target target;
};

/// Source systems with the scalings of the limit:
///   Scalar: n = 1, c5 = 2 theta, target f' = -f^2 + g - x/2, g' = 2fg + theta.
///   P4_0: b1 = b2 = 2 eps B, c1 = c2 = -2 eps B, b5 = gamma1, c5 = gamma2.
///   P4_2: b1 = -3h2 + h1, b2 = -h1, b3 = h2, b5 = h4, c1 = h1, c2 = 3h2 - h1,
///         c3 = h3, c4 = -3h2, c5 = 2h4 + h3 h2/2 + gamma, with
///         h1 = h3 = 3h2, h2 = -4/3 eps B, h4 = A - gamma/2.
///   P4_1: b1 = -h1, b2 = h1 + 2h2, b3 = -h2, b5 = h3 + gamma, c1 = -h1 - 2h2,
///         c2 = h1, c4 = h2, c5 = h3, with h1 = 0, h3 = 2A, h2 = eps^e H.
/// `h2_exponent` is e (P4_1 only; negative values make the limit diverge).
DegenerationCase degeneration_case(DegenerationId id, int n, int h2_exponent = 4);

/// Substitutes z = eps^-3/4 - eps x, u = -eps^-3/4 - eps^-1 f, v = -2 eps g
/// and shifts b5 by -eps^-6/16. Returns (f', g') before the limit.
std::pair<MatPoly, MatPoly> transformed_system(const SystemSpec& sys, const MatPoly& f, const MatPoly& g,
                                               const PolyQ& x);

struct DegenerationResult {
  std::string name;
  P2Id target = P2Id::P2_0;
  Rational kappa;
  MatPoly f_limit, g_limit;    // limits of the transformed right-hand sides
  MatPoly f_target, g_target;  // target right-hand sides
  bool match = false;
  /// P4_2: the family relations [h4, h2 - h3] = -2(h2 - h3) and
  /// [h4, 2h1 - 5h2] = -2h2 become multiples of [A,B] + 2B.
  std::optional<bool> constraint_maps;
};

/// Throws DivergentLimit if negative powers of eps survive.
DegenerationResult degenerate_to_p2(DegenerationId id, int n, int h2_exponent = 4);

}  // namespace kov
