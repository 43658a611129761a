#pragma once

#include <array>
#include <random>

#include "kov/system.hpp"

namespace kov {

/// Coefficients of the second-order equation for u obtained by eliminating v:
///   u'' = 1/2 (u' + k1) u^-1 (u' + k2) + 3/2 u^3 + kappa [u',u] + 4 z u^2
///         + u k3 u + k4 u + u k5 + 2 z^2 u
struct ReductionCoefficients {
  Rational kappa;
  QMatrix k1, k2, k3, k4, k5;
};

/// kappa = beta + 3/2, k1 = -k2 = b5, k3 = 2 c3, k4 = -2 - kappa b5,
/// k5 = 2 c5 + (beta + 1/2) b5. Requires constant coefficients.
ReductionCoefficients reduction_coefficients(const SystemSpec& sys);

struct JetReport {
  int trials = 0;
  int passed = 0;
  int resampled = 0;  // singular samples drawn and discarded
  bool ok() const { return trials > 0 && passed == trials; }
};

struct ReductionReport {
  ReductionCoefficients coeffs;
  JetReport jets;
};

/// Checks the reduction at random rational jets (u, u', z). Requires
/// alpha = 0, b3 = b4 = 0 and constant coefficients; throws ConfigError
/// otherwise. Samples with |num| <= 20, den <= 7.
ReductionReport reduce_second_order_check(const SystemSpec& sys, int trials, std::mt19937_64& rng);

/// n = 1 as a polynomial identity in u, u', z, c1, c2 for the scalar system
///   u' = -u^2 + 2uv - 2zu + c1,  v' = -v^2 + 2uv + 2zv + c2.
/// `vs_p4mat`: u u'' equals u times the reduced right-hand side;
/// `vs_scalar`: it equals the scalar P4 form with gamma = 1 + c1/2 - c2,
/// delta = -c1^2/2.
struct ScalarReductionIdentity {
  bool vs_p4mat = false;
  bool vs_scalar = false;
};
ScalarReductionIdentity scalar_reduction_identity();

/// f' = -f^2 + g - x/2 - c1,  g' = 2gf + beta [g,f] + c2 f + f c3 + c4
/// is equivalent to y'' = kappa [y,y'] + 2y^3 + xy + b1 y + y b2 + a.
struct P2Equation {
  Rational kappa;
  QMatrix b1, b2, a;
};
P2Equation p2_system_to_equation(const Rational& beta, const std::array<QMatrix, 4>& c);
/// Jet check of the map above (random f, f', x).
JetReport p2_equation_check(const Rational& beta, const std::array<QMatrix, 4>& c, int trials,
                            std::mt19937_64& rng);

/// For f' = -f^2 + g - x/2, g' = 2fg + a, checks that w = g satisfies
///   w'' = 1/2 (w' - a) w^-1 (w' + a) + 2 w^2 - x w
/// at random jets (w, w', x). `perturb` replaces 2 w^2 by 3 w^2.
JetReport p34_check(const QMatrix& a, int trials, std::mt19937_64& rng, bool perturb = false);

/// Random rational matrix with |num| <= 20, den <= 7.
QMatrix random_jet_matrix(std::mt19937_64& rng, int n);
/// Same, resampled until invertible; counts discarded draws. Throws
/// SingularSample after many consecutive failures.
QMatrix random_invertible(std::mt19937_64& rng, int n, int& resampled);

}  // namespace kov
