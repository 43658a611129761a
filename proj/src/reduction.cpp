#include "kov/reduction.hpp"

#include "kov/errors.hpp"

namespace kov {

namespace {

Rational jet_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-20, 20), den(1, 7);
  return make_rational(num(rng), den(rng));
}

QMatrix scalar(int n, const Rational& c) { return c * QMatrix::identity(n); }

QMatrix constant(const MatPoly& m, const char* what) {
  if (!m.is_constant()) throw ConfigError(std::string(what) + " must be a constant matrix");
  return m.to_qmatrix();
}

struct Coeffs {
  std::array<QMatrix, 5> b, c;
};

Coeffs constants(const SystemSpec& sys) {
  static const char* names[] = {"b1", "b2", "b3", "b4", "b5", "c1", "c2", "c3", "c4", "c5"};
  Coeffs out;
  for (std::size_t i = 0; i < 5; ++i) {
    out.b[i] = constant(sys.b[i], names[i]);
    out.c[i] = constant(sys.c[i], names[5 + i]);
  }
  return out;
}

}  // namespace

QMatrix random_jet_matrix(std::mt19937_64& rng, int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = jet_rational(rng);
  return m;
}

QMatrix random_invertible(std::mt19937_64& rng, int n, int& resampled) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    QMatrix m = random_jet_matrix(rng, n);
    if (m.determinant() != 0) return m;
    ++resampled;
  }
  throw SingularSample("no invertible sample after 1000 draws");
}

ReductionCoefficients reduction_coefficients(const SystemSpec& sys) {
  const Coeffs k = constants(sys);
  const int n = sys.n;
  ReductionCoefficients r;
  r.kappa = sys.beta + make_rational(3, 2);
  r.k1 = k.b[4];
  r.k2 = Rational(-1) * k.b[4];
  r.k3 = Rational(2) * k.c[2];
  r.k4 = scalar(n, -2) - r.kappa * k.b[4];
  r.k5 = Rational(2) * k.c[4] + (sys.beta + make_rational(1, 2)) * k.b[4];
  return r;
}

ReductionReport reduce_second_order_check(const SystemSpec& sys, int trials, std::mt19937_64& rng) {
  if (sys.homogeneous) throw ConfigError("reduction needs the inhomogeneous system");
  if (sys.alpha != 0) throw ConfigError("reduction needs alpha = 0");
  if (!sys.b[2].is_zero() || !sys.b[3].is_zero()) throw ConfigError("reduction needs b3 = b4 = 0");
  const Coeffs k = constants(sys);
  const int n = sys.n;
  const Rational beta = sys.beta;
  ReductionReport rep;
  rep.coeffs = reduction_coefficients(sys);
  const auto& rc = rep.coeffs;
  const auto& [b1, b2, b3, b4, b5] = k.b;
  const auto& [c1, c2, c3, c4, c5] = k.c;
  (void)b3;
  (void)b4;
  for (int t = 0; t < trials; ++t) {
    const QMatrix u = random_invertible(rng, n, rep.jets.resampled);
    const QMatrix up = random_jet_matrix(rng, n);
    const Rational z = jet_rational(rng);
    const QMatrix ui = u.inverse();
    // From the first equation: 2uv = u' + u^2 + 2zu - b1 u - u b2 - b5.
    const QMatrix v = make_rational(1, 2) * (ui * (up + u * u + Rational(2) * z * u - b1 * u - u * b2 - b5));
    const QMatrix vp = Rational(-1) * (v * v) + Rational(2) * (v * u) + beta * commutator(v, u) +
                       Rational(2) * z * v + c1 * v + v * c2 + c3 * u + u * c4 + c5;
    const QMatrix upp = Rational(-1) * (up * u + u * up) + Rational(2) * (up * v + u * vp) -
                        Rational(2) * u - Rational(2) * z * up + b1 * up + up * b2;
    const QMatrix rhs = make_rational(1, 2) * ((up + rc.k1) * ui * (up + rc.k2)) +
                        make_rational(3, 2) * (u * u * u) + rc.kappa * commutator(up, u) +
                        Rational(4) * z * (u * u) + u * rc.k3 * u + rc.k4 * u + u * rc.k5 +
                        Rational(2) * z * z * u;
    ++rep.jets.trials;
    if (upp == rhs) ++rep.jets.passed;
  }
  return rep;
}

ScalarReductionIdentity scalar_reduction_identity() {
  const PolyQ u = PolyQ::variable("u"), up = PolyQ::variable("up"), z = PolyQ::variable("z");
  const PolyQ c1 = PolyQ::variable("c1"), c2 = PolyQ::variable("c2");
  const PolyQ two(2);
  // V = 2uv stays polynomial; every term below is multiplied through by u.
  const PolyQ V = up + u * u + two * z * u - c1;
  // u^2 v' = -V^2/4 + u^2 V + z u V + c2 u^2
  const PolyQ u2vp = make_rational(-1, 4) * (V * V) + u * u * V + z * u * V + c2 * u * u;
  // u u'' = -2u^2 u' + u' V + 2 u^2 v' - 2u^2 - 2z u u'
  const PolyQ lhs = Rational(-2) * (u * u * up) + up * V + two * u2vp - two * u * u - two * z * u * up;

  // Scalar system coefficients in the matrix notation: b5 = c1, c5 = c2, beta irrelevant.
  const Rational beta = 0;
  const Rational kappa = beta + make_rational(3, 2);
  const PolyQ k1 = c1, k2 = -c1, k4 = PolyQ(-2) - kappa * c1, k5 = two * c2 + (beta + make_rational(1, 2)) * c1;
  const PolyQ p4mat = make_rational(1, 2) * ((up + k1) * (up + k2)) + make_rational(3, 2) * u.pow(4) +
                      PolyQ(4) * z * u.pow(3) + k4 * u * u + u * u * k5 + two * z * z * u * u;
  const PolyQ gamma = PolyQ(1) + make_rational(1, 2) * c1 - c2;
  const PolyQ delta = make_rational(-1, 2) * (c1 * c1);
  const PolyQ scalar_p4 = make_rational(1, 2) * (up * up) + make_rational(3, 2) * u.pow(4) + PolyQ(4) * z * u.pow(3) +
                          two * (z * z - gamma) * u * u + delta;
  return {lhs == p4mat, lhs == scalar_p4};
}

P2Equation p2_system_to_equation(const Rational& beta, const std::array<QMatrix, 4>& c) {
  const int n = c[0].rows();
  P2Equation e;
  e.kappa = Rational(-1) - beta;
  e.b1 = c[1] + (Rational(2) + beta) * c[0];
  e.b2 = c[2] - beta * c[0];
  e.a = c[3] - scalar(n, make_rational(1, 2));
  return e;
}

JetReport p2_equation_check(const Rational& beta, const std::array<QMatrix, 4>& c, int trials,
                            std::mt19937_64& rng) {
  const int n = c[0].rows();
  const P2Equation e = p2_system_to_equation(beta, c);
  JetReport rep;
  for (int t = 0; t < trials; ++t) {
    const QMatrix f = random_jet_matrix(rng, n), fp = random_jet_matrix(rng, n);
    const Rational x = jet_rational(rng);
    const QMatrix g = fp + f * f + scalar(n, make_rational(1, 2) * x) + c[0];
    const QMatrix gp = Rational(2) * (g * f) + beta * commutator(g, f) + c[1] * f + f * c[2] + c[3];
    const QMatrix fpp = Rational(-1) * (fp * f + f * fp) + gp - scalar(n, make_rational(1, 2));
    const QMatrix rhs = e.kappa * commutator(f, fp) + Rational(2) * (f * f * f) + x * f + e.b1 * f + f * e.b2 + e.a;
    ++rep.trials;
    if (fpp == rhs) ++rep.passed;
  }
  return rep;
}

JetReport p34_check(const QMatrix& a, int trials, std::mt19937_64& rng, bool perturb) {
  const int n = a.rows();
  JetReport rep;
  for (int t = 0; t < trials; ++t) {
    const QMatrix w = random_invertible(rng, n, rep.resampled);
    const QMatrix wp = random_jet_matrix(rng, n);
    const Rational x = jet_rational(rng);
    const QMatrix wi = w.inverse();
    const QMatrix f = make_rational(1, 2) * ((wp - a) * wi);
    const QMatrix fp = Rational(-1) * (f * f) + w - scalar(n, make_rational(1, 2) * x);
    const QMatrix wpp = Rational(2) * (fp * w + f * wp);
    const QMatrix rhs = make_rational(1, 2) * ((wp - a) * wi * (wp + a)) +
                        Rational(perturb ? 3 : 2) * (w * w) - x * w;
    ++rep.trials;
    if (wpp == rhs) ++rep.passed;
  }
  return rep;
}

}  // namespace kov
