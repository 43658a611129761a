#include "kov/engine.hpp"

#include <algorithm>

#include "kov/errors.hpp"

namespace kov {

namespace {

QMatrix unit(int n, int i, int j) {
  QMatrix e(n, n);
  e(i, j) = 1;
  return e;
}

QMatrix shifted(const QMatrix& l, const Rational& k) {
  QMatrix m = l;
  for (int i = 0; i < m.rows(); ++i) m(i, i) -= k;
  return m;
}

// Upper bound on |eigenvalue|: largest absolute row sum.
Integer spectral_bound(const QMatrix& l) {
  Rational best = 0;
  for (int i = 0; i < l.rows(); ++i) {
    Rational s = 0;
    for (int j = 0; j < l.cols(); ++j) s += abs(l(i, j));
    best = std::max(best, s);
  }
  Integer out = best.get_num() / best.get_den();
  return out + 1;
}

// Y columns are tried as pivots first, so kernel directions land on X
// entries whenever possible.
std::vector<int> y_first_order(int n) {
  std::vector<int> order;
  const int nn = n * n;
  for (int i = 0; i < nn; ++i) order.push_back(nn + i);
  for (int i = 0; i < nn; ++i) order.push_back(i);
  return order;
}

}  // namespace

std::pair<QMatrix, QMatrix> apply_L(const ResiduePair& pr, const Rational& alpha,
                                    const Rational& beta, const QMatrix& x, const QMatrix& y) {
  const QMatrix& p = pr.p;
  const QMatrix& q = pr.q;
  QMatrix a = (p * y + x * q);
  QMatrix b = (q * x + y * p);
  QMatrix l1 = Rational(2) * a - p * x - x * p + alpha * (commutator(p, y) + commutator(x, q));
  QMatrix l2 = Rational(2) * b - q * y - y * q + beta * (commutator(q, x) + commutator(y, p));
  return {l1, l2};
}

LOperator build_L(const ResiduePair& pair, const Rational& alpha, const Rational& beta) {
  const int n = pair.p.rows();
  const int nn = n * n;
  LOperator out{n, QMatrix(2 * nn, 2 * nn)};
  const QMatrix zero(n, n);
  for (int col = 0; col < 2 * nn; ++col) {
    const int idx = col % nn;
    const QMatrix e = unit(n, idx / n, idx % n);
    auto [l1, l2] = col < nn ? apply_L(pair, alpha, beta, e, zero) : apply_L(pair, alpha, beta, zero, e);
    for (int r = 0; r < nn; ++r) {
      out.matrix(r, col) = l1(r / n, r % n);
      out.matrix(nn + r, col) = l2(r / n, r % n);
    }
  }
  return out;
}

std::vector<SpectrumEntry> spectrum_dimensions(const Rational& a, const Rational& b,
                                               const ResidueShape& shape) {
  const int k1 = shape.k[0], k2 = shape.k[1], k3 = shape.k[2], k4 = shape.k[3];
  const int d12 = k1 * k1 + k2 * k2 + k3 * k3;
  const std::vector<std::pair<Rational, int>> raw{
      {-2, d12},
      {2, d12},
      {-1, 2 * (k1 * k2 + k1 * k3 + k2 * k3 + k1 * k4 + k2 * k4 + k3 * k4)},
      {0, 2 * k4 * k4},
      {-a, k3 * k4},
      {-b, k2 * k4},
      {a + 2, k3 * k4},
      {b + 2, k2 * k4},
      {4 + a + 2 * b, k1 * k2},
      {4 + 2 * a + b, k1 * k3},
      {3 + a + b, k1 * k4},
      {-2 - a - 2 * b, k1 * k2},
      {-2 - 2 * a - b, k1 * k3},
      {1 + a - b, k2 * k3},
      {1 - a + b, k2 * k3},
      {-1 - a - b, k1 * k4},
  };
  std::map<Rational, int> merged;
  for (const auto& [lambda, d] : raw)
    if (d > 0) merged[lambda] += d;
  std::vector<SpectrumEntry> out;
  for (const auto& [lambda, d] : merged) out.push_back({lambda, d});
  return out;
}

int spectrum_dim_at(const std::vector<SpectrumEntry>& table, const Rational& k) {
  for (const auto& e : table)
    if (e.lambda == k) return e.dim;
  return 0;
}

std::map<int, int> integer_nullities(const LOperator& l, int kmin, int kmax) {
  std::map<int, int> out;
  for (int k = kmin; k <= kmax; ++k) out[k] = nullity(shifted(l.matrix, k));
  return out;
}

std::map<int, int> integer_multiplicities(const LOperator& l, int kmin, int kmax) {
  std::map<int, int> out;
  for (int k = kmin; k <= kmax; ++k) {
    const QMatrix m = shifted(l.matrix, k);
    QMatrix power = m;
    int prev = nullity(power);
    // nullities of powers increase strictly until they stabilize
    while (prev > 0) {
      power = power * m;
      const int next = nullity(power);
      if (next == prev) break;
      prev = next;
    }
    out[k] = prev;
  }
  return out;
}

std::vector<int> resonances(const LOperator& l) {
  std::vector<int> out;
  const Integer bound = spectral_bound(l.matrix);
  for (long k = 0; k <= bound.get_si(); ++k)
    if (nullity(shifted(l.matrix, Rational(k))) > 0) out.push_back(static_cast<int>(k));
  return out;
}

int default_depth(const LOperator& l) {
  const auto r = resonances(l);
  return (r.empty() ? 0 : r.back()) + 3;
}

MatPoly f_gamma(const Rational& gamma, const std::vector<MatPoly>& xs,
                const std::vector<MatPoly>& ys, int k) {
  const int n = xs.empty() ? 0 : xs.front().rows();
  MatPoly out(n, n);
  if (k < 0) return out;
  const Rational half = make_rational(1, 2);
  for (int l = 0; l <= k; ++l) {
    const MatPoly& xl = xs[static_cast<std::size_t>(l)];
    const MatPoly& xr = xs[static_cast<std::size_t>(k - l)];
    const MatPoly& yr = ys[static_cast<std::size_t>(k - l)];
    const MatPoly xy = xl * yr;
    const MatPoly yx = yr * xl;
    out += half * (xl * xr + xr * xl);
    out -= Rational(2) * xy;
    if (gamma != 0) out -= gamma * (xy - yx);
  }
  return out;
}

std::string basis_label(int n, int index) {
  const int nn = n * n;
  const bool in_y = index >= nn;
  const int r = index % nn;
  return std::string(in_y ? "y_" : "x_") + std::to_string(r / n + 1) + std::to_string(r % n + 1);
}

std::pair<MatPoly, MatPoly> rhs_inhomogeneous(const SystemSpec& sys, const SeriesSolution& s, int k) {
  const int n = s.n;
  MatPoly f1 = k >= 1 ? f_gamma(s.alpha, s.x, s.y, k - 1) : MatPoly(n, n);
  MatPoly f2 = k >= 1 ? f_gamma(s.beta, s.y, s.x, k - 1) : MatPoly(n, n);
  if (sys.homogeneous) return {f1, f2};

  const MatPoly p(s.residues.p), q(s.residues.q);
  const MatPoly zero(n, n);
  const MatPoly& x1 = k == 0 ? p : s.x[static_cast<std::size_t>(k - 1)];
  const MatPoly& y1 = k == 0 ? q : s.y[static_cast<std::size_t>(k - 1)];
  const MatPoly& x2 = k == 0 ? zero : k == 1 ? p : s.x[static_cast<std::size_t>(k - 2)];
  const MatPoly& y2 = k == 0 ? zero : k == 1 ? q : s.y[static_cast<std::size_t>(k - 2)];
  const PolyQ two_z0 = PolyQ::variable(s.z0) * Rational(2);
  const auto& b = sys.b;
  const auto& c = sys.c;

  f1 += two_z0 * x1 + Rational(2) * x2;
  f1 -= b[0] * x1 + x1 * b[1] + b[2] * y1 + y1 * b[3];
  f2 -= two_z0 * y1 + Rational(2) * y2;
  f2 -= c[0] * y1 + y1 * c[1] + c[2] * x1 + x1 * c[3];
  if (k == 1) {
    f1 -= b[4];
    f2 -= c[4];
  }
  return {f1, f2};
}

SeriesSolution expand_series(const SystemSpec& sys, const ResiduePair& pair, int depth) {
  const int n = sys.n;
  if (pair.p.rows() != n || pair.q.rows() != n)
    throw ResidueMismatch("residue size does not match the system");
  if (!check_residue_equations(pair, sys.alpha, sys.beta))
    throw ResidueMismatch("residues do not solve the residue equations at (" +
                          to_string(sys.alpha) + "," + to_string(sys.beta) + ")");

  SeriesSolution s;
  s.n = n;
  s.alpha = sys.alpha;
  s.beta = sys.beta;
  s.z0 = intern("z0");
  s.residues = pair;
  const LOperator l = build_L(pair, sys.alpha, sys.beta);
  s.depth = depth < 0 ? default_depth(l) : depth;

  const int nn = n * n;
  const std::vector<int> order = y_first_order(n);
  for (int k = 0; k <= s.depth; ++k) {
    auto [f1, f2] = rhs_inhomogeneous(sys, s, k);
    std::vector<PolyQ> rhs;
    rhs.reserve(static_cast<std::size_t>(2 * nn));
    for (const auto& e : f1.entries()) rhs.push_back(e);
    for (const auto& e : f2.entries()) rhs.push_back(e);

    const AffineSolveResult res = solve_affine_parametric(shifted(l.matrix, k), rhs, order);
    if (!res.solvable) {
      Obstruction ob{k, {}};
      for (int r = 0; r < 2 * nn; ++r)
        if (!res.obstruction[static_cast<std::size_t>(r)].is_zero())
          ob.rows.emplace_back(basis_label(n, r), res.obstruction[static_cast<std::size_t>(r)]);
      s.obstructions.push_back(std::move(ob));
    }

    std::vector<PolyQ> sol = res.particular;
    if (!res.free_cols.empty()) s.resonance_orders.push_back(k);
    for (std::size_t t = 0; t < res.free_cols.size(); ++t) {
      const int f = res.free_cols[t];
      FreeParam fp;
      fp.k = k;
      fp.in_y = f >= nn;
      fp.i = (f % nn) / n;
      fp.j = (f % nn) % n;
      fp.param = intern(std::string(fp.in_y ? "y" : "x") + std::to_string(k) + "_" +
                        std::to_string(fp.i + 1) + std::to_string(fp.j + 1));
      const PolyQ v = PolyQ::variable(fp.param);
      const QVector& kv = res.kernel_basis[t];
      for (int r = 0; r < 2 * nn; ++r)
        if (kv[static_cast<std::size_t>(r)] != 0) sol[static_cast<std::size_t>(r)] += kv[static_cast<std::size_t>(r)] * v;
      s.free_params.push_back(fp);
    }

    MatPoly xk(n, n), yk(n, n);
    for (int r = 0; r < nn; ++r) {
      xk(r / n, r % n) = std::move(sol[static_cast<std::size_t>(r)]);
      yk(r / n, r % n) = std::move(sol[static_cast<std::size_t>(nn + r)]);
    }
    s.x.push_back(std::move(xk));
    s.y.push_back(std::move(yk));
  }
  return s;
}

MaximalityVerdict count_parameters(const ResiduePair& pair, const Rational& alpha, const Rational& beta) {
  const int n = pair.p.rows();
  const LOperator l = build_L(pair, alpha, beta);
  MaximalityVerdict v;
  for (int k : resonances(l)) v.param_count_in_coeffs += nullity(shifted(l.matrix, k));
  v.orbit_dim = orbit_dimension(pair);
  v.total = v.param_count_in_coeffs + v.orbit_dim + 1;
  v.target = 2 * n * n;
  v.maximal = v.total == v.target;
  return v;
}

MaximalityVerdict maximality(const SeriesSolution& s) {
  MaximalityVerdict v;
  v.param_count_in_coeffs = static_cast<int>(s.free_params.size());
  v.orbit_dim = orbit_dimension(s.residues);
  v.total = v.param_count_in_coeffs + v.orbit_dim + 1;
  v.target = 2 * s.n * s.n;
  v.obstruction_free = s.obstructions.empty();
  v.maximal = v.obstruction_free && v.total == v.target;
  return v;
}

namespace {

// Truncated Laurent series sum_{e >= -1} a[e+1] t^e.
struct Laurent {
  std::vector<MatPoly> a;
  const MatPoly& at(int e, const MatPoly& zero) const {
    const int idx = e + 1;
    return idx >= 0 && idx < static_cast<int>(a.size()) ? a[static_cast<std::size_t>(idx)] : zero;
  }
};

// Coefficient of t^e in f*g.
MatPoly product_at(const Laurent& f, const Laurent& g, int e, const MatPoly& zero) {
  MatPoly out = zero;
  for (int a = -1; a <= e + 1; ++a) {
    const MatPoly& fa = f.at(a, zero);
    const MatPoly& gb = g.at(e - a, zero);
    if (fa.is_zero() || gb.is_zero()) continue;
    out += fa * gb;
  }
  return out;
}

}  // namespace

bool residual_check(const SystemSpec& sys, const SeriesSolution& s) {
  const int n = s.n;
  const MatPoly zero(n, n);
  Laurent u{{MatPoly(s.residues.p)}}, v{{MatPoly(s.residues.q)}};
  for (const auto& m : s.x) u.a.push_back(m);
  for (const auto& m : s.y) v.a.push_back(m);
  const PolyQ z0 = PolyQ::variable(s.z0);
  const int top = s.depth - 1;

  for (int e = -2; e <= top; ++e) {
    const MatPoly uu = product_at(u, u, e, zero), uv = product_at(u, v, e, zero);
    const MatPoly vu = product_at(v, u, e, zero), vv = product_at(v, v, e, zero);
    MatPoly r1 = Rational(e + 1) * u.at(e + 1, zero) + uu - Rational(2) * uv - s.alpha * (uv - vu);
    MatPoly r2 = Rational(e + 1) * v.at(e + 1, zero) + vv - Rational(2) * vu - s.beta * (vu - uv);
    if (!sys.homogeneous) {
      // z = z0 + t
      const MatPoly& ue = u.at(e, zero);
      const MatPoly& ve = v.at(e, zero);
      const MatPoly& ue1 = u.at(e - 1, zero);
      const MatPoly& ve1 = v.at(e - 1, zero);
      const auto& b = sys.b;
      const auto& c = sys.c;
      r1 += Rational(2) * (z0 * ue + ue1);
      r1 -= b[0] * ue + ue * b[1] + b[2] * ve + ve * b[3];
      r2 -= Rational(2) * (z0 * ve + ve1);
      r2 -= c[0] * ve + ve * c[1] + c[2] * ue + ue * c[3];
      if (e == 0) {
        r1 -= b[4];
        r2 -= c[4];
      }
    }
    if (!r1.is_zero() || !r2.is_zero()) return false;
  }
  return true;
}

}  // namespace kov
