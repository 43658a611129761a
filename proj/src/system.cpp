#include "kov/system.hpp"

#include <algorithm>
#include <vector>

#include "kov/errors.hpp"
#include "kov/linear_solve.hpp"

namespace kov {

SystemSpec SystemSpec::make_homogeneous(int n, const Rational& alpha, const Rational& beta) {
  SystemSpec s;
  s.n = n;
  s.alpha = alpha;
  s.beta = beta;
  for (auto& m : s.b) m = MatPoly(n, n);
  for (auto& m : s.c) m = MatPoly(n, n);
  s.homogeneous = true;
  return s;
}

SystemSpec SystemSpec::make_tail(int n, const Rational& alpha, const Rational& beta) {
  SystemSpec s = make_homogeneous(n, alpha, beta);
  s.homogeneous = false;
  return s;
}

std::pair<MatPoly, MatPoly> system_rhs(const SystemSpec& sys, const MatPoly& u, const MatPoly& v, const PolyQ& z) {
  const MatPoly uv = u * v, vu = v * u;
  MatPoly du = -(u * u) + Rational(2) * uv + sys.alpha * (uv - vu);
  MatPoly dv = -(v * v) + Rational(2) * vu + sys.beta * (vu - uv);
  if (sys.homogeneous) return {du, dv};
  const auto& b = sys.b;
  const auto& c = sys.c;
  du += PolyQ(-2) * z * u + b[0] * u + u * b[1] + b[2] * v + v * b[3] + b[4];
  dv += PolyQ(2) * z * v + c[0] * v + v * c[1] + c[2] * u + u * c[3] + c[4];
  return {du, dv};
}

ResidueShape ResidueShape::of_type(int type, int n) {
  if (type < 1 || type > 3 || n < 1) throw BadPartition("type must be 1, 2 or 3 and n >= 1");
  ResidueShape s;
  s.k[static_cast<std::size_t>(type - 1)] = 1;
  s.k[3] = n - 1;
  return s;
}

std::string ResidueShape::to_string() const {
  std::string out = commuting ? "commuting(" : "noncommuting(m=" + std::to_string(m) + ",";
  for (std::size_t i = 0; i < 4; ++i) {
    if (i) out += ",";
    out += std::to_string(k[i]);
  }
  return out + ")";
}

Rational delta(const Rational& a, const Rational& b) {
  return a * a + b * b + a * b + 3 * (a + b + 1);
}

MuValues mu_values(const Rational& a, const Rational& b) {
  MuValues mu;
  mu.delta = delta(a, b);
  if (mu.delta == 0) throw DeltaZero("Delta(alpha, beta) = 0");
  const Rational two_d = 2 * mu.delta;
  mu.mu1 = -a * (3 + a + 2 * b) / two_d;
  mu.mu2 = -(2 + a) * (3 + a + 2 * b) / two_d;
  mu.mu3 = -b * (3 + b + 2 * a) / two_d;
  mu.mu4 = -(2 + b) * (3 + b + 2 * a) / two_d;
  return mu;
}

bool noncommuting_exists(const Rational& a, const Rational& b) {
  if (delta(a, b) == 0) return false;
  const MuValues m = mu_values(a, b);
  auto rel = [](const Rational& x, const Rational& y) { return -x * x + 2 * x * y + x == 0; };
  return rel(m.mu1, m.mu3) && rel(m.mu3, m.mu1) && rel(m.mu2, m.mu4) && rel(m.mu4, m.mu2);
}

namespace {

struct XY {
  int alpha, beta, x, y;
};

// Normalized off-diagonal entries of the 2x2 non-commuting residues.
const std::vector<XY>& xy_table() {
  static const std::vector<XY> table{
      {1, -2, -1, 0},  {0, 0, -1, 0},  {0, -1, 0, 1},  {0, -2, -1, 0},
      {0, -3, 0, -1},  {-1, 0, -1, 0}, {-1, -2, 1, 0}, {-2, 1, 0, 1},
      {-2, 0, 1, 0},   {-2, -1, 0, -1}, {-2, -2, 1, 0}, {-3, 0, 1, 0},
  };
  return table;
}

void check_partition(int n, const ResidueShape& s) {
  for (int k : s.k)
    if (k < 0) throw BadPartition("negative block size in " + s.to_string());
  if (s.m < 0 || (s.commuting && s.m != 0) || (!s.commuting && s.m < 1))
    throw BadPartition("bad commutator block size in " + s.to_string());
  if (s.size() != n)
    throw BadPartition("shape " + s.to_string() + " does not sum to n=" + std::to_string(n));
}

std::optional<int> type_of(const ResidueShape& s, int n) {
  if (!s.commuting) return std::nullopt;
  for (int t = 1; t <= 3; ++t) {
    ResidueShape ref = ResidueShape::of_type(t, n);
    if (ref.k == s.k) return t;
  }
  return std::nullopt;
}

// Fills the diagonal tail of p and q starting at `offset`.
void put_diag_tail(QMatrix& p, QMatrix& q, int offset, const std::array<int, 4>& k) {
  int i = offset;
  for (int r = 0; r < k[0]; ++r, ++i) {
    p(i, i) = -1;
    q(i, i) = -1;
  }
  for (int r = 0; r < k[1]; ++r, ++i) p(i, i) = 1;
  for (int r = 0; r < k[2]; ++r, ++i) q(i, i) = 1;
}

}  // namespace

const std::vector<std::pair<int, int>>& sigma0_points() {
  static const std::vector<std::pair<int, int>> pts = [] {
    std::vector<std::pair<int, int>> v;
    for (const auto& e : xy_table()) v.emplace_back(e.alpha, e.beta);
    std::sort(v.begin(), v.end());
    return v;
  }();
  return pts;
}

std::vector<std::pair<int, int>> sigma_points() {
  auto v = sigma0_points();
  v.emplace_back(-1, -1);
  std::sort(v.begin(), v.end());
  return v;
}

ResiduePair diag_residues(int n, const ResidueShape& shape) {
  if (!shape.commuting) throw BadPartition("diag_residues needs a commuting shape");
  check_partition(n, shape);
  ResiduePair out{QMatrix(n, n), QMatrix(n, n), shape, type_of(shape, n)};
  put_diag_tail(out.p, out.q, 0, shape.k);
  return out;
}

ResiduePair noncommuting_residues(const Rational& alpha, const Rational& beta, int n,
                                  const ResidueShape& shape) {
  if (shape.commuting) throw BadPartition("noncommuting_residues needs a non-commuting shape");
  const XY* row = nullptr;
  for (const auto& e : xy_table())
    if (alpha == e.alpha && beta == e.beta) row = &e;
  if (!row || !noncommuting_exists(alpha, beta))
    throw NotInSigma0("(" + to_string(alpha) + "," + to_string(beta) + ") is not in Sigma0");
  check_partition(n, shape);
  const MuValues mu = mu_values(alpha, beta);
  const int m = shape.m;
  ResiduePair out{QMatrix(n, n), QMatrix(n, n), shape, std::nullopt};
  for (int i = 0; i < m; ++i) {
    out.p(i, i) = mu.mu1;
    out.p(m + i, m + i) = mu.mu2;
    out.p(i, m + i) = row->x;
    out.q(i, i) = mu.mu3;
    out.q(m + i, m + i) = mu.mu4;
    out.q(i, m + i) = row->y;
  }
  put_diag_tail(out.p, out.q, 2 * m, shape.k);
  return out;
}

std::pair<QMatrix, QMatrix> residue_defect(const QMatrix& p, const QMatrix& q,
                                           const Rational& alpha, const Rational& beta) {
  const QMatrix pq = p * q, qp = q * p;
  QMatrix e1 = (Rational(2) * pq) - p * p + alpha * (pq - qp) + p;
  QMatrix e2 = (Rational(2) * qp) - q * q + beta * (qp - pq) + q;
  return {e1, e2};
}

bool check_residue_equations(const ResiduePair& pair, const Rational& alpha, const Rational& beta) {
  auto [e1, e2] = residue_defect(pair.p, pair.q, alpha, beta);
  return e1.is_zero() && e2.is_zero();
}

RationalPoint dihedral_swap(const RationalPoint& x) { return {x.second, x.first}; }
RationalPoint dihedral_reflect(const RationalPoint& x) { return {-x.first - 2, -x.second - 2}; }
RationalPoint dihedral_shear(const RationalPoint& x) { return {x.first, -x.first - x.second - 3}; }

std::set<RationalPoint> dihedral_orbit(const Rational& alpha, const Rational& beta) {
  std::set<RationalPoint> seen{{alpha, beta}};
  std::vector<RationalPoint> todo{{alpha, beta}};
  while (!todo.empty()) {
    RationalPoint x = todo.back();
    todo.pop_back();
    for (auto g : {dihedral_swap, dihedral_reflect, dihedral_shear}) {
      RationalPoint y = g(x);
      if (seen.insert(y).second) todo.push_back(y);
    }
  }
  return seen;
}

int orbit_dimension(const ResiduePair& pair) {
  const int n = pair.p.rows();
  // columns: entries of S; rows: entries of [S,p] then [S,q]
  QMatrix a(2 * n * n, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int col = i * n + j;
      QMatrix s(n, n);
      s(i, j) = 1;
      const QMatrix cp = commutator(s, pair.p), cq = commutator(s, pair.q);
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
          a(r * n + c, col) = cp(r, c);
          a(n * n + r * n + c, col) = cq(r, c);
        }
    }
  return rank(a);
}

ResiduePair conjugate(const ResiduePair& pair, const QMatrix& s) {
  const QMatrix si = s.inverse();
  return {si * pair.p * s, si * pair.q * s, pair.shape, pair.type_tag};
}

}  // namespace kov
