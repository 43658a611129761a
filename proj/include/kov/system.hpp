#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <utility>

#include "kov/matrix.hpp"
#include "kov/rational.hpp"

namespace kov {

/// u' = -u^2 + 2uv + alpha[u,v] - 2zu + b1 u + u b2 + b3 v + v b4 + b5
/// v' = -v^2 + 2vu + beta[v,u]  + 2zv + c1 v + v c2 + c3 u + u c4 + c5
/// With `homogeneous` set, the z terms and all b, c are dropped.
struct SystemSpec {
  int n = 1;
  Rational alpha;
  Rational beta;
  std::array<MatPoly, 5> b;
  std::array<MatPoly, 5> c;
  bool homogeneous = true;

  static SystemSpec make_homogeneous(int n, const Rational& alpha, const Rational& beta);
  /// Inhomogeneous system with all b, c zero (still carries the z terms).
  static SystemSpec make_tail(int n, const Rational& alpha, const Rational& beta);
};

/// Right-hand sides (u', v') evaluated at symbolic u, v and scalar z.
std::pair<MatPoly, MatPoly> system_rhs(const SystemSpec& sys, const MatPoly& u, const MatPoly& v, const PolyQ& z);

struct ResidueShape {
  bool commuting = true;
  int m = 0;  // size of the commutator block; 0 when commuting
  std::array<int, 4> k{};

  int size() const { return 2 * m + k[0] + k[1] + k[2] + k[3]; }
  static ResidueShape diag(int k1, int k2, int k3, int k4) { return {true, 0, {k1, k2, k3, k4}}; }
  static ResidueShape noncommuting(int m, int k1, int k2, int k3, int k4) {
    return {false, m, {k1, k2, k3, k4}};
  }
  /// Shape of maximal type 1, 2 or 3: k_t = 1, k4 = n - 1.
  static ResidueShape of_type(int type, int n);
  std::string to_string() const;
};

struct ResiduePair {
  QMatrix p;
  QMatrix q;
  ResidueShape shape;
  std::optional<int> type_tag;
};

struct MuValues {
  Rational mu1, mu2, mu3, mu4;
  Rational delta;
};

Rational delta(const Rational& alpha, const Rational& beta);
/// Throws DeltaZero.
MuValues mu_values(const Rational& alpha, const Rational& beta);
bool noncommuting_exists(const Rational& alpha, const Rational& beta);

/// Integer points where non-commuting residues exist (twelve of them).
const std::vector<std::pair<int, int>>& sigma0_points();
/// sigma0_points() plus (-1,-1).
std::vector<std::pair<int, int>> sigma_points();

/// Throws BadPartition.
ResiduePair diag_residues(int n, const ResidueShape& shape);
/// Throws NotInSigma0, BadPartition.
ResiduePair noncommuting_residues(const Rational& alpha, const Rational& beta, int n,
                                  const ResidueShape& shape);

/// Left-hand sides -p^2 + 2pq + alpha[p,q] + p and -q^2 + 2qp + beta[q,p] + q.
std::pair<QMatrix, QMatrix> residue_defect(const QMatrix& p, const QMatrix& q,
                                           const Rational& alpha, const Rational& beta);
bool check_residue_equations(const ResiduePair& pair, const Rational& alpha, const Rational& beta);

using RationalPoint = std::pair<Rational, Rational>;
std::set<RationalPoint> dihedral_orbit(const Rational& alpha, const Rational& beta);
RationalPoint dihedral_swap(const RationalPoint& x);
RationalPoint dihedral_reflect(const RationalPoint& x);
RationalPoint dihedral_shear(const RationalPoint& x);

/// n^2 minus the dimension of the joint centralizer of p and q.
int orbit_dimension(const ResiduePair& pair);

/// S^-1 p S, S^-1 q S; keeps the shape.
ResiduePair conjugate(const ResiduePair& pair, const QMatrix& s);

}  // namespace kov
