#pragma once

#include <map>
#include <string>
#include <vector>

#include "kov/linear_solve.hpp"
#include "kov/system.hpp"

namespace kov {

/// Matrix of the linearization (X,Y) -> L(X,Y) around the residues.
/// Basis: X_ij at index i*n + j, Y_ij at n^2 + i*n + j.
struct LOperator {
  int n = 0;
  QMatrix matrix;
};

LOperator build_L(const ResiduePair& pair, const Rational& alpha, const Rational& beta);
/// Direct evaluation of the rule, used to cross-check build_L.
std::pair<QMatrix, QMatrix> apply_L(const ResiduePair& pair, const Rational& alpha,
                                    const Rational& beta, const QMatrix& x, const QMatrix& y);

struct SpectrumEntry {
  Rational lambda;
  int dim = 0;
};

/// Closed-form eigenvalues with eigenspace dimensions for commuting
/// residues, equal eigenvalues merged, zero dimensions dropped, sorted.
std::vector<SpectrumEntry> spectrum_dimensions(const Rational& alpha, const Rational& beta,
                                               const ResidueShape& shape);
/// Formula dimension at an integer point k (0 when k is not listed).
int spectrum_dim_at(const std::vector<SpectrumEntry>& table, const Rational& k);

/// k -> nullity(L - k I) for kmin <= k <= kmax.
std::map<int, int> integer_nullities(const LOperator& l, int kmin, int kmax);
/// k -> nullity((L - k I)^(2n^2)), the algebraic multiplicity of k.
std::map<int, int> integer_multiplicities(const LOperator& l, int kmin, int kmax);

/// Nonnegative integers k with nullity(L - kI) > 0.
std::vector<int> resonances(const LOperator& l);

/// sum_{l=0..k} 1/2 (X_l X_{k-l} + X_{k-l} X_l) - 2 X_l Y_{k-l} - gamma [X_l, Y_{k-l}]
MatPoly f_gamma(const Rational& gamma, const std::vector<MatPoly>& xs,
                const std::vector<MatPoly>& ys, int k);

struct FreeParam {
  int k = 0;
  bool in_y = false;
  int i = 0;  // zero-based entry position
  int j = 0;
  Param param;
  std::string name() const { return label(param); }
};

struct Obstruction {
  int k = 0;
  /// Nonzero rows of the obstruction vector, as (row label, polynomial).
  std::vector<std::pair<std::string, PolyQ>> rows;
};

struct SeriesSolution {
  int n = 0;
  Rational alpha, beta;
  Param z0;
  ResiduePair residues;
  int depth = 0;
  std::vector<MatPoly> x;  // x_0 .. x_N
  std::vector<MatPoly> y;
  std::vector<FreeParam> free_params;
  std::vector<Obstruction> obstructions;
  std::vector<int> resonance_orders;  // 0..N with nonzero nullity
};

/// Right-hand sides at order k given x_0..x_{k-1}, y_0..y_{k-1}.
std::pair<MatPoly, MatPoly> rhs_inhomogeneous(const SystemSpec& sys, const SeriesSolution& s, int k);

/// Row label "x_ij" / "y_ij" (1-based) for a basis index.
std::string basis_label(int n, int index);

/// Largest resonance + 3.
int default_depth(const LOperator& l);

/// Depth -1 means default_depth. Throws ResidueMismatch.
SeriesSolution expand_series(const SystemSpec& sys, const ResiduePair& pair, int depth = -1);

struct MaximalityVerdict {
  int param_count_in_coeffs = 0;
  int orbit_dim = 0;
  int total = 0;  // coefficients + orbit + 1 for z0
  int target = 0;
  bool obstruction_free = true;
  bool maximal = false;
};

MaximalityVerdict maximality(const SeriesSolution& s);

/// Parameter count without expanding: all resonance nullities + orbit + 1.
MaximalityVerdict count_parameters(const ResiduePair& pair, const Rational& alpha, const Rational& beta);

/// Substitutes the truncated series into the system by direct Laurent
/// multiplication and checks every coefficient the truncation determines
/// (orders t^-2 .. t^(N-1)).
bool residual_check(const SystemSpec& sys, const SeriesSolution& s);

}  // namespace kov
