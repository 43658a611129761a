#pragma once

#include <random>
#include <set>
#include <string>
#include <vector>

#include "kov/engine.hpp"

namespace kov {

struct CandidateReport {
  std::string name;
  ResiduePair residues;
  bool expanded = false;  // false when the parameter count already rules it out
  MaximalityVerdict verdict;
  std::vector<Obstruction> obstructions;
  bool residual_ok = false;
};

struct ClassificationResult {
  RationalPoint point;
  std::set<int> maximal_types;
  bool noncommuting_maximal = false;
  int total_maximal = 0;
  std::vector<CandidateReport> candidates;
};

/// Runs every candidate: expands only when the parameter count can reach
/// 2n^2, to the largest resonance, and checks the residual.
CandidateReport run_candidate(const SystemSpec& sys, std::string name, const ResiduePair& pair,
                              int depth = -1);

/// Types 1-3 and, where non-commuting residues exist, every m = 1 shape.
ClassificationResult classify_point(const Rational& alpha, const Rational& beta, int n);

/// All integer points of [lo, hi]^2, ordered by (alpha, beta). `jobs` > 1
/// classifies points on worker threads.
std::vector<ClassificationResult> scan_sigma(int lo, int hi, int n, int jobs = 1);

enum class FamilyId { P4_0, P4_1, P4_2 };

std::string family_name(FamilyId id);
/// Accepts "P4_0", "P4_1", "P4_2". Throws ConfigError.
FamilyId parse_family(const std::string& s);
RationalPoint family_point(FamilyId id);

/// Instantiation of one of the three deformed systems:
///   P4_0 at (-1,-1): b1 = h, c2 = -h, b5 = gamma1 I, c5 = gamma2 I
///   P4_1 at (0,-2):  b5 = h, c5 = h + gamma I
///   P4_2 at (0,-3):  b5 = h2, c3 = h1, c5 = 2 h2 + gamma I, [h2,h1] = -2 h1
struct DeformationFamily {
  FamilyId id = FamilyId::P4_0;
  int n = 2;
  QMatrix h, h1, h2;
  Rational gamma, gamma1, gamma2;
};

/// Random rational h and gammas; P4_2 uses h2 = diag(1,-1,0,..), h1 = E21.
DeformationFamily default_family(FamilyId id, int n, std::mt19937_64& rng);
/// Throws ConstraintViolated.
void check_constraints(const DeformationFamily& f);
/// The system without the constraint check (for negative controls).
SystemSpec family_system_unchecked(const DeformationFamily& f);
/// Validates, then builds.
SystemSpec family_system(const DeformationFamily& f);

struct NamedResidues {
  std::string name;
  ResiduePair residues;
};

/// Maximal solutions of the homogeneous system at the family's point.
/// With `conjugated`, each is repeated under a random unimodular conjugation.
std::vector<NamedResidues> family_candidates(FamilyId id, int n, std::mt19937_64* conjugator = nullptr);

struct DeformationReport {
  std::string family;
  SystemSpec system;
  std::vector<CandidateReport> candidates;
  bool all_maximal = false;
};

DeformationReport verify_system(const std::string& label, const SystemSpec& sys,
                                const std::vector<NamedResidues>& candidates);
/// Throws ConstraintViolated.
DeformationReport verify_deformation(const DeformationFamily& f, std::mt19937_64* conjugator = nullptr);

/// Obstructions of types 1-3 at k = 0, 1, 2 at (-1,-1), n = 2, with every
/// entry of b1..b5, c1..c5 a free parameter named like "b3_12".
struct ParametricObstructions {
  // [type-1] -> obstructions of that type
  std::vector<std::vector<Obstruction>> by_type;
};
ParametricObstructions parametric_obstructions(int n = 2);

/// Applies a substitution to every obstruction and keeps the nonzero rows.
std::vector<Obstruction> substitute_obstructions(const std::vector<Obstruction>& obs,
                                                 const std::map<int, PolyQ>& subst);

/// Substitutions for the solved resonance conditions (n = 2 entries):
/// c1 = -b2 + g1 I, c2 = -b1 + g2 I, c3 = g3 I, c4 = (g3 + g4) I,
/// c5 = -(g3 + g4/2)(b1 + b2) + g5 I.
std::map<int, PolyQ> type2_conditions(int n = 2);
/// c1 = -b2 + d1 I, c2 = -b1 + d2 I, b3 = d3 I, b4 = (d3 + d4) I,
/// b5 = (d3 + d4/2)(b1 + b2) + d5 I.
std::map<int, PolyQ> type3_conditions(int n = 2);
/// Both sets together (d1 = g1, d2 = g2).
std::map<int, PolyQ> joint_k1_conditions(int n = 2);
/// g2 = -g1, g4 = -2 g3, d4 = -2 d3.
std::map<int, PolyQ> k2_conditions();
/// Composition: apply `first`, then `second` to the results.
std::map<int, PolyQ> compose(const std::map<int, PolyQ>& first, const std::map<int, PolyQ>& second);

}  // namespace kov
