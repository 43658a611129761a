#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kov/param.hpp"
#include "kov/rational.hpp"

namespace kov {

/// Power product of parameters. Factors are (param id, exponent) sorted by
/// id with nonzero exponents; only eps (id 0) may carry a negative exponent.
class Monomial {
 public:
  using Factor = std::pair<int, int>;

  Monomial() = default;
  static Monomial of(Param p, int exp = 1);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  int degree() const;
  int exponent(Param p) const;
  int eps_exponent() const { return exponent(kEps); }

  /// Same monomial with the given parameter removed.
  Monomial without(Param p) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;

  std::string to_string() const;

 private:
  std::vector<Factor> factors_;
};

/// Graded lexicographic order on param ids.
struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse polynomial over Q in the registered parameters, Laurent in eps.
/// Value type; terms are kept sorted by MonomialLess with no zero
/// coefficients, so structural equality is mathematical equality.
class PolyQ {
 public:
  using Term = std::pair<Monomial, Rational>;

  PolyQ() = default;
  PolyQ(const Rational& c);  // NOLINT(google-explicit-constructor)
  PolyQ(long c);             // NOLINT(google-explicit-constructor)

  static PolyQ variable(Param p, int exp = 1);
  static PolyQ variable(std::string_view name, int exp = 1) {
    return variable(intern(name), exp);
  }
  static PolyQ term(Monomial m, Rational c);
  /// Adopts terms that are already sorted by MonomialLess, distinct and
  /// nonzero. Used by solvers that assemble results monomial by monomial.
  static PolyQ from_sorted_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Coefficient of the monomial 1.
  Rational constant_term() const;
  Rational coefficient(const Monomial& m) const;

  PolyQ& operator+=(const PolyQ& o);
  PolyQ& operator-=(const PolyQ& o);
  PolyQ& operator*=(const PolyQ& o);
  PolyQ& operator*=(const Rational& c);

  friend PolyQ operator+(PolyQ a, const PolyQ& b) { return a += b; }
  friend PolyQ operator-(PolyQ a, const PolyQ& b) { return a -= b; }
  friend PolyQ operator*(const PolyQ& a, const PolyQ& b);
  friend PolyQ operator*(PolyQ a, const Rational& c) { return a *= c; }
  friend PolyQ operator*(const Rational& c, PolyQ a) { return a *= c; }
  PolyQ operator-() const;

  friend bool operator==(const PolyQ& a, const PolyQ& b);

  /// Non-negative integer power; negative powers only for single-term
  /// polynomials whose inverse stays a Laurent monomial in eps.
  PolyQ pow(int e) const;

  /// Replaces a parameter by a polynomial. Throws
  /// SubstitutionCreatesNegativePower when a negative power of eps would
  /// have to be expanded into something that is not a Laurent monomial in
  /// eps alone.
  PolyQ substitute(Param p, const PolyQ& value) const;
  /// Simultaneous substitution keyed by param id.
  PolyQ substitute(const std::map<int, PolyQ>& values) const;

  /// Drops positive eps-degree terms and keeps eps^0 terms. Throws
  /// DivergentLimit when a negative eps-power survives.
  PolyQ epsilon_limit() const;
  /// Coefficient of eps^d as an eps-free polynomial.
  PolyQ eps_coefficient(int d) const;
  int min_eps_degree() const;

  bool depends_on(Param p) const;
  std::vector<Param> params() const;

  /// Canonical text: terms ordered by degree then by rendered monomial, so
  /// the output does not depend on registration order.
  std::string to_string() const;
  /// Parses the text format (also accepts parentheses and integer powers).
  static PolyQ parse(std::string_view text);

 private:
  void add_scaled(const PolyQ& o, int sign);
  std::vector<Term> terms_;
};

std::string to_string(const PolyQ& p);

}  // namespace kov
