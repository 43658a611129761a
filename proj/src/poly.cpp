#include "kov/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "kov/errors.hpp"

namespace kov {

// ---------------------------------------------------------------- Monomial

Monomial Monomial::of(Param p, int exp) {
  Monomial m;
  if (exp != 0) {
    if (exp < 0 && p.id != kEps.id)
      throw SubstitutionCreatesNegativePower("negative power of " + label(p));
    m.factors_.emplace_back(p.id, exp);
  }
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (const auto& [id, e] : factors_) d += e;
  return d;
}

int Monomial::exponent(Param p) const {
  for (const auto& [id, e] : factors_)
    if (id == p.id) return e;
  return 0;
}

Monomial Monomial::without(Param p) const {
  Monomial m;
  for (const auto& f : factors_)
    if (f.first != p.id) m.factors_.push_back(f);
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin(), j = b.factors_.begin();
  while (i != a.factors_.end() && j != b.factors_.end()) {
    if (i->first < j->first) {
      r.factors_.push_back(*i++);
    } else if (j->first < i->first) {
      r.factors_.push_back(*j++);
    } else {
      if (int e = i->second + j->second; e != 0) r.factors_.emplace_back(i->first, e);
      ++i;
      ++j;
    }
  }
  r.factors_.insert(r.factors_.end(), i, a.factors_.end());
  r.factors_.insert(r.factors_.end(), j, b.factors_.end());
  return r;
}

std::string Monomial::to_string() const {
  std::vector<std::string> parts;
  for (const auto& [id, e] : factors_) {
    std::string s = label(Param{id});
    if (e != 1) s += "^" + std::to_string(e);
    parts.push_back(std::move(s));
  }
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (const auto& s : parts) {
    if (!out.empty()) out += "*";
    out += s;
  }
  return out;
}

bool MonomialLess::operator()(const Monomial& a, const Monomial& b) const {
  const int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return a.factors() < b.factors();
}

// ------------------------------------------------------------------- PolyQ

PolyQ::PolyQ(const Rational& c) {
  if (c != 0) terms_.emplace_back(Monomial{}, c);
}

PolyQ::PolyQ(long c) : PolyQ(Rational(c)) {}

PolyQ PolyQ::variable(Param p, int exp) { return term(Monomial::of(p, exp), Rational(1)); }

PolyQ PolyQ::term(Monomial m, Rational c) {
  PolyQ r;
  if (c != 0) r.terms_.emplace_back(std::move(m), std::move(c));
  return r;
}

PolyQ PolyQ::from_sorted_terms(std::vector<Term> terms) {
  PolyQ r;
  r.terms_ = std::move(terms);
  return r;
}

bool PolyQ::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one());
}

Rational PolyQ::constant_term() const { return coefficient(Monomial{}); }

Rational PolyQ::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) {
                               return MonomialLess{}(t.first, key);
                             });
  if (it != terms_.end() && it->first == m) return it->second;
  return Rational(0);
}

void PolyQ::add_scaled(const PolyQ& o, int sign) {
  if (o.terms_.empty()) return;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  MonomialLess less;
  auto i = terms_.begin();
  auto j = o.terms_.begin();
  while (i != terms_.end() || j != o.terms_.end()) {
    if (j == o.terms_.end() || (i != terms_.end() && less(i->first, j->first))) {
      out.push_back(std::move(*i++));
    } else if (i == terms_.end() || less(j->first, i->first)) {
      out.emplace_back(j->first, sign > 0 ? j->second : Rational(-j->second));
      ++j;
    } else {
      Rational c = sign > 0 ? Rational(i->second + j->second) : Rational(i->second - j->second);
      if (c != 0) out.emplace_back(std::move(i->first), std::move(c));
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
}

PolyQ& PolyQ::operator+=(const PolyQ& o) {
  add_scaled(o, +1);
  return *this;
}

PolyQ& PolyQ::operator-=(const PolyQ& o) {
  add_scaled(o, -1);
  return *this;
}

PolyQ& PolyQ::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.second *= c;
  }
  return *this;
}

PolyQ& PolyQ::operator*=(const PolyQ& o) {
  *this = *this * o;
  return *this;
}

PolyQ operator*(const PolyQ& a, const PolyQ& b) {
  if (a.is_zero() || b.is_zero()) return PolyQ{};
  if (b.is_constant()) return a * b.terms_[0].second;
  if (a.is_constant()) return b * a.terms_[0].second;
  std::map<Monomial, Rational, MonomialLess> acc;
  Rational prod;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      prod = ca * cb;
      auto [it, fresh] = acc.try_emplace(ma * mb, prod);
      if (!fresh) it->second += prod;
    }
  }
  PolyQ r;
  r.terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) r.terms_.emplace_back(m, std::move(c));
  return r;
}

PolyQ PolyQ::operator-() const {
  PolyQ r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

bool operator==(const PolyQ& a, const PolyQ& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].first == b.terms_[i].first) || a.terms_[i].second != b.terms_[i].second)
      return false;
  return true;
}

PolyQ PolyQ::pow(int e) const {
  if (e < 0) {
    if (terms_.size() != 1)
      throw SubstitutionCreatesNegativePower("cannot invert a polynomial with " +
                                             std::to_string(terms_.size()) + " terms");
    const auto& [m, c] = terms_[0];
    Monomial inv;
    for (const auto& [id, ex] : m.factors()) inv = inv * Monomial::of(Param{id}, -ex);
    Rational ic = 1 / c;
    return PolyQ::term(std::move(inv), ic).pow(-e);
  }
  PolyQ result(1L), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

PolyQ PolyQ::substitute(Param p, const PolyQ& value) const {
  return substitute(std::map<int, PolyQ>{{p.id, value}});
}

PolyQ PolyQ::substitute(const std::map<int, PolyQ>& values) const {
  std::map<std::pair<int, int>, PolyQ> power_cache;
  auto power = [&](int id, int e) -> const PolyQ& {
    auto key = std::make_pair(id, e);
    auto it = power_cache.find(key);
    if (it == power_cache.end()) it = power_cache.emplace(key, values.at(id).pow(e)).first;
    return it->second;
  };
  PolyQ out;
  for (const auto& [m, c] : terms_) {
    Monomial kept;
    std::vector<std::pair<int, int>> replaced;
    for (const auto& [id, e] : m.factors()) {
      if (values.count(id)) {
        replaced.emplace_back(id, e);
      } else {
        kept = kept * Monomial::of(Param{id}, e);
      }
    }
    PolyQ t = PolyQ::term(std::move(kept), c);
    for (const auto& [id, e] : replaced) t = t * power(id, e);
    out += t;
  }
  return out;
}

PolyQ PolyQ::epsilon_limit() const {
  PolyQ out;
  std::vector<std::string> divergent;
  for (const auto& [m, c] : terms_) {
    const int d = m.eps_exponent();
    if (d < 0) {
      divergent.push_back(kov::to_string(PolyQ::term(m, c)));
    } else if (d == 0) {
      out.terms_.emplace_back(m, c);
    }
  }
  if (!divergent.empty()) {
    std::string msg = "divergent limit, surviving terms:";
    for (const auto& s : divergent) msg += " " + s;
    throw DivergentLimit(msg);
  }
  return out;
}

PolyQ PolyQ::eps_coefficient(int d) const {
  PolyQ out;
  for (const auto& [m, c] : terms_)
    if (m.eps_exponent() == d) out += PolyQ::term(m.without(kEps), c);
  return out;
}

int PolyQ::min_eps_degree() const {
  int d = 0;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const int e = m.eps_exponent();
    if (first || e < d) d = e;
    first = false;
  }
  return d;
}

bool PolyQ::depends_on(Param p) const {
  for (const auto& [m, c] : terms_)
    if (m.exponent(p) != 0) return true;
  return false;
}

std::vector<Param> PolyQ::params() const {
  std::vector<int> ids;
  for (const auto& [m, c] : terms_)
    for (const auto& [id, e] : m.factors()) ids.push_back(id);
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  std::vector<Param> out;
  for (int id : ids) out.push_back(Param{id});
  return out;
}

std::string PolyQ::to_string() const {
  if (terms_.empty()) return "0";
  struct Rendered {
    int degree;
    std::string mono;
    const Rational* coeff;
  };
  std::vector<Rendered> rs;
  rs.reserve(terms_.size());
  for (const auto& [m, c] : terms_) rs.push_back({m.degree(), m.to_string(), &c});
  std::sort(rs.begin(), rs.end(), [](const Rendered& a, const Rendered& b) {
    if (a.degree != b.degree) return a.degree > b.degree;
    return a.mono < b.mono;
  });
  std::string out;
  for (const auto& r : rs) {
    const bool neg = sgn(*r.coeff) < 0;
    Rational mag = abs(*r.coeff);
    std::string body;
    if (r.mono.empty()) {
      body = kov::to_string(mag);
    } else if (mag == 1) {
      body = r.mono;
    } else {
      body = kov::to_string(mag) + "*" + r.mono;
    }
    if (out.empty()) {
      out = neg ? "-" + body : body;
    } else {
      out += neg ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

std::string to_string(const PolyQ& p) { return p.to_string(); }

// ------------------------------------------------------------------ parser

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  PolyQ parse() {
    PolyQ r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("polynomial '" + std::string(s_) + "': " + why + " at offset " +
                     std::to_string(pos_));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  PolyQ expr() {
    PolyQ acc;
    bool neg = false;
    if (accept('-')) {
      neg = true;
    } else {
      accept('+');
    }
    PolyQ t = term();
    acc = neg ? -t : t;
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  PolyQ term() {
    PolyQ acc = factor();
    for (;;) {
      if (accept('*')) {
        acc = acc * factor();
      } else if (accept('/')) {
        PolyQ d = factor();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
        acc *= Rational(1 / d.constant_term());
      } else {
        return acc;
      }
    }
  }

  Integer number() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return Integer(std::string(s_.substr(start, pos_ - start)), 10);
  }

  int exponent() {
    if (!accept('^')) return 1;
    bool neg = accept('-');
    Integer e = number();
    if (!e.fits_sint_p()) fail("exponent too large");
    return neg ? -static_cast<int>(e.get_si()) : static_cast<int>(e.get_si());
  }

  PolyQ factor() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    const char c = s_[pos_];
    PolyQ base;
    if (c == '(') {
      ++pos_;
      base = expr();
      if (!accept(')')) fail("expected ')'");
    } else if (c == '-') {
      ++pos_;
      return -factor();
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      base = PolyQ(Rational(number()));
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      base = PolyQ::variable(intern(s_.substr(start, pos_ - start)));
    } else {
      fail("unexpected '" + std::string(1, c) + "'");
    }
    const int e = exponent();
    return e == 1 ? base : base.pow(e);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

PolyQ PolyQ::parse(std::string_view text) { return Parser(text).parse(); }

}  // namespace kov
