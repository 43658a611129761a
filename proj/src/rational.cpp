#include "kov/rational.hpp"

#include <cctype>

#include "kov/errors.hpp"

namespace kov {

std::string to_string(const Rational& r) { return r.get_str(10); }

Rational parse_rational(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw ParseError("empty rational");
  auto valid_int = [](std::string_view t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  const auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw ParseError("malformed rational '" + std::string(text) + "'");
  if (num[0] == '+') num.erase(0, 1);
  Integer n(num, 10), d(den, 10);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

}  // namespace kov
