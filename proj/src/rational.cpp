#include "polynorm/rational.hpp"

#include <sstream>

namespace polynorm {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw InputError("empty rational literal");
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      Integer p(text);
      return Rational(p);
    }
    Integer p(text.substr(0, slash));
    Integer q(text.substr(slash + 1));
    if (q == 0) throw InputError("zero denominator in '" + text + "'");
    if (q < 0) {
      p = -p;
      q = -q;
    }
    return Rational(p) / Rational(q);
  } catch (const std::runtime_error&) {
    throw InputError("bad rational literal '" + text + "'");
  }
}

std::string to_string(const Rational& q) {
  std::ostringstream out;
  out << numerator_of(q);
  if (denominator_of(q) != 1) out << '/' << denominator_of(q);
  return out.str();
}

}  // namespace polynorm
