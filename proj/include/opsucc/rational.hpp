#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace opsucc {

// Exact arithmetic over Q. cpp_rational keeps values in lowest terms with a
// positive denominator, so equality is structural and no rounding ever occurs.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Wire format: "p/q", or just "p" when q = 1.
inline std::string rational_to_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) {
    s += '/';
    s += denominator(r).str();
  }
  return s;
}

inline Rational rational_from_string(const std::string& s) {
  auto is_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!is_int(s)) throw std::invalid_argument("bad rational: '" + s + "'");
    return Rational(Integer(s));
  }
  std::string num = s.substr(0, slash), den = s.substr(slash + 1);
  if (!is_int(num) || !is_int(den))
    throw std::invalid_argument("bad rational: '" + s + "'");
  Integer n(num), d(den);
  if (d == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  return Rational(n, d);
}

}  // namespace opsucc
