#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <cstdint>
#include <functional>
#include <string>

namespace flatsurf {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::rational<Int>;

inline Rat rat(long n, long d = 1) { return Rat(Int(n), Int(d)); }

inline Int num(const Rat& r) { return r.numerator(); }
inline Int den(const Rat& r) { return r.denominator(); }

inline int sgn(const Rat& r) {
  if (r.numerator() == 0) return 0;
  return r.numerator() > 0 ? 1 : -1;
}

inline Rat rat_abs(const Rat& r) { return r < Rat(0) ? -r : r; }

/// Floor of a rational as an integer.
inline Int rat_floor(const Rat& r) {
  Int q = r.numerator() / r.denominator();
  if (r.numerator() < 0 && q * r.denominator() != r.numerator()) --q;
  return q;
}

/// r reduced modulo m into [0, m). Requires m > 0.
inline Rat rat_mod(const Rat& r, const Rat& m) {
  Rat q = r / m;
  return r - Rat(rat_floor(q)) * m;
}

inline Int int_gcd(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline Int int_lcm(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return 0;
  Int g = int_gcd(a, b);
  Int r = (a / g) * b;
  return r < 0 ? -r : r;
}

std::string to_string(const Rat& r);
Rat parse_rat(const std::string& text);  // accepts "p/q" or "p"

}  // namespace flatsurf
