#pragma once

#include "flatsurf/numeric.hpp"

#include <compare>
#include <iosfwd>
#include <string>

namespace flatsurf {

/// Exact planar vector. Holonomies, edge vectors and chart coordinates all
/// live here; comparisons are exact.
struct Vec {
  Rat x{0};
  Rat y{0};

  Vec() = default;
  Vec(Rat x_, Rat y_) : x(std::move(x_)), y(std::move(y_)) {}

  bool operator==(const Vec&) const = default;

  Vec operator+(const Vec& o) const { return {x + o.x, y + o.y}; }
  Vec operator-(const Vec& o) const { return {x - o.x, y - o.y}; }
  Vec operator-() const { return {-x, -y}; }
  Vec& operator+=(const Vec& o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  Vec& operator-=(const Vec& o) {
    x -= o.x;
    y -= o.y;
    return *this;
  }
  friend Vec operator*(const Rat& s, const Vec& v) { return {s * v.x, s * v.y}; }

  bool is_zero() const { return x == Rat(0) && y == Rat(0); }
};

inline Rat cross(const Vec& a, const Vec& b) { return a.x * b.y - a.y * b.x; }
inline Rat dot(const Vec& a, const Vec& b) { return a.x * b.x + a.y * b.y; }

/// True if b is a positive multiple of a (both nonzero).
inline bool same_ray(const Vec& a, const Vec& b) {
  return cross(a, b) == Rat(0) && dot(a, b) > Rat(0);
}

/// True if a and b span the same line through the origin.
inline bool parallel(const Vec& a, const Vec& b) { return cross(a, b) == Rat(0); }

/// Lexicographic order, for deterministic tie-breaking only.
inline bool lex_less(const Vec& a, const Vec& b) {
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

/// True if direction d lies strictly inside the counterclockwise open sector
/// from u to v (sector assumed to span less than a full turn is NOT required;
/// the sector is the set swept rotating u counterclockwise until reaching v).
bool in_sector_open(const Vec& u, const Vec& v, const Vec& d);

/// As above with d == v allowed (half-open sector (u, v]).
bool in_sector_half_open(const Vec& u, const Vec& v, const Vec& d);

/// Number of rays from {(1,0), (-1,0)} crossed when sweeping counterclockwise
/// from u to v through the sector (u, v]. Used to accumulate cone angles in
/// units of pi.
int horizontal_crossings(const Vec& u, const Vec& v);

std::string to_string(const Vec& v);
std::ostream& operator<<(std::ostream& os, const Vec& v);

}  // namespace flatsurf
