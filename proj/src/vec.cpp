#include "flatsurf/vec.hpp"

#include <ostream>
#include <sstream>

namespace flatsurf {

bool in_sector_open(const Vec& u, const Vec& v, const Vec& d) {
  Rat cuv = cross(u, v);
  if (cuv == Rat(0)) {
    if (dot(u, v) > Rat(0)) return false;  // empty sector
    return cross(u, d) > Rat(0);           // half-plane sector (angle pi)
  }
  if (cuv > Rat(0)) return cross(u, d) > Rat(0) && cross(d, v) > Rat(0);
  return cross(u, d) > Rat(0) || cross(d, v) > Rat(0);
}

bool in_sector_half_open(const Vec& u, const Vec& v, const Vec& d) {
  return same_ray(v, d) || in_sector_open(u, v, d);
}

int horizontal_crossings(const Vec& u, const Vec& v) {
  int n = 0;
  if (in_sector_half_open(u, v, Vec{Rat(1), Rat(0)})) ++n;
  if (in_sector_half_open(u, v, Vec{Rat(-1), Rat(0)})) ++n;
  return n;
}

std::string to_string(const Vec& v) {
  return "(" + to_string(v.x) + "," + to_string(v.y) + ")";
}

std::ostream& operator<<(std::ostream& os, const Vec& v) {
  return os << to_string(v);
}

}  // namespace flatsurf
