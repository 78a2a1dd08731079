#include "flatsurf/numeric.hpp"

#include <sstream>
#include <stdexcept>

namespace flatsurf {

std::string to_string(const Rat& r) {
  std::ostringstream os;
  os << r.numerator();
  if (r.denominator() != 1) os << "/" << r.denominator();
  return os.str();
}

Rat parse_rat(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(text), Int(1));
    Int n(text.substr(0, slash));
    Int d(text.substr(slash + 1));
    if (d == 0) throw std::runtime_error("zero denominator");
    return Rat(n, d);
  } catch (const std::exception&) {
    throw std::runtime_error("bad rational literal: '" + text + "'");
  }
}

}  // namespace flatsurf
