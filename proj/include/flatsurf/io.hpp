#pragma once

#include "flatsurf/surface.hpp"

#include <iosfwd>
#include <string>

namespace flatsurf {

/// Parse the surface text format:
///   surface <name>
///   polygon <id> <dx1> <dy1> <dx2> <dy2> ...
///   glue <id>.<edge> <id>.<edge> trans|flip
///   mark <id>.<corner>
///   polemark <id>.<corner>
/// Rationals as p/q or integers; '#' starts a comment.
Surface parse_surface(std::istream& in);
Surface parse_surface_string(const std::string& text);
Surface load_surface(const std::string& path);

std::string serialize_surface(const Surface& s);
void save_surface(const Surface& s, const std::string& path);

}  // namespace flatsurf
