#pragma once

#include "flatsurf/vec.hpp"

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace flatsurf {

/// Error with a stable machine-readable code ("vector-mismatch", ...) plus a
/// human-readable detail message.
struct Error : std::runtime_error {
  std::string code;
  Error(std::string code_, const std::string& detail)
      : std::runtime_error(code_ + ": " + detail), code(std::move(code_)) {}
};

struct EdgeRef {
  int poly = -1;
  int edge = -1;
  auto operator<=>(const EdgeRef&) const = default;
};

struct CornerRef {
  int poly = -1;
  int corner = -1;
  auto operator<=>(const CornerRef&) const = default;
};

/// A polygon given by its edge vectors in counterclockwise boundary order.
/// Corner i is the vertex at the start of edge i; positions are defined up to
/// translation with corner 0 at the origin.
struct Polygon {
  std::string id;
  std::vector<Vec> edges;

  int size() const { return static_cast<int>(edges.size()); }
  std::vector<Vec> corner_positions() const;
  Rat signed_area() const;
};

/// Identification of two distinct edges. sign +1: vector(b) == -vector(a),
/// glued by translation. sign -1: vector(b) == vector(a), glued by rotation
/// by pi. In both cases the start of one edge is identified with the end of
/// the other.
struct Gluing {
  EdgeRef a, b;
  int sign = 1;
};

/// Chart provenance: maps current chart coordinates back to the chart of an
/// ancestor surface (root). Valid across splitting, cutting and collapse;
/// operations that create new geometry assign fresh roots.
struct CellProvenance {
  long root = -1;     // root chart id (globally unique)
  int sign = 1;       // root_point = sign * point + shift
  Vec shift{};
};

struct HalfTranslationSurface {
  std::string name;
  std::vector<Polygon> polys;
  std::vector<Gluing> gluings;
  std::set<CornerRef> marked;       // marked regular (angle 2pi) points
  std::set<CornerRef> pole_marked;  // distinguished poles (angle pi)
  std::vector<CellProvenance> prov; // parallel to polys; may be empty

  int poly_index(const std::string& id) const;
  const Vec& edge_vec(const EdgeRef& e) const { return polys[e.poly].edges[e.edge]; }
  int next_edge(const EdgeRef& e) const {
    return (e.edge + 1) % polys[e.poly].size();
  }
  int prev_edge(const EdgeRef& e) const {
    int n = polys[e.poly].size();
    return (e.edge + n - 1) % n;
  }
  void assign_fresh_roots();
};

using Surface = HalfTranslationSurface;

enum class Kind { Translation, Quadratic };

struct VertexClass {
  std::vector<CornerRef> corners;  // cyclic order rotating counterclockwise
  int angle_pi = 0;                // cone angle in units of pi
  bool marked = false;
  bool pole_marked = false;

  bool is_special() const { return angle_pi != 2 || marked; }
};

struct Issue {
  std::string code;
  std::string detail;
};

struct ValidationReport {
  std::vector<Issue> issues;
  Kind kind = Kind::Quadratic;
  int genus = -1;  // meaningful only when connected and valid
  bool connected = false;
  std::vector<int> cone_angles_pi;
  bool ok() const { return issues.empty(); }
};

/// Combinatorial vertex-class analysis. Requires a perfect edge matching;
/// throws Error("unmatched-edge", ...) otherwise.
struct VertexAnalysis {
  std::vector<VertexClass> classes;
  std::map<CornerRef, int> class_of;
};

// --- core queries ---------------------------------------------------------

/// Map edge -> (gluing index, side 0/1); throws on imperfect matching.
std::map<EdgeRef, std::pair<int, int>> edge_gluing_index(const Surface& s);

EdgeRef glued_partner(const Surface& s, const EdgeRef& e, int* sign_out = nullptr);

VertexAnalysis analyze_vertices(const Surface& s);

ValidationReport validate(const Surface& s);

/// Throws Error("invalid-surface") unless validate(s).ok().
void require_valid(const Surface& s);

Kind kind_of(const Surface& s);

Rat area(const Surface& s);

bool is_connected(const Surface& s);

/// Connected components as independent surfaces, lexicographic by smallest
/// polygon id. Marked labels preserved.
std::vector<Surface> components(const Surface& s);

enum class Holonomy { Trivial, Nontrivial };

/// Z/2 linear-holonomy class via spanning-tree reduction of gluing signs.
/// Throws Error("disconnected") on disconnected input.
Holonomy holonomy_class(const Surface& s);

/// Re-present with all gluing signs +1 (rotates polygon charts by pi along a
/// spanning tree). Requires trivial holonomy.
Surface orient_translation(const Surface& s);

/// The gluing isometry from the chart of e's polygon to the chart of its
/// partner's polygon: p -> sign*p + shift.
struct ChartMap {
  int sign = 1;
  Vec shift{};
  Vec operator()(const Vec& p) const {
    return sign == 1 ? p + shift : Vec{shift.x - p.x, shift.y - p.y};
  }
  Vec apply_dir(const Vec& d) const { return sign == 1 ? d : -d; }
  ChartMap inverse() const {
    return sign == 1 ? ChartMap{1, -shift} : *this;
  }
};

ChartMap gluing_chart_map(const Surface& s, const EdgeRef& from);

/// Compose provenance of polygon p with a chart map applied to its points.
CellProvenance composed_prov(const CellProvenance& base, const ChartMap& m);

}  // namespace flatsurf
