#include "flatsurf/surface.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <sstream>

namespace flatsurf {

namespace {

std::atomic<long> g_next_root{1};

std::string edge_name(const Surface& s, const EdgeRef& e) {
  return s.polys[e.poly].id + "." + std::to_string(e.edge);
}

std::string corner_name(const Surface& s, const CornerRef& c) {
  return s.polys[c.poly].id + "." + std::to_string(c.corner);
}

int orient(const Vec& a, const Vec& b, const Vec& c) {
  return sgn(cross(b - a, c - a));
}

bool on_segment(const Vec& a, const Vec& b, const Vec& p) {
  if (orient(a, b, p) != 0) return false;
  return dot(p - a, b - a) >= Rat(0) && dot(p - b, a - b) >= Rat(0);
}

/// True if closed segments [a,b] and [c,d] share any point.
bool segments_meet(const Vec& a, const Vec& b, const Vec& c, const Vec& d) {
  int d1 = orient(c, d, a), d2 = orient(c, d, b);
  int d3 = orient(a, b, c), d4 = orient(a, b, d);
  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
      ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
    return true;
  return (d1 == 0 && on_segment(c, d, a)) || (d2 == 0 && on_segment(c, d, b)) ||
         (d3 == 0 && on_segment(a, b, c)) || (d4 == 0 && on_segment(a, b, d));
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

std::vector<Vec> Polygon::corner_positions() const {
  std::vector<Vec> pos;
  pos.reserve(edges.size());
  Vec p{Rat(0), Rat(0)};
  for (const auto& e : edges) {
    pos.push_back(p);
    p += e;
  }
  return pos;
}

Rat Polygon::signed_area() const {
  auto pos = corner_positions();
  Rat a(0);
  int n = size();
  for (int i = 0; i < n; ++i) a += cross(pos[i], pos[(i + 1) % n]);
  return a / Rat(2);
}

int HalfTranslationSurface::poly_index(const std::string& id) const {
  for (int i = 0; i < static_cast<int>(polys.size()); ++i)
    if (polys[i].id == id) return i;
  return -1;
}

void HalfTranslationSurface::assign_fresh_roots() {
  prov.clear();
  prov.reserve(polys.size());
  for (size_t i = 0; i < polys.size(); ++i)
    prov.push_back(CellProvenance{g_next_root++, 1, Vec{}});
}

std::map<EdgeRef, std::pair<int, int>> edge_gluing_index(const Surface& s) {
  std::map<EdgeRef, std::pair<int, int>> idx;
  for (int g = 0; g < static_cast<int>(s.gluings.size()); ++g) {
    const auto& gl = s.gluings[g];
    if (gl.a == gl.b) throw Error("unmatched-edge", "edge glued to itself: " + edge_name(s, gl.a));
    for (int side = 0; side < 2; ++side) {
      EdgeRef e = side == 0 ? gl.a : gl.b;
      if (e.poly < 0 || e.poly >= static_cast<int>(s.polys.size()) || e.edge < 0 ||
          e.edge >= s.polys[e.poly].size())
        throw Error("unmatched-edge", "gluing references missing edge");
      if (!idx.emplace(e, std::make_pair(g, side)).second)
        throw Error("unmatched-edge", "edge in two gluings: " + edge_name(s, e));
    }
  }
  size_t total = 0;
  for (const auto& p : s.polys) total += p.edges.size();
  if (idx.size() != total) {
    for (int pi = 0; pi < static_cast<int>(s.polys.size()); ++pi)
      for (int e = 0; e < s.polys[pi].size(); ++e)
        if (!idx.count(EdgeRef{pi, e}))
          throw Error("unmatched-edge", "unglued edge: " + edge_name(s, EdgeRef{pi, e}));
  }
  return idx;
}

EdgeRef glued_partner(const Surface& s, const EdgeRef& e, int* sign_out) {
  auto idx = edge_gluing_index(s);
  auto it = idx.find(e);
  if (it == idx.end()) throw Error("unmatched-edge", edge_name(s, e));
  const auto& gl = s.gluings[it->second.first];
  if (sign_out) *sign_out = gl.sign;
  return it->second.second == 0 ? gl.b : gl.a;
}

ChartMap gluing_chart_map(const Surface& s, const EdgeRef& from) {
  int sign = 1;
  EdgeRef to = glued_partner(s, from, &sign);
  auto pos_a = s.polys[from.poly].corner_positions();
  auto pos_b = s.polys[to.poly].corner_positions();
  Vec start_a = pos_a[from.edge];
  Vec end_b = pos_b[(to.edge + 1) % s.polys[to.poly].size()];
  // start(a) is identified with end(b) for both gluing types.
  if (sign == 1) return ChartMap{1, end_b - start_a};
  return ChartMap{-1, end_b + start_a};
}

CellProvenance composed_prov(const CellProvenance& base, const ChartMap& new_from_old) {
  // base: root = s*p + t where p is in the old chart; points are re-expressed
  // as q = new_from_old(p), so p = new_from_old^{-1}(q).
  CellProvenance out;
  out.root = base.root;
  ChartMap inv = new_from_old.inverse();
  // p = inv.sign*q + inv.shift ; root = s*(inv.sign*q + inv.shift) + t
  out.sign = base.sign * inv.sign;
  out.shift = Vec{Rat(base.sign) * inv.shift.x + base.shift.x,
                  Rat(base.sign) * inv.shift.y + base.shift.y};
  return out;
}

VertexAnalysis analyze_vertices(const Surface& s) {
  auto idx = edge_gluing_index(s);
  auto next_ccw = [&](const CornerRef& c) -> CornerRef {
    int n = s.polys[c.poly].size();
    EdgeRef incoming{c.poly, (c.corner + n - 1) % n};
    auto it = idx.find(incoming);
    const auto& gl = s.gluings[it->second.first];
    EdgeRef other = it->second.second == 0 ? gl.b : gl.a;
    return CornerRef{other.poly, other.edge};
  };

  VertexAnalysis va;
  std::set<CornerRef> seen;
  for (int pi = 0; pi < static_cast<int>(s.polys.size()); ++pi) {
    for (int ci = 0; ci < s.polys[pi].size(); ++ci) {
      CornerRef start{pi, ci};
      if (seen.count(start)) continue;
      VertexClass vc;
      CornerRef c = start;
      do {
        seen.insert(c);
        vc.corners.push_back(c);
        int n = s.polys[c.poly].size();
        const Vec& out = s.polys[c.poly].edges[c.corner];
        Vec in_rev = -s.polys[c.poly].edges[(c.corner + n - 1) % n];
        vc.angle_pi += horizontal_crossings(out, in_rev);
        c = next_ccw(c);
      } while (!(c == start));
      for (const auto& corner : vc.corners) {
        if (s.marked.count(corner)) vc.marked = true;
        if (s.pole_marked.count(corner)) vc.pole_marked = true;
      }
      int id = static_cast<int>(va.classes.size());
      for (const auto& corner : vc.corners) va.class_of[corner] = id;
      va.classes.push_back(std::move(vc));
    }
  }
  return va;
}

Kind kind_of(const Surface& s) {
  for (const auto& g : s.gluings)
    if (g.sign != 1) return Kind::Quadratic;
  return Kind::Translation;
}

Rat area(const Surface& s) {
  Rat a(0);
  for (const auto& p : s.polys) a += p.signed_area();
  return a;
}

bool is_connected(const Surface& s) {
  if (s.polys.empty()) return true;
  UnionFind uf(static_cast<int>(s.polys.size()));
  for (const auto& g : s.gluings) uf.unite(g.a.poly, g.b.poly);
  int root = uf.find(0);
  for (int i = 1; i < static_cast<int>(s.polys.size()); ++i)
    if (uf.find(i) != root) return false;
  return true;
}

ValidationReport validate(const Surface& s) {
  ValidationReport rep;
  auto issue = [&](const std::string& code, const std::string& detail) {
    rep.issues.push_back({code, detail});
  };

  if (s.polys.empty()) issue("unmatched-edge", "surface has no polygons");

  std::set<std::string> ids;
  for (const auto& p : s.polys) {
    if (!ids.insert(p.id).second) issue("unmatched-edge", "duplicate polygon id " + p.id);
    Vec sum{};
    bool zero_edge = false;
    for (const auto& e : p.edges) {
      sum += e;
      if (e.is_zero()) zero_edge = true;
    }
    if (zero_edge) issue("self-intersecting-polygon", p.id + " has a zero edge vector");
    if (!sum.is_zero()) issue("self-intersecting-polygon", p.id + " does not close up");
    if (zero_edge || !sum.is_zero()) continue;
    if (p.size() < 3) {
      issue("self-intersecting-polygon", p.id + " is degenerate");
      continue;
    }
    if (p.signed_area() <= Rat(0)) {
      issue("self-intersecting-polygon", p.id + " is not counterclockwise or has zero area");
      continue;
    }
    auto pos = p.corner_positions();
    int n = p.size();
    bool bad = false;
    for (int i = 0; i < n && !bad; ++i) {
      Vec a = pos[i], b = pos[(i + 1) % n];
      // backtracking corner (angle 0)
      Vec prev = p.edges[(i + n - 1) % n];
      if (same_ray(p.edges[i], -prev)) bad = true;
      for (int j = i + 1; j < n && !bad; ++j) {
        bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
        Vec c = pos[j], d = pos[(j + 1) % n];
        if (adjacent) {
          // only the shared endpoint may meet; handled by the angle-0 check
          // and by the vertex-duplication check below
          continue;
        }
        if (segments_meet(a, b, c, d)) bad = true;
      }
      for (int j = 0; j < n && !bad; ++j)
        if (j != i && pos[j] == pos[i]) bad = true;
    }
    if (bad) issue("self-intersecting-polygon", p.id);
  }
  if (!rep.ok()) return rep;

  std::map<EdgeRef, std::pair<int, int>> idx;
  try {
    idx = edge_gluing_index(s);
  } catch (const Error& e) {
    issue(e.code, e.what());
    return rep;
  }

  for (const auto& g : s.gluings) {
    const Vec& va = s.edge_vec(g.a);
    const Vec& vb = s.edge_vec(g.b);
    if (g.sign == 1) {
      if (!(vb == -va))
        issue("vector-mismatch",
              edge_name(s, g.a) + " ~ " + edge_name(s, g.b) + " (trans)");
    } else if (g.sign == -1) {
      if (!(vb == va))
        issue("vector-mismatch",
              edge_name(s, g.a) + " ~ " + edge_name(s, g.b) + " (flip)");
    } else {
      issue("vector-mismatch", "gluing sign must be +1 or -1");
    }
  }
  if (!rep.ok()) return rep;

  for (const auto& c : s.marked)
    if (c.poly < 0 || c.poly >= static_cast<int>(s.polys.size()) || c.corner < 0 ||
        c.corner >= s.polys[c.poly].size())
      issue("bad-angle", "mark references missing corner");
  for (const auto& c : s.pole_marked)
    if (c.poly < 0 || c.poly >= static_cast<int>(s.polys.size()) || c.corner < 0 ||
        c.corner >= s.polys[c.poly].size())
      issue("bad-angle", "polemark references missing corner");
  if (!rep.ok()) return rep;

  auto va = analyze_vertices(s);
  rep.kind = kind_of(s);
  for (const auto& vc : va.classes) {
    rep.cone_angles_pi.push_back(vc.angle_pi);
    if (vc.angle_pi < 1) issue("bad-angle", "cone angle < pi at " + corner_name(s, vc.corners[0]));
    if (rep.kind == Kind::Translation && vc.angle_pi % 2 != 0)
      issue("bad-angle", "odd cone angle on translation surface at " + corner_name(s, vc.corners[0]));
    if (vc.marked && vc.angle_pi != 2)
      issue("bad-angle", "marked point with angle " + std::to_string(vc.angle_pi) +
                             "/2 * 2pi at " + corner_name(s, vc.corners[0]));
    if (vc.pole_marked && vc.angle_pi != 1)
      issue("bad-angle", "polemark on non-pole at " + corner_name(s, vc.corners[0]));
    if (vc.marked && vc.pole_marked)
      issue("bad-angle", "point both marked and pole-marked");
  }
  std::sort(rep.cone_angles_pi.begin(), rep.cone_angles_pi.end());

  rep.connected = is_connected(s);
  if (rep.connected && rep.ok()) {
    int V = static_cast<int>(va.classes.size());
    int E = static_cast<int>(s.gluings.size());
    int F = static_cast<int>(s.polys.size());
    int chi = V - E + F;
    if (chi % 2 != 0)
      issue("bad-angle", "odd Euler characteristic");
    else
      rep.genus = (2 - chi) / 2;
    // Gauss-Bonnet consistency
    int defect = 0;
    for (const auto& vc : va.classes) defect += 2 - vc.angle_pi;
    if (defect != 2 * chi) issue("bad-angle", "Gauss-Bonnet violation (internal)");
  }
  return rep;
}

void require_valid(const Surface& s) {
  auto rep = validate(s);
  if (!rep.ok())
    throw Error("invalid-surface", rep.issues.front().code + ": " + rep.issues.front().detail);
}

Holonomy holonomy_class(const Surface& s) {
  if (!is_connected(s)) throw Error("disconnected", "holonomy_class requires a connected surface");
  int n = static_cast<int>(s.polys.size());
  std::vector<int> sigma(n, 0);
  sigma[0] = 1;
  std::vector<int> stack{0};
  std::vector<std::vector<std::pair<int, int>>> adj(n);  // (other poly, sign)
  for (const auto& g : s.gluings) {
    adj[g.a.poly].push_back({g.b.poly, g.sign});
    adj[g.b.poly].push_back({g.a.poly, g.sign});
  }
  while (!stack.empty()) {
    int p = stack.back();
    stack.pop_back();
    for (auto [q, sign] : adj[p]) {
      if (sigma[q] == 0) {
        sigma[q] = sigma[p] * sign;
        stack.push_back(q);
      }
    }
  }
  for (const auto& g : s.gluings)
    if (sigma[g.a.poly] * sigma[g.b.poly] != g.sign) return Holonomy::Nontrivial;
  return Holonomy::Trivial;
}

Surface orient_translation(const Surface& s) {
  if (holonomy_class(s) != Holonomy::Trivial)
    throw Error("trivial-holonomy-input", "cannot orient: nontrivial holonomy");
  int n = static_cast<int>(s.polys.size());
  std::vector<int> sigma(n, 0);
  sigma[0] = 1;
  std::vector<int> stack{0};
  std::vector<std::vector<std::pair<int, int>>> adj(n);
  for (const auto& g : s.gluings) {
    adj[g.a.poly].push_back({g.b.poly, g.sign});
    adj[g.b.poly].push_back({g.a.poly, g.sign});
  }
  while (!stack.empty()) {
    int p = stack.back();
    stack.pop_back();
    for (auto [q, sign] : adj[p])
      if (sigma[q] == 0) {
        sigma[q] = sigma[p] * sign;
        stack.push_back(q);
      }
  }
  Surface out = s;
  for (int i = 0; i < n; ++i) {
    if (sigma[i] == -1) {
      for (auto& e : out.polys[i].edges) e = -e;
      if (!out.prov.empty()) {
        // chart rotated by pi about the origin: q = -p
        out.prov[i] = composed_prov(s.prov.empty() ? CellProvenance{} : s.prov[i],
                                    ChartMap{-1, Vec{}});
        if (s.prov.empty()) out.prov.clear();
      }
    }
  }
  for (auto& g : out.gluings) g.sign = g.sign * sigma[g.a.poly] * sigma[g.b.poly];
  return out;
}

std::vector<Surface> components(const Surface& s) {
  int n = static_cast<int>(s.polys.size());
  if (n == 0) return {};
  UnionFind uf(n);
  for (const auto& g : s.gluings) uf.unite(g.a.poly, g.b.poly);

  std::map<int, std::vector<int>> groups;  // root -> polygon indices
  for (int i = 0; i < n; ++i) groups[uf.find(i)].push_back(i);

  std::vector<std::vector<int>> ordered;
  for (auto& [root, polys] : groups) ordered.push_back(polys);
  std::sort(ordered.begin(), ordered.end(), [&](const auto& a, const auto& b) {
    return s.polys[a.front()].id < s.polys[b.front()].id;
  });

  std::vector<Surface> out;
  for (size_t k = 0; k < ordered.size(); ++k) {
    const auto& group = ordered[k];
    std::map<int, int> remap;
    Surface c;
    c.name = s.name + (ordered.size() > 1 ? "#" + std::to_string(k) : "");
    for (int pi : group) {
      remap[pi] = static_cast<int>(c.polys.size());
      c.polys.push_back(s.polys[pi]);
      if (!s.prov.empty()) c.prov.push_back(s.prov[pi]);
    }
    for (const auto& g : s.gluings)
      if (remap.count(g.a.poly))
        c.gluings.push_back(Gluing{{remap[g.a.poly], g.a.edge}, {remap[g.b.poly], g.b.edge}, g.sign});
    for (const auto& m : s.marked)
      if (remap.count(m.poly)) c.marked.insert({remap[m.poly], m.corner});
    for (const auto& m : s.pole_marked)
      if (remap.count(m.poly)) c.pole_marked.insert({remap[m.poly], m.corner});
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace flatsurf
