#include "flatsurf/refine.hpp"

#include <algorithm>
#include <cstdlib>

namespace flatsurf {

namespace {

int cyc_dist(int from, int to, int n) { return ((to - from) % n + n) % n; }

}  // namespace

Refiner::Refiner(Surface s) : s_(std::move(s)) {
  if (s_.prov.empty()) s_.assign_fresh_roots();
  for (int p = 0; p < static_cast<int>(s_.polys.size()); ++p)
    for (int e = 0; e < s_.polys[p].size(); ++e) {
      EdgeRef r{p, e};
      id_of_[r] = next_id_;
      ref_of_[next_id_] = r;
      ++next_id_;
    }
}

long Refiner::id_of(const EdgeRef& e) const {
  auto it = id_of_.find(e);
  if (it == id_of_.end()) throw Error("internal", "edge has no id");
  return it->second;
}

EdgeRef Refiner::ref_of(long id) const {
  auto it = ref_of_.find(id);
  if (it == ref_of_.end()) throw Error("internal", "id not alive");
  return it->second;
}

bool Refiner::id_alive(long id) const { return ref_of_.count(id) > 0; }

std::vector<long> Refiner::descendants(long id) const {
  if (id_alive(id)) return {id};
  auto it = children_.find(id);
  if (it == children_.end()) throw Error("internal", "unknown edge id");
  auto first = descendants(it->second.first);
  auto second = descendants(it->second.second);
  first.insert(first.end(), second.begin(), second.end());
  return first;
}

int Refiner::track_corner(const CornerRef& c) {
  corners_.push_back(c);
  return static_cast<int>(corners_.size()) - 1;
}

CornerRef Refiner::tracked_corner(int handle) const { return corners_.at(handle); }

void Refiner::renumber(const std::map<EdgeRef, EdgeRef>& edge_map,
                       const std::map<CornerRef, CornerRef>& corner_map,
                       const std::vector<std::pair<EdgeRef, long>>& new_edges) {
  std::map<EdgeRef, long> new_id_of;
  std::map<long, EdgeRef> new_ref_of;
  for (const auto& [old_ref, id] : id_of_) {
    auto it = edge_map.find(old_ref);
    if (it == edge_map.end()) {  // untouched
      new_id_of[old_ref] = id;
      new_ref_of[id] = old_ref;
    } else if (it->second.poly >= 0) {
      new_id_of[it->second] = id;
      new_ref_of[id] = it->second;
    }
    // refs mapped to {-1,-1} are retired (handled via children_)
  }
  for (const auto& [ref, id] : new_edges) {
    new_id_of[ref] = id;
    new_ref_of[id] = ref;
  }
  id_of_ = std::move(new_id_of);
  ref_of_ = std::move(new_ref_of);
  for (auto& c : corners_) {
    auto it = corner_map.find(c);
    if (it != corner_map.end()) c = it->second;
  }
}

void Refiner::remap_marks(const std::map<CornerRef, CornerRef>& corner_map,
                          const std::vector<std::pair<CornerRef, CornerRef>>& duplicated) {
  auto remap_set = [&](std::set<CornerRef>& set) {
    std::set<CornerRef> out;
    for (const auto& c : set) {
      auto it = corner_map.find(c);
      out.insert(it == corner_map.end() ? c : it->second);
      for (const auto& [orig, dup] : duplicated)
        if (orig == c) out.insert(dup);
    }
    set = std::move(out);
  };
  remap_set(s_.marked);
  remap_set(s_.pole_marked);
}

std::pair<long, long> Refiner::split_edge(const EdgeRef& e, const Rat& t) {
  if (!(t > Rat(0) && t < Rat(1))) throw Error("internal", "split fraction out of range");
  int sign = 1;
  EdgeRef f = glued_partner(s_, e, &sign);
  long e_id = id_of(e), f_id = id_of(f);

  std::map<int, std::vector<int>> splits;  // poly -> sorted old edge indices
  splits[e.poly].push_back(e.edge);
  splits[f.poly].push_back(f.edge);
  for (auto& [p, v] : splits) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }

  auto shift_edge = [&](const EdgeRef& r) -> int {
    auto it = splits.find(r.poly);
    if (it == splits.end()) return r.edge;
    int c = 0;
    for (int s : it->second)
      if (s < r.edge) ++c;
    return r.edge + c;
  };
  auto shift_corner = [&](const CornerRef& r) -> int {
    auto it = splits.find(r.poly);
    if (it == splits.end()) return r.corner;
    int c = 0;
    for (int s : it->second)
      if (s < r.corner) ++c;
    return r.corner + c;
  };

  std::map<EdgeRef, EdgeRef> edge_map;
  std::map<CornerRef, CornerRef> corner_map;
  for (auto& [p, v] : splits) {
    for (int k = 0; k < s_.polys[p].size(); ++k) {
      EdgeRef old{p, k};
      if (std::find(v.begin(), v.end(), k) != v.end())
        edge_map[old] = EdgeRef{-1, -1};  // retired, replaced by halves
      else
        edge_map[old] = EdgeRef{p, shift_edge(old)};
      corner_map[CornerRef{p, k}] = CornerRef{p, shift_corner(CornerRef{p, k})};
    }
  }

  Vec ve = s_.edge_vec(e), vf = s_.edge_vec(f);
  Vec ve1 = t * ve, ve2 = (Rat(1) - t) * ve;
  Vec vf1 = (Rat(1) - t) * vf, vf2 = t * vf;

  for (auto& [p, v] : splits) {
    std::vector<Vec> edges;
    for (int k = 0; k < s_.polys[p].size(); ++k) {
      EdgeRef old{p, k};
      if (old == e) {
        edges.push_back(ve1);
        edges.push_back(ve2);
      } else if (old == f) {
        edges.push_back(vf1);
        edges.push_back(vf2);
      } else {
        edges.push_back(s_.polys[p].edges[k]);
      }
    }
    s_.polys[p].edges = std::move(edges);
  }

  EdgeRef e1{e.poly, shift_edge(e)}, e2{e.poly, shift_edge(e) + 1};
  EdgeRef f1{f.poly, shift_edge(f)}, f2{f.poly, shift_edge(f) + 1};

  long e1_id = next_id_++, e2_id = next_id_++, f1_id = next_id_++, f2_id = next_id_++;
  children_[e_id] = {e1_id, e2_id};
  children_[f_id] = {f1_id, f2_id};

  std::vector<Gluing> gl;
  for (const auto& g : s_.gluings) {
    if ((g.a == e && g.b == f) || (g.a == f && g.b == e)) continue;
    auto remap = [&](const EdgeRef& r) {
      auto it = edge_map.find(r);
      return it == edge_map.end() ? r : it->second;
    };
    gl.push_back(Gluing{remap(g.a), remap(g.b), g.sign});
  }
  gl.push_back(Gluing{e1, f2, sign});
  gl.push_back(Gluing{e2, f1, sign});
  s_.gluings = std::move(gl);

  remap_marks(corner_map, {});
  renumber(edge_map, corner_map,
           {{e1, e1_id}, {e2, e2_id}, {f1, f1_id}, {f2, f2_id}});
  return {e1_id, e2_id};
}

std::pair<long, long> Refiner::cut_polygon(int poly, int ci, int cj) {
  int n = s_.polys[poly].size();
  int m = cyc_dist(ci, cj, n);
  if (ci == cj || m == 1 || m == n - 1)
    throw Error("internal", "cut chord must join non-adjacent corners");
  auto pos = s_.polys[poly].corner_positions();
  Vec chord = pos[cj] - pos[ci];
  if (chord.is_zero()) throw Error("internal", "cut chord has zero length");

  Polygon A, B;
  A.id = s_.polys[poly].id;
  B.id = s_.polys[poly].id + "." + std::to_string(cut_counter_++);
  while (s_.poly_index(B.id) >= 0) B.id += "x";
  for (int k = 0; k < m; ++k) A.edges.push_back(s_.polys[poly].edges[(ci + k) % n]);
  A.edges.push_back(-chord);
  for (int k = 0; k < n - m; ++k) B.edges.push_back(s_.polys[poly].edges[(cj + k) % n]);
  B.edges.push_back(chord);
  if (A.signed_area() <= Rat(0) || B.signed_area() <= Rat(0))
    throw Error("internal", "cut produced a non-positive piece");

  int nb = static_cast<int>(s_.polys.size());
  std::map<EdgeRef, EdgeRef> edge_map;
  std::map<CornerRef, CornerRef> corner_map;
  for (int k = 0; k < n; ++k) {
    int da = cyc_dist(ci, k, n);
    if (da < m)
      edge_map[EdgeRef{poly, k}] = EdgeRef{poly, da};
    else
      edge_map[EdgeRef{poly, k}] = EdgeRef{nb, cyc_dist(cj, k, n)};
  }
  std::vector<std::pair<CornerRef, CornerRef>> duplicated;
  for (int k = 0; k < n; ++k) {
    int da = cyc_dist(ci, k, n);
    if (da == 0) {
      corner_map[CornerRef{poly, k}] = CornerRef{poly, 0};
      duplicated.push_back({CornerRef{poly, k}, CornerRef{nb, n - m}});
    } else if (da < m) {
      corner_map[CornerRef{poly, k}] = CornerRef{poly, da};
    } else if (da == m) {
      corner_map[CornerRef{poly, k}] = CornerRef{poly, m};
      duplicated.push_back({CornerRef{poly, k}, CornerRef{nb, 0}});
    } else {
      corner_map[CornerRef{poly, k}] = CornerRef{nb, cyc_dist(cj, k, n)};
    }
  }

  // pieces re-base their charts: A at old pos[ci], B at old pos[cj]
  CellProvenance pprov = s_.prov.empty() ? CellProvenance{} : s_.prov[poly];
  bool have_prov = !s_.prov.empty();
  s_.polys[poly] = std::move(A);
  s_.polys.push_back(std::move(B));
  if (have_prov) {
    s_.prov[poly] = composed_prov(pprov, ChartMap{1, -pos[ci]});
    s_.prov.push_back(composed_prov(pprov, ChartMap{1, -pos[cj]}));
  }

  for (auto& g : s_.gluings) {
    auto remap = [&](EdgeRef& r) {
      auto it = edge_map.find(r);
      if (it != edge_map.end()) r = it->second;
    };
    remap(g.a);
    remap(g.b);
  }
  EdgeRef chordA{poly, m}, chordB{nb, n - m};
  s_.gluings.push_back(Gluing{chordA, chordB, 1});

  long a_id = next_id_++, b_id = next_id_++;
  remap_marks(corner_map, duplicated);
  renumber(edge_map, corner_map, {{chordA, a_id}, {chordB, b_id}});
  return {a_id, b_id};
}

void Refiner::triangulate_all() {
  std::vector<int> work;
  for (int p = 0; p < static_cast<int>(s_.polys.size()); ++p) work.push_back(p);
  while (!work.empty()) {
    int p = work.back();
    work.pop_back();
    while (s_.polys[p].size() > 3) {
      int n = s_.polys[p].size();
      auto pos = s_.polys[p].corner_positions();
      int ear = -1;
      for (int k = 0; k < n && ear < 0; ++k) {
        const Vec& prev = s_.polys[p].edges[(k + n - 1) % n];
        const Vec& next = s_.polys[p].edges[k];
        if (!(cross(prev, next) > Rat(0))) continue;
        Vec a = pos[(k + n - 1) % n], b = pos[k], c = pos[(k + 1) % n];
        bool empty = true;
        for (int j = 0; j < n && empty; ++j) {
          if (j == k || j == (k + n - 1) % n || j == (k + 1) % n) continue;
          const Vec& q = pos[j];
          if (sgn(cross(b - a, q - a)) >= 0 && sgn(cross(c - b, q - b)) >= 0 &&
              sgn(cross(a - c, q - c)) >= 0)
            empty = false;
        }
        if (empty) ear = k;
      }
      if (ear < 0) throw Error("internal", "no ear found in polygon " + s_.polys[p].id);
      cut_polygon(p, (ear + n - 1) % n, (ear + 1) % n);
      work.push_back(static_cast<int>(s_.polys.size()) - 1);
      // p is now the clipped ear triangle
    }
  }
}

// --- tracing ---------------------------------------------------------------

bool corner_sector_contains(const Surface& s, const CornerRef& c, const Vec& d) {
  int n = s.polys[c.poly].size();
  const Vec& out = s.polys[c.poly].edges[c.corner];
  Vec in_rev = -s.polys[c.poly].edges[(c.corner + n - 1) % n];
  return same_ray(d, out) || in_sector_open(out, in_rev, d);
}

Int default_budget(const Surface& s) {
  if (const char* env = std::getenv("FLATDIA_BUDGET")) return Int(env);
  Int lcm(1);
  long edges = 0;
  for (const auto& p : s.polys) {
    edges += p.size();
    for (const auto& e : p.edges) {
      lcm = int_lcm(lcm, den(e.x));
      lcm = int_lcm(lcm, den(e.y));
    }
  }
  return Int(4) * lcm * Int(edges);
}

namespace {

struct VertexWalkResult {
  CornerRef corner;
  Vec dir;
};

VertexWalkResult find_outgoing_corner(const Surface& s, const CornerRef& arrival, Vec d) {
  auto idx = edge_gluing_index(s);
  CornerRef c = arrival;
  Vec dir = d;
  for (size_t steps = 0; steps < 4 * idx.size() + 4; ++steps) {
    if (corner_sector_contains(s, c, dir)) return {c, dir};
    int n = s.polys[c.poly].size();
    EdgeRef incoming{c.poly, (c.corner + n - 1) % n};
    auto it = idx.find(incoming);
    const auto& gl = s.gluings[it->second.first];
    EdgeRef other = it->second.second == 0 ? gl.b : gl.a;
    if (gl.sign == -1) dir = -dir;
    c = CornerRef{other.poly, other.edge};
  }
  throw Error("internal", "direction not found in any sector around vertex");
}

}  // namespace

TraceOutcome trace_on(Refiner& r, const CornerRef& start, const Vec& dir, const Int& budget) {
  if (dir.is_zero()) throw Error("bad-direction", "zero direction");
  if (!corner_sector_contains(r.surface(), start, dir))
    throw Error("bad-direction", "direction not in the corner's sector");

  TraceOutcome out;
  int start_handle = r.track_corner(start);
  {
    auto va = analyze_vertices(r.surface());
    out.start_corner = start;
    out.crossings = 0;
    // remembered for closed-leaf detection below
  }
  bool start_special;
  {
    auto va = analyze_vertices(r.surface());
    start_special = va.classes[va.class_of.at(start)].is_special();
  }

  CornerRef c = start;
  Vec d = dir;
  int sign_to_start = 1;
  Vec holonomy{};
  Int remaining = budget;

  auto finish = [&](TraceOutcome::Status st, const CornerRef& end) {
    out.status = st;
    out.end_corner = end;
    out.holonomy = holonomy;
    out.start_corner = r.tracked_corner(start_handle);
    return out;
  };

  for (;;) {
    if (remaining <= 0) return finish(TraceOutcome::Status::BudgetExceeded, c);
    remaining -= 1;
    out.crossings += 1;

    const Surface& cur = r.surface();
    const Polygon& poly = cur.polys[c.poly];
    int n = poly.size();
    CornerRef arrival;

    if (same_ray(d, poly.edges[c.corner])) {
      // travel along an existing edge
      out.path.push_back(r.id_of(EdgeRef{c.poly, c.corner}));
      holonomy += Rat(sign_to_start) * poly.edges[c.corner];
      arrival = CornerRef{c.poly, (c.corner + 1) % n};
    } else {
      auto pos = poly.corner_positions();
      Vec x = pos[c.corner];

      Rat best_t(-1);
      int hit_corner = -1;
      for (int k = 0; k < n; ++k) {
        if (k == c.corner) continue;
        Vec to = pos[k] - x;
        if (to.is_zero()) continue;
        if (cross(d, to) == Rat(0) && dot(d, to) > Rat(0)) {
          Rat t = (d.x != Rat(0)) ? to.x / d.x : to.y / d.y;
          if (best_t < Rat(0) || t < best_t) {
            best_t = t;
            hit_corner = k;
          }
        }
      }
      Rat best_et(-1);
      int hit_edge = -1;
      Rat hit_u(0);
      for (int k = 0; k < n; ++k) {
        Vec P = pos[k];
        const Vec& e = poly.edges[k];
        Rat denom = cross(d, e);
        if (denom == Rat(0)) continue;
        Rat t = cross(P - x, e) / denom;
        Rat u = cross(P - x, d) / denom;
        if (t > Rat(0) && u > Rat(0) && u < Rat(1)) {
          if (best_et < Rat(0) || t < best_et) {
            best_et = t;
            hit_edge = k;
            hit_u = u;
          }
        }
      }
      bool corner_first = hit_corner >= 0 && (hit_edge < 0 || best_t <= best_et);
      if (!corner_first && hit_edge < 0)
        throw Error("internal", "ray failed to exit polygon");

      if (corner_first) {
        holonomy += Rat(sign_to_start) * (pos[hit_corner] - x);
        auto [aid, bid] = r.cut_polygon(c.poly, c.corner, hit_corner);
        out.path.push_back(aid);
        EdgeRef chordA = r.ref_of(aid);
        // chord A runs from the image of hit_corner back to the start corner
        arrival = CornerRef{chordA.poly, chordA.edge};
      } else {
        holonomy += Rat(sign_to_start) * (best_et * d);
        EdgeRef crossed{c.poly, hit_edge};
        auto [h1, h2] = r.split_edge(crossed, hit_u);
        EdgeRef half1 = r.ref_of(h1);
        const Surface& mid = r.surface();
        CornerRef split_corner{half1.poly,
                               (half1.edge + 1) % mid.polys[half1.poly].size()};
        // relocate the current corner (indices may have shifted)
        auto pos2 = mid.polys[c.poly].corner_positions();
        int found = -1;
        for (int k = 0; k < mid.polys[c.poly].size(); ++k)
          if (pos2[k] == x) {
            found = k;
            break;
          }
        if (found < 0) throw Error("internal", "lost corner after split");
        auto [aid, bid] = r.cut_polygon(c.poly, found, split_corner.corner);
        out.path.push_back(aid);
        EdgeRef chordA = r.ref_of(aid);
        arrival = CornerRef{chordA.poly, chordA.edge};
      }
    }

    // arrived at a vertex: stop at special points, otherwise pass through
    const Surface& now = r.surface();
    auto va = analyze_vertices(now);
    const auto& cls = va.classes[va.class_of.at(arrival)];
    if (cls.is_special())
      return finish(TraceOutcome::Status::SaddleConnection, arrival);
    if (!start_special &&
        va.class_of.at(arrival) == va.class_of.at(r.tracked_corner(start_handle)))
      return finish(TraceOutcome::Status::ClosedLeaf, arrival);

    auto w = find_outgoing_corner(now, arrival, d);
    if (!same_ray(w.dir, d)) sign_to_start = -sign_to_start;
    c = w.corner;
    d = w.dir;
  }
}

TraceResult trace_segment(const Surface& s, const CornerRef& start, const Vec& dir,
                          const Int& budget) {
  Refiner r(s);
  auto out = trace_on(r, start, dir, budget);
  if (out.status == TraceOutcome::Status::BudgetExceeded)
    throw Error("budget-exceeded", "trace exceeded " + budget.str() + " crossings");
  return TraceResult{r.take(), out};
}

TraceResult trace_segment(const Surface& s, const CornerRef& start, const Vec& dir) {
  return trace_segment(s, start, dir, default_budget(s));
}

}  // namespace flatsurf
