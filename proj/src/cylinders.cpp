#include "flatsurf/cylinders.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace flatsurf {

Vec primitive_direction(const Vec& d) {
  if (d.is_zero()) throw Error("bad-direction", "zero direction");
  Int l = int_lcm(den(d.x), den(d.y));
  Int nx = num(d.x) * (l / den(d.x));
  Int ny = num(d.y) * (l / den(d.y));
  Int g = int_gcd(nx, ny);
  nx /= g;
  ny /= g;
  if (nx < 0 || (nx == 0 && ny < 0)) {
    nx = -nx;
    ny = -ny;
  }
  return Vec{Rat(nx), Rat(ny)};
}

Vec to_uw(const Vec& d, const Vec& x) {
  Rat n = dot(d, d);
  return Vec{dot(x, d) / n, cross(d, x) / n};
}

Vec from_uw(const Vec& d, const Vec& uw) {
  return Vec{uw.x * d.x - uw.y * d.y, uw.x * d.y + uw.y * d.x};
}

std::string to_string(CylinderType t) {
  switch (t) {
    case CylinderType::Simple: return "simple";
    case CylinderType::HalfSimple: return "half-simple";
    case CylinderType::Complex: return "complex";
    case CylinderType::SimpleEnvelope: return "simple-envelope";
    case CylinderType::ComplexEnvelope: return "complex-envelope";
    default: return "other";
  }
}

int Decomposition::cylinder_index(const std::string& id) const {
  for (int i = 0; i < static_cast<int>(cyls.size()); ++i)
    if (cyls[i].id == id) return i;
  return -1;
}

Rat modulus(const Cylinder& c) { return c.height / c.circumference; }

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

Rat edge_d_length(const Vec& d, const Vec& v) {
  Rat n = dot(d, d);
  Rat u = dot(v, d) / n;
  return u < Rat(0) ? -u : u;
}

Rat rat_gcd(const Rat& a, const Rat& b) {
  Int n = int_gcd(num(a) * den(b), num(b) * den(a));
  return Rat(n, den(a) * den(b));
}

}  // namespace

Decomposition decompose(const Surface& s, const Vec& direction) {
  return decompose(s, direction, default_budget(s));
}

Decomposition decompose(const Surface& s, const Vec& direction, const Int& budget) {
  require_valid(s);
  Vec d = primitive_direction(direction);

  Refiner r(s);
  std::set<long> spine;
  std::vector<std::vector<long>> paths;

  // Trace every separatrix in directions +-d from every special point. On a
  // surface with no special points (an unmarked torus) fall back to closed
  // leaves from arbitrary corners.
  bool progress = true;
  while (progress) {
    progress = false;
    const Surface& cur = r.surface();
    auto va = analyze_vertices(cur);
    bool any_special = false;
    for (const auto& vc : va.classes) any_special |= vc.is_special();
    std::vector<CornerRef> sources;
    if (any_special) {
      for (const auto& vc : va.classes)
        if (vc.is_special())
          for (const auto& c : vc.corners) sources.push_back(c);
    } else {
      // one closed leaf per connected component
      UnionFind cuf(static_cast<int>(cur.polys.size()));
      for (const auto& g : cur.gluings) cuf.unite(g.a.poly, g.b.poly);
      std::set<int> spine_roots;
      for (const auto& g : cur.gluings)
        if (spine.count(r.id_of(g.a))) spine_roots.insert(cuf.find(g.a.poly));
      for (int p = 0; p < static_cast<int>(cur.polys.size()); ++p)
        if (!spine_roots.count(cuf.find(p))) {
          sources.push_back(CornerRef{p, 0});
          break;
        }
    }
    for (const auto& c : sources) {
      for (const Vec& dir : {d, -d}) {
        if (!corner_sector_contains(cur, c, dir)) continue;
        if (same_ray(dir, cur.polys[c.poly].edges[c.corner]) &&
            spine.count(r.id_of(EdgeRef{c.poly, c.corner})))
          continue;  // separatrix already realized
        auto out = trace_on(r, c, dir, budget);
        if (out.status == TraceOutcome::Status::BudgetExceeded)
          throw Error("budget-exceeded", "separatrix did not close within budget");
        for (long id : out.path) {
          spine.insert(id);
          spine.insert(r.id_of(glued_partner(r.surface(), r.ref_of(id))));
        }
        paths.push_back(out.path);
        progress = true;
        break;
      }
      if (progress) break;
    }
  }

  Decomposition D;
  D.dir = d;
  D.refined = r.surface();

  // saddle connections: dedupe traced chains
  std::vector<std::vector<long>> chains;
  for (auto path : paths) {
    std::vector<long> norm;
    for (long id : path)
      for (long leaf : r.descendants(id)) norm.push_back(leaf);
    auto rev = norm;
    std::reverse(rev.begin(), rev.end());
    if (rev < norm) norm = rev;
    if (std::find(chains.begin(), chains.end(), norm) == chains.end()) chains.push_back(norm);
  }
  std::map<long, int> sc_of_edge;
  for (int i = 0; i < static_cast<int>(chains.size()); ++i) {
    SpineConnection sc;
    sc.id = "sc:" + std::to_string(i);
    sc.edge_ids = chains[i];
    Rat len(0);
    for (long id : chains[i]) len += edge_d_length(d, D.refined.edge_vec(r.ref_of(id)));
    sc.length = len;
    for (long id : chains[i]) sc_of_edge[id] = i;
    D.scs.push_back(std::move(sc));
  }

  const Surface& fs = D.refined;
  auto va = analyze_vertices(fs);

  for (auto& sc : D.scs) {
    EdgeRef first = r.ref_of(sc.edge_ids.front());
    EdgeRef last = r.ref_of(sc.edge_ids.back());
    int n2 = fs.polys[last.poly].size();
    int c1 = va.class_of.at(CornerRef{first.poly, first.edge});
    int c2 = va.class_of.at(CornerRef{last.poly, (last.edge + 1) % n2});
    sc.closed_loop = (c1 == c2);
  }

  // group cells into cylinders across non-spine gluings
  int npolys = static_cast<int>(fs.polys.size());
  UnionFind uf(npolys);
  for (const auto& g : fs.gluings)
    if (!sc_of_edge.count(r.id_of(g.a))) uf.unite(g.a.poly, g.b.poly);
  std::map<int, int> group_of_root;
  std::vector<std::vector<int>> groups;
  for (int p = 0; p < npolys; ++p) {
    int root = uf.find(p);
    if (!group_of_root.count(root)) {
      group_of_root[root] = static_cast<int>(groups.size());
      groups.push_back({});
    }
    groups[group_of_root[root]].push_back(p);
  }
  int ncyl = static_cast<int>(groups.size());

  D.piece_cyl.assign(npolys, -1);
  D.piece_place.assign(npolys, ChartMap{});

  std::vector<Rat> circ(ncyl), height(ncyl);

  for (int k = 0; k < ncyl; ++k) {
    std::map<int, ChartMap> place;
    std::vector<int> stack;
    int seed = *std::min_element(groups[k].begin(), groups[k].end());
    place[seed] = ChartMap{1, Vec{}};
    stack.push_back(seed);
    std::vector<Rat> wraps;
    while (!stack.empty()) {
      int p = stack.back();
      stack.pop_back();
      for (int e = 0; e < fs.polys[p].size(); ++e) {
        EdgeRef er{p, e};
        if (sc_of_edge.count(r.id_of(er))) continue;
        ChartMap cm = gluing_chart_map(fs, er);
        EdgeRef partner = glued_partner(fs, er);
        ChartMap inv = cm.inverse();
        const ChartMap& sp = place[p];
        ChartMap cand;
        cand.sign = sp.sign * inv.sign;
        Vec uw_shift = to_uw(d, inv.shift);
        cand.shift = Vec{Rat(sp.sign) * uw_shift.x + sp.shift.x,
                         Rat(sp.sign) * uw_shift.y + sp.shift.y};
        auto it = place.find(partner.poly);
        if (it == place.end()) {
          place[partner.poly] = cand;
          stack.push_back(partner.poly);
        } else {
          if (it->second.sign != cand.sign || it->second.shift.y != cand.shift.y)
            throw Error("internal", "inconsistent cylinder unrolling");
          Rat delta = cand.shift.x - it->second.shift.x;
          if (delta != Rat(0)) wraps.push_back(delta < Rat(0) ? -delta : delta);
        }
      }
    }
    if (wraps.empty()) throw Error("internal", "cylinder has no core loop");
    Rat c = wraps[0];
    for (size_t i = 1; i < wraps.size(); ++i) c = rat_gcd(c, wraps[i]);
    circ[k] = c;

    bool first = true;
    Rat wmin(0), wmax(0);
    for (int p : groups[k]) {
      auto pos = fs.polys[p].corner_positions();
      for (const auto& x : pos) {
        Vec uw = to_uw(d, x);
        Rat w = Rat(place[p].sign) * uw.y + place[p].shift.y;
        if (first || w < wmin) wmin = w;
        if (first || w > wmax) wmax = w;
        first = false;
      }
    }
    height[k] = wmax - wmin;
    if (!(height[k] > Rat(0))) throw Error("internal", "cylinder with zero height");
    for (auto& [p, cm] : place) cm.shift.y -= wmin;
    for (int p : groups[k]) {
      D.piece_cyl[p] = k;
      D.piece_place[p] = place[p];
    }
  }

  // raw arcs, origin normalization, final arc records
  struct Raw {
    long edge_id;
    int cyl, circle;
    Rat start_u, end_u;  // strip u of the edge's CCW start and end corners
    CornerRef start_corner, end_corner;
  };
  std::vector<Raw> raws;
  for (int p = 0; p < npolys; ++p) {
    int k = D.piece_cyl[p];
    auto pos = fs.polys[p].corner_positions();
    for (int e = 0; e < fs.polys[p].size(); ++e) {
      long id = r.id_of(EdgeRef{p, e});
      if (!sc_of_edge.count(id)) continue;
      auto placept = [&](const Vec& x) {
        Vec uw = to_uw(d, x);
        return Vec{Rat(D.piece_place[p].sign) * uw.x + D.piece_place[p].shift.x,
                   Rat(D.piece_place[p].sign) * uw.y + D.piece_place[p].shift.y};
      };
      int n = fs.polys[p].size();
      Vec sa = placept(pos[e]), sb = placept(pos[(e + 1) % n]);
      if (sa.y != sb.y || (sa.y != Rat(0) && sa.y != height[k]))
        throw Error("internal", "spine edge not on the strip boundary");
      Raw raw;
      raw.edge_id = id;
      raw.cyl = k;
      raw.circle = sa.y == Rat(0) ? 0 : 1;
      raw.start_u = sa.x;
      raw.end_u = sb.x;
      raw.start_corner = CornerRef{p, e};
      raw.end_corner = CornerRef{p, (e + 1) % n};
      raws.push_back(raw);
    }
  }

  std::vector<Rat> origin(ncyl, Rat(0));
  std::vector<bool> have_origin(ncyl, false);
  for (const auto& raw : raws) {
    if (raw.circle != 0) continue;
    for (const Rat& cand : {raw.start_u, raw.end_u}) {
      Rat m = rat_mod(cand, circ[raw.cyl]);
      if (!have_origin[raw.cyl] || m < origin[raw.cyl]) {
        origin[raw.cyl] = m;
        have_origin[raw.cyl] = true;
      }
    }
  }
  for (int p = 0; p < npolys; ++p)
    if (D.piece_cyl[p] >= 0) D.piece_place[p].shift.x -= origin[D.piece_cyl[p]];

  for (int k = 0; k < ncyl; ++k) {
    Cylinder cyl;
    cyl.circumference = circ[k];
    cyl.height = height[k];
    D.cyls.push_back(cyl);
  }

  for (const auto& raw : raws) {
    int k = raw.cyl;
    CylinderArc arc;
    arc.edge_id = raw.edge_id;
    arc.cyl = k;
    arc.circle = raw.circle;
    Rat su = raw.start_u - origin[k], eu = raw.end_u - origin[k];
    Rat lo = su < eu ? su : eu;
    Rat len = su < eu ? eu - su : su - eu;
    arc.u0 = rat_mod(lo, circ[k]);
    arc.u1 = arc.u0 + len;
    arc.orient = su < eu ? 1 : -1;
    if ((arc.circle == 0 && arc.orient != 1) || (arc.circle == 1 && arc.orient != -1))
      throw Error("internal", "arc orientation convention violated");
    arc.sc = sc_of_edge.at(raw.edge_id);
    int idx = static_cast<int>(D.arcs.size());
    D.arcs.push_back(arc);
    auto& cyl = D.cyls[k];
    (arc.circle == 0 ? cyl.bottom_arcs : cyl.top_arcs).push_back(idx);

    // breakpoint at the arc's low-u end
    BreakpointInfo bp;
    bp.u = arc.u0;
    CornerRef at_low = arc.orient == 1 ? raw.start_corner : raw.end_corner;
    bp.cls = va.class_of.at(at_low);
    const auto& vc = va.classes[bp.cls];
    bp.special = vc.is_special();
    bp.marked = vc.marked;
    bp.pole_marked = vc.pole_marked;
    bp.angle_pi = vc.angle_pi;
    (arc.circle == 0 ? cyl.bp_bottom : cyl.bp_top).push_back(bp);
  }

  for (int k = 0; k < ncyl; ++k) {
    auto& cyl = D.cyls[k];
    auto by_u = [&](int i, int j) { return D.arcs[i].u0 < D.arcs[j].u0; };
    std::sort(cyl.bottom_arcs.begin(), cyl.bottom_arcs.end(), by_u);
    std::sort(cyl.top_arcs.begin(), cyl.top_arcs.end(), by_u);
    auto bp_lt = [](const BreakpointInfo& a, const BreakpointInfo& b) { return a.u < b.u; };
    std::sort(cyl.bp_bottom.begin(), cyl.bp_bottom.end(), bp_lt);
    std::sort(cyl.bp_top.begin(), cyl.bp_top.end(), bp_lt);

    auto build_word = [&](const std::vector<int>& arcs, const std::vector<BreakpointInfo>& bps,
                          std::vector<int>& word) {
      Rat total(0);
      for (int ai : arcs) total += D.arcs[ai].u1 - D.arcs[ai].u0;
      if (total != cyl.circumference)
        throw Error("internal", "circle arcs do not tile the circle");
      bool any_special = false;
      for (const auto& bp : bps) any_special |= bp.special;
      if (!any_special) {
        if (!arcs.empty()) word.push_back(D.arcs[arcs.front()].sc);
        return;
      }
      int cur = -1;
      for (int ai : arcs) {
        const auto& arc = D.arcs[ai];
        bool at_special = false;
        for (const auto& bp : bps)
          if (bp.u == arc.u0 && bp.special) at_special = true;
        if (at_special || cur < 0) {
          word.push_back(arc.sc);
          cur = arc.sc;
        }
      }
      // the first u-sorted arc may be the wrapped tail of the last traversal,
      // in which case the leading entry duplicates the final one
      if (!arcs.empty() && word.size() > 1) {
        bool first_special = false;
        for (const auto& bp : bps)
          if (bp.u == D.arcs[arcs.front()].u0 && bp.special) first_special = true;
        if (!first_special) word.erase(word.begin());
      }
    };
    build_word(cyl.bottom_arcs, cyl.bp_bottom, cyl.word_bottom);
    build_word(cyl.top_arcs, cyl.bp_top, cyl.word_top);

    Rat tw(0);
    bool have = false;
    for (const auto& bp : cyl.bp_top)
      if (bp.special && (!have || bp.u < tw)) {
        tw = bp.u;
        have = true;
      }
    cyl.twist = have ? rat_mod(tw, cyl.circumference) : Rat(0);
  }

  std::ostringstream dirname;
  dirname << to_string(d.x) << "," << to_string(d.y);
  for (int k = 0; k < ncyl; ++k)
    D.cyls[k].id = "cyl:" + dirname.str() + ":" + std::to_string(k);

  Rat total(0);
  Rat n = dot(d, d);
  for (const auto& cyl : D.cyls) total += cyl.circumference * cyl.height * n;
  if (total != area(s)) throw Error("internal", "decomposition does not partition the area");

  D.rebuilt = rebuild_from_normal_form(D);
  return D;
}

CylinderType classify_cylinder(const Decomposition& d, int cyl) {
  const auto& c = d.cyls.at(cyl);
  auto shape = [&](const std::vector<int>& word) {
    std::map<int, int> mult;
    for (int sc : word) mult[sc]++;
    int distinct = static_cast<int>(mult.size());
    int maxmult = 0;
    for (auto& [k2, v] : mult) maxmult = std::max(maxmult, v);
    return std::make_pair(distinct, maxmult);
  };
  auto b = shape(c.word_bottom), t = shape(c.word_top);
  auto is_single = [](std::pair<int, int> s) { return s.first == 1 && s.second == 1; };
  auto is_two = [](std::pair<int, int> s) { return s.first == 2 && s.second == 1; };
  auto is_folded = [](std::pair<int, int> s) { return s.first == 1 && s.second == 2; };
  if (is_single(b) && is_single(t)) return CylinderType::Simple;
  if ((is_single(b) && is_two(t)) || (is_two(b) && is_single(t))) return CylinderType::HalfSimple;
  if (is_two(b) && is_two(t)) return CylinderType::Complex;
  if ((is_single(b) && is_folded(t)) || (is_folded(b) && is_single(t)))
    return CylinderType::SimpleEnvelope;
  if ((is_two(b) && is_folded(t)) || (is_folded(b) && is_two(t)))
    return CylinderType::ComplexEnvelope;
  return CylinderType::Other;
}

std::optional<LocatedPoint> locate_in_rebuilt(const Decomposition& d, int piece,
                                              const Vec& chart_point) {
  if (piece < 0 || piece >= static_cast<int>(d.piece_cyl.size())) return std::nullopt;
  int k = d.piece_cyl[piece];
  if (k < 0) return std::nullopt;
  const auto& pl = d.piece_place[piece];
  Vec uw = to_uw(d.dir, chart_point);
  Vec strip{Rat(pl.sign) * uw.x + pl.shift.x, Rat(pl.sign) * uw.y + pl.shift.y};
  strip.x = rat_mod(strip.x, d.cyls[k].circumference);
  return LocatedPoint{k, from_uw(d.dir, strip)};
}

// --- rebuild from the normal form -------------------------------------------

Surface rebuild_from_normal_form(const Decomposition& D) {
  const Vec& d = D.dir;
  int ncyl = static_cast<int>(D.cyls.size());

  // Material walk data for one side of a spine edge.
  struct Side {
    int cyl, circle;
    Rat u0, u1;  // u0 in [0,c), u1 = u0 + len (may exceed c)
    Rat len() const { return u1 - u0; }
    // circle position of material parameter t (t from the side's CCW start)
    Rat pos(Rat t, const Rat& c, bool from_low) const {
      Rat p = from_low ? u0 + t : u1 - t;
      return rat_mod(p, c);
    }
  };
  std::map<long, std::vector<Side>> sides;
  for (const auto& arc : D.arcs)
    sides[arc.edge_id].push_back(Side{arc.cyl, arc.circle, arc.u0, arc.u1});

  // Cut sets per circle: arc endpoints and wrap points, then saturated with
  // the mirrored cuts of partner sides so sub-edge subdivisions match.
  std::vector<std::set<Rat>> bot_cuts(ncyl), top_cuts(ncyl);
  auto add_cut = [&](int k, int circle, const Rat& u) {
    Rat m = rat_mod(u, D.cyls[k].circumference);
    (circle == 0 ? bot_cuts : top_cuts)[k].insert(m);
  };
  for (int k = 0; k < ncyl; ++k) {
    add_cut(k, 0, Rat(0));
    add_cut(k, 1, Rat(0));
  }
  for (const auto& arc : D.arcs) {
    add_cut(arc.cyl, arc.circle, arc.u0);
    add_cut(arc.cyl, arc.circle, arc.u1);
  }
  // t-cuts of one side: positions of existing cuts interior to its interval
  auto t_cuts = [&](const Side& s) {
    std::set<Rat> ts;
    const Rat c = D.cyls[s.cyl].circumference;
    const auto& cuts = (s.circle == 0 ? bot_cuts : top_cuts)[s.cyl];
    for (const Rat& q : cuts) {
      for (int wrap = 0; wrap < 2; ++wrap) {
        Rat lift = q + Rat(wrap) * c;
        if (lift > s.u0 && lift < s.u1) {
          bool from_low = s.circle == 0;
          Rat t = from_low ? lift - s.u0 : s.u1 - lift;
          ts.insert(t);
        }
      }
    }
    ts.insert(Rat(0));
    ts.insert(s.len());
    return ts;
  };
  // saturate: mirror each side's t-cuts onto its partner (t' = len - t)
  for (int pass = 0;; ++pass) {
    bool changed = false;
    for (auto& [id, ss] : sides) {
      if (ss.size() != 2) throw Error("internal", "spine edge without two sides");
      Rat len = ss[0].len();
      if (ss[1].len() != len) throw Error("internal", "side lengths disagree");
      auto t0 = t_cuts(ss[0]), t1 = t_cuts(ss[1]);
      std::set<Rat> want;
      for (const Rat& t : t0) want.insert(t);
      for (const Rat& t : t1) want.insert(len - t);
      for (int i = 0; i < 2; ++i) {
        const Side& s = ss[i];
        for (const Rat& t : want) {
          Rat tt = i == 0 ? t : len - t;
          bool from_low = s.circle == 0;
          Rat p = s.pos(tt, D.cyls[s.cyl].circumference, from_low);
          auto& cuts = (s.circle == 0 ? bot_cuts : top_cuts)[s.cyl];
          if (!cuts.count(p)) {
            cuts.insert(p);
            changed = true;
          }
        }
      }
    }
    if (!changed) break;
    if (pass > 10000) throw Error("internal", "cut saturation did not converge");
  }

  // rectangles
  Surface out;
  out.name = D.refined.name;
  std::vector<std::vector<Rat>> bcuts(ncyl), tcuts(ncyl);
  std::vector<std::map<Rat, int>> bot_edge_at(ncyl), top_edge_at(ncyl);
  std::vector<int> right_edge(ncyl), left_edge(ncyl);
  for (int k = 0; k < ncyl; ++k) {
    const auto& cyl = D.cyls[k];
    bcuts[k] = std::vector<Rat>(bot_cuts[k].begin(), bot_cuts[k].end());
    tcuts[k] = std::vector<Rat>(top_cuts[k].begin(), top_cuts[k].end());
    bcuts[k].push_back(cyl.circumference);
    tcuts[k].push_back(cyl.circumference);
    Polygon P;
    P.id = "c" + std::to_string(k);
    int idx = 0;
    for (size_t i = 0; i + 1 < bcuts[k].size(); ++i) {
      P.edges.push_back(from_uw(d, Vec{bcuts[k][i + 1] - bcuts[k][i], Rat(0)}));
      bot_edge_at[k][bcuts[k][i]] = idx++;
    }
    right_edge[k] = idx++;
    P.edges.push_back(from_uw(d, Vec{Rat(0), cyl.height}));
    for (size_t i = tcuts[k].size(); i-- > 1;) {
      P.edges.push_back(from_uw(d, Vec{tcuts[k][i - 1] - tcuts[k][i], Rat(0)}));
      top_edge_at[k][tcuts[k][i - 1]] = idx++;
    }
    left_edge[k] = idx++;
    P.edges.push_back(from_uw(d, Vec{Rat(0), -cyl.height}));
    out.polys.push_back(std::move(P));
  }
  out.assign_fresh_roots();
  for (int k = 0; k < ncyl; ++k)
    out.gluings.push_back({{k, right_edge[k]}, {k, left_edge[k]}, 1});

  // arc gluings via the material walk
  for (const auto& [id, ss] : sides) {
    const Side& s1 = ss[0];
    const Side& s2 = ss[1];
    Rat len = s1.len();
    // collect shared material cuts (in side1's t-parameter)
    std::set<Rat> ts;
    for (const Rat& t : t_cuts(s1)) ts.insert(t);
    for (const Rat& t : t_cuts(s2)) ts.insert(len - t);
    std::vector<Rat> tv(ts.begin(), ts.end());
    auto edge_at_pos = [&](const Side& s, const Rat& lo_pos, EdgeRef& e) {
      const auto& at = (s.circle == 0 ? bot_edge_at : top_edge_at)[s.cyl];
      auto it = at.find(lo_pos);
      if (it == at.end()) throw Error("internal", "missing sub-edge at cut");
      e = EdgeRef{s.cyl, it->second};
    };
    for (size_t i = 0; i + 1 < tv.size(); ++i) {
      Rat ta = tv[i], tb = tv[i + 1];
      // side1 piece
      bool low1 = s1.circle == 0;
      Rat p1a = s1.pos(ta, D.cyls[s1.cyl].circumference, low1);
      Rat p1b = s1.pos(tb, D.cyls[s1.cyl].circumference, low1);
      Rat lo1 = low1 ? p1a : p1b;
      // handle the wrap: the low position of the piece in [0, c)
      EdgeRef e1;
      edge_at_pos(s1, lo1, e1);
      // side2 piece at t' = len - t
      bool low2 = s2.circle == 0;
      Rat q1 = s2.pos(len - tb, D.cyls[s2.cyl].circumference, low2);
      Rat q2 = s2.pos(len - ta, D.cyls[s2.cyl].circumference, low2);
      Rat lo2 = low2 ? q1 : q2;
      EdgeRef e2;
      edge_at_pos(s2, lo2, e2);
      const Vec& v1 = out.polys[e1.poly].edges[e1.edge];
      const Vec& v2 = out.polys[e2.poly].edges[e2.edge];
      int sign;
      if (v2 == -v1)
        sign = 1;
      else if (v2 == v1)
        sign = -1;
      else
        throw Error("internal", "rebuilt arc pieces have mismatched vectors");
      out.gluings.push_back({e1, e2, sign});
    }
  }

  // marks at breakpoints
  for (int k = 0; k < ncyl; ++k) {
    const auto& cyl = D.cyls[k];
    int nk = out.polys[k].size();
    for (const auto& bp : cyl.bp_bottom) {
      if (!bp.marked && !bp.pole_marked) continue;
      auto it = bot_edge_at[k].find(bp.u);
      if (it == bot_edge_at[k].end()) throw Error("internal", "bottom breakpoint not a corner");
      CornerRef c{k, it->second};
      if (bp.marked) out.marked.insert(c);
      if (bp.pole_marked) out.pole_marked.insert(c);
    }
    for (const auto& bp : cyl.bp_top) {
      if (!bp.marked && !bp.pole_marked) continue;
      auto it = top_edge_at[k].find(bp.u);
      if (it == top_edge_at[k].end()) throw Error("internal", "top breakpoint not a corner");
      CornerRef c{k, (it->second + 1) % nk};
      if (bp.marked) out.marked.insert(c);
      if (bp.pole_marked) out.pole_marked.insert(c);
    }
  }
  return out;
}

Decomposition deform_decomposition(const Decomposition& d, const std::vector<int>& cyls,
                                   const Rat& shear, const Rat& dilate) {
  if (!(dilate > Rat(0))) throw Error("dilate-nonpositive", to_string(dilate));
  Decomposition out = d;
  for (int k : cyls) {
    auto& cyl = out.cyls.at(k);
    Rat delta = rat_mod(shear * cyl.height, cyl.circumference);
    cyl.height = dilate * cyl.height;
    for (int ai : cyl.top_arcs) {
      auto& arc = out.arcs[ai];
      Rat len = arc.u1 - arc.u0;
      arc.u0 = rat_mod(arc.u0 + delta, cyl.circumference);
      arc.u1 = arc.u0 + len;
    }
    for (auto& bp : cyl.bp_top) bp.u = rat_mod(bp.u + delta, cyl.circumference);
    auto by_u = [&](int i, int j) { return out.arcs[i].u0 < out.arcs[j].u0; };
    std::sort(cyl.top_arcs.begin(), cyl.top_arcs.end(), by_u);
    std::sort(cyl.bp_top.begin(), cyl.bp_top.end(),
              [](const auto& a, const auto& b) { return a.u < b.u; });
    Rat tw(0);
    bool have = false;
    for (const auto& bp : cyl.bp_top)
      if (bp.special && (!have || bp.u < tw)) {
        tw = bp.u;
        have = true;
      }
    cyl.twist = have ? tw : rat_mod(cyl.twist + delta, cyl.circumference);
  }
  // deformations leave the refined presentation behind; only the rebuilt
  // surface is meaningful downstream
  out.rebuilt = rebuild_from_normal_form(out);
  return out;
}

Surface cylinder_deform(const Decomposition& d, const std::vector<int>& cyls, const Rat& shear,
                        const Rat& dilate) {
  return deform_decomposition(d, cyls, shear, dilate).rebuilt;
}

}  // namespace flatsurf
