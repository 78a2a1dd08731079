#include "flatsurf/corpus.hpp"

namespace flatsurf::corpus {

namespace {

Polygon make_poly(const std::string& id, std::vector<Vec> edges) {
  Polygon p;
  p.id = id;
  p.edges = std::move(edges);
  return p;
}

Vec v(long x, long y) { return Vec{Rat(Int(x)), Rat(Int(y))}; }
Vec vr(Rat x, Rat y) { return Vec{std::move(x), std::move(y)}; }

}  // namespace

Surface torus() {
  Surface s = torus_unmarked();
  s.name = "torus";
  s.marked.insert({0, 0});
  return s;
}

Surface torus_unmarked() {
  Surface s;
  s.name = "torus-unmarked";
  s.polys.push_back(make_poly("t", {v(1, 0), v(0, 1), v(-1, 0), v(0, -1)}));
  s.gluings.push_back({{0, 0}, {0, 2}, 1});
  s.gluings.push_back({{0, 1}, {0, 3}, 1});
  s.assign_fresh_roots();
  return s;
}

Surface pillow() {
  Surface s;
  s.name = "pillow";
  Rat h(1, 2);
  s.polys.push_back(make_poly(
      "p", {vr(h, Rat(0)), vr(h, Rat(0)), v(0, 1), vr(-h, Rat(0)), vr(-h, Rat(0)), v(0, -1)}));
  s.gluings.push_back({{0, 0}, {0, 1}, -1});  // bottom fold
  s.gluings.push_back({{0, 3}, {0, 4}, -1});  // top fold
  s.gluings.push_back({{0, 2}, {0, 5}, 1});   // right-left
  s.assign_fresh_roots();
  return s;
}

Surface pillow_marked() {
  Surface s;
  s.name = "pillow-marked";
  Rat h(1, 2);
  s.polys.push_back(make_poly("p", {vr(h, Rat(0)), vr(h, Rat(0)), vr(Rat(0), h), vr(Rat(0), h),
                                    vr(-h, Rat(0)), vr(-h, Rat(0)), vr(Rat(0), -h),
                                    vr(Rat(0), -h)}));
  s.gluings.push_back({{0, 0}, {0, 1}, -1});  // bottom fold
  s.gluings.push_back({{0, 4}, {0, 5}, -1});  // top fold
  s.gluings.push_back({{0, 2}, {0, 7}, 1});   // right lower <-> left lower
  s.gluings.push_back({{0, 3}, {0, 6}, 1});   // right upper <-> left upper
  s.marked.insert({0, 3});                    // seam midpoint (1, 1/2) ~ (0, 1/2)
  s.assign_fresh_roots();
  return s;
}

Surface lshape() {
  Surface s;
  s.name = "lshape";
  s.polys.push_back(make_poly("L", {v(1, 0), v(1, 0), v(0, 1), v(-1, 0), v(0, 1), v(-1, 0),
                                    v(0, -1), v(0, -1)}));
  s.gluings.push_back({{0, 0}, {0, 5}, 1});  // bottom [0,1] <-> top y=2
  s.gluings.push_back({{0, 1}, {0, 3}, 1});  // bottom [1,2] <-> top y=1
  s.gluings.push_back({{0, 2}, {0, 7}, 1});  // right x=2 <-> left y in [0,1]
  s.gluings.push_back({{0, 4}, {0, 6}, 1});  // right x=1 <-> left y in [1,2]
  s.assign_fresh_roots();
  return s;
}

Surface h11_two_cylinders() {
  // The L-shape in H(2) with a fourth unit square D inserted as a simple
  // cylinder along the interior saddle connection between columns; its two
  // boundary loops carry the two zeros, so collapsing D returns to H(2).
  Surface s;
  s.name = "h11-l-plus-cyl";
  auto sq = [&](const std::string& id) {
    return make_poly(id, {v(1, 0), v(0, 1), v(-1, 0), v(0, -1)});
  };
  s.polys.push_back(sq("A"));  // 0: [0,1]^2
  s.polys.push_back(sq("B"));  // 1: [1,2]x[0,1]
  s.polys.push_back(sq("C"));  // 2: [0,1]x[1,2]
  s.polys.push_back(sq("D"));  // 3: inserted into the B column
  s.gluings.push_back({{0, 1}, {1, 3}, 1});  // A right <-> B left
  s.gluings.push_back({{0, 3}, {1, 1}, 1});  // row wrap
  s.gluings.push_back({{0, 0}, {2, 2}, 1});  // A bottom <-> C top
  s.gluings.push_back({{2, 1}, {2, 3}, 1});  // C wrap
  s.gluings.push_back({{0, 2}, {2, 0}, 1});  // A top <-> C bottom
  s.gluings.push_back({{1, 2}, {3, 0}, 1});  // B top <-> D bottom
  s.gluings.push_back({{3, 2}, {1, 0}, 1});  // D top <-> B bottom
  s.gluings.push_back({{3, 1}, {3, 3}, 1});  // D wraps
  s.assign_fresh_roots();
  return s;
}

Surface rectilinear_double(const std::string& name, const std::vector<Vec>& vertices) {
  int n = static_cast<int>(vertices.size());
  if (n < 4) throw Error("invalid-surface", "rectilinear double needs >= 4 vertices");
  Surface s;
  s.name = name;
  Polygon P, Q;
  P.id = name + "+";
  Q.id = name + "-";
  for (int i = 0; i < n; ++i) {
    Vec e = vertices[(i + 1) % n] - vertices[i];
    if (e.x != Rat(0) && e.y != Rat(0))
      throw Error("invalid-surface", "edges must be axis-aligned");
    P.edges.push_back(e);
  }
  // reflected copy, traversed in reverse to stay counterclockwise
  std::vector<Vec> refl;
  for (int k = 0; k < n; ++k) {
    const Vec& w = vertices[(n - k) % n];
    refl.push_back(Vec{w.x, -w.y});
  }
  for (int k = 0; k < n; ++k) Q.edges.push_back(refl[(k + 1) % n] - refl[k]);
  s.polys.push_back(std::move(P));
  s.polys.push_back(std::move(Q));
  for (int i = 0; i < n; ++i) {
    int sign = s.polys[0].edges[i].y == Rat(0) ? 1 : -1;
    s.gluings.push_back({{0, i}, {1, n - 1 - i}, sign});
  }
  s.assign_fresh_roots();
  return s;
}

LadderBase ladder_base(int a, int b) {
  if (a < b) {
    LadderBase L = ladder_base(b, a);
    std::swap(L.a_corner, L.b_corner);
    return L;
  }
  LadderBase L;
  if (a == -1 && b == -1) {
    L.s = rectilinear_double("base-m1m1", {v(0, 0), v(1, 0), v(1, 1), v(0, 1)});
    L.a_corner = {0, 0};
    L.b_corner = {0, 1};
  } else if (a == 0 && b == -1) {
    L.s = rectilinear_double("base-0m1",
                             {v(0, 0), vr(Rat(1, 2), Rat(0)), v(1, 0), v(1, 1), v(0, 1)});
    L.s.marked.insert({0, 1});
    L.a_corner = {0, 1};
    L.b_corner = {0, 0};
  } else if (a == 1 && b == -1) {
    L.s = rectilinear_double("base-1m1",
                             {v(0, 0), v(2, 0), v(2, 1), v(1, 1), v(1, 2), v(0, 2)});
    L.a_corner = {0, 3};
    L.b_corner = {0, 0};
  } else if (a == 0 && b == 0) {
    L.s = rectilinear_double("base-00", {v(0, 0), vr(Rat(1, 2), Rat(0)), v(1, 0), v(1, 1),
                                         vr(Rat(1, 2), Rat(1)), v(0, 1)});
    L.s.marked.insert({0, 1});
    L.s.marked.insert({0, 4});
    L.a_corner = {0, 1};
    L.b_corner = {0, 4};
  } else if (a == 1 && b == 0) {
    L.s = rectilinear_double("base-10", {v(0, 0), v(2, 0), v(2, 1), vr(Rat(3, 2), Rat(1)),
                                         v(1, 1), v(1, 2), v(0, 2)});
    L.s.marked.insert({0, 3});
    L.a_corner = {0, 4};
    L.b_corner = {0, 3};
  } else if (a == 1 && b == 1) {
    L.s = rectilinear_double("base-11", {v(0, 0), v(3, 0), v(3, 1), v(2, 1), v(2, 2), v(1, 2),
                                         v(1, 3), v(0, 3)});
    L.a_corner = {0, 3};
    L.b_corner = {0, 5};
  } else {
    throw Error("inconsistent-signature",
                "ladder_base built only for a, b in {-1, 0, 1}");
  }
  return L;
}

Surface envelope_demo() {
  Surface s;
  s.name = "envelope-demo";
  Rat h(1, 2);
  // lower square: bottom folded, top glued to the upper square
  s.polys.push_back(
      make_poly("lo", {vr(h, Rat(0)), vr(h, Rat(0)), v(0, 1), v(-1, 0), v(0, -1)}));
  // upper square: top folded
  s.polys.push_back(
      make_poly("hi", {v(1, 0), v(0, 1), vr(-h, Rat(0)), vr(-h, Rat(0)), v(0, -1)}));
  s.gluings.push_back({{0, 0}, {0, 1}, -1});  // lower fold
  s.gluings.push_back({{1, 2}, {1, 3}, -1});  // upper fold
  s.gluings.push_back({{0, 2}, {0, 4}, 1});   // lower left-right
  s.gluings.push_back({{1, 1}, {1, 4}, 1});   // upper left-right
  s.gluings.push_back({{0, 3}, {1, 0}, 1});   // interface
  s.marked.insert({1, 0});                    // marked point on the interface
  s.assign_fresh_roots();
  return s;
}

}  // namespace flatsurf::corpus
