#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "flatsurf/corpus.hpp"
#include "flatsurf/io.hpp"
#include "flatsurf/refine.hpp"
#include "flatsurf/stratum.hpp"
#include "flatsurf/surface.hpp"

using namespace flatsurf;

TEST_CASE("torus validates as translation surface of genus 1") {
  auto t = corpus::torus();
  auto rep = validate(t);
  for (const auto& i : rep.issues) CAPTURE(i.code + " " + i.detail);
  CHECK(rep.ok());
  CHECK(rep.kind == Kind::Translation);
  CHECK(rep.genus == 1);
  CHECK(area(t) == Rat(1));
  CHECK(holonomy_class(t) == Holonomy::Trivial);
}

TEST_CASE("pillow validates as quadratic surface with four poles") {
  auto p = corpus::pillow();
  auto rep = validate(p);
  for (const auto& i : rep.issues) CAPTURE(i.code + " " + i.detail);
  CHECK(rep.ok());
  CHECK(rep.kind == Kind::Quadratic);
  CHECK(rep.genus == 0);
  CHECK(rep.cone_angles_pi == std::vector<int>{1, 1, 1, 1});
  CHECK(holonomy_class(p) == Holonomy::Nontrivial);
  CHECK(stratum_of(p) == parse_signature("Q(-1^4)"));
}

TEST_CASE("flipping a torus gluing is caught") {
  auto t = corpus::torus();
  t.gluings[0].sign = -1;
  auto rep = validate(t);
  CHECK(!rep.ok());
  bool found = false;
  for (const auto& i : rep.issues)
    if (i.code == "vector-mismatch" || i.code == "bad-angle") found = true;
  CHECK(found);
}

TEST_CASE("lshape is in H(2) with area 3") {
  auto l = corpus::lshape();
  auto rep = validate(l);
  for (const auto& i : rep.issues) CAPTURE(i.code + " " + i.detail);
  CHECK(rep.ok());
  CHECK(rep.genus == 2);
  CHECK(area(l) == Rat(3));
  CHECK(stratum_of(l) == parse_signature("H(2)"));
}

TEST_CASE("h11 staircase is in H(1,1)") {
  auto s = corpus::h11_two_cylinders();
  auto rep = validate(s);
  for (const auto& i : rep.issues) CAPTURE(i.code + " " + i.detail);
  CHECK(rep.ok());
  CHECK(stratum_of(s) == parse_signature("H(1,1)"));
}

TEST_CASE("pillow with marked point is Q(-1^4,0)") {
  auto p = corpus::pillow_marked();
  CHECK(stratum_of(p) == parse_signature("Q(-1,-1,-1,-1,0)"));
}

TEST_CASE("envelope demo is Q(-1^4,0) of area 2") {
  auto s = corpus::envelope_demo();
  auto rep = validate(s);
  for (const auto& i : rep.issues) CAPTURE(i.code + " " + i.detail);
  CHECK(rep.ok());
  CHECK(area(s) == Rat(2));
  CHECK(stratum_of(s) == parse_signature("Q(-1^4,0)"));
}

TEST_CASE("ladder bases land in Q(a,b,-1^{a+b+4})") {
  for (auto [a, b] : std::vector<std::pair<int, int>>{{-1, -1}, {0, -1}, {1, -1}, {0, 0}, {1, 1}}) {
    auto L = corpus::ladder_base(a, b);
    auto rep = validate(L.s);
    for (const auto& i : rep.issues) CAPTURE(i.code + " " + i.detail);
    REQUIRE(rep.ok());
    std::vector<int> orders{a, b};
    for (int i = 0; i < a + b + 4; ++i) orders.push_back(-1);
    CHECK(stratum_of(L.s) == quadratic_signature(orders));
    CHECK(rep.genus == 0);
    // labelled corners really sit on the labelled points
    auto va = analyze_vertices(L.s);
    CHECK(va.classes[va.class_of.at(L.a_corner)].angle_pi == a + 2);
    CHECK(va.classes[va.class_of.at(L.b_corner)].angle_pi == b + 2);
  }
}

TEST_CASE("disjoint union splits into components") {
  auto t = corpus::torus();
  auto p = corpus::pillow();
  Surface u;
  u.name = "union";
  u.polys = t.polys;
  u.gluings = t.gluings;
  u.marked = t.marked;
  int off = static_cast<int>(u.polys.size());
  for (const auto& poly : p.polys) u.polys.push_back(poly);
  for (auto g : p.gluings) {
    g.a.poly += off;
    g.b.poly += off;
    u.gluings.push_back(g);
  }
  auto comps = components(u);
  REQUIRE(comps.size() == 2);
  CHECK(validate(comps[0]).ok());
  CHECK(validate(comps[1]).ok());
  CHECK_THROWS_AS(holonomy_class(u), Error);
}

TEST_CASE("serialize / parse round trip") {
  for (const Surface& s : {corpus::torus(), corpus::pillow(), corpus::lshape(),
                           corpus::envelope_demo(), corpus::ladder_base(1, 1).s}) {
    auto text = serialize_surface(s);
    auto back = parse_surface_string(text);
    CHECK(serialize_surface(back) == text);
    CHECK(validate(back).ok());
    CHECK(stratum_of(back) == stratum_of(s));
  }
}

TEST_CASE("trace on torus finds the horizontal saddle connection") {
  auto t = corpus::torus();
  auto res = trace_segment(t, CornerRef{0, 0}, Vec{Rat(1), Rat(0)});
  CHECK(res.outcome.status == TraceOutcome::Status::SaddleConnection);
  CHECK(res.outcome.holonomy == Vec{Rat(1), Rat(0)});
  CHECK(res.outcome.path.size() == 1);
}

TEST_CASE("trace with zero budget reports budget-exceeded") {
  auto t = corpus::torus();
  CHECK_THROWS_WITH_AS(trace_segment(t, CornerRef{0, 0}, Vec{Rat(1), Rat(0)}, Int(0)),
                       doctest::Contains("budget-exceeded"), Error);
}

TEST_CASE("trace diagonal on lshape") {
  auto l = corpus::lshape();
  auto res = trace_segment(l, CornerRef{0, 0}, Vec{Rat(1), Rat(1)});
  CHECK(res.outcome.status == TraceOutcome::Status::SaddleConnection);
  CHECK(res.outcome.holonomy == Vec{Rat(1), Rat(1)});
  CHECK(validate(res.refined).ok());
  CHECK(area(res.refined) == Rat(3));
  CHECK(stratum_of(res.refined) == parse_signature("H(2)"));
}

TEST_CASE("trace across several squares accumulates holonomy") {
  auto l = corpus::lshape();
  auto res = trace_segment(l, CornerRef{0, 0}, Vec{Rat(2), Rat(1)});
  CHECK(res.outcome.status == TraceOutcome::Status::SaddleConnection);
  CHECK(validate(res.refined).ok());
  // refining preserves stratum and area
  CHECK(stratum_of(res.refined) == parse_signature("H(2)"));
  CHECK(area(res.refined) == Rat(3));
}

TEST_CASE("triangulation keeps invariants") {
  for (const Surface& s :
       {corpus::torus(), corpus::pillow(), corpus::lshape(), corpus::h11_two_cylinders()}) {
    Refiner r(s);
    r.triangulate_all();
    auto t = r.take();
    CHECK(validate(t).ok());
    CHECK(area(t) == area(s));
    CHECK(stratum_of(t) == stratum_of(s));
    for (const auto& p : t.polys) CHECK(p.size() == 3);
  }
}
