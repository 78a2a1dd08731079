#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "flatsurf/corpus.hpp"
#include "flatsurf/cylinders.hpp"
#include "flatsurf/stratum.hpp"

#include <algorithm>

using namespace flatsurf;

namespace {

Vec hdir() { return Vec{Rat(1), Rat(0)}; }

std::vector<std::pair<Rat, Rat>> ch_pairs(const Decomposition& d) {
  std::vector<std::pair<Rat, Rat>> out;
  for (const auto& c : d.cyls) out.push_back({c.circumference, c.height});
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("torus horizontal: one cylinder, simple") {
  auto d = decompose(corpus::torus(), hdir());
  REQUIRE(d.cyls.size() == 1);
  CHECK(d.cyls[0].circumference == Rat(1));
  CHECK(d.cyls[0].height == Rat(1));
  CHECK(d.cyls[0].word_bottom.size() == 1);
  CHECK(d.cyls[0].word_top.size() == 1);
  CHECK(classify_cylinder(d, 0) == CylinderType::Simple);
  CHECK(validate(d.rebuilt).ok());
  CHECK(stratum_of(d.rebuilt) == stratum_of(corpus::torus()));
}

TEST_CASE("lshape horizontal: two cylinders (2,1) and (1,1)") {
  auto d = decompose(corpus::lshape(), hdir());
  REQUIRE(d.cyls.size() == 2);
  auto pairs = ch_pairs(d);
  CHECK(pairs[0] == std::make_pair(Rat(1), Rat(1)));
  CHECK(pairs[1] == std::make_pair(Rat(2), Rat(1)));
  CHECK(validate(d.rebuilt).ok());
  CHECK(stratum_of(d.rebuilt) == parse_signature("H(2)"));
  CHECK(area(d.rebuilt) == Rat(3));
}

TEST_CASE("pillow horizontal: one folded/folded cylinder -> Other") {
  auto d = decompose(corpus::pillow(), hdir());
  REQUIRE(d.cyls.size() == 1);
  CHECK(d.cyls[0].circumference == Rat(1));
  CHECK(d.cyls[0].height == Rat(1));
  // each boundary is a single saddle connection of multiplicity 2
  CHECK(d.cyls[0].word_bottom.size() == 2);
  CHECK(d.cyls[0].word_bottom[0] == d.cyls[0].word_bottom[1]);
  CHECK(d.cyls[0].word_top.size() == 2);
  CHECK(d.cyls[0].word_top[0] == d.cyls[0].word_top[1]);
  CHECK(classify_cylinder(d, 0) == CylinderType::Other);
  CHECK(validate(d.rebuilt).ok());
  CHECK(stratum_of(d.rebuilt) == parse_signature("Q(-1^4)"));
}

TEST_CASE("envelope demo: two simple envelopes") {
  auto d = decompose(corpus::envelope_demo(), hdir());
  REQUIRE(d.cyls.size() == 2);
  CHECK(classify_cylinder(d, 0) == CylinderType::SimpleEnvelope);
  CHECK(classify_cylinder(d, 1) == CylinderType::SimpleEnvelope);
  CHECK(validate(d.rebuilt).ok());
  CHECK(stratum_of(d.rebuilt) == parse_signature("Q(-1^4,0)"));
}

TEST_CASE("h11 surface: the inserted cylinder is simple with distinct zero classes") {
  auto s = corpus::h11_two_cylinders();
  auto d = decompose(s, hdir());
  REQUIRE(d.cyls.size() == 2);
  int simple = -1;
  for (int k = 0; k < 2; ++k)
    if (d.cyls[k].circumference == Rat(1)) simple = k;
  REQUIRE(simple >= 0);
  CHECK(classify_cylinder(d, simple) == CylinderType::Simple);
  // its two boundary loops carry the two distinct zeros
  auto va = analyze_vertices(d.refined);
  const auto& cyl = d.cyls[simple];
  REQUIRE(cyl.bp_bottom.size() == 1);
  REQUIRE(cyl.bp_top.size() == 1);
  CHECK(cyl.bp_bottom[0].cls != cyl.bp_top[0].cls);
  CHECK(cyl.bp_bottom[0].angle_pi == 4);
  CHECK(cyl.bp_top[0].angle_pi == 4);
}

TEST_CASE("unmarked torus decomposes via a closed leaf") {
  auto d = decompose(corpus::torus_unmarked(), hdir());
  REQUIRE(d.cyls.size() == 1);
  CHECK(d.cyls[0].circumference == Rat(1));
  CHECK(d.cyls[0].height == Rat(1));
  CHECK(validate(d.rebuilt).ok());
}

TEST_CASE("diagonal decomposition of the torus") {
  auto d = decompose(corpus::torus(), Vec{Rat(1), Rat(1)});
  Rat n = dot(d.dir, d.dir);
  Rat total(0);
  for (const auto& c : d.cyls) total += c.circumference * c.height * n;
  CHECK(total == Rat(1));
  CHECK(validate(d.rebuilt).ok());
  CHECK(stratum_of(d.rebuilt) == parse_signature("H(0)"));
}

TEST_CASE("modulus and dilation") {
  auto d = decompose(corpus::lshape(), hdir());
  int wide = d.cyls[0].circumference == Rat(2) ? 0 : 1;
  CHECK(modulus(d.cyls[wide]) == Rat(1, 2));
  auto d2 = deform_decomposition(d, {wide}, Rat(0), Rat(3));
  CHECK(modulus(d2.cyls[wide]) == Rat(3, 2));
  CHECK(validate(d2.rebuilt).ok());
  // dilating the wide cylinder by 1/2 gives area 2*1/2 + 1 = 2
  auto half = cylinder_deform(d, {wide}, Rat(0), Rat(1, 2));
  CHECK(area(half) == Rat(2));
  CHECK(validate(half).ok());
  CHECK(stratum_of(half) == parse_signature("H(2)"));
}

TEST_CASE("full Dehn twist preserves the stratum and area") {
  auto d = decompose(corpus::lshape(), hdir());
  for (int k = 0; k < 2; ++k) {
    Rat full_twist = d.cyls[k].circumference / d.cyls[k].height;
    auto t = cylinder_deform(d, {k}, full_twist, Rat(1));
    CHECK(validate(t).ok());
    CHECK(stratum_of(t) == parse_signature("H(2)"));
    CHECK(area(t) == Rat(3));
  }
}

TEST_CASE("shear changes twist by shear*height mod c") {
  auto d = decompose(corpus::h11_two_cylinders(), hdir());
  int simple = d.cyls[0].circumference == Rat(1) ? 0 : 1;
  const auto& cyl = d.cyls[simple];
  Rat s(1, 3);
  auto d2 = deform_decomposition(d, {simple}, s, Rat(1));
  CHECK(d2.cyls[simple].twist == rat_mod(cyl.twist + s * cyl.height, cyl.circumference));
  CHECK(validate(d2.rebuilt).ok());
  CHECK(stratum_of(d2.rebuilt) == parse_signature("H(1,1)"));
}

TEST_CASE("deformations commute on disjoint supports") {
  auto d = decompose(corpus::lshape(), hdir());
  auto a = deform_decomposition(deform_decomposition(d, {0}, Rat(1, 2), Rat(2)), {1}, Rat(1, 3),
                                Rat(1));
  auto b = deform_decomposition(deform_decomposition(d, {1}, Rat(1, 3), Rat(1)), {0}, Rat(1, 2),
                                Rat(2));
  CHECK(area(a.rebuilt) == area(b.rebuilt));
  CHECK(stratum_of(a.rebuilt) == stratum_of(b.rebuilt));
}
