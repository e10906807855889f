#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "toric/cone.hpp"
#include "toric/error.hpp"

using namespace toric;

namespace {

Cone quadrant() { return Cone::from_rays(2, {{1, 0}, {0, 1}}); }
Cone a3() { return Cone::from_rays(2, {{0, 1}, {4, -3}}); }

}  // namespace

TEST_CASE("canonicalization removes redundant generators") {
  Cone c = Cone::from_rays(2, {{1, 0}, {1, 1}, {0, 1}, {2, 3}});
  CHECK(c.rays() == std::vector<Vec>{{0, 1}, {1, 0}});
  CHECK(c.is_strongly_convex());
  CHECK(c.is_full_dimensional());
}

TEST_CASE("dual of quadrant is quadrant") {
  CHECK(dual_cone(quadrant()) == quadrant());
}

TEST_CASE("dual of A3 cone") {
  Cone d = dual_cone(a3());
  CHECK(d.rays() == std::vector<Vec>{{1, 0}, {3, 4}});
  CHECK(d.lineality().empty());
}

TEST_CASE("dual of a single ray is a halfplane") {
  Cone r = Cone::from_rays(2, {{1, 0}});
  Cone d = dual_cone(r);
  CHECK(d.rays() == std::vector<Vec>{{1, 0}});
  CHECK(d.lineality() == std::vector<Vec>{{0, 1}});
  // Generator view: rays plus +/- lineality.
  std::vector<Vec> gens = d.generators();
  CHECK(gens == std::vector<Vec>{{1, 0}, {0, 1}, {0, -1}});
}

TEST_CASE("dual is involutive on strongly convex full-dimensional cones") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> dist(-6, 6);
  int tested = 0;
  while (tested < 50) {
    Vec a{dist(rng), dist(rng)}, b{dist(rng), dist(rng)};
    if (cross2(a, b) == 0) continue;
    Cone c = Cone::from_rays(2, {a, b});
    CHECK(dual_cone(dual_cone(c)) == c);
    ++tested;
  }
  // A 3D sample, non-simplicial included.
  Cone c3 = Cone::from_rays(
      3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}, {1, 2, 3}});
  CHECK(dual_cone(dual_cone(c3)) == c3);
  Cone square =
      Cone::from_rays(3, {{1, 0, 1}, {0, 1, 1}, {-1, 0, 1}, {0, -1, 1}});
  CHECK(square.rays().size() == 4);
  CHECK(dual_cone(dual_cone(square)) == square);
}

namespace {

bool contains_cone(const std::vector<Cone>& fs, const Cone& c) {
  return std::find(fs.begin(), fs.end(), c) != fs.end();
}

}  // namespace

TEST_CASE("faces of the quadrant") {
  std::vector<Cone> fs = faces(quadrant());
  REQUIRE(fs.size() == 4);
  CHECK(contains_cone(fs, Cone::zero(2)));
  CHECK(contains_cone(fs, Cone::from_rays(2, {{0, 1}})));
  CHECK(contains_cone(fs, Cone::from_rays(2, {{1, 0}})));
  CHECK(contains_cone(fs, quadrant()));
}

TEST_CASE("faces of A3 cone and of a ray") {
  std::vector<Cone> fs = faces(a3());
  REQUIRE(fs.size() == 4);
  CHECK(contains_cone(fs, Cone::zero(2)));
  CHECK(contains_cone(fs, Cone::from_rays(2, {{0, 1}})));
  CHECK(contains_cone(fs, Cone::from_rays(2, {{4, -3}})));
  CHECK(contains_cone(fs, a3()));
  std::vector<Cone> rf = faces(Cone::from_rays(2, {{1, 0}}));
  REQUIRE(rf.size() == 2);
  CHECK(contains_cone(rf, Cone::zero(2)));
  CHECK(contains_cone(rf, Cone::from_rays(2, {{1, 0}})));
}

TEST_CASE("faces closed under intersection") {
  for (const Cone& c : {a3(), Cone::from_rays(3, {{1, 0, 0}, {1, 2, 0},
                                                  {1, 0, 3}, {1, 2, 3}})}) {
    std::vector<Cone> fs = faces(c);
    for (const Cone& f : fs)
      for (const Cone& g : fs) {
        Cone h = intersection(f, g);
        CHECK(is_face_of(h, c));
      }
  }
}

TEST_CASE("smoothness") {
  CHECK(is_smooth(quadrant()));
  CHECK(!is_smooth(a3()));
  CHECK(!is_smooth(Cone::from_rays(2, {{2, -1}, {0, 1}})));
  CHECK(is_smooth(Cone::from_rays(2, {{1, 0}})));
  CHECK(is_smooth(Cone::zero(2)));
}

TEST_CASE("lattice index") {
  CHECK(lattice_index(quadrant()) == 1);
  CHECK(lattice_index(a3()) == 4);
  CHECK(lattice_index(Cone::from_rays(2, {{2, -1}, {0, 1}})) == 2);
}

TEST_CASE("limit_face") {
  Cone sigma = a3();
  // (1,0) = 3/4 (0,1) + 1/4 (4,-3): interior.
  CHECK(limit_face(sigma, {1, 0}) == sigma);
  CHECK(limit_face(sigma, {0, 2}) == Cone::from_rays(2, {{0, 1}}));
  CHECK_THROWS_WITH_AS(limit_face(sigma, {-1, 0}), "limit does not exist",
                       Error);
  CHECK_THROWS_AS(limit_face(sigma, {0, 0}), Error);
}

TEST_CASE("limit_face returns the face whose relative interior holds v") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> coeff(0, 5);
  Cone sigma = a3();
  for (int iter = 0; iter < 100; ++iter) {
    Vec v = add(scale(coeff(rng), Vec{0, 1}), scale(coeff(rng), Vec{4, -3}));
    if (is_zero_vec(v)) continue;
    Cone f = limit_face(sigma, v);
    CHECK(f.contains(v));
    CHECK(f.contains_in_relative_interior(v));
  }
}

TEST_CASE("fan validation accepts subdivision and rejects overlap") {
  Fan good(2, {Cone::from_rays(2, {{0, 1}, {1, 0}}),
               Cone::from_rays(2, {{1, 0}, {4, -3}})});
  validate_fan(good);
  Fan overlap(2, {Cone::from_rays(2, {{0, 1}, {1, 0}}),
                  Cone::from_rays(2, {{1, 1}, {4, -3}})});
  CHECK_THROWS_AS(validate_fan(overlap), Error);
  Fan nested(2, {quadrant(), Cone::from_rays(2, {{1, 0}, {1, 1}})});
  CHECK_THROWS_AS(validate_fan(nested), Error);
}

TEST_CASE("refinement checks") {
  Fan self = face_fan(a3());
  CHECK(is_refinement(self, self));
  Fan split(2, {Cone::from_rays(2, {{0, 1}, {1, 0}}),
                Cone::from_rays(2, {{1, 0}, {4, -3}})});
  CHECK(is_refinement(split, face_fan(a3())));
  CHECK(!is_refinement(face_fan(a3()), split));
  CHECK(!is_refinement(face_fan(quadrant()), face_fan(a3())));
}

TEST_CASE("3D fan validation by face enumeration") {
  Cone octant = Cone::from_rays(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  Cone next = Cone::from_rays(3, {{0, 1, 0}, {0, 0, 1}, {-1, 0, 0}});
  validate_fan(Fan(3, {octant, next}));
  Cone bad = Cone::from_rays(3, {{1, 1, 0}, {0, 0, 1}, {-1, 0, 0}});
  CHECK_THROWS_AS(validate_fan(Fan(3, {octant, bad})), Error);
}
