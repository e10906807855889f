#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "toric/error.hpp"
#include "toric/semigroup.hpp"

using namespace toric;

namespace {

// Oracle: every lattice point of the dual cone inside a small box must be
// an N-combination of the basis (greedy decomposition search).
bool generates(const std::vector<Vec>& basis, const Cone& c, const Vec& v) {
  if (is_zero_vec(v)) return true;
  for (const Vec& b : basis) {
    Vec w = sub(v, b);
    if (c.contains(w) && generates(basis, c, w)) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("hilbert basis of the quadrant") {
  Cone q = Cone::from_rays(2, {{1, 0}, {0, 1}});
  CHECK(hilbert_basis(q) == std::vector<Vec>{{0, 1}, {1, 0}});
}

TEST_CASE("hilbert basis of the A3 dual cone") {
  Cone d = Cone::from_rays(2, {{1, 0}, {3, 4}});
  CHECK(hilbert_basis(d) == std::vector<Vec>{{1, 0}, {1, 1}, {3, 4}});
}

TEST_CASE("hilbert basis of cone((1,0),(1,2))") {
  Cone d = Cone::from_rays(2, {{1, 0}, {1, 2}});
  CHECK(hilbert_basis(d) == std::vector<Vec>{{1, 0}, {1, 1}, {1, 2}});
}

TEST_CASE("hilbert basis errors on non-pointed cones") {
  Cone half = Cone::from_rays(2, {{1, 0}, {0, 1}, {0, -1}});
  CHECK(!half.is_strongly_convex());
  CHECK_THROWS_AS(hilbert_basis(half), Error);
}

TEST_CASE("hilbert basis of the zero cone is empty") {
  CHECK(hilbert_basis(Cone::zero(2)).empty());
}

TEST_CASE("hilbert basis of a non-simplicial 3D cone") {
  // Cone over a unit square at height 1: basis is the four vertical rays.
  Cone c = Cone::from_rays(3, {{0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}});
  CHECK(hilbert_basis(c) == std::vector<Vec>{{0, 0, 1}, {0, 1, 1}, {1, 0, 1},
                                             {1, 1, 1}});
}

TEST_CASE("basis elements are irreducible and removing any breaks generation") {
  for (const Cone& d :
       {Cone::from_rays(2, {{1, 0}, {3, 4}}),
        Cone::from_rays(2, {{1, 0}, {2, 5}}),
        Cone::from_rays(2, {{1, 0}, {5, 7}})}) {
    std::vector<Vec> basis = hilbert_basis(d);
    // Spot-check generation over a bounded box.
    for (Int x = 0; x <= 6; ++x)
      for (Int y = 0; y <= 6; ++y) {
        Vec v{x, y};
        if (!d.contains(v)) continue;
        CHECK(generates(basis, d, v));
      }
    for (size_t drop = 0; drop < basis.size(); ++drop) {
      std::vector<Vec> pruned;
      for (size_t i = 0; i < basis.size(); ++i)
        if (i != drop) pruned.push_back(basis[i]);
      CHECK(!generates(pruned, d, basis[drop]));
    }
  }
}

TEST_CASE("semigroup membership for A3") {
  AffineSemigroup s =
      AffineSemigroup::from_primal_cone(Cone::from_rays(2, {{0, 1}, {4, -3}}));
  CHECK(s.hilbert_basis() == std::vector<Vec>{{1, 0}, {1, 1}, {3, 4}});
  CHECK(s.contains({2, 1}));
  CHECK(!s.contains({2, 3}));
  CHECK(s.contains({0, 0}));
}

TEST_CASE("membership closed under addition") {
  AffineSemigroup s =
      AffineSemigroup::from_primal_cone(Cone::from_rays(2, {{0, 1}, {5, -2}}));
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> c(0, 4);
  const auto& hb = s.hilbert_basis();
  for (int iter = 0; iter < 200; ++iter) {
    Vec v(2, Int(0)), w(2, Int(0));
    for (const Vec& b : hb) {
      v = add(v, scale(c(rng), b));
      w = add(w, scale(c(rng), b));
    }
    CHECK(s.contains(v));
    CHECK(s.contains(w));
    CHECK(s.contains(add(v, w)));
  }
}

TEST_CASE("interior weight of the quadrant is the all-ones vector") {
  AffineSemigroup s =
      AffineSemigroup::from_primal_cone(Cone::from_rays(2, {{1, 0}, {0, 1}}));
  CHECK(s.interior_weight() == Vec{1, 1});
  CHECK(s.primal_cone().contains_in_relative_interior(s.interior_weight()));
}
