#ifndef TORIC_GFAN_HPP
#define TORIC_GFAN_HPP

#include <iostream>
#include <vector>

#include "toric/groebner.hpp"

namespace toric {

/// A maximal cone of the restricted Groebner fan: the closure of
/// C[w] = { z in sigma : in_w(I) = in_z(I) } for the interior witness,
/// together with the marked reduced basis that carves it out.
template <class K>
struct GroebnerCone {
  Cone cone;
  Vec witness_weight;
  MarkedGroebnerBasis<K> basis;
};

/// The cone { w in sigma : (alpha_i - beta) . w >= 0 for all beta in the
/// support of g_i, all i }. Throws Error("degenerate weight cone") when the
/// region has empty interior (the defining weight was on a wall).
template <class K>
Cone cone_of_basis(const MarkedGroebnerBasis<K>& g, const Cone& sigma) {
  std::vector<Vec> ineqs;
  for (const auto& item : g.items)
    for (const auto& [beta, c] : item.g.terms) {
      if (beta == item.lead) continue;
      ineqs.push_back(sub(item.lead, beta));
    }
  for (const Vec& f : sigma.facet_normals()) ineqs.push_back(f);
  for (const Vec& e : sigma.span_equations()) {
    ineqs.push_back(e);
    ineqs.push_back(neg(e));
  }
  Cone c = Cone::from_inequalities(sigma.ambient_dim(), ineqs);
  if (c.dim() != sigma.dim()) throw Error("degenerate weight cone");
  return c;
}

/// Restricted Groebner fan of a 2D semigroup ring ideal: sweep sigma from
/// its clockwise boundary ray to its counterclockwise one, computing the
/// marked reduced basis just inside each wall and crossing at the far wall
/// of the resulting cone.
template <class K>
std::vector<GroebnerCone<K>> groebner_fan_cones_2d(
    const SemigroupRing<K>& ring, const Ideal<K>& ideal, const Cone& sigma) {
  if (sigma.ambient_dim() != 2)
    throw Error("fan enumeration unsupported beyond dimension 2");
  auto [start, end] = oriented_rays_2d(sigma);

  std::vector<GroebnerCone<K>> cones;
  Vec cur = start;
  for (int guard = 0; ; ++guard) {
    if (guard > 4096) throw Error("groebner fan sweep did not terminate");
    std::vector<Vec> rows{cur, end};
    for (int i = 0; i < 2; ++i) {
      Vec e(2, 0);
      e[i] = 1;
      rows.push_back(std::move(e));
    }
    MarkedGroebnerBasis<K> gb =
        buchberger(ring, ideal, MonomialOrder(std::move(rows)));
    Cone c = cone_of_basis(gb, sigma);
    auto [a, b] = oriented_rays_2d(c);
    // A wall that does not change the initial ideal would reproduce a cone
    // covering the previous one; merge rather than guess (logged, since
    // the theory says walls of the restricted fan are genuine).
    while (!cones.empty() && c.contains(cones.back().cone)) {
      std::cerr << "nashtoric: merging groebner cone across a non-wall at "
                << toric::to_string(cur) << "\n";
      cones.pop_back();
    }
    if (a != cur && cones.empty())
      throw Error("groebner fan sweep lost its wall");
    Vec witness = add(a, b);
    cones.push_back(GroebnerCone<K>{c, witness, std::move(gb)});
    if (b == end) break;
    if (cross2(cur, b) <= 0)
      throw Error("groebner fan sweep failed to advance");
    cur = b;
  }
  return cones;
}

template <class K>
Fan fan_of_cones(int dim, const std::vector<GroebnerCone<K>>& cones) {
  std::vector<Cone> maximal;
  for (const auto& gc : cones) maximal.push_back(gc.cone);
  return Fan(dim, std::move(maximal));
}

/// True iff the maximal cones of f are exactly { sigma }: the fan of all
/// faces of sigma, i.e. the modification is an isomorphism.
bool is_trivial_fan(const Fan& f, const Cone& sigma);

}  // namespace toric

#endif  // TORIC_GFAN_HPP
