#include "toric/groebner.hpp"

#include "toric/error.hpp"

namespace toric {

std::vector<Vec> minimal_common_uppers(const AffineSemigroup& s,
                                       const Vec& alpha, const Vec& beta) {
  Vec delta = sub(beta, alpha);
  if (s.contains(delta)) return {beta};
  if (s.contains(neg(delta))) return {alpha};
  if (!s.dual_cone().is_full_dimensional())
    throw Error("common upper bounds need a full-dimensional dual cone");

  int d = s.ambient_dim();
  // Homogenize: lattice points of { x : x in S, x - delta in S } at level
  // t = 1 of the cone { (x,t) : F.x >= max(0, F.delta) t, t >= 0 }. Facet
  // normals F of sigma^vee are the rays of sigma. Degree-one Hilbert basis
  // elements are exactly the minimal module generators.
  std::vector<Vec> ineqs;
  for (const Vec& f : s.primal_cone().rays()) {
    Vec row = f;
    Int c = dot(f, delta);
    if (c < 0) c = 0;
    row.push_back(-c);
    ineqs.push_back(std::move(row));
  }
  Vec last(d + 1, 0);
  last[d] = 1;
  ineqs.push_back(std::move(last));

  Cone hcone = Cone::from_inequalities(d + 1, ineqs);
  std::vector<Vec> out;
  for (const Vec& h : hilbert_basis(hcone)) {
    if (h[d] != 1) continue;
    Vec p(h.begin(), h.begin() + d);
    out.push_back(add(alpha, p));
  }
  std::sort(out.begin(), out.end(), VecLess{});
  return out;
}

}  // namespace toric
