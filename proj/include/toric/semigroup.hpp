#ifndef TORIC_SEMIGROUP_HPP
#define TORIC_SEMIGROUP_HPP

#include <vector>

#include "toric/cone.hpp"
#include "toric/lattice.hpp"

namespace toric {

/// Minimal generating set of the monoid c cap Z^d for a pointed rational
/// cone c (Gordan's lemma). Simplicial cones are handled by fundamental-
/// parallelepiped enumeration, non-simplicial 3D cones by triangulation
/// and merge, followed by an irreducibility filter.
std::vector<Vec> hilbert_basis(const Cone& c);

/// The affine semigroup S_sigma = sigma^vee cap M of a strongly convex
/// cone sigma, carrying both cones and the Hilbert basis a_1, ..., a_s.
class AffineSemigroup {
 public:
  AffineSemigroup() = default;

  static AffineSemigroup from_primal_cone(const Cone& sigma);
  static AffineSemigroup from_dual_cone(const Cone& dual);

  int ambient_dim() const { return primal_.ambient_dim(); }
  const Cone& primal_cone() const { return primal_; }
  const Cone& dual_cone() const { return dual_; }
  const std::vector<Vec>& hilbert_basis() const { return hilbert_; }

  /// Membership in S_sigma: the variety is normal, so an integer vector is
  /// in the semigroup iff it satisfies the dual-cone inequalities.
  bool contains(const Vec& v) const { return dual_.contains(v); }

  /// A lattice point in the interior of sigma (sum of its rays); the
  /// grading row of the default monomial order.
  Vec interior_weight() const;

  bool operator==(const AffineSemigroup& o) const {
    return primal_ == o.primal_;
  }

 private:
  Cone primal_;  // sigma, in N
  Cone dual_;    // sigma^vee, in M
  std::vector<Vec> hilbert_;
};

}  // namespace toric

#endif  // TORIC_SEMIGROUP_HPP
