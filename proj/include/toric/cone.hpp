#ifndef TORIC_CONE_HPP
#define TORIC_CONE_HPP

#include <optional>
#include <string>
#include <vector>

#include "toric/lattice.hpp"

namespace toric {

/// V-representation of a rational polyhedral cone: extreme rays plus a
/// lineality basis (empty for strongly convex cones).
struct VRep {
  std::vector<Vec> rays;
  std::vector<Vec> lineality;
};

/// Double description: extreme rays and lineality of
/// { x : a.x >= 0 for a in ineqs, e.x == 0 for e in eqs }.
VRep dual_description(int dim, const std::vector<Vec>& ineqs,
                      const std::vector<Vec>& eqs = {});

/// A rational polyhedral cone in canonical form: primitive extreme rays in
/// lexicographic order plus a Hermite-canonical lineality basis. Cones of
/// the Nash pipeline (sigma and fan members) are strongly convex; duals of
/// lower-dimensional cones carry nonempty lineality.
class Cone {
 public:
  Cone() = default;

  /// Canonicalize the nonnegative span of arbitrary generators.
  static Cone from_rays(int dim, const std::vector<Vec>& generators);
  /// Canonicalize { x : a.x >= 0 } for the given inequality normals.
  static Cone from_inequalities(int dim, const std::vector<Vec>& normals);
  static Cone zero(int dim);

  int ambient_dim() const { return dim_; }
  const std::vector<Vec>& rays() const { return rays_; }
  const std::vector<Vec>& lineality() const { return lineality_; }
  /// Rays plus +/- lineality basis: generators of the cone as a span.
  std::vector<Vec> generators() const;

  /// Facet normals and span equations: the H-representation
  /// { x : f.x >= 0, e.x == 0 }. These are the extreme rays and lineality
  /// of the dual cone.
  const std::vector<Vec>& facet_normals() const { return dual_rays_; }
  const std::vector<Vec>& span_equations() const { return dual_lineality_; }

  bool is_strongly_convex() const { return lineality_.empty(); }
  /// Dimension of the linear span.
  int dim() const;
  bool is_zero() const { return rays_.empty() && lineality_.empty(); }
  bool is_full_dimensional() const { return dim() == dim_; }

  bool contains(const Vec& v) const;
  bool contains(const Cone& other) const;
  /// Strict inequalities on all facets (and span equations hold).
  bool contains_in_relative_interior(const Vec& v) const;

  bool operator==(const Cone& o) const {
    return dim_ == o.dim_ && rays_ == o.rays_ && lineality_ == o.lineality_;
  }
  bool operator!=(const Cone& o) const { return !(*this == o); }
  /// Canonical total order (ambient dim, then rays, then lineality).
  bool operator<(const Cone& o) const;

  std::string to_string() const;

 private:
  int dim_ = 0;
  std::vector<Vec> rays_;
  std::vector<Vec> lineality_;
  std::vector<Vec> dual_rays_;       // facet normals
  std::vector<Vec> dual_lineality_;  // span equations
};

Cone dual_cone(const Cone& c);

/// All faces of a cone, including {0} and the cone itself, canonically
/// sorted. Faces of a non-pointed cone all contain its lineality space.
std::vector<Cone> faces(const Cone& c);

Cone intersection(const Cone& a, const Cone& b);

bool is_face_of(const Cone& f, const Cone& c);

/// Toric smoothness: the (primitive) rays extend to a Z-basis of the
/// ambient lattice. Requires a strongly convex cone.
bool is_smooth(const Cone& c);

/// Index of the sublattice spanned by the rays inside the lattice points
/// of their linear span (product of Smith invariant factors). For a
/// full-dimensional simplicial cone this is |det| of the ray matrix.
Int lattice_index(const Cone& c);

/// The unique face of c whose relative interior contains v; throws
/// Error("limit does not exist") when v is outside c, and Error on v = 0.
Cone limit_face(const Cone& c, const Vec& v);

/// The two rays of a full-dimensional 2D strongly convex cone in
/// counterclockwise order (cross2(first, second) > 0).
std::pair<Vec, Vec> oriented_rays_2d(const Cone& c);

/// A fan given by its maximal cones; faces are derivable on demand.
class Fan {
 public:
  Fan() = default;
  Fan(int dim, std::vector<Cone> maximal_cones);

  int ambient_dim() const { return dim_; }
  const std::vector<Cone>& maximal_cones() const { return maximal_; }

  bool operator==(const Fan& o) const {
    return dim_ == o.dim_ && maximal_ == o.maximal_;
  }
  bool operator!=(const Fan& o) const { return !(*this == o); }

 private:
  int dim_ = 0;
  std::vector<Cone> maximal_;  // canonically sorted, duplicates removed
};

/// The trivial fan of all faces of c (maximal cone: c itself).
Fan face_fan(const Cone& c);

/// Checks that listed cones are pairwise intersecting in common faces and
/// that none contains another. Throws Error with a description on failure.
/// Exact for d <= 3 by face-lattice enumeration; the same enumeration runs
/// best-effort in higher dimension.
void validate_fan(const Fan& f);

/// True iff every cone of s is contained in a cone of t and every cone of
/// t is a union of cones of s. Exact in dimension 2 (angular tiling
/// check); other dimensions are unsupported.
bool is_refinement(const Fan& s, const Fan& t);

}  // namespace toric

#endif  // TORIC_CONE_HPP
