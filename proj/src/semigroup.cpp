#include "toric/semigroup.hpp"

#include <algorithm>
#include <cassert>
#include <map>

#include "toric/error.hpp"

namespace toric {

namespace {

// Rational inverse of a nonsingular k x k matrix.
std::vector<std::vector<Rat>> invert(const Mat& b) {
  size_t k = b.size();
  std::vector<std::vector<Rat>> a(k, std::vector<Rat>(2 * k));
  for (size_t i = 0; i < k; ++i) {
    for (size_t j = 0; j < k; ++j) a[i][j] = Rat(b[i][j]);
    a[i][k + i] = 1;
  }
  for (size_t c = 0; c < k; ++c) {
    size_t piv = c;
    while (piv < k && a[piv][c] == 0) ++piv;
    if (piv == k) throw Error("invert: singular matrix");
    std::swap(a[piv], a[c]);
    Rat p = a[c][c];
    for (size_t j = 0; j < 2 * k; ++j) a[c][j] /= p;
    for (size_t i = 0; i < k; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Rat f = a[i][c];
      for (size_t j = 0; j < 2 * k; ++j) a[i][j] -= f * a[c][j];
    }
  }
  std::vector<std::vector<Rat>> inv(k, std::vector<Rat>(k));
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) inv[i][j] = a[i][k + j];
  return inv;
}

// Lattice points of the half-open parallelepiped { sum t_i r_i : t in
// [0,1)^k } for linearly independent rays, the zero vector excluded.
std::vector<Vec> parallelepiped_points(const std::vector<Vec>& rays, int dim) {
  size_t k = rays.size();
  // Select k independent coordinate rows of the dim x k column matrix.
  Mat cols(dim, Vec(k));
  for (size_t j = 0; j < k; ++j)
    for (int i = 0; i < dim; ++i) cols[i][j] = rays[j][i];
  std::vector<size_t> chosen;
  Mat sel;
  for (int i = 0; i < dim && chosen.size() < k; ++i) {
    sel.push_back(cols[i]);
    if (rank(sel) == static_cast<int>(sel.size()))
      chosen.push_back(i);
    else
      sel.pop_back();
  }
  if (chosen.size() != k) throw Error("parallelepiped: dependent rays");
  auto inv = invert(sel);

  Vec lo(dim, 0), hi(dim, 0);
  for (int i = 0; i < dim; ++i)
    for (size_t j = 0; j < k; ++j) {
      if (rays[j][i] < 0) lo[i] += rays[j][i];
      if (rays[j][i] > 0) hi[i] += rays[j][i];
    }
  Int volume = 1;
  for (int i = 0; i < dim; ++i) {
    volume *= hi[i] - lo[i] + 1;
    if (volume > 4000000) throw Error("hilbert basis enumeration too large");
  }

  std::vector<Vec> points;
  Vec z = lo;
  while (true) {
    // Solve t = inv * z_chosen, then verify the full system.
    std::vector<Rat> t(k, Rat(0));
    for (size_t i = 0; i < k; ++i)
      for (size_t j = 0; j < k; ++j) t[i] += inv[i][j] * Rat(z[chosen[j]]);
    bool inside = true;
    for (size_t i = 0; i < k && inside; ++i)
      if (t[i] < 0 || t[i] >= 1) inside = false;
    if (inside) {
      for (int i = 0; i < dim && inside; ++i) {
        Rat s(0);
        for (size_t j = 0; j < k; ++j) s += t[j] * Rat(rays[j][i]);
        if (s != Rat(z[i])) inside = false;
      }
      if (inside && !is_zero_vec(z)) points.push_back(z);
    }
    int carry = dim - 1;
    while (carry >= 0) {
      if (z[carry] < hi[carry]) {
        ++z[carry];
        break;
      }
      z[carry] = lo[carry];
      --carry;
    }
    if (carry < 0) break;
  }
  return points;
}

// Cyclic order of the extreme rays of a full-dimensional 3D cone, read off
// the facet structure (each facet is spanned by exactly two extreme rays).
std::vector<std::vector<Vec>> triangulate_3d(const Cone& c) {
  const auto& rays = c.rays();
  std::vector<std::vector<size_t>> nbr(rays.size());
  for (const Vec& f : c.facet_normals()) {
    std::vector<size_t> tight;
    for (size_t i = 0; i < rays.size(); ++i)
      if (dot(f, rays[i]) == 0) tight.push_back(i);
    if (tight.size() != 2) throw Error("triangulate: unexpected facet");
    nbr[tight[0]].push_back(tight[1]);
    nbr[tight[1]].push_back(tight[0]);
  }
  std::vector<size_t> cycle{0, nbr[0][0]};
  while (cycle.size() < rays.size()) {
    size_t cur = cycle.back(), prev = cycle[cycle.size() - 2];
    size_t next = nbr[cur][0] == prev ? nbr[cur][1] : nbr[cur][0];
    cycle.push_back(next);
  }
  std::vector<std::vector<Vec>> pieces;
  for (size_t i = 1; i + 1 < cycle.size(); ++i)
    pieces.push_back({rays[cycle[0]], rays[cycle[i]], rays[cycle[i + 1]]});
  return pieces;
}

}  // namespace

std::vector<Vec> hilbert_basis(const Cone& c) {
  if (!c.is_strongly_convex())
    throw Error("hilbert basis requires a pointed cone");
  if (c.is_zero()) return {};
  const auto& rays = c.rays();
  int d = c.ambient_dim();

  std::vector<std::vector<Vec>> pieces;
  if (rank(rays) == static_cast<int>(rays.size())) {
    pieces.push_back(rays);
  } else if (d == 3 && c.is_full_dimensional()) {
    pieces = triangulate_3d(c);
  } else {
    throw Error("hilbert basis: non-simplicial cones supported in 3D only");
  }

  std::vector<Vec> candidates = rays;
  for (const auto& piece : pieces)
    for (Vec& p : parallelepiped_points(piece, d))
      candidates.push_back(std::move(p));
  std::sort(candidates.begin(), candidates.end(), VecLess{});
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());

  // g is irreducible iff no candidate h != g leaves g - h in the cone.
  std::vector<Vec> basis;
  for (const Vec& g : candidates) {
    bool irreducible = true;
    for (const Vec& h : candidates) {
      if (h == g) continue;
      if (c.contains(sub(g, h))) {
        irreducible = false;
        break;
      }
    }
    if (irreducible) basis.push_back(g);
  }
  return basis;
}

AffineSemigroup AffineSemigroup::from_primal_cone(const Cone& sigma) {
  if (!sigma.is_strongly_convex())
    throw Error("affine semigroup requires a strongly convex cone");
  AffineSemigroup s;
  s.primal_ = sigma;
  s.dual_ = toric::dual_cone(sigma);
  s.hilbert_ = toric::hilbert_basis(s.dual_);
  return s;
}

AffineSemigroup AffineSemigroup::from_dual_cone(const Cone& dual) {
  AffineSemigroup s;
  s.dual_ = dual;
  s.primal_ = toric::dual_cone(dual);
  if (!s.primal_.is_strongly_convex())
    throw Error("affine semigroup: dual cone must be full-dimensional");
  s.hilbert_ = toric::hilbert_basis(s.dual_);
  return s;
}

Vec AffineSemigroup::interior_weight() const {
  Vec w(primal_.ambient_dim(), 0);
  for (const Vec& r : primal_.rays()) w = add(w, r);
  return w;
}

}  // namespace toric
