#include "toric/cone.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "toric/error.hpp"

namespace toric {

namespace {

Mat transpose(const Mat& a) {
  if (a.empty()) return {};
  Mat t(a[0].size(), Vec(a.size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

Mat identity_rows(int dim) {
  Mat m(dim, Vec(dim, 0));
  for (int i = 0; i < dim; ++i) m[i][i] = 1;
  return m;
}

// Basis of { x in Z^dim : a.x = 0 for every row a }. Kernel lattices are
// saturated; the result is Hermite-canonical.
Mat integer_kernel(const Mat& a, int dim) {
  if (a.empty()) return identity_rows(dim);
  HnfResult hr = hermite_normal_form(transpose(a));
  Mat ker;
  for (size_t i = 0; i < hr.h.size(); ++i)
    if (is_zero_vec(hr.h[i])) ker.push_back(hr.u[i]);
  if (ker.empty()) return {};
  HnfResult canon = hermite_normal_form(ker);
  Mat out;
  for (Vec& row : canon.h)
    if (!is_zero_vec(row)) out.push_back(std::move(row));
  return out;
}

struct DDRay {
  Vec v;
  std::vector<uint64_t> tight;  // bit per processed constraint
};

bool tight_subset(const std::vector<uint64_t>& sub,
                  const std::vector<uint64_t>& sup) {
  for (size_t i = 0; i < sub.size(); ++i)
    if ((sub[i] & sup[i]) != sub[i]) return false;
  return true;
}

// Canonical representative of a ray class modulo the lineality lattice:
// project rationally to zero out the lineality pivot columns, clear
// denominators, primitivize.
Vec reduce_ray_mod_lineality(const Vec& r, const Mat& lin_hnf) {
  if (lin_hnf.empty()) return primitive(r);
  size_t d = r.size();
  std::vector<Rat> x(d);
  for (size_t i = 0; i < d; ++i) x[i] = Rat(r[i]);
  for (const Vec& row : lin_hnf) {
    size_t p = 0;
    while (p < d && row[p] == 0) ++p;
    assert(p < d);
    Rat coef = x[p] / Rat(row[p]);
    if (coef == 0) continue;
    for (size_t j = p; j < d; ++j) x[j] -= coef * Rat(row[j]);
  }
  Int lcm = 1;
  for (const Rat& q : x)
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
  Vec out(d);
  for (size_t i = 0; i < d; ++i) {
    Rat scaled = x[i] * Rat(lcm);
    assert(scaled.get_den() == 1);
    out[i] = scaled.get_num();
  }
  return primitive(out);
}

}  // namespace

VRep dual_description(int dim, const std::vector<Vec>& ineqs,
                      const std::vector<Vec>& eqs) {
  if (dim < 1) throw Error("dual_description: dimension must be positive");
  std::vector<Vec> constraints;
  constraints.reserve(2 * eqs.size() + ineqs.size());
  for (const Vec& e : eqs) {
    constraints.push_back(e);
    constraints.push_back(neg(e));
  }
  for (const Vec& a : ineqs) constraints.push_back(a);
  for (const Vec& c : constraints)
    if (static_cast<int>(c.size()) != dim)
      throw Error("dual_description: constraint has wrong dimension");

  size_t nc = constraints.size();
  size_t words = (nc + 63) / 64;
  auto full_bits_below = [&](size_t k) {
    std::vector<uint64_t> b(words, 0);
    for (size_t i = 0; i < k; ++i) b[i / 64] |= uint64_t{1} << (i % 64);
    return b;
  };

  Mat lin = identity_rows(dim);
  std::vector<DDRay> rays;

  for (size_t k = 0; k < nc; ++k) {
    const Vec& a = constraints[k];
    if (is_zero_vec(a)) {
      for (DDRay& r : rays) r.tight[k / 64] |= uint64_t{1} << (k % 64);
      continue;
    }
    size_t pivot = lin.size();
    for (size_t i = 0; i < lin.size(); ++i)
      if (dot(a, lin[i]) != 0) {
        pivot = i;
        break;
      }
    if (pivot < lin.size()) {
      // The constraint cuts the lineality space: one basis vector becomes a
      // ray, everything else is projected onto { a.x = 0 } along it.
      Vec b0 = lin[pivot];
      lin.erase(lin.begin() + pivot);
      Int p = dot(a, b0);
      if (p < 0) {
        b0 = neg(b0);
        p = -p;
      }
      for (Vec& b : lin) b = primitive(sub(scale(p, b), scale(dot(a, b), b0)));
      for (DDRay& r : rays) {
        r.v = primitive(sub(scale(p, r.v), scale(dot(a, r.v), b0)));
        r.tight[k / 64] |= uint64_t{1} << (k % 64);
      }
      DDRay nr{std::move(b0), full_bits_below(k)};
      rays.push_back(std::move(nr));
    } else {
      std::vector<DDRay> plus, zero, minus;
      for (DDRay& r : rays) {
        int s = sgn(dot(a, r.v));
        if (s > 0)
          plus.push_back(std::move(r));
        else if (s == 0) {
          r.tight[k / 64] |= uint64_t{1} << (k % 64);
          zero.push_back(std::move(r));
        } else
          minus.push_back(std::move(r));
      }
      std::vector<DDRay> combos;
      for (const DDRay& rp : plus)
        for (const DDRay& rm : minus) {
          // Adjacency: no third ray is tight everywhere rp and rm both are.
          std::vector<uint64_t> common(words);
          for (size_t w = 0; w < words; ++w)
            common[w] = rp.tight[w] & rm.tight[w];
          bool adjacent = true;
          auto check = [&](const std::vector<DDRay>& group, const DDRay* skip1,
                           const DDRay* skip2) {
            for (const DDRay& r : group) {
              if (&r == skip1 || &r == skip2) continue;
              if (tight_subset(common, r.tight)) return false;
            }
            return true;
          };
          adjacent = check(plus, &rp, nullptr) && check(minus, nullptr, &rm) &&
                     check(zero, nullptr, nullptr);
          if (!adjacent) continue;
          Vec w = sub(scale(dot(a, rp.v), rm.v), scale(dot(a, rm.v), rp.v));
          w = primitive(w);
          if (is_zero_vec(w)) continue;
          std::vector<uint64_t> tight = common;
          tight[k / 64] |= uint64_t{1} << (k % 64);
          combos.push_back(DDRay{std::move(w), std::move(tight)});
        }
      rays.clear();
      for (auto& r : plus) rays.push_back(std::move(r));
      for (auto& r : zero) rays.push_back(std::move(r));
      for (auto& r : combos) rays.push_back(std::move(r));
    }
  }

  VRep out;
  if (!lin.empty()) {
    Mat normals = integer_kernel(lin, dim);
    out.lineality = integer_kernel(normals, dim);  // saturated + canonical
  }
  for (DDRay& r : rays) {
    Vec c = reduce_ray_mod_lineality(r.v, out.lineality);
    if (!is_zero_vec(c)) out.rays.push_back(std::move(c));
  }
  std::sort(out.rays.begin(), out.rays.end(), VecLess{});
  out.rays.erase(std::unique(out.rays.begin(), out.rays.end()),
                 out.rays.end());
  return out;
}

Cone Cone::from_rays(int dim, const std::vector<Vec>& generators) {
  for (const Vec& g : generators)
    if (static_cast<int>(g.size()) != dim)
      throw Error("cone: generator has wrong dimension");
  std::vector<Vec> gens;
  for (const Vec& g : generators)
    if (!is_zero_vec(g)) gens.push_back(g);
  VRep dual = dual_description(dim, gens);
  std::vector<Vec> dual_gens = dual.rays;
  VRep self = dual_description(dim, dual.rays, dual.lineality);
  Cone c;
  c.dim_ = dim;
  c.rays_ = std::move(self.rays);
  c.lineality_ = std::move(self.lineality);
  c.dual_rays_ = std::move(dual.rays);
  c.dual_lineality_ = std::move(dual.lineality);
  return c;
}

Cone Cone::from_inequalities(int dim, const std::vector<Vec>& normals) {
  VRep self = dual_description(dim, normals);
  std::vector<Vec> gens = self.rays;
  for (const Vec& l : self.lineality) {
    gens.push_back(l);
    gens.push_back(neg(l));
  }
  return from_rays(dim, gens);
}

Cone Cone::zero(int dim) { return from_rays(dim, {}); }

std::vector<Vec> Cone::generators() const {
  std::vector<Vec> g = rays_;
  for (const Vec& l : lineality_) {
    g.push_back(l);
    g.push_back(neg(l));
  }
  return g;
}

int Cone::dim() const {
  std::vector<Vec> g = rays_;
  for (const Vec& l : lineality_) g.push_back(l);
  if (g.empty()) return 0;
  return rank(g);
}

bool Cone::contains(const Vec& v) const {
  if (static_cast<int>(v.size()) != dim_)
    throw Error("cone: vector has wrong dimension");
  for (const Vec& f : dual_rays_)
    if (dot(f, v) < 0) return false;
  for (const Vec& e : dual_lineality_)
    if (dot(e, v) != 0) return false;
  return true;
}

bool Cone::contains(const Cone& other) const {
  for (const Vec& g : other.generators())
    if (!contains(g)) return false;
  return true;
}

bool Cone::contains_in_relative_interior(const Vec& v) const {
  if (static_cast<int>(v.size()) != dim_)
    throw Error("cone: vector has wrong dimension");
  for (const Vec& f : dual_rays_)
    if (dot(f, v) <= 0) return false;
  for (const Vec& e : dual_lineality_)
    if (dot(e, v) != 0) return false;
  return true;
}

bool Cone::operator<(const Cone& o) const {
  if (dim_ != o.dim_) return dim_ < o.dim_;
  if (rays_ != o.rays_)
    return std::lexicographical_compare(rays_.begin(), rays_.end(),
                                        o.rays_.begin(), o.rays_.end(),
                                        VecLess{});
  return std::lexicographical_compare(lineality_.begin(), lineality_.end(),
                                      o.lineality_.begin(), o.lineality_.end(),
                                      VecLess{});
}

std::string Cone::to_string() const {
  std::ostringstream os;
  os << "cone" << toric::to_string(rays_);
  if (!lineality_.empty()) os << "+lin" << toric::to_string(lineality_);
  return os.str();
}

Cone dual_cone(const Cone& c) {
  // The dual's generators are already cached as the H-representation.
  std::vector<Vec> gens = c.facet_normals();
  for (const Vec& l : c.span_equations()) {
    gens.push_back(l);
    gens.push_back(neg(l));
  }
  return Cone::from_rays(c.ambient_dim(), gens);
}

std::vector<Cone> faces(const Cone& c) {
  const std::vector<Vec>& facets = c.facet_normals();
  if (facets.size() > 20) throw Error("face enumeration too large");
  std::vector<Cone> out;
  for (size_t mask = 0; mask < (size_t{1} << facets.size()); ++mask) {
    std::vector<Vec> gens;
    for (const Vec& r : c.rays()) {
      bool tight = true;
      for (size_t i = 0; i < facets.size() && tight; ++i)
        if (mask & (size_t{1} << i))
          if (dot(facets[i], r) != 0) tight = false;
      if (tight) gens.push_back(r);
    }
    for (const Vec& l : c.lineality()) {
      gens.push_back(l);
      gens.push_back(neg(l));
    }
    out.push_back(Cone::from_rays(c.ambient_dim(), gens));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Cone intersection(const Cone& a, const Cone& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw Error("intersection: ambient dimensions differ");
  std::vector<Vec> ineqs = a.facet_normals();
  for (const Vec& f : b.facet_normals()) ineqs.push_back(f);
  std::vector<Vec> eqs = a.span_equations();
  for (const Vec& e : b.span_equations()) eqs.push_back(e);
  VRep v = dual_description(a.ambient_dim(), ineqs, eqs);
  std::vector<Vec> gens = v.rays;
  for (const Vec& l : v.lineality) {
    gens.push_back(l);
    gens.push_back(neg(l));
  }
  return Cone::from_rays(a.ambient_dim(), gens);
}

bool is_face_of(const Cone& f, const Cone& c) {
  for (const Cone& g : faces(c))
    if (g == f) return true;
  return false;
}

bool is_smooth(const Cone& c) {
  if (!c.is_strongly_convex())
    throw Error("is_smooth: cone is not strongly convex");
  if (c.rays().empty()) return true;
  return extends_to_basis(c.rays());
}

Int lattice_index(const Cone& c) {
  if (c.rays().empty()) return 1;
  if (!c.is_strongly_convex() ||
      rank(c.rays()) != static_cast<int>(c.rays().size()))
    throw Error("lattice_index requires a simplicial cone");
  Int idx = 1;
  for (const Int& d : smith_normal_form(c.rays()))
    if (d != 0) idx *= d;
  return idx;
}

Cone limit_face(const Cone& c, const Vec& v) {
  if (is_zero_vec(v)) throw Error("limit_face: direction must be nonzero");
  if (!c.contains(v)) throw Error("limit does not exist");
  std::vector<Vec> gens;
  for (const Vec& r : c.rays()) {
    bool tight = true;
    for (const Vec& f : c.facet_normals())
      if (dot(f, v) == 0 && dot(f, r) != 0) {
        tight = false;
        break;
      }
    if (tight) gens.push_back(r);
  }
  for (const Vec& l : c.lineality()) {
    gens.push_back(l);
    gens.push_back(neg(l));
  }
  return Cone::from_rays(c.ambient_dim(), gens);
}

std::pair<Vec, Vec> oriented_rays_2d(const Cone& c) {
  if (c.ambient_dim() != 2 || !c.is_strongly_convex() ||
      c.rays().size() != 2)
    throw Error("oriented_rays_2d: need a full-dimensional 2D cone");
  Vec a = c.rays()[0], b = c.rays()[1];
  Int x = cross2(a, b);
  if (x == 0) throw Error("oriented_rays_2d: degenerate cone");
  if (x < 0) std::swap(a, b);
  return {a, b};
}

Fan::Fan(int dim, std::vector<Cone> maximal_cones) : dim_(dim) {
  for (const Cone& c : maximal_cones)
    if (c.ambient_dim() != dim)
      throw Error("fan: cone ambient dimension mismatch");
  std::sort(maximal_cones.begin(), maximal_cones.end());
  maximal_cones.erase(
      std::unique(maximal_cones.begin(), maximal_cones.end()),
      maximal_cones.end());
  maximal_ = std::move(maximal_cones);
}

Fan face_fan(const Cone& c) { return Fan(c.ambient_dim(), {c}); }

void validate_fan(const Fan& f) {
  const auto& cones = f.maximal_cones();
  for (const Cone& c : cones)
    if (!c.is_strongly_convex())
      throw Error("fan: cone is not strongly convex: " + c.to_string());
  for (size_t i = 0; i < cones.size(); ++i)
    for (size_t j = 0; j < cones.size(); ++j) {
      if (i == j) continue;
      if (cones[i].contains(cones[j]))
        throw Error("fan: maximal cone contained in another: " +
                    cones[j].to_string());
    }
  for (size_t i = 0; i < cones.size(); ++i)
    for (size_t j = i + 1; j < cones.size(); ++j) {
      Cone inter = intersection(cones[i], cones[j]);
      if (!is_face_of(inter, cones[i]) || !is_face_of(inter, cones[j]))
        throw Error("fan: intersection of " + cones[i].to_string() + " and " +
                    cones[j].to_string() + " is not a common face");
    }
}

namespace {

// Maximal 2D cones of s contained in tau must tile tau from its clockwise
// boundary ray to its counterclockwise one.
bool tiles_2d(const std::vector<Cone>& pieces, const Cone& tau) {
  auto [ta, tb] = oriented_rays_2d(tau);
  std::vector<std::pair<Vec, Vec>> arcs;
  for (const Cone& p : pieces) arcs.push_back(oriented_rays_2d(p));
  std::sort(arcs.begin(), arcs.end(),
            [](const auto& x, const auto& y) {
              return cross2(x.first, y.first) > 0;
            });
  Vec cur = ta;
  for (const auto& [a, b] : arcs) {
    if (a != cur) return false;
    cur = b;
  }
  return cur == tb;
}

}  // namespace

bool is_refinement(const Fan& s, const Fan& t) {
  if (s.ambient_dim() != t.ambient_dim())
    throw Error("is_refinement: ambient dimensions differ");
  if (s.ambient_dim() != 2)
    throw Error("refinement check supported in dimension 2 only");
  for (const Cone& c : s.maximal_cones()) {
    bool inside = false;
    for (const Cone& tau : t.maximal_cones())
      if (tau.contains(c)) {
        inside = true;
        break;
      }
    if (!inside) return false;
  }
  for (const Cone& tau : t.maximal_cones()) {
    if (tau.is_zero()) continue;
    if (tau.dim() == 1) {
      bool found = false;
      for (const Cone& c : s.maximal_cones())
        if (c == tau || is_face_of(tau, c)) {
          found = true;
          break;
        }
      if (!found) return false;
      continue;
    }
    std::vector<Cone> pieces;
    for (const Cone& c : s.maximal_cones())
      if (c.dim() == 2 && tau.contains(c)) pieces.push_back(c);
    if (pieces.empty() || !tiles_2d(pieces, tau)) return false;
  }
  return true;
}

}  // namespace toric
