#ifndef TORIC_GROEBNER_HPP
#define TORIC_GROEBNER_HPP

#include <algorithm>
#include <map>
#include <set>
#include <tuple>
#include <vector>

#include "toric/polynomial.hpp"

namespace toric {

template <class K>
struct Ideal {
  std::vector<Polynomial<K>> generators;
};

/// Reduced Groebner basis with each element's leading exponent recorded.
/// Elements are monic, tails fully reduced, leading exponents pairwise
/// non-dividing, sorted ascending in the order.
template <class K>
struct MarkedGroebnerBasis {
  struct Item {
    Polynomial<K> g;
    Vec lead;
    bool operator==(const Item& o) const {
      return lead == o.lead && g == o.g;
    }
  };
  std::vector<Item> items;
  MonomialOrder order;

  std::vector<Vec> leading_exponents() const {
    std::vector<Vec> l;
    for (const Item& it : items) l.push_back(it.lead);
    return l;
  }
  bool operator==(const MarkedGroebnerBasis& o) const {
    return items == o.items && order == o.order;
  }
};

template <class K>
struct DivisionResult {
  std::vector<Polynomial<K>> quotients;
  Polynomial<K> remainder;
};

/// In k[S_sigma], x^a divides x^b iff b - a lies in the semigroup.
inline bool monomial_divides(const AffineSemigroup& s, const Vec& a,
                             const Vec& b) {
  return s.contains(sub(b, a));
}

/// Minimal elements, in the semigroup order, of (alpha + S) cap (beta + S):
/// the common upper bounds from which S-polynomials are formed. Computed as
/// the degree-one part of the Hilbert basis of the homogenization of
/// { x : x - alpha in sigma^vee, x - beta in sigma^vee }.
std::vector<Vec> minimal_common_uppers(const AffineSemigroup& s,
                                       const Vec& alpha, const Vec& beta);

template <class K>
DivisionResult<K> divide(const SemigroupRing<K>& ring, const Polynomial<K>& f,
                         const std::vector<Polynomial<K>>& divisors,
                         const MonomialOrder& order) {
  const K& k = ring.field;
  std::vector<std::pair<Vec, typename K::Elem>> leads;
  leads.reserve(divisors.size());
  for (const Polynomial<K>& d : divisors) leads.push_back(leading_term(d, order));

  DivisionResult<K> res;
  res.quotients.assign(divisors.size(), Polynomial<K>{});
  Polynomial<K> h = f;
  while (!h.is_zero()) {
    auto [lam, c] = leading_term(h, order);
    bool reduced = false;
    for (size_t i = 0; i < divisors.size(); ++i) {
      if (!monomial_divides(ring.semigroup, leads[i].first, lam)) continue;
      Vec m = sub(lam, leads[i].first);
      typename K::Elem q = k.div(c, leads[i].second);
      res.quotients[i] =
          poly_add(k, res.quotients[i], ring.monomial(m, q));
      h = poly_sub(k, h, poly_mul_term(k, divisors[i], m, q));
      reduced = true;
      break;
    }
    if (!reduced) {
      res.remainder.terms.emplace(lam, c);
      h.terms.erase(lam);
    }
  }
  return res;
}

template <class K>
Polynomial<K> make_monic(const K& k, const Polynomial<K>& f,
                         const MonomialOrder& order) {
  auto [lam, c] = leading_term(f, order);
  (void)lam;
  return poly_scale(k, f, k.inv(c));
}

/// The S-polynomial of two monic polynomials at a common upper bound u.
template <class K>
Polynomial<K> s_polynomial(const SemigroupRing<K>& ring,
                           const Polynomial<K>& f, const Polynomial<K>& g,
                           const Vec& lead_f, const Vec& lead_g,
                           const Vec& u) {
  const K& k = ring.field;
  return poly_sub(k, poly_mul_term(k, f, sub(u, lead_f), k.one()),
                  poly_mul_term(k, g, sub(u, lead_g), k.one()));
}

namespace detail {

template <class K>
std::vector<Polynomial<K>> interreduce(const SemigroupRing<K>& ring,
                                       std::vector<Polynomial<K>> g,
                                       const MonomialOrder& order) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < g.size(); ++i) {
      std::vector<Polynomial<K>> others;
      for (size_t j = 0; j < g.size(); ++j)
        if (j != i) others.push_back(g[j]);
      Polynomial<K> r =
          others.empty() ? g[i] : divide(ring, g[i], others, order).remainder;
      if (r.is_zero()) {
        g.erase(g.begin() + i);
        changed = true;
        break;
      }
      r = make_monic(ring.field, r, order);
      if (!(r == g[i])) {
        g[i] = std::move(r);
        changed = true;
        break;
      }
    }
  }
  return g;
}

struct PairKey {
  Vec u;
  size_t i, j;
};

}  // namespace detail

/// Buchberger's algorithm over k[S_sigma]; returns the unique marked
/// reduced Groebner basis for the order. One S-polynomial is formed per
/// minimal common upper bound of the leading exponents; pairs whose bound
/// is the sum of the leading exponents reduce to zero a priori and are
/// skipped (product criterion).
template <class K>
MarkedGroebnerBasis<K> buchberger(const SemigroupRing<K>& ring,
                                  const Ideal<K>& ideal,
                                  const MonomialOrder& order) {
  validate_order(order, ring.semigroup);
  const K& k = ring.field;

  std::vector<Polynomial<K>> g;
  for (const Polynomial<K>& p : ideal.generators)
    if (!p.is_zero()) g.push_back(make_monic(k, p, order));
  if (g.empty()) throw Error("buchberger: zero ideal");

  g = detail::interreduce(ring, std::move(g), order);
  std::vector<Vec> leads;
  for (const Polynomial<K>& p : g) leads.push_back(leading_term(p, order).first);

  auto pair_less = [&order](const detail::PairKey& a,
                            const detail::PairKey& b) {
    int c = order.compare(a.u, b.u);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  };
  std::set<detail::PairKey, decltype(pair_less)> queue(pair_less);
  std::map<Vec, std::vector<Vec>, VecLess> mcu_cache;  // keyed by beta-alpha

  auto push_pairs = [&](size_t t) {
    for (size_t s = 0; s < t; ++s) {
      Vec delta = sub(leads[t], leads[s]);
      auto it = mcu_cache.find(delta);
      if (it == mcu_cache.end()) {
        std::vector<Vec> shifted;
        for (const Vec& u : minimal_common_uppers(ring.semigroup, leads[s],
                                                  leads[t]))
          shifted.push_back(sub(u, leads[s]));
        it = mcu_cache.emplace(delta, std::move(shifted)).first;
      }
      for (const Vec& rel : it->second) {
        Vec u = add(leads[s], rel);
        if (u == add(leads[s], leads[t])) continue;  // product criterion
        queue.insert({u, s, t});
      }
    }
  };
  for (size_t t = 0; t < g.size(); ++t) push_pairs(t);

  while (!queue.empty()) {
    detail::PairKey key = *queue.begin();
    queue.erase(queue.begin());
    Polynomial<K> s =
        s_polynomial(ring, g[key.i], g[key.j], leads[key.i], leads[key.j],
                     key.u);
    if (s.is_zero()) continue;
    Polynomial<K> r = divide(ring, s, g, order).remainder;
    if (r.is_zero()) continue;
    g.push_back(make_monic(k, r, order));
    leads.push_back(leading_term(g.back(), order).first);
    push_pairs(g.size() - 1);
  }

  // Minimalize: drop elements whose lead is divisible by another kept lead.
  std::vector<size_t> idx(g.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
    int c = order.compare(leads[a], leads[b]);
    if (c != 0) return c < 0;
    return a < b;
  });
  std::vector<Polynomial<K>> kept;
  std::vector<Vec> kept_leads;
  for (size_t i : idx) {
    bool divisible = false;
    for (const Vec& l : kept_leads)
      if (monomial_divides(ring.semigroup, l, leads[i])) {
        divisible = true;
        break;
      }
    if (!divisible) {
      kept.push_back(g[i]);
      kept_leads.push_back(leads[i]);
    }
  }

  // Tail-reduce to the unique reduced basis.
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < kept.size(); ++i) {
      std::vector<Polynomial<K>> others;
      for (size_t j = 0; j < kept.size(); ++j)
        if (j != i) others.push_back(kept[j]);
      if (others.empty()) continue;
      Polynomial<K> r = divide(ring, kept[i], others, order).remainder;
      r = make_monic(k, r, order);
      if (!(r == kept[i])) {
        kept[i] = std::move(r);
        changed = true;
      }
    }
  }

  MarkedGroebnerBasis<K> out{{}, order};
  for (size_t i = 0; i < kept.size(); ++i)
    out.items.push_back({std::move(kept[i]), kept_leads[i]});
  return out;
}

/// in_w(I): generated by the initial forms of a Groebner basis for the
/// order (w, default tiebreak).
template <class K>
Ideal<K> initial_ideal(const SemigroupRing<K>& ring, const Ideal<K>& ideal,
                       const Vec& w) {
  if (!ring.semigroup.primal_cone().contains(w))
    throw Error("initial ideal weight must lie in sigma");
  MonomialOrder order = weight_then(w, default_order(ring.semigroup));
  MarkedGroebnerBasis<K> gb = buchberger(ring, ideal, order);
  Ideal<K> out;
  for (const auto& item : gb.items)
    out.generators.push_back(initial_form(ring, item.g, w));
  return out;
}

/// Ideal equality through reduced-basis uniqueness under the default order.
template <class K>
bool ideal_equal(const SemigroupRing<K>& ring, const Ideal<K>& a,
                 const Ideal<K>& b) {
  auto nonzero = [](const Ideal<K>& i) {
    for (const Polynomial<K>& p : i.generators)
      if (!p.is_zero()) return true;
    return false;
  };
  if (!nonzero(a) || !nonzero(b)) return nonzero(a) == nonzero(b);
  MonomialOrder order = default_order(ring.semigroup);
  return buchberger(ring, a, order) == buchberger(ring, b, order);
}

}  // namespace toric

#endif  // TORIC_GROEBNER_HPP
