#ifndef TORIC_POLYNOMIAL_HPP
#define TORIC_POLYNOMIAL_HPP

#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "toric/error.hpp"
#include "toric/field.hpp"
#include "toric/lattice.hpp"
#include "toric/semigroup.hpp"

namespace toric {

/// Element of k[S_sigma]: finitely many terms, exponents stored in ambient
/// Z^d coordinates. Construction through SemigroupRing validates that every
/// exponent lies in the semigroup; the term map never holds zeros.
template <class K>
struct Polynomial {
  using Coeff = typename K::Elem;
  std::map<Vec, Coeff, VecLess> terms;

  bool is_zero() const { return terms.empty(); }
  bool operator==(const Polynomial& o) const { return terms == o.terms; }
};

template <class K>
struct SemigroupRing {
  AffineSemigroup semigroup;
  K field;

  Polynomial<K> zero() const { return {}; }

  Polynomial<K> monomial(const Vec& exp, typename K::Elem coeff) const {
    if (!semigroup.contains(exp))
      throw Error("exponent " + toric::to_string(exp) +
                  " is not in the semigroup");
    Polynomial<K> p;
    if (!field.is_zero(coeff)) p.terms.emplace(exp, std::move(coeff));
    return p;
  }

  Polynomial<K> one() const { return monomial(Vec(semigroup.ambient_dim(), 0),
                                              field.one()); }
};

template <class K>
Polynomial<K> poly_add(const K& k, const Polynomial<K>& a,
                       const Polynomial<K>& b) {
  Polynomial<K> r = a;
  for (const auto& [e, c] : b.terms) {
    auto it = r.terms.find(e);
    if (it == r.terms.end()) {
      r.terms.emplace(e, c);
    } else {
      it->second = k.add(it->second, c);
      if (k.is_zero(it->second)) r.terms.erase(it);
    }
  }
  return r;
}

template <class K>
Polynomial<K> poly_neg(const K& k, const Polynomial<K>& a) {
  Polynomial<K> r = a;
  for (auto& [e, c] : r.terms) c = k.neg(c);
  return r;
}

template <class K>
Polynomial<K> poly_sub(const K& k, const Polynomial<K>& a,
                       const Polynomial<K>& b) {
  return poly_add(k, a, poly_neg(k, b));
}

/// a * coeff * x^exp.
template <class K>
Polynomial<K> poly_mul_term(const K& k, const Polynomial<K>& a, const Vec& exp,
                            const typename K::Elem& coeff) {
  Polynomial<K> r;
  if (k.is_zero(coeff)) return r;
  for (const auto& [e, c] : a.terms) {
    typename K::Elem nc = k.mul(c, coeff);
    if (!k.is_zero(nc)) r.terms.emplace(add(e, exp), std::move(nc));
  }
  return r;
}

template <class K>
Polynomial<K> poly_mul(const K& k, const Polynomial<K>& a,
                       const Polynomial<K>& b) {
  Polynomial<K> r;
  for (const auto& [e, c] : b.terms)
    r = poly_add(k, r, poly_mul_term(k, a, e, c));
  return r;
}

template <class K>
Polynomial<K> poly_scale(const K& k, const Polynomial<K>& a,
                         const typename K::Elem& coeff) {
  Polynomial<K> r;
  for (const auto& [e, c] : a.terms) {
    typename K::Elem nc = k.mul(c, coeff);
    if (!k.is_zero(nc)) r.terms.emplace(e, std::move(nc));
  }
  return r;
}

template <class K>
std::string poly_to_string(const K& k, const Polynomial<K>& a) {
  if (a.terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : a.terms) {
    if (!first) os << " + ";
    first = false;
    os << k.coeff_to_string(c) << "*x^" << toric::to_string(e);
  }
  return os.str();
}

/// Matrix monomial order: compare by the dot product against each row in
/// turn. weight_then(w, tie) realizes "x^u > x^v iff uw > vw, or uw = vw
/// and tie says so".
class MonomialOrder {
 public:
  explicit MonomialOrder(std::vector<Vec> rows) : rows_(std::move(rows)) {
    if (rows_.empty()) throw Error("monomial order needs at least one row");
  }

  const std::vector<Vec>& rows() const { return rows_; }

  /// -1, 0, +1. Zero only for equal exponents (guaranteed by validation).
  int compare(const Vec& u, const Vec& v) const {
    for (const Vec& r : rows_) {
      Int d = dot(r, u) - dot(r, v);
      if (d > 0) return 1;
      if (d < 0) return -1;
    }
    if (u != v)
      throw Error("monomial order cannot separate " + toric::to_string(u) +
                  " and " + toric::to_string(v));
    return 0;
  }
  bool greater(const Vec& u, const Vec& v) const { return compare(u, v) > 0; }
  bool less(const Vec& u, const Vec& v) const { return compare(u, v) < 0; }

  bool operator==(const MonomialOrder& o) const { return rows_ == o.rows_; }

 private:
  std::vector<Vec> rows_;
};

inline MonomialOrder weight_then(const Vec& w, const MonomialOrder& tie) {
  std::vector<Vec> rows{w};
  for (const Vec& r : tie.rows()) rows.push_back(r);
  return MonomialOrder(std::move(rows));
}

/// The Toh-Yama order on the A3 ring: rows (2,-1) and (1,1).
inline MonomialOrder toh_yama_order() {
  return MonomialOrder({{2, -1}, {1, 1}});
}

/// Default tiebreak: grade by an interior weight of sigma, then break ties
/// lexicographically. On the quadrant this is graded lex.
MonomialOrder default_order(const AffineSemigroup& s);

/// A monomial order is usable on k[S_sigma] iff it is total (full rank)
/// and every nonzero semigroup element is larger than 1. The latter holds
/// iff it holds on the Hilbert basis. Throws Error when violated.
void validate_order(const MonomialOrder& order, const AffineSemigroup& s);

/// Leading (exponent, coefficient) of a nonzero polynomial.
template <class K>
std::pair<Vec, typename K::Elem> leading_term(const Polynomial<K>& f,
                                              const MonomialOrder& order) {
  if (f.is_zero()) throw Error("zero polynomial");
  auto best = f.terms.begin();
  for (auto it = std::next(f.terms.begin()); it != f.terms.end(); ++it)
    if (order.greater(it->first, best->first)) best = it;
  return {best->first, best->second};
}

/// Sum of the terms of f whose exponent maximizes w . u (maximum
/// convention). Requires f != 0 and w in sigma.
template <class K>
Polynomial<K> initial_form(const SemigroupRing<K>& ring,
                           const Polynomial<K>& f, const Vec& w) {
  if (f.is_zero()) throw Error("zero polynomial");
  if (!ring.semigroup.primal_cone().contains(w))
    throw Error("initial form weight must lie in sigma");
  bool first = true;
  Int best = 0;
  for (const auto& [e, c] : f.terms) {
    Int val = dot(w, e);
    if (first || val > best) {
      best = val;
      first = false;
    }
  }
  Polynomial<K> r;
  for (const auto& [e, c] : f.terms)
    if (dot(w, e) == best) r.terms.emplace(e, c);
  return r;
}

}  // namespace toric

#endif  // TORIC_POLYNOMIAL_HPP
