#include "toric/polynomial.hpp"

#include "toric/error.hpp"

namespace toric {

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                     23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  auto mulmod = [&](uint64_t a, uint64_t b) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % n);
  };
  auto powmod = [&](uint64_t a, uint64_t e) {
    uint64_t r = 1;
    a %= n;
    while (e) {
      if (e & 1) r = mulmod(r, a);
      a = mulmod(a, a);
      e >>= 1;
    }
    return r;
  };
  // Deterministic for all 64-bit inputs with this base set.
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                     23ull, 29ull, 31ull, 37ull}) {
    uint64_t x = powmod(a, d);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s && witness; ++i) {
      x = mulmod(x, x);
      if (x == n - 1) witness = false;
    }
    if (witness) return false;
  }
  return true;
}

MonomialOrder default_order(const AffineSemigroup& s) {
  int d = s.ambient_dim();
  std::vector<Vec> rows{s.interior_weight()};
  for (int i = 0; i < d; ++i) {
    Vec e(d, 0);
    e[i] = 1;
    rows.push_back(std::move(e));
  }
  MonomialOrder order(std::move(rows));
  validate_order(order, s);
  return order;
}

void validate_order(const MonomialOrder& order, const AffineSemigroup& s) {
  int d = s.ambient_dim();
  for (const Vec& r : order.rows())
    if (static_cast<int>(r.size()) != d)
      throw Error("monomial order row has wrong dimension");
  if (rank(order.rows()) != d)
    throw Error("monomial order is not total (rank-deficient matrix)");
  // Positivity on the Hilbert basis implies positivity on the whole
  // semigroup, row by row on the subsemigroup where earlier rows vanish.
  for (const Vec& g : s.hilbert_basis()) {
    int sign = 0;
    for (const Vec& r : order.rows()) {
      Int v = dot(r, g);
      if (v > 0) {
        sign = 1;
        break;
      }
      if (v < 0) {
        sign = -1;
        break;
      }
    }
    if (sign <= 0)
      throw Error("monomial order is not positive on semigroup generator " +
                  toric::to_string(g));
  }
}

}  // namespace toric
