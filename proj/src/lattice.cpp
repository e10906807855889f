#include "toric/lattice.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "toric/error.hpp"

namespace toric {

Int dot(const Vec& a, const Vec& b) {
  assert(a.size() == b.size());
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vec add(const Vec& a, const Vec& b) {
  assert(a.size() == b.size());
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  assert(a.size() == b.size());
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec neg(const Vec& a) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

Vec scale(const Int& c, const Vec& a) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

bool is_zero_vec(const Vec& a) {
  for (const Int& x : a)
    if (x != 0) return false;
  return true;
}

Int content(const Vec& a) {
  Int g = 0;
  for (const Int& x : a) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Vec primitive(const Vec& a) {
  Int g = content(a);
  if (g == 0 || g == 1) return a;
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] / g;
  return r;
}

bool is_primitive(const Vec& a) { return !is_zero_vec(a) && content(a) == 1; }

Int cross2(const Vec& a, const Vec& b) {
  assert(a.size() == 2 && b.size() == 2);
  return a[0] * b[1] - a[1] * b[0];
}

bool lex_less(const Vec& a, const Vec& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::string to_string(const Vec& a) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) os << ",";
    os << a[i];
  }
  os << ")";
  return os.str();
}

std::string to_string(const Mat& m) {
  std::string s = "{";
  for (size_t i = 0; i < m.size(); ++i) {
    if (i) s += ", ";
    s += to_string(m[i]);
  }
  return s + "}";
}

namespace {

// Rational Gaussian elimination; returns the rank.
int rank_rational(std::vector<std::vector<Rat>> a) {
  if (a.empty()) return 0;
  size_t rows = a.size(), cols = a[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    for (size_t i = r + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      Rat f = a[i][c] / a[r][c];
      for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return static_cast<int>(r);
}

}  // namespace

int rank(const Mat& m) {
  std::vector<std::vector<Rat>> a;
  a.reserve(m.size());
  for (const Vec& row : m) {
    std::vector<Rat> r(row.size());
    for (size_t j = 0; j < row.size(); ++j) r[j] = Rat(row[j]);
    a.push_back(std::move(r));
  }
  return rank_rational(a);
}

Int det(const Mat& m) {
  size_t n = m.size();
  for (const Vec& row : m)
    if (row.size() != n) throw Error("det: matrix not square");
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  Mat a = m;
  Int prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      size_t piv = k + 1;
      while (piv < n && a[piv][k] == 0) ++piv;
      if (piv == n) return 0;
      std::swap(a[piv], a[k]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        Int num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        a[i][j] = num / prev;  // exact by Bareiss
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

HnfResult hermite_normal_form(const Mat& m) {
  if (m.empty()) throw Error("hermite_normal_form: empty matrix");
  size_t rows = m.size(), cols = m[0].size();
  for (const Vec& r : m)
    if (r.size() != cols) throw Error("hermite_normal_form: ragged matrix");

  Mat h = m;
  Mat u(rows, Vec(rows, 0));
  for (size_t i = 0; i < rows; ++i) u[i][i] = 1;

  auto row_sub = [&](size_t dst, const Int& q, size_t src) {
    for (size_t j = 0; j < cols; ++j) h[dst][j] -= q * h[src][j];
    for (size_t j = 0; j < rows; ++j) u[dst][j] -= q * u[src][j];
  };
  auto row_neg = [&](size_t i) {
    for (size_t j = 0; j < cols; ++j) h[i][j] = -h[i][j];
    for (size_t j = 0; j < rows; ++j) u[i][j] = -u[i][j];
  };

  size_t pr = 0;  // pivot row
  for (size_t c = 0; c < cols && pr < rows; ++c) {
    // Euclid on the column below pr until a single nonzero entry remains.
    while (true) {
      size_t best = rows;
      for (size_t i = pr; i < rows; ++i) {
        if (h[i][c] == 0) continue;
        if (best == rows || cmp(abs(h[i][c]), abs(h[best][c])) < 0) best = i;
      }
      if (best == rows) break;  // column zero from pr down
      if (best != pr) {
        std::swap(h[best], h[pr]);
        std::swap(u[best], u[pr]);
      }
      bool done = true;
      for (size_t i = pr + 1; i < rows; ++i) {
        if (h[i][c] == 0) continue;
        Int q = h[i][c] / h[pr][c];  // truncated division shrinks |h[i][c]|
        row_sub(i, q, pr);
        if (h[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (h[pr][c] == 0) continue;
    if (h[pr][c] < 0) row_neg(pr);
    // Reduce entries above the pivot into [0, pivot).
    for (size_t i = 0; i < pr; ++i) {
      if (h[i][c] == 0) continue;
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), h[i][c].get_mpz_t(), h[pr][c].get_mpz_t());
      row_sub(i, q, pr);
    }
    ++pr;
  }
  return {std::move(h), std::move(u)};
}

std::vector<Int> smith_normal_form(Mat m) {
  if (m.empty()) throw Error("smith_normal_form: empty matrix");
  size_t rows = m.size(), cols = m[0].size();
  for (const Vec& r : m)
    if (r.size() != cols) throw Error("smith_normal_form: ragged matrix");

  size_t nfac = std::min(rows, cols);
  std::vector<Int> factors;

  size_t t = 0;
  while (t < nfac) {
    // Find the minimal-absolute-value nonzero entry in the trailing block.
    size_t pi = rows, pj = cols;
    for (size_t i = t; i < rows; ++i)
      for (size_t j = t; j < cols; ++j) {
        if (m[i][j] == 0) continue;
        if (pi == rows || cmp(abs(m[i][j]), abs(m[pi][pj])) < 0) {
          pi = i;
          pj = j;
        }
      }
    if (pi == rows) break;  // trailing block is zero
    std::swap(m[pi], m[t]);
    for (size_t i = t; i < rows; ++i) std::swap(m[i][pj], m[i][t]);

    bool clean = false;
    while (!clean) {
      clean = true;
      // Clear column t.
      for (size_t i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        Int q = m[i][t] / m[t][t];
        for (size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) {
          std::swap(m[i], m[t]);
          clean = false;
        }
      }
      // Clear row t.
      for (size_t j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        Int q = m[t][j] / m[t][t];
        for (size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) {
          for (size_t i = t; i < rows; ++i) std::swap(m[i][j], m[i][t]);
          clean = false;
        }
      }
      if (!clean) continue;
      // Divisibility: m[t][t] must divide every trailing entry.
      for (size_t i = t + 1; i < rows && clean; ++i)
        for (size_t j = t + 1; j < cols && clean; ++j)
          if (m[i][j] % m[t][t] != 0) {
            for (size_t jj = t; jj < cols; ++jj) m[t][jj] += m[i][jj];
            clean = false;
          }
    }
    factors.push_back(abs(m[t][t]));
    ++t;
  }
  factors.resize(nfac, Int(0));
  return factors;
}

bool extends_to_basis(const Mat& vs) {
  if (vs.empty()) throw Error("extends_to_basis: empty input");
  if (rank(vs) != static_cast<int>(vs.size())) throw Error("not independent");
  for (const Int& d : smith_normal_form(vs))
    if (d != 0 && d != 1) return false;
  return true;
}

}  // namespace toric
