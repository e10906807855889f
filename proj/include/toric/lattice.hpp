#ifndef TORIC_LATTICE_HPP
#define TORIC_LATTICE_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace toric {

// Arbitrary-precision integers and rationals throughout; no fixed-width
// arithmetic in any lattice or coefficient computation.
using Int = mpz_class;
using Rat = mpq_class;

/// A lattice vector: element of N = Z^d or M = N^*.
using Vec = std::vector<Int>;
/// A row-major integer matrix (rows of equal length).
using Mat = std::vector<Vec>;

Int dot(const Vec& a, const Vec& b);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec neg(const Vec& a);
Vec scale(const Int& c, const Vec& a);
bool is_zero_vec(const Vec& a);

/// gcd of absolute values of the entries; 0 for the zero vector.
Int content(const Vec& a);

/// a / content(a); the zero vector is returned unchanged. A vector is
/// primitive iff primitive(a) == a and a != 0.
Vec primitive(const Vec& a);
bool is_primitive(const Vec& a);

/// 2D cross product a.x * b.y - a.y * b.x.
Int cross2(const Vec& a, const Vec& b);

bool lex_less(const Vec& a, const Vec& b);

/// Strict-weak lexicographic order for use as a map/set comparator.
struct VecLess {
  bool operator()(const Vec& a, const Vec& b) const { return lex_less(a, b); }
};

std::string to_string(const Vec& a);
std::string to_string(const Mat& m);

/// Exact rank over Q.
int rank(const Mat& m);

/// Exact determinant of a square matrix (fraction-free Bareiss).
Int det(const Mat& m);

struct HnfResult {
  Mat h;  // the normal form, same shape as the input
  Mat u;  // unimodular transform with u * m = h
};

/// Row-style Hermite normal form. Convention: row echelon with zero rows
/// at the bottom, every pivot positive, and entries above a pivot reduced
/// into [0, pivot). This makes h a canonical basis of the row lattice.
HnfResult hermite_normal_form(const Mat& m);

/// Smith normal form invariant factors d1 | d2 | ... as nonnegative
/// integers, padded with zeros to length min(rows, cols).
std::vector<Int> smith_normal_form(Mat m);

/// True iff the rows extend to a Z-basis of Z^d, i.e. all Smith invariant
/// factors are 1. Throws Error("not independent") on dependent input.
bool extends_to_basis(const Mat& vs);

}  // namespace toric

#endif  // TORIC_LATTICE_HPP
