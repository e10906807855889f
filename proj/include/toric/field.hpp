#ifndef TORIC_FIELD_HPP
#define TORIC_FIELD_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

#include "toric/error.hpp"

namespace toric {

/// Coefficients in Q, canonicalized by gmp.
class RationalField {
 public:
  using Elem = mpq_class;

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_int(long v) const { return Elem(v); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const {
    if (a == 0) throw Error("division by zero");
    return Elem(1) / a;
  }
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
  bool is_zero(const Elem& a) const { return a == 0; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  uint64_t characteristic() const { return 0; }
  std::string name() const { return "rational"; }
  std::string coeff_to_string(const Elem& a) const {
    if (a.get_den() == 1) return a.get_num().get_str();
    return a.get_str();
  }
};

bool is_prime_u64(uint64_t n);

/// F_p with p prime, p < 2^61; plain modular arithmetic.
class PrimeField {
 public:
  using Elem = uint64_t;

  explicit PrimeField(uint64_t p) : p_(p) {
    if (p < 2 || p >= (uint64_t{1} << 61) || !is_prime_u64(p))
      throw Error("prime field modulus must be a prime below 2^61");
  }

  uint64_t modulus() const { return p_; }
  Elem zero() const { return 0; }
  Elem one() const { return 1 % p_; }
  Elem from_int(long v) const {
    long r = v % static_cast<long>(p_);
    if (r < 0) r += static_cast<long>(p_);
    return static_cast<Elem>(r);
  }
  Elem from_mpz(const mpz_class& v) const {
    mpz_class r = v % mpz_class(static_cast<unsigned long>(p_));
    if (r < 0) r += mpz_class(static_cast<unsigned long>(p_));
    return r.get_ui();
  }
  Elem add(Elem a, Elem b) const {
    Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>((static_cast<unsigned __int128>(a) * b) % p_);
  }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem pow(Elem a, uint64_t e) const {
    Elem r = one();
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  Elem inv(Elem a) const {
    if (a == 0) throw Error("division by zero");
    return pow(a, p_ - 2);
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  bool is_zero(Elem a) const { return a == 0; }
  bool eq(Elem a, Elem b) const { return a == b; }
  uint64_t characteristic() const { return p_; }
  std::string name() const { return "fp(" + std::to_string(p_) + ")"; }
  std::string coeff_to_string(Elem a) const { return std::to_string(a); }

 private:
  uint64_t p_;
};

/// Runtime field selection at the pipeline and CLI boundary.
struct FieldSpec {
  std::optional<uint64_t> prime;  // empty = Q

  bool is_rational() const { return !prime.has_value(); }
  std::string name() const {
    return is_rational() ? "rational" : "fp(" + std::to_string(*prime) + ")";
  }
  static FieldSpec rational() { return {}; }
  static FieldSpec fp(uint64_t p) { return {p}; }
  bool operator==(const FieldSpec&) const = default;
};

/// Run fn with the concrete field object chosen by spec.
template <class Fn>
auto with_field(const FieldSpec& spec, Fn&& fn) {
  if (spec.is_rational()) return fn(RationalField{});
  return fn(PrimeField{*spec.prime});
}

}  // namespace toric

#endif  // TORIC_FIELD_HPP
