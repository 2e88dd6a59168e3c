#pragma once

// Exact arithmetic in Q(z), z a primitive l-th root of unity. Elements are
// rational polynomials in z of degree < phi(l), reduced modulo the l-th
// cyclotomic polynomial, so equality is coefficient-wise.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "locmat/rational.hpp"

namespace locmat {

/// Integer coefficients of Phi_l, ascending powers. Computed by exact
/// division of x^l - 1 by Phi_d for every proper divisor d of l.
std::vector<std::int64_t> cyclotomic_polynomial(int l);

/// Degree of Phi_l.
int euler_phi(int l);

namespace detail {
struct LevelData;
}

class CycElem {
 public:
  /// Zero at the given level (l >= 2).
  explicit CycElem(int level);
  CycElem(int level, const Rational& value);
  /// Arbitrary-length polynomial in z; reduced on construction.
  CycElem(int level, std::span<const Rational> poly);

  static CycElem zero(int level) { return CycElem(level); }
  static CycElem one(int level) { return CycElem(level, Rational(1)); }

  /// z^(k mod l); k may be negative.
  static CycElem root_power(int level, long long k);

  int level() const;
  /// Exactly phi(level) entries.
  std::span<const Rational> coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;

  CycElem& operator+=(const CycElem& other);
  CycElem& operator-=(const CycElem& other);
  CycElem& operator*=(const CycElem& other);

  friend CycElem operator+(CycElem a, const CycElem& b) { return a += b; }
  friend CycElem operator-(CycElem a, const CycElem& b) { return a -= b; }
  friend CycElem operator*(CycElem a, const CycElem& b) { return a *= b; }
  CycElem operator-() const;

  /// Throws DivisionByZero for zero.
  CycElem inv() const;
  /// Integer power; negative exponents invert.
  CycElem pow(long long k) const;

  /// Substitutes this element into an integer polynomial (ascending).
  static CycElem evaluate(std::span<const std::int64_t> poly, const CycElem& at);

  friend bool operator==(const CycElem& a, const CycElem& b);

 private:
  void check_level(const CycElem& other) const;

  const detail::LevelData* data_;
  std::vector<Rational> coeffs_;
};

CycElem add(const CycElem& a, const CycElem& b);
CycElem sub(const CycElem& a, const CycElem& b);
CycElem mul(const CycElem& a, const CycElem& b);
inline CycElem inv(const CycElem& a) { return a.inv(); }
inline CycElem root_power(int level, long long k) { return CycElem::root_power(level, k); }

/// Ascending powers of `z`, e.g. `2 + 1*z`, `1 - 1/2*z^2`; zero is `0`.
std::string to_string(const CycElem& value);

}  // namespace locmat
