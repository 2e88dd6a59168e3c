#pragma once

// Steinitz (supernatural) numbers: formal products prod_p p^{r_p} over all
// primes with r_p in {0, 1, 2, ...} or infinity.

#include <compare>
#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>
#include <span>
#include <string>
#include <string_view>

namespace locmat {

/// Exponent in N u {0, inf}. Addition saturates at infinity, and the order
/// places infinity above every finite value.
class Exponent {
 public:
  constexpr Exponent() = default;
  // Implicit so that finite literals read naturally: Exponent e = 3;
  constexpr Exponent(std::uint64_t value) : raw_(value) {  // NOLINT
    if (value == kInfRaw) throw std::overflow_error("finite exponent out of range");
  }

  static constexpr Exponent infinity() {
    Exponent e;
    e.raw_ = kInfRaw;
    return e;
  }

  constexpr bool is_infinite() const { return raw_ == kInfRaw; }
  constexpr bool is_zero() const { return raw_ == 0; }

  /// Finite value. Throws DomainError when infinite.
  std::uint64_t value() const;

  friend Exponent operator+(Exponent a, Exponent b);
  friend constexpr auto operator<=>(Exponent, Exponent) = default;
  friend constexpr bool operator==(Exponent, Exponent) = default;

  std::string to_string() const;

 private:
  static constexpr std::uint64_t kInfRaw = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t raw_ = 0;
};

inline const Exponent kInf = Exponent::infinity();

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

class SteinitzNumber {
 public:
  using Support = std::map<std::uint64_t, Exponent>;

  /// The number 1.
  SteinitzNumber() = default;

  /// Every prime not listed in `support` carries exponent `rest`. Entries
  /// equal to `rest` are dropped; non-prime keys throw DomainError.
  explicit SteinitzNumber(Support support, Exponent rest = 0);

  /// Throws DomainError for n == 0.
  static SteinitzNumber from_natural(std::uint64_t n);

  Exponent exponent_of(std::uint64_t prime) const;
  const Support& support() const { return support_; }
  Exponent rest() const { return rest_; }

  bool is_natural() const;

  /// Throws NotNatural when not a positive integer, DomainError when the
  /// value does not fit in 64 bits.
  std::uint64_t to_natural() const;

  friend bool operator==(const SteinitzNumber&, const SteinitzNumber&) = default;

 private:
  Support support_;
  Exponent rest_{0};
};

SteinitzNumber mul(const SteinitzNumber& a, const SteinitzNumber& b);
SteinitzNumber lcm(const SteinitzNumber& a, const SteinitzNumber& b);
SteinitzNumber gcd(const SteinitzNumber& a, const SteinitzNumber& b);
bool divides(const SteinitzNumber& a, const SteinitzNumber& b);

inline SteinitzNumber operator*(const SteinitzNumber& a, const SteinitzNumber& b) {
  return mul(a, b);
}

/// lcm of the given positive integers; the empty sequence gives 1.
SteinitzNumber lcm_of_sequence(std::span<const std::uint64_t> sizes);

struct Classification {
  bool natural = false;
  bool infinite = false;
  bool locally_finite = false;
  bool primary = false;

  friend bool operator==(const Classification&, const Classification&) = default;
};

Classification classify(const SteinitzNumber& s);

/// Checks st(A (x) B) = st(A) * st(B) for algebras presented by divisibility
/// chains of matrix sizes. The shorter chain is padded with its last entry
/// (an empty chain stands for [1]). Throws ChainNotDivisible when
/// n_i does not divide n_{i+1}.
bool st_product_law_check(std::span<const std::uint64_t> chain_a,
                          std::span<const std::uint64_t> chain_b);

/// Grammar: term ("*" term)*, term = prime ["^" exp] | "rest" "^" exp | "1",
/// exp = decimal | "inf". Repeated primes multiply.
SteinitzNumber parse_steinitz(std::string_view text);

/// Same grammar: primes ascending, each with an explicit exponent, then
/// `rest^e` unless e = 0. The number 1 prints as `1`.
std::string to_string(const SteinitzNumber& s);

}  // namespace locmat
