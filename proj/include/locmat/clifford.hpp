#pragma once

// Generalized Clifford algebra Clg(l, I): generators x_i (i in an ordered
// set) with x_i^l = 1 and x_j x_i = z x_i x_j for i < j, z a primitive l-th
// root of unity. Ordered monomials x_{i1}^{k1} ... x_{ir}^{kr} with
// i1 < ... < ir and 1 <= k <= l-1 form a basis.

#include <compare>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "locmat/cyclotomic.hpp"
#include "locmat/rational.hpp"

namespace locmat {

/// Generator label. Rational labels let probes sit strictly between any two
/// generators.
class GeneratorIndex {
 public:
  GeneratorIndex() = default;
  GeneratorIndex(Rational value) : value_(std::move(value)) { value_.canonicalize(); }  // NOLINT
  GeneratorIndex(long value) : value_(value) {}                                         // NOLINT

  const Rational& value() const { return value_; }

  friend std::strong_ordering operator<=>(const GeneratorIndex& a, const GeneratorIndex& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }
  friend bool operator==(const GeneratorIndex& a, const GeneratorIndex& b) {
    return a.value_ == b.value_;
  }

 private:
  Rational value_;
};

struct Factor {
  GeneratorIndex index;
  int exponent = 1;

  friend bool operator==(const Factor&, const Factor&) = default;
};

/// Ordered monomial. Indices strictly increase; exponents are nonzero and
/// are kept in [1, l-1] by every operation that knows l.
class Monomial {
 public:
  Monomial() = default;  // unit

  /// Validates strictly increasing indices and 1 <= exponent <= l-1.
  Monomial(std::vector<Factor> factors, int level);

  static Monomial generator(const GeneratorIndex& i, int exponent, int level) {
    return Monomial({Factor{i, exponent}}, level);
  }

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_unit() const { return factors_.empty(); }
  /// Exponent of x_i in this monomial, 0 if absent.
  int exponent_of(const GeneratorIndex& i) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Lexicographic on the index sequence, then on the exponent sequence.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

 private:
  friend std::pair<int, Monomial> monomial_product(const Monomial&, const Monomial&, int);
  std::vector<Factor> factors_;
};

struct Letter {
  GeneratorIndex index;
  long long power = 1;
};

/// Unnormalized product of generator powers; powers may be negative.
using Word = std::vector<Letter>;

/// u * v = z^phase * w.
std::pair<int, Monomial> monomial_product(const Monomial& u, const Monomial& v, int level);

class CliffordElement {
 public:
  using Terms = std::map<Monomial, CycElem>;

  /// Zero.
  explicit CliffordElement(int level) : level_(level) {}
  CliffordElement(int level, const Monomial& m);
  CliffordElement(const CycElem& coeff, const Monomial& m);

  static CliffordElement unit(int level) { return CliffordElement(level, Monomial{}); }
  static CliffordElement scalar(const CycElem& c) { return CliffordElement(c, Monomial{}); }

  int level() const { return level_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Coefficient of m, zero if absent.
  CycElem coefficient(const Monomial& m) const;

  void add_term(const Monomial& m, const CycElem& coeff);

  CliffordElement& operator+=(const CliffordElement& other);
  CliffordElement& operator-=(const CliffordElement& other);
  friend CliffordElement operator+(CliffordElement a, const CliffordElement& b) { return a += b; }
  friend CliffordElement operator-(CliffordElement a, const CliffordElement& b) { return a -= b; }
  friend CliffordElement operator*(const CliffordElement& a, const CliffordElement& b);
  friend CliffordElement operator*(const CycElem& c, const CliffordElement& a);

  friend bool operator==(const CliffordElement&, const CliffordElement&) = default;

 private:
  void check_level(int other) const;

  int level_;
  Terms terms_;
};

/// Single monomial times z^k, computed by folding monomial_product.
CliffordElement normal_form(const Word& word, int level);

CliffordElement elem_mul(const CliffordElement& a, const CliffordElement& b);

/// ab - ba
CliffordElement commutator(const CliffordElement& a, const CliffordElement& b);

/// The automorphism x_k -> z^{delta_ik} x_k.
CliffordElement automorphism_phi(const GeneratorIndex& i, const CliffordElement& a);

/// S with x_j^{-1} v x_j = z^S v:
/// S = sum of exponents above j minus sum of exponents below j (mod l).
int conjugation_phase(const Monomial& v, const GeneratorIndex& j, int level);

/// All l^n ordered monomials on the given indices (deduplicated), in
/// monomial order.
std::vector<Monomial> enumerate_monomials(std::span<const GeneratorIndex> indices, int level);

/// Monomials on `ambient` whose conjugation phase vanishes for every probe.
std::vector<Monomial> centralizer_congruence(std::span<const GeneratorIndex> ambient,
                                             std::span<const GeneratorIndex> probes, int level);

/// Largest truncation (number of ambient monomials) the brute-force solver accepts.
inline constexpr std::size_t kMaxTruncation = 4096;

/// Basis of { a in span(ambient monomials) : [a, x_j] = 0 for all probes j },
/// by exact elimination on commutators computed with elem_mul.
/// Throws TruncationTooLarge beyond kMaxTruncation monomials.
std::vector<CliffordElement> centralizer_bruteforce(std::span<const GeneratorIndex> ambient,
                                                    std::span<const GeneratorIndex> probes,
                                                    int level);

/// Whether two finite families span the same subspace.
bool spans_equal(std::span<const CliffordElement> a, std::span<const CliffordElement> b, int level);

}  // namespace locmat
