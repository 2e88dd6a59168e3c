#include "locmat/steinitz.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "locmat/error.hpp"

namespace locmat {

std::uint64_t Exponent::value() const {
  if (is_infinite()) throw DomainError("exponent is infinite");
  return raw_;
}

Exponent operator+(Exponent a, Exponent b) {
  if (a.is_infinite() || b.is_infinite()) return Exponent::infinity();
  std::uint64_t sum = 0;
  if (__builtin_add_overflow(a.raw_, b.raw_, &sum) || sum == Exponent::kInfRaw) {
    throw DomainError("exponent overflow");
  }
  return Exponent(sum);
}

std::string Exponent::to_string() const {
  return is_infinite() ? std::string("inf") : std::to_string(raw_);
}

namespace {

__extension__ typedef unsigned __int128 u128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

// Pointwise combination of exponent functions; the result is canonicalized
// by the SteinitzNumber constructor.
template <typename Op>
SteinitzNumber combine(const SteinitzNumber& a, const SteinitzNumber& b, Op op) {
  SteinitzNumber::Support support;
  for (const auto& [p, e] : a.support()) support[p] = op(e, b.exponent_of(p));
  for (const auto& [p, e] : b.support()) {
    if (!support.contains(p)) support[p] = op(a.exponent_of(p), e);
  }
  return SteinitzNumber(std::move(support), op(a.rest(), b.rest()));
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::uint64_t kSmall[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (auto p : kSmall) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (auto a : kSmall) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

SteinitzNumber::SteinitzNumber(Support support, Exponent rest) : rest_(rest) {
  for (auto& [p, e] : support) {
    if (!is_prime(p)) throw DomainError("support key " + std::to_string(p) + " is not prime");
    if (e != rest_) support_.emplace(p, e);
  }
}

SteinitzNumber SteinitzNumber::from_natural(std::uint64_t n) {
  if (n == 0) throw DomainError("from_natural: n must be positive");
  Support support;
  for (std::uint64_t p = 2; p <= n / p; ++p) {
    while (n % p == 0) {
      support[p] = support[p] + Exponent(1);
      n /= p;
    }
  }
  if (n > 1) support[n] = support[n] + Exponent(1);
  SteinitzNumber s;
  s.support_ = std::move(support);
  return s;
}

Exponent SteinitzNumber::exponent_of(std::uint64_t prime) const {
  if (!is_prime(prime)) throw DomainError("exponent_of: " + std::to_string(prime) + " is not prime");
  auto it = support_.find(prime);
  return it == support_.end() ? rest_ : it->second;
}

bool SteinitzNumber::is_natural() const {
  if (!rest_.is_zero()) return false;
  for (const auto& [p, e] : support_) {
    if (e.is_infinite()) return false;
  }
  return true;
}

std::uint64_t SteinitzNumber::to_natural() const {
  if (!is_natural()) throw NotNatural("to_natural: " + locmat::to_string(*this) + " is not a positive integer");
  std::uint64_t result = 1;
  for (const auto& [p, e] : support_) {
    for (std::uint64_t i = 0; i < e.value(); ++i) {
      if (__builtin_mul_overflow(result, p, &result)) {
        throw DomainError("to_natural: value exceeds 64 bits");
      }
    }
  }
  return result;
}

SteinitzNumber mul(const SteinitzNumber& a, const SteinitzNumber& b) {
  return combine(a, b, [](Exponent x, Exponent y) { return x + y; });
}

SteinitzNumber lcm(const SteinitzNumber& a, const SteinitzNumber& b) {
  return combine(a, b, [](Exponent x, Exponent y) { return std::max(x, y); });
}

SteinitzNumber gcd(const SteinitzNumber& a, const SteinitzNumber& b) {
  return combine(a, b, [](Exponent x, Exponent y) { return std::min(x, y); });
}

bool divides(const SteinitzNumber& a, const SteinitzNumber& b) {
  // Infinitely many primes sit outside both supports, so defaults decide first.
  if (a.rest() > b.rest()) return false;
  for (const auto& [p, e] : a.support()) {
    if (e > b.exponent_of(p)) return false;
  }
  for (const auto& [p, e] : b.support()) {
    if (a.exponent_of(p) > e) return false;
  }
  return true;
}

SteinitzNumber lcm_of_sequence(std::span<const std::uint64_t> sizes) {
  SteinitzNumber acc;
  for (auto n : sizes) acc = lcm(acc, SteinitzNumber::from_natural(n));
  return acc;
}

Classification classify(const SteinitzNumber& s) {
  Classification c;
  c.natural = s.is_natural();
  c.infinite = !c.natural;
  c.locally_finite = !s.rest().is_infinite();
  for (const auto& [p, e] : s.support()) {
    if (e.is_infinite()) c.locally_finite = false;
  }
  c.primary = s.rest().is_zero() && s.support().size() == 1;
  return c;
}

namespace {

void check_chain(std::span<const std::uint64_t> chain, const char* name) {
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (chain[i] == 0) throw DomainError(std::string(name) + ": sizes must be positive");
    if (i + 1 < chain.size() && chain[i + 1] % chain[i] != 0) {
      throw ChainNotDivisible(std::string(name) + ": " + std::to_string(chain[i]) +
                              " does not divide " + std::to_string(chain[i + 1]));
    }
  }
}

}  // namespace

bool st_product_law_check(std::span<const std::uint64_t> chain_a,
                          std::span<const std::uint64_t> chain_b) {
  check_chain(chain_a, "chain A");
  check_chain(chain_b, "chain B");
  const std::size_t len = std::max({chain_a.size(), chain_b.size(), std::size_t{1}});
  auto at = [](std::span<const std::uint64_t> c, std::size_t i) -> std::uint64_t {
    if (c.empty()) return 1;
    return i < c.size() ? c[i] : c.back();
  };
  // st(A (x) B) is the lcm over the merged chain of the products n_i * m_i.
  SteinitzNumber merged;
  for (std::size_t i = 0; i < len; ++i) {
    merged = lcm(merged, mul(SteinitzNumber::from_natural(at(chain_a, i)),
                             SteinitzNumber::from_natural(at(chain_b, i))));
  }
  return merged == mul(lcm_of_sequence(chain_a), lcm_of_sequence(chain_b));
}

namespace {

class SteinitzParser {
 public:
  explicit SteinitzParser(std::string_view text) : text_(text) {}

  SteinitzNumber parse() {
    skip_space();
    if (at_end()) throw ParseError("empty Steinitz literal", pos_);
    parse_term();
    skip_space();
    while (!at_end()) {
      if (text_[pos_] != '*') throw ParseError("expected '*'", pos_);
      ++pos_;
      skip_space();
      parse_term();
      skip_space();
    }
    return SteinitzNumber(std::move(support_), rest_);
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view take_while(auto pred) {
    std::size_t start = pos_;
    while (!at_end() && pred(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  std::uint64_t parse_uint(std::size_t start, std::string_view digits) {
    if (digits.empty()) throw ParseError("expected a number", start);
    std::uint64_t v = 0;
    for (char c : digits) {
      if (__builtin_mul_overflow(v, 10U, &v) ||
          __builtin_add_overflow(v, static_cast<std::uint64_t>(c - '0'), &v)) {
        throw ParseError("number too large", start);
      }
    }
    return v;
  }

  Exponent parse_exponent() {
    skip_space();
    std::size_t start = pos_;
    auto word = take_while([](unsigned char c) { return std::isalnum(c) != 0; });
    if (word == "inf") return kInf;
    for (char c : word) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("bad exponent", start);
    }
    auto v = parse_uint(start, word);
    if (v == std::numeric_limits<std::uint64_t>::max()) throw ParseError("exponent too large", start);
    return Exponent(v);
  }

  bool optional_caret() {
    skip_space();
    if (!at_end() && text_[pos_] == '^') {
      ++pos_;
      return true;
    }
    return false;
  }

  void parse_term() {
    std::size_t start = pos_;
    auto word = take_while([](unsigned char c) { return std::isalnum(c) != 0; });
    if (word == "rest") {
      if (!optional_caret()) throw ParseError("'rest' needs an exponent", pos_);
      rest_ = rest_ + parse_exponent();
      return;
    }
    for (char c : word) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("expected a prime or 'rest'", start);
    }
    auto base = parse_uint(start, word);
    Exponent e = optional_caret() ? parse_exponent() : Exponent(1);
    if (base == 1) return;
    if (!is_prime(base)) throw ParseError("base " + std::to_string(base) + " is not prime", start);
    auto it = support_.find(base);
    if (it == support_.end()) {
      support_.emplace(base, e);
    } else {
      it->second = it->second + e;
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  SteinitzNumber::Support support_;
  Exponent rest_{0};
};

}  // namespace

SteinitzNumber parse_steinitz(std::string_view text) { return SteinitzParser(text).parse(); }

std::string to_string(const SteinitzNumber& s) {
  std::vector<std::string> terms;
  for (const auto& [p, e] : s.support()) terms.push_back(std::to_string(p) + "^" + e.to_string());
  if (!s.rest().is_zero()) terms.push_back("rest^" + s.rest().to_string());
  if (terms.empty()) return "1";
  std::string out = terms.front();
  for (std::size_t i = 1; i < terms.size(); ++i) out += " * " + terms[i];
  return out;
}

}  // namespace locmat
