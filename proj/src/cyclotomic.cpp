#include "locmat/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "locmat/error.hpp"

namespace locmat {

namespace {

using IntPoly = std::vector<std::int64_t>;
using RatPoly = std::vector<Rational>;

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void trim(RatPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

// Exact division of integer polynomials by a monic divisor.
IntPoly divide_exact(IntPoly num, const IntPoly& den) {
  trim(num);
  const std::size_t dd = den.size() - 1;
  if (num.size() < den.size()) throw std::logic_error("cyclotomic: inexact division");
  IntPoly quot(num.size() - dd, 0);
  for (std::size_t k = num.size(); k-- > dd;) {
    std::int64_t c = num[k];
    quot[k - dd] = c;
    if (c == 0) continue;
    for (std::size_t i = 0; i <= dd; ++i) num[k - dd + i] -= c * den[i];
  }
  for (std::int64_t r : num) {
    if (r != 0) throw std::logic_error("cyclotomic: inexact division");
  }
  return quot;
}

}  // namespace

std::vector<std::int64_t> cyclotomic_polynomial(int l) {
  if (l < 1) throw DomainError("cyclotomic_polynomial: l must be >= 1");
  static std::mutex mutex;
  static std::map<int, IntPoly> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(l); it != cache.end()) return it->second;
  }
  IntPoly poly(static_cast<std::size_t>(l) + 1, 0);
  poly[0] = -1;
  poly[static_cast<std::size_t>(l)] = 1;
  for (int d = 1; d < l; ++d) {
    if (l % d == 0) poly = divide_exact(std::move(poly), cyclotomic_polynomial(d));
  }
  std::lock_guard lock(mutex);
  cache.emplace(l, poly);
  return poly;
}

int euler_phi(int l) {
  if (l < 1) throw DomainError("euler_phi: l must be >= 1");
  int result = l;
  int n = l;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace detail {

struct LevelData {
  int level = 0;
  int degree = 0;
  IntPoly modulus;
  // powers[k] = z^k reduced, for 0 <= k < level.
  std::vector<RatPoly> powers;
};

namespace {

std::unique_ptr<LevelData> build_level(int l) {
  auto data = std::make_unique<LevelData>();
  data->level = l;
  data->modulus = cyclotomic_polynomial(l);
  data->degree = static_cast<int>(data->modulus.size()) - 1;
  const auto d = static_cast<std::size_t>(data->degree);
  RatPoly current(d, Rational(0));
  current[0] = 1;
  for (int k = 0; k < l; ++k) {
    data->powers.push_back(current);
    // Multiply by z, folding z^d = -sum_{i<d} Phi_i z^i.
    Rational top = current[d - 1];
    for (std::size_t i = d - 1; i > 0; --i) current[i] = current[i - 1];
    current[0] = 0;
    if (sgn(top) != 0) {
      for (std::size_t i = 0; i < d; ++i) current[i] -= top * data->modulus[i];
    }
  }
  return data;
}

}  // namespace

const LevelData* level_data(int l) {
  if (l < 2) throw DomainError("cyclotomic level must be >= 2, got " + std::to_string(l));
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<LevelData>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(l);
  if (it == cache.end()) it = cache.emplace(l, build_level(l)).first;
  return it->second.get();
}

}  // namespace detail

namespace {

// Folds an arbitrary polynomial in z into the reduced basis.
std::vector<Rational> reduce(const detail::LevelData& data, std::span<const Rational> poly) {
  const auto d = static_cast<std::size_t>(data.degree);
  std::vector<Rational> out(d, Rational(0));
  for (std::size_t k = 0; k < poly.size(); ++k) {
    if (sgn(poly[k]) == 0) continue;
    if (k < d) {
      out[k] += poly[k];
      continue;
    }
    const auto& zk = data.powers[k % static_cast<std::size_t>(data.level)];
    for (std::size_t i = 0; i < d; ++i) {
      if (sgn(zk[i]) != 0) out[i] += poly[k] * zk[i];
    }
  }
  return out;
}

RatPoly poly_sub(const RatPoly& a, const RatPoly& b) {
  RatPoly out(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

RatPoly poly_mul(const RatPoly& a, const RatPoly& b) {
  if (a.empty() || b.empty()) return {};
  RatPoly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

// Quotient and remainder; b must be nonzero and trimmed.
std::pair<RatPoly, RatPoly> poly_divmod(RatPoly a, const RatPoly& b) {
  trim(a);
  if (a.size() < b.size()) return {{}, a};
  RatPoly q(a.size() - b.size() + 1, Rational(0));
  const Rational& lead = b.back();
  for (std::size_t k = a.size(); k-- >= b.size();) {
    Rational c = a[k] / lead;
    q[k - (b.size() - 1)] = c;
    if (sgn(c) == 0) continue;
    for (std::size_t i = 0; i < b.size(); ++i) a[k - (b.size() - 1) + i] -= c * b[i];
  }
  trim(a);
  trim(q);
  return {q, a};
}

}  // namespace

CycElem::CycElem(int level)
    : data_(detail::level_data(level)),
      coeffs_(static_cast<std::size_t>(data_->degree), Rational(0)) {}

CycElem::CycElem(int level, const Rational& value) : CycElem(level) {
  coeffs_[0] = value;
  coeffs_[0].canonicalize();
}

CycElem::CycElem(int level, std::span<const Rational> poly)
    : data_(detail::level_data(level)), coeffs_(reduce(*data_, poly)) {
  for (auto& c : coeffs_) c.canonicalize();
}

CycElem CycElem::root_power(int level, long long k) {
  CycElem out(level);
  long long r = k % level;
  if (r < 0) r += level;
  out.coeffs_ = out.data_->powers[static_cast<std::size_t>(r)];
  return out;
}

int CycElem::level() const { return data_->level; }

bool CycElem::is_zero() const {
  for (const auto& c : coeffs_) {
    if (sgn(c) != 0) return false;
  }
  return true;
}

bool CycElem::is_one() const {
  if (coeffs_[0] != 1) return false;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) != 0) return false;
  }
  return true;
}

void CycElem::check_level(const CycElem& other) const {
  if (data_ != other.data_) {
    throw LevelMismatch("cyclotomic levels differ: " + std::to_string(level()) + " vs " +
                        std::to_string(other.level()));
  }
}

CycElem& CycElem::operator+=(const CycElem& other) {
  check_level(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

CycElem& CycElem::operator-=(const CycElem& other) {
  check_level(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

CycElem& CycElem::operator*=(const CycElem& other) {
  check_level(other);
  const std::size_t d = coeffs_.size();
  if (d == 1) {
    coeffs_[0] *= other.coeffs_[0];
    return *this;
  }
  std::vector<Rational> product(2 * d - 1, Rational(0));
  for (std::size_t i = 0; i < d; ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (sgn(other.coeffs_[j]) != 0) product[i + j] += coeffs_[i] * other.coeffs_[j];
    }
  }
  coeffs_ = reduce(*data_, product);
  return *this;
}

CycElem CycElem::operator-() const {
  CycElem out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CycElem CycElem::inv() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in Q(z_" + std::to_string(level()) + ")");
  // Extended Euclid on (Phi_l, a): track s with s * a = r (mod Phi_l).
  RatPoly r0(data_->modulus.begin(), data_->modulus.end());
  RatPoly r1(coeffs_.begin(), coeffs_.end());
  trim(r1);
  RatPoly s0;
  RatPoly s1{Rational(1)};
  while (!r1.empty()) {
    auto [q, r] = poly_divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    RatPoly s = poly_sub(s0, poly_mul(q, s1));
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // Phi_l is irreducible, so the gcd r0 is a nonzero constant.
  for (auto& c : s0) c /= r0[0];
  return CycElem(level(), s0);
}

CycElem CycElem::pow(long long k) const {
  CycElem base = k < 0 ? inv() : *this;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-(k + 1)) + 1
                               : static_cast<unsigned long long>(k);
  CycElem result = one(level());
  while (e > 0) {
    if (e & 1U) result *= base;
    base *= base;
    e >>= 1U;
  }
  return result;
}

CycElem CycElem::evaluate(std::span<const std::int64_t> poly, const CycElem& at) {
  CycElem acc(at.level());
  for (std::size_t k = poly.size(); k-- > 0;) {
    acc *= at;
    acc += CycElem(at.level(), Rational(poly[k]));
  }
  return acc;
}

bool operator==(const CycElem& a, const CycElem& b) {
  return a.data_ == b.data_ && a.coeffs_ == b.coeffs_;
}

CycElem add(const CycElem& a, const CycElem& b) { return a + b; }
CycElem sub(const CycElem& a, const CycElem& b) { return a - b; }
CycElem mul(const CycElem& a, const CycElem& b) { return a * b; }

std::string to_string(const CycElem& value) {
  std::string out;
  const auto coeffs = value.coeffs();
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const Rational& c = coeffs[k];
    if (sgn(c) == 0) continue;
    std::string magnitude = format_rational(out.empty() ? c : Rational(abs(c)));
    if (!out.empty()) out += sgn(c) < 0 ? " - " : " + ";
    out += magnitude;
    if (k == 1) out += "*z";
    if (k > 1) out += "*z^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

}  // namespace locmat
