#include "locmat/clifford.hpp"

#include <algorithm>
#include <string>

#include "locmat/error.hpp"
#include "locmat/linalg.hpp"

namespace locmat {

namespace {

int mod(long long a, int l) {
  long long r = a % l;
  return static_cast<int>(r < 0 ? r + l : r);
}

void check_level(int level) {
  if (level < 2) throw DomainError("Clifford level must be >= 2, got " + std::to_string(level));
}

}  // namespace

Monomial::Monomial(std::vector<Factor> factors, int level) : factors_(std::move(factors)) {
  check_level(level);
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i].exponent < 1 || factors_[i].exponent >= level) {
      throw DomainError("monomial exponent " + std::to_string(factors_[i].exponent) +
                        " outside [1, " + std::to_string(level - 1) + "]");
    }
    if (i > 0 && !(factors_[i - 1].index < factors_[i].index)) {
      throw DomainError("monomial indices must strictly increase");
    }
  }
}

int Monomial::exponent_of(const GeneratorIndex& i) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), i,
                             [](const Factor& f, const GeneratorIndex& k) { return f.index < k; });
  return it != factors_.end() && it->index == i ? it->exponent : 0;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  const auto& fa = a.factors_;
  const auto& fb = b.factors_;
  auto by_index = std::lexicographical_compare_three_way(
      fa.begin(), fa.end(), fb.begin(), fb.end(),
      [](const Factor& x, const Factor& y) { return x.index <=> y.index; });
  if (by_index != 0) return by_index;
  return std::lexicographical_compare_three_way(
      fa.begin(), fa.end(), fb.begin(), fb.end(),
      [](const Factor& x, const Factor& y) { return x.exponent <=> y.exponent; });
}

std::pair<int, Monomial> monomial_product(const Monomial& u, const Monomial& v, int level) {
  check_level(level);
  const auto& fu = u.factors_;
  const auto& fv = v.factors_;

  // A factor x_i^a of v moving left past x_j^b of u (i < j) picks up z^{ab},
  // so each v-factor contributes a * (sum of u-exponents with larger index).
  long long above = 0;
  for (const auto& f : fu) above += f.exponent;

  Monomial w;
  w.factors_.reserve(fu.size() + fv.size());
  long long phase = 0;
  std::size_t i = 0;
  for (const auto& g : fv) {
    while (i < fu.size() && fu[i].index < g.index) {
      above -= fu[i].exponent;
      w.factors_.push_back(fu[i++]);
    }
    if (i < fu.size() && fu[i].index == g.index) {
      above -= fu[i].exponent;
      phase += static_cast<long long>(g.exponent) * above;
      int e = mod(static_cast<long long>(fu[i].exponent) + g.exponent, level);
      if (e != 0) w.factors_.push_back(Factor{g.index, e});
      ++i;
    } else {
      phase += static_cast<long long>(g.exponent) * above;
      int e = mod(g.exponent, level);
      if (e != 0) w.factors_.push_back(Factor{g.index, e});
    }
    phase %= level;
  }
  while (i < fu.size()) w.factors_.push_back(fu[i++]);
  return {mod(phase, level), std::move(w)};
}

CliffordElement::CliffordElement(int level, const Monomial& m) : level_(level) {
  terms_.emplace(m, CycElem::one(level));
}

CliffordElement::CliffordElement(const CycElem& coeff, const Monomial& m) : level_(coeff.level()) {
  if (!coeff.is_zero()) terms_.emplace(m, coeff);
}

CycElem CliffordElement::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? CycElem::zero(level_) : it->second;
}

void CliffordElement::check_level(int other) const {
  if (other != level_) {
    throw LevelMismatch("Clifford levels differ: " + std::to_string(level_) + " vs " +
                        std::to_string(other));
  }
}

void CliffordElement::add_term(const Monomial& m, const CycElem& coeff) {
  check_level(coeff.level());
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

CliffordElement& CliffordElement::operator+=(const CliffordElement& other) {
  check_level(other.level_);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

CliffordElement& CliffordElement::operator-=(const CliffordElement& other) {
  check_level(other.level_);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

CliffordElement operator*(const CliffordElement& a, const CliffordElement& b) {
  a.check_level(b.level_);
  const int l = a.level_;
  // Powers of z are looked up once per phase value.
  std::vector<CycElem> roots;
  roots.reserve(static_cast<std::size_t>(l));
  for (int k = 0; k < l; ++k) roots.push_back(CycElem::root_power(l, k));

  CliffordElement out(l);
  for (const auto& [mu, cu] : a.terms_) {
    for (const auto& [mv, cv] : b.terms_) {
      auto [phase, w] = monomial_product(mu, mv, l);
      CycElem c = cu * cv;
      if (phase != 0) c *= roots[static_cast<std::size_t>(phase)];
      out.add_term(w, c);
    }
  }
  return out;
}

CliffordElement operator*(const CycElem& c, const CliffordElement& a) {
  a.check_level(c.level());
  CliffordElement out(a.level_);
  if (c.is_zero()) return out;
  for (const auto& [m, coeff] : a.terms_) out.terms_.emplace(m, c * coeff);
  return out;
}

CliffordElement normal_form(const Word& word, int level) {
  check_level(level);
  Monomial acc;
  long long phase = 0;
  for (const auto& letter : word) {
    int e = mod(letter.power, level);
    if (e == 0) continue;
    auto [p, w] = monomial_product(acc, Monomial::generator(letter.index, e, level), level);
    phase = (phase + p) % level;
    acc = std::move(w);
  }
  return CliffordElement(CycElem::root_power(level, phase), acc);
}

CliffordElement elem_mul(const CliffordElement& a, const CliffordElement& b) { return a * b; }

CliffordElement commutator(const CliffordElement& a, const CliffordElement& b) {
  return a * b - b * a;
}

CliffordElement automorphism_phi(const GeneratorIndex& i, const CliffordElement& a) {
  CliffordElement out(a.level());
  for (const auto& [m, c] : a.terms()) {
    out.add_term(m, c * CycElem::root_power(a.level(), m.exponent_of(i)));
  }
  return out;
}

int conjugation_phase(const Monomial& v, const GeneratorIndex& j, int level) {
  check_level(level);
  long long s = 0;
  for (const auto& f : v.factors()) {
    if (f.index > j) s += f.exponent;
    if (f.index < j) s -= f.exponent;
  }
  return mod(s, level);
}

namespace {

std::vector<GeneratorIndex> sorted_unique(std::span<const GeneratorIndex> indices) {
  std::vector<GeneratorIndex> out(indices.begin(), indices.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t count_monomials(std::size_t n, int level, std::size_t limit) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total *= static_cast<std::size_t>(level);
    if (total > limit) {
      throw TruncationTooLarge("truncation with " + std::to_string(n) + " generators at level " +
                               std::to_string(level) + " exceeds " + std::to_string(limit) +
                               " monomials");
    }
  }
  return total;
}

// Enumeration cap for the congruence method; it never builds a linear system.
constexpr std::size_t kMaxEnumeration = std::size_t{1} << 22;

}  // namespace

std::vector<Monomial> enumerate_monomials(std::span<const GeneratorIndex> indices, int level) {
  check_level(level);
  const auto gens = sorted_unique(indices);
  const std::size_t total = count_monomials(gens.size(), level, kMaxEnumeration);

  std::vector<Monomial> out;
  out.reserve(total);
  std::vector<int> exps(gens.size(), 0);
  for (std::size_t count = 0; count < total; ++count) {
    std::vector<Factor> factors;
    for (std::size_t k = 0; k < gens.size(); ++k) {
      if (exps[k] != 0) factors.push_back(Factor{gens[k], exps[k]});
    }
    out.emplace_back(std::move(factors), level);
    for (std::size_t k = gens.size(); k-- > 0;) {
      if (++exps[k] < level) break;
      exps[k] = 0;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Monomial> centralizer_congruence(std::span<const GeneratorIndex> ambient,
                                             std::span<const GeneratorIndex> probes, int level) {
  const auto probe_set = sorted_unique(probes);
  std::vector<Monomial> out;
  for (auto& m : enumerate_monomials(ambient, level)) {
    bool central = std::all_of(probe_set.begin(), probe_set.end(), [&](const GeneratorIndex& j) {
      return conjugation_phase(m, j, level) == 0;
    });
    if (central) out.push_back(std::move(m));
  }
  return out;
}

std::vector<CliffordElement> centralizer_bruteforce(std::span<const GeneratorIndex> ambient,
                                                    std::span<const GeneratorIndex> probes,
                                                    int level) {
  check_level(level);
  count_monomials(sorted_unique(ambient).size(), level, kMaxTruncation);
  const auto basis = enumerate_monomials(ambient, level);
  const auto probe_set = sorted_unique(probes);

  // Column c is the coefficient of basis[c]; every probe contributes the
  // rows of the commutator map a -> [a, x_j] in the monomial basis.
  RowEchelon system(basis.size(), level);
  for (const auto& j : probe_set) {
    const CliffordElement xj(level, Monomial::generator(j, 1, level));
    std::map<Monomial, SparseVector> rows;
    for (std::size_t c = 0; c < basis.size(); ++c) {
      const auto image = commutator(CliffordElement(level, basis[c]), xj);
      for (const auto& [m, coeff] : image.terms()) rows[m].emplace_back(c, coeff);
    }
    for (auto& [m, row] : rows) system.insert(std::move(row));
  }

  std::vector<CliffordElement> out;
  for (const auto& v : system.nullspace()) {
    CliffordElement e(level);
    for (const auto& [c, coeff] : v) e.add_term(basis[c], coeff);
    out.push_back(std::move(e));
  }
  return out;
}

bool spans_equal(std::span<const CliffordElement> a, std::span<const CliffordElement> b,
                 int level) {
  std::map<Monomial, std::size_t> columns;
  for (auto family : {a, b}) {
    for (const auto& e : family) {
      for (const auto& [m, c] : e.terms()) columns.emplace(m, 0);
    }
  }
  std::size_t next = 0;
  for (auto& [m, col] : columns) col = next++;

  auto to_row = [&](const CliffordElement& e) {
    SparseVector row;
    for (const auto& [m, c] : e.terms()) row.emplace_back(columns.at(m), c);
    return row;  // map order keeps columns ascending
  };
  auto rank_of = [&](std::initializer_list<std::span<const CliffordElement>> families) {
    RowEchelon r(columns.size(), level);
    for (auto family : families) {
      for (const auto& e : family) r.insert(to_row(e));
    }
    return r.rank();
  };
  const auto ra = rank_of({a});
  return ra == rank_of({b}) && ra == rank_of({a, b});
}

}  // namespace locmat
