// Acceptance suite: one PASS/FAIL line per criterion, exact arithmetic,
// wall-clock budgets enforced. Exit status is nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "locmat/clifford.hpp"
#include "locmat/matrixrep.hpp"
#include "locmat/steinitz.hpp"
#include "oracles.hpp"

using namespace locmat;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

GeneratorIndex idx(long p, long q = 1) { return GeneratorIndex(Rational(p, q)); }

std::vector<GeneratorIndex> range_indices(int n) {
  std::vector<GeneratorIndex> out;
  for (int i = 1; i <= n; ++i) out.push_back(idx(i));
  return out;
}

std::vector<GeneratorIndex> midpoints(int n) {
  std::vector<GeneratorIndex> out;
  for (int i = 0; i <= n; ++i) out.push_back(idx(2 * i + 1, 2));
  return out;
}

std::string cfg(int l, int n) { return "l=" + std::to_string(l) + " n=" + std::to_string(n); }

bool is_prime_power(std::uint64_t n) {
  auto f = oracle::factorize(n);
  return f.size() == 1;
}

// 1. Odd l, interleaved probes: the centralizer is the scalars.
Outcome odd_level_scalar_centralizer() {
  Outcome o;
  for (int l : {3, 5, 7}) {
    for (int n = 1; n <= 3; ++n) {
      const auto ambient = range_indices(n);
      const auto probes = midpoints(n);
      const auto cong = centralizer_congruence(ambient, probes, l);
      o.require(cong == std::vector<Monomial>{Monomial{}}, cfg(l, n) + ": congruence is not {1}");
      const auto brute = centralizer_bruteforce(ambient, probes, l);
      o.require(brute.size() == 1, cfg(l, n) + ": brute-force dimension " +
                                       std::to_string(brute.size()) + " != 1");
      o.require(brute.size() == 1 && brute[0] == CliffordElement::unit(l),
                cfg(l, n) + ": brute-force basis is not the unit");
    }
  }
  return o;
}

// 2. l = 2: x1 x2 commutes with every interleaved probe.
Outcome even_level_commuting_pair() {
  Outcome o;
  const int l = 2;
  const auto ambient = range_indices(2);
  const auto probes = midpoints(2);
  const Monomial x1x2({Factor{idx(1), 1}, Factor{idx(2), 1}}, l);
  const auto cong = centralizer_congruence(ambient, probes, l);
  o.require(cong.size() >= 2, "congruence dimension < 2");
  o.require(std::find(cong.begin(), cong.end(), x1x2) != cong.end(), "x1 x2 missing (congruence)");
  const auto brute = centralizer_bruteforce(ambient, probes, l);
  o.require(brute.size() >= 2, "brute-force dimension < 2");
  std::vector<CliffordElement> with{CliffordElement(l, x1x2)};
  std::vector<CliffordElement> joined = brute;
  joined.push_back(with.front());
  o.require(spans_equal(brute, joined, l), "x1 x2 outside the brute-force span");
  for (const auto& j : probes) {
    const CliffordElement xj(l, Monomial::generator(j, 1, l));
    o.require(commutator(with.front(), xj).is_zero(), "x1 x2 fails to commute with a probe");
  }
  return o;
}

// 3. The two centralizer methods span the same subspace.
Outcome method_agreement() {
  Outcome o;
  std::mt19937_64 rng(20240607);
  for (int l = 2; l <= 5; ++l) {
    for (int n = 0; n <= 3; ++n) {
      const auto ambient = range_indices(n);
      std::uniform_int_distribution<int> count(0, 4);
      std::uniform_int_distribution<int> numer(-2, 4 * (n + 1) + 2);
      std::uniform_int_distribution<int> denom(1, 4);
      for (int trial = 0; trial < 50; ++trial) {
        std::vector<GeneratorIndex> probes;
        const int c = count(rng);
        for (int i = 0; i < c; ++i) probes.push_back(idx(numer(rng), denom(rng)));
        const auto cong = centralizer_congruence(ambient, probes, l);
        std::vector<CliffordElement> cong_elems;
        for (const auto& m : cong) cong_elems.emplace_back(l, m);
        const auto brute = centralizer_bruteforce(ambient, probes, l);
        o.require(brute.size() == cong.size() && spans_equal(cong_elems, brute, l),
                  cfg(l, n) + " trial " + std::to_string(trial) + ": spans differ");
      }
    }
  }
  return o;
}

// 4. Rewriting soundness and associativity.
Outcome rewriting_soundness() {
  Outcome o;
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> level(2, 5);
  std::uniform_int_distribution<int> length(0, 12);
  std::uniform_int_distribution<int> index(1, 5);
  std::uniform_int_distribution<int> power(-7, 7);
  for (int t = 0; t < 1000; ++t) {
    const int l = level(rng);
    Word w;
    const int len = length(rng);
    for (int i = 0; i < len; ++i) w.push_back({idx(index(rng)), power(rng)});
    auto [phase, factors] = oracle::rewrite_word(w, l);
    o.require(normal_form(w, l) == CliffordElement(root_power(l, phase), Monomial(factors, l)),
              "word " + std::to_string(t) + " disagrees with the rewriting oracle");
  }
  auto random_element = [&](int l) {
    std::uniform_int_distribution<int> terms(1, 5);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<int> exp(1, l - 1);
    CliffordElement e(l);
    const int k = terms(rng);
    for (int i = 0; i < k; ++i) {
      std::vector<Factor> fs;
      for (int j = 1; j <= 4; ++j) {
        if (coin(rng)) fs.push_back(Factor{idx(j), exp(rng)});
      }
      e.add_term(Monomial(fs, l), CycElem(l, Rational(coeff(rng))) * root_power(l, exp(rng)));
    }
    return e;
  };
  for (int t = 0; t < 200; ++t) {
    const int l = level(rng);
    const auto a = random_element(l);
    const auto b = random_element(l);
    const auto c = random_element(l);
    o.require((a * b) * c == a * (b * c), "associativity fails on triple " + std::to_string(t));
  }
  return o;
}

// 5. Clock-and-shift chain and the finite prefix of l^inf.
Outcome representation_chain() {
  Outcome o;
  for (int l = 2; l <= 7; ++l) {
    for (int n = 1; n <= 3; ++n) {
      o.require(verify_relations(RepAssignment::standard(n, l)).ok, cfg(l, n) + ": relations fail");
    }
    const auto rep = RepAssignment::standard(2, l);
    o.require(spanned_dimension(rep.images) == static_cast<std::size_t>(l * l),
              "l=" + std::to_string(l) + ": spanned_dimension(g1, g2) != l^2");

    std::vector<std::uint64_t> chain;
    std::uint64_t p = 1;
    for (int k = 1; k <= 8; ++k) chain.push_back(p *= static_cast<std::uint64_t>(l));
    const auto st = lcm_of_sequence(chain);
    o.require(st == SteinitzNumber::from_natural(p), "l=" + std::to_string(l) + ": lcm != l^8");
    const auto c = classify(st);
    o.require(c.natural && c.locally_finite && c.primary == is_prime_power(static_cast<std::uint64_t>(l)),
              "l=" + std::to_string(l) + ": classification of l^8");
  }
  for (int l = 2; l <= 7; ++l) {
    std::size_t size = 1;
    for (int n = 0; size <= 256; ++n, size *= static_cast<std::size_t>(l)) {
      o.require(faithfulness_check(n, l), cfg(l, n) + ": monomial images dependent");
    }
  }
  return o;
}

// 6. Tensor centralizer: probes (x) 1 inside rep(Clg(3,2)) (x) M_k.
Outcome tensor_centralizer() {
  Outcome o;
  const int l = 3;
  const auto rep = RepAssignment::standard(2, l);
  // The probes are both generators; their centralizer in Clg(3,2) is the scalars.
  o.require(centralizer_congruence(rep.indices, rep.indices, l) == std::vector<Monomial>{Monomial{}},
            "probe configuration is not scalar-centralizing");
  std::vector<ExactMatrix> a_basis;
  for (const auto& m : enumerate_monomials(rep.indices, l)) {
    a_basis.push_back(rep_element(CliffordElement(l, m), rep));
  }
  o.require(matrix_centralizer_within(rep.images, a_basis).dimension == 1,
            "centralizer of the probes in A is not 1-dimensional");
  for (std::size_t k = 1; k <= 3; ++k) {
    std::vector<ExactMatrix> basis;
    for (const auto& b : a_basis) {
      for (std::size_t c = 0; c < k; ++c) {
        for (std::size_t r = 0; r < k; ++r) basis.push_back(kron(b, ExactMatrix::unit(k, r, c, l)));
      }
    }
    std::vector<ExactMatrix> probes;
    for (const auto& g : rep.images) probes.push_back(kron(g, ExactMatrix::identity(k, l)));
    const auto cent = matrix_centralizer_within(probes, basis);
    o.require(cent.dimension == k * k, "k=" + std::to_string(k) + ": dimension " +
                                           std::to_string(cent.dimension) + " != k^2");
    const auto one = ExactMatrix::identity(rep.dimension(), l);
    for (const auto& m : cent.basis) {
      // 1 (x) a' has every k x k block structure of the identity on A.
      bool of_form = false;
      for (std::size_t c = 0; c < k && !of_form; ++c) {
        for (std::size_t r = 0; r < k && !of_form; ++r) {
          of_form = m == kron(one, ExactMatrix::unit(k, r, c, l));
        }
      }
      o.require(of_form, "k=" + std::to_string(k) + ": solution not of the form 1 (x) a'");
    }
  }
  return o;
}

// 7. Steinitz lattice/semiring laws and the product law on chains.
Outcome steinitz_laws() {
  Outcome o;
  std::mt19937_64 rng(1);
  const SteinitzNumber two_inf = parse_steinitz("2^inf");
  for (int t = 0; t < 10000 && o.ok; ++t) {
    const auto a = oracle::random_steinitz(rng);
    const auto b = oracle::random_steinitz(rng);
    const auto c = oracle::random_steinitz(rng);
    const auto at = " at sample " + std::to_string(t);
    o.require(mul(a, b) == mul(b, a), "mul commutativity" + at);
    o.require(lcm(a, b) == lcm(b, a) && gcd(a, b) == gcd(b, a), "lcm/gcd commutativity" + at);
    o.require(mul(mul(a, b), c) == mul(a, mul(b, c)), "mul associativity" + at);
    o.require(lcm(lcm(a, b), c) == lcm(a, lcm(b, c)), "lcm associativity" + at);
    o.require(gcd(gcd(a, b), c) == gcd(a, gcd(b, c)), "gcd associativity" + at);
    o.require(lcm(a, gcd(a, b)) == a && gcd(a, lcm(a, b)) == a, "absorption" + at);
    if (divides(a, b)) {
      o.require(divides(mul(a, c), mul(b, c)), "divides monotone under mul" + at);
      o.require(divides(lcm(a, c), lcm(b, c)), "divides monotone under lcm" + at);
    }
    o.require(divides(a, mul(a, b)), "a | ab" + at);
    o.require(mul(a, lcm(b, c)) == lcm(mul(a, b), mul(a, c)), "mul distributes over lcm" + at);
    o.require(mul(gcd(a, b), lcm(a, b)) == mul(a, b), "gcd * lcm = a * b" + at);
    o.require(mul(a, two_inf).exponent_of(2).is_infinite(), "infinite exponent absorbs" + at);
    o.require(a.exponent_of(3) + kInf == kInf && kInf + a.exponent_of(3) == kInf,
              "saturating addition" + at);
  }
  for (int t = 0; t < 100; ++t) {
    const auto ca = oracle::random_chain(rng);
    const auto cb = oracle::random_chain(rng);
    o.require(st_product_law_check(ca, cb), "product law fails on chain pair " + std::to_string(t));
  }
  return o;
}

struct Criterion {
  const char* id;
  const char* name;
  double budget_seconds;  // 0 means no stated budget
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC1", "odd-level interleaved probes centralize only scalars", 10.0, odd_level_scalar_centralizer},
      {"AC2", "l=2: x1 x2 lies in the probe centralizer", 0.0, even_level_commuting_pair},
      {"AC3", "congruence and brute-force centralizers span the same space", 60.0, method_agreement},
      {"AC4", "normal form matches rewriting oracle; product associative", 0.0, rewriting_soundness},
      {"AC5", "clock-and-shift relations, M_l spans, faithfulness, l^8 prefix", 30.0,
       representation_chain},
      {"AC6", "probes (x) 1 in A (x) M_k centralize exactly 1 (x) M_k", 0.0, tensor_centralizer},
      {"AC7", "Steinitz lattice/semiring laws and st(A (x) B) = st(A) st(B)", 10.0, steinitz_laws},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome.ok = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (outcome.ok && c.budget_seconds > 0 && seconds >= c.budget_seconds) {
      outcome.ok = false;
      outcome.detail = "exceeded " + std::to_string(c.budget_seconds) + " s budget";
    }
    std::printf("[%s] %s %s (%.2f s)%s%s\n", outcome.ok ? "PASS" : "FAIL", c.id, c.name, seconds,
                outcome.ok ? "" : ": ", outcome.detail.c_str());
    std::fflush(stdout);
    if (!outcome.ok) ++failures;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
