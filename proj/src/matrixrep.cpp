#include "locmat/matrixrep.hpp"

#include <algorithm>
#include <map>

#include "locmat/clifford_io.hpp"
#include "locmat/error.hpp"

namespace locmat {

namespace {

std::string shape(const ExactMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

std::size_t checked_power(int level, int n) {
  std::size_t size = 1;
  for (int i = 0; i < n; ++i) {
    size *= static_cast<std::size_t>(level);
    if (size > kMaxRepDimension) {
      throw TruncationTooLarge("representation size " + std::to_string(level) + "^" +
                               std::to_string(n) + " exceeds " +
                               std::to_string(kMaxRepDimension));
    }
  }
  return size;
}

void check_square_family(std::span<const ExactMatrix> mats) {
  for (const auto& m : mats) {
    if (m.rows() != m.cols()) throw DimensionMismatch("matrix " + shape(m) + " is not square");
    if (m.rows() != mats.front().rows()) {
      throw DimensionMismatch("matrices of different sizes: " + shape(mats.front()) + " and " +
                              shape(m));
    }
    if (m.level() != mats.front().level()) throw LevelMismatch("matrices of different levels");
  }
}

}  // namespace

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, int level)
    : cols_(cols), level_(level), rows_(rows) {
  if (level < 2) throw DomainError("matrix level must be >= 2");
}

ExactMatrix ExactMatrix::identity(std::size_t n, int level) {
  ExactMatrix m(n, n, level);
  for (std::size_t i = 0; i < n; ++i) m.rows_[i].emplace_back(i, CycElem::one(level));
  return m;
}

ExactMatrix ExactMatrix::unit(std::size_t n, std::size_t r, std::size_t c, int level) {
  ExactMatrix m(n, n, level);
  m.set(r, c, CycElem::one(level));
  return m;
}

CycElem ExactMatrix::at(std::size_t r, std::size_t c) const {
  const auto& row = rows_.at(r);
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const auto& e, std::size_t k) { return e.first < k; });
  return it != row.end() && it->first == c ? it->second : CycElem::zero(level_);
}

void ExactMatrix::set(std::size_t r, std::size_t c, const CycElem& value) {
  if (c >= cols_) throw DimensionMismatch("column " + std::to_string(c) + " out of range");
  if (value.level() != level_) throw LevelMismatch("entry level differs from matrix level");
  auto& row = rows_.at(r);
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const auto& e, std::size_t k) { return e.first < k; });
  const bool present = it != row.end() && it->first == c;
  if (value.is_zero()) {
    if (present) row.erase(it);
  } else if (present) {
    it->second = value;
  } else {
    row.emplace(it, c, value);
  }
}

std::size_t ExactMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& row : rows_) n += row.size();
  return n;
}

SparseVector ExactMatrix::vectorize() const {
  SparseVector out;
  out.reserve(nonzeros());
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (const auto& [c, v] : rows_[r]) out.emplace_back(c * rows_.size() + r, v);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

void ExactMatrix::check_same_shape(const ExactMatrix& other) const {
  if (rows() != other.rows() || cols_ != other.cols_) {
    throw DimensionMismatch("shape " + shape(*this) + " vs " + shape(other));
  }
  if (level_ != other.level_) throw LevelMismatch("matrix levels differ");
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& other) {
  check_same_shape(other);
  const CycElem one = CycElem::one(level_);
  for (std::size_t r = 0; r < rows_.size(); ++r) rows_[r] = axpy(rows_[r], one, other.rows_[r]);
  return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& other) {
  check_same_shape(other);
  const CycElem minus_one = -CycElem::one(level_);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    rows_[r] = axpy(rows_[r], minus_one, other.rows_[r]);
  }
  return *this;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows()) throw DimensionMismatch("product " + shape(a) + " * " + shape(b));
  if (a.level_ != b.level_) throw LevelMismatch("matrix levels differ");
  ExactMatrix out(a.rows(), b.cols_, a.level_);
  std::map<std::size_t, CycElem> acc;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    acc.clear();
    for (const auto& [k, av] : a.rows_[r]) {
      for (const auto& [c, bv] : b.rows_[k]) {
        auto [it, inserted] = acc.try_emplace(c, av * bv);
        if (!inserted) it->second += av * bv;
      }
    }
    for (auto& [c, v] : acc) {
      if (!v.is_zero()) out.rows_[r].emplace_back(c, std::move(v));
    }
  }
  return out;
}

ExactMatrix operator*(const CycElem& c, const ExactMatrix& a) {
  if (c.level() != a.level_) throw LevelMismatch("scalar level differs from matrix level");
  ExactMatrix out(a.rows(), a.cols_, a.level_);
  if (c.is_zero()) return out;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (const auto& [k, v] : a.rows_[r]) out.rows_[r].emplace_back(k, c * v);
  }
  return out;
}

ExactMatrix power(const ExactMatrix& m, unsigned long long k) {
  if (m.rows() != m.cols()) throw DimensionMismatch("power of non-square " + shape(m));
  ExactMatrix result = ExactMatrix::identity(m.rows(), m.level());
  ExactMatrix base = m;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.level() != b.level()) throw LevelMismatch("kron of matrices with different levels");
  ExactMatrix out(a.rows() * b.rows(), a.cols() * b.cols(), a.level());
  for (std::size_t ra = 0; ra < a.rows(); ++ra) {
    for (std::size_t rb = 0; rb < b.rows(); ++rb) {
      auto& row = out.rows_[ra * b.rows() + rb];
      for (const auto& [ca, va] : a.row(ra)) {
        for (const auto& [cb, vb] : b.row(rb)) row.emplace_back(ca * b.cols() + cb, va * vb);
      }
    }
  }
  return out;
}

ExactMatrix clock(int level) {
  ExactMatrix m(static_cast<std::size_t>(level), static_cast<std::size_t>(level), level);
  for (int k = 0; k < level; ++k) {
    m.set(static_cast<std::size_t>(k), static_cast<std::size_t>(k), CycElem::root_power(level, k));
  }
  return m;
}

ExactMatrix shift(int level) {
  const auto l = static_cast<std::size_t>(level);
  ExactMatrix m(l, l, level);
  for (std::size_t k = 0; k < l; ++k) m.set((k + 1) % l, k, CycElem::one(level));
  return m;
}

ExactMatrix jw_generator(int k, int n, int level) {
  if (n < 0 || k < 1 || k > n) {
    throw DomainError("jw_generator: need 1 <= k <= n, got k=" + std::to_string(k) +
                      " n=" + std::to_string(n));
  }
  checked_power(level, n);
  const auto c = clock(level);
  const auto s = shift(level);
  const auto id = ExactMatrix::identity(static_cast<std::size_t>(level), level);
  ExactMatrix out = ExactMatrix::identity(1, level);
  for (int slot = 1; slot <= n; ++slot) out = kron(out, slot < k ? c : slot == k ? s : id);
  return out;
}

RepAssignment RepAssignment::standard(int n, int level) {
  std::vector<GeneratorIndex> indices;
  for (int k = 1; k <= n; ++k) indices.emplace_back(static_cast<long>(k));
  return standard(indices, level);
}

RepAssignment RepAssignment::standard(std::span<const GeneratorIndex> indices, int level) {
  RepAssignment rep;
  rep.level = level;
  rep.indices.assign(indices.begin(), indices.end());
  std::sort(rep.indices.begin(), rep.indices.end());
  rep.indices.erase(std::unique(rep.indices.begin(), rep.indices.end()), rep.indices.end());
  const int n = static_cast<int>(rep.indices.size());
  checked_power(level, n);
  for (int k = 1; k <= n; ++k) rep.images.push_back(jw_generator(k, n, level));
  return rep;
}

std::size_t RepAssignment::dimension() const {
  return images.empty() ? 1 : images.front().rows();
}

RelationReport verify_relations(const RepAssignment& rep) {
  RelationReport report;
  auto fail = [&](std::string what) {
    report.ok = false;
    report.failures.push_back(std::move(what));
  };
  const auto l = static_cast<unsigned long long>(rep.level);
  const auto id = ExactMatrix::identity(rep.dimension(), rep.level);
  const auto z = CycElem::root_power(rep.level, 1);
  auto name = [&](std::size_t k) {
    return k < rep.indices.size() ? "g[" + to_string(rep.indices[k]) + "]"
                                  : "g" + std::to_string(k + 1);
  };

  std::vector<ExactMatrix> inverses;
  for (std::size_t k = 0; k < rep.images.size(); ++k) {
    const auto& g = rep.images[k];
    if (g.rows() != g.cols() || g.rows() != rep.dimension()) {
      fail(name(k) + ": shape " + shape(g) + " does not match the representation");
      return report;
    }
    if (power(g, l) != id) fail(name(k) + "^" + std::to_string(l) + " != I");
    inverses.push_back(power(g, l - 1));
  }
  for (std::size_t i = 0; i < rep.images.size(); ++i) {
    for (std::size_t j = i + 1; j < rep.images.size(); ++j) {
      const auto lhs = inverses[i] * rep.images[j] * rep.images[i];
      if (lhs == z * rep.images[j]) continue;
      const bool reversed = lhs == root_power(rep.level, -1) * rep.images[j];
      fail(name(i) + "^-1 " + name(j) + " " + name(i) + " != z " + name(j) +
           (reversed ? " (twist reversed: got z^-1)" : ""));
    }
  }
  return report;
}

ExactMatrix rep_element(const CliffordElement& a, const RepAssignment& rep) {
  if (a.level() != rep.level) throw LevelMismatch("element level differs from representation level");
  const std::size_t dim = rep.dimension();
  ExactMatrix out(dim, dim, rep.level);
  // Cache g^e for each generator as it is needed.
  std::map<std::pair<std::size_t, int>, ExactMatrix> powers;
  for (const auto& [m, c] : a.terms()) {
    ExactMatrix image = ExactMatrix::identity(dim, rep.level);
    for (const auto& f : m.factors()) {
      auto it = std::lower_bound(rep.indices.begin(), rep.indices.end(), f.index);
      if (it == rep.indices.end() || !(*it == f.index)) {
        throw UnmappedIndex("index " + to_string(f.index) + " is not mapped by the representation");
      }
      const auto k = static_cast<std::size_t>(it - rep.indices.begin());
      auto key = std::make_pair(k, f.exponent);
      auto pit = powers.find(key);
      if (pit == powers.end()) {
        pit = powers.emplace(key, power(rep.images.at(k), static_cast<unsigned long long>(f.exponent)))
                  .first;
      }
      image = image * pit->second;
    }
    out += c * image;
  }
  return out;
}

std::size_t spanned_dimension(std::span<const ExactMatrix> mats) {
  if (mats.empty()) return 1;  // the scalars
  check_square_family(mats);
  const std::size_t d = mats.front().rows();
  const int level = mats.front().level();

  // Degree-by-degree closure: right-multiply each newly independent element
  // by every generator until nothing new appears.
  RowEchelon span(d * d, level);
  std::vector<ExactMatrix> frontier;
  auto consider = [&](const ExactMatrix& m) {
    if (!span.insert(m.vectorize())) return;
    if (span.rank() > kMaxTruncation) {
      throw TruncationTooLarge("spanned dimension exceeds " + std::to_string(kMaxTruncation));
    }
    frontier.push_back(m);
  };
  consider(ExactMatrix::identity(d, level));
  for (const auto& m : mats) consider(m);
  while (!frontier.empty()) {
    auto current = std::move(frontier);
    frontier.clear();
    for (const auto& e : current) {
      for (const auto& g : mats) consider(e * g);
    }
  }
  return span.rank();
}

bool faithfulness_check(int n, int level) {
  if (n < 0) throw DomainError("faithfulness_check: n must be >= 0");
  std::size_t count = 1;
  for (int i = 0; i < n; ++i) {
    count *= static_cast<std::size_t>(level);
    if (count > kMaxTruncation) {
      throw TruncationTooLarge("faithfulness_check: " + std::to_string(level) + "^" +
                               std::to_string(n) + " monomials exceed " +
                               std::to_string(kMaxTruncation));
    }
  }
  const auto rep = RepAssignment::standard(n, level);
  const std::size_t d = rep.dimension();
  RowEchelon span(d * d, level);
  for (const auto& m : enumerate_monomials(rep.indices, level)) {
    if (!span.insert(rep_element(CliffordElement(level, m), rep).vectorize())) return false;
  }
  return true;
}

namespace {

// Rows of the linear map  coefficients -> sum_b c_b [B_b, m]  for each m,
// with equations indexed by matrix entry.
Centralizer solve_commutant(std::span<const ExactMatrix> mats,
                            std::span<const ExactMatrix> candidates, int level) {
  RowEchelon system(candidates.size(), level);
  for (const auto& m : mats) {
    std::map<std::size_t, SparseVector> rows;
    for (std::size_t b = 0; b < candidates.size(); ++b) {
      const auto comm = candidates[b] * m - m * candidates[b];
      for (const auto& [entry, v] : comm.vectorize()) rows[entry].emplace_back(b, v);
    }
    for (auto& [entry, row] : rows) system.insert(std::move(row));
  }
  Centralizer out;
  for (const auto& v : system.nullspace()) {
    const auto& first = candidates.front();
    ExactMatrix e(first.rows(), first.cols(), level);
    for (const auto& [b, c] : v) e += c * candidates[b];
    out.basis.push_back(std::move(e));
  }
  out.dimension = out.basis.size();
  return out;
}

}  // namespace

Centralizer matrix_centralizer(std::span<const ExactMatrix> mats, std::size_t dim, int level) {
  check_square_family(mats);
  if (!mats.empty() && mats.front().rows() != dim) {
    throw DimensionMismatch("matrices are " + shape(mats.front()) + ", expected size " +
                            std::to_string(dim));
  }
  if (!mats.empty() && mats.front().level() != level) throw LevelMismatch("matrix level differs");
  if (dim * dim > kMaxTruncation) {
    throw TruncationTooLarge("centralizer in M_" + std::to_string(dim) + " has more than " +
                             std::to_string(kMaxTruncation) + " unknowns");
  }
  // Matrix units in column-major order, so solution coordinates match
  // vectorize().
  std::vector<ExactMatrix> units;
  units.reserve(dim * dim);
  for (std::size_t c = 0; c < dim; ++c) {
    for (std::size_t r = 0; r < dim; ++r) units.push_back(ExactMatrix::unit(dim, r, c, level));
  }
  if (units.empty()) return {};
  return solve_commutant(mats, units, level);
}

Centralizer matrix_centralizer_within(std::span<const ExactMatrix> mats,
                                      std::span<const ExactMatrix> subalgebra_basis) {
  if (subalgebra_basis.empty()) return {};
  check_square_family(subalgebra_basis);
  check_square_family(mats);
  if (!mats.empty() && mats.front().rows() != subalgebra_basis.front().rows()) {
    throw DimensionMismatch("probe and subalgebra matrices differ in size");
  }
  if (!mats.empty() && mats.front().level() != subalgebra_basis.front().level()) {
    throw LevelMismatch("probe and subalgebra matrices differ in level");
  }
  if (subalgebra_basis.size() > kMaxTruncation) {
    throw TruncationTooLarge("subalgebra basis exceeds " + std::to_string(kMaxTruncation));
  }
  return solve_commutant(mats, subalgebra_basis, subalgebra_basis.front().level());
}

std::string to_string(const ExactMatrix& m) {
  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c > 0) out += '\t';
      out += to_string(m.at(r, c));
    }
    out += '\n';
  }
  return out;
}

}  // namespace locmat
