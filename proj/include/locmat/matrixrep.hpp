#pragma once

// Exact matrices over Q(z_l) and the clock-and-shift realization of finite
// truncations of Clg(l, I).
//
// Convention: the k-th of n generators is
//     g_k = C (x) ... (x) C (x) S (x) I (x) ... (x) I     (k-1 clocks)
// with C = diag(1, z, ..., z^{l-1}) and S e_k = e_{k+1 mod l}. Then
// C S = z S C, which gives g_j g_i = z g_i g_j for i < j, i.e.
// g_i^{-1} g_j g_i = z g_j exactly as in the defining relations.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "locmat/clifford.hpp"
#include "locmat/linalg.hpp"

namespace locmat {

/// Dense-indexed matrix with row-compressed storage: representation
/// matrices are monomial matrices, so only nonzeros are kept.
class ExactMatrix {
 public:
  ExactMatrix(std::size_t rows, std::size_t cols, int level);

  static ExactMatrix identity(std::size_t n, int level);
  /// The matrix unit E_{rc}.
  static ExactMatrix unit(std::size_t n, std::size_t r, std::size_t c, int level);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  int level() const { return level_; }

  CycElem at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const CycElem& value);
  const SparseVector& row(std::size_t r) const { return rows_[r]; }
  std::size_t nonzeros() const;

  /// Column-major flattening: entry (r, c) lands at c * rows() + r.
  SparseVector vectorize() const;

  ExactMatrix& operator+=(const ExactMatrix& other);
  ExactMatrix& operator-=(const ExactMatrix& other);
  friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
  friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator*(const CycElem& c, const ExactMatrix& a);

  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;
  friend ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b);

 private:
  void check_same_shape(const ExactMatrix& other) const;

  std::size_t cols_;
  int level_;
  std::vector<SparseVector> rows_;
};

ExactMatrix power(const ExactMatrix& m, unsigned long long k);
ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix clock(int level);
ExactMatrix shift(int level);

/// Largest matrix size l^n built by the representation routines.
inline constexpr std::size_t kMaxRepDimension = 4096;

/// g_k of the n-generator realization, 1 <= k <= n, size l^n.
ExactMatrix jw_generator(int k, int n, int level);

struct RepAssignment {
  int level = 2;
  /// Truncation indices in increasing order; indices[k] maps to images[k].
  std::vector<GeneratorIndex> indices;
  std::vector<ExactMatrix> images;

  /// Generators 1..n with the standard clock-and-shift images.
  static RepAssignment standard(int n, int level);
  /// The given indices (sorted, deduplicated) mapped in order to g_1..g_n.
  static RepAssignment standard(std::span<const GeneratorIndex> indices, int level);

  std::size_t dimension() const;
};

struct RelationReport {
  bool ok = true;
  std::vector<std::string> failures;
};

/// Checks g^l = I for every image and g_i^{-1} g_j g_i = z g_j for i < j.
RelationReport verify_relations(const RepAssignment& rep);

/// Evaluation homomorphism. Throws UnmappedIndex for indices outside rep.
ExactMatrix rep_element(const CliffordElement& a, const RepAssignment& rep);

/// Dimension of the unital algebra generated by the matrices.
/// Throws DimensionMismatch for non-square or unequal sizes.
std::size_t spanned_dimension(std::span<const ExactMatrix> mats);

/// Whether the l^n ordered monomials on n generators map to linearly
/// independent matrices. Throws TruncationTooLarge when l^n > kMaxTruncation.
bool faithfulness_check(int n, int level);

struct Centralizer {
  std::size_t dimension = 0;
  std::vector<ExactMatrix> basis;
};

/// Centralizer of `mats` in the full matrix algebra M_dim(Q(z_l)).
Centralizer matrix_centralizer(std::span<const ExactMatrix> mats, std::size_t dim, int level);

/// Centralizer of `mats` inside span(subalgebra_basis); the basis must be
/// linearly independent.
Centralizer matrix_centralizer_within(std::span<const ExactMatrix> mats,
                                      std::span<const ExactMatrix> subalgebra_basis);

/// One row per line, entries tab-separated in the cyclotomic text format.
std::string to_string(const ExactMatrix& m);

}  // namespace locmat
