#pragma once

#include "simplexvol/exact.hpp"
#include "simplexvol/subsets.hpp"

#include <cstdint>
#include <vector>

namespace simplexvol {

inline constexpr std::uint64_t kDefaultMaxOrder = 5000;

/// Adjacency of the Kneser graph K(n+1, k): k-subsets of {1..n+1}, adjacent iff disjoint.
struct KneserAdjacency {
  int n = 0;
  int k = 0;
  std::vector<Subset> subsets;  ///< row/column labels, lexicographic
  IntMatrix entries;

  std::size_t order() const noexcept { return subsets.size(); }
};

/// Throws DomainError unless 1 <= k <= n+1 and binomial(n+1, k) <= max_order.
KneserAdjacency build_kneser_adjacency(int n, int k, std::uint64_t max_order = kDefaultMaxOrder);

/// Distinct eigenvalues with multiplicities, in matching order.
struct SpectrumSpec {
  std::vector<std::int64_t> eigenvalues;
  std::vector<std::int64_t> multiplicities;

  std::int64_t total_multiplicity() const;
  /// Same pairs, eigenvalues descending.
  SpectrumSpec sorted_descending() const;
};

/// lambda_i = (-1)^i binomial(n-k-i+1, k-i), i = 0..k.
std::vector<std::int64_t> kneser_eigenvalue_formula(int n, int k);

/// Eigenvalues in formula order. For k = 2 multiplicities are
/// (1, n, (n+1)(n-2)/2); for k > 2 they come from multiplicities_from_traces.
/// Coinciding eigenvalues (k = (n+1)/2) are merged, first occurrence kept.
/// Requires 2 <= k <= (n+1)/2.
SpectrumSpec predicted_spectrum(int n, int k, std::uint64_t max_order = kDefaultMaxOrder);

/// True iff prod_i (M - lambda_i I) is the zero matrix, computed exactly.
bool verify_annihilation(const KneserAdjacency& adj, const SpectrumSpec& spectrum);
bool verify_annihilation(const IntMatrix& matrix, const std::vector<std::int64_t>& eigenvalues);

/// Solves sum_i m_i lambda_i^p = trace(M^p), p = 0..len-1, in exact rationals.
/// Throws DomainError on repeated eigenvalues and CertificationError when the
/// solution is not a vector of nonnegative integers.
std::vector<std::int64_t> multiplicities_from_traces(const KneserAdjacency& adj,
                                                     const std::vector<std::int64_t>& eigenvalues);
std::vector<std::int64_t> multiplicities_from_traces(const IntMatrix& matrix,
                                                     const std::vector<std::int64_t>& eigenvalues);

/// trace(M^p) for p = 0..max_power.
std::vector<std::int64_t> power_traces(const IntMatrix& matrix, int max_power);

Integer exact_determinant(const KneserAdjacency& adj);

/// (n-2)^(n+1) (n-1) / 2.
Integer predicted_determinant_k2(int n);

/// prod |lambda_i|^(m_i).
Integer determinant_from_spectrum(const SpectrumSpec& spectrum);

/// Floating-point eigenvalues of the adjacency, ascending. Cross-check only.
std::vector<double> numeric_eigenvalues(const IntMatrix& matrix);

/// Adjacency of L(K_{n+1}): 2-subsets adjacent iff they share exactly one element.
struct LineGraphAdjacency {
  int n = 0;
  std::vector<Subset> subsets;
  IntMatrix entries;
  IntMatrix all_ones;
};

LineGraphAdjacency build_line_graph_adjacency(int n);

struct LineGraphReport {
  int n = 0;
  bool complement_identity = false;  ///< A + M + I == J
  bool regular = false;              ///< A is (2n-2)-regular
  bool line_graph_annihilation = false;  ///< (A - t1)(A - t2)(A - t3) == 0
  bool translation = false;  ///< translated t_i match the Kneser eigenvalues
  std::vector<std::int64_t> line_graph_eigenvalues;  ///< (2n-2, -2, n-3)
  std::vector<std::int64_t> translated_eigenvalues;  ///< (C(n+1,2)-t1-1, -t2-1, -t3-1)

  bool passed() const noexcept {
    return complement_identity && regular && line_graph_annihilation && translation;
  }
};

/// Requires n >= 2.
LineGraphReport line_graph_complement_check(int n);

}  // namespace simplexvol
