#pragma once

#include <cstdint>
#include <vector>

namespace simplexvol {

/// Sorted list of 1-based vertex labels.
using Subset = std::vector<int>;

/// Exact binomial coefficient; 0 when k < 0 or k > n. Throws CertificationError on overflow.
std::uint64_t binomial(int n, int k);

/// All k-subsets of {1, ..., ground} in lexicographic order.
std::vector<Subset> k_subsets(int ground, int k);

/// Position of a sorted subset within k_subsets(ground, subset.size()).
std::size_t subset_rank(const Subset& subset, int ground);

/// {1, ..., ground} minus the subset, sorted.
Subset complement(const Subset& subset, int ground);

std::size_t intersection_size(const Subset& a, const Subset& b);

inline bool disjoint(const Subset& a, const Subset& b) { return intersection_size(a, b) == 0; }

/// A face of a simplex on vertices {1, ..., num_vertices}.
///
/// Downstream vectors and matrices key faces by the complementary subset, in
/// lexicographic order of complements. The two views are interchangeable.
class FaceIndex {
public:
  static FaceIndex from_vertices(Subset vertices, int num_vertices);
  static FaceIndex from_complement(const Subset& key, int num_vertices);
  static FaceIndex full(int num_vertices);

  const Subset& vertices() const noexcept { return vertices_; }
  Subset complement() const { return simplexvol::complement(vertices_, num_vertices_); }
  int num_vertices() const noexcept { return num_vertices_; }
  int dimension() const noexcept { return static_cast<int>(vertices_.size()) - 1; }
  bool contains(int vertex) const;

  friend bool operator==(const FaceIndex&, const FaceIndex&) = default;

private:
  FaceIndex(Subset vertices, int num_vertices)
      : vertices_(std::move(vertices)), num_vertices_(num_vertices) {}

  Subset vertices_;
  int num_vertices_;
};

}  // namespace simplexvol
