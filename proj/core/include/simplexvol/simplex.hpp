#pragma once

#include "simplexvol/exact.hpp"
#include "simplexvol/subsets.hpp"

#include <Eigen/Dense>

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace simplexvol {

/// An n-simplex given by its squared edge lengths.
///
/// Entries are stored in lexicographic pair order (1,2), (1,3), ..., (n,n+1).
/// A spec may additionally carry the same values as exact rationals, in which
/// case Cayley-Menger determinants are evaluated exactly. Realizability is not
/// an invariant of the type; see is_realizable().
class SimplexSpec {
public:
  SimplexSpec(int n, std::vector<double> squared_lengths);
  SimplexSpec(int n, std::vector<Rational> exact_squared_lengths);

  int dimension() const noexcept { return n_; }
  int num_vertices() const noexcept { return n_ + 1; }
  std::size_t num_edges() const noexcept { return squared_.size(); }

  /// Labels are 1-based, i != j.
  double squared_length(int i, int j) const;
  std::span<const double> squared_lengths() const noexcept { return squared_; }

  bool has_exact() const noexcept { return exact_.has_value(); }
  std::span<const Rational> exact_squared_lengths() const;

  /// Copy with one squared length replaced; drops the exact representation.
  SimplexSpec with_squared_length(int i, int j, double value) const;

  /// Lexicographic position of the edge {i, j} among all pairs of {1, ..., num_vertices}.
  static std::size_t edge_index(int num_vertices, int i, int j);
  /// All edges as sorted 2-subsets, in storage order.
  std::vector<Subset> edges() const { return k_subsets(num_vertices(), 2); }

private:
  void check_label(int i) const;

  int n_;
  std::vector<double> squared_;
  std::optional<std::vector<Rational>> exact_;
};

/// Bordered matrix of order m+2 for the m-simplex spanned by a face.
struct CayleyMengerMatrix {
  Subset vertices;
  Eigen::MatrixXd entries;
  std::optional<RationalMatrix> exact;

  int order() const noexcept { return static_cast<int>(entries.rows()); }
};

CayleyMengerMatrix build_cm_matrix(const SimplexSpec& spec, const FaceIndex& face);
CayleyMengerMatrix build_cm_matrix(const SimplexSpec& spec, const Subset& face_vertices);

/// V^2 of the face via the Cayley-Menger determinant. Points have V^2 = 1 and
/// segments V^2 = l^2. May be negative for non-realizable data.
double squared_volume(const SimplexSpec& spec, const FaceIndex& face);
double squared_volume(const SimplexSpec& spec, const Subset& face_vertices);

/// Exact V^2 when the spec carries rationals, otherwise nullopt.
std::optional<Rational> exact_squared_volume(const SimplexSpec& spec, const Subset& face_vertices);

/// |V^2| below this is treated as zero: 1e-12 times the largest monomial
/// (max squared length)^m / (2^m (m!)^2) of the face's determinant expansion.
double zero_volume_threshold(const SimplexSpec& spec, const Subset& face_vertices);

/// sqrt(V^2), with |V^2| under the zero threshold mapped to exactly 0.
/// Throws RealizabilityError naming the face if V^2 is below -threshold.
double face_volume(const SimplexSpec& spec, const Subset& face_vertices);

/// Volumes of every face of one dimension, keyed by complementary subsets.
struct FaceVolumeVector {
  int n = 0;
  int face_dim = 0;
  std::vector<Subset> keys;  ///< complements, size n - face_dim, lexicographic
  std::vector<double> values;

  std::size_t size() const noexcept { return values.size(); }
  double at(const Subset& complement_key) const;
  FaceIndex face(std::size_t i) const { return FaceIndex::from_complement(keys[i], n + 1); }
  std::vector<double> sorted_values() const;
};

/// Throws RealizabilityError carrying the lowest-dimensional offending face
/// when the spec does not embed (Gram matrix not PSD within tolerance).
FaceVolumeVector all_face_volumes(const SimplexSpec& spec, int face_dim);

/// G_ij = (l_{1,i+1}^2 + l_{1,j+1}^2 - l_{i+1,j+1}^2) / 2, order n.
Eigen::MatrixXd gram_matrix(const SimplexSpec& spec);

struct RealizabilityCertificate {
  bool realizable = false;  ///< Gram positive definite: nondegenerate Euclidean simplex
  bool embeddable = false;  ///< Gram positive semidefinite: possibly degenerate configuration
  double min_eigenvalue = 0.0;
  double trace = 0.0;
  double tolerance = 0.0;  ///< 1e-10 * trace

  explicit operator bool() const noexcept { return realizable; }
};

RealizabilityCertificate is_realizable(const SimplexSpec& spec);

SimplexSpec regular_simplex(int n);

/// Squared pairwise distances of n+1 points in R^n.
SimplexSpec vertices_to_spec(std::span<const Eigen::VectorXd> vertices);

// JSON simplex files: {"n": <int>, "squared_lengths": [<real or "p/q">, ...]}.
SimplexSpec simplex_from_json(std::string_view text);
SimplexSpec read_simplex_file(const std::string& path);
std::string simplex_to_json(const SimplexSpec& spec);

}  // namespace simplexvol
