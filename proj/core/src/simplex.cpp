#include "simplexvol/simplex.hpp"

#include "simplexvol/errors.hpp"

#include <algorithm>
#include <cmath>

namespace simplexvol {
namespace {

std::size_t expected_edges(int n) { return binomial(n + 1, 2); }

void check_dimension(int n) {
  if (n < 1) {
    throw DomainError("simplex dimension must be at least 1, got " + std::to_string(n));
  }
}

double factorial(int m) {
  double f = 1.0;
  for (int i = 2; i <= m; ++i) {
    f *= i;
  }
  return f;
}

// (-1)^(m+1) / (2^m (m!)^2)
double cm_normalization(int m) {
  const double sign = (m % 2 == 0) ? -1.0 : 1.0;
  return sign / (std::ldexp(1.0, m) * factorial(m) * factorial(m));
}

Rational cm_normalization_exact(int m) {
  Integer denominator = 1;
  for (int i = 2; i <= m; ++i) {
    denominator *= i;
  }
  denominator *= denominator;
  denominator <<= m;
  Rational value(1, denominator);
  value.canonicalize();
  return (m % 2 == 0) ? Rational(-value) : value;
}

Subset checked_face(const SimplexSpec& spec, const Subset& face_vertices) {
  return FaceIndex::from_vertices(face_vertices, spec.num_vertices()).vertices();
}

}  // namespace

SimplexSpec::SimplexSpec(int n, std::vector<double> squared_lengths)
    : n_(n), squared_(std::move(squared_lengths)) {
  check_dimension(n);
  if (squared_.size() != expected_edges(n)) {
    throw ShapeError("a " + std::to_string(n) + "-simplex needs " +
                     std::to_string(expected_edges(n)) + " squared lengths, got " +
                     std::to_string(squared_.size()));
  }
  for (double v : squared_) {
    if (!std::isfinite(v) || v < 0.0) {
      throw DomainError("squared lengths must be finite and nonnegative");
    }
  }
}

SimplexSpec::SimplexSpec(int n, std::vector<Rational> exact_squared_lengths) : n_(n) {
  check_dimension(n);
  if (exact_squared_lengths.size() != expected_edges(n)) {
    throw ShapeError("a " + std::to_string(n) + "-simplex needs " +
                     std::to_string(expected_edges(n)) + " squared lengths, got " +
                     std::to_string(exact_squared_lengths.size()));
  }
  squared_.reserve(exact_squared_lengths.size());
  for (const Rational& v : exact_squared_lengths) {
    if (v < 0) {
      throw DomainError("squared lengths must be nonnegative");
    }
    squared_.push_back(v.get_d());
  }
  exact_ = std::move(exact_squared_lengths);
}

void SimplexSpec::check_label(int i) const {
  if (i < 1 || i > num_vertices()) {
    throw IndexError("vertex " + std::to_string(i) + " outside 1.." +
                     std::to_string(num_vertices()));
  }
}

std::size_t SimplexSpec::edge_index(int num_vertices, int i, int j) {
  if (i > j) {
    std::swap(i, j);
  }
  // pairs (a, b) with a < i come first: sum_{a<i} (N - a)
  const std::size_t before =
      static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(num_vertices) -
      static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(i) / 2;
  return before + static_cast<std::size_t>(j - i - 1);
}

double SimplexSpec::squared_length(int i, int j) const {
  check_label(i);
  check_label(j);
  if (i == j) {
    throw IndexError("an edge needs two distinct vertices");
  }
  return squared_[edge_index(num_vertices(), i, j)];
}

std::span<const Rational> SimplexSpec::exact_squared_lengths() const {
  if (!exact_) {
    return {};
  }
  return *exact_;
}

SimplexSpec SimplexSpec::with_squared_length(int i, int j, double value) const {
  check_label(i);
  check_label(j);
  std::vector<double> copy = squared_;
  copy[edge_index(num_vertices(), i, j)] = value;
  return SimplexSpec(n_, std::move(copy));
}

CayleyMengerMatrix build_cm_matrix(const SimplexSpec& spec, const Subset& face_vertices) {
  Subset face = checked_face(spec, face_vertices);
  if (face.size() < 2) {
    throw ShapeError("a Cayley-Menger matrix needs a face with at least two vertices");
  }
  const int order = static_cast<int>(face.size()) + 1;
  CayleyMengerMatrix cm;
  cm.entries = Eigen::MatrixXd::Zero(order, order);
  for (int i = 1; i < order; ++i) {
    cm.entries(0, i) = 1.0;
    cm.entries(i, 0) = 1.0;
    for (int j = i + 1; j < order; ++j) {
      const double value = spec.squared_length(face[i - 1], face[j - 1]);
      cm.entries(i, j) = value;
      cm.entries(j, i) = value;
    }
  }
  if (spec.has_exact()) {
    const auto exact = spec.exact_squared_lengths();
    RationalMatrix rows(order, std::vector<Rational>(order, Rational(0)));
    for (int i = 1; i < order; ++i) {
      rows[0][i] = 1;
      rows[i][0] = 1;
      for (int j = i + 1; j < order; ++j) {
        const Rational& value =
            exact[SimplexSpec::edge_index(spec.num_vertices(), face[i - 1], face[j - 1])];
        rows[i][j] = value;
        rows[j][i] = value;
      }
    }
    cm.exact = std::move(rows);
  }
  cm.vertices = std::move(face);
  return cm;
}

CayleyMengerMatrix build_cm_matrix(const SimplexSpec& spec, const FaceIndex& face) {
  return build_cm_matrix(spec, face.vertices());
}

std::optional<Rational> exact_squared_volume(const SimplexSpec& spec, const Subset& face_vertices) {
  if (!spec.has_exact()) {
    return std::nullopt;
  }
  const Subset face = checked_face(spec, face_vertices);
  if (face.empty()) {
    throw ShapeError("a face needs at least one vertex");
  }
  if (face.size() == 1) {
    return Rational(1);
  }
  const int m = static_cast<int>(face.size()) - 1;
  const CayleyMengerMatrix cm = build_cm_matrix(spec, face);
  return Rational(cm_normalization_exact(m) * exact_determinant(*cm.exact));
}

double squared_volume(const SimplexSpec& spec, const Subset& face_vertices) {
  if (auto exact = exact_squared_volume(spec, face_vertices)) {
    return exact->get_d();
  }
  const Subset face = checked_face(spec, face_vertices);
  if (face.empty()) {
    throw ShapeError("a face needs at least one vertex");
  }
  const int m = static_cast<int>(face.size()) - 1;
  if (m == 0) {
    return 1.0;
  }
  if (m == 1) {
    return spec.squared_length(face[0], face[1]);
  }
  const CayleyMengerMatrix cm = build_cm_matrix(spec, face);
  return cm_normalization(m) * cm.entries.partialPivLu().determinant();
}

double squared_volume(const SimplexSpec& spec, const FaceIndex& face) {
  return squared_volume(spec, face.vertices());
}

double zero_volume_threshold(const SimplexSpec& spec, const Subset& face_vertices) {
  const Subset face = checked_face(spec, face_vertices);
  const int m = static_cast<int>(face.size()) - 1;
  if (m <= 0) {
    return 0.0;
  }
  double largest = 0.0;
  for (std::size_t a = 0; a < face.size(); ++a) {
    for (std::size_t b = a + 1; b < face.size(); ++b) {
      largest = std::max(largest, spec.squared_length(face[a], face[b]));
    }
  }
  return 1e-12 * std::pow(largest, m) * std::abs(cm_normalization(m));
}

double face_volume(const SimplexSpec& spec, const Subset& face_vertices) {
  const double v2 = squared_volume(spec, face_vertices);
  const double threshold = zero_volume_threshold(spec, face_vertices);
  if (std::abs(v2) <= threshold) {
    return 0.0;
  }
  if (v2 < 0.0) {
    throw RealizabilityError("negative squared volume", checked_face(spec, face_vertices));
  }
  return std::sqrt(v2);
}

double FaceVolumeVector::at(const Subset& complement_key) const {
  if (static_cast<int>(complement_key.size()) != n - face_dim) {
    throw ShapeError("complement key has the wrong size for this face dimension");
  }
  const std::size_t index = subset_rank(FaceIndex::from_vertices(complement_key, n + 1).vertices(), n + 1);
  return values.at(index);
}

std::vector<double> FaceVolumeVector::sorted_values() const {
  std::vector<double> out = values;
  std::sort(out.begin(), out.end());
  return out;
}

FaceVolumeVector all_face_volumes(const SimplexSpec& spec, int face_dim) {
  const int n = spec.dimension();
  if (face_dim < 0 || face_dim > n) {
    throw DomainError("face dimension " + std::to_string(face_dim) + " outside 0.." +
                      std::to_string(n));
  }
  if (!is_realizable(spec).embeddable) {
    // Some principal minor of the Gram matrix is negative, so some face is. Report the smallest.
    for (int d = 2; d <= n; ++d) {
      for (const Subset& face : k_subsets(n + 1, d + 1)) {
        if (squared_volume(spec, face) < -zero_volume_threshold(spec, face)) {
          throw RealizabilityError("squared lengths do not embed in Euclidean space", face);
        }
      }
    }
    throw RealizabilityError("squared lengths do not embed in Euclidean space",
                             FaceIndex::full(n + 1).vertices());
  }
  FaceVolumeVector out;
  out.n = n;
  out.face_dim = face_dim;
  out.keys = k_subsets(n + 1, n - face_dim);
  out.values.reserve(out.keys.size());
  for (const Subset& key : out.keys) {
    out.values.push_back(face_volume(spec, complement(key, n + 1)));
  }
  return out;
}

Eigen::MatrixXd gram_matrix(const SimplexSpec& spec) {
  const int n = spec.dimension();
  Eigen::MatrixXd g(n, n);
  for (int i = 0; i < n; ++i) {
    const double di = spec.squared_length(1, i + 2);
    g(i, i) = di;
    for (int j = i + 1; j < n; ++j) {
      const double value = 0.5 * (di + spec.squared_length(1, j + 2) - spec.squared_length(i + 2, j + 2));
      g(i, j) = value;
      g(j, i) = value;
    }
  }
  return g;
}

RealizabilityCertificate is_realizable(const SimplexSpec& spec) {
  const Eigen::MatrixXd g = gram_matrix(spec);
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(g, Eigen::EigenvaluesOnly);
  RealizabilityCertificate cert;
  cert.min_eigenvalue = solver.eigenvalues().minCoeff();
  cert.trace = g.trace();
  cert.tolerance = 1e-10 * cert.trace;
  cert.realizable = cert.trace > 0.0 && cert.min_eigenvalue > cert.tolerance;
  cert.embeddable = cert.min_eigenvalue >= -cert.tolerance;
  return cert;
}

SimplexSpec regular_simplex(int n) {
  check_dimension(n);
  return SimplexSpec(n, std::vector<double>(expected_edges(n), 1.0));
}

SimplexSpec vertices_to_spec(std::span<const Eigen::VectorXd> vertices) {
  if (vertices.size() < 2) {
    throw ShapeError("a simplex needs at least two vertices");
  }
  const int n = static_cast<int>(vertices.size()) - 1;
  for (const Eigen::VectorXd& v : vertices) {
    if (v.size() != n) {
      throw ShapeError(std::to_string(n + 1) + " vertices need " + std::to_string(n) +
                       " coordinates each, got " + std::to_string(v.size()));
    }
  }
  std::vector<double> squared;
  squared.reserve(expected_edges(n));
  for (int i = 0; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      squared.push_back((vertices[i] - vertices[j]).squaredNorm());
    }
  }
  return SimplexSpec(n, std::move(squared));
}

}  // namespace simplexvol
