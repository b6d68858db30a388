#include "simplexvol/jacobian.hpp"

#include "simplexvol/errors.hpp"
#include "simplexvol/kneser.hpp"

#include <algorithm>
#include <cmath>

namespace simplexvol {
namespace {

double factorial(int m) {
  double f = 1.0;
  for (int i = 2; i <= m; ++i) {
    f *= i;
  }
  return f;
}

Eigen::MatrixXd minor_matrix(const Eigen::MatrixXd& a, Eigen::Index row, Eigen::Index col) {
  const Eigen::Index n = a.rows();
  Eigen::MatrixXd out(n - 1, n - 1);
  for (Eigen::Index i = 0, oi = 0; i < n; ++i) {
    if (i == row) {
      continue;
    }
    for (Eigen::Index j = 0, oj = 0; j < n; ++j) {
      if (j == col) {
        continue;
      }
      out(oi, oj++) = a(i, j);
    }
    ++oi;
  }
  return out;
}

void require_codim2(const SimplexSpec& spec) {
  if (spec.dimension() < 2) {
    throw DomainError("codimension-2 faces need n >= 2");
  }
}

}  // namespace

Eigen::VectorXd face_volume_gradient(const SimplexSpec& spec, const Subset& face_vertices,
                                     EdgeVariable variable) {
  const Subset face = FaceIndex::from_vertices(face_vertices, spec.num_vertices()).vertices();
  const int num_vertices = spec.num_vertices();
  Eigen::VectorXd grad = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(spec.num_edges()));
  const int m = static_cast<int>(face.size()) - 1;
  if (m <= 0) {
    return grad;
  }
  const double volume = face_volume(spec, face);
  if (volume == 0.0) {
    throw SingularityError("volume derivative undefined on a degenerate face", face);
  }
  if (m == 1) {
    const auto e = SimplexSpec::edge_index(num_vertices, face[0], face[1]);
    grad(static_cast<Eigen::Index>(e)) =
        variable == EdgeVariable::length ? 1.0 : 0.5 / volume;
    return grad;
  }

  const Eigen::MatrixXd cm = build_cm_matrix(spec, face).entries;
  const double sign = (m % 2 == 0) ? -1.0 : 1.0;
  const double normalization = sign / (std::ldexp(1.0, m) * factorial(m) * factorial(m));
  for (int a = 0; a < m + 1; ++a) {
    for (int b = a + 1; b < m + 1; ++b) {
      const Eigen::Index row = a + 1;
      const Eigen::Index col = b + 1;
      const double cofactor = (((row + col) % 2 == 0) ? 1.0 : -1.0) *
                              minor_matrix(cm, row, col).partialPivLu().determinant();
      // C is symmetric and l_e^2 sits at (row, col) and (col, row)
      const double d_v2 = normalization * 2.0 * cofactor;
      const auto e = SimplexSpec::edge_index(num_vertices, face[a], face[b]);
      if (variable == EdgeVariable::length) {
        grad(static_cast<Eigen::Index>(e)) = std::sqrt(spec.squared_lengths()[e]) / volume * d_v2;
      } else {
        grad(static_cast<Eigen::Index>(e)) = d_v2 / (2.0 * volume);
      }
    }
  }
  return grad;
}

JacobianMatrix analytic_jacobian(const SimplexSpec& spec, EdgeVariable variable) {
  require_codim2(spec);
  const int n = spec.dimension();
  const auto keys = k_subsets(n + 1, 2);
  JacobianMatrix out;
  out.n = n;
  out.entries.resize(static_cast<Eigen::Index>(keys.size()),
                     static_cast<Eigen::Index>(spec.num_edges()));
  for (std::size_t row = 0; row < keys.size(); ++row) {
    out.entries.row(static_cast<Eigen::Index>(row)) =
        face_volume_gradient(spec, complement(keys[row], n + 1), variable).transpose();
  }
  return out;
}

JacobianMatrix fd_jacobian(const SimplexSpec& spec, std::optional<double> step) {
  require_codim2(spec);
  const int n = spec.dimension();
  const auto squared = spec.squared_lengths();
  double h = 0.0;
  if (step) {
    h = *step;
  } else {
    double mean = 0.0;
    for (double v : squared) {
      mean += std::sqrt(v);
    }
    h = 1e-6 * mean / static_cast<double>(squared.size());
  }
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw DomainError("finite-difference step must be positive and finite");
  }

  const auto edges = spec.edges();
  JacobianMatrix out;
  out.n = n;
  out.entries.resize(static_cast<Eigen::Index>(binomial(n + 1, 2)),
                     static_cast<Eigen::Index>(edges.size()));
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const double length = std::sqrt(squared[e]);
    if (length - h <= 0.0) {
      throw BoundaryError("finite-difference step exceeds edge length of " + format_face(edges[e]));
    }
    const SimplexSpec up = spec.with_squared_length(edges[e][0], edges[e][1], (length + h) * (length + h));
    const SimplexSpec down = spec.with_squared_length(edges[e][0], edges[e][1], (length - h) * (length - h));
    if (!is_realizable(up) || !is_realizable(down)) {
      throw BoundaryError("perturbing edge " + format_face(edges[e]) + " leaves the realizable region");
    }
    const FaceVolumeVector yu = all_face_volumes(up, n - 2);
    const FaceVolumeVector yd = all_face_volumes(down, n - 2);
    for (std::size_t row = 0; row < yu.size(); ++row) {
      out.entries(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(e)) =
          (yu.values[row] - yd.values[row]) / (2.0 * h);
    }
  }
  return out;
}

RegularPointConstants regular_point_constants(int n) {
  if (n < 3) {
    throw DomainError("regular-point constants need n >= 3");
  }
  RegularPointConstants k;
  k.nu = std::sqrt(static_cast<double>(n - 1)) /
         (factorial(n - 2) * std::pow(2.0, 0.5 * static_cast<double>(n - 2)));
  k.c = 2.0 / static_cast<double>(n - 1) * k.nu;
  return k;
}

RankReport jacobian_rank(const JacobianMatrix& jacobian, double rel_threshold) {
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(jacobian.entries);
  const Eigen::VectorXd& sv = svd.singularValues();
  RankReport report;
  if (sv.size() == 0) {
    return report;
  }
  report.largest = sv.maxCoeff();
  report.smallest = sv.minCoeff();
  report.sv_ratio = report.largest > 0.0 ? report.smallest / report.largest : 0.0;
  report.rank = static_cast<int>(
      std::count_if(sv.begin(), sv.end(), [&](double s) { return s > rel_threshold * report.largest; }));
  return report;
}

RankReport jacobian_rank(const SimplexSpec& spec, double rel_threshold) {
  return jacobian_rank(analytic_jacobian(spec), rel_threshold);
}

bool RegularPointReport::passed(double tol) const {
  return max_abs_deviation <= tol && static_cast<std::uint64_t>(rank) == binomial(n + 1, 2);
}

RegularPointReport verify_regular_point(int n) {
  const RegularPointConstants constants = regular_point_constants(n);
  const JacobianMatrix jacobian = analytic_jacobian(regular_simplex(n));
  const KneserAdjacency incidence = build_kneser_adjacency(n, 2);

  RegularPointReport report;
  report.n = n;
  report.c = constants.c;
  for (Eigen::Index i = 0; i < jacobian.entries.rows(); ++i) {
    for (Eigen::Index j = 0; j < jacobian.entries.cols(); ++j) {
      const double expected = constants.c * static_cast<double>(incidence.entries(i, j));
      report.max_abs_deviation =
          std::max(report.max_abs_deviation, std::abs(jacobian.entries(i, j) - expected));
    }
  }
  const RankReport rank = jacobian_rank(jacobian);
  report.rank = rank.rank;
  report.sv_ratio = rank.sv_ratio;
  return report;
}

double euler_identity_check(const SimplexSpec& spec, int face_dim) {
  const int n = spec.dimension();
  if (face_dim < 0 || face_dim > n) {
    throw DomainError("face dimension outside 0..n");
  }
  const auto squared = spec.squared_lengths();
  double worst = 0.0;
  for (const Subset& face : k_subsets(n + 1, face_dim + 1)) {
    const Eigen::VectorXd grad = face_volume_gradient(spec, face);
    double sum = 0.0;
    for (Eigen::Index e = 0; e < grad.size(); ++e) {
      if (grad(e) != 0.0) {
        sum += std::sqrt(squared[static_cast<std::size_t>(e)]) * grad(e);
      }
    }
    worst = std::max(worst, std::abs(sum - face_dim * face_volume(spec, face)));
  }
  return worst;
}

}  // namespace simplexvol
