#pragma once

#include "simplexvol/simplex.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace simplexvol {

struct InverseProblem {
  int n = 0;
  std::vector<double> target;  ///< codimension-2 face volumes, complement-key order
  SimplexSpec start;
  double damping = 1e-3;  ///< initial mu = damping * trace(J^T J) / dim
  int max_iters = 200;
  double tol = 1e-12;     ///< on the Euclidean residual norm
  bool record_trajectory = false;
};

struct SolveResult {
  SimplexSpec solution;
  double residual_norm = 0.0;
  int iterations = 0;
  bool converged = false;
  std::vector<double> trajectory;
};

inline constexpr double kSquaredLengthFloor = 1e-9;

/// Levenberg-Marquardt over squared edge lengths. Steps leaving the realizable
/// region are halved until they re-enter it. Throws DomainError if the start is
/// not realizable or the target has the wrong length.
SolveResult solve(const InverseProblem& problem);

/// Codimension-2 volumes, i.e. the forward map the solver inverts.
std::vector<double> forward_map(const SimplexSpec& spec);

/// max_i |sorted(a)_i - sorted(b)_i| over squared lengths.
double edge_multiset_distance(const SimplexSpec& a, const SimplexSpec& b);

struct ProbeOptions {
  int max_iters = 200;
  double tol = 1e-12;
  double cluster_radius = 1e-6;
  unsigned workers = 0;  ///< 0: hardware concurrency
};

/// Seeded realizable start with squared lengths log-uniform in [0.25, 4].
SimplexSpec random_start(int n, std::mt19937_64& rng);

/// Converged solutions from num_starts seeded random starts, clustered by
/// edge-multiset distance. One representative per cluster, in discovery order.
std::vector<SolveResult> basin_probe(int n, const std::vector<double>& target, int num_starts,
                                     std::uint64_t seed, const ProbeOptions& options = {});

}  // namespace simplexvol
