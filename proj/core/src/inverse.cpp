#include "simplexvol/inverse.hpp"

#include "simplexvol/errors.hpp"
#include "simplexvol/jacobian.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

namespace simplexvol {
namespace {

Eigen::VectorXd to_vector(const std::vector<double>& v) {
  return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

struct Evaluation {
  Eigen::VectorXd residual;
  double norm = 0.0;
};

Evaluation evaluate(const SimplexSpec& spec, const Eigen::VectorXd& target) {
  Evaluation ev;
  ev.residual = target - to_vector(forward_map(spec));
  ev.norm = ev.residual.norm();
  return ev;
}

bool feasible(const Eigen::VectorXd& squared, int n) {
  try {
    return is_realizable(SimplexSpec(n, std::vector<double>(squared.begin(), squared.end()))).realizable;
  } catch (const DomainError&) {
    return false;
  }
}

}  // namespace

std::vector<double> forward_map(const SimplexSpec& spec) {
  return all_face_volumes(spec, spec.dimension() - 2).values;
}

SolveResult solve(const InverseProblem& problem) {
  const int n = problem.n;
  if (n < 2 || problem.start.dimension() != n) {
    throw DomainError("start simplex dimension does not match the problem");
  }
  if (problem.target.size() != binomial(n + 1, 2)) {
    throw ShapeError("target needs binomial(n+1,2) face volumes");
  }
  if (!is_realizable(problem.start)) {
    throw DomainError("start simplex is not realizable");
  }

  const Eigen::VectorXd target = to_vector(problem.target);
  const auto start = problem.start.squared_lengths();
  Eigen::VectorXd x = Eigen::Map<const Eigen::VectorXd>(start.data(), static_cast<Eigen::Index>(start.size()));
  SimplexSpec current(n, std::vector<double>(x.begin(), x.end()));
  Evaluation ev = evaluate(current, target);

  SolveResult result{current, ev.norm, 0, false, {}};
  if (problem.record_trajectory) {
    result.trajectory.push_back(ev.norm);
  }

  const Eigen::Index dim = x.size();
  double mu = -1.0;
  bool stalled = false;
  while (ev.norm > problem.tol && result.iterations < problem.max_iters && !stalled) {
    ++result.iterations;
    Eigen::MatrixXd jac;
    try {
      jac = analytic_jacobian(current, EdgeVariable::squared_length).entries;
    } catch (const SingularityError&) {
      break;
    }
    const Eigen::MatrixXd jtj = jac.transpose() * jac;
    const Eigen::VectorXd gradient = jac.transpose() * ev.residual;
    if (mu < 0.0) {
      mu = std::max(problem.damping * jtj.trace() / static_cast<double>(dim), 1e-300);
    }

    bool accepted = false;
    while (!accepted) {
      const Eigen::MatrixXd damped = jtj + mu * Eigen::MatrixXd::Identity(dim, dim);
      const Eigen::VectorXd delta = damped.ldlt().solve(gradient);

      double scale = 1.0;
      Eigen::VectorXd candidate;
      bool inside = false;
      for (int halvings = 0; halvings < 60; ++halvings, scale *= 0.5) {
        if (scale * delta.norm() < 1e-15) {
          break;
        }
        candidate = (x + scale * delta).cwiseMax(kSquaredLengthFloor);
        if (feasible(candidate, n)) {
          inside = true;
          break;
        }
      }
      if (!inside) {
        stalled = true;
        break;
      }
      if ((candidate - x).norm() < 1e-15) {
        stalled = true;
        break;
      }

      SimplexSpec trial(n, std::vector<double>(candidate.begin(), candidate.end()));
      Evaluation trial_ev;
      try {
        trial_ev = evaluate(trial, target);
      } catch (const RealizabilityError&) {
        trial_ev.norm = std::numeric_limits<double>::infinity();
      }
      if (trial_ev.norm < ev.norm) {
        x = std::move(candidate);
        current = std::move(trial);
        ev = std::move(trial_ev);
        mu = std::max(mu / 10.0, 1e-300);
        accepted = true;
      } else {
        mu *= 10.0;
        if (mu > 1e30) {
          stalled = true;
          break;
        }
      }
    }
    if (problem.record_trajectory && accepted) {
      result.trajectory.push_back(ev.norm);
    }
  }

  result.solution = current;
  result.residual_norm = ev.norm;
  result.converged = ev.norm <= problem.tol && is_realizable(current).realizable;
  return result;
}

double edge_multiset_distance(const SimplexSpec& a, const SimplexSpec& b) {
  if (a.num_edges() != b.num_edges()) {
    return std::numeric_limits<double>::infinity();
  }
  std::vector<double> sa(a.squared_lengths().begin(), a.squared_lengths().end());
  std::vector<double> sb(b.squared_lengths().begin(), b.squared_lengths().end());
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  double worst = 0.0;
  for (std::size_t i = 0; i < sa.size(); ++i) {
    worst = std::max(worst, std::abs(sa[i] - sb[i]));
  }
  return worst;
}

SimplexSpec random_start(int n, std::mt19937_64& rng) {
  const std::size_t edges = binomial(n + 1, 2);
  std::vector<double> squared(edges);
  for (int attempt = 0; attempt < 1000000; ++attempt) {
    for (double& v : squared) {
      const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      v = 0.25 * std::pow(16.0, u);
    }
    SimplexSpec spec(n, squared);
    if (is_realizable(spec)) {
      return spec;
    }
  }
  throw std::runtime_error("could not draw a realizable random start");
}

std::vector<SolveResult> basin_probe(int n, const std::vector<double>& target, int num_starts,
                                     std::uint64_t seed, const ProbeOptions& options) {
  if (num_starts < 1) {
    throw DomainError("basin probe needs at least one start");
  }
  std::mt19937_64 rng(seed);
  std::vector<SimplexSpec> starts;
  starts.reserve(static_cast<std::size_t>(num_starts));
  for (int i = 0; i < num_starts; ++i) {
    starts.push_back(random_start(n, rng));
  }

  std::vector<std::optional<SolveResult>> results(starts.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < starts.size(); i = next++) {
      InverseProblem problem{n, target, starts[i], 1e-3, options.max_iters, options.tol, false};
      try {
        results[i] = solve(problem);
      } catch (const std::exception&) {
        results[i].reset();
      }
    }
  };
  unsigned workers = options.workers ? options.workers : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(starts.size()));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back(worker);
    }
  }

  std::vector<SolveResult> representatives;
  for (auto& r : results) {
    if (!r || !r->converged) {
      continue;
    }
    const bool known = std::any_of(representatives.begin(), representatives.end(), [&](const SolveResult& rep) {
      return edge_multiset_distance(rep.solution, r->solution) <= options.cluster_radius;
    });
    if (!known) {
      representatives.push_back(std::move(*r));
    }
  }
  return representatives;
}

}  // namespace simplexvol
