#include "simplexvol/kneser.hpp"

#include "simplexvol/errors.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <numeric>

namespace simplexvol {
namespace {

std::vector<std::int64_t> distinct_in_order(const std::vector<std::int64_t>& values) {
  std::vector<std::int64_t> out;
  for (std::int64_t v : values) {
    if (std::find(out.begin(), out.end(), v) == out.end()) {
      out.push_back(v);
    }
  }
  return out;
}

}  // namespace

KneserAdjacency build_kneser_adjacency(int n, int k, std::uint64_t max_order) {
  if (n < 1 || k < 1 || k > n + 1) {
    throw DomainError("Kneser graph K(n+1,k) needs 1 <= k <= n+1, got n=" + std::to_string(n) +
                      ", k=" + std::to_string(k));
  }
  const std::uint64_t order = binomial(n + 1, k);
  if (order > max_order) {
    throw DomainError("Kneser adjacency of order " + std::to_string(order) +
                      " exceeds the size guard of " + std::to_string(max_order));
  }
  KneserAdjacency adj;
  adj.n = n;
  adj.k = k;
  adj.subsets = k_subsets(n + 1, k);
  adj.entries = IntMatrix(order, order);
  for (std::size_t i = 0; i < order; ++i) {
    for (std::size_t j = i + 1; j < order; ++j) {
      if (disjoint(adj.subsets[i], adj.subsets[j])) {
        adj.entries(i, j) = 1;
        adj.entries(j, i) = 1;
      }
    }
  }
  return adj;
}

std::int64_t SpectrumSpec::total_multiplicity() const {
  return std::accumulate(multiplicities.begin(), multiplicities.end(), std::int64_t{0});
}

SpectrumSpec SpectrumSpec::sorted_descending() const {
  std::vector<std::size_t> order(eigenvalues.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return eigenvalues[a] > eigenvalues[b]; });
  SpectrumSpec out;
  for (std::size_t i : order) {
    out.eigenvalues.push_back(eigenvalues[i]);
    out.multiplicities.push_back(multiplicities[i]);
  }
  return out;
}

std::vector<std::int64_t> kneser_eigenvalue_formula(int n, int k) {
  std::vector<std::int64_t> out;
  for (int i = 0; i <= k; ++i) {
    const auto magnitude = static_cast<std::int64_t>(binomial(n - k - i + 1, k - i));
    out.push_back(i % 2 == 0 ? magnitude : -magnitude);
  }
  return out;
}

SpectrumSpec predicted_spectrum(int n, int k, std::uint64_t max_order) {
  if (k < 2 || 2 * k > n + 1) {
    throw DomainError("predicted spectrum needs 2 <= k <= (n+1)/2, got n=" + std::to_string(n) +
                      ", k=" + std::to_string(k));
  }
  const std::vector<std::int64_t> formula = kneser_eigenvalue_formula(n, k);
  SpectrumSpec spectrum;
  if (k == 2) {
    const std::int64_t mult[3] = {1, n, static_cast<std::int64_t>(n + 1) * (n - 2) / 2};
    for (int i = 0; i < 3; ++i) {
      const auto it = std::find(spectrum.eigenvalues.begin(), spectrum.eigenvalues.end(), formula[i]);
      if (it == spectrum.eigenvalues.end()) {
        spectrum.eigenvalues.push_back(formula[i]);
        spectrum.multiplicities.push_back(mult[i]);
      } else {
        spectrum.multiplicities[static_cast<std::size_t>(it - spectrum.eigenvalues.begin())] += mult[i];
      }
    }
    return spectrum;
  }
  spectrum.eigenvalues = distinct_in_order(formula);
  spectrum.multiplicities =
      multiplicities_from_traces(build_kneser_adjacency(n, k, max_order), spectrum.eigenvalues);
  return spectrum;
}

bool verify_annihilation(const IntMatrix& matrix, const std::vector<std::int64_t>& eigenvalues) {
  if (eigenvalues.empty()) {
    return matrix.rows() == 0;
  }
  IntMatrix product = matrix.shifted(-eigenvalues.front());
  for (std::size_t i = 1; i < eigenvalues.size(); ++i) {
    product = product * matrix.shifted(-eigenvalues[i]);
  }
  return product.is_zero();
}

bool verify_annihilation(const KneserAdjacency& adj, const SpectrumSpec& spectrum) {
  return verify_annihilation(adj.entries, spectrum.eigenvalues);
}

std::vector<std::int64_t> power_traces(const IntMatrix& matrix, int max_power) {
  std::vector<std::int64_t> traces;
  traces.push_back(static_cast<std::int64_t>(matrix.rows()));
  IntMatrix power = IntMatrix::identity(matrix.rows());
  for (int p = 1; p <= max_power; ++p) {
    power = power * matrix;
    traces.push_back(power.trace());
  }
  return traces;
}

std::vector<std::int64_t> multiplicities_from_traces(const IntMatrix& matrix,
                                                     const std::vector<std::int64_t>& eigenvalues) {
  if (distinct_in_order(eigenvalues).size() != eigenvalues.size()) {
    throw DomainError("multiplicity solve needs pairwise distinct eigenvalues");
  }
  const std::size_t count = eigenvalues.size();
  const std::vector<std::int64_t> traces = power_traces(matrix, static_cast<int>(count) - 1);

  RationalMatrix vandermonde(count, std::vector<Rational>(count));
  std::vector<Rational> rhs(count);
  for (std::size_t p = 0; p < count; ++p) {
    for (std::size_t i = 0; i < count; ++i) {
      Integer power;
      mpz_pow_ui(power.get_mpz_t(), Integer(static_cast<long>(eigenvalues[i])).get_mpz_t(), p);
      vandermonde[p][i] = Rational(power);
    }
    rhs[p] = Rational(Integer(static_cast<long>(traces[p])));
  }
  const std::vector<Rational> solution = solve_exact(std::move(vandermonde), std::move(rhs));

  std::vector<std::int64_t> multiplicities;
  for (std::size_t i = 0; i < count; ++i) {
    const Rational& m = solution[i];
    if (m.get_den() != 1 || m < 0 || !m.get_num().fits_slong_p()) {
      throw CertificationError("eigenvalue " + std::to_string(eigenvalues[i]) +
                               " gets non-integral or negative multiplicity " + to_string(m));
    }
    multiplicities.push_back(m.get_num().get_si());
  }
  return multiplicities;
}

std::vector<std::int64_t> multiplicities_from_traces(const KneserAdjacency& adj,
                                                     const std::vector<std::int64_t>& eigenvalues) {
  return multiplicities_from_traces(adj.entries, eigenvalues);
}

Integer exact_determinant(const KneserAdjacency& adj) { return bareiss_determinant(adj.entries); }

Integer predicted_determinant_k2(int n) {
  Integer value;
  mpz_pow_ui(value.get_mpz_t(), Integer(n - 2).get_mpz_t(), static_cast<unsigned long>(n + 1));
  value *= (n - 1);
  return value / 2;
}

Integer determinant_from_spectrum(const SpectrumSpec& spectrum) {
  Integer det = 1;
  for (std::size_t i = 0; i < spectrum.eigenvalues.size(); ++i) {
    Integer factor;
    const long magnitude = static_cast<long>(std::abs(spectrum.eigenvalues[i]));
    mpz_pow_ui(factor.get_mpz_t(), Integer(magnitude).get_mpz_t(),
               static_cast<unsigned long>(spectrum.multiplicities[i]));
    det *= factor;
  }
  return det;
}

std::vector<double> numeric_eigenvalues(const IntMatrix& matrix) {
  Eigen::MatrixXd a(matrix.rows(), matrix.cols());
  for (std::size_t i = 0; i < matrix.rows(); ++i) {
    for (std::size_t j = 0; j < matrix.cols(); ++j) {
      a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = static_cast<double>(matrix(i, j));
    }
  }
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& values = solver.eigenvalues();
  return {values.begin(), values.end()};
}

LineGraphAdjacency build_line_graph_adjacency(int n) {
  if (n < 2) {
    throw DomainError("line graph of K_{n+1} needs n >= 2");
  }
  LineGraphAdjacency out;
  out.n = n;
  out.subsets = k_subsets(n + 1, 2);
  const std::size_t order = out.subsets.size();
  out.entries = IntMatrix(order, order);
  out.all_ones = IntMatrix(order, order, 1);
  for (std::size_t i = 0; i < order; ++i) {
    for (std::size_t j = 0; j < order; ++j) {
      if (i != j && intersection_size(out.subsets[i], out.subsets[j]) == 1) {
        out.entries(i, j) = 1;
      }
    }
  }
  return out;
}

LineGraphReport line_graph_complement_check(int n) {
  const LineGraphAdjacency line = build_line_graph_adjacency(n);
  const KneserAdjacency kneser = build_kneser_adjacency(n, 2);
  const std::size_t order = line.subsets.size();

  LineGraphReport report;
  report.n = n;
  report.complement_identity =
      (line.entries + kneser.entries + IntMatrix::identity(order)) == line.all_ones;

  const auto sums = line.entries.row_sums();
  report.regular = std::all_of(sums.begin(), sums.end(), [&](std::int64_t s) { return s == 2 * n - 2; });

  report.line_graph_eigenvalues = {2 * n - 2, -2, n - 3};
  report.line_graph_annihilation =
      verify_annihilation(line.entries, distinct_in_order(report.line_graph_eigenvalues));

  const auto pairs = static_cast<std::int64_t>(order);
  report.translated_eigenvalues = {pairs - report.line_graph_eigenvalues[0] - 1,
                                   -report.line_graph_eigenvalues[1] - 1,
                                   -report.line_graph_eigenvalues[2] - 1};
  const std::vector<std::int64_t> expected = {static_cast<std::int64_t>(binomial(n - 1, 2)), 1, 2 - n};
  report.translation = report.translated_eigenvalues == expected &&
                       verify_annihilation(kneser.entries, distinct_in_order(report.translated_eigenvalues));
  return report;
}

}  // namespace simplexvol
