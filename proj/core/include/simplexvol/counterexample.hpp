#pragma once

#include "simplexvol/exact.hpp"
#include "simplexvol/simplex.hpp"

#include <Eigen/Dense>

#include <vector>

namespace simplexvol {

/// Closed-form constants of the one-parameter family T(t), n >= 4.
///
/// w(t)^2 = alpha t^2 + beta t + gamma is the squared volume of a
/// codimension-2 face holding both special vertices; it peaks at t0.
struct TFamilyConstants {
  int n = 0;
  Rational c_sq_exact;
  Rational t0_exact;
  Rational x_max_exact;
  Rational alpha_exact;
  Rational beta_exact;

  double c_sq = 0.0;
  double t0 = 0.0;
  double x_max = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  double nu = 0.0;  ///< volume of a regular codimension-2 face

  /// Open upper bound 4 (1 - c^2) for t.
  double t_upper() const noexcept { return 4.0 * (1.0 - c_sq); }
};

TFamilyConstants family_constants(int n);

/// One member of T(t). Vertices are labelled 1..n+1; the special edge is {n, n+1}.
struct TInstance {
  int n = 0;
  double t = 0.0;
  std::vector<Eigen::VectorXd> vertices;
  double p = 0.0, q = 0.0, r = 0.0, s = 0.0;

  SimplexSpec spec() const { return vertices_to_spec(vertices); }
  /// Exact-by-construction squared lengths: all 1, except t on the special edge.
  SimplexSpec nominal_spec() const;
  Eigen::VectorXd barycenter() const;
};

/// Requires 0 < t < 4 (1 - c^2).
TInstance build_instance(int n, double t);

double w_squared(int n, double t);

struct PairReport {
  double tol = 0.0;
  double facevol_max_reldiff = 0.0;
  double vol_minus = 0.0;
  double vol_plus = 0.0;
  double vol_reldiff = 0.0;
  bool non_congruent = false;
  bool passed = false;
};

struct CounterexamplePair {
  int n = 0;
  double x = 0.0;
  TInstance minus;  ///< T(t0 - x)
  TInstance plus;   ///< T(t0 + x)
  PairReport report;
};

/// Requires 0 < x < x_max. Attaches verify_pair(pair, tol).
CounterexamplePair build_pair(int n, double x, double tol = 1e-10);

PairReport verify_pair(const CounterexamplePair& pair, double tol);

struct TwoValues {
  double value_regular = 0.0;
  double value_special = 0.0;
};

/// Throws CertificationError if codimension-2 volumes take more than the two expected values.
TwoValues two_value_check(const TInstance& instance, double rel_tol = 1e-12);

struct SweepRow {
  int n = 0;
  double x = 0.0;
  double t_minus = 0.0;
  double t_plus = 0.0;
  double max_facevol_reldiff = 0.0;
  double vol_minus = 0.0;
  double vol_plus = 0.0;
  double vol_reldiff = 0.0;
};

/// x_i = i / (points + 1) * x_max, i = 1..points.
std::vector<SweepRow> sweep(int n, int points);

inline constexpr const char* kSweepCsvHeader =
    "n,x,t_minus,t_plus,max_facevol_reldiff,vol_minus,vol_plus,vol_reldiff";

std::string sweep_to_csv(const std::vector<SweepRow>& rows);

/// Simplex JSON of the instance plus a "vertices" array.
std::string instance_to_json(const TInstance& instance);

}  // namespace simplexvol
