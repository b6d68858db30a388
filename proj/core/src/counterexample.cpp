#include "simplexvol/counterexample.hpp"

#include "simplexvol/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace simplexvol {
namespace {

double factorial(int m) {
  double f = 1.0;
  for (int i = 2; i <= m; ++i) {
    f *= i;
  }
  return f;
}

Integer factorial_exact(int m) {
  Integer f = 1;
  for (int i = 2; i <= m; ++i) {
    f *= i;
  }
  return f;
}

Rational power_of_two(int exponent) {
  Integer p = 1;
  p <<= static_cast<unsigned long>(std::abs(exponent));
  return exponent >= 0 ? Rational(p) : Rational(Integer(1), p);
}

void require_family_dimension(int n) {
  if (n < 4) {
    throw DomainError("the T(t) family needs n >= 4, got " + std::to_string(n));
  }
}

double relative_difference(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

}  // namespace

TFamilyConstants family_constants(int n) {
  require_family_dimension(n);
  TFamilyConstants k;
  k.n = n;
  const Rational f2 = Rational(factorial_exact(n - 2) * factorial_exact(n - 2));
  k.c_sq_exact = Rational(1, 2) - Rational(1, 2 * (n - 1));
  k.t0_exact = Rational(n - 2, n - 3);
  k.x_max_exact = (Rational(n - 2) - Rational(4, n - 1)) / Rational(n - 3);
  k.alpha_exact = -Rational(n - 3) * power_of_two(2 - n) / f2;
  // coefficient of t in ((3-n) t^2 + (2n-4) t) / (2^(n-2) ((n-2)!)^2)
  k.beta_exact = Rational(n - 2) * power_of_two(3 - n) / f2;
  for (Rational* q : {&k.c_sq_exact, &k.t0_exact, &k.x_max_exact, &k.alpha_exact, &k.beta_exact}) {
    q->canonicalize();
  }
  k.c_sq = k.c_sq_exact.get_d();
  k.t0 = k.t0_exact.get_d();
  k.x_max = k.x_max_exact.get_d();
  k.alpha = k.alpha_exact.get_d();
  k.beta = k.beta_exact.get_d();
  k.gamma = 0.0;
  k.nu = std::sqrt(static_cast<double>(n - 1)) /
         (factorial(n - 2) * std::pow(2.0, 0.5 * static_cast<double>(n - 2)));
  return k;
}

SimplexSpec TInstance::nominal_spec() const {
  SimplexSpec unit = regular_simplex(n);
  return unit.with_squared_length(n, n + 1, t);
}

Eigen::VectorXd TInstance::barycenter() const {
  Eigen::VectorXd a = Eigen::VectorXd::Zero(n);
  for (int i = 0; i < n - 1; ++i) {
    a += vertices[static_cast<std::size_t>(i)];
  }
  return a / static_cast<double>(n - 1);
}

TInstance build_instance(int n, double t) {
  const TFamilyConstants k = family_constants(n);
  if (!(t > 0.0 && t < k.t_upper())) {
    throw DomainError("t = " + std::to_string(t) + " outside the open interval (0, " +
                      std::to_string(k.t_upper()) + ")");
  }
  TInstance inst;
  inst.n = n;
  inst.t = t;

  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const double apex = (std::sqrt(static_cast<double>(n - 1)) + 1.0) * inv_sqrt2 / (n - 2);

  Eigen::VectorXd first = Eigen::VectorXd::Zero(n);
  first.head(n - 2).setConstant(apex);
  inst.vertices.push_back(first);
  for (int i = 0; i < n - 2; ++i) {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(n);
    v(i) = inv_sqrt2;
    inst.vertices.push_back(v);
  }

  Eigen::VectorXd a = Eigen::VectorXd::Zero(n);
  a.head(n - 2).setConstant((apex + inv_sqrt2) / (n - 1));

  // (p, 0) and (r, s) on the circle of radius rho, chord length^2 = t
  const double rho_sq = 1.0 - k.c_sq;
  const double rho = std::sqrt(rho_sq);
  inst.p = rho;
  inst.q = 0.0;
  inst.r = rho - t / (2.0 * rho);
  inst.s = std::sqrt(std::max(0.0, t - t * t / (4.0 * rho_sq)));

  Eigen::VectorXd u = a;
  u(n - 2) = inst.p;
  u(n - 1) = inst.q;
  Eigen::VectorXd w = a;
  w(n - 2) = inst.r;
  w(n - 1) = inst.s;
  inst.vertices.push_back(u);
  inst.vertices.push_back(w);
  return inst;
}

double w_squared(int n, double t) {
  if (n < 2) {
    throw DomainError("w_squared needs n >= 2");
  }
  const double f = factorial(n - 2);
  return ((3.0 - n) * t * t + (2.0 * n - 4.0) * t) / (std::ldexp(1.0, n - 2) * f * f);
}

PairReport verify_pair(const CounterexamplePair& pair, double tol) {
  const int n = pair.n;
  const SimplexSpec minus = pair.minus.spec();
  const SimplexSpec plus = pair.plus.spec();

  PairReport report;
  report.tol = tol;
  const std::vector<double> a = all_face_volumes(minus, n - 2).sorted_values();
  const std::vector<double> b = all_face_volumes(plus, n - 2).sorted_values();
  for (std::size_t i = 0; i < a.size(); ++i) {
    report.facevol_max_reldiff = std::max(report.facevol_max_reldiff, relative_difference(a[i], b[i]));
  }

  const Subset all = FaceIndex::full(n + 1).vertices();
  report.vol_minus = face_volume(minus, all);
  report.vol_plus = face_volume(plus, all);
  report.vol_reldiff = relative_difference(report.vol_minus, report.vol_plus);

  std::vector<double> ea(minus.squared_lengths().begin(), minus.squared_lengths().end());
  std::vector<double> eb(plus.squared_lengths().begin(), plus.squared_lengths().end());
  std::sort(ea.begin(), ea.end());
  std::sort(eb.begin(), eb.end());
  double edge_gap = 0.0;
  for (std::size_t i = 0; i < ea.size(); ++i) {
    edge_gap = std::max(edge_gap, std::abs(ea[i] - eb[i]));
  }
  report.non_congruent = edge_gap > tol;

  report.passed =
      report.facevol_max_reldiff <= tol && report.vol_reldiff > tol && report.non_congruent;
  return report;
}

CounterexamplePair build_pair(int n, double x, double tol) {
  const TFamilyConstants k = family_constants(n);
  if (!(x > 0.0 && x < k.x_max)) {
    throw DomainError("x = " + std::to_string(x) + " outside the admissible interval (0, " +
                      std::to_string(k.x_max) + ")");
  }
  CounterexamplePair pair;
  pair.n = n;
  pair.x = x;
  pair.minus = build_instance(n, k.t0 - x);
  pair.plus = build_instance(n, k.t0 + x);
  pair.report = verify_pair(pair, tol);
  return pair;
}

TwoValues two_value_check(const TInstance& instance, double rel_tol) {
  const int n = instance.n;
  const FaceVolumeVector volumes = all_face_volumes(instance.spec(), n - 2);
  const Subset special = {n, n + 1};

  std::optional<double> regular;
  std::optional<double> special_value;
  for (std::size_t i = 0; i < volumes.size(); ++i) {
    // a codimension-2 face holds both special vertices iff its complement avoids them
    std::optional<double>& slot = disjoint(volumes.keys[i], special) ? special_value : regular;
    if (!slot) {
      slot = volumes.values[i];
    } else if (relative_difference(*slot, volumes.values[i]) > rel_tol) {
      throw CertificationError("codimension-2 volumes of T(" + std::to_string(instance.t) +
                               ") take more than two values");
    }
  }
  return {regular.value_or(0.0), special_value.value_or(0.0)};
}

std::vector<SweepRow> sweep(int n, int points) {
  if (points < 1) {
    throw DomainError("sweep needs at least one grid point");
  }
  const TFamilyConstants k = family_constants(n);
  std::vector<SweepRow> rows;
  rows.reserve(static_cast<std::size_t>(points));
  for (int i = 1; i <= points; ++i) {
    const double x = k.x_max * i / (points + 1);
    const CounterexamplePair pair = build_pair(n, x);
    rows.push_back({n, x, pair.minus.t, pair.plus.t, pair.report.facevol_max_reldiff,
                    pair.report.vol_minus, pair.report.vol_plus, pair.report.vol_reldiff});
  }
  return rows;
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
  std::string out = kSweepCsvHeader;
  out += '\n';
  char line[512];
  for (const SweepRow& r : rows) {
    std::snprintf(line, sizeof line, "%d,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", r.n, r.x,
                  r.t_minus, r.t_plus, r.max_facevol_reldiff, r.vol_minus, r.vol_plus, r.vol_reldiff);
    out += line;
  }
  return out;
}

std::string instance_to_json(const TInstance& instance) {
  nlohmann::json doc = nlohmann::json::parse(simplex_to_json(instance.spec()));
  doc["t"] = instance.t;
  nlohmann::json vertices = nlohmann::json::array();
  for (const Eigen::VectorXd& v : instance.vertices) {
    vertices.push_back(std::vector<double>(v.begin(), v.end()));
  }
  doc["vertices"] = std::move(vertices);
  return doc.dump();
}

}  // namespace simplexvol
