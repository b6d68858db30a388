#include "simplexvol/counterexample.hpp"
#include "simplexvol/errors.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>

namespace simplexvol {
namespace {

// squared volume of the face {1, ..., n-3, n, n+1} read off the constructed coordinates
double special_face_gram(const TInstance& inst) {
  Subset face;
  for (int v = 1; v <= inst.n - 3; ++v) {
    face.push_back(v);
  }
  face.push_back(inst.n);
  face.push_back(inst.n + 1);
  return oracle::gram_squared_volume(oracle::select(inst.vertices, face));
}

TEST(FamilyConstants, FourAndFive) {
  const TFamilyConstants four = family_constants(4);
  EXPECT_EQ(four.c_sq_exact, Rational(1, 3));
  EXPECT_EQ(four.t0_exact, Rational(2));
  EXPECT_EQ(four.x_max_exact, Rational(2, 3));
  EXPECT_EQ(four.alpha_exact, Rational(-1, 16));
  EXPECT_EQ(four.beta_exact, Rational(1, 4));
  EXPECT_EQ(four.alpha_exact + four.beta_exact, Rational(3, 16));
  EXPECT_NEAR(four.alpha + four.beta, std::pow(std::sqrt(3.0) / 4.0, 2), 1e-16);
  EXPECT_EQ(four.gamma, 0.0);

  const TFamilyConstants five = family_constants(5);
  EXPECT_EQ(five.t0_exact, Rational(3, 2));
  EXPECT_EQ(five.c_sq_exact, Rational(3, 8));
  EXPECT_THROW(family_constants(3), DomainError);
}

TEST(FamilyConstants, Invariants) {
  for (int n = 4; n <= 12; ++n) {
    const TFamilyConstants k = family_constants(n);
    Rational f = 1;
    for (int i = 2; i <= n - 2; ++i) {
      f *= i;
    }
    Integer two = 1;
    two <<= static_cast<unsigned long>(n - 2);
    EXPECT_EQ(k.alpha_exact + k.beta_exact, Rational(n - 1) / (Rational(two) * f * f));
    EXPECT_EQ(k.t0_exact, -k.beta_exact / (2 * k.alpha_exact));
    EXPECT_GT(k.x_max_exact, 0);
    EXPECT_LT(k.x_max_exact, k.t0_exact);
    // the admissible x range ends exactly where t reaches the chord limit 4 (1 - c^2)
    EXPECT_EQ(k.t0_exact + k.x_max_exact, 4 * (1 - k.c_sq_exact));
    EXPECT_NEAR(k.nu * k.nu, k.alpha + k.beta, 1e-15);
  }
}

TEST(BuildInstance, UnitAndSpecialEdges) {
  const TInstance regular = build_instance(4, 1.0);
  const SimplexSpec r = regular.spec();
  ASSERT_EQ(r.num_edges(), 10u);
  for (double v : r.squared_lengths()) {
    EXPECT_NEAR(v, 1.0, 1e-14);
  }

  const SimplexSpec two = build_instance(4, 2.0).spec();
  int ones = 0;
  for (int i = 1; i <= 5; ++i) {
    for (int j = i + 1; j <= 5; ++j) {
      if (i == 4 && j == 5) {
        EXPECT_NEAR(two.squared_length(i, j), 2.0, 1e-14);
      } else {
        EXPECT_NEAR(two.squared_length(i, j), 1.0, 1e-14);
        ++ones;
      }
    }
  }
  EXPECT_EQ(ones, 9);
  EXPECT_TRUE(is_realizable(two).realizable);
  const TFamilyConstants k = family_constants(4);
  EXPECT_TRUE(is_realizable(build_instance(4, k.t0).spec()).realizable);
}

TEST(BuildInstance, Domain) {
  const TFamilyConstants k = family_constants(4);
  EXPECT_THROW(build_instance(4, 0.0), DomainError);
  EXPECT_THROW(build_instance(4, k.t_upper()), DomainError);
  EXPECT_THROW(build_instance(4, -1.0), DomainError);
  EXPECT_THROW(build_instance(3, 1.0), DomainError);
  EXPECT_NO_THROW(build_instance(4, k.t_upper() - 1e-9));
}

TEST(BuildInstance, ConstructionConsistency) {
  for (int n = 4; n <= 8; ++n) {
    const TFamilyConstants k = family_constants(n);
    for (int i = 1; i <= 9; ++i) {
      const double t = k.t_upper() * i / 10.0;
      const TInstance inst = build_instance(n, t);
      EXPECT_NEAR(inst.p * inst.p + inst.q * inst.q, 1.0 - k.c_sq, 1e-15);
      EXPECT_NEAR(inst.r * inst.r + inst.s * inst.s, 1.0 - k.c_sq, 1e-15);
      EXPECT_GE(inst.s, 0.0);
      const SimplexSpec spec = inst.spec();
      const SimplexSpec nominal = inst.nominal_spec();
      for (std::size_t e = 0; e < spec.num_edges(); ++e) {
        EXPECT_NEAR(spec.squared_lengths()[e], nominal.squared_lengths()[e], 1e-14) << "n=" << n << " t=" << t;
      }
      const Eigen::VectorXd a = inst.barycenter();
      for (int v = 0; v < n - 1; ++v) {
        EXPECT_NEAR((inst.vertices[v] - a).squaredNorm(), k.c_sq, 1e-14);
      }
    }
  }
}

TEST(WSquared, Examples) {
  EXPECT_NEAR(w_squared(4, 1.5), 3.75 / 16.0, 1e-16);
  EXPECT_NEAR(w_squared(4, 2.5), 3.75 / 16.0, 1e-16);
  EXPECT_NEAR(w_squared(4, 1.0), 3.0 / 16.0, 1e-16);
  EXPECT_EQ(w_squared(4, 0.0), 0.0);
  // Cayley-Menger oracle on a triangle with squared sides (1, 1, t)
  const SimplexSpec a(2, std::vector<double>{1, 1, 1.5});
  const SimplexSpec b(2, std::vector<double>{1, 1, 2.5});
  EXPECT_NEAR(squared_volume(a, Subset{1, 2, 3}), w_squared(4, 1.5), 1e-15);
  EXPECT_NEAR(squared_volume(b, Subset{1, 2, 3}), w_squared(4, 2.5), 1e-15);
}

TEST(WSquared, MatchesCayleyMengerAndGramOracles) {
  for (int n = 4; n <= 8; ++n) {
    const TFamilyConstants k = family_constants(n);
    for (int i = 1; i <= 20; ++i) {
      const double t = k.t_upper() * i / 21.0;
      const double formula = w_squared(n, t);
      // special face: every edge 1 except the special one
      const SimplexSpec face = regular_simplex(n - 2).with_squared_length(n - 2, n - 1, t);
      EXPECT_NEAR(squared_volume(face, FaceIndex::full(n - 1)), formula, 1e-12 * formula);
      EXPECT_NEAR(special_face_gram(build_instance(n, t)), formula, 1e-12 * formula);
    }
  }
}

TEST(WSquared, SymmetricAboutPeak) {
  for (int n = 4; n <= 8; ++n) {
    const TFamilyConstants k = family_constants(n);
    for (double frac : {0.1, 0.37, 0.5, 0.9}) {
      const double x = frac * k.x_max;
      const double lo = w_squared(n, k.t0 - x);
      const double hi = w_squared(n, k.t0 + x);
      EXPECT_NEAR(lo, hi, 1e-14 * hi);
      // exact: alpha (t0 - x)^2 + beta (t0 - x) == alpha (t0 + x)^2 + beta (t0 + x)
      const Rational xq = rational_from_double(x);
      const Rational tl = k.t0_exact - xq, th = k.t0_exact + xq;
      EXPECT_EQ(k.alpha_exact * tl * tl + k.beta_exact * tl, k.alpha_exact * th * th + k.beta_exact * th);
    }
  }
}

TEST(BuildPair, Examples) {
  const CounterexamplePair four = build_pair(4, 0.5);
  EXPECT_NEAR(four.minus.t, 1.5, 1e-15);
  EXPECT_NEAR(four.plus.t, 2.5, 1e-15);
  const CounterexamplePair five = build_pair(5, 0.25);
  EXPECT_NEAR(five.minus.t, 1.25, 1e-15);
  EXPECT_NEAR(five.plus.t, 1.75, 1e-15);
  EXPECT_THROW(build_pair(4, 0.7), DomainError);
  EXPECT_THROW(build_pair(4, 0.0), DomainError);
}

TEST(VerifyPair, FourDimensionalWitness) {
  const CounterexamplePair pair = build_pair(4, 0.5, 1e-12);
  EXPECT_LE(pair.report.facevol_max_reldiff, 1e-12);
  EXPECT_TRUE(pair.report.non_congruent);
  EXPECT_GT(pair.report.vol_reldiff, 1e-6);
  EXPECT_TRUE(pair.report.passed);
  // independent 4-volumes from coordinates
  const double vm = std::sqrt(oracle::gram_squared_volume(pair.minus.vertices));
  const double vp = std::sqrt(oracle::gram_squared_volume(pair.plus.vertices));
  EXPECT_NEAR(pair.report.vol_minus, vm, 1e-12);
  EXPECT_NEAR(pair.report.vol_plus, vp, 1e-12);
}

TEST(VerifyPair, CollapsesAsXVanishes) {
  const CounterexamplePair pair = build_pair(4, 1e-9, 1e-6);
  EXPECT_LE(pair.report.facevol_max_reldiff, 1e-8);
  EXPECT_LE(pair.report.vol_reldiff, 1e-8);
  EXPECT_FALSE(pair.report.passed);
}

TEST(VerifyPair, NegativeAnswerWitnessAcrossDimensions) {
  for (int n = 4; n <= 8; ++n) {
    const TFamilyConstants k = family_constants(n);
    for (double frac : {0.1, 0.5, 0.9}) {
      const CounterexamplePair pair = build_pair(n, frac * k.x_max, 1e-10);
      EXPECT_TRUE(pair.report.passed) << "n=" << n << " frac=" << frac;
    }
  }
}

TEST(TwoValues, Examples) {
  const TFamilyConstants k4 = family_constants(4);
  const TwoValues two = two_value_check(build_instance(4, 2.0));
  EXPECT_NEAR(two.value_regular, std::sqrt(3.0) / 4.0, 1e-14);
  EXPECT_NEAR(two.value_special, std::sqrt(w_squared(4, 2.0)), 1e-14);
  EXPECT_NEAR(w_squared(4, 2.0), 4.0 / 16.0, 1e-16);
  EXPECT_NEAR(two.value_regular, k4.nu, 1e-15);

  const TwoValues one = two_value_check(build_instance(4, 1.0));
  EXPECT_NEAR(one.value_regular, std::sqrt(3.0) / 4.0, 1e-14);
  EXPECT_NEAR(one.value_special, std::sqrt(3.0) / 4.0, 1e-14);

  const TFamilyConstants k6 = family_constants(6);
  const TInstance six = build_instance(6, k6.t0);
  const std::vector<double> values = all_face_volumes(six.spec(), 4).sorted_values();
  ASSERT_EQ(values.size(), 21u);
  std::vector<double> distinct;
  for (double v : values) {
    if (distinct.empty() || v - distinct.back() > 1e-12 * v) {
      distinct.push_back(v);
    }
  }
  EXPECT_EQ(distinct.size(), 2u);
  EXPECT_NO_THROW(two_value_check(six));
}

TEST(TwoValues, FaceCountsPerClass) {
  for (int n = 4; n <= 8; ++n) {
    const TInstance inst = build_instance(n, 1.3);
    const FaceVolumeVector v = all_face_volumes(inst.spec(), n - 2);
    const TwoValues tv = two_value_check(inst);
    const auto special = std::count_if(v.values.begin(), v.values.end(),
                                       [&](double x) { return std::abs(x - tv.value_special) < 1e-12; });
    EXPECT_EQ(static_cast<std::uint64_t>(special), binomial(n - 1, n - 3));
  }
}

TEST(Sweep, CsvShape) {
  const auto rows = sweep(4, 3);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_NEAR(rows[1].x, 0.5 * family_constants(4).x_max, 1e-15);
  const std::string csv = sweep_to_csv(rows);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), kSweepCsvHeader);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 4);
  EXPECT_THROW(sweep(4, 0), DomainError);
}

TEST(InstanceJson, CarriesVertices) {
  const std::string json = instance_to_json(build_instance(4, 2.0));
  EXPECT_NE(json.find("\"vertices\""), std::string::npos);
  EXPECT_EQ(simplex_from_json(json).dimension(), 4);
}

}  // namespace
}  // namespace simplexvol
