#include <gtest/gtest.h>

#include "jmspin/distances.hpp"
#include "jmspin/sampling.hpp"
#include "test_support.hpp"

namespace jmspin {
namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
const BinaryObservable kP = sharp_spin({1, 0, 0});

BinaryObservable unbiased(const BlochVector& a) { return effect_from_parameters(1.0, a); }

TEST(WorstCaseDeviation, Examples) {
  EXPECT_DOUBLE_EQ(worst_case_deviation(kP, kP), 0.0);
  EXPECT_DOUBLE_EQ(worst_case_deviation(kP, trivial_observable()), 0.5);
  EXPECT_NEAR(worst_case_deviation(kP, unbiased({kInvSqrt2, 0, 0})), 0.5 * (1.0 - kInvSqrt2), 1e-15);
}

TEST(WorstCaseDeviation, TrivialObservableMatchesSampledSup) {
  const DeviationSample s = sample_deviation_serial(kP, trivial_observable(), 100000, 42);
  EXPECT_NEAR(s.max, 0.5, 1e-3);
}

TEST(WorstCaseDeviation, AttainedAtAlignedState) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 200; ++i) {
    const BinaryObservable p = sharp_spin(testing::random_direction(rng));
    const BinaryObservable a = testing::random_biased_effect(rng);
    const BlochVector diff = p.vec() - a.vec();
    if (diff.norm() < 1e-6) continue;
    const double sign = a.alpha() <= 1.0 ? 1.0 : -1.0;
    const BlochVector r = diff / diff.norm() * sign;
    const double attained = std::abs(outcome_probability(p, r) - outcome_probability(a, r));
    EXPECT_NEAR(attained, worst_case_deviation(p, a), 1e-14);
  }
}

TEST(WorstCaseDeviation, MatchesSampledSupremum) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 10; ++i) {
    const BinaryObservable p = sharp_spin(testing::random_direction(rng));
    const BinaryObservable a = testing::random_biased_effect(rng);
    const DeviationSample s = sample_deviation(p, a, 100000, 1000 + i);
    EXPECT_LE(s.max, worst_case_deviation(p, a) + 1e-15);
    EXPECT_NEAR(s.max, worst_case_deviation(p, a), 1e-3);
  }
}

TEST(AverageDeviation, Examples) {
  EXPECT_DOUBLE_EQ(average_deviation(kP, kP), 0.0);
  EXPECT_NEAR(average_deviation(kP, unbiased({0.6, 0, 0})), 0.1, 1e-15);
  // a = p is outside the cone for alpha != 1; a = alpha p is the closest valid
  // effect and sits where both branches meet at |1 - alpha| / 2.
  EXPECT_NEAR(average_deviation(kP, effect_from_parameters(0.8, {0.8, 0, 0})), 0.1, 1e-15);
  EXPECT_NEAR(average_deviation(kP, effect_from_parameters(1.2, {0.8, 0, 0})), 0.1, 1e-15);
}

TEST(AverageDeviation, ValidEffectsNeverEnterTheConstantBranch) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 10000; ++i) {
    const BinaryObservable p = sharp_spin(testing::random_direction(rng));
    const BinaryObservable a = testing::random_biased_effect(rng);
    ASSERT_GE(distance(p.vec(), a.vec()), std::abs(1.0 - a.alpha()) - 1e-12);
  }
}

TEST(AverageDeviation, UnbiasedExampleAgainstMonteCarlo) {
  const DeviationSample s = sample_deviation(kP, unbiased({0.6, 0, 0}), 1000000, 42);
  EXPECT_NEAR(s.mean, 0.1, 3e-3);
}

// The piecewise formula against a 1-D midpoint quadrature of |c + d t| / 4.
TEST(AverageDeviation, PiecewiseFormulaMatchesQuadrature) {
  for (double alpha : {0.5, 0.8, 1.0, 1.3}) {
    for (double shrink : {1.0, 0.95, 0.9, 0.7, 0.4, 0.0}) {
      const double n = std::min(alpha, 2.0 - alpha) * shrink;
      const BinaryObservable a = effect_from_parameters(alpha, {n * 0.6, n * 0.8, 0});
      const double c = 1.0 - alpha, d = distance(kP.vec(), a.vec());
      const int steps = 200000;
      double integral = 0.0;
      for (int k = 0; k < steps; ++k) {
        const double t = -1.0 + (k + 0.5) * 2.0 / steps;
        integral += std::abs(c + d * t) * 2.0 / steps;
      }
      EXPECT_NEAR(average_deviation(kP, a), 0.25 * integral, 1e-9) << "alpha=" << alpha << " shrink=" << shrink;
    }
  }
}

TEST(AverageDeviation, NeverExceedsWorstCase) {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 2000; ++i) {
    const BinaryObservable p = sharp_spin(testing::random_direction(rng));
    const BinaryObservable a = testing::random_biased_effect(rng);
    const double avg = average_deviation(p, a);
    EXPECT_GE(avg, 0.0);
    EXPECT_LE(avg, worst_case_deviation(p, a) + 1e-15);
  }
}

TEST(StatisticalDistance, Examples) {
  EXPECT_DOUBLE_EQ(statistical_distance(kP, kP), 0.0);
  EXPECT_DOUBLE_EQ(statistical_distance(kP, unbiased({-1, 0, 0})), 1.0);
  EXPECT_NEAR(statistical_distance(kP, unbiased({kInvSqrt2, 0, 0})), 0.5 * (1.0 - kInvSqrt2), 1e-15);
  const BinaryObservable q = sharp_spin({0, 1, 0});
  EXPECT_NEAR(statistical_distance(q, unbiased({0, kInvSqrt2, 0})), 0.5 * (1.0 - kInvSqrt2), 1e-15);
}

TEST(StatisticalDistance, RejectsBiasedObservable) {
  try {
    statistical_distance(kP, effect_from_parameters(0.9, {0.5, 0, 0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BiasedObservable);
  }
}

TEST(StatisticalDistance, UnbiasedWorstIsTwiceAverage) {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 500; ++i) {
    const BinaryObservable a = unbiased(testing::random_in_ball(rng));
    EXPECT_NEAR(worst_case_deviation(kP, a), statistical_distance(kP, a), 1e-15);
    EXPECT_NEAR(worst_case_deviation(kP, a), 2.0 * average_deviation(kP, a), 1e-15);
  }
}

// Noise from the operator definition, evaluated with dense complex matrices.
double dense_rms_noise(const BinaryObservable& p, const BinaryObservable& a, const BlochVector& r) {
  using M = Matrix2c;
  auto mul = [](const M& x, const M& y) {
    return M{x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
             x[2] * y[1] + x[3] * y[3]};
  };
  auto add = [](const M& x, const M& y, double s) {
    return M{x[0] + s * y[0], x[1] + s * y[1], x[2] + s * y[2], x[3] + s * y[3]};
  };
  const M identity = HermitianOp::identity().to_matrix();
  const M first = add(a.effect().to_matrix(), a.complement_effect().to_matrix(), -1.0);  // A - (I - A)
  const M sigma_p = add(p.effect().to_matrix(), p.complement_effect().to_matrix(), -1.0);
  const M resid = add(sigma_p, first, -1.0);
  const M op = add(add(identity, mul(first, first), -1.0), mul(resid, resid), 1.0);
  const M rho = HermitianOp{1.0, r}.to_matrix();
  const M prod = mul(op, rho);
  return std::sqrt((prod[0] + prod[3]).real());
}

TEST(RmsNoise, MatchesOperatorDefinition) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 2000; ++i) {
    const BinaryObservable p = sharp_spin(testing::random_direction(rng));
    const BinaryObservable a = testing::random_biased_effect(rng);
    const BlochVector r = testing::random_in_ball(rng);
    ASSERT_NEAR(rms_noise(p, a, r), dense_rms_noise(p, a, r), 1e-12);
  }
}

TEST(RmsNoise, Examples) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 100; ++i) {
    const BlochVector r = testing::random_in_ball(rng);
    EXPECT_NEAR(rms_noise(kP, kP, r), 0.0, 1e-15);
    EXPECT_NEAR(rms_noise(kP, trivial_observable(), r), std::sqrt(2.0), 1e-15);
    const BlochVector a = testing::random_in_ball(rng);
    EXPECT_NEAR(rms_noise(kP, unbiased(a), r), std::sqrt(2.0 * (1.0 - dot(a, kP.vec()))), 1e-14);
  }
}

TEST(RmsNoise, RejectsInvalidState) {
  try {
    rms_noise(kP, kP, {1.0, 0.5, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidState);
  }
}

TEST(RmsNoise, StateIndependentWhenUnbiased) {
  std::mt19937_64 rng(15);
  for (int i = 0; i < 20; ++i) {
    const BinaryObservable a = unbiased(testing::random_in_ball(rng));
    EXPECT_LT(sample_rms_spread(kP, a, 1000, i).spread(), 1e-10);
  }
  const BinaryObservable biased = effect_from_parameters(0.8, {0.3, 0, 0});
  EXPECT_GT(sample_rms_spread(kP, biased, 1000, 1).spread(), 0.1);
}

TEST(RmsDistance, Examples) {
  EXPECT_DOUBLE_EQ(rms_distance(kP, kP), 0.0);
  for (double omega : {0.1, 0.7, 1.5, 3.0}) {
    const BinaryObservable a = unbiased({std::cos(omega), std::sin(omega), 0});
    EXPECT_NEAR(rms_distance(kP, a), std::sqrt(2.0 * (1.0 - std::cos(omega))), 1e-14);
    EXPECT_NEAR(std::acos(1.0 - 0.5 * std::pow(rms_distance(kP, a), 2)), omega, 1e-7);
  }
  std::mt19937_64 rng(3);
  for (int i = 0; i < 1000; ++i) {
    const BlochVector a = testing::random_in_ball(rng);
    const double d = rms_distance(kP, unbiased(a));
    EXPECT_NEAR(d * d, (kP.vec() - a).norm2() + 1.0 - a.norm2(), 1e-12);
  }
}

TEST(RmsDistance, BiasedSupMatchesGridOracle) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 20; ++i) {
    const BinaryObservable p = sharp_spin(testing::random_direction(rng));
    const BinaryObservable a = testing::random_biased_effect(rng);
    const double grid = rms_noise_grid_sup(p, a, 10000);
    EXPECT_LE(grid, rms_distance(p, a) + 1e-14);
    EXPECT_NEAR(grid, rms_distance(p, a), 1e-3);
  }
}

TEST(RmsDecomposition, Examples) {
  auto d = rms_decomposition(kP, kP);
  EXPECT_DOUBLE_EQ(d.accuracy_part, 0.0);
  EXPECT_DOUBLE_EQ(d.unsharpness_part, 0.0);
  d = rms_decomposition(kP, trivial_observable());
  EXPECT_DOUBLE_EQ(d.accuracy_part, 1.0);
  EXPECT_DOUBLE_EQ(d.unsharpness_part, 1.0);
  d = rms_decomposition(kP, unbiased({kInvSqrt2, 0, 0}));
  EXPECT_NEAR(d.accuracy_part, 1.5 - std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(d.unsharpness_part, 0.5, 1e-15);
  EXPECT_NEAR(d.accuracy_part + d.unsharpness_part, std::pow(std::sqrt(2.0 * (1.0 - kInvSqrt2)), 2), 1e-15);
  EXPECT_THROW(rms_decomposition(kP, effect_from_parameters(1.1, {})), Error);
}

TEST(RmsDecomposition, PartsSumToSquaredDistance) {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 10000; ++i) {
    const BinaryObservable p = sharp_spin(testing::random_direction(rng));
    const BinaryObservable a = unbiased(testing::random_in_ball(rng));
    const RmsDecomposition d = rms_decomposition(p, a);
    const double rms = rms_distance(p, a);
    ASSERT_NEAR(d.accuracy_part + d.unsharpness_part, rms * rms, 1e-12);
    ASSERT_NEAR(4.0 * std::pow(statistical_distance(p, a), 2), d.accuracy_part, 1e-12);
  }
}

TEST(Metrics, InvariantUnderJointRotation) {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 1000; ++i) {
    const BlochVector pv = testing::random_direction(rng);
    const BinaryObservable a = testing::random_biased_effect(rng);
    const auto rot = testing::random_rotation(rng);
    const BinaryObservable p1 = sharp_spin(pv), p2 = sharp_spin(rot(pv));
    const BinaryObservable a2 = effect_from_parameters(a.alpha(), rot(a.vec()));
    EXPECT_NEAR(worst_case_deviation(p1, a), worst_case_deviation(p2, a2), 1e-13);
    EXPECT_NEAR(average_deviation(p1, a), average_deviation(p2, a2), 1e-13);
    EXPECT_NEAR(rms_distance(p1, a), rms_distance(p2, a2), 1e-13);
  }
}

TEST(Reports, BundleTheMetrics) {
  const BinaryObservable a = unbiased({0.5, 0.2, 0});
  const DeviationReport r = deviation_report(kP, a);
  ASSERT_TRUE(r.statistical.has_value());
  EXPECT_DOUBLE_EQ(*r.statistical, statistical_distance(kP, a));
  EXPECT_GE(r.worst, r.average);
  EXPECT_FALSE(deviation_report(kP, effect_from_parameters(0.9, {})).statistical.has_value());
  const RmsReport rr = rms_report(kP, a, {0, 0, 1});
  EXPECT_NEAR(rr.per_state, rr.distance, 1e-15);
}

}  // namespace
}  // namespace jmspin
