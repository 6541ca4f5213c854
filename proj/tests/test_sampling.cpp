#include <gtest/gtest.h>

#include <omp.h>

#include "jmspin/distances.hpp"
#include "jmspin/sampling.hpp"
#include "test_support.hpp"

namespace jmspin {
namespace {

const BinaryObservable kP = sharp_spin({0, 0, 1});

TEST(Sampling, ParallelMatchesSerialBitForBit) {
  const BinaryObservable a = effect_from_parameters(0.9, {0.1, 0.2, 0.5});
  for (int threads : {1, 2, 3, 8}) {
    omp_set_num_threads(threads);
    const DeviationSample par = sample_deviation(kP, a, 50000, 5);
    const DeviationSample ser = sample_deviation_serial(kP, a, 50000, 5);
    EXPECT_EQ(par.mean, ser.mean);
    EXPECT_EQ(par.std_error, ser.std_error);
    EXPECT_EQ(par.max, ser.max);
    const RmsSpread rp = sample_rms_spread(kP, a, 20000, 5);
    const RmsSpread rs = sample_rms_spread_serial(kP, a, 20000, 5);
    EXPECT_EQ(rp.min, rs.min);
    EXPECT_EQ(rp.max, rs.max);
    EXPECT_EQ(rms_noise_grid_sup(kP, a, 5000), rms_noise_grid_sup_serial(kP, a, 5000));
  }
}

TEST(Sampling, SeedChangesStream) {
  const BinaryObservable a = effect_from_parameters(1.0, {0.3, 0, 0});
  EXPECT_NE(sample_deviation(kP, a, 1000, 1).mean, sample_deviation(kP, a, 1000, 2).mean);
  EXPECT_EQ(sample_deviation(kP, a, 1000, 1).mean, sample_deviation(kP, a, 1000, 1).mean);
}

TEST(Sampling, PureStatesAreUniformOnSphere) {
  std::mt19937_64 rng(42);
  double sum_z = 0.0, sum_z2 = 0.0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const BlochVector v = random_unit_vector(rng);
    ASSERT_NEAR(v.norm(), 1.0, 1e-14);
    sum_z += v.z;
    sum_z2 += v.z * v.z;
  }
  EXPECT_NEAR(sum_z / n, 0.0, 5e-3);
  EXPECT_NEAR(sum_z2 / n, 1.0 / 3.0, 5e-3);
}

TEST(Sampling, FibonacciGridCoversSphere) {
  const std::size_t n = 10000;
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const BlochVector v = fibonacci_sphere_point(i, n);
    ASSERT_NEAR(v.norm(), 1.0, 1e-14);
    sum += v.x + v.y + v.z;
  }
  EXPECT_NEAR(sum / n, 0.0, 1e-3);
}

TEST(Sampling, EmptyAndPartialChunks) {
  EXPECT_EQ(sample_deviation(kP, kP, 0).count, 0u);
  const DeviationSample s = sample_deviation(kP, trivial_observable(), kSampleChunk + 3, 9);
  EXPECT_EQ(s.count, kSampleChunk + 3);
  EXPECT_NEAR(s.mean, 0.25, 0.02);
}

}  // namespace
}  // namespace jmspin
