#pragma once

// Sampling kernels over qubit states, used to check the closed-form metrics.
//
// Each kernel has an OpenMP version and a serial reference. Work is split into
// fixed chunks, each with its own seeded stream, and partial sums are combined
// in chunk order, so both versions return bit-identical results for any thread
// count.

#include <cstddef>
#include <cstdint>
#include <random>

#include "jmspin/algebra.hpp"

namespace jmspin {

inline constexpr std::size_t kSampleChunk = 4096;

struct DeviationSample {
  double mean = 0.0;       // average of |tr(rho P) - tr(rho A)|
  double std_error = 0.0;  // standard error of the mean
  double max = 0.0;        // largest deviation seen
  std::size_t count = 0;
};

// Pure states drawn uniformly from the Bloch sphere.
DeviationSample sample_deviation(const BinaryObservable& sharp_p, const BinaryObservable& a, std::size_t samples,
                                 std::uint64_t seed = 42);
DeviationSample sample_deviation_serial(const BinaryObservable& sharp_p, const BinaryObservable& a,
                                        std::size_t samples, std::uint64_t seed = 42);

struct RmsSpread {
  double min = 0.0;
  double max = 0.0;
  double spread() const { return max - min; }
};

// rms_noise over states drawn uniformly from the Bloch ball (mixed states included).
RmsSpread sample_rms_spread(const BinaryObservable& sharp_p, const BinaryObservable& a, std::size_t states,
                            std::uint64_t seed = 42);
RmsSpread sample_rms_spread_serial(const BinaryObservable& sharp_p, const BinaryObservable& a, std::size_t states,
                                   std::uint64_t seed = 42);

// Largest rms_noise over a Fibonacci grid of `points` pure states.
double rms_noise_grid_sup(const BinaryObservable& sharp_p, const BinaryObservable& a, std::size_t points);
double rms_noise_grid_sup_serial(const BinaryObservable& sharp_p, const BinaryObservable& a, std::size_t points);

BlochVector random_unit_vector(std::mt19937_64& rng);
BlochVector random_ball_vector(std::mt19937_64& rng);
BlochVector fibonacci_sphere_point(std::size_t i, std::size_t n);

}  // namespace jmspin
