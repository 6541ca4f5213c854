#include "jmspin/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "jmspin/distances.hpp"
#include "jmspin/measurability.hpp"

namespace jmspin {
namespace {

struct Chunk {
  double sum = 0.0;
  double sum_sq = 0.0;
  double max = 0.0;
  double min = std::numeric_limits<double>::infinity();
};

std::size_t chunk_count(std::size_t n) { return (n + kSampleChunk - 1) / kSampleChunk; }
std::size_t chunk_size(std::size_t chunk, std::size_t n) {
  return std::min(kSampleChunk, n - chunk * kSampleChunk);
}

// Compensated sums inside one chunk.
template <class Sample>
Chunk run_chunk(std::size_t chunk, std::size_t n, std::uint64_t seed, Sample&& sample) {
  std::mt19937_64 rng(derive_seed(seed, chunk));
  Chunk c;
  double comp = 0.0, comp_sq = 0.0;
  for (std::size_t i = 0, m = chunk_size(chunk, n); i < m; ++i) {
    const double v = sample(rng);
    double y = v - comp;
    double t = c.sum + y;
    comp = (t - c.sum) - y;
    c.sum = t;
    y = v * v - comp_sq;
    t = c.sum_sq + y;
    comp_sq = (t - c.sum_sq) - y;
    c.sum_sq = t;
    c.max = std::max(c.max, v);
    c.min = std::min(c.min, v);
  }
  return c;
}

Chunk reduce(const std::vector<Chunk>& chunks) {
  Chunk total;
  double comp = 0.0, comp_sq = 0.0;
  for (const Chunk& c : chunks) {
    double y = c.sum - comp;
    double t = total.sum + y;
    comp = (t - total.sum) - y;
    total.sum = t;
    y = c.sum_sq - comp_sq;
    t = total.sum_sq + y;
    comp_sq = (t - total.sum_sq) - y;
    total.sum_sq = t;
    total.max = std::max(total.max, c.max);
    total.min = std::min(total.min, c.min);
  }
  return total;
}

template <class Sample>
Chunk run_serial(std::size_t n, std::uint64_t seed, Sample&& sample) {
  std::vector<Chunk> chunks(chunk_count(n));
  for (std::size_t k = 0; k < chunks.size(); ++k) chunks[k] = run_chunk(k, n, seed, sample);
  return reduce(chunks);
}

template <class Sample>
Chunk run_parallel(std::size_t n, std::uint64_t seed, Sample&& sample) {
  std::vector<Chunk> chunks(chunk_count(n));
  const auto m = static_cast<std::ptrdiff_t>(chunks.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t k = 0; k < m; ++k) chunks[k] = run_chunk(static_cast<std::size_t>(k), n, seed, sample);
  return reduce(chunks);
}

DeviationSample to_deviation(const Chunk& c, std::size_t n) {
  DeviationSample s;
  s.count = n;
  if (n == 0) return s;
  const double nn = static_cast<double>(n);
  s.mean = c.sum / nn;
  const double var = n > 1 ? std::max(c.sum_sq / nn - s.mean * s.mean, 0.0) * nn / (nn - 1.0) : 0.0;
  s.std_error = std::sqrt(var / nn);
  s.max = c.max;
  return s;
}

auto deviation_sampler(const BinaryObservable& sharp_p, const BinaryObservable& a) {
  const HermitianOp diff = sharp_p.effect() - a.effect();
  return [diff](std::mt19937_64& rng) { return std::abs(diff.expectation(random_unit_vector(rng))); };
}

auto rms_sampler(const BinaryObservable& sharp_p, const BinaryObservable& a) {
  return [sharp_p, a](std::mt19937_64& rng) { return rms_noise(sharp_p, a, random_ball_vector(rng)); };
}

}  // namespace

BlochVector random_unit_vector(std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  for (;;) {
    const BlochVector v{normal(rng), normal(rng), normal(rng)};
    const double n = v.norm();
    if (n > 1e-300) return v / n;
  }
}

BlochVector random_ball_vector(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const BlochVector dir = random_unit_vector(rng);
  return dir * std::cbrt(u(rng));
}

BlochVector fibonacci_sphere_point(std::size_t i, std::size_t n) {
  const double golden_angle = kPi * (3.0 - std::sqrt(5.0));
  const double z = 1.0 - (2.0 * static_cast<double>(i) + 1.0) / static_cast<double>(n);
  const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
  const double phi = golden_angle * static_cast<double>(i);
  return {r * std::cos(phi), r * std::sin(phi), z};
}

DeviationSample sample_deviation(const BinaryObservable& sharp_p, const BinaryObservable& a, std::size_t samples,
                                 std::uint64_t seed) {
  return to_deviation(run_parallel(samples, seed, deviation_sampler(sharp_p, a)), samples);
}

DeviationSample sample_deviation_serial(const BinaryObservable& sharp_p, const BinaryObservable& a,
                                        std::size_t samples, std::uint64_t seed) {
  return to_deviation(run_serial(samples, seed, deviation_sampler(sharp_p, a)), samples);
}

RmsSpread sample_rms_spread(const BinaryObservable& sharp_p, const BinaryObservable& a, std::size_t states,
                            std::uint64_t seed) {
  const Chunk c = run_parallel(states, seed, rms_sampler(sharp_p, a));
  return {c.min, c.max};
}

RmsSpread sample_rms_spread_serial(const BinaryObservable& sharp_p, const BinaryObservable& a, std::size_t states,
                                   std::uint64_t seed) {
  const Chunk c = run_serial(states, seed, rms_sampler(sharp_p, a));
  return {c.min, c.max};
}

double rms_noise_grid_sup(const BinaryObservable& sharp_p, const BinaryObservable& a, std::size_t points) {
  double best = 0.0;
  const auto n = static_cast<std::ptrdiff_t>(points);
#pragma omp parallel for reduction(max : best)
  for (std::ptrdiff_t i = 0; i < n; ++i)
    best = std::max(best, rms_noise(sharp_p, a, fibonacci_sphere_point(static_cast<std::size_t>(i), points)));
  return best;
}

double rms_noise_grid_sup_serial(const BinaryObservable& sharp_p, const BinaryObservable& a, std::size_t points) {
  double best = 0.0;
  for (std::size_t i = 0; i < points; ++i) best = std::max(best, rms_noise(sharp_p, a, fibonacci_sphere_point(i, points)));
  return best;
}

}  // namespace jmspin
