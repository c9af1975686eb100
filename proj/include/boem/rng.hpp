#pragma once

#include <cstdint>
#include <random>

namespace boem {

// Deterministic variate source. Every transform is implemented here instead
// of std::*_distribution, whose algorithms are implementation-defined; with
// a fixed seed the stream of draws is bit-identical on any platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t raw() { return gen_(); }

  // [0, 1), 53-bit resolution.
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  // (0, 1].
  double uniform_pos() { return 1.0 - uniform(); }

  double normal();
  double normal(double mean, double sd) { return mean + sd * normal(); }

  bool bernoulli(double p) { return uniform() < p; }

  // Knuth search for small means, Hormann PTRS rejection for large.
  long poisson(double mu);

  // Unit-scale gamma, Marsaglia-Tsang.
  double gamma(double shape);

  double beta(double a, double b);

 private:
  std::mt19937_64 gen_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace boem
