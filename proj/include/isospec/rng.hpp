#pragma once

#include <cmath>
#include <cstdint>

#include <Eigen/Dense>

namespace isospec {

// Counter-based generator: state is a pure function of (seed, index), so
// parallel consumers get identical streams regardless of thread count.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  SplitMix64(std::uint64_t seed, std::uint64_t stream)
      : state(seed ^ (0x9e3779b97f4a7c15ULL * (stream + 1))) {
    next();
    next();
  }

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0,1)
  double uniform() { return double(next() >> 11) * 0x1.0p-53; }

  double normal() {
    // Box-Muller; one draw per call keeps the stream layout simple.
    double u1 = uniform();
    double u2 = uniform();
    if (u1 <= 0) u1 = 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
  }

  Eigen::VectorXd unit_vector(int n) {
    Eigen::VectorXd v(n);
    double norm2 = 0;
    do {
      for (int i = 0; i < n; ++i) v[i] = normal();
      norm2 = v.squaredNorm();
    } while (norm2 < 1e-300);
    return v / std::sqrt(norm2);
  }

  // uniform in the n-ball of radius r
  Eigen::VectorXd ball_point(int n, double r) {
    Eigen::VectorXd v = unit_vector(n);
    double u = uniform();
    return v * (r * std::pow(u, 1.0 / n));
  }
};

}  // namespace isospec
