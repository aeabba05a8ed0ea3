#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "berglab/point.hpp"

namespace berglab {

/// Deterministic per-task seed derived from a run seed and a task index.
/// splitmix64 finalizer keeps nearby indices statistically independent.
inline std::uint64_t subseed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t x = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

/// Uniform point on the unit sphere of C^n (real dimension 2n-1).
inline Point random_sphere_point(int n, std::mt19937_64& gen) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Point z = Point::zero(n);
  double nrm2 = 0.0;
  do {
    nrm2 = 0.0;
    for (int i = 0; i < n; ++i) {
      z[i] = Complex(gauss(gen), gauss(gen));
      nrm2 += std::norm(z[i]);
    }
  } while (nrm2 < 1e-200);
  double inv = 1.0 / std::sqrt(nrm2);
  for (int i = 0; i < n; ++i) z[i] *= inv;
  return z;
}

/// Uniform point in the unit ball of C^n w.r.t. Lebesgue volume:
/// radius ~ U^{1/(2n)}, direction uniform on the sphere.
inline Point random_ball_point(int n, std::mt19937_64& gen,
                               double max_modulus = 1.0) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  double r = max_modulus * std::pow(unif(gen), 1.0 / (2.0 * n));
  Point z = random_sphere_point(n, gen);
  for (int i = 0; i < n; ++i) z[i] *= r;
  return z;
}

}  // namespace berglab
