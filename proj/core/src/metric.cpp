#include "berglab/metric.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "berglab/moebius.hpp"

namespace berglab {

double artanh(double r) {
  if (r < 0.0 || r >= 1.0)
    throw std::domain_error("artanh: argument must lie in [0,1), got " +
                            std::to_string(r));
  // atanh(r) = 0.5 log((1+r)/(1-r)); log1p keeps small r exact.
  return 0.5 * std::log1p(2.0 * r / (1.0 - r));
}

double bergman_distance(const Point& z, const Point& w) {
  const double omp = one_minus_phi_sq(z, w);  // 1 - |phi_z(w)|^2, in (0,1]
  if (omp >= 1.0) return 0.0;
  const double r = std::sqrt(1.0 - omp);
  // artanh(r) with r = sqrt(1-omp): written via omp to avoid the 1-r
  // cancellation, artanh(r) = 0.5 log((1+r)^2/omp).
  return 0.5 * std::log((1.0 + r) * (1.0 + r) / omp);
}

Point geodesic_point(const Point& z, const Point& w, double t) {
  if (t < 0.0 || t > 1.0)
    throw std::invalid_argument(
        "geodesic_point: parameter t must lie in [0,1], got " +
        std::to_string(t));
  MoebiusMap phi(z);
  const Point u = phi.apply(w);  // geodesic through 0 is the ray to u
  const double r = u.norm();
  if (r == 0.0 || t == 0.0) return z;
  if (t == 1.0) return w;
  const double rt = std::tanh(t * artanh(r));
  return phi.apply(u * Complex(rt / r, 0.0));
}

}  // namespace berglab
