#include "berglab/moments.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "berglab/special.hpp"

namespace berglab {

Complex MultiIndex::eval(const Point& z) const {
  Complex out = 1.0;
  for (int i = 0; i < z.dim(); ++i)
    for (int k = 0; k < m[i]; ++k) out *= z[i];
  return out;
}

std::vector<MultiIndex> multi_indices_of_degree(int n, int d) {
  std::vector<MultiIndex> out;
  if (n == 1) {
    MultiIndex mi;
    mi[0] = d;
    out.push_back(mi);
    return out;
  }
  for (int first = d; first >= 0; --first) {
    for (const MultiIndex& rest : multi_indices_of_degree(n - 1, d - first)) {
      MultiIndex mi;
      mi[0] = first;
      for (int i = 1; i < n; ++i) mi[i] = rest[i - 1];
      out.push_back(mi);
    }
  }
  return out;
}

std::vector<MultiIndex> multi_indices_up_to(int n, int d) {
  std::vector<MultiIndex> out;
  for (int deg = 0; deg <= d; ++deg)
    for (const MultiIndex& mi : multi_indices_of_degree(n, deg))
      out.push_back(mi);
  return out;
}

double log_multi_factorial(const MultiIndex& m) {
  return log_factorial(m[0]) + log_factorial(m[1]) + log_factorial(m[2]);
}

double radial_moment(int n, int d, double tau) {
  if (tau <= -1.0)
    throw std::invalid_argument("radial_moment: requires tau > -1, got " +
                                std::to_string(tau));
  return n * beta_fn(n + d, tau + 1.0);
}

double sphere_moment(int n, const MultiIndex& m) {
  return std::exp(log_factorial(n - 1) + log_multi_factorial(m) -
                  log_factorial(n - 1 + m.total()));
}

double monomial_sq_norm(int n, const MultiIndex& m, double alpha) {
  if (alpha <= -1.0)
    throw std::invalid_argument("monomial_sq_norm: requires alpha > -1, got " +
                                std::to_string(alpha));
  return std::exp(log_multi_factorial(m) + lgamma_d(n + 1 + alpha) -
                  lgamma_d(n + 1 + m.total() + alpha));
}

}  // namespace berglab
