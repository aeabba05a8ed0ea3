#pragma once

#include <array>
#include <vector>

#include "berglab/point.hpp"

namespace berglab {

/// Multi-index in up to three variables; entries beyond the active dimension
/// stay zero.  Used for monomials z^m = z_1^{m_1} z_2^{m_2} z_3^{m_3}.
struct MultiIndex {
  std::array<int, 3> m{0, 0, 0};

  int operator[](int i) const { return m[i]; }
  int& operator[](int i) { return m[i]; }
  int total() const { return m[0] + m[1] + m[2]; }
  bool operator==(const MultiIndex&) const = default;

  /// z^m; requires all entries >= 0.
  Complex eval(const Point& z) const;
};

/// All multi-indices in n variables with total degree exactly d, in
/// lexicographic order.
std::vector<MultiIndex> multi_indices_of_degree(int n, int d);

/// All multi-indices in n variables with total degree <= d.
std::vector<MultiIndex> multi_indices_up_to(int n, int d);

/// log(m!) = sum_i log(m_i!).
double log_multi_factorial(const MultiIndex& m);

/// Radial moment against the normalized Lebesgue measure of B_n:
///   integral_0^1 2n r^{2n-1} r^{2d} (1-r^2)^tau dr = n * B(n+d, tau+1).
/// Requires tau > -1.
double radial_moment(int n, int d, double tau);

/// Sphere moment against normalized surface measure:
///   integral_{S^{2n-1}} |zeta^m|^2 dsigma = (n-1)! m! / (n-1+|m|)!.
double sphere_moment(int n, const MultiIndex& m);

/// Squared monomial norm in the weighted Bergman space:
///   integral_{B_n} |z^m|^2 dv_alpha = m! Gamma(n+1+alpha) / Gamma(n+1+|m|+alpha)
/// for the normalized measure dv_alpha.  Requires alpha > -1.
double monomial_sq_norm(int n, const MultiIndex& m, double alpha);

}  // namespace berglab
