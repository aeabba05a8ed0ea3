#pragma once

#include <string>
#include <utility>
#include <vector>

#include "berglab/lattice.hpp"
#include "berglab/point.hpp"
#include "berglab/quadrature.hpp"

namespace berglab {

/// Outcome of the two-condition boundedness test for the integral operators
/// below, acting L^p_alpha -> L^q_beta.
struct BoundednessVerdict {
  std::vector<std::pair<std::string, bool>> conditions_checked;
  bool overall = false;
  /// lambda = (n+1+beta)/q - (n+1+alpha)/p.
  double lambda = 0.0;
};

/// Evaluates "alpha+1 < p(b+1)" and "c <= n+1+b+lambda" for
/// S_{b,c} : L^p_alpha -> L^q_beta.  Requires 1 < p <= q < inf and
/// alpha, beta > -1.
BoundednessVerdict schur_conditions(int n, double p, double q, double alpha,
                                    double beta, double b, double c);

/// (1-|z|^2)^s * integral of (1-|w|^2)^t beta(z,w)^d / |1-<z,w>|^{n+1+t+s};
/// bounded in z for t > -1, s > 0, d >= 0.  d = 0 drops the metric factor.
double forelli_rudin_probe(int n, double t, double s, double d, const Point& z,
                           const QuadratureRule& rule);

/// (1-|z|^2)^{s-t} * sum_k (1-|a_k|^2)^t / |1-<z,a_k>|^s over the lattice
/// centers; bounded in z for n < t < s when the centers are separated.
double separated_sum_probe(const Lattice& lat, double t, double s,
                           const Point& z);

enum class OperatorKind { S, T };

/// S_{b,c} f(z) = integral f(w) (1-|w|^2)^b / |1-<z,w>|^c dv(w), or the
/// T variant with an extra beta(z,w) factor in the integrand.  Real symbols
/// give real values; the complex return just passes f's phase through.
Complex apply_integral_operator(OperatorKind kind, double b, double c,
                                const ComplexIntegrand& f, const Point& z,
                                const QuadratureRule& rule);

}  // namespace berglab
