#include "berglab/schur.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "berglab/metric.hpp"

namespace berglab {

namespace {

// |1 - <z,w>| with the node pushed 1e-13 radially inward if it sits on the
// singular ray to machine precision, so rules stay reusable across z.  For
// interior z the denominator is bounded below by 1-|z| and the guard never
// fires; it only matters for deliberately extreme probes.
double guarded_denominator(const Point& z, const Point& w) {
  double den = std::abs(Complex(1.0, 0.0) - inner(z, w));
  if (den < 1e-13)
    den = std::abs(Complex(1.0, 0.0) -
                   inner(z, w * Complex(1.0 - 1e-13, 0.0)));
  return den;
}

}  // namespace

BoundednessVerdict schur_conditions(int n, double p, double q, double alpha,
                                    double beta, double b, double c) {
  require_dim(n, "schur_conditions");
  if (!(1.0 < p && p <= q))
    throw std::invalid_argument(
        "schur_conditions: requires 1 < p <= q < inf, got p=" +
        std::to_string(p) + " q=" + std::to_string(q));
  if (alpha <= -1.0 || beta <= -1.0)
    throw std::invalid_argument(
        "schur_conditions: requires alpha, beta > -1");

  BoundednessVerdict verdict;
  verdict.lambda = (n + 1 + beta) / q - (n + 1 + alpha) / p;
  const bool weight_ok = alpha + 1.0 < p * (b + 1.0);
  const bool kernel_ok = c <= n + 1 + b + verdict.lambda;
  verdict.conditions_checked.emplace_back("alpha+1 < p(b+1)", weight_ok);
  verdict.conditions_checked.emplace_back("c <= n+1+b+lambda", kernel_ok);
  verdict.overall = weight_ok && kernel_ok;
  return verdict;
}

double forelli_rudin_probe(int n, double t, double s, double d, const Point& z,
                           const QuadratureRule& rule) {
  if (!(t > -1.0))
    throw std::invalid_argument("forelli_rudin_probe: requires t > -1, got " +
                                std::to_string(t));
  if (!(s > 0.0))
    throw std::invalid_argument("forelli_rudin_probe: requires s > 0, got " +
                                std::to_string(s));
  if (d < 0.0)
    throw std::invalid_argument("forelli_rudin_probe: requires d >= 0, got " +
                                std::to_string(d));
  require_interior(z, "forelli_rudin_probe");
  if (rule.dim() != n || z.dim() != n)
    throw std::invalid_argument("forelli_rudin_probe: dimension mismatch");

  const double exponent = n + 1 + t + s;
  const RealIntegrand integrand = [&](const Point& w, double omsq) {
    double term = std::pow(omsq, t) / std::pow(guarded_denominator(z, w),
                                               exponent);
    if (d > 0.0) term *= std::pow(bergman_distance(z, w), d);
    return term;
  };
  const double value = integrate(rule, integrand);
  return std::pow(1.0 - z.norm_sq(), s) * value;
}

double separated_sum_probe(const Lattice& lat, double t, double s,
                           const Point& z) {
  const int n = lat.dim();
  if (!(n < t && t < s))
    throw std::invalid_argument(
        "separated_sum_probe: requires n < t < s, got t=" + std::to_string(t) +
        " s=" + std::to_string(s));
  require_interior(z, "separated_sum_probe");
  double sum = 0.0;
  for (const Point& a : lat.centers())
    sum += std::pow(1.0 - a.norm_sq(), t) /
           std::pow(guarded_denominator(z, a), s);
  return std::pow(1.0 - z.norm_sq(), s - t) * sum;
}

Complex apply_integral_operator(OperatorKind kind, double b, double c,
                                const ComplexIntegrand& f, const Point& z,
                                const QuadratureRule& rule) {
  require_interior(z, "apply_integral_operator");
  if (rule.dim() != z.dim())
    throw std::invalid_argument("apply_integral_operator: dimension mismatch");
  const ComplexIntegrand integrand = [&](const Point& w, double omsq) {
    Complex term = f(w, omsq) * std::pow(omsq, b) /
                   std::pow(guarded_denominator(z, w), c);
    if (kind == OperatorKind::T) term *= bergman_distance(z, w);
    return term;
  };
  return integrate(rule, integrand);
}

}  // namespace berglab
