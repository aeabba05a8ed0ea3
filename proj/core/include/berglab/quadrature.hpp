#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "berglab/measure.hpp"
#include "berglab/point.hpp"

namespace berglab {

enum class RuleKind { tensor, monte_carlo };

/// Integrand signature: value at a node, given also 1-|z|^2 in a cancellation-
/// free form.  Radial nodes cluster hard against the sphere (1-r down to
/// ~1e-9), where recomputing 1-|z|^2 from the coordinates loses half the
/// digits; integrands with (1-|z|^2)^t factors must use the supplied value.
using RealIntegrand = std::function<double(const Point&, double)>;
using ComplexIntegrand = std::function<Complex(const Point&, double)>;

/// Nodes and weights integrating against the normalized Lebesgue measure v
/// of B_n (v(B_n) = 1).  Weighted measures enter through the integrand via
/// WeightedMeasure::density.
class QuadratureRule {
 public:
  int dim() const { return n_; }
  RuleKind kind() const { return kind_; }
  std::size_t size() const { return nodes_.size(); }
  const Point& node(std::size_t i) const { return nodes_[i]; }
  double weight(std::size_t i) const { return weights_[i]; }
  /// 1 - |node|^2, computed without cancellation.
  double one_minus_sq(std::size_t i) const { return omsq_[i]; }

  /// Largest total monomial degree whose moments the rule reproduces to
  /// 1e-10 (diagonal and near-diagonal monomials; see run_moment_selftest).
  int exactness_degree() const { return exactness_degree_; }
  double worst_moment_error() const { return worst_moment_error_; }
  std::uint64_t seed() const { return seed_; }

  /// Angular node count per phase axis for tensor rules (0 for Monte Carlo).
  /// Harmonic extraction from the node lattice aliases at half this count,
  /// so coefficient series against the nodes must truncate there.
  int angular_resolution() const { return angular_; }

 private:
  friend QuadratureRule build_tensor_rule(int, int, int);
  friend QuadratureRule build_mc_rule(int, int, std::uint64_t);
  int n_ = 1;
  RuleKind kind_ = RuleKind::tensor;
  std::vector<Point> nodes_;
  std::vector<double> weights_;
  std::vector<double> omsq_;
  int exactness_degree_ = 0;
  double worst_moment_error_ = 0.0;
  std::uint64_t seed_ = 0;
  int angular_ = 0;
};

/// Gauss-Legendre nodes and weights on [0,1].
std::pair<std::vector<double>, std::vector<double>> gauss_legendre_01(int m);

/// Tensor rule: Gauss-Legendre in radius (mapped r = 1-(1-x)^2, which both
/// clusters nodes toward r=1 and exactly absorbs a (1-r)^{-1/2} endpoint
/// factor), uniform angles for n=1, and Gauss-Legendre x uniform^2 Hopf
/// coordinates on the sphere for n=2.  n=3 has no tensor rule; use
/// build_mc_rule.  Weights sum to 1 and the moment self-test runs at build.
QuadratureRule build_tensor_rule(int n, int radial_count, int angular_count);

/// Seeded Monte Carlo rule: `count` points uniform in B_n, weight 1/count.
/// Bit-reproducible for fixed seed.
QuadratureRule build_mc_rule(int n, int count, std::uint64_t seed);

/// Moment self-test: checks monomial moments z^a conj(z)^b (all diagonal
/// pairs a=b, plus the a-b = e_1 off-diagonal family, which the Beta-integral
/// oracle gives as 0) degree by degree; returns {exactness_degree,
/// worst_error_within_that_degree}.
std::pair<int, double> run_moment_selftest(const QuadratureRule& rule,
                                           int max_degree);

double integrate(const QuadratureRule& rule, const RealIntegrand& f);
Complex integrate(const QuadratureRule& rule, const ComplexIntegrand& f);

/// (integral |f|^p dmu)^{1/p} by quadrature.  Requires p > 0 and
/// mu.dim() == rule.dim().
double lp_norm(const ComplexIntegrand& f, double p, const WeightedMeasure& mu,
               const QuadratureRule& rule);

}  // namespace berglab
