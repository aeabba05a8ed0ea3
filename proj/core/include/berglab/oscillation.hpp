#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "berglab/lattice.hpp"
#include "berglab/point.hpp"
#include "berglab/quadrature.hpp"
#include "berglab/symbol.hpp"

namespace berglab {

/// Pointwise evaluator; the oscillation machinery accepts these alongside
/// symbols so that derived objects (averaging functions, decomposition
/// parts) are first-class inputs.
using PointFn = std::function<Complex(const Point&)>;

/// Mean-oscillation data of f at one point, over the Bergman-metric ball
/// D(z,r) with the unnormalized weight dv_sigma = (1-|w|^2)^sigma dv.
struct OscillationReport {
  Point z;
  double r = 0.0;
  double sigma = 0.0;
  Complex hat_f_r{0.0, 0.0};   // mean of f over D(z,r) in dv_sigma
  double mo_p_r = 0.0;         // [ avg |f - lambda_z|^p ]^(1/p)
  double omega_r = 0.0;        // sampled sup of |f(z)-f(w)|, a lower bound
  Complex lambda_z{0.0, 0.0};  // the comparison constant actually used
};

/// Norm estimates for the oscillation spaces at parameters (p, gamma, r):
/// bmo from MO_{p,r}, bo from omega_r, ba from the averaged |f|^p, each
/// weighted by (1-|z|^2)^gamma and maximized over the lattice centers plus
/// boundary shells.  decay_profile holds the per-shell weighted MO sups on
/// |z| in {0.5, 0.7, 0.9, 0.97, 0.99}; tending to zero is the VMO signature.
struct SpaceEstimate {
  double gamma = 0.0;
  double p = 2.0;
  double r = 1.0;
  double bmo_norm = 0.0;
  double bo_norm = 0.0;
  double ba_norm = 0.0;
  std::vector<std::pair<double, double>> decay_profile;
};

/// Averaging function f^hat_r(z): the dv_sigma-mean of f over D(z,r),
/// computed by pulling the quadrature rule through phi_z onto the Euclidean
/// ball of radius tanh(r) (the Euclidean image of D(0,r)), with the analytic
/// real Jacobian.  Requires r > 0, sigma > -1.
Complex average_hat(const PointFn& f, double r, double sigma, const Point& z,
                    const QuadratureRule& rule);
Complex average_hat(const Symbol& f, double r, double sigma, const Point& z,
                    const QuadratureRule& rule);

/// MO_{p,r}(f)(z) and companions.  The comparison constant defaults to
/// f^hat_r(z); callers following a different convention (f(z), or the
/// kernel-weighted means of the Hankel theory) pass theirs in `lambda`, and
/// the report records whichever was used.  omega_r is sampled over 64
/// directions x 8 radii inside D(z,r).  Requires p >= 1, r > 0, sigma > -1.
OscillationReport mean_oscillation(const PointFn& f, double p, double r,
                                   double sigma, const Point& z,
                                   const QuadratureRule& rule,
                                   std::optional<Complex> lambda = {});
OscillationReport mean_oscillation(const Symbol& f, double p, double r,
                                   double sigma, const Point& z,
                                   const QuadratureRule& rule,
                                   std::optional<Complex> lambda = {});

/// The weighted global oscillation integral
///   (1-|z|^2)^(c+gamma p) integral |f(w) - center|^p
///       |1-<z,w>|^-(n+1+c+sigma) dv_sigma(w),
/// whose boundedness over z characterizes the weighted BMO spaces (with
/// center = f^hat_r(z)) and, for holomorphic f, the Bloch-type spaces (with
/// center = f(z)).  Requires sigma > max(-1, -1+gamma*p) and
/// c > max(0, -2*gamma*p).
double global_oscillation_integral(const PointFn& f, double p, double gamma,
                                   double c, double sigma, const Point& z,
                                   Complex center_value,
                                   const QuadratureRule& rule);
double global_oscillation_integral(const Symbol& f, double p, double gamma,
                                   double c, double sigma, const Point& z,
                                   Complex center_value,
                                   const QuadratureRule& rule);

/// BMO/BO/BA estimator: suprema are maxima over the lattice centers plus the
/// shell samples (the same five shells the decay profile reports, so the sup
/// set always reaches |z| = 0.99 even when the lattice stops earlier).  All
/// ball averages run at sigma = 0; MO is sigma-insensitive up to constants
/// and the robustness factor is pinned in the test suite rather than here.
/// shell_resolution is forwarded to sphere_samples; 0 picks a per-dimension
/// default sized for sweep affordability (64 / 5 / 2).
SpaceEstimate space_norm_estimate(const PointFn& f, double p, double gamma,
                                  double r, const Lattice& lat,
                                  const QuadratureRule& rule,
                                  int shell_resolution = 0);
SpaceEstimate space_norm_estimate(const Symbol& f, double p, double gamma,
                                  double r, const Lattice& lat,
                                  const QuadratureRule& rule,
                                  int shell_resolution = 0);

/// f = averaged + oscillatory with averaged = f^hat_r: the bounded-
/// oscillation part and the averagable remainder, as on-demand evaluators
/// (the rule is copied in, so the decomposition outlives its arguments).
/// Additivity is definitional: oscillatory(z) is computed as
/// f(z) - averaged(z).
struct BmoDecomposition {
  PointFn averaged;
  PointFn oscillatory;
};
BmoDecomposition decompose_bmo(const Symbol& f, double r, double sigma,
                               const QuadratureRule& rule);

}  // namespace berglab
