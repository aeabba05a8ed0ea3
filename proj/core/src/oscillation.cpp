#include "berglab/oscillation.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "berglab/derivatives.hpp"
#include "berglab/moebius.hpp"
#include "berglab/rng.hpp"

namespace berglab {

namespace {

void check_ball_params(double r, double sigma, const Point& z,
                       const QuadratureRule& rule, const char* what) {
  if (!(r > 0.0))
    throw std::invalid_argument(std::string(what) + ": requires r > 0");
  if (!(sigma > -1.0))
    throw std::invalid_argument(std::string(what) + ": requires sigma > -1");
  require_interior(z, what);
  if (rule.dim() != z.dim())
    throw std::invalid_argument(std::string(what) +
                                ": rule dimension mismatch");
}

// Integral over D(z,r) of g(w) dv_sigma(w), through the substitution
// w = phi_z(u): the domain becomes the Euclidean ball of radius tanh r,
// the volume element picks up the analytic real Jacobian of phi_z, and the
// weight (1-|w|^2)^sigma is evaluated through the cancellation-free
// two-point identity.  The rule integrates over the unit ball, so nodes are
// scaled by tanh r and the result by (tanh r)^(2n).
double ball_integral_real(const std::function<double(const Point&)>& g,
                          double r, double sigma, const Point& z,
                          const QuadratureRule& rule) {
  const double t = std::tanh(r);
  const MoebiusMap phi(z);
  const RealIntegrand integrand = [&](const Point& x, double) {
    const Point u = x * t;
    const double weight = (sigma == 0.0)
                              ? phi.real_jacobian(u)
                              : phi.real_jacobian(u) *
                                    std::pow(one_minus_phi_sq(z, u), sigma);
    return g(phi.apply(u)) * weight;
  };
  return std::pow(t, 2.0 * z.dim()) * integrate(rule, integrand);
}

Complex ball_integral_complex(const PointFn& g, double r, double sigma,
                              const Point& z, const QuadratureRule& rule) {
  const double t = std::tanh(r);
  const MoebiusMap phi(z);
  const ComplexIntegrand integrand = [&](const Point& x, double) {
    const Point u = x * t;
    const double weight = (sigma == 0.0)
                              ? phi.real_jacobian(u)
                              : phi.real_jacobian(u) *
                                    std::pow(one_minus_phi_sq(z, u), sigma);
    return g(phi.apply(u)) * weight;
  };
  return std::pow(t, 2.0 * z.dim()) * integrate(rule, integrand);
}

// Sample points for the omega_r sup: 64 directions x 8 Euclidean radii
// filling the ball of radius tanh r; pushed through phi_z by the caller.
const std::vector<Point>& omega_directions(int n) {
  static const std::vector<Point> dirs1 = sphere_samples(1, 64);
  static const std::vector<Point> dirs2 = [] {
    std::mt19937_64 gen(0x03e6au);
    std::vector<Point> d;
    d.reserve(64);
    for (int i = 0; i < 64; ++i) d.push_back(random_sphere_point(2, gen));
    return d;
  }();
  static const std::vector<Point> dirs3 = [] {
    std::mt19937_64 gen(0x03e6bu);
    std::vector<Point> d;
    d.reserve(64);
    for (int i = 0; i < 64; ++i) d.push_back(random_sphere_point(3, gen));
    return d;
  }();
  return (n == 1) ? dirs1 : (n == 2) ? dirs2 : dirs3;
}

double sampled_omega(const PointFn& f, double r, const Point& z) {
  const double t = std::tanh(r);
  const MoebiusMap phi(z);
  const Complex fz = f(z);
  double sup = 0.0;
  for (const Point& d : omega_directions(z.dim())) {
    for (int j = 1; j <= 8; ++j) {
      const Point w = phi.apply(d * (t * j / 8.0));
      sup = std::max(sup, std::abs(fz - f(w)));
    }
  }
  return sup;
}

double guarded_denominator(const Point& z, const Point& w) {
  double den = std::abs(Complex(1.0, 0.0) - inner(z, w));
  if (den < 1e-13)
    den = std::abs(Complex(1.0, 0.0) -
                   inner(z, w * Complex(1.0 - 1e-13, 0.0)));
  return den;
}

PointFn wrap(const Symbol& f) {
  return [f](const Point& z) { return f.eval(z); };
}

}  // namespace

Complex average_hat(const PointFn& f, double r, double sigma, const Point& z,
                    const QuadratureRule& rule) {
  check_ball_params(r, sigma, z, rule, "average_hat");
  const double volume =
      ball_integral_real([](const Point&) { return 1.0; }, r, sigma, z, rule);
  return ball_integral_complex(f, r, sigma, z, rule) / volume;
}

Complex average_hat(const Symbol& f, double r, double sigma, const Point& z,
                    const QuadratureRule& rule) {
  if (f.dim() != z.dim())
    throw std::invalid_argument("average_hat: symbol dimension mismatch");
  return average_hat(wrap(f), r, sigma, z, rule);
}

OscillationReport mean_oscillation(const PointFn& f, double p, double r,
                                   double sigma, const Point& z,
                                   const QuadratureRule& rule,
                                   std::optional<Complex> lambda) {
  if (!(p >= 1.0))
    throw std::invalid_argument("mean_oscillation: requires p >= 1");
  check_ball_params(r, sigma, z, rule, "mean_oscillation");

  OscillationReport report;
  report.z = z;
  report.r = r;
  report.sigma = sigma;
  const double volume =
      ball_integral_real([](const Point&) { return 1.0; }, r, sigma, z, rule);
  report.hat_f_r = ball_integral_complex(f, r, sigma, z, rule) / volume;
  report.lambda_z = lambda.value_or(report.hat_f_r);
  const Complex center = report.lambda_z;
  const double mo_p = ball_integral_real(
      [&](const Point& w) { return std::pow(std::abs(f(w) - center), p); },
      r, sigma, z, rule);
  report.mo_p_r = std::pow(mo_p / volume, 1.0 / p);
  report.omega_r = sampled_omega(f, r, z);
  return report;
}

OscillationReport mean_oscillation(const Symbol& f, double p, double r,
                                   double sigma, const Point& z,
                                   const QuadratureRule& rule,
                                   std::optional<Complex> lambda) {
  if (f.dim() != z.dim())
    throw std::invalid_argument("mean_oscillation: symbol dimension mismatch");
  return mean_oscillation(wrap(f), p, r, sigma, z, rule, lambda);
}

double global_oscillation_integral(const PointFn& f, double p, double gamma,
                                   double c, double sigma, const Point& z,
                                   Complex center_value,
                                   const QuadratureRule& rule) {
  if (!(p >= 1.0))
    throw std::invalid_argument(
        "global_oscillation_integral: requires p >= 1");
  if (!(sigma > std::max(-1.0, -1.0 + gamma * p)))
    throw std::invalid_argument(
        "global_oscillation_integral: requires sigma > max(-1, -1+gamma*p)");
  if (!(c > std::max(0.0, -2.0 * gamma * p)))
    throw std::invalid_argument(
        "global_oscillation_integral: requires c > max(0, -2*gamma*p)");
  require_interior(z, "global_oscillation_integral");
  if (rule.dim() != z.dim())
    throw std::invalid_argument(
        "global_oscillation_integral: rule dimension mismatch");

  const double expo = z.dim() + 1 + c + sigma;
  const RealIntegrand integrand = [&](const Point& w, double omsq) {
    return std::pow(std::abs(f(w) - center_value), p) *
           std::pow(omsq, sigma) / std::pow(guarded_denominator(z, w), expo);
  };
  return std::pow(1.0 - z.norm_sq(), c + gamma * p) *
         integrate(rule, integrand);
}

double global_oscillation_integral(const Symbol& f, double p, double gamma,
                                   double c, double sigma, const Point& z,
                                   Complex center_value,
                                   const QuadratureRule& rule) {
  if (f.dim() != z.dim())
    throw std::invalid_argument(
        "global_oscillation_integral: symbol dimension mismatch");
  return global_oscillation_integral(wrap(f), p, gamma, c, sigma, z,
                                     center_value, rule);
}

SpaceEstimate space_norm_estimate(const PointFn& f, double p, double gamma,
                                  double r, const Lattice& lat,
                                  const QuadratureRule& rule,
                                  int shell_resolution) {
  if (!(p >= 1.0))
    throw std::invalid_argument("space_norm_estimate: requires p >= 1");
  if (!(r > 0.0))
    throw std::invalid_argument("space_norm_estimate: requires r > 0");
  if (lat.dim() != rule.dim())
    throw std::invalid_argument(
        "space_norm_estimate: rule dimension mismatch");
  const int n = lat.dim();
  if (shell_resolution == 0)
    shell_resolution = (n == 1) ? 64 : (n == 2) ? 5 : 2;

  SpaceEstimate est;
  est.gamma = gamma;
  est.p = p;
  est.r = r;
  constexpr double kSigma = 0.0;

  // Per-point functionals sharing the ball volume.
  const auto visit = [&](const Point& z, double& mo, double& omega,
                         double& ba) {
    const double volume = ball_integral_real(
        [](const Point&) { return 1.0; }, r, kSigma, z, rule);
    const Complex hat =
        ball_integral_complex(f, r, kSigma, z, rule) / volume;
    mo = std::pow(
        ball_integral_real(
            [&](const Point& w) { return std::pow(std::abs(f(w) - hat), p); },
            r, kSigma, z, rule) /
            volume,
        1.0 / p);
    omega = sampled_omega(f, r, z);
    ba = std::pow(
        ball_integral_real(
            [&](const Point& w) { return std::pow(std::abs(f(w)), p); }, r,
            kSigma, z, rule) /
            volume,
        1.0 / p);
  };

  const auto fold = [&](const Point& z, double& shell_mo_sup) {
    double mo = 0.0, omega = 0.0, ba = 0.0;
    visit(z, mo, omega, ba);
    const double weight = std::pow(1.0 - z.norm_sq(), gamma);
    est.bmo_norm = std::max(est.bmo_norm, weight * mo);
    est.bo_norm = std::max(est.bo_norm, weight * omega);
    est.ba_norm = std::max(est.ba_norm, weight * ba);
    shell_mo_sup = std::max(shell_mo_sup, weight * mo);
  };

  double ignored = 0.0;
  for (const Point& c : lat.centers()) fold(c, ignored);

  const std::vector<Point> dirs = sphere_samples(n, shell_resolution);
  for (const double radius : {0.5, 0.7, 0.9, 0.97, 0.99}) {
    double shell_sup = 0.0;
    for (const Point& d : dirs) fold(d * radius, shell_sup);
    est.decay_profile.emplace_back(radius, shell_sup);
  }
  return est;
}

SpaceEstimate space_norm_estimate(const Symbol& f, double p, double gamma,
                                  double r, const Lattice& lat,
                                  const QuadratureRule& rule,
                                  int shell_resolution) {
  if (f.dim() != lat.dim())
    throw std::invalid_argument(
        "space_norm_estimate: symbol dimension mismatch");
  return space_norm_estimate(wrap(f), p, gamma, r, lat, rule,
                             shell_resolution);
}

BmoDecomposition decompose_bmo(const Symbol& f, double r, double sigma,
                               const QuadratureRule& rule) {
  if (!(r > 0.0))
    throw std::invalid_argument("decompose_bmo: requires r > 0");
  if (!(sigma > -1.0))
    throw std::invalid_argument("decompose_bmo: requires sigma > -1");
  if (f.dim() != rule.dim())
    throw std::invalid_argument("decompose_bmo: rule dimension mismatch");

  BmoDecomposition parts;
  parts.averaged = [f, r, sigma, rule](const Point& z) {
    return average_hat(f, r, sigma, z, rule);
  };
  parts.oscillatory = [f, r, sigma, rule](const Point& z) {
    return f.eval(z) - average_hat(f, r, sigma, z, rule);
  };
  return parts;
}

}  // namespace berglab
