#include "berglab/kernels.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "berglab/measure.hpp"
#include "berglab/special.hpp"

namespace berglab {

namespace {

void check_kernel_params(const KernelParams& kp, const Point& z,
                         const char* what) {
  require_dim(kp.n, what);
  if (!(kp.alpha > -1.0))
    throw std::invalid_argument(std::string(what) + ": requires alpha > -1");
  require_interior(z, what);
  if (z.dim() != kp.n)
    throw std::invalid_argument(std::string(what) +
                                ": point dimension mismatch");
}

// 1 - <z,w> with the node pushed 1e-13 radially inward if it sits on the
// singular ray to machine precision (same policy as the integral operators).
Complex guarded_base(const Point& z, const Point& w) {
  Complex q = Complex(1.0, 0.0) - inner(z, w);
  if (std::abs(q) < 1e-13)
    q = Complex(1.0, 0.0) - inner(z, w * Complex(1.0 - 1e-13, 0.0));
  return q;
}

// Every term must keep (1-|w|^2)^{weight + s} integrable.
void check_integrable(const Symbol& f, double weight, const char* what) {
  for (const SymbolTerm& t : f.terms()) {
    if (t.coef == Complex(0.0, 0.0)) continue;
    if (!(weight + t.radial_power > -1.0))
      throw std::invalid_argument(
          std::string(what) +
          ": symbol not integrable (needs weight + radial_power > -1)");
  }
}

}  // namespace

Complex kernel_eval(const KernelParams& kp, const Point& z, const Point& w) {
  check_kernel_params(kp, z, "kernel_eval");
  require_interior(w, "kernel_eval");
  require_same_dim(z, w, "kernel_eval");
  // Principal branch: Re(1 - <w,z>) >= 1 - |w||z| > 0 on the ball.
  const Complex base = Complex(1.0, 0.0) - inner(w, z);
  return std::pow(base, -(kp.n + 1 + kp.alpha));
}

Complex normalized_kernel_eval(const KernelParams& kp, const Point& z,
                               const Point& w) {
  const Complex kzw = kernel_eval(kp, z, w);
  // K_z(z) = (1-|z|^2)^-(n+1+alpha) is positive.
  const double kzz = std::pow(1.0 - z.norm_sq(), -(kp.n + 1 + kp.alpha));
  return kzw / std::sqrt(kzz);
}

bool project_has_closed_form(const KernelParams& kp, const Symbol& f) {
  for (const SymbolTerm& t : f.terms()) {
    if (t.coef == Complex(0.0, 0.0)) continue;
    if (t.log_radial || t.beta_factor || t.log_pole || t.log_pole_conj)
      return false;
    if (!(kp.alpha + t.radial_power > -1.0)) return false;
  }
  return true;
}

Symbol project_polynomial(const KernelParams& kp, const Symbol& f) {
  require_dim(kp.n, "project_polynomial");
  if (!(kp.alpha > -1.0))
    throw std::invalid_argument("project_polynomial: requires alpha > -1");
  if (f.dim() != kp.n)
    throw std::invalid_argument("project_polynomial: symbol dimension mismatch");
  if (!project_has_closed_form(kp, f))
    throw std::invalid_argument(
        "project_polynomial: symbol outside the moment-integrable class");

  // Moment route.  Expanding the kernel, (1 - <z,w>)^-(n+1+alpha) =
  // sum_mu (n+1+alpha)_{|mu|} / mu!  z^mu conj(w)^mu, and integrating a term
  // w^a conj(w)^b (1-|w|^2)^s against it kills everything except mu = a - b
  // (componentwise; nothing survives when some a_i < b_i).  What remains is
  // a diagonal Beta integral at the shifted weight alpha + s.
  const double c = kp.n + 1 + kp.alpha;
  const double c_alpha = normalization_constant(kp.n, kp.alpha);
  std::vector<SymbolTerm> result;
  for (const SymbolTerm& t : f.terms()) {
    if (t.coef == Complex(0.0, 0.0)) continue;
    MultiIndex mu;
    bool survives = true;
    for (int i = 0; i < 3; ++i) {
      mu[i] = t.holo[i] - t.anti[i];
      if (mu[i] < 0) survives = false;
    }
    if (!survives) continue;
    const double shifted = kp.alpha + t.radial_power;
    const double coef =
        std::exp(log_pochhammer(c, mu.total()) - log_multi_factorial(mu)) *
        (c_alpha / normalization_constant(kp.n, shifted)) *
        monomial_sq_norm(kp.n, t.holo, shifted);
    SymbolTerm out;
    out.coef = t.coef * coef;
    out.holo = mu;
    result.push_back(out);
  }
  return Symbol(kp.n, result);
}

Complex project(const KernelParams& kp, const Symbol& f, const Point& z,
                const QuadratureRule& rule) {
  check_kernel_params(kp, z, "project");
  if (f.dim() != kp.n)
    throw std::invalid_argument("project: symbol dimension mismatch");
  if (!project_has_closed_form(kp, f))
    return project_by_quadrature(kp, f, z, rule);
  return project_polynomial(kp, f).eval(z);
}

Complex project_by_quadrature(const KernelParams& kp, const Symbol& f,
                              const Point& z, const QuadratureRule& rule) {
  check_kernel_params(kp, z, "project");
  if (f.dim() != kp.n || rule.dim() != kp.n)
    throw std::invalid_argument("project: dimension mismatch");
  check_integrable(f, kp.alpha, "project");
  const double expo = kp.n + 1 + kp.alpha;
  const double c_alpha = normalization_constant(kp.n, kp.alpha);
  const ComplexIntegrand integrand = [&](const Point& w, double omsq) {
    return f.eval(w) * std::pow(guarded_base(z, w), -expo) * c_alpha *
           std::pow(omsq, kp.alpha);
  };
  return integrate(rule, integrand);
}

Complex project(const KernelParams& kp, const ComplexIntegrand& f,
                const Point& z, const QuadratureRule& rule) {
  check_kernel_params(kp, z, "project");
  if (rule.dim() != kp.n)
    throw std::invalid_argument("project: dimension mismatch");
  const double expo = kp.n + 1 + kp.alpha;
  const double c_alpha = normalization_constant(kp.n, kp.alpha);
  const ComplexIntegrand integrand = [&](const Point& w, double omsq) {
    return f(w, omsq) * std::pow(guarded_base(z, w), -expo) * c_alpha *
           std::pow(omsq, kp.alpha);
  };
  return integrate(rule, integrand);
}

Complex berezin(const BerezinParams& bp, const Symbol& f, const Point& z,
                const QuadratureRule& rule) {
  if (!(bp.sigma > -1.0))
    throw std::invalid_argument("berezin: requires sigma > -1");
  if (!(bp.c > 0.0)) throw std::invalid_argument("berezin: requires c > 0");
  require_interior(z, "berezin");
  if (rule.dim() != z.dim() || f.dim() != z.dim())
    throw std::invalid_argument("berezin: dimension mismatch");
  check_integrable(f, bp.sigma, "berezin");
  const double expo = z.dim() + 1 + bp.c + bp.sigma;
  const double constant =
      bp.normalized_measure ? normalization_constant(z.dim(), bp.sigma) : 1.0;
  const double prefactor = constant * std::pow(1.0 - z.norm_sq(), bp.c);
  const ComplexIntegrand integrand = [&](const Point& w, double omsq) {
    const double den = std::abs(guarded_base(z, w));
    return f.eval(w) * std::pow(omsq, bp.sigma) / std::pow(den, expo);
  };
  return prefactor * integrate(rule, integrand);
}

double berezin(const BerezinParams& bp, const RealIntegrand& phi,
               const Point& z, const QuadratureRule& rule) {
  if (!(bp.sigma > -1.0))
    throw std::invalid_argument("berezin: requires sigma > -1");
  if (!(bp.c > 0.0)) throw std::invalid_argument("berezin: requires c > 0");
  require_interior(z, "berezin");
  if (rule.dim() != z.dim())
    throw std::invalid_argument("berezin: dimension mismatch");
  const double expo = z.dim() + 1 + bp.c + bp.sigma;
  const double constant =
      bp.normalized_measure ? normalization_constant(z.dim(), bp.sigma) : 1.0;
  const double prefactor = constant * std::pow(1.0 - z.norm_sq(), bp.c);
  const RealIntegrand integrand = [&](const Point& w, double omsq) {
    const double den = std::abs(guarded_base(z, w));
    return phi(w, omsq) * std::pow(omsq, bp.sigma) / std::pow(den, expo);
  };
  return prefactor * integrate(rule, integrand);
}

Complex berezin_transform(double sigma, const Symbol& f, const Point& z,
                          const QuadratureRule& rule) {
  BerezinParams bp;
  bp.sigma = sigma;
  bp.c = z.dim() + 1 + sigma;
  bp.normalized_measure = true;
  return berezin(bp, f, z, rule);
}

}  // namespace berglab
