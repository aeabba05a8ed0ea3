#pragma once

#include "berglab/point.hpp"
#include "berglab/quadrature.hpp"
#include "berglab/symbol.hpp"

namespace berglab {

/// Parameters of the reproducing kernel K^alpha_z(w) = (1-<w,z>)^-(n+1+alpha)
/// of the weighted Bergman space on B_n.  Requires alpha > -1.
struct KernelParams {
  int n = 1;
  double alpha = 0.0;
};

/// K^alpha_z(w), principal branch (the base 1-<w,z> has positive real part
/// on the ball).  Throws std::domain_error at the boundary.
Complex kernel_eval(const KernelParams& kp, const Point& z, const Point& w);

/// Normalized kernel k^alpha_z(w) = K^alpha_z(w) / sqrt(K^alpha_z(z));
/// unit-norm in the weighted L^2 space.
Complex normalized_kernel_eval(const KernelParams& kp, const Point& z,
                               const Point& w);

/// True when the projection of f has a closed moment form: every term is a
/// pure monomial-with-radial-power (no logs, no beta factor, no poles) whose
/// radial exponent keeps the weight integrable (alpha + s > -1).
bool project_has_closed_form(const KernelParams& kp, const Symbol& f);

/// The projection of a moment-integrable symbol as an explicit holomorphic
/// polynomial (exact coefficients).  Throws when project_has_closed_form is
/// false.
Symbol project_polynomial(const KernelParams& kp, const Symbol& f);

/// Bergman projection P_alpha f(z) = integral of f(w) K^alpha_z(w) dv_alpha
/// against the *normalized* weighted measure.  Uses the exact moment route
/// when project_has_closed_form holds (only the multi-index mu = holo - anti
/// survives the angular integration, and the radial integral is a Beta
/// function), and quadrature otherwise.
Complex project(const KernelParams& kp, const Symbol& f, const Point& z,
                const QuadratureRule& rule);

/// The generic quadrature route of project(), exposed so the two paths can
/// be cross-validated against each other.
Complex project_by_quadrature(const KernelParams& kp, const Symbol& f,
                              const Point& z, const QuadratureRule& rule);

/// Quadrature projection of a pointwise integrand (for functions outside the
/// symbol algebra, e.g. products with kernel test functions).
Complex project(const KernelParams& kp, const ComplexIntegrand& f,
                const Point& z, const QuadratureRule& rule);

/// Generalized Berezin transform
///   B_{c,sigma} phi(z)
///     = (1-|z|^2)^c integral phi(w) |1-<w,z>|^-(n+1+c+sigma) dv_sigma(w),
/// where dv_sigma = (1-|w|^2)^sigma dv is UNNORMALIZED unless
/// normalized_measure is set (the oscillation theory uses the unnormalized
/// convention; the unital transform needs the normalized one).
/// Requires sigma > -1, c > 0.
struct BerezinParams {
  double sigma = 0.0;
  double c = 1.0;
  bool normalized_measure = false;
};

/// B_{c,sigma} of a symbol.  Real symbols give real values; the complex
/// return passes a complex symbol's phase structure through.
Complex berezin(const BerezinParams& bp, const Symbol& f, const Point& z,
                const QuadratureRule& rule);

/// B_{c,sigma} of a pointwise real integrand (f(w), 1-|w|^2) -> real.
double berezin(const BerezinParams& bp, const RealIntegrand& phi,
               const Point& z, const QuadratureRule& rule);

/// Ordinary Berezin transform B_sigma phi = <phi k_z, k_z> in the weighted
/// L^2 pairing: the c = n+1+sigma case over the normalized measure, so that
/// B_sigma(1) = 1 exactly.  (Over the unnormalized dv_sigma the two differ
/// by the normalizing constant c_sigma.)
Complex berezin_transform(double sigma, const Symbol& f, const Point& z,
                          const QuadratureRule& rule);

}  // namespace berglab
