#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "berglab/lattice.hpp"
#include "berglab/point.hpp"
#include "berglab/symbol.hpp"

namespace berglab {

/// All first-order derivative data of a symbol at one point.
///
/// `grad` holds the holomorphic partials (d/dz_i in the Wirtinger sense;
/// antiholomorphic factors differentiate to zero).  `invariant_norm` is the
/// Euclidean norm of grad(f o phi_z)(0), formed by the chain rule with the
/// analytic derivative of phi_z at 0 -- for holomorphic f this is |grad~ f|;
/// in general it is the holomorphic part of that gradient.  At z = 0 the
/// tangential constraint is vacuous, so tangential_norm equals |grad| there;
/// for n = 1 there is no tangential direction and the field stays 0.
struct GradientReport {
  Point z;
  std::vector<Complex> grad;
  Complex radial{0.0, 0.0};      // Rf(z) = sum_i z_i d_i f
  double invariant_norm = 0.0;   // |grad(f o phi_z)(0)|
  double tangential_norm = 0.0;  // sup over unit u _|_ z of |du f|, n > 1
};

/// Bloch-type norm estimate |f(0)| + sup (1-|z|^2)^a |grad f| with the sup
/// taken over the lattice centers and the shell samples.  `little_profile`
/// records the per-shell sups (a vanishing profile is the little-Bloch
/// signature; for a < 1 the space coincides with the holomorphic Lipschitz
/// class of order 1-a, which this estimator covers without a separate
/// seminorm).  The invariant variant replaces the weight by
/// (1-|z|^2)^{a-1} |grad~ f|; it is an equivalent norm for a > 1/2 and
/// always in one variable, and is filled exactly in those cases.
struct BlochEstimate {
  double a = 0.0;
  double norm = 0.0;
  std::vector<std::pair<double, double>> little_profile;
  struct InvariantVariant {
    double norm = 0.0;
    std::vector<std::pair<double, double>> profile;
  };
  std::optional<InvariantVariant> invariant_variant;
};

/// Term-by-term analytic differentiation.  Throws std::domain_error at a log
/// singularity (the pole ray of a log factor, or the origin for a beta
/// factor, where beta(z,0) ~ |z| is not differentiable).
GradientReport gradient(const Symbol& f, const Point& z);

/// |grad~ f(z)| = |grad(f o phi_z)(0)| for holomorphic f, via the chain rule
/// with the closed-form derivative of phi_z at 0 (no finite differences, so
/// no step noise near the boundary).  In one variable this equals
/// (1-|z|^2) |f'(z)|.  Rejects non-holomorphic symbols.
double invariant_gradient_norm(const Symbol& f, const Point& z);

/// |grad_t f(z)| = sup { |df/du(z)| : |u| = 1, u _|_ z }.  The sup of a
/// linear functional over the unit sphere of a subspace is the norm of the
/// projected representing vector, so this is computed in closed form as
/// | gbar - (<gbar,z>/|z|^2) z |  with gbar the entrywise conjugate of the
/// gradient.  Requires n > 1, z != 0, f holomorphic.
double tangential_gradient_norm(const Symbol& f, const Point& z);

/// Deterministic unit-sphere sample used by every shell sweep.
///   n=1: `resolution` equally spaced angles starting on the positive real
///        axis (so radial sups along [0,1) are hit exactly);
///   n=2: polar grid (cos t e^{i p1}, sin t e^{i p2}) with `resolution`
///        values of t in [0, pi/2] and 16 phases per circle;
///   n=3: 64 * `resolution` seeded pseudorandom directions.
/// resolution = 0 picks the default (256 / 33 / 24 for n = 1 / 2 / 3).
std::vector<Point> sphere_samples(int n, int resolution = 0);

/// Bloch-norm estimator over lattice union shells; requires a >= 0 and a
/// holomorphic symbol on the lattice's ball.
BlochEstimate bloch_norm(const Symbol& f, double a, const Lattice& lat,
                         const std::vector<double>& shells,
                         int shell_resolution = 0);

/// Per-shell sups of the tangential gradient, (radius, sup) pairs.  A
/// nonconstant holomorphic f must show a non-vanishing profile: tangential
/// derivatives obey a maximum principle, so |grad_t f| -> 0 at the sphere
/// forces f constant.  Requires n > 1 and shell radii in (0,1).
std::vector<std::pair<double, double>> max_principle_probe(
    const Symbol& f, const std::vector<double>& shells,
    int shell_resolution = 0);

}  // namespace berglab
