#pragma once

#include <utility>
#include <vector>

#include "berglab/kernels.hpp"
#include "berglab/point.hpp"
#include "berglab/quadrature.hpp"
#include "berglab/symbol.hpp"

namespace berglab {

/// Parameters of the Hankel boundedness problem H_f = (I - P_beta)(f .)
/// acting from the weighted Bergman space with exponents (p, alpha) into
/// the weighted L^q space with weight beta.  Requires 1 < p <= q and
/// alpha, beta > -1.  t >= 0 sharpens the kernel test family K^{beta,t}_z;
/// truncation is the matrix degree used by the spectral experiments.
struct HankelParams {
  int n = 1;
  double p = 2.0;
  double q = 2.0;
  double alpha = 0.0;
  double beta = 0.0;
  double t = 0.0;
  int truncation = 0;

  /// (n+1+beta)/q - (n+1+alpha)/p, the weight exponent of the oscillation
  /// space that characterizes boundedness.
  double gamma() const { return (n + 1 + beta) / q - (n + 1 + alpha) / p; }
  /// Conjugate exponent of q.
  double q_prime() const { return q / (q - 1.0); }
};

/// Smallest t in steps of 0.5 satisfying n+1+beta+t > (n+1+alpha)/p, the
/// hypothesis under which the test-function family peaks correctly.  t = 0
/// whenever admissible.
double minimal_test_exponent(const HankelParams& hp);

/// Normalized kernel test function
///   h^t_z(w) = K^{beta,t}_z(w) / ||K^{beta,t}_z||_{p,alpha},
/// where K^{beta,t}_z(w) = (1 - <w,z>)^{-(n+1+beta+t)}.  The normalization
/// is computed by quadrature and cross-checked against the closed diagonal
/// series of ||K||^p (valid for every p); normalization_check records the
/// relative deviation.  The function never vanishes on the ball.
struct TestFunction {
  HankelParams params;
  Point z;
  double kernel_norm = 1.0;         // ||K^{beta,t}_z||_{p,alpha}
  double normalization_check = 0.0; // relative deviation of the series check

  Complex operator()(const Point& w) const;
};

/// Builds h^t_z.  Throws when the sharpening hypothesis
/// n+1+beta+t > (n+1+alpha)/p fails, when |z| exceeds the per-dimension
/// probe cap (quadrature error overwhelms the signal past it), or when the
/// quadrature normalization deviates from the series check by more than
/// 1e-6 (refine the rule; Monte Carlo rules get a 1/sqrt(N) allowance and
/// correspondingly carry that uncertainty into every probe).
TestFunction test_function(const HankelParams& hp, const Point& z,
                           const QuadratureRule& rule);

/// The holomorphic companion of f along the test family,
///   g_z(w) = P_beta(conj(f) h^t_z)(w) / h^t_z(w),
/// with the projection computed by quadrature.  At t = 0 its conjugate on
/// the diagonal is the Berezin transform of f.
Complex g_z_eval(const Symbol& f, const HankelParams& hp, const Point& z,
                 const Point& w, const QuadratureRule& rule);

/// Pointwise Hankel application H_f g(z) = f(z)g(z) - P_beta(fg)(z).
/// Moment-exact whenever the product fg stays in the
/// monomial-with-radial-powers algebra; quadrature otherwise.
Complex hankel_apply(const Symbol& f, double beta, const Symbol& g,
                     const Point& z, const QuadratureRule& rule);

/// Exact finite section of H_f at p = q = 2: domain basis the orthonormal
/// monomials of the weighted Bergman space up to `degree`, codomain basis an
/// orthonormal basis of the finite-dimensional image (Gram factorization
/// with rank truncation below 1e-12 of the top eigenvalue, which also caps
/// the condition number at 1e12).  matrix is row-major domain x rank with
/// entries <H e_j, eps_k>; singular_values is the full descending list, one
/// entry per domain dimension (zeros beyond the rank).
struct TruncatedOperator {
  int n = 1;
  double alpha = 0.0;
  double beta = 0.0;
  int degree = 0;
  std::vector<MultiIndex> domain;  // graded monomial exponents
  int rank = 0;
  std::vector<Complex> matrix;
  std::vector<double> singular_values;

  double top_singular_value() const {
    return singular_values.empty() ? 0.0 : singular_values.front();
  }
};

/// Assembles the finite section from exact moment integrals (every entry of
/// the image Gram matrix <H e_i, H e_j> = <f e_i, f e_j> - <P f e_i, P f e_j>
/// is a closed form).  Requires a moment-integrable symbol and a basis of at
/// most 300 monomials.
TruncatedOperator truncated_matrix(const Symbol& f, double alpha, double beta,
                                   int degree);

/// Probe of f at one point of the test family:
///   probe_f   = ||H_f h^t_z||_{q,beta},
///   probe_fbar= ||H_{conj f} h^t_z||_{q,beta},
///   mo_bqt    = ||f h^t_z - conj(g_z(z)) h^t_z||_{q,beta},
/// and necessity_ratio = mo_bqt / (probe_f + probe_fbar), the empirical
/// constant of the lower bound mo <= C (probe_f + probe_fbar).
struct ProbeResult {
  Point z;
  double probe_f = 0.0;
  double probe_fbar = 0.0;
  double mo_bqt = 0.0;
  Complex g_z_at_z{0.0, 0.0};
  double necessity_ratio = 0.0;
};

/// Computes a ProbeResult by quadrature plus the diagonal coefficient series
/// of P_beta(f h^t_z) (exact coefficients for moment-integrable symbols,
/// node sums otherwise).  Refuses |z| beyond the per-dimension cap
/// (0.997 / 0.9 / 0.85 for n = 1 / 2 / 3): past it the series and the rule
/// cannot deliver the digits the probe subtracts.
ProbeResult probe_norms(const Symbol& f, const HankelParams& hp,
                        const Point& z, const QuadratureRule& rule);

/// Probe sweep along z = radius * direction for direction e_1 followed by 8
/// seeded boundary directions; results are direction-major (all radii of
/// direction 0 first).  Vanishing of probe_f toward the boundary is the
/// compactness signature.  Radii must be strictly increasing and inside the
/// probe cap.
std::vector<ProbeResult> compactness_decay(const Symbol& f,
                                           const HankelParams& hp,
                                           const std::vector<double>& radii,
                                           const QuadratureRule& rule);

/// The pair (||fg - P_beta(fg)||_{q,beta}, ||fg - P_s(fg)||_{q,beta}) for
/// s >= beta: the projection-level comparison, whose first component is
/// bounded by a constant times the second.  Both projections are exact
/// moment polynomials; requires moment-integrable f*g.
std::pair<double, double> projection_comparison_probe(
    const Symbol& f, const Symbol& g, double q, double beta, double s,
    const QuadratureRule& rule);

}  // namespace berglab
