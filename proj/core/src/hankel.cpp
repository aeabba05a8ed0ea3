#include "berglab/hankel.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "berglab/measure.hpp"
#include "berglab/moments.hpp"
#include "berglab/rng.hpp"
#include "berglab/special.hpp"

namespace berglab {

namespace {

// Past these moduli the probe subtraction ||fh||^2 - ||P(fh)||^2 loses more
// digits than the rule and the coefficient series can supply.
constexpr double kProbeCap[4] = {0.0, 0.997, 0.9, 0.85};
// Degree caps of the diagonal coefficient series per dimension.
constexpr int kSeriesCap[4] = {0, 3000, 90, 45};

void check_hankel_params(const HankelParams& hp, const char* what) {
  require_dim(hp.n, what);
  if (!(hp.p > 1.0) || !(hp.p <= hp.q))
    throw std::invalid_argument(std::string(what) + ": requires 1 < p <= q");
  if (!(hp.alpha > -1.0) || !(hp.beta > -1.0))
    throw std::invalid_argument(std::string(what) +
                                ": requires alpha, beta > -1");
  if (!(hp.t >= 0.0))
    throw std::invalid_argument(std::string(what) + ": requires t >= 0");
}

void check_sharpening(const HankelParams& hp, const char* what) {
  if (!(hp.n + 1 + hp.beta + hp.t > (hp.n + 1 + hp.alpha) / hp.p))
    throw std::invalid_argument(std::string(what) +
                                ": requires n+1+beta+t > (n+1+alpha)/p");
}

void check_probe_point(const Point& z, const char* what) {
  require_interior(z, what);
  const double cap = kProbeCap[z.dim()];
  if (z.norm() > cap)
    throw std::invalid_argument(std::string(what) + ": |z| exceeds the " +
                                std::to_string(cap) +
                                " probe cap for this dimension");
}

void check_weight_integrable(const Symbol& f, double beta, const char* what) {
  for (const SymbolTerm& t : f.terms()) {
    if (t.coef == Complex(0.0, 0.0)) continue;
    if (!(beta + t.radial_power > -1.0))
      throw std::invalid_argument(
          std::string(what) +
          ": symbol not integrable (needs beta + radial_power > -1)");
  }
}

// ||K^{beta,t}_z||^p_{p,alpha} as the diagonal series
//   sum_k [(s)_k]^2 / k!  Gamma(n+1+alpha)/Gamma(n+1+alpha+k) x^k,
// s = p(n+1+beta+t)/2, x = |z|^2: expanding both conjugate factors of
// |1-<w,z>|^{-2s} and integrating kills the off-diagonal terms for every p.
double kernel_power_series(int n, double s, double alpha, double x) {
  double term = 1.0;
  double sum = 1.0;
  for (int k = 0; k < 200000; ++k) {
    term *= x * (s + k) * (s + k) / ((k + 1.0) * (n + 1 + alpha + k));
    sum += term;
    if (term < 1e-18 * sum) return sum;
  }
  throw std::runtime_error("kernel_power_series: did not converge");
}

// <S, T>_{2,beta} (normalized weight) for moment-integrable symbols: a term
// pair survives only when its combined holomorphic and antiholomorphic
// exponents agree, leaving a diagonal Beta integral at the combined radial
// shift.
Complex algebra_inner(int n, double beta, const Symbol& S, const Symbol& T) {
  const double c_beta = normalization_constant(n, beta);
  Complex total = 0.0;
  for (const SymbolTerm& s : S.terms()) {
    if (s.coef == Complex(0.0, 0.0)) continue;
    for (const SymbolTerm& t : T.terms()) {
      if (t.coef == Complex(0.0, 0.0)) continue;
      if (s.log_radial || s.beta_factor || s.log_pole || s.log_pole_conj ||
          t.log_radial || t.beta_factor || t.log_pole || t.log_pole_conj)
        throw std::invalid_argument(
            "algebra_inner: symbol outside the moment-integrable class");
      const double shift = s.radial_power + t.radial_power;
      if (!(beta + shift > -1.0))
        throw std::invalid_argument(
            "algebra_inner: requires beta + combined radial power > -1");
      MultiIndex shared;
      bool survives = true;
      for (int i = 0; i < 3; ++i) {
        const int a = s.holo[i] + t.anti[i];
        const int b = s.anti[i] + t.holo[i];
        if (a != b) {
          survives = false;
          break;
        }
        shared[i] = a;
      }
      if (!survives) continue;
      total += s.coef * std::conj(t.coef) *
               (c_beta / normalization_constant(n, beta + shift)) *
               monomial_sq_norm(n, shared, beta + shift);
    }
  }
  return total;
}

// Per-node data of one probe: quadrature weight times the weighted measure
// density, and the product f(w) h(w).
struct NodeCache {
  std::vector<double> wd;
  std::vector<Complex> fh;
};

NodeCache cache_nodes(const Symbol& f, const TestFunction& h,
                      const QuadratureRule& rule, const WeightedMeasure& mb) {
  NodeCache nc;
  nc.wd.resize(rule.size());
  nc.fh.resize(rule.size());
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const Point& w = rule.node(i);
    nc.wd[i] = rule.weight(i) * mb.density(rule.one_minus_sq(i));
    nc.fh[i] = f.eval(w) * h(w);
  }
  return nc;
}

// The coefficients <f h^t_z, w^nu>_beta of the projection of f h^t_z onto
// the orthonormal monomials, with ||P(f h)||^2 = sum |coef|^2 / ||w^nu||^2.
struct ProjectionSeries {
  std::vector<MultiIndex> indices;
  std::vector<Complex> coef;
  std::vector<double> basis_sq;  // ||w^nu||^2_beta
  double norm_sq = 0.0;
};

int symbol_degree(const Symbol& f) {
  int deg = 0;
  for (const SymbolTerm& t : f.terms())
    deg = std::max(deg, t.holo.total() + t.anti.total());
  return deg;
}

// Exact coefficients: expanding the kernel factor of h, the term
// coef w^a conj(w)^b (1-|w|^2)^R picks the single kernel index m = b+nu-a
// (componentwise nonnegative) and leaves a diagonal moment at weight beta+R.
ProjectionSeries closed_series(const Symbol& f, const TestFunction& h) {
  const int n = f.dim();
  const double ce = n + 1 + h.params.beta + h.params.t;
  const double beta = h.params.beta;
  const double c_beta = normalization_constant(n, beta);
  const int guard = 30 + symbol_degree(f);

  ProjectionSeries ps;
  for (int k = 0; k <= kSeriesCap[n]; ++k) {
    double degree_contrib = 0.0;
    for (const MultiIndex& nu : multi_indices_of_degree(n, k)) {
      Complex c = 0.0;
      for (const SymbolTerm& t : f.terms()) {
        if (t.coef == Complex(0.0, 0.0)) continue;
        MultiIndex m;
        MultiIndex shared;
        bool survives = true;
        for (int i = 0; i < 3; ++i) {
          m[i] = t.anti[i] + nu[i] - t.holo[i];
          if (m[i] < 0) {
            survives = false;
            break;
          }
          shared[i] = t.anti[i] + nu[i];
        }
        if (!survives) continue;
        c += t.coef *
             std::exp(log_pochhammer(ce, m.total()) -
                      log_multi_factorial(m)) *
             std::conj(m.eval(h.z)) *
             (c_beta / normalization_constant(n, beta + t.radial_power)) *
             monomial_sq_norm(n, shared, beta + t.radial_power);
      }
      c /= h.kernel_norm;
      const double basis = monomial_sq_norm(n, nu, beta);
      const double contrib = std::norm(c) / basis;
      ps.indices.push_back(nu);
      ps.coef.push_back(c);
      ps.basis_sq.push_back(basis);
      ps.norm_sq += contrib;
      degree_contrib += contrib;
    }
    if (n == 1 && k >= guard && degree_contrib < 1e-24 * ps.norm_sq) break;
  }
  return ps;
}

// Node-sum coefficients for symbols without closed moments (log factors,
// hyperbolic distance): <fh, w^nu> as a weighted dot against the cached
// node values, with incremental conjugate powers.  Harmonic extraction from
// a tensor lattice aliases at half the angular count, so the per-axis
// exponent is cut there; the symbol's modulus range must make that tail
// negligible (coarse-angular rules cannot probe such symbols near the
// boundary -- the normalization self-check refuses those anyway).
ProjectionSeries node_series(const Symbol& f, const TestFunction& h,
                             const QuadratureRule& rule, const NodeCache& nc) {
  const int n = f.dim();
  const double beta = h.params.beta;
  const std::size_t count = rule.size();
  int axis_cut = kSeriesCap[n];
  if (rule.kind() == RuleKind::tensor)
    axis_cut = std::min(axis_cut, rule.angular_resolution() / 2 - 1);
  if (axis_cut < 0) axis_cut = 0;

  ProjectionSeries ps;
  if (n == 1) {
    std::vector<Complex> running(count);
    std::vector<Complex> vals(count);
    for (std::size_t i = 0; i < count; ++i) {
      running[i] = Complex(1.0, 0.0);
      vals[i] = nc.fh[i] * nc.wd[i];
    }
    const int guard = 50 + symbol_degree(f);
    for (int k = 0; k <= axis_cut; ++k) {
      Complex c = 0.0;
      for (std::size_t i = 0; i < count; ++i) {
        c += vals[i] * running[i];
        running[i] *= std::conj(rule.node(i)[0]);
      }
      const double basis = monomial_sq_norm(1, MultiIndex{{k, 0, 0}}, beta);
      const double contrib = std::norm(c) / basis;
      MultiIndex nu;
      nu[0] = k;
      ps.indices.push_back(nu);
      ps.coef.push_back(c);
      ps.basis_sq.push_back(basis);
      ps.norm_sq += contrib;
      if (k >= guard && contrib < 1e-24 * ps.norm_sq) break;
    }
    return ps;
  }

  for (const MultiIndex& nu : multi_indices_up_to(n, kSeriesCap[n])) {
    bool keep = true;
    for (int d = 0; d < n; ++d) keep = keep && nu[d] <= axis_cut;
    if (keep) ps.indices.push_back(nu);
  }
  ps.coef.assign(ps.indices.size(), Complex(0.0, 0.0));
  ps.basis_sq.resize(ps.indices.size());
  for (std::size_t j = 0; j < ps.indices.size(); ++j)
    ps.basis_sq[j] = monomial_sq_norm(n, ps.indices[j], beta);

  const int pow_cap = std::min(kSeriesCap[n], axis_cut);
  std::vector<std::vector<Complex>> pows(n);
  for (int d = 0; d < n; ++d) pows[d].resize(pow_cap + 1);
  for (std::size_t i = 0; i < count; ++i) {
    const Point& w = rule.node(i);
    const Complex v = nc.fh[i] * nc.wd[i];
    for (int d = 0; d < n; ++d) {
      pows[d][0] = Complex(1.0, 0.0);
      const Complex base = std::conj(w[d]);
      for (int k = 1; k <= pow_cap; ++k) pows[d][k] = pows[d][k - 1] * base;
    }
    for (std::size_t j = 0; j < ps.indices.size(); ++j) {
      Complex mono = v;
      for (int d = 0; d < n; ++d) mono *= pows[d][ps.indices[j][d]];
      ps.coef[j] += mono;
    }
  }
  for (std::size_t j = 0; j < ps.indices.size(); ++j)
    ps.norm_sq += std::norm(ps.coef[j]) / ps.basis_sq[j];
  return ps;
}

// P(fh) evaluated back at the quadrature nodes from its coefficients.
std::vector<Complex> reconstruct_at_nodes(const ProjectionSeries& ps,
                                          const QuadratureRule& rule) {
  const int n = rule.dim();
  const std::size_t count = rule.size();
  std::vector<Complex> out(count, Complex(0.0, 0.0));
  if (n == 1) {
    // indices are consecutive degrees; Horner from the top
    for (std::size_t i = 0; i < count; ++i) {
      const Complex w = rule.node(i)[0];
      Complex acc = 0.0;
      for (std::size_t j = ps.indices.size(); j-- > 0;)
        acc = acc * w + ps.coef[j] / ps.basis_sq[j];
      out[i] = acc;
    }
    return out;
  }
  std::vector<std::vector<Complex>> pows(n);
  int cap = 0;
  for (const MultiIndex& nu : ps.indices)
    for (int d = 0; d < n; ++d) cap = std::max(cap, nu[d]);
  for (int d = 0; d < n; ++d) pows[d].resize(cap + 1);
  for (std::size_t i = 0; i < count; ++i) {
    const Point& w = rule.node(i);
    for (int d = 0; d < n; ++d) {
      pows[d][0] = Complex(1.0, 0.0);
      for (int k = 1; k <= cap; ++k) pows[d][k] = pows[d][k - 1] * w[d];
    }
    Complex acc = 0.0;
    for (std::size_t j = 0; j < ps.indices.size(); ++j) {
      Complex mono = ps.coef[j] / ps.basis_sq[j];
      for (int d = 0; d < n; ++d) mono *= pows[d][ps.indices[j][d]];
      acc += mono;
    }
    out[i] = acc;
  }
  return out;
}

// ||fh - P_beta(fh)||_{q,beta}: Parseval subtraction at q = 2, per-node
// reconstruction of the projection otherwise.
double hankel_probe_norm(const Symbol& f, const TestFunction& h,
                         const QuadratureRule& rule,
                         const WeightedMeasure& mb) {
  const NodeCache nc = cache_nodes(f, h, rule, mb);
  const KernelParams kb{f.dim(), h.params.beta};
  const ProjectionSeries ps = project_has_closed_form(kb, f)
                                  ? closed_series(f, h)
                                  : node_series(f, h, rule, nc);
  if (h.params.q == 2.0) {
    double fh_sq = 0.0;
    double comp = 0.0;  // Kahan
    for (std::size_t i = 0; i < rule.size(); ++i) {
      const double y = nc.wd[i] * std::norm(nc.fh[i]) - comp;
      const double s = fh_sq + y;
      comp = (s - fh_sq) - y;
      fh_sq = s;
    }
    return std::sqrt(std::max(0.0, fh_sq - ps.norm_sq));
  }
  const std::vector<Complex> proj = reconstruct_at_nodes(ps, rule);
  double sum = 0.0;
  double comp = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const double y =
        nc.wd[i] * std::pow(std::abs(nc.fh[i] - proj[i]), h.params.q) - comp;
    const double s = sum + y;
    comp = (s - sum) - y;
    sum = s;
  }
  return std::pow(sum, 1.0 / h.params.q);
}

}  // namespace

Complex TestFunction::operator()(const Point& w) const {
  const KernelParams kk{params.n, params.beta + params.t};
  return kernel_eval(kk, z, w) / kernel_norm;
}

double minimal_test_exponent(const HankelParams& hp) {
  check_hankel_params(hp, "minimal_test_exponent");
  double t = 0.0;
  while (!(hp.n + 1 + hp.beta + t > (hp.n + 1 + hp.alpha) / hp.p)) t += 0.5;
  return t;
}

TestFunction test_function(const HankelParams& hp, const Point& z,
                           const QuadratureRule& rule) {
  check_hankel_params(hp, "test_function");
  check_sharpening(hp, "test_function");
  check_probe_point(z, "test_function");
  if (z.dim() != hp.n || rule.dim() != hp.n)
    throw std::invalid_argument("test_function: dimension mismatch");

  const KernelParams kk{hp.n, hp.beta + hp.t};
  const WeightedMeasure ma = WeightedMeasure::standard(hp.n, hp.alpha);
  const ComplexIntegrand raw = [&](const Point& w, double) {
    return kernel_eval(kk, z, w);
  };
  const double by_rule = lp_norm(raw, hp.p, ma, rule);
  const double ce = hp.n + 1 + hp.beta + hp.t;
  const double by_series = std::pow(
      kernel_power_series(hp.n, hp.p * ce / 2.0, hp.alpha, z.norm_sq()),
      1.0 / hp.p);
  const double deviation = std::abs(by_rule - by_series) / by_series;
  const double allowance =
      rule.kind() == RuleKind::monte_carlo
          ? std::max(1e-6, 8.0 / std::sqrt(static_cast<double>(rule.size())))
          : 1e-6;
  if (deviation > allowance)
    throw std::runtime_error(
        "test_function: normalization self-check failed (deviation " +
        std::to_string(deviation) + "); refine the rule");

  TestFunction out;
  out.params = hp;
  out.z = z;
  out.kernel_norm = by_rule;
  out.normalization_check = deviation;
  return out;
}

Complex g_z_eval(const Symbol& f, const HankelParams& hp, const Point& z,
                 const Point& w, const QuadratureRule& rule) {
  if (f.dim() != hp.n)
    throw std::invalid_argument("g_z_eval: symbol dimension mismatch");
  check_weight_integrable(f, hp.beta, "g_z_eval");
  const TestFunction h = test_function(hp, z, rule);
  const Symbol fbar = f.conjugate();
  const ComplexIntegrand prod = [&](const Point& u, double) {
    return fbar.eval(u) * h(u);
  };
  const KernelParams kb{hp.n, hp.beta};
  return project(kb, prod, w, rule) / h(w);
}

Complex hankel_apply(const Symbol& f, double beta, const Symbol& g,
                     const Point& z, const QuadratureRule& rule) {
  const KernelParams kp{f.dim(), beta};
  const Symbol fg = f * g;
  return fg.eval(z) - project(kp, fg, z, rule);
}

TruncatedOperator truncated_matrix(const Symbol& f, double alpha, double beta,
                                   int degree) {
  const int n = f.dim();
  if (!(alpha > -1.0) || !(beta > -1.0))
    throw std::invalid_argument("truncated_matrix: requires alpha, beta > -1");
  if (degree < 0)
    throw std::invalid_argument("truncated_matrix: requires degree >= 0");
  const KernelParams kb{n, beta};
  if (!project_has_closed_form(kb, f))
    throw std::invalid_argument(
        "truncated_matrix: symbol outside the moment-integrable class");

  TruncatedOperator op;
  op.n = n;
  op.alpha = alpha;
  op.beta = beta;
  op.degree = degree;
  op.domain = multi_indices_up_to(n, degree);
  const std::size_t d = op.domain.size();
  if (d > 300)
    throw std::invalid_argument("truncated_matrix: basis size exceeds 300");

  // f e_j and their projections, with e_j the orthonormalized monomials
  std::vector<Symbol> fe;
  std::vector<Symbol> pfe;
  fe.reserve(d);
  pfe.reserve(d);
  for (const MultiIndex& m : op.domain) {
    const double nm = std::sqrt(monomial_sq_norm(n, m, alpha));
    fe.push_back(f * Symbol::monomial(n, Complex(1.0 / nm, 0.0), m));
    pfe.push_back(project_polynomial(kb, fe.back()));
  }

  // M = (H* H) in the domain basis: M(i,j) = <H e_j, H e_i>, and the
  // projection is orthogonal, so <H e_j, H e_i> = <f e_j, f e_i> -
  // <P f e_j, P f e_i> -- every entry an exact moment.
  Eigen::MatrixXcd M(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      const Complex v = algebra_inner(n, beta, fe[j], fe[i]) -
                        algebra_inner(n, beta, pfe[j], pfe[i]);
      M(i, j) = v;
      M(j, i) = std::conj(v);
    }
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(M);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("truncated_matrix: eigensolver failed");

  // eigenvalues ascending; clamp the rounding negatives of the PSD matrix
  op.singular_values.resize(d);
  for (std::size_t k = 0; k < d; ++k)
    op.singular_values[k] =
        std::sqrt(std::max(0.0, es.eigenvalues()(d - 1 - k)));
  const double top_sq = std::max(0.0, es.eigenvalues()(d - 1));

  // codomain rank truncation at 1e-12 of the top eigenvalue (equivalently a
  // 1e12 condition cap); eps_k = H v_k / sigma_k gives matrix entries
  // <H e_j, eps_k> = conj(V_{jk}) sigma_k
  op.rank = 0;
  for (std::size_t k = 0; k < d; ++k) {
    const double lam = std::max(0.0, es.eigenvalues()(d - 1 - k));
    if (lam >= 1e-12 * top_sq && lam > 0.0) ++op.rank;
  }
  op.matrix.assign(d * op.rank, Complex(0.0, 0.0));
  for (std::size_t j = 0; j < d; ++j)
    for (int k = 0; k < op.rank; ++k)
      op.matrix[j * op.rank + k] =
          std::conj(es.eigenvectors()(j, d - 1 - k)) * op.singular_values[k];
  return op;
}

ProbeResult probe_norms(const Symbol& f, const HankelParams& hp,
                        const Point& z, const QuadratureRule& rule) {
  if (f.dim() != hp.n)
    throw std::invalid_argument("probe_norms: symbol dimension mismatch");
  check_weight_integrable(f, hp.beta, "probe_norms");
  const TestFunction h = test_function(hp, z, rule);
  const WeightedMeasure mb = WeightedMeasure::standard(hp.n, hp.beta);
  const Symbol fbar = f.conjugate();

  ProbeResult out;
  out.z = z;
  out.probe_f = hankel_probe_norm(f, h, rule, mb);
  out.probe_fbar = hankel_probe_norm(fbar, h, rule, mb);

  const ComplexIntegrand prod = [&](const Point& u, double) {
    return fbar.eval(u) * h(u);
  };
  const KernelParams kb{hp.n, hp.beta};
  out.g_z_at_z = project(kb, prod, z, rule) / h(z);

  const Complex lambda = std::conj(out.g_z_at_z);
  const ComplexIntegrand centered = [&](const Point& u, double) {
    return (f.eval(u) - lambda) * h(u);
  };
  out.mo_bqt = lp_norm(centered, hp.q, mb, rule);
  const double denom = out.probe_f + out.probe_fbar;
  out.necessity_ratio = denom > 1e-14 ? out.mo_bqt / denom : 0.0;
  return out;
}

std::vector<ProbeResult> compactness_decay(const Symbol& f,
                                           const HankelParams& hp,
                                           const std::vector<double>& radii,
                                           const QuadratureRule& rule) {
  if (radii.empty())
    throw std::invalid_argument("compactness_decay: requires radii");
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (!(radii[i] > 0.0) || !(radii[i] <= kProbeCap[hp.n]))
      throw std::invalid_argument(
          "compactness_decay: radii must lie in (0, probe cap]");
    if (i > 0 && !(radii[i] > radii[i - 1]))
      throw std::invalid_argument(
          "compactness_decay: radii must be strictly increasing");
  }

  std::vector<Point> directions;
  directions.push_back(hp.n == 1   ? Point(Complex(1.0, 0.0))
                       : hp.n == 2 ? Point(Complex(1.0, 0.0), Complex(0.0, 0.0))
                                   : Point(Complex(1.0, 0.0), Complex(0.0, 0.0),
                                           Complex(0.0, 0.0)));
  std::mt19937_64 gen(0xdeca1u + static_cast<std::uint64_t>(hp.n));
  for (int j = 0; j < 8; ++j)
    directions.push_back(random_sphere_point(hp.n, gen));

  std::vector<ProbeResult> out;
  out.reserve(directions.size() * radii.size());
  for (const Point& d : directions)
    for (double r : radii)
      out.push_back(probe_norms(f, hp, d * Complex(r, 0.0), rule));
  return out;
}

std::pair<double, double> projection_comparison_probe(
    const Symbol& f, const Symbol& g, double q, double beta, double s,
    const QuadratureRule& rule) {
  if (!(q >= 1.0))
    throw std::invalid_argument(
        "projection_comparison_probe: requires q >= 1");
  if (!(beta > -1.0) || !(s >= beta))
    throw std::invalid_argument(
        "projection_comparison_probe: requires s >= beta > -1");
  const int n = f.dim();
  if (g.dim() != n || rule.dim() != n)
    throw std::invalid_argument(
        "projection_comparison_probe: dimension mismatch");

  const Symbol fg = f * g;
  const KernelParams kb{n, beta};
  const KernelParams ks{n, s};
  if (!project_has_closed_form(kb, fg) || !project_has_closed_form(ks, fg))
    throw std::invalid_argument(
        "projection_comparison_probe: symbol outside the moment-integrable "
        "class");
  const Symbol at_beta = fg + project_polynomial(kb, fg) * Complex(-1.0, 0.0);
  const Symbol at_s = fg + project_polynomial(ks, fg) * Complex(-1.0, 0.0);
  const WeightedMeasure mb = WeightedMeasure::standard(n, beta);
  const ComplexIntegrand eb = [&](const Point& w, double) {
    return at_beta.eval(w);
  };
  const ComplexIntegrand es = [&](const Point& w, double) {
    return at_s.eval(w);
  };
  return {lp_norm(eb, q, mb, rule), lp_norm(es, q, mb, rule)};
}

}  // namespace berglab
