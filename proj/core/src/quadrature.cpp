#include "berglab/quadrature.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "berglab/moments.hpp"
#include "berglab/rng.hpp"

namespace berglab {

namespace {

// Compensated (Kahan) accumulator: rules run to ~10^6 nodes and several
// checks sit right at 1e-10, which a plain sum can miss by itself.
struct Kahan {
  double sum = 0.0, carry = 0.0;
  void add(double x) {
    const double y = x - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

}  // namespace

std::pair<std::vector<double>, std::vector<double>> gauss_legendre_01(int m) {
  if (m < 1)
    throw std::invalid_argument("gauss_legendre_01: requires m >= 1, got " +
                                std::to_string(m));
  // Golub-Welsch: nodes are eigenvalues of the Jacobi matrix, weights come
  // from the first component of the (normalized) eigenvectors.
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(m, m);
  for (int k = 1; k < m; ++k) {
    const double b = k / std::sqrt(4.0 * k * k - 1.0);
    jacobi(k, k - 1) = b;
    jacobi(k - 1, k) = b;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jacobi);
  std::vector<double> x(m), w(m);
  for (int i = 0; i < m; ++i) {
    x[i] = 0.5 * (es.eigenvalues()(i) + 1.0);  // [-1,1] -> [0,1]
    const double v0 = es.eigenvectors()(0, i);
    w[i] = v0 * v0;  // = 2 v0^2 on [-1,1], halved by the interval map
  }
  return {std::move(x), std::move(w)};
}

QuadratureRule build_tensor_rule(int n, int radial_count, int angular_count) {
  require_dim(n, "build_tensor_rule");
  if (n == 3)
    throw std::invalid_argument(
        "build_tensor_rule: no tensor sphere rule for n=3; use build_mc_rule");
  if (radial_count < 1 || angular_count < 1)
    throw std::invalid_argument("build_tensor_rule: counts must be >= 1");

  QuadratureRule rule;
  rule.n_ = n;
  rule.kind_ = RuleKind::tensor;
  rule.angular_ = angular_count;

  // Radius via r = 1-(1-x)^2: clusters nodes toward r=1 and turns
  // (1-r^2)^t factors with half-integer t into analytic integrands (the
  // Jacobian 2(1-x)dx supplies exactly the (1-r)^{1/2} that t=-1/2 costs).
  auto [xs, xw] = gauss_legendre_01(radial_count);
  struct RadialNode {
    double r, w, omsq;
  };
  std::vector<RadialNode> radial(radial_count);
  for (int i = 0; i < radial_count; ++i) {
    const double omx = 1.0 - xs[i];
    const double r = 1.0 - omx * omx;  // 1-r = (1-x)^2 exactly
    const double jac = 2.0 * omx;
    double rpow = 2.0 * n;  // 2n r^{2n-1}
    for (int k = 0; k < 2 * n - 1; ++k) rpow *= r;
    radial[i] = {r, xw[i] * rpow * jac, omx * omx * (1.0 + r)};
  }

  if (n == 1) {
    rule.nodes_.reserve(radial_count * angular_count);
    for (const RadialNode& rn : radial) {
      for (int j = 0; j < angular_count; ++j) {
        const double theta = 2.0 * M_PI * j / angular_count;
        rule.nodes_.emplace_back(
            Complex(rn.r * std::cos(theta), rn.r * std::sin(theta)));
        rule.weights_.push_back(rn.w / angular_count);
        rule.omsq_.push_back(rn.omsq);
      }
    }
  } else {
    // Hopf coordinates on S^3: zeta = (sqrt(1-u) e^{i phi1}, sqrt(u) e^{i phi2}),
    // dsigma = du dphi1 dphi2 / (2 pi)^2 exactly.
    auto [us, uw] = gauss_legendre_01(angular_count);
    const int K = angular_count;
    rule.nodes_.reserve(static_cast<std::size_t>(radial_count) * K * K * K);
    for (const RadialNode& rn : radial) {
      for (int iu = 0; iu < K; ++iu) {
        const double s1 = std::sqrt(1.0 - us[iu]);
        const double s2 = std::sqrt(us[iu]);
        const double w_dir = rn.w * uw[iu] / (K * K);
        for (int j1 = 0; j1 < K; ++j1) {
          const double p1 = 2.0 * M_PI * j1 / K;
          const Complex z1(rn.r * s1 * std::cos(p1), rn.r * s1 * std::sin(p1));
          for (int j2 = 0; j2 < K; ++j2) {
            const double p2 = 2.0 * M_PI * j2 / K;
            rule.nodes_.emplace_back(
                z1, Complex(rn.r * s2 * std::cos(p2), rn.r * s2 * std::sin(p2)));
            rule.weights_.push_back(w_dir);
            rule.omsq_.push_back(rn.omsq);
          }
        }
      }
    }
  }

  auto [deg, err] = run_moment_selftest(rule, n == 1 ? 40 : 24);
  rule.exactness_degree_ = deg;
  rule.worst_moment_error_ = err;
  return rule;
}

QuadratureRule build_mc_rule(int n, int count, std::uint64_t seed) {
  require_dim(n, "build_mc_rule");
  if (count < 1)
    throw std::invalid_argument("build_mc_rule: count must be >= 1");
  QuadratureRule rule;
  rule.n_ = n;
  rule.kind_ = RuleKind::monte_carlo;
  rule.seed_ = seed;
  std::mt19937_64 gen(seed);
  rule.nodes_.reserve(count);
  const double w = 1.0 / count;
  for (int i = 0; i < count; ++i) {
    Point z = random_ball_point(n, gen);
    while (!z.interior()) z = random_ball_point(n, gen);
    rule.nodes_.push_back(z);
    rule.weights_.push_back(w);
    rule.omsq_.push_back(1.0 - z.norm_sq());
  }
  auto [deg, err] = run_moment_selftest(rule, 8);
  rule.exactness_degree_ = deg;
  rule.worst_moment_error_ = err;
  return rule;
}

std::pair<int, double> run_moment_selftest(const QuadratureRule& rule,
                                           int max_degree) {
  const int n = rule.dim();
  int exact_up_to = -1;
  double worst = 0.0;
  for (int d = 0; d <= max_degree; ++d) {
    double degree_worst = 0.0;
    // Diagonal moments |z^a|^2 with 2|a| = d against the Beta oracle.
    if (d % 2 == 0) {
      for (const MultiIndex& a : multi_indices_of_degree(n, d / 2)) {
        const double oracle = radial_moment(n, d / 2, 0.0) * sphere_moment(n, a);
        Kahan acc;
        for (std::size_t i = 0; i < rule.size(); ++i)
          acc.add(rule.weight(i) * std::norm(a.eval(rule.node(i))));
        degree_worst = std::max(degree_worst, std::abs(acc.sum - oracle));
      }
    } else {
      // Odd total degree: z^a conj(z)^b with a = b + e_1; true moment 0.
      for (const MultiIndex& b : multi_indices_of_degree(n, (d - 1) / 2)) {
        MultiIndex a = b;
        a[0] += 1;
        Kahan re, im;
        for (std::size_t i = 0; i < rule.size(); ++i) {
          const Complex v = rule.weight(i) * a.eval(rule.node(i)) *
                            std::conj(b.eval(rule.node(i)));
          re.add(v.real());
          im.add(v.imag());
        }
        degree_worst =
            std::max(degree_worst, std::abs(Complex(re.sum, im.sum)));
      }
    }
    if (degree_worst > 1e-10) break;
    exact_up_to = d;
    worst = std::max(worst, degree_worst);
  }
  return {std::max(exact_up_to, 0), worst};
}

double integrate(const QuadratureRule& rule, const RealIntegrand& f) {
  Kahan acc;
  for (std::size_t i = 0; i < rule.size(); ++i)
    acc.add(rule.weight(i) * f(rule.node(i), rule.one_minus_sq(i)));
  return acc.sum;
}

Complex integrate(const QuadratureRule& rule, const ComplexIntegrand& f) {
  Kahan re, im;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const Complex v = rule.weight(i) * f(rule.node(i), rule.one_minus_sq(i));
    re.add(v.real());
    im.add(v.imag());
  }
  return {re.sum, im.sum};
}

double lp_norm(const ComplexIntegrand& f, double p, const WeightedMeasure& mu,
               const QuadratureRule& rule) {
  if (p <= 0.0)
    throw std::invalid_argument("lp_norm: requires p > 0, got " +
                                std::to_string(p));
  if (mu.dim() != rule.dim())
    throw std::invalid_argument("lp_norm: measure/rule dimension mismatch");
  Kahan acc;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const double omsq = rule.one_minus_sq(i);
    acc.add(rule.weight(i) * mu.density(omsq) *
            std::pow(std::abs(f(rule.node(i), omsq)), p));
  }
  return std::pow(acc.sum, 1.0 / p);
}

}  // namespace berglab
