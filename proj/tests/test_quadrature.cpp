#include <cmath>
#include <random>

#include "berglab/lattice.hpp"
#include "berglab/measure.hpp"
#include "berglab/moments.hpp"
#include "berglab/quadrature.hpp"
#include "berglab/schur.hpp"
#include "doctest.h"
#include "support/oracles.hpp"

using namespace berglab;
namespace oracle = berglab::testing;

namespace {
// Shared boundary-grade n=1 rule; building it once keeps the suite fast.
const QuadratureRule& deep_rule() {
  static const QuadratureRule rule = build_tensor_rule(1, 256, 2048);
  return rule;
}
const ComplexIntegrand kOne = [](const Point&, double) { return Complex(1.0); };
}  // namespace

TEST_CASE("measure: normalization constants") {
  CHECK(normalization_constant(1, 0.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(normalization_constant(1, 1.0) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(normalization_constant(2, 1.0) == doctest::Approx(3.0).epsilon(1e-14));
  CHECK_THROWS_AS(normalization_constant(1, -1.0), std::domain_error);
  // Independent cross-check: c_alpha = 1 / integral (1-|z|^2)^alpha dv by
  // composite Simpson on the radial integral.
  for (double alpha : {0.5, 2.5}) {
    const double mass = oracle::simpson(
        [&](double r) { return std::pow(1.0 - r * r, alpha) * 2.0 * r; }, 0.0,
        1.0, 4000);
    // (1-r^2)^{1/2} limits composite Simpson to ~h^{3/2} convergence, so the
    // oracle is only good to ~1e-6 here; that still pins the Gamma
    // arithmetic, where a real mistake shows up at percent scale.
    CHECK(normalization_constant(1, alpha) ==
          doctest::Approx(1.0 / mass).epsilon(1e-5));
  }
}

TEST_CASE("measure: sigma convention carries no constant") {
  const WeightedMeasure mu = WeightedMeasure::sigma_weight(1, 1.0);
  CHECK(!mu.normalized());
  CHECK(mu.density(0.5) == 0.5);
  const WeightedMeasure nu = WeightedMeasure::standard(1, 1.0);
  CHECK(nu.normalized());
  CHECK(nu.density(0.5) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("quadrature: radial moments of the 64x64 rule") {
  const QuadratureRule rule = build_tensor_rule(1, 64, 64);
  for (int m = 0; m <= 20; ++m) {
    const double value =
        integrate(rule, RealIntegrand([&](const Point& z, double) {
                    return std::pow(z.norm_sq(), m);
                  }));
    CHECK(std::abs(value - 1.0 / (m + 1)) < 1e-10);
  }
  CHECK(rule.exactness_degree() == 40);
  CHECK(rule.worst_moment_error() <= 1e-10);
}

TEST_CASE("quadrature: unit mass for every rule kind") {
  const RealIntegrand one = [](const Point&, double) { return 1.0; };
  CHECK(integrate(build_tensor_rule(1, 32, 48), one) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(integrate(build_tensor_rule(2, 16, 8), one) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(integrate(build_mc_rule(3, 5000, 7), one) ==
        doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("quadrature: n=2 tensor rule self-test") {
  const QuadratureRule rule = build_tensor_rule(2, 24, 12);
  CHECK(rule.exactness_degree() == 24);
  CHECK(rule.worst_moment_error() <= 1e-10);
}

TEST_CASE("quadrature: monte carlo rules are seed-reproducible") {
  const QuadratureRule a = build_mc_rule(3, 2000, 424242);
  const QuadratureRule b = build_mc_rule(3, 2000, 424242);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(sup_dist(a.node(i), b.node(i)) == 0.0);
    CHECK(a.weight(i) == b.weight(i));
  }
  const QuadratureRule c = build_mc_rule(3, 2000, 424243);
  CHECK(sup_dist(a.node(0), c.node(0)) > 0.0);
}

TEST_CASE("quadrature: gauss-legendre sanity") {
  auto [x, w] = gauss_legendre_01(12);
  double mass = 0.0, mean = 0.0;
  for (int i = 0; i < 12; ++i) {
    mass += w[i];
    mean += w[i] * x[i];
  }
  CHECK(mass == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(mean == doctest::Approx(0.5).epsilon(1e-14));
  CHECK_THROWS_AS(gauss_legendre_01(0), std::invalid_argument);
}

TEST_CASE("lp_norm: constants, the linear monomial, weighted monomials") {
  const QuadratureRule rule = build_tensor_rule(1, 96, 96);
  CHECK(lp_norm(kOne, 2.0, WeightedMeasure::standard(1, 0.0), rule) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(lp_norm(kOne, 3.7, WeightedMeasure::standard(1, 1.5), rule) ==
        doctest::Approx(1.0).epsilon(1e-10));
  const ComplexIntegrand id = [](const Point& z, double) { return z[0]; };
  CHECK(lp_norm(id, 2.0, WeightedMeasure::standard(1, 0.0), rule) ==
        doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));

  // z^m against the Simpson radial oracle, including the constant.
  for (double alpha : {0.0, 1.0, 2.5}) {
    const double c = 1.0 / oracle::simpson(
                               [&](double r) {
                                 return std::pow(1.0 - r * r, alpha) * 2.0 * r;
                               },
                               0.0, 1.0, 4000);
    for (int m = 1; m <= 10; m += 3) {
      const ComplexIntegrand f = [&](const Point& z, double) {
        Complex v = 1.0;
        for (int k = 0; k < m; ++k) v *= z[0];
        return v;
      };
      const double sq = oracle::simpson(
          [&](double r) {
            return c * std::pow(r, 2 * m) * std::pow(1.0 - r * r, alpha) *
                   2.0 * r;
          },
          0.0, 1.0, 4000);
      CHECK(lp_norm(f, 2.0, WeightedMeasure::standard(1, alpha), rule) ==
            doctest::Approx(std::sqrt(sq)).epsilon(1e-8));
    }
  }
  CHECK_THROWS_AS(lp_norm(kOne, 0.0, WeightedMeasure::standard(1, 0.0), rule),
                  std::invalid_argument);
}

TEST_CASE("moments: closed forms against direct integration") {
  // radial_moment against Simpson, sphere_moment against the n=2 rule.
  for (int d : {0, 3}) {
    for (double tau : {0.0, 1.5}) {
      const double direct = oracle::simpson(
          [&](double r) {
            return 4.0 * std::pow(r, 3 + 2 * d) * std::pow(1.0 - r * r, tau);
          },
          0.0, 1.0, 4000);
      CHECK(radial_moment(2, d, tau) == doctest::Approx(direct).epsilon(1e-8));
    }
  }
  const QuadratureRule rule = build_tensor_rule(2, 20, 10);
  MultiIndex m;
  m[0] = 2;
  m[1] = 1;
  const double via_rule =
      integrate(rule, RealIntegrand([&](const Point& z, double) {
                  return std::norm(m.eval(z));
                }));
  CHECK(via_rule == doctest::Approx(radial_moment(2, 3, 0.0) *
                                    sphere_moment(2, m))
                        .epsilon(1e-12));
  // monomial_sq_norm at n=1, m=4, alpha=1: 4! Gamma(3)/Gamma(7) = 1/15.
  MultiIndex m1;
  m1[0] = 4;
  CHECK(monomial_sq_norm(1, m1, 1.0) ==
        doctest::Approx(1.0 / 15.0).epsilon(1e-12));
}

TEST_CASE("forelli-rudin probe: boundedness across moduli") {
  CHECK(forelli_rudin_probe(1, 0.0, 1.0, 0.0, Point(Complex(0.0)),
                            deep_rule()) ==
        doctest::Approx(1.0).epsilon(1e-10));
  // d=1, t=1/2 at the origin has the closed value pi/6: integrating by parts,
  // int 2r sqrt(1-r^2) artanh(r) dr = (2/3) int sqrt(1-r^2) dr = pi/6.
  CHECK(forelli_rudin_probe(1, 0.5, 1.0, 1.0, Point(Complex(0.0)),
                            deep_rule()) ==
        doctest::Approx(M_PI / 6.0).epsilon(1e-10));

  double lo = 1e300, hi = 0.0;
  for (double m : {0.0, 0.5, 0.9, 0.99}) {
    const double v =
        forelli_rudin_probe(1, 0.0, 1.0, 0.0, Point(Complex(m)), deep_rule());
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  CHECK(hi / lo < 3.0);  // measured 1.2493 at |z|=0.99 against 1 at 0

  for (double m : {0.0, 0.5, 0.9, 0.99}) {
    const double v =
        forelli_rudin_probe(1, 0.5, 1.0, 1.0, Point(Complex(m)), deep_rule());
    CHECK(v > 0.0);
    CHECK(v < 1.05);  // measured max 0.98696 at |z|=0.99
  }
  CHECK_THROWS_AS(
      forelli_rudin_probe(1, -1.0, 1.0, 0.0, Point(Complex(0.0)), deep_rule()),
      std::invalid_argument);
  CHECK_THROWS_AS(
      forelli_rudin_probe(1, 0.0, 0.0, 0.0, Point(Complex(0.0)), deep_rule()),
      std::invalid_argument);
}

TEST_CASE("separated sum probe: finite, dominated, heavy boundary tail") {
  const Lattice lat = build_lattice(1, 0.5, 0.99);
  const double v0 = separated_sum_probe(lat, 1.5, 3.0, Point(Complex(0.0)));
  CHECK(v0 == doctest::Approx(41.420262453930107).epsilon(1e-12));
  for (double m : {0.5, 0.9, 0.99})
    CHECK(separated_sum_probe(lat, 1.5, 3.0, Point(Complex(m))) <= 10.0 * v0);

  // The z=0 tail is governed by t alone: sum (1-|a_k|^2)^t over |a_k| > R
  // behaves like int_R (1-r^2)^{t-2} 2r dr, so at t=1.5 the centers beyond
  // |a|=0.9 still carry ~43% of the sum.  Frozen from direct summation.
  double full = 0.0, trunc = 0.0;
  for (const Point& a : lat.centers()) {
    const double term = std::pow(1.0 - a.norm_sq(), 1.5);
    full += term;
    if (a.norm() <= 0.9) trunc += term;
  }
  CHECK((full - trunc) / full == doctest::Approx(0.426).epsilon(0.02));

  CHECK_THROWS_AS(separated_sum_probe(lat, 1.0, 3.0, Point(Complex(0.0))),
                  std::invalid_argument);
  CHECK_THROWS_AS(separated_sum_probe(lat, 1.5, 1.5, Point(Complex(0.0))),
                  std::invalid_argument);
}

TEST_CASE("schur conditions: verdicts and the lambda arithmetic") {
  const BoundednessVerdict yes = schur_conditions(1, 2, 2, 0, 0, 0, 2);
  CHECK(yes.overall);
  CHECK(yes.lambda == 0.0);
  CHECK(yes.conditions_checked.size() == 2);

  const BoundednessVerdict no = schur_conditions(1, 2, 2, 0, 0, 0, 3);
  CHECK(!no.overall);
  CHECK(no.conditions_checked[0].second);   // alpha+1 < p(b+1) still holds
  CHECK(!no.conditions_checked[1].second);  // c <= n+1+b+lambda fails

  const BoundednessVerdict heavy = schur_conditions(1, 2, 2, 6, 0, 0, 2);
  CHECK(heavy.lambda == doctest::Approx(-3.0));
  CHECK(!heavy.overall);

  CHECK_THROWS_AS(schur_conditions(1, 1.0, 2, 0, 0, 0, 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(schur_conditions(1, 3, 2, 0, 0, 0, 2),
                  std::invalid_argument);
}

TEST_CASE("integral operators: S and T reference values") {
  const QuadratureRule rule = build_tensor_rule(1, 128, 256);
  const Point origin(Complex(0.0));
  CHECK(std::real(apply_integral_operator(OperatorKind::S, 0, 2, kOne, origin,
                                          rule)) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::real(apply_integral_operator(OperatorKind::S, 1, 0, kOne,
                                          Point(Complex(0.7, 0.1)), rule)) ==
        doctest::Approx(0.5).epsilon(1e-12));
  // T_{0,2} 1 (0) = int beta(0,w) dv(w) = [(r^2-1) artanh r + r]_0^1 = 1;
  // the log factor costs a few digits of the radial rule.
  CHECK(std::real(apply_integral_operator(OperatorKind::T, 0, 2, kOne, origin,
                                          rule)) ==
        doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("integral operators: T dominated by the shifted S with loss") {
  // |T_{b,c} f| <= C (1-|z|^2)^{-eps} S_{b-eps,c-2eps}|f| pointwise with
  // eps=0.1; C=2.5 caps the worst constant sup_x artanh(sqrt(1-x)) x^0.1.
  const ComplexIntegrand f = [](const Point& w, double) {
    return Complex(w[0] * w[0]);
  };
  const ComplexIntegrand f_abs = [](const Point& w, double) {
    return Complex(std::abs(w[0] * w[0]));
  };
  for (double m : {0.0, 0.5, 0.9}) {
    const Point z = m == 0.0 ? Point(Complex(0.0)) : Point(Complex(m, 0.05));
    const double tv = std::abs(apply_integral_operator(
        OperatorKind::T, 0.5, 2.2, f, z, deep_rule()));
    const double sv = std::real(apply_integral_operator(
        OperatorKind::S, 0.4, 2.0, f_abs, z, deep_rule()));
    CHECK(tv <= 2.5 * std::pow(1.0 - z.norm_sq(), -0.1) * sv);
  }
}
