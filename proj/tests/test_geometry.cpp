#include <cmath>
#include <random>

#include "berglab/lattice.hpp"
#include "berglab/metric.hpp"
#include "berglab/moebius.hpp"
#include "berglab/point.hpp"
#include "berglab/rng.hpp"
#include "doctest.h"
#include "support/oracles.hpp"

using namespace berglab;
namespace oracle = berglab::testing;

TEST_CASE("mobius: base point zero negates") {
  MoebiusMap phi(Point::zero(2));
  const Point z(Complex(0.3, 0.1), Complex(-0.2, 0.4));
  const Point w = phi.apply(z);
  CHECK(sup_dist(w, -z) == 0.0);
}

TEST_CASE("mobius: interchanges base point and origin") {
  const Point a(Complex(0.5, 0.0));
  MoebiusMap phi(a);
  CHECK(phi.apply(a).norm() < 1e-15);
  CHECK(sup_dist(phi.apply(Point::zero(1)), a) < 1e-15);
}

TEST_CASE("mobius: two-point identity for 1-|phi_a(z)|^2") {
  std::mt19937_64 gen(2026);
  for (int trial = 0; trial < 200; ++trial) {
    const Point a = random_ball_point(2, gen, 0.95);
    const Point z = random_ball_point(2, gen, 0.95);
    MoebiusMap phi(a);
    const double direct = 1.0 - phi.apply(z).norm_sq();
    CHECK(direct == doctest::Approx(one_minus_phi_sq(a, z)).epsilon(1e-12));
  }
}

TEST_CASE("mobius: involution over all dimensions") {
  std::mt19937_64 gen(7);
  for (int n = 1; n <= 3; ++n) {
    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
      const Point a = random_ball_point(n, gen, 0.95);
      const Point z = random_ball_point(n, gen, 0.95);
      MoebiusMap phi(a);
      worst = std::max(worst, sup_dist(phi.apply(phi.apply(z)), z));
    }
    CHECK(worst <= 1e-12);
  }
}

TEST_CASE("mobius: derivative at zero against finite differences") {
  std::mt19937_64 gen(11);
  for (int n = 1; n <= 3; ++n) {
    const Point a = random_ball_point(n, gen, 0.8);
    MoebiusMap phi(a);
    // Holomorphic Jacobian J_ij = d(phi_a)_i / dw_j at w=0, by central
    // differences on each component.
    std::vector<Point> rows;
    for (int i = 0; i < n; ++i)
      rows.push_back(oracle::fd_holomorphic_gradient(
          [&](const Point& w) { return phi.apply(w)[i]; }, Point::zero(n)));
    const Point g = random_ball_point(n, gen, 0.9);
    const Point jt = phi.derivative_at_zero_transpose(g);
    for (int i = 0; i < n; ++i) {
      Complex want = 0.0;
      for (int j = 0; j < n; ++j) want += rows[j][i] * g[j];
      CHECK(std::abs(jt[i] - want) < 1e-8);
    }
  }
}

TEST_CASE("mobius: real jacobian against finite differences") {
  std::mt19937_64 gen(13);
  for (int n = 1; n <= 3; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      const Point a = random_ball_point(n, gen, 0.7);
      const Point z = random_ball_point(n, gen, 0.7);
      MoebiusMap phi(a);
      const double fd = oracle::fd_real_jacobian(
          [&](const Point& w) { return phi.apply(w); }, z);
      CHECK(phi.real_jacobian(z) == doctest::Approx(fd).epsilon(1e-6));
    }
  }
}

TEST_CASE("metric: coincidence, explicit value, boundary guard") {
  const Point z(Complex(0.3, -0.2));
  CHECK(bergman_distance(z, z) == 0.0);
  CHECK(bergman_distance(Point(Complex(0.0)), Point(Complex(0.5))) ==
        doctest::Approx(0.5 * std::log(3.0)).epsilon(1e-12));
  CHECK_THROWS_AS(bergman_distance(Point(Complex(1.0 - 1e-15)), z),
                  std::domain_error);
}

TEST_CASE("metric: moebius invariance") {
  std::mt19937_64 gen(17);
  for (int n = 1; n <= 2; ++n) {
    for (int trial = 0; trial < 300; ++trial) {
      const Point a = random_ball_point(n, gen, 0.95);
      const Point z = random_ball_point(n, gen, 0.95);
      const Point w = random_ball_point(n, gen, 0.95);
      MoebiusMap phi(a);
      const double lhs = bergman_distance(phi.apply(z), phi.apply(w));
      CHECK(std::abs(lhs - bergman_distance(z, w)) < 1e-10);
    }
  }
}

TEST_CASE("metric: symmetry and triangle inequality on samples") {
  std::mt19937_64 gen(19);
  for (int trial = 0; trial < 500; ++trial) {
    const Point z = random_ball_point(2, gen, 0.95);
    const Point w = random_ball_point(2, gen, 0.95);
    const Point u = random_ball_point(2, gen, 0.95);
    CHECK(std::abs(bergman_distance(z, w) - bergman_distance(w, z)) <= 1e-12);
    CHECK(bergman_distance(z, w) <=
          bergman_distance(z, u) + bergman_distance(u, w) + 1e-10);
  }
}

TEST_CASE("geodesic: endpoints, radial midpoint, parameter guard") {
  const Point z(Complex(0.0));
  const Point w(Complex(0.8));
  CHECK(sup_dist(geodesic_point(z, w, 0.0), z) == 0.0);
  CHECK(sup_dist(geodesic_point(z, w, 1.0), w) == 0.0);
  // tanh(artanh(0.8)/2) = 0.5 exactly.
  CHECK(std::abs(geodesic_point(z, w, 0.5)[0] - Complex(0.5)) < 1e-12);
  CHECK_THROWS_AS(geodesic_point(z, w, 1.5), std::invalid_argument);
}

TEST_CASE("geodesic: additivity of arc length") {
  std::mt19937_64 gen(23);
  for (int n = 1; n <= 3; ++n) {
    for (int trial = 0; trial < 100; ++trial) {
      const Point z = random_ball_point(n, gen, 0.9);
      const Point w = random_ball_point(n, gen, 0.9);
      const double len = bergman_distance(z, w);
      const Point third = geodesic_point(z, w, 1.0 / 3.0);
      CHECK(std::abs(bergman_distance(z, third) - len / 3.0) < 1e-9);
      const double s = 0.2, t = 0.7;
      const double seg = bergman_distance(geodesic_point(z, w, s),
                                          geodesic_point(z, w, t));
      CHECK(std::abs(seg - (t - s) * len) < 1e-9);
    }
  }
}

TEST_CASE("lattice: parameter validation") {
  CHECK_THROWS_AS(build_lattice(1, 1.0, 0.9), std::invalid_argument);
  CHECK_THROWS_AS(build_lattice(1, 0.5, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(build_lattice(4, 0.5, 0.9), std::invalid_argument);
}

TEST_CASE("lattice: certified separation and covering, n=1 r=0.5") {
  const Lattice lat = build_lattice(1, 0.5, 0.99);
  CHECK(lat.separation() >= 0.25);
  CHECK(lat.certify_separation() == lat.separation());

  std::mt19937_64 gen(31);
  int uncovered = 0;
  for (int s = 0; s < 10000; ++s)
    if (!lat.covered(random_ball_point(1, gen, 0.99))) ++uncovered;
  CHECK(uncovered == 0);
}

TEST_CASE("lattice: disjoint cores give multiplicity one") {
  const Lattice lat = build_lattice(1, 0.5, 0.99);
  CHECK(covering_multiplicity(lat, 0.25, 2000, 99) == 1);
}

TEST_CASE("lattice: factor-4 overlap constants as measured") {
  // Frozen from a direct run of the certifier (seed 777, 10^4 samples).
  // The overlap constant is finite but genuinely r-dependent at these radii:
  // a Bergman ball of radius 4r holds ~sinh^2(4r)/sinh^2(r/4) separated
  // centers, which only flattens out in the r->0 Euclidean limit.
  const Lattice lat_half = build_lattice(1, 0.5, 0.99);
  CHECK(covering_multiplicity(lat_half, 4.0, 10000, 777) == 346);
  const Lattice lat_quarter = build_lattice(1, 0.25, 0.99);
  CHECK(covering_multiplicity(lat_quarter, 4.0, 10000, 777) == 145);
}

TEST_CASE("lattice: doubling samples is monotone in the max") {
  const Lattice lat = build_lattice(1, 0.5, 0.9);
  const int m1 = covering_multiplicity(lat, 4.0, 500, 1234);
  const int m2 = covering_multiplicity(lat, 4.0, 1000, 1234);
  CHECK(m2 >= m1);  // same seed: the first 500 samples are a prefix
}

TEST_CASE("lattice: n=2 shell packing keeps its invariants") {
  const Lattice lat = build_lattice(2, 0.9, 0.8, 42, 2000);
  CHECK(lat.separation() >= 0.45);
  std::mt19937_64 gen(37);
  for (int s = 0; s < 2000; ++s)
    CHECK(lat.covered(random_ball_point(2, gen, 0.8)));
}
