#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>

#include "berglab/lattice.hpp"
#include "berglab/metric.hpp"
#include "berglab/moebius.hpp"
#include "berglab/rng.hpp"
#include "runner/experiments.hpp"
#include "runner/parallel.hpp"

namespace berglab {

namespace {

/// z = r * e_1 in one variable.
Point disk_point(double r) { return Point(Complex(r, 0.0)); }

}  // namespace

/// E1: the two automorphism identities, metric invariance, and the geodesic
/// midpoint, on seeded random triples in every dimension.
RunReport run_geometry_identities(const ExperimentConfig& cfg,
                                  const RunContext& ctx) {
  RunReport rep;
  auto csv = open_artifact(ctx, rep, "identities.csv");
  csv << "n,triples,involution_worst,one_minus_sq_worst,beta_invariance_worst\n";

  double winv = 0.0, wsq = 0.0, wbeta = 0.0;
  for (int n = 1; n <= 3; ++n) {
    const std::size_t triples = static_cast<std::size_t>(cfg.samples);
    std::vector<double> inv(triples), sq(triples), bet(triples);
    parallel_for(triples, ctx.threads, [&](std::size_t i) {
      std::mt19937_64 gen(subseed(subseed(cfg.seed, n), i));
      const Point a = random_ball_point(n, gen, cfg.max_modulus);
      const Point z = random_ball_point(n, gen, cfg.max_modulus);
      const Point w = random_ball_point(n, gen, cfg.max_modulus);
      const MoebiusMap phi(a);
      const Point pz = phi.apply(z);
      inv[i] = sup_dist(phi.apply(pz), z);
      sq[i] = std::abs((1.0 - pz.norm_sq()) - one_minus_phi_sq(a, z));
      bet[i] = std::abs(bergman_distance(pz, phi.apply(w)) -
                        bergman_distance(z, w));
    });
    const double ni = *std::max_element(inv.begin(), inv.end());
    const double ns = *std::max_element(sq.begin(), sq.end());
    const double nb = *std::max_element(bet.begin(), bet.end());
    csv << n << ',' << triples << ',' << fmt17(ni) << ',' << fmt17(ns) << ','
        << fmt17(nb) << '\n';
    winv = std::max(winv, ni);
    wsq = std::max(wsq, ns);
    wbeta = std::max(wbeta, nb);
  }

  const Point mid = geodesic_point(disk_point(0.0), disk_point(0.8), 0.5);
  const double midpoint_dev = sup_dist(mid, disk_point(0.5));

  rep.check_le("involution_worst", winv, 1e-12);
  rep.check_le("one_minus_sq_identity_worst", wsq, 1e-12);
  rep.check_le("beta_invariance_worst", wbeta, 1e-10);
  rep.check_le("geodesic_midpoint_dev", midpoint_dev, 1e-10);
  return rep;
}

/// E2: certified lattice separation, empirical covering of the 0.99-ball,
/// and the overlap multiplicity compared against the half-radius lattice.
RunReport run_lattice_certification(const ExperimentConfig& cfg,
                                    const RunContext& ctx) {
  RunReport rep;
  auto csv = open_artifact(ctx, rep, "lattices.csv");
  csv << "r,size,separation,separation_required,uncovered,multiplicity\n";

  const double mm = cfg.max_modulus;
  int sweep_index = 0;
  for (double r : {0.3, 0.5}) {
    const Lattice lat = build_lattice(1, r, mm);
    const Lattice half = build_lattice(1, r / 2.0, mm);

    // Covering scan: uniform samples of {|z| <= max_modulus}.
    const auto count_uncovered = [&](const Lattice& l, int salt) {
      std::mt19937_64 gen(subseed(cfg.seed, salt + sweep_index));
      int misses = 0;
      for (int i = 0; i < cfg.samples; ++i)
        if (!l.covered(random_ball_point(1, gen, mm))) ++misses;
      return misses;
    };
    const int uncovered = count_uncovered(lat, 100);
    const int uncovered_half = count_uncovered(half, 150);

    const int mult = covering_multiplicity(lat, 4.0, cfg.samples,
                                           subseed(cfg.seed, 200 + sweep_index));
    const int mult_half = covering_multiplicity(
        half, 4.0, cfg.samples, subseed(cfg.seed, 300 + sweep_index));

    csv << fmt17(lat.r()) << ',' << lat.size() << ',' << fmt17(lat.separation())
        << ',' << fmt17(lat.r() / 2.0) << ',' << uncovered << ',' << mult
        << '\n';
    csv << fmt17(half.r()) << ',' << half.size() << ','
        << fmt17(half.separation()) << ',' << fmt17(half.r() / 2.0) << ','
        << uncovered_half << ',' << mult_half << '\n';

    char tag[32];
    std::snprintf(tag, sizeof(tag), "r%g", r);
    auto centers = open_artifact(ctx, rep, std::string("centers_") + tag + ".csv");
    centers << "index,re,im,shell\n";
    for (std::size_t k = 0; k < lat.size(); ++k)
      centers << k << ',' << fmt17(lat.center(k)[0].real()) << ','
              << fmt17(lat.center(k)[0].imag()) << ',' << lat.shell(k) << '\n';

    rep.check_ge(std::string("separation_") + tag, lat.separation(), r / 2.0);
    rep.check_le(std::string("uncovered_") + tag,
                 static_cast<double>(uncovered), 0.0);
    rep.check_le(std::string("multiplicity_shift_") + tag,
                 std::abs(static_cast<double>(mult - mult_half)), 1.0);
    ++sweep_index;
  }
  return rep;
}

}  // namespace berglab
