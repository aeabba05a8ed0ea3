#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <string_view>

#include "berglab/derivatives.hpp"
#include "berglab/lattice.hpp"
#include "berglab/oscillation.hpp"
#include "berglab/rng.hpp"
#include "runner/experiments.hpp"

namespace berglab {

namespace {

Point disk_point(double re, double im = 0.0) {
  return Point(Complex(re, im));
}

}  // namespace

/// E9: oscillation-space norm estimates and the averaged/oscillatory
/// decomposition for three model symbols, with the boundary decay profiles
/// that separate vanishing from merely bounded oscillation.
RunReport run_oscillation_spaces(const ExperimentConfig& cfg,
                                 const RunContext& ctx) {
  RunReport rep;
  const QuadratureRule rule = build_tensor_rule(1, cfg.radial, cfg.angular);
  const Lattice lat = build_lattice(1, cfg.lattice_r, cfg.max_modulus);

  auto norms_csv = open_artifact(ctx, rep, "norms.csv");
  norms_csv << "symbol,bmo,bo,ba,component_over_bmo\n";
  auto prof_csv = open_artifact(ctx, rep, "profiles.csv");
  prof_csv << "symbol,shell,weighted_mo\n";

  const Point sample_points[] = {disk_point(0.0), disk_point(0.3),
                                 disk_point(-0.2, 0.55), disk_point(0.0, 0.8)};

  double constant_bound = 0.0;  // the K with max(bo, ba) <= K * bmo
  double additivity_worst = 0.0;
  bool finite = true;
  std::vector<std::pair<double, double>> radial_profile, real_part_profile;
  for (const char* id : {"beta_origin", "re_coordinate", "one_minus_modsq"}) {
    const Symbol f = make_symbol(id, 1);
    const SpaceEstimate est = space_norm_estimate(f, cfg.p, cfg.gamma,
                                                  cfg.lattice_r, lat, rule);
    const double component = std::max(est.bo_norm, est.ba_norm);
    const double ratio = component / est.bmo_norm;
    norms_csv << id << ',' << fmt17(est.bmo_norm) << ',' << fmt17(est.bo_norm)
              << ',' << fmt17(est.ba_norm) << ',' << fmt17(ratio) << '\n';
    for (const auto& [shell, mo] : est.decay_profile)
      prof_csv << id << ',' << fmt17(shell) << ',' << fmt17(mo) << '\n';

    finite = finite && std::isfinite(est.bmo_norm) &&
             std::isfinite(est.bo_norm) && std::isfinite(est.ba_norm);
    constant_bound = std::max(constant_bound, ratio);
    if (std::string_view(id) == "one_minus_modsq")
      radial_profile = est.decay_profile;
    if (std::string_view(id) == "re_coordinate")
      real_part_profile = est.decay_profile;

    const BmoDecomposition dec =
        decompose_bmo(f, cfg.lattice_r, cfg.sigma, rule);
    for (const Point& z : sample_points) {
      const Complex whole = f.eval(z);
      const Complex parts = dec.averaged(z) + dec.oscillatory(z);
      additivity_worst = std::max(additivity_worst, std::abs(whole - parts));
      finite = finite && std::isfinite(parts.real()) &&
               std::isfinite(parts.imag());
    }
  }

  rep.check_true("norm_estimates_finite", finite);
  rep.check_le("decomposition_constant", constant_bound, 50.0);
  rep.check_le("decomposition_additivity_worst", additivity_worst, 1e-12);

  bool radial_monotone = true;
  for (std::size_t k = 0; k + 1 < radial_profile.size(); ++k)
    radial_monotone =
        radial_monotone && radial_profile[k + 1].second < radial_profile[k].second;
  rep.check_true("radial_profile_monotone", radial_monotone);
  rep.check_le("radial_profile_boundary_ratio",
               radial_profile.back().second / radial_profile.front().second,
               0.1);
  rep.check_ge("real_part_profile_stall",
               real_part_profile.back().second / real_part_profile.front().second,
               0.5);
  return rep;
}

/// E10: tangential gradients obey a maximum principle, so nonconstant
/// holomorphic symbols cannot let the shell sups decay; plus the closed
/// one-variable identity for the invariant gradient.
RunReport run_tangential_principle(const ExperimentConfig& cfg,
                                   const RunContext& ctx) {
  RunReport rep;
  const std::vector<double> shells = {0.6, 0.8, 0.9, 0.95, 0.99};

  auto csv = open_artifact(ctx, rep, "tangential.csv");
  csv << "symbol,shell,sup_tangential\n";
  for (const char* id : {"coordinate", "coordinate_product"}) {
    const Symbol f = make_symbol(id, 2);
    const auto profile = max_principle_probe(f, shells);
    for (const auto& [shell, sup] : profile)
      csv << id << ',' << fmt17(shell) << ',' << fmt17(sup) << '\n';
    rep.check_ge(std::string(id) + "_shell_ratio",
                 profile.back().second / profile.front().second, 0.5);
  }

  {
    const auto profile = max_principle_probe(make_symbol("const", 2), shells);
    double sup_max = 0.0;
    for (const auto& [shell, sup] : profile) {
      csv << "const," << fmt17(shell) << ',' << fmt17(sup) << '\n';
      sup_max = std::max(sup_max, sup);
    }
    rep.check_le("constant_shell_sup_max", sup_max, 0.0);
  }

  {
    // (1-|z|^2)|f'(z)| == |grad(f o phi_z)(0)| in one variable.
    MultiIndex cube;
    cube[0] = 3;
    const Symbol f =
        Symbol::monomial(1, 1.0, cube) + Symbol::coordinate(1, 0) * 2.0;
    std::mt19937_64 gen(subseed(cfg.seed, 7));
    double worst = 0.0;
    for (int i = 0; i < cfg.samples; ++i) {
      const Point z = random_ball_point(1, gen, 0.95);
      const GradientReport g = gradient(f, z);
      const double direct = (1.0 - z.norm_sq()) * std::abs(g.grad[0]);
      worst = std::max(worst,
                       std::abs(invariant_gradient_norm(f, z) - direct));
    }
    rep.check_le("invariant_gradient_identity_worst", worst, 1e-10);
  }
  return rep;
}

}  // namespace berglab
