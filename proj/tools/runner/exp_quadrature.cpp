#include <algorithm>
#include <cmath>
#include <complex>
#include <random>

#include "berglab/kernels.hpp"
#include "berglab/lattice.hpp"
#include "berglab/measure.hpp"
#include "berglab/moments.hpp"
#include "berglab/oscillation.hpp"
#include "berglab/rng.hpp"
#include "berglab/schur.hpp"
#include "runner/experiments.hpp"
#include "runner/parallel.hpp"

namespace berglab {

namespace {

Point disk_point(double re, double im = 0.0) {
  return Point(Complex(re, im));
}

/// Node counts for the two-variable legs; the tolerances these serve are
/// 1e-6 territory, which this size reaches with margin at |z| <= 0.5.
QuadratureRule two_var_rule() { return build_tensor_rule(2, 48, 24); }

/// Random polynomial with every coefficient uniform in the complex unit
/// square; the reproduction legs only need "generic", not "nice".
Symbol random_polynomial(int n, int degree, std::mt19937_64& gen) {
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  std::vector<SymbolTerm> terms;
  for (const MultiIndex& m : multi_indices_up_to(n, degree)) {
    SymbolTerm term;
    term.coef = Complex(unif(gen), unif(gen));
    term.holo = m;
    terms.push_back(term);
  }
  return Symbol(n, std::move(terms));
}

}  // namespace

/// E3: quadrature monomial moments against the closed radial-Beta x sphere
/// factorization, the measure normalization, and the alpha = 1 constant.
RunReport run_quadrature_moments(const ExperimentConfig& cfg,
                                 const RunContext& ctx) {
  RunReport rep;
  auto csv = open_artifact(ctx, rep, "moments.csv");
  csv << "n,alpha,m1,m2,quadrature,oracle,abs_error\n";

  const double alphas[] = {0.0, 1.0, 2.5};
  for (int n = 1; n <= 2; ++n) {
    const QuadratureRule rule =
        n == 1 ? build_tensor_rule(1, cfg.radial, cfg.angular) : two_var_rule();

    std::vector<MultiIndex> indices;
    for (int d = 0; d <= 20; ++d)
      for (const MultiIndex& m : multi_indices_of_degree(n, d))
        indices.push_back(m);

    double worst_moment = 0.0;
    double worst_volume = 0.0;
    for (double alpha : alphas) {
      const double c = normalization_constant(n, alpha);
      std::vector<double> quad(indices.size()), exact(indices.size());
      parallel_for(indices.size(), ctx.threads, [&](std::size_t i) {
        const MultiIndex m = indices[i];
        quad[i] = integrate(rule, RealIntegrand([&](const Point& w, double omsq) {
          return std::norm(m.eval(w)) * c * std::pow(omsq, alpha);
        }));
        exact[i] = c * radial_moment(n, m.total(), alpha) * sphere_moment(n, m);
      });
      for (std::size_t i = 0; i < indices.size(); ++i) {
        const double err = std::abs(quad[i] - exact[i]);
        csv << n << ',' << fmt17(alpha) << ',' << indices[i][0] << ','
            << indices[i][1] << ',' << fmt17(quad[i]) << ','
            << fmt17(exact[i]) << ',' << fmt17(err) << '\n';
        if (indices[i].total() == 0)
          worst_volume = std::max(worst_volume, err);  // moment of 1 = v_alpha(B_n)
        worst_moment = std::max(worst_moment, err);
      }
    }
    char name[64];
    std::snprintf(name, sizeof(name), "moment_worst_n%d", n);
    rep.check_le(name, worst_moment, 1e-8);
    std::snprintf(name, sizeof(name), "volume_worst_n%d", n);
    rep.check_le(name, worst_volume, 1e-10);

    // c_1 from scratch: the reciprocal of the unnormalized (1-|z|^2) mass.
    const double mass = integrate(
        rule, RealIntegrand([](const Point&, double omsq) { return omsq; }));
    std::snprintf(name, sizeof(name), "c1_dev_n%d", n);
    rep.check_le(name, std::abs(1.0 / mass - (n + 1.0)), 1e-8);
  }
  return rep;
}

/// E4: the projection reproduces polynomials and annihilates conjugates,
/// radial symbols project to their mean, and the kernel-weighted average of
/// the constant 1 stays 1 toward the boundary.
RunReport run_projection_suite(const ExperimentConfig& cfg,
                               const RunContext& ctx) {
  RunReport rep;
  const QuadratureRule rule1 = build_tensor_rule(1, cfg.radial, cfg.angular);

  {
    auto csv = open_artifact(ctx, rep, "reproduction.csv");
    csv << "n,alpha,points,max_modulus,worst_error\n";
    const struct {
      int n;
      double modulus;
      double tol;
    } legs[] = {{1, 0.9, 1e-8}, {2, 0.5, 1e-6}};
    for (const auto& leg : legs) {
      const QuadratureRule& rule = leg.n == 1 ? rule1 : two_var_rule();
      std::mt19937_64 gen(subseed(cfg.seed, 10 + leg.n));
      const Symbol f = random_polynomial(leg.n, 8, gen);
      const KernelParams kp{leg.n, cfg.alpha};
      std::vector<Point> pts(static_cast<std::size_t>(cfg.samples));
      for (auto& z : pts) z = random_ball_point(leg.n, gen, leg.modulus);
      std::vector<double> devs(pts.size());
      parallel_for(pts.size(), ctx.threads, [&](std::size_t i) {
        devs[i] =
            std::abs(project_by_quadrature(kp, f, pts[i], rule) - f.eval(pts[i]));
      });
      const double worst = *std::max_element(devs.begin(), devs.end());
      csv << leg.n << ',' << fmt17(cfg.alpha) << ',' << pts.size() << ','
          << fmt17(leg.modulus) << ',' << fmt17(worst) << '\n';
      char name[48];
      std::snprintf(name, sizeof(name), "reproduction_worst_n%d", leg.n);
      rep.check_le(name, worst, leg.tol);
    }
  }

  {
    auto csv = open_artifact(ctx, rep, "exact_values.csv");
    csv << "check,parameter,re,im,value,target,abs_error\n";
    const Point probes[] = {disk_point(0.0), disk_point(0.4),
                            disk_point(0.0, 0.7), disk_point(-0.55, 0.3)};

    const Symbol zbar = Symbol::coordinate(1, 0).conjugate();
    double worst_conj = 0.0;
    for (const Point& z : probes) {
      const double v =
          std::abs(project_by_quadrature(KernelParams{1, 0.0}, zbar, z, rule1));
      csv << "conjugate_annihilated,0," << fmt17(z[0].real()) << ','
          << fmt17(z[0].imag()) << ',' << fmt17(v) << ",0," << fmt17(v) << '\n';
      worst_conj = std::max(worst_conj, v);
    }
    rep.check_le("conjugate_annihilated_worst", worst_conj, 1e-8);

    MultiIndex one;
    one[0] = 1;
    const Symbol modsq = Symbol::monomial(1, 1.0, one, one);  // |z|^2
    double worst_mean = 0.0;
    for (double beta : {0.0, 1.0, 3.0}) {
      for (const Point& z : probes) {
        const Complex v =
            project_by_quadrature(KernelParams{1, beta}, modsq, z, rule1);
        const double target = 1.0 / (beta + 2.0);
        const double err = std::abs(v - target);
        csv << "radial_mean," << fmt17(beta) << ',' << fmt17(z[0].real())
            << ',' << fmt17(z[0].imag()) << ',' << fmt17(v.real()) << ','
            << fmt17(target) << ',' << fmt17(err) << '\n';
        worst_mean = std::max(worst_mean, err);
      }
    }
    rep.check_le("radial_mean_worst", worst_mean, 1e-8);
  }

  {
    auto csv = open_artifact(ctx, rep, "unit_average.csv");
    csv << "sigma,re,im,value,abs_deviation\n";
    const Symbol unit = Symbol::constant(1, 1.0);
    double worst = 0.0;
    for (double sigma : {0.0, 1.5}) {
      for (double r : {0.0, 0.25, 0.5, 0.75, 0.9, 0.95}) {
        for (double angle : {0.0, 2.1}) {
          const Point z = disk_point(r * std::cos(angle), r * std::sin(angle));
          const Complex v = berezin_transform(sigma, unit, z, rule1);
          const double err = std::abs(v - 1.0);
          csv << fmt17(sigma) << ',' << fmt17(z[0].real()) << ','
              << fmt17(z[0].imag()) << ',' << fmt17(v.real()) << ','
              << fmt17(err) << '\n';
          worst = std::max(worst, err);
        }
      }
    }
    rep.check_le("unit_average_worst", worst, 1e-8);
  }
  return rep;
}

/// E5: growth probes of the two weighted kernel integrals, the lattice sum
/// bound, and the pointwise oscillation probe of the configured symbol.
RunReport run_operator_bound_probes(const ExperimentConfig& cfg,
                                    const RunContext& ctx) {
  RunReport rep;
  const QuadratureRule rule = build_tensor_rule(1, cfg.radial, cfg.angular);
  const double radii[] = {0.0, 0.5, 0.9, 0.99};

  {
    auto csv = open_artifact(ctx, rep, "growth_probes.csv");
    csv << "t,s,d,radius,value\n";
    struct Job {
      double t, s, d;
    };
    std::vector<Job> jobs;
    for (double t : {0.0, 0.5})
      for (double s : {0.5, 1.0, 2.0})
        for (double d : {0.0, 1.0}) jobs.push_back({t, s, d});

    std::vector<std::array<double, 4>> values(jobs.size());
    parallel_for(jobs.size(), ctx.threads, [&](std::size_t i) {
      for (int k = 0; k < 4; ++k)
        values[i][k] = forelli_rudin_probe(1, jobs[i].t, jobs[i].s, jobs[i].d,
                                           disk_point(radii[k]), rule);
    });
    double worst_ratio = 0.0;
    for (std::size_t i = 0; i < jobs.size(); ++i) {
      double lo = values[i][0], hi = values[i][0];
      for (int k = 0; k < 4; ++k) {
        csv << fmt17(jobs[i].t) << ',' << fmt17(jobs[i].s) << ','
            << fmt17(jobs[i].d) << ',' << fmt17(radii[k]) << ','
            << fmt17(values[i][k]) << '\n';
        lo = std::min(lo, values[i][k]);
        hi = std::max(hi, values[i][k]);
      }
      worst_ratio = std::max(worst_ratio, hi / lo);
    }
    rep.check_le("growth_envelope_ratio", worst_ratio, 3.0);
  }

  {
    auto csv = open_artifact(ctx, rep, "separated_sum.csv");
    csv << "re,im,value\n";
    const Lattice lat = build_lattice(1, cfg.lattice_r, cfg.max_modulus);
    const double v0 = separated_sum_probe(lat, 1.5, 3.0, disk_point(0.0));
    csv << "0,0," << fmt17(v0) << '\n';
    double vmax = v0;
    for (double r : {0.5, 0.9, 0.99}) {
      for (double angle : {0.0, 1.1, 2.2, 3.3}) {
        const Point z = disk_point(r * std::cos(angle), r * std::sin(angle));
        const double v = separated_sum_probe(lat, 1.5, 3.0, z);
        csv << fmt17(z[0].real()) << ',' << fmt17(z[0].imag()) << ','
            << fmt17(v) << '\n';
        vmax = std::max(vmax, v);
      }
    }
    rep.check_le("separated_sum_envelope", vmax, 10.0 * v0);
  }

  {
    // Pointwise oscillation probe of the configured symbol: the integrand
    // carries |f(w) - f(z)|^p, so a constant symbol must give exact zeros
    // (every node contributes 0.0, not merely something small).
    auto csv = open_artifact(ctx, rep, "oscillation_probes.csv");
    csv << "re,im,value\n";
    const Symbol f = make_symbol(cfg.symbol, 1);
    double vmax = 0.0;
    bool finite = true;
    for (double r : {0.0, 0.5, 0.9}) {
      const Point z = disk_point(r);
      const double v = global_oscillation_integral(
          f, cfg.p, cfg.gamma, 2.0, cfg.sigma, z, f.eval(z), rule);
      csv << fmt17(z[0].real()) << ',' << fmt17(z[0].imag()) << ','
          << fmt17(v) << '\n';
      vmax = std::max(vmax, v);
      finite = finite && std::isfinite(v);
    }
    rep.check_true("oscillation_probes_finite", finite);
    if (cfg.symbol == "const")
      rep.check_le("constant_symbol_probe_max", vmax, 0.0);
  }
  return rep;
}

}  // namespace berglab
