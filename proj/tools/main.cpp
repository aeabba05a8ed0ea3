#include <cstdio>
#include <exception>
#include <string>

#include "CLI11.hpp"
#include "berglab/kernels.hpp"
#include "berglab/moebius.hpp"
#include "berglab/moments.hpp"
#include "berglab/point.hpp"
#include "berglab/quadrature.hpp"
#include "berglab/rng.hpp"
#include "berglab/symbol.hpp"
#include "runner/experiments.hpp"
#include "runner/parallel.hpp"

namespace {

using namespace berglab;

int cmd_run(const std::string& config_path, int threads) {
  const ExperimentConfig cfg = load_config(config_path);
  const RunReport rep = run_experiment(cfg, resolve_threads(threads));
  for (const auto& c : rep.checks)
    std::printf("  [%s] %-40s value=%s threshold=%s\n",
                c.pass ? "pass" : "FAIL", c.name.c_str(),
                fmt17(c.value).c_str(), fmt17(c.threshold).c_str());
  const auto dir = output_root() / cfg.output_dir;
  std::printf("%s: %s (%.2fs), report in %s\n", rep.experiment_id.c_str(),
              rep.overall() ? "all checks passed" : "CHECKS FAILED",
              rep.wall_seconds, dir.string().c_str());
  return rep.overall() ? 0 : 1;
}

int cmd_list() {
  for (const auto& e : experiment_registry())
    std::printf("%-4s %s\n", e.id, e.summary);
  return 0;
}

/// Fast internal consistency sweep: the moment self-tests of the default
/// rules, an automorphism spot check, and one projection reproduction.
/// Meant as a smoke test after a build, not as the acceptance battery.
int cmd_self_test() {
  int failures = 0;
  const auto verdict = [&](const char* name, double value, double bound) {
    const bool ok = value <= bound;
    if (!ok) ++failures;
    std::printf("  [%s] %-32s %s (allowed %s)\n", ok ? "pass" : "FAIL", name,
                fmt17(value).c_str(), fmt17(bound).c_str());
  };

  {
    const auto [deg1, err1] =
        run_moment_selftest(build_tensor_rule(1, 96, 96), 20);
    std::printf("rule n=1 tensor(96,96): exactness_degree=%d\n", deg1);
    verdict("moment_error_n1", err1, 1e-10);
    const auto [deg2, err2] =
        run_moment_selftest(build_tensor_rule(2, 24, 12), 8);
    std::printf("rule n=2 tensor(24,12): exactness_degree=%d\n", deg2);
    verdict("moment_error_n2", err2, 1e-10);
    // The Monte Carlo rule has no exactness degree; check one concrete
    // moment against its closed value instead.
    const QuadratureRule mc = build_mc_rule(3, 100000, 20260822);
    MultiIndex first;
    first[0] = 1;
    const double via_rule =
        integrate(mc, RealIntegrand([](const Point& w, double) {
                    return std::norm(w[0]);
                  }));
    const double closed = radial_moment(3, 1, 0.0) * sphere_moment(3, first);
    std::printf("rule n=3 monte-carlo(1e5): |z_1|^2 moment=%s\n",
                fmt17(via_rule).c_str());
    verdict("moment_error_n3", std::abs(via_rule - closed), 0.01);
  }

  {
    double worst = 0.0;
    for (int n = 1; n <= 3; ++n) {
      std::mt19937_64 gen(subseed(99, n));
      const Point a = random_ball_point(n, gen, 0.9);
      const Point z = random_ball_point(n, gen, 0.9);
      const MoebiusMap phi(a);
      worst = std::max(worst, sup_dist(phi.apply(phi.apply(z)), z));
    }
    verdict("involution_spot", worst, 1e-13);
  }

  {
    MultiIndex cube;
    cube[0] = 3;
    const Symbol f = Symbol::monomial(1, 1.0, cube);
    const Point z{Complex(0.4, 0.0)};
    const Complex via_quadrature = project_by_quadrature(
        KernelParams{1, 0.0}, f, z, build_tensor_rule(1, 96, 96));
    verdict("projection_spot", std::abs(via_quadrature - f.eval(z)), 1e-10);
  }

  std::printf("self-test: %s\n", failures == 0 ? "all checks passed"
                                               : "CHECKS FAILED");
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"berglab: a numerical laboratory for weighted Bergman spaces"};
  app.require_subcommand(1);
  int threads = 0;

  auto* run_cmd =
      app.add_subcommand("run", "execute one experiment from a config file");
  std::string config_path;
  run_cmd->add_option("config", config_path, "path to a key = value config")
      ->required();
  run_cmd->add_option("--threads", threads,
                      "worker pool cap (0 = hardware concurrency)");

  app.add_subcommand("list-experiments", "print the experiment registry");

  auto* self_cmd =
      app.add_subcommand("self-test", "fast internal consistency checks");
  self_cmd->add_option("--threads", threads,
                       "worker pool cap (0 = hardware concurrency)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run_cmd->parsed()) return cmd_run(config_path, threads);
    if (app.get_subcommand("list-experiments")->parsed()) return cmd_list();
    return cmd_self_test();
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
