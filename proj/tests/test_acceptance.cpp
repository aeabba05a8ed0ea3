// Shipping gate: re-runs every experiment at its default configuration
// (single-threaded, seed 42) and holds the headline quantities to the
// tolerances pinned below, so a loosened bound inside an experiment body
// cannot slip through unnoticed.  One [PASS]/[FAIL] line is printed per
// experiment.
//
// Three experiments fail named legs by measurement, not by accident; those
// values are pinned tightly so any drift surfaces here:
//   - E2: the empirical overlap count of the 4r-dilated lattice balls is not
//     stable under halving r.  The count tracks the hyperbolic area ratio
//     sinh^2(4r)/sinh^2(r/2), which is scale-dependent away from the r -> 0
//     limit; at r = 0.5 vs 0.25 it shifts by 202.
//   - E5: the slowest-decaying growth probe (t=0.5, s=0.5, with the distance
//     factor) still climbs toward its asymptote at |z| = 0.99 and spans a
//     factor 3.81 over the sweep, past the 3x band.  Rule-independent to
//     five digits at double and triple node counts.
//   - E9: the mean-oscillation profile of 1-|z|^2 peaks at the 0.7 shell
//     before decaying (non-monotone) and reaches 0.115x its 0.5-shell value
//     at 0.99; the profile of Re z decays to 0.042x instead of stalling
//     above 0.5x.  Both are stable under rule refinement; the suite's
//     genuinely stalling profile is beta(.,0), at 1.02x.
#define DOCTEST_CONFIG_IMPLEMENT

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>
#include <string_view>

#include "doctest.h"
#include "runner/config.hpp"
#include "runner/experiments.hpp"
#include "runner/report.hpp"

using namespace berglab;
namespace fs = std::filesystem;

namespace {

int g_pass = 0;
int g_fail = 0;

RunReport run_default(const std::string& id) {
  return run_experiment(default_config(id), /*threads=*/1);
}

const CheckResult& get(const RunReport& rep, std::string_view name) {
  for (const auto& c : rep.checks)
    if (c.name == name) return c;
  FAIL("missing check: ", name);
  static const CheckResult none{};
  return none;
}

void announce(const char* id, bool ok, const std::string& detail) {
  (ok ? g_pass : g_fail) += 1;
  std::printf("[%s] %-4s %s\n", ok ? "PASS" : "FAIL", id, detail.c_str());
  std::fflush(stdout);
}

std::string short3(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

}  // namespace

TEST_CASE("E1: automorphism and metric identities") {
  const RunReport rep = run_default("E1");
  const auto& inv = get(rep, "involution_worst");
  const auto& idn = get(rep, "one_minus_sq_identity_worst");
  const auto& bet = get(rep, "beta_invariance_worst");
  const auto& mid = get(rep, "geodesic_midpoint_dev");
  CHECK(inv.threshold == 1e-12);
  CHECK(idn.threshold == 1e-12);
  CHECK(bet.threshold == 1e-10);
  CHECK(mid.threshold == 1e-10);
  CHECK(inv.pass);
  CHECK(idn.pass);
  CHECK(bet.pass);
  CHECK(mid.pass);
  CHECK(rep.wall_seconds < 10.0);
  const bool ok = rep.overall() && rep.wall_seconds < 10.0;
  announce("E1", ok,
           "identities: involution " + short3(inv.value) + ", kernel form " +
               short3(idn.value) + ", metric invariance " + short3(bet.value) +
               ", midpoint " + short3(mid.value));
}

TEST_CASE("E2: lattice separation, covering, overlap count") {
  const RunReport rep = run_default("E2");
  bool geometry_ok = true;
  for (const char* r : {"0.3", "0.5"}) {
    const auto& sep = get(rep, std::string("separation_r") + r);
    const auto& unc = get(rep, std::string("uncovered_r") + r);
    CHECK(sep.pass);
    CHECK(unc.pass);
    CHECK(unc.value == 0.0);
    geometry_ok = geometry_ok && sep.pass && unc.pass;
  }
  CHECK(get(rep, "separation_r0.3").threshold == 0.15);
  CHECK(get(rep, "separation_r0.5").threshold == 0.25);

  // Honest failure, pinned: the 4r-ball overlap count is not stable under
  // halving r (hyperbolic area ratio, see file header).
  const auto& m3 = get(rep, "multiplicity_shift_r0.3");
  const auto& m5 = get(rep, "multiplicity_shift_r0.5");
  CHECK(m3.threshold == 1.0);
  CHECK(m5.threshold == 1.0);
  CHECK_FALSE(m3.pass);
  CHECK_FALSE(m5.pass);
  CHECK(m3.value == 48.0);
  CHECK(m5.value == 202.0);
  CHECK(rep.wall_seconds < 30.0);
  announce("E2", false,
           "lattices: separation/covering pass; 4r-overlap count shifts by " +
               short3(m3.value) + " (r=0.3) and " + short3(m5.value) +
               " (r=0.5), past the +-1 band");
}

TEST_CASE("E3: quadrature against closed-form moments") {
  const RunReport rep = run_default("E3");
  for (const char* n : {"1", "2"}) {
    const auto& mom = get(rep, std::string("moment_worst_n") + n);
    const auto& vol = get(rep, std::string("volume_worst_n") + n);
    const auto& c1 = get(rep, std::string("c1_dev_n") + n);
    CHECK(mom.threshold == 1e-8);
    CHECK(vol.threshold == 1e-10);
    CHECK(c1.threshold == 1e-8);
    CHECK(mom.pass);
    CHECK(vol.pass);
    CHECK(c1.pass);
  }
  announce("E3", rep.overall(),
           "moments: worst deviation " +
               short3(std::max(get(rep, "moment_worst_n1").value,
                               get(rep, "moment_worst_n2").value)) +
               " over 756 monomial/weight combinations");
}

TEST_CASE("E4: projection reproduces, annihilates, averages") {
  const RunReport rep = run_default("E4");
  const auto& r1 = get(rep, "reproduction_worst_n1");
  const auto& r2 = get(rep, "reproduction_worst_n2");
  const auto& conj = get(rep, "conjugate_annihilated_worst");
  const auto& rad = get(rep, "radial_mean_worst");
  const auto& unit = get(rep, "unit_average_worst");
  CHECK(r1.threshold == 1e-8);
  CHECK(r2.threshold == 1e-6);
  CHECK(conj.threshold == 1e-8);
  CHECK(rad.threshold == 1e-8);
  CHECK(unit.threshold == 1e-8);
  CHECK(r1.pass);
  CHECK(r2.pass);
  CHECK(conj.pass);
  CHECK(rad.pass);
  CHECK(unit.pass);
  announce("E4", rep.overall(),
           "projections: reproduction " + short3(r1.value) + " (one var), " +
               short3(r2.value) + " (two vars), exact values " +
               short3(std::max(conj.value, rad.value)));
}

TEST_CASE("E5: kernel-growth and separated-sum envelopes") {
  const RunReport rep = run_default("E5");
  // Honest failure, pinned: the (t,s,d) = (0.5, 0.5, 1) probe spans 3.81x
  // over |z| <= 0.99 (rule-independent to five digits; see file header).
  const auto& env = get(rep, "growth_envelope_ratio");
  CHECK(env.threshold == 3.0);
  CHECK_FALSE(env.pass);
  CHECK(env.value == doctest::Approx(3.8129815051423011).epsilon(1e-6));

  const auto& sep = get(rep, "separated_sum_envelope");
  CHECK(sep.pass);
  CHECK(sep.threshold == doctest::Approx(414.20262453930104).epsilon(1e-12));
  const auto& fin = get(rep, "oscillation_probes_finite");
  const auto& zero = get(rep, "constant_symbol_probe_max");
  CHECK(fin.pass);
  CHECK(zero.pass);
  CHECK(zero.value == 0.0);  // exactly zero at every node, not merely small
  announce("E5", false,
           "envelopes: separated sum and oscillation probes pass; slowest "
           "growth probe spans " +
               short3(env.value) + "x, past the 3x band");
}

TEST_CASE("E6: finite sections against the exact singular-value law") {
  const RunReport rep = run_default("E6");
  const auto& law = get(rep, "singular_value_law_worst");
  const auto& top = get(rep, "top_value_stability");
  const auto& gap = get(rep, "weight_gap_growth_factor");
  CHECK(law.threshold == 1e-10);
  CHECK(top.threshold == 1e-10);
  CHECK(gap.threshold == 4.0);
  CHECK(law.pass);
  CHECK(top.pass);
  CHECK(gap.pass);
  CHECK(gap.value == doctest::Approx(24.501399109595489).epsilon(1e-9));
  CHECK(rep.wall_seconds < 60.0);
  const bool ok = rep.overall() && rep.wall_seconds < 60.0;
  announce("E6", ok,
           "sections: law deviation " + short3(law.value) +
               ", steep-weight growth " + short3(gap.value) + "x");
}

TEST_CASE("E7: section norms against gradient norms, one band") {
  const RunReport rep = run_default("E7");
  const auto& band = get(rep, "ratio_band_spread");
  const auto& lo = get(rep, "log_symbol_gradient_norm_lo");
  const auto& hi = get(rep, "log_symbol_gradient_norm_hi");
  CHECK(band.threshold == 10.0);
  CHECK(lo.threshold == 1.9);
  CHECK(hi.threshold == 2.0);
  CHECK(band.pass);
  CHECK(lo.pass);
  CHECK(hi.pass);
  CHECK(band.value == doctest::Approx(1.3083780995463756).epsilon(1e-6));
  announce("E7", rep.overall(),
           "norm comparison: band spread " + short3(band.value) +
               "x across the family, log-symbol norm " + short3(lo.value));
}

TEST_CASE("E8: probe decay separates compact from non-compact") {
  const RunReport rep = run_default("E8");
  const auto& mono = get(rep, "polynomial_probe_monotone_e1");
  const auto& poly = get(rep, "polynomial_probe_boundary_ratio");
  const auto& logr = get(rep, "log_probe_boundary_ratio");
  CHECK(poly.threshold == 0.2);
  CHECK(logr.threshold == 0.5);
  CHECK(mono.pass);
  CHECK(poly.pass);
  CHECK(logr.pass);
  CHECK(poly.value == doctest::Approx(0.059750568087316561).epsilon(1e-6));
  CHECK(logr.value == doctest::Approx(1.3561672094828474).epsilon(1e-6));
  announce("E8", rep.overall(),
           "decay dichotomy: conjugate-coordinate probe falls to " +
               short3(poly.value) + "x, log probe holds at " +
               short3(logr.value) + "x");
}

TEST_CASE("E9: oscillation norms, decomposition, shell profiles") {
  const RunReport rep = run_default("E9");
  const auto& fin = get(rep, "norm_estimates_finite");
  const auto& K = get(rep, "decomposition_constant");
  const auto& add = get(rep, "decomposition_additivity_worst");
  CHECK(fin.pass);
  CHECK(K.pass);
  CHECK(K.threshold == 50.0);
  CHECK(K.value == doctest::Approx(6.7548332795747772).epsilon(1e-6));
  CHECK(add.pass);
  CHECK(add.threshold == 1e-12);

  // Honest failures, pinned: the 1-|z|^2 profile peaks at the 0.7 shell and
  // only reaches 0.115x; the Re z profile decays instead of stalling (the
  // suite's stalling profile is beta(.,0); see file header).
  const auto& mono = get(rep, "radial_profile_monotone");
  const auto& ratio = get(rep, "radial_profile_boundary_ratio");
  const auto& stall = get(rep, "real_part_profile_stall");
  CHECK(ratio.threshold == 0.1);
  CHECK(stall.threshold == 0.5);
  CHECK_FALSE(mono.pass);
  CHECK_FALSE(ratio.pass);
  CHECK_FALSE(stall.pass);
  CHECK(ratio.value == doctest::Approx(0.11471385025447585).epsilon(1e-6));
  CHECK(stall.value == doctest::Approx(0.041576567727225060).epsilon(1e-6));
  announce("E9", false,
           "oscillation: norms and decomposition pass (K = " +
               short3(K.value) + "); radial profile peaks mid-shell (" +
               short3(ratio.value) + "x at 0.99), Re z profile decays to " +
               short3(stall.value) + "x instead of stalling");
}

TEST_CASE("E10: tangential gradients keep their size at the boundary") {
  const RunReport rep = run_default("E10");
  const auto& c1 = get(rep, "coordinate_shell_ratio");
  const auto& c2 = get(rep, "coordinate_product_shell_ratio");
  const auto& zero = get(rep, "constant_shell_sup_max");
  const auto& ident = get(rep, "invariant_gradient_identity_worst");
  CHECK(c1.threshold == 0.5);
  CHECK(c2.threshold == 0.5);
  CHECK(ident.threshold == 1e-10);
  CHECK(c1.pass);
  CHECK(c2.pass);
  CHECK(zero.pass);
  CHECK(zero.value == 0.0);
  CHECK(ident.pass);
  announce("E10", rep.overall(),
           "tangential probe: shell ratios " + short3(c1.value) + " and " +
               short3(c2.value) + ", constant symbol exactly 0, identity " +
               short3(ident.value));
}

int main(int argc, char** argv) {
  const fs::path root = fs::temp_directory_path() / "berglab_acceptance";
  std::error_code ec;
  fs::remove_all(root, ec);
  fs::create_directories(root, ec);
  setenv("BERGLAB_OUTPUT_ROOT", root.string().c_str(), 1);

  doctest::Context ctx(argc, argv);
  const int rc = ctx.run();
  if (!ctx.shouldExit())
    std::printf(
        "acceptance: %d of %d experiments pass in full; the %d failing "
        "verdicts are measured, explained, and pinned (reports under %s)\n",
        g_pass, g_pass + g_fail, g_fail, root.string().c_str());
  return rc;
}
