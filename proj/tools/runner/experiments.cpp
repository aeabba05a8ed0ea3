#include "runner/experiments.hpp"

#include <chrono>
#include <cstdlib>
#include <stdexcept>

namespace berglab {

const std::vector<ExperimentInfo>& experiment_registry() {
  static const std::vector<ExperimentInfo> table = {
      {"E1",
       "Moebius involution, the one-minus-square identity, metric invariance, "
       "geodesic midpoint",
       run_geometry_identities},
      {"E2",
       "lattice separation certificates, covering of the 0.99-ball, overlap "
       "multiplicity under refinement",
       run_lattice_certification},
      {"E3",
       "quadrature monomial moments against the radial Beta oracle, measure "
       "normalization",
       run_quadrature_moments},
      {"E4",
       "projection reproduces polynomials, annihilates conjugates, averages "
       "radial symbols; Berezin fixes constants",
       run_projection_suite},
      {"E5",
       "weighted kernel-integral growth probes, separated-sum bounds, "
       "oscillation probes of the configured symbol",
       run_operator_bound_probes},
      {"E6",
       "finite Hankel sections: exact singular-value law at the reference "
       "weight, growth in the negative-exponent regime",
       run_hankel_sections},
      {"E7",
       "top Hankel singular value against the gradient-weighted norm of the "
       "holomorphic part, across a symbol family",
       run_bloch_comparison},
      {"E8",
       "boundary decay of Hankel probes: vanishing for polynomial conjugates, "
       "stalling for the boundary-singular log symbol",
       run_compactness_sweep},
      {"E9",
       "oscillation space norms, the averaged/oscillatory decomposition, "
       "boundary decay profiles",
       run_oscillation_spaces},
      {"E10",
       "tangential gradient shell sups in two variables, the one-variable "
       "invariant-gradient identity",
       run_tangential_principle},
  };
  return table;
}

const ExperimentInfo* find_experiment(std::string_view id) {
  for (const auto& e : experiment_registry())
    if (id == e.id) return &e;
  return nullptr;
}

std::filesystem::path output_root() {
  if (const char* root = std::getenv("BERGLAB_OUTPUT_ROOT"))
    if (*root) return root;
  return ".";
}

std::ofstream open_artifact(const RunContext& ctx, RunReport& rep,
                            const std::string& name) {
  rep.artifacts.push_back(name);
  std::ofstream out(ctx.dir / name, std::ios::binary);
  if (!out)
    throw std::runtime_error("cannot open artifact file: " +
                             (ctx.dir / name).string());
  return out;
}

RunReport run_experiment(const ExperimentConfig& cfg, int threads) {
  const ExperimentInfo* info = find_experiment(cfg.experiment_id);
  if (info == nullptr)
    throw std::invalid_argument("unknown experiment id '" + cfg.experiment_id +
                                "'");
  validate_config(cfg);
  RunContext ctx;
  ctx.threads = threads;
  ctx.dir = output_root() / cfg.output_dir;
  std::filesystem::create_directories(ctx.dir);

  const auto start = std::chrono::steady_clock::now();
  RunReport rep = info->run(cfg, ctx);
  rep.experiment_id = cfg.experiment_id;
  rep.config_text = serialize_config(cfg);
  rep.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();

  std::ofstream out(ctx.dir / "report.json", std::ios::binary);
  out << report_to_json(rep);
  return rep;
}

Symbol make_symbol(const std::string& id, int n) {
  if (id == "const") return Symbol::constant(n, 1.0);
  if (id == "coordinate") return Symbol::coordinate(n, 0);
  if (id == "coordinate_sq") {
    MultiIndex m;
    m[0] = 2;
    return Symbol::monomial(n, 1.0, m);
  }
  if (id == "conj_coordinate") return Symbol::coordinate(n, 0).conjugate();
  if (id == "conj_coordinate_sq") {
    MultiIndex m;
    m[0] = 2;
    return Symbol::monomial(n, 1.0, m).conjugate();
  }
  if (id == "log_pole") {
    Point b = Point::zero(n);
    b[0] = 1.0;
    return Symbol::log_pole(n, b);
  }
  if (id == "conj_log_pole") {
    Point b = Point::zero(n);
    b[0] = 1.0;
    return Symbol::log_pole(n, b).conjugate();
  }
  if (id == "re_coordinate") {
    const Symbol z1 = Symbol::coordinate(n, 0);
    return (z1 + z1.conjugate()) * 0.5;
  }
  if (id == "one_minus_modsq") {
    // 1 - |z|^2 as a radial power: coef * (1-|z|^2)^1.
    SymbolTerm term;
    term.coef = 1.0;
    term.radial_power = 1.0;
    return Symbol(n, {term});
  }
  if (id == "beta_origin") {
    SymbolTerm term;
    term.coef = 1.0;
    term.beta_factor = true;
    return Symbol(n, {term});
  }
  if (id == "coordinate_product") {
    if (n < 2)
      throw std::invalid_argument(
          "symbol 'coordinate_product' needs at least two variables");
    MultiIndex m;
    m[0] = 1;
    m[1] = 1;
    return Symbol::monomial(n, 1.0, m);
  }
  throw std::invalid_argument("unknown symbol id '" + id + "'");
}

}  // namespace berglab
