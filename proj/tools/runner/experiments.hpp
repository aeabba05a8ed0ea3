#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <string_view>
#include <vector>

#include "berglab/quadrature.hpp"
#include "berglab/symbol.hpp"
#include "runner/config.hpp"
#include "runner/report.hpp"

namespace berglab {

/// Everything an experiment body needs besides its config: the resolved
/// output directory (already created) and the worker-pool cap.  Experiments
/// are pure apart from the artifact files they open through open_artifact.
struct RunContext {
  int threads = 1;
  std::filesystem::path dir;
};

using ExperimentFn = RunReport (*)(const ExperimentConfig&, const RunContext&);

struct ExperimentInfo {
  const char* id;
  const char* summary;
  ExperimentFn run;
};

/// The fixed experiment table, ids E1..E10.  Every reported acceptance
/// criterion is owned by exactly one entry.
const std::vector<ExperimentInfo>& experiment_registry();
const ExperimentInfo* find_experiment(std::string_view id);

/// Resolves the output directory (BERGLAB_OUTPUT_ROOT, default "."), runs
/// the experiment, writes report.json beside the CSV artifacts, stamps the
/// wall time.  Throws for an id missing from the registry.
RunReport run_experiment(const ExperimentConfig& cfg, int threads);

/// Root directory all run outputs land under.
std::filesystem::path output_root();

/// Opens `name` in the run directory and registers it in the report's
/// artifact list.
std::ofstream open_artifact(const RunContext& ctx, RunReport& rep,
                            const std::string& name);

/// The concrete function behind a config symbol id, on B_n.  Ids and
/// constructions are in one place so the config validator, the CSV labels,
/// and the experiments cannot drift apart.
Symbol make_symbol(const std::string& id, int n);

// Experiment bodies (registered in the table; exposed for the test suite).
RunReport run_geometry_identities(const ExperimentConfig&, const RunContext&);
RunReport run_lattice_certification(const ExperimentConfig&,
                                    const RunContext&);
RunReport run_quadrature_moments(const ExperimentConfig&, const RunContext&);
RunReport run_projection_suite(const ExperimentConfig&, const RunContext&);
RunReport run_operator_bound_probes(const ExperimentConfig&,
                                    const RunContext&);
RunReport run_hankel_sections(const ExperimentConfig&, const RunContext&);
RunReport run_bloch_comparison(const ExperimentConfig&, const RunContext&);
RunReport run_compactness_sweep(const ExperimentConfig&, const RunContext&);
RunReport run_oscillation_spaces(const ExperimentConfig&, const RunContext&);
RunReport run_tangential_principle(const ExperimentConfig&, const RunContext&);

}  // namespace berglab
