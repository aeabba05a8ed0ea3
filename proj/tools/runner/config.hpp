#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace berglab {

/// One flat experiment configuration.  Every run is fully described by this
/// struct; there is no config inheritance, so a serialized config plus the
/// binary version pins the reported numbers.  Fields an experiment does not
/// consume are carried and echoed unchanged, which keeps configs diffable
/// across experiments.
///
/// `radial` and `angular` size the one-variable tensor rule.  Legs in two
/// variables run on fixed internal node counts (tensor cost grows like the
/// cube of the angular count, so one knob cannot serve both dimensions).
/// `samples` is the generic sampling budget (random pairs, covering
/// samples, identity spot checks).
struct ExperimentConfig {
  std::string experiment_id;
  std::uint64_t seed = 42;
  std::string output_dir;  // below the output root; defaults to the id
  int n = 1;
  double p = 2.0;
  double q = 2.0;
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  double sigma = 0.0;
  double t = 0.0;
  std::string symbol = "const";
  double lattice_r = 0.5;
  double max_modulus = 0.95;
  int radial = 96;
  int angular = 96;
  int samples = 1000;
  int truncation = 40;
};

/// Baseline configuration of one experiment: the pinned parameter choices
/// whose run reproduces the reported numbers.  Throws std::invalid_argument
/// for an unknown id.
ExperimentConfig default_config(const std::string& experiment_id);

/// Parses the key-value schema (`key = value`, one per line, `#` comments).
/// The experiment id selects the defaults; explicit keys override them.
/// Structural problems (bad line, unknown key, bad number, unknown id)
/// throw std::runtime_error with the line and column; violated parameter
/// hypotheses throw std::invalid_argument naming the inequality.
ExperimentConfig parse_config(const std::string& text);

/// parse_config applied to the contents of a file.
ExperimentConfig load_config(const std::string& path);

/// Canonical serialization: fixed key order, floats with 17 significant
/// digits.  serialize ∘ parse ∘ serialize == serialize byte for byte.
std::string serialize_config(const ExperimentConfig& cfg);

/// The hypothesis checks shared by parse_config and programmatic callers;
/// throws std::invalid_argument naming the violated inequality.
void validate_config(const ExperimentConfig& cfg);

/// The symbol ids the `symbol` key accepts.
const std::vector<std::string>& known_symbol_ids();

}  // namespace berglab
