#include "runner/config.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace berglab {

namespace {

std::string format17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

[[noreturn]] void parse_fail(int line, int col, const std::string& what) {
  std::ostringstream os;
  os << "config parse error at line " << line << ", column " << col << ": "
     << what;
  throw std::runtime_error(os.str());
}

struct RawEntry {
  std::string value;
  int line = 0;
  int key_col = 0;  // column of the key token
  int col = 0;      // column of the value token
};

/// First pass: the file as a key -> (value, position) map, order-free.
std::map<std::string, RawEntry> scan(const std::string& text) {
  std::map<std::string, RawEntry> out;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.resize(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos || eq == first)
      parse_fail(lineno, static_cast<int>(first) + 1,
                 "expected 'key = value'");
    std::string key = line.substr(first, eq - first);
    key.erase(key.find_last_not_of(" \t") + 1);
    auto vstart = line.find_first_not_of(" \t", eq + 1);
    if (vstart == std::string::npos)
      parse_fail(lineno, static_cast<int>(eq) + 2, "missing value");
    std::string value = line.substr(vstart);
    value.erase(value.find_last_not_of(" \t\r") + 1);
    const RawEntry entry{value, lineno, static_cast<int>(first) + 1,
                         static_cast<int>(vstart) + 1};
    if (!out.emplace(key, entry).second)
      parse_fail(lineno, static_cast<int>(first) + 1,
                 "duplicate key '" + key + "'");
  }
  return out;
}

double parse_double(const std::string& key, const RawEntry& e) {
  double v = 0.0;
  const char* b = e.value.data();
  const char* end = b + e.value.size();
  auto [ptr, ec] = std::from_chars(b, end, v);
  if (ec != std::errc() || ptr != end)
    parse_fail(e.line, e.col, "invalid number for key '" + key + "'");
  return v;
}

int parse_int(const std::string& key, const RawEntry& e) {
  int v = 0;
  const char* b = e.value.data();
  const char* end = b + e.value.size();
  auto [ptr, ec] = std::from_chars(b, end, v);
  if (ec != std::errc() || ptr != end)
    parse_fail(e.line, e.col, "invalid integer for key '" + key + "'");
  return v;
}

std::uint64_t parse_seed(const RawEntry& e) {
  std::uint64_t v = 0;
  const char* b = e.value.data();
  const char* end = b + e.value.size();
  auto [ptr, ec] = std::from_chars(b, end, v);
  if (ec != std::errc() || ptr != end)
    parse_fail(e.line, e.col, "invalid seed (need a 64-bit unsigned integer)");
  return v;
}

}  // namespace

ExperimentConfig default_config(const std::string& experiment_id) {
  ExperimentConfig cfg;
  cfg.experiment_id = experiment_id;
  cfg.output_dir = experiment_id;
  if (experiment_id == "E1") {
    // geometry identities: sampling budget only
  } else if (experiment_id == "E2") {
    cfg.samples = 10000;
    cfg.lattice_r = 0.3;
    cfg.max_modulus = 0.99;
  } else if (experiment_id == "E3") {
    // moment sweep on the default (96, 96) rule
  } else if (experiment_id == "E4") {
    cfg.radial = 256;
    cfg.angular = 512;
    cfg.samples = 100;
  } else if (experiment_id == "E5") {
    cfg.radial = 256;
    cfg.angular = 2048;
    cfg.max_modulus = 0.99;
  } else if (experiment_id == "E6") {
    // exact finite sections; no quadrature involved
  } else if (experiment_id == "E7") {
    cfg.lattice_r = 0.4;
    cfg.max_modulus = 0.99;
  } else if (experiment_id == "E8") {
    cfg.radial = 256;
    cfg.angular = 2048;
  } else if (experiment_id == "E9") {
    cfg.radial = 48;
    cfg.angular = 48;
    cfg.lattice_r = 0.8;
    cfg.max_modulus = 0.9;
  } else if (experiment_id == "E10") {
    cfg.n = 2;
    cfg.samples = 50;
  } else {
    throw std::invalid_argument("unknown experiment id '" + experiment_id +
                                "'");
  }
  return cfg;
}

const std::vector<std::string>& known_symbol_ids() {
  static const std::vector<std::string> ids = {
      "const",          "coordinate",        "coordinate_sq",
      "conj_coordinate", "conj_coordinate_sq", "log_pole",
      "conj_log_pole",  "re_coordinate",     "one_minus_modsq",
      "beta_origin",    "coordinate_product"};
  return ids;
}

void validate_config(const ExperimentConfig& cfg) {
  if (cfg.n < 1 || cfg.n > 3)
    throw std::invalid_argument("n must be 1, 2, or 3");
  if (!(cfg.alpha > -1.0))
    throw std::invalid_argument("alpha must exceed -1");
  if (!(cfg.beta > -1.0)) throw std::invalid_argument("beta must exceed -1");
  if (!(cfg.p > 1.0 && cfg.p <= cfg.q))
    throw std::invalid_argument("requires 1<p≤q<∞");
  if (!(cfg.sigma > -1.0 + cfg.gamma * cfg.p))
    throw std::invalid_argument("requires sigma > -1+gamma*p");
  if (!(cfg.t >= 0.0)) throw std::invalid_argument("requires t >= 0");
  if (!(cfg.lattice_r > 0.0))
    throw std::invalid_argument("lattice_r must be positive");
  if (!(cfg.max_modulus > 0.0 && cfg.max_modulus < 1.0))
    throw std::invalid_argument("max_modulus must lie in (0,1)");
  if (cfg.radial < 1 || cfg.angular < 1)
    throw std::invalid_argument("radial and angular node counts must be positive");
  if (cfg.samples < 1) throw std::invalid_argument("samples must be positive");
  if (cfg.truncation < 1 || cfg.truncation > 300)
    throw std::invalid_argument("requires 1 <= truncation <= 300");
  bool known = false;
  for (const auto& id : known_symbol_ids()) known = known || id == cfg.symbol;
  if (!known)
    throw std::invalid_argument("unknown symbol id '" + cfg.symbol + "'");
}

ExperimentConfig parse_config(const std::string& text) {
  auto entries = scan(text);
  const auto idit = entries.find("experiment_id");
  if (idit == entries.end())
    throw std::runtime_error("config parse error: missing experiment_id");
  ExperimentConfig cfg;
  try {
    cfg = default_config(idit->second.value);
  } catch (const std::invalid_argument& e) {
    parse_fail(idit->second.line, idit->second.col, e.what());
  }
  for (const auto& [key, e] : entries) {
    if (key == "experiment_id") {
    } else if (key == "seed") {
      cfg.seed = parse_seed(e);
    } else if (key == "output_dir") {
      cfg.output_dir = e.value;
    } else if (key == "n") {
      cfg.n = parse_int(key, e);
    } else if (key == "p") {
      cfg.p = parse_double(key, e);
    } else if (key == "q") {
      cfg.q = parse_double(key, e);
    } else if (key == "alpha") {
      cfg.alpha = parse_double(key, e);
    } else if (key == "beta") {
      cfg.beta = parse_double(key, e);
    } else if (key == "gamma") {
      cfg.gamma = parse_double(key, e);
    } else if (key == "sigma") {
      cfg.sigma = parse_double(key, e);
    } else if (key == "t") {
      cfg.t = parse_double(key, e);
    } else if (key == "symbol") {
      cfg.symbol = e.value;
    } else if (key == "lattice_r") {
      cfg.lattice_r = parse_double(key, e);
    } else if (key == "max_modulus") {
      cfg.max_modulus = parse_double(key, e);
    } else if (key == "radial") {
      cfg.radial = parse_int(key, e);
    } else if (key == "angular") {
      cfg.angular = parse_int(key, e);
    } else if (key == "samples") {
      cfg.samples = parse_int(key, e);
    } else if (key == "truncation") {
      cfg.truncation = parse_int(key, e);
    } else {
      parse_fail(e.line, e.key_col, "unknown key '" + key + "'");
    }
  }
  validate_config(cfg);
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string serialize_config(const ExperimentConfig& cfg) {
  std::ostringstream os;
  os << "experiment_id = " << cfg.experiment_id << '\n';
  os << "seed = " << cfg.seed << '\n';
  os << "output_dir = " << cfg.output_dir << '\n';
  os << "n = " << cfg.n << '\n';
  os << "p = " << format17(cfg.p) << '\n';
  os << "q = " << format17(cfg.q) << '\n';
  os << "alpha = " << format17(cfg.alpha) << '\n';
  os << "beta = " << format17(cfg.beta) << '\n';
  os << "gamma = " << format17(cfg.gamma) << '\n';
  os << "sigma = " << format17(cfg.sigma) << '\n';
  os << "t = " << format17(cfg.t) << '\n';
  os << "symbol = " << cfg.symbol << '\n';
  os << "lattice_r = " << format17(cfg.lattice_r) << '\n';
  os << "max_modulus = " << format17(cfg.max_modulus) << '\n';
  os << "radial = " << cfg.radial << '\n';
  os << "angular = " << cfg.angular << '\n';
  os << "samples = " << cfg.samples << '\n';
  os << "truncation = " << cfg.truncation << '\n';
  return os.str();
}

}  // namespace berglab
