// Copyright 2026 The gasdet authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "config.hpp"

#include <algorithm>
#include <sstream>

namespace gasdet::exp {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(s);
  while (std::getline(is, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

long parse_long(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const long v = std::stol(value, &pos);
    if (pos != value.size()) throw std::invalid_argument("");
    return v;
  } catch (...) {
    throw ConfigError("key '" + key + "': expected an integer, got '" + value + "'");
  }
}

double parse_real(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(value, &pos);
    if (pos != value.size()) throw std::invalid_argument("");
    return v;
  } catch (...) {
    throw ConfigError("key '" + key + "': expected a number, got '" + value + "'");
  }
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "1" || value == "true" || value == "on" || value == "yes") return true;
  if (value == "0" || value == "false" || value == "off" || value == "no") return false;
  throw ConfigError("key '" + key + "': expected a boolean, got '" + value + "'");
}

std::vector<double> parse_real_list(const std::string& key, const std::string& value) {
  std::vector<double> out;
  for (const std::string& item : split_list(value)) out.push_back(parse_real(key, item));
  if (out.empty()) throw ConfigError("key '" + key + "': empty list");
  return out;
}

std::vector<int> parse_int_list(const std::string& key, const std::string& value) {
  std::vector<int> out;
  for (const std::string& item : split_list(value))
    out.push_back(static_cast<int>(parse_long(key, item)));
  if (out.empty()) throw ConfigError("key '" + key + "': empty list");
  return out;
}

}  // namespace

const char* scenario_name(Scenario s) {
  switch (s) {
    case Scenario::kRisGain: return "ris-gain";
    case Scenario::kTaps: return "taps";
    case Scenario::kTapCompensation: return "tap-compensation";
    case Scenario::kConvergence: return "convergence";
    case Scenario::kNoise: return "noise";
    case Scenario::kResources: return "resources";
    case Scenario::kDumpQubo: return "dump-qubo";
  }
  return "?";
}

Scenario scenario_from_name(const std::string& name) {
  for (Scenario s : {Scenario::kRisGain, Scenario::kTaps, Scenario::kTapCompensation,
                     Scenario::kConvergence, Scenario::kNoise, Scenario::kResources,
                     Scenario::kDumpQubo})
    if (name == scenario_name(s)) return s;
  throw ConfigError("unknown scenario '" + name + "'");
}

gas::GasConfig ExperimentConfig::gas_config() const {
  gas::GasConfig g;
  g.lambda_growth = gas_lambda;
  g.max_iterations = gas_max_iterations;
  g.patience = gas_patience;
  g.width_margin = gas_width_margin;
  g.init = gas_init;
  g.noise.depolarize_two = noise_depolarize_two;
  g.noise.p2 = noise_p2;
  g.noise.depolarize_one = noise_depolarize_one;
  g.noise.p1 = noise_p1;
  g.noise.readout = noise_readout;
  return g;
}

void ExperimentConfig::validate() const {
  if (n < 1) throw ConfigError("constraint violated: n >= 1 (got " + std::to_string(n) + ")");
  if (l_ui < 1 || l_ib < 1)
    throw ConfigError("constraint violated: l_ui >= 1 and l_ib >= 1");
  if (r_elements < 1)
    throw ConfigError("constraint violated: r >= 1 (got " + std::to_string(r_elements) + ")");
  if (blocks < 1)
    throw ConfigError("constraint violated: blocks >= 1 (got " + std::to_string(blocks) + ")");
  if (n < cascaded_taps())
    throw ConfigError("constraint violated: n >= l_ui + l_ib - 1 (n = " + std::to_string(n) +
                      ", cascaded taps = " + std::to_string(cascaded_taps()) + ")");
  if (snr_db.empty()) throw ConfigError("constraint violated: snr_db must be non-empty");
  if (detectors.empty()) throw ConfigError("constraint violated: detectors must be non-empty");
  for (const std::string& d : detectors)
    if (d != "mmse" && d != "mld" && d != "gas")
      throw ConfigError("unknown detector '" + d + "' (expected mmse|mld|gas)");
  if (n > 20) throw ConfigError("constraint violated: n <= 20 (statevector guard)");
  if (ris_phase_bits < 0 || ris_phase_bits > 16)
    throw ConfigError("constraint violated: ris_phase_bits in [0, 16]");
  if (threads < 0) throw ConfigError("constraint violated: threads >= 0");
  if (scenario == Scenario::kTaps) {
    for (int l : l_list) {
      if (l < 1) throw ConfigError("constraint violated: every l_list entry >= 1");
      if (n < l)
        throw ConfigError("constraint violated: n >= cascaded taps for every l_list entry (n = " +
                          std::to_string(n) + ", l = " + std::to_string(l) + ")");
    }
  }
  if (scenario == Scenario::kRisGain)
    for (int r : r_list)
      if (r < 1) throw ConfigError("constraint violated: every r_list entry >= 1");
  if (!trace_out.empty()) {
    if (scenario == Scenario::kConvergence || scenario == Scenario::kResources ||
        scenario == Scenario::kDumpQubo)
      throw ConfigError("trace_out is only supported for ris-gain, taps, tap-compensation and noise");
    if (snr_db.size() != 1)
      throw ConfigError("trace_out requires a single snr_db point");
  }
  gas_config().validate();
}

void apply_key(ExperimentConfig& cfg, const std::string& key, const std::string& value) {
  if (key == "scenario") cfg.scenario = scenario_from_name(value);
  else if (key == "n") cfg.n = static_cast<int>(parse_long(key, value));
  else if (key == "l") {
    const int l = static_cast<int>(parse_long(key, value));
    if (l < 1) throw ConfigError("key 'l': cascaded tap count must be >= 1");
    // Split between the two links; the RIS->BS link takes the extra tap.
    cfg.l_ui = (l + 1) / 2;
    cfg.l_ib = l + 1 - cfg.l_ui;
  } else if (key == "l_ui") cfg.l_ui = static_cast<int>(parse_long(key, value));
  else if (key == "l_ib") cfg.l_ib = static_cast<int>(parse_long(key, value));
  else if (key == "r") cfg.r_elements = static_cast<int>(parse_long(key, value));
  else if (key == "snr_db") cfg.snr_db = parse_real_list(key, value);
  else if (key == "blocks") cfg.blocks = parse_long(key, value);
  else if (key == "strategy") cfg.strategy = channel::strategy_from_name(value);
  else if (key == "detectors") {
    cfg.detectors = split_list(value);
  } else if (key == "seed") cfg.base_seed = static_cast<std::uint64_t>(parse_long(key, value));
  else if (key == "threads") cfg.threads = static_cast<int>(parse_long(key, value));
  else if (key == "ris_phase_bits") cfg.ris_phase_bits = static_cast<int>(parse_long(key, value));
  else if (key == "gas_lambda") cfg.gas_lambda = parse_real(key, value);
  else if (key == "gas_max_iterations") cfg.gas_max_iterations = static_cast<int>(parse_long(key, value));
  else if (key == "gas_patience") cfg.gas_patience = static_cast<int>(parse_long(key, value));
  else if (key == "gas_width_margin") cfg.gas_width_margin = static_cast<int>(parse_long(key, value));
  else if (key == "gas_init") {
    if (value == "mmse") cfg.gas_init = gas::InitMode::kMmse;
    else if (value == "random") cfg.gas_init = gas::InitMode::kRandom;
    else throw ConfigError("key 'gas_init': expected mmse|random, got '" + value + "'");
  } else if (key == "noise_depolarize_two") cfg.noise_depolarize_two = parse_bool(key, value);
  else if (key == "noise_p2") cfg.noise_p2 = parse_real(key, value);
  else if (key == "noise_depolarize_one") cfg.noise_depolarize_one = parse_bool(key, value);
  else if (key == "noise_p1") cfg.noise_p1 = parse_real(key, value);
  else if (key == "noise_readout") cfg.noise_readout = parse_bool(key, value);
  else if (key == "r_list") cfg.r_list = parse_int_list(key, value);
  else if (key == "l_list") cfg.l_list = parse_int_list(key, value);
  else if (key == "n_list") cfg.n_list = parse_int_list(key, value);
  else if (key == "m_list") cfg.m_list = parse_int_list(key, value);
  else if (key == "resources_mode") {
    if (value == "budget") cfg.resources_mode = ResourcesMode::kBudget;
    else if (value == "queries") cfg.resources_mode = ResourcesMode::kQueries;
    else throw ConfigError("key 'resources_mode': expected budget|queries, got '" + value + "'");
  } else if (key == "trace_out") cfg.trace_out = value;
  else throw ConfigError("unknown configuration key '" + key + "'");
}

ExperimentConfig parse_config(const std::string& text) {
  ExperimentConfig cfg;
  std::istringstream is(text);
  std::string line;
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError("line " + std::to_string(line_no) + ": empty key");
    apply_key(cfg, key, value);
  }
  cfg.validate();
  return cfg;
}

}  // namespace gasdet::exp
