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

#ifndef GASDET_CONFIG_HPP
#define GASDET_CONFIG_HPP

#include <map>
#include <string>

#include "channel.hpp"
#include "gas.hpp"

namespace gasdet::exp {

enum class Scenario {
  kRisGain,
  kTaps,
  kTapCompensation,
  kConvergence,
  kNoise,
  kResources,
  kDumpQubo,
};

enum class ResourcesMode { kBudget, kQueries };

/// Flat key-value experiment description. See README for the schema;
/// unknown keys are errors.
struct ExperimentConfig {
  Scenario scenario = Scenario::kRisGain;
  int n = 3;
  int l_ui = 2;
  int l_ib = 2;
  int r_elements = 4;
  std::vector<double> snr_db = {-10.0, -5.0, 0.0, 5.0};
  long blocks = 10000;
  channel::TapStrategy strategy = channel::TapStrategy::kCentral;
  std::vector<std::string> detectors = {"mmse", "mld", "gas"};
  std::uint64_t base_seed = 1;
  int threads = 0;  // 0 = hardware concurrency
  int ris_phase_bits = 0;

  double gas_lambda = 8.0 / 7.0;
  int gas_max_iterations = 50;
  int gas_patience = 12;
  int gas_width_margin = 0;
  gas::InitMode gas_init = gas::InitMode::kMmse;

  bool noise_depolarize_two = false;
  double noise_p2 = 0.02;
  bool noise_depolarize_one = false;
  double noise_p1 = 0.0;
  bool noise_readout = false;

  std::vector<int> r_list = {2, 4, 8};
  std::vector<int> l_list = {2, 4, 6};
  std::vector<int> n_list = {2, 3, 4, 5, 6};
  std::vector<int> m_list = {4, 6, 8};
  ResourcesMode resources_mode = ResourcesMode::kBudget;
  std::string trace_out;

  int cascaded_taps() const { return l_ui + l_ib - 1; }
  gas::GasConfig gas_config() const;
  void validate() const;
};

/// Parses `key = value` lines ('#' starts a comment). Throws ConfigError
/// naming the offending key or violated constraint.
ExperimentConfig parse_config(const std::string& text);

/// Applies one key=value assignment on top of an existing config.
void apply_key(ExperimentConfig& cfg, const std::string& key, const std::string& value);

const char* scenario_name(Scenario s);
Scenario scenario_from_name(const std::string& name);

}  // namespace gasdet::exp

#endif  // GASDET_CONFIG_HPP
