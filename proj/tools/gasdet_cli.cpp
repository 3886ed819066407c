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

// Command-line front end; everything runs through the C API.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gasdet/gasdet.h"

namespace {

struct CommonOpts {
  std::string config_path;
  std::string out_path;
  std::string trace_path;
  std::vector<std::string> overrides;  // "key=value" pairs built from flags
};

void add_override(CommonOpts& c, const std::string& key, const std::string& value) {
  c.overrides.push_back(key + " = " + value);
}

void add_common_flags(CLI::App* cmd, CommonOpts& c) {
  cmd->add_option("--config", c.config_path, "key = value configuration file");
  cmd->add_option("--out", c.out_path, "output path (default: stdout)");

  static const std::vector<std::pair<const char*, const char*>> kPassthrough = {
      {"--n", "n"},
      {"--l", "l"},
      {"--l-ui", "l_ui"},
      {"--l-ib", "l_ib"},
      {"--r", "r"},
      {"--snr", "snr_db"},
      {"--blocks", "blocks"},
      {"--strategy", "strategy"},
      {"--detectors", "detectors"},
      {"--seed", "seed"},
      {"--threads", "threads"},
      {"--ris-phase-bits", "ris_phase_bits"},
      {"--gas-init", "gas_init"},
      {"--gas-lambda", "gas_lambda"},
      {"--gas-max-iterations", "gas_max_iterations"},
      {"--gas-patience", "gas_patience"},
      {"--gas-margin", "gas_width_margin"},
      {"--noise-p2", "noise_p2"},
      {"--noise-p1", "noise_p1"},
      {"--r-list", "r_list"},
      {"--l-list", "l_list"},
      {"--n-list", "n_list"},
      {"--m-list", "m_list"},
  };
  for (const auto& [flag, key] : kPassthrough) {
    const std::string key_copy = key;
    cmd->add_option_function<std::string>(
        flag, [&c, key_copy](const std::string& v) { add_override(c, key_copy, v); },
        "sets '" + key_copy + "'");
  }
  cmd->add_flag_callback("--depolarize",
                         [&c] { add_override(c, "noise_depolarize_two", "1"); },
                         "enable two-qubit depolarizing noise");
  cmd->add_flag_callback("--readout", [&c] { add_override(c, "noise_readout", "1"); },
                         "enable readout noise");
  cmd->add_option_function<std::string>(
      "--trace", [&c](const std::string& v) { c.trace_path = v; add_override(c, "trace_out", v); },
      "write per-iteration GAS trace CSV to this path");
}

int write_output(const std::string& path, const char* text) {
  if (path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open '" << path << "' for writing\n";
    return 1;
  }
  out << text;
  return 0;
}

int run_scenario(const std::string& scenario, const CommonOpts& c) {
  std::string config_text;
  if (!c.config_path.empty()) {
    std::ifstream in(c.config_path);
    if (!in) {
      std::cerr << "error: cannot read config file '" << c.config_path << "'\n";
      return 1;
    }
    std::stringstream ss;
    ss << in.rdbuf();
    config_text = ss.str() + "\n";
  }
  config_text += "scenario = " + scenario + "\n";
  for (const std::string& line : c.overrides) config_text += line + "\n";

  gasdet_experiment* exp = nullptr;
  int rc = gasdet_experiment_new(config_text.c_str(), &exp);
  if (rc != GASDET_OK) {
    std::cerr << "configuration error: " << gasdet_last_error() << "\n";
    return 2;
  }
  rc = gasdet_experiment_run(exp);
  if (rc != GASDET_OK) {
    std::cerr << "error (" << gasdet_status_name(rc) << "): " << gasdet_last_error() << "\n";
    gasdet_experiment_free(exp);
    return 2;
  }
  int status = write_output(c.out_path, gasdet_experiment_output(exp));
  if (status == 0 && !c.trace_path.empty())
    status = write_output(c.trace_path, gasdet_experiment_trace(exp));
  gasdet_experiment_free(exp);
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gasdet: RIS-assisted SC-FDE detection via Grover adaptive search"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(gasdet_version()));

  CommonOpts sweep_opts, converge_opts, noise_opts, resources_opts, dump_opts;
  std::string sweep_scenario = "ris-gain";
  std::string resources_mode = "budget";

  CLI::App* sweep = app.add_subcommand("sweep", "BER-vs-SNR Monte-Carlo sweeps");
  sweep->add_option("--scenario", sweep_scenario,
                    "ris-gain | taps | tap-compensation")
      ->check(CLI::IsMember({"ris-gain", "taps", "tap-compensation"}));
  add_common_flags(sweep, sweep_opts);

  CLI::App* converge = app.add_subcommand("converge", "BER versus GAS iteration index");
  converge->add_option_function<std::string>(
      "--iterations",
      [&converge_opts](const std::string& v) {
        add_override(converge_opts, "gas_max_iterations", v);
      },
      "fixed GAS iteration count");
  add_common_flags(converge, converge_opts);

  CLI::App* noise = app.add_subcommand("noise", "ideal vs depolarizing vs readout GAS BER");
  add_common_flags(noise, noise_opts);

  CLI::App* resources = app.add_subcommand("resources", "gate budgets or query statistics");
  resources->add_option("--mode", resources_mode, "budget | queries")
      ->check(CLI::IsMember({"budget", "queries"}));
  add_common_flags(resources, resources_opts);

  CLI::App* dump = app.add_subcommand("dump-qubo", "dump one seeded QUBO instance");
  add_common_flags(dump, dump_opts);

  CLI11_PARSE(app, argc, argv);

  if (sweep->parsed()) return run_scenario(sweep_scenario, sweep_opts);
  if (converge->parsed()) return run_scenario("convergence", converge_opts);
  if (noise->parsed()) return run_scenario("noise", noise_opts);
  if (resources->parsed()) {
    add_override(resources_opts, "resources_mode", resources_mode);
    return run_scenario("resources", resources_opts);
  }
  if (dump->parsed()) return run_scenario("dump-qubo", dump_opts);
  return 1;
}
