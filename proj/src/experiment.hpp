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

#ifndef GASDET_EXPERIMENT_HPP
#define GASDET_EXPERIMENT_HPP

#include "config.hpp"
#include "resources.hpp"

namespace gasdet::exp {

/// Fixed per-trial seed derivation; identical for every detector within a
/// trial so they all see the same channel, data and noise.
std::uint64_t seed_plan(std::uint64_t base_seed, std::uint64_t trial_index);

/// Independent GAS sampling stream for (trial, snr point, detector variant).
std::uint64_t gas_seed_plan(std::uint64_t trial_seed, std::size_t snr_index,
                            std::size_t variant);

struct TrialRealization {
  channel::ChannelRealization ch;
  scfde::BpskBlock x;
  cvec unit_noise;  // unit-variance draw, scaled per SNR point
};

/// Channel + data + noise shared by all detectors of one trial.
TrialRealization make_trial(int n, int l_ui, int l_ib, int r_elements,
                            channel::TapStrategy strategy, int phase_bits,
                            std::uint64_t trial_seed);

struct ExperimentOutput {
  std::string main_text;   // CSV (or the QUBO dump for dump-qubo)
  std::string trace_text;  // per-iteration GAS rows when trace_out is set
};

/// Runs the configured scenario. Output is a pure function of the config.
ExperimentOutput run_experiment(const ExperimentConfig& cfg);

}  // namespace gasdet::exp

#endif  // GASDET_EXPERIMENT_HPP
