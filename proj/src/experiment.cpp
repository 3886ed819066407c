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

#include "experiment.hpp"

#include <cstdio>
#include <thread>

namespace gasdet::exp {

namespace {

struct SweepPoint {
  int n;
  int l_ui;
  int l_ib;
  int r;
  channel::TapStrategy strategy;
};

std::vector<SweepPoint> sweep_points(const ExperimentConfig& cfg) {
  std::vector<SweepPoint> points;
  switch (cfg.scenario) {
    case Scenario::kRisGain:
      for (int r : cfg.r_list)
        points.push_back({cfg.n, cfg.l_ui, cfg.l_ib, r, cfg.strategy});
      break;
    case Scenario::kTaps:
      for (int l : cfg.l_list) {
        const int l_ui = (l + 1) / 2;
        points.push_back({cfg.n, l_ui, l + 1 - l_ui, cfg.r_elements, cfg.strategy});
      }
      break;
    case Scenario::kTapCompensation:
      for (channel::TapStrategy s : {channel::TapStrategy::kFirst,
                                     channel::TapStrategy::kCentral,
                                     channel::TapStrategy::kMax})
        points.push_back({cfg.n, cfg.l_ui, cfg.l_ib, cfg.r_elements, s});
      break;
    default:
      points.push_back({cfg.n, cfg.l_ui, cfg.l_ib, cfg.r_elements, cfg.strategy});
      break;
  }
  return points;
}

// Detector variants in fixed emission order.
struct Variant {
  std::string label;
  enum Kind { kMmse, kMld, kGas } kind;
  qsim::NoiseSpec noise;
};

std::vector<Variant> variants_for(const ExperimentConfig& cfg) {
  std::vector<Variant> out;
  const bool noise_scenario = cfg.scenario == Scenario::kNoise;
  auto has = [&](const char* d) {
    for (const std::string& s : cfg.detectors)
      if (s == d) return true;
    return false;
  };
  if (has("mmse")) out.push_back({"mmse", Variant::kMmse, qsim::NoiseSpec::ideal()});
  if (has("mld")) out.push_back({"mld", Variant::kMld, qsim::NoiseSpec::ideal()});
  if (has("gas")) {
    if (noise_scenario) {
      qsim::NoiseSpec depol;
      depol.depolarize_two = true;
      depol.p2 = cfg.noise_p2;
      depol.depolarize_one = cfg.noise_depolarize_one;
      depol.p1 = cfg.noise_p1;
      qsim::NoiseSpec readout;
      readout.readout = true;
      out.push_back({"gas-ideal", Variant::kGas, qsim::NoiseSpec::ideal()});
      out.push_back({"gas-depolarizing", Variant::kGas, depol});
      out.push_back({"gas-readout", Variant::kGas, readout});
    } else {
      qsim::NoiseSpec ns;
      ns.depolarize_two = cfg.noise_depolarize_two;
      ns.p2 = cfg.noise_p2;
      ns.depolarize_one = cfg.noise_depolarize_one;
      ns.p1 = cfg.noise_p1;
      ns.readout = cfg.noise_readout;
      out.push_back({"gas", Variant::kGas, ns});
    }
  }
  return out;
}

int thread_count(const ExperimentConfig& cfg) {
  if (cfg.threads > 0) return cfg.threads;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

template <typename Fn>
void parallel_trials(long blocks, int threads, Fn&& body) {
  if (threads <= 1 || blocks < 2 * threads) {
    for (long t = 0; t < blocks; ++t) body(t);
    return;
  }
  std::vector<std::thread> pool;
  const long chunk = (blocks + threads - 1) / threads;
  for (int w = 0; w < threads; ++w) {
    const long lo = w * chunk;
    const long hi = std::min(blocks, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &body] {
      for (long t = lo; t < hi; ++t) body(t);
    });
  }
  for (std::thread& th : pool) th.join();
}

std::string fmt_snr(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

std::string fmt_ber(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

std::string bits_string(std::uint64_t word, int n) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int i = 0; i < n; ++i)
    if ((word >> i) & 1u) s[static_cast<std::size_t>(i)] = '1';
  return s;
}

std::string trace_rows(long trial, const gas::GasTrace& trace, int n) {
  std::string out;
  for (const gas::IterationRecord& row : trace.rows) {
    out += std::to_string(trial) + "," + std::to_string(row.iter) + "," +
           format_double(row.gamma) + "," + fmt_ber(row.k) + "," +
           std::to_string(row.grover_power) + "," + bits_string(row.measured, n) + "," +
           format_double(row.energy) + "," + (row.improved ? "1" : "0") + "\n";
  }
  return out;
}

std::string run_ber_scenarios(const ExperimentConfig& cfg, std::string* trace_text) {
  const std::vector<SweepPoint> points = sweep_points(cfg);
  const std::vector<Variant> vars = variants_for(cfg);
  if (!cfg.trace_out.empty()) {
    if (points.size() != 1)
      throw ConfigError("trace_out requires a single sweep point");
    bool has_gas = false;
    for (const Variant& v : vars) has_gas |= v.kind == Variant::kGas;
    if (!has_gas) throw ConfigError("trace_out requires the gas detector");
  }

  const std::size_t n_snr = cfg.snr_db.size();
  const std::size_t n_var = vars.size();
  std::string csv = "scenario,detector,n,l,r,strategy,snr_db,bit_errors,bits_total,ber,seed\n";
  std::string traces;

  for (const SweepPoint& pt : points) {
    std::vector<long> errors(static_cast<std::size_t>(cfg.blocks) * n_snr * n_var, 0);
    std::vector<std::string> trial_traces(
        cfg.trace_out.empty() ? 0 : static_cast<std::size_t>(cfg.blocks));

    parallel_trials(cfg.blocks, thread_count(cfg), [&](long trial) {
      const std::uint64_t trial_seed = seed_plan(cfg.base_seed, static_cast<std::uint64_t>(trial));
      const TrialRealization real =
          make_trial(pt.n, pt.l_ui, pt.l_ib, pt.r, pt.strategy, cfg.ris_phase_bits, trial_seed);
      for (std::size_t si = 0; si < n_snr; ++si) {
        const scfde::RxBlock rx =
            scfde::transmit_with_noise(real.x, real.ch, cfg.snr_db[si], real.unit_noise);
        for (std::size_t vi = 0; vi < n_var; ++vi) {
          const Variant& v = vars[vi];
          std::size_t errs = 0;
          switch (v.kind) {
            case Variant::kMmse: {
              const scfde::BpskBlock hat =
                  scfde::hard_decision(scfde::mmse_equalize(rx, real.ch, 1.0));
              errs = scfde::count_bit_errors(hat, real.x);
              break;
            }
            case Variant::kMld: {
              const scfde::BpskBlock hat = scfde::mld_exhaustive(rx, real.ch);
              errs = scfde::count_bit_errors(hat, real.x);
              break;
            }
            case Variant::kGas: {
              gas::GasConfig gc = cfg.gas_config();
              gc.noise = v.noise;
              Rng gas_rng(gas_seed_plan(trial_seed, si, vi));
              const gas::DetectResult det = gas::detect(rx, real.ch, gc, gas_rng);
              errs = scfde::count_bit_errors(det.block, real.x);
              if (!cfg.trace_out.empty() && si == 0)
                trial_traces[static_cast<std::size_t>(trial)] =
                    trace_rows(trial, det.gas.trace, pt.n);
              break;
            }
          }
          errors[(static_cast<std::size_t>(trial) * n_snr + si) * n_var + vi] =
              static_cast<long>(errs);
        }
      }
    });

    for (std::size_t si = 0; si < n_snr; ++si) {
      for (std::size_t vi = 0; vi < n_var; ++vi) {
        long total_errors = 0;
        for (long trial = 0; trial < cfg.blocks; ++trial)
          total_errors += errors[(static_cast<std::size_t>(trial) * n_snr + si) * n_var + vi];
        const long total_bits = cfg.blocks * pt.n;
        csv += std::string(scenario_name(cfg.scenario)) + "," + vars[vi].label + "," +
               std::to_string(pt.n) + "," + std::to_string(pt.l_ui + pt.l_ib - 1) + "," +
               std::to_string(pt.r) + "," + channel::strategy_name(pt.strategy) + "," +
               fmt_snr(cfg.snr_db[si]) + "," + std::to_string(total_errors) + "," +
               std::to_string(total_bits) + "," +
               fmt_ber(static_cast<double>(total_errors) / static_cast<double>(total_bits)) +
               "," + std::to_string(cfg.base_seed) + "\n";
      }
    }
    for (const std::string& t : trial_traces) traces += t;
  }
  if (trace_text) *trace_text = std::move(traces);
  return csv;
}

std::string run_convergence_scenario(const ExperimentConfig& cfg) {
  const SweepPoint pt = sweep_points(cfg).front();
  const int iters = cfg.gas_max_iterations;
  const std::size_t n_snr = cfg.snr_db.size();
  const std::size_t per_trial = n_snr * 2 * static_cast<std::size_t>(iters + 1);
  std::vector<long> errors(static_cast<std::size_t>(cfg.blocks) * per_trial, 0);

  parallel_trials(cfg.blocks, thread_count(cfg), [&](long trial) {
    const std::uint64_t trial_seed = seed_plan(cfg.base_seed, static_cast<std::uint64_t>(trial));
    const TrialRealization real =
        make_trial(pt.n, pt.l_ui, pt.l_ib, pt.r, pt.strategy, cfg.ris_phase_bits, trial_seed);
    const std::uint64_t x_word = pack_bits(real.x.bits);
    for (std::size_t si = 0; si < n_snr; ++si) {
      const scfde::RxBlock rx =
          scfde::transmit_with_noise(real.x, real.ch, cfg.snr_db[si], real.unit_noise);
      for (std::size_t init_idx = 0; init_idx < 2; ++init_idx) {
        gas::GasConfig gc = cfg.gas_config();
        gc.init = init_idx == 0 ? gas::InitMode::kMmse : gas::InitMode::kRandom;
        gc.initial_word.reset();
        gc.fixed_iterations = true;
        gc.max_iterations = iters;
        Rng gas_rng(gas_seed_plan(trial_seed, si, init_idx));
        const gas::DetectResult det = gas::detect(rx, real.ch, gc, gas_rng);

        // Bit errors of the running best after each iteration.
        std::uint64_t cur = det.gas.trace.initial_word;
        const std::size_t base =
            (static_cast<std::size_t>(trial) * n_snr + si) * 2 * (iters + 1) +
            init_idx * (iters + 1);
        errors[base] = static_cast<long>(__builtin_popcountll(cur ^ x_word));
        for (int i = 1; i <= iters; ++i) {
          const gas::IterationRecord& row =
              det.gas.trace.rows[static_cast<std::size_t>(i - 1)];
          if (row.improved) cur = row.measured;
          errors[base + static_cast<std::size_t>(i)] =
              static_cast<long>(__builtin_popcountll(cur ^ x_word));
        }
      }
    }
  });

  std::string csv =
      "scenario,detector,n,l,r,strategy,snr_db,iteration,bit_errors,bits_total,ber,seed\n";
  const char* init_labels[2] = {"gas-mmse", "gas-random"};
  for (std::size_t si = 0; si < n_snr; ++si) {
    for (std::size_t init_idx = 0; init_idx < 2; ++init_idx) {
      for (int i = 0; i <= iters; ++i) {
        long total = 0;
        for (long trial = 0; trial < cfg.blocks; ++trial) {
          const std::size_t base =
              (static_cast<std::size_t>(trial) * n_snr + si) * 2 * (iters + 1) +
              init_idx * (iters + 1);
          total += errors[base + static_cast<std::size_t>(i)];
        }
        const long total_bits = cfg.blocks * pt.n;
        csv += std::string(scenario_name(cfg.scenario)) + "," + init_labels[init_idx] + "," +
               std::to_string(pt.n) + "," + std::to_string(pt.l_ui + pt.l_ib - 1) + "," +
               std::to_string(pt.r) + "," + channel::strategy_name(pt.strategy) + "," +
               fmt_snr(cfg.snr_db[si]) + "," + std::to_string(i) + "," + std::to_string(total) +
               "," + std::to_string(total_bits) + "," +
               fmt_ber(static_cast<double>(total) / static_cast<double>(total_bits)) + "," +
               std::to_string(cfg.base_seed) + "\n";
      }
    }
  }
  return csv;
}

std::string run_resources_scenario(const ExperimentConfig& cfg) {
  if (cfg.resources_mode == ResourcesMode::kBudget) {
    std::string csv = "n,m,l,h,rz,crz,ccrz,iqft\n";
    for (int n : cfg.n_list)
      for (int m : cfg.m_list)
        for (int l : cfg.l_list) {
          const resources::GateBudget b = resources::budget_state_prep(n, m, l);
          csv += std::to_string(n) + "," + std::to_string(m) + "," + std::to_string(l) + "," +
                 std::to_string(b.h) + "," + std::to_string(b.rz) + "," + std::to_string(b.crz) +
                 "," + std::to_string(b.ccrz) + "," + std::to_string(b.iqft_blocks) + "\n";
        }
    return csv;
  }
  // Query statistics of seeded GAS runs.
  const SweepPoint pt = sweep_points(cfg).front();
  struct Row {
    long classical, grover;
    double expected;
  };
  std::vector<Row> rows(static_cast<std::size_t>(cfg.blocks));
  parallel_trials(cfg.blocks, thread_count(cfg), [&](long trial) {
    const std::uint64_t trial_seed = seed_plan(cfg.base_seed, static_cast<std::uint64_t>(trial));
    const TrialRealization real =
        make_trial(pt.n, pt.l_ui, pt.l_ib, pt.r, pt.strategy, cfg.ris_phase_bits, trial_seed);
    const scfde::RxBlock rx =
        scfde::transmit_with_noise(real.x, real.ch, cfg.snr_db.front(), real.unit_noise);
    Rng gas_rng(gas_seed_plan(trial_seed, 0, 0));
    const gas::DetectResult det = gas::detect(rx, real.ch, cfg.gas_config(), gas_rng);
    const resources::QueryStats qs = resources::query_stats(det.gas.trace);
    rows[static_cast<std::size_t>(trial)] = {qs.classical, qs.grover_calls, qs.expected_grover};
  });
  std::string csv = "trial,classical,grover_calls,expected_grover\n";
  for (long trial = 0; trial < cfg.blocks; ++trial) {
    const Row& r = rows[static_cast<std::size_t>(trial)];
    csv += std::to_string(trial) + "," + std::to_string(r.classical) + "," +
           std::to_string(r.grover) + "," + fmt_ber(r.expected) + "\n";
  }
  return csv;
}

std::string run_dump_qubo(const ExperimentConfig& cfg) {
  const SweepPoint pt = sweep_points(cfg).front();
  const std::uint64_t trial_seed = seed_plan(cfg.base_seed, 0);
  const TrialRealization real =
      make_trial(pt.n, pt.l_ui, pt.l_ib, pt.r, pt.strategy, cfg.ris_phase_bits, trial_seed);
  const scfde::RxBlock rx =
      scfde::transmit_with_noise(real.x, real.ch, cfg.snr_db.front(), real.unit_noise);
  return qubo::dump(qubo::build_qubo(real.ch.lambda, rx.y_f));
}

}  // namespace

std::uint64_t seed_plan(std::uint64_t base_seed, std::uint64_t trial_index) {
  return splitmix64(splitmix64(base_seed) + trial_index);
}

std::uint64_t gas_seed_plan(std::uint64_t trial_seed, std::size_t snr_index, std::size_t variant) {
  return splitmix64(trial_seed ^ splitmix64((static_cast<std::uint64_t>(snr_index) << 32) |
                                            (static_cast<std::uint64_t>(variant) + 1)));
}

TrialRealization make_trial(int n, int l_ui, int l_ib, int r_elements,
                            channel::TapStrategy strategy, int phase_bits,
                            std::uint64_t trial_seed) {
  Rng rng(trial_seed);
  TrialRealization t;
  const channel::RisPaths paths = channel::sample_paths(
      static_cast<std::size_t>(l_ui), static_cast<std::size_t>(l_ib),
      static_cast<std::size_t>(r_elements), rng);
  const channel::RisConfig cfgr = channel::configure(paths, strategy, phase_bits);
  t.ch = channel::make_realization(channel::cascade(paths, cfgr), static_cast<std::size_t>(n));
  t.x = scfde::random_block(static_cast<std::size_t>(n), rng);
  t.unit_noise.resize(static_cast<std::size_t>(n));
  for (cplx& w : t.unit_noise) w = rng.cgaussian(1.0);
  return t;
}

ExperimentOutput run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  ExperimentOutput out;
  switch (cfg.scenario) {
    case Scenario::kRisGain:
    case Scenario::kTaps:
    case Scenario::kTapCompensation:
    case Scenario::kNoise:
      out.main_text = run_ber_scenarios(cfg, &out.trace_text);
      break;
    case Scenario::kConvergence:
      out.main_text = run_convergence_scenario(cfg);
      break;
    case Scenario::kResources:
      out.main_text = run_resources_scenario(cfg);
      break;
    case Scenario::kDumpQubo:
      out.main_text = run_dump_qubo(cfg);
      break;
  }
  return out;
}

}  // namespace gasdet::exp
