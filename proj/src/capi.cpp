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

#include "gasdet/gasdet.h"

#include <cstring>
#include <memory>
#include <new>

#include "experiment.hpp"

using namespace gasdet;

namespace {

thread_local std::string g_last_error;

int fail(int code, const char* what) {
  g_last_error = what ? what : "";
  return code;
}

template <typename Fn>
int guarded(Fn&& fn) {
  try {
    fn();
    return GASDET_OK;
  } catch (const WidthError& e) {
    return fail(GASDET_ERR_WIDTH, e.what());
  } catch (const ResourceLimit& e) {
    return fail(GASDET_ERR_RESOURCE_LIMIT, e.what());
  } catch (const ConfigError& e) {
    return fail(GASDET_ERR_CONFIG, e.what());
  } catch (const InvalidArgument& e) {
    return fail(GASDET_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(GASDET_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(GASDET_ERR_INTERNAL, e.what());
  }
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

struct gasdet_rng {
  Rng rng;
};

struct gasdet_channel {
  channel::ChannelRealization ch;
};

struct gasdet_qubo {
  qubo::QuboProblem p;
};

struct gasdet_gas_result {
  gas::GasResult res;
};

struct gasdet_experiment {
  exp::ExperimentConfig cfg;
  exp::ExperimentOutput out;
  bool ran = false;
};

extern "C" {

const char* gasdet_version(void) { return "0.1.0"; }

const char* gasdet_status_name(int status) {
  switch (status) {
    case GASDET_OK: return "ok";
    case GASDET_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case GASDET_ERR_RESOURCE_LIMIT: return "resource-limit";
    case GASDET_ERR_WIDTH: return "width-error";
    case GASDET_ERR_CONFIG: return "config-error";
    case GASDET_ERR_INTERNAL: return "internal-error";
  }
  return "unknown";
}

const char* gasdet_last_error(void) { return g_last_error.c_str(); }

void gasdet_string_free(char* text) { delete[] text; }

gasdet_rng* gasdet_rng_new(uint64_t seed) { return new (std::nothrow) gasdet_rng{Rng(seed)}; }

void gasdet_rng_free(gasdet_rng* rng) { delete rng; }

int gasdet_channel_sample(int n, int l_ui, int l_ib, int r_elements, const char* strategy,
                          gasdet_rng* rng, gasdet_channel** out) {
  if (!rng || !out || !strategy)
    return fail(GASDET_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    if (n < 1 || l_ui < 1 || l_ib < 1 || r_elements < 1)
      throw InvalidArgument("channel dimensions must be >= 1");
    const channel::RisPaths paths =
        channel::sample_paths(static_cast<std::size_t>(l_ui), static_cast<std::size_t>(l_ib),
                              static_cast<std::size_t>(r_elements), rng->rng);
    const channel::RisConfig cfg =
        channel::configure(paths, channel::strategy_from_name(strategy));
    auto ch = std::make_unique<gasdet_channel>();
    ch->ch = channel::make_realization(channel::cascade(paths, cfg),
                                       static_cast<std::size_t>(n));
    *out = ch.release();
  });
}

int gasdet_channel_taps(const gasdet_channel* ch, int* len) {
  if (!ch || !len) return fail(GASDET_ERR_INVALID_ARGUMENT, "null argument");
  *len = static_cast<int>(ch->ch.h_tilde.size());
  return GASDET_OK;
}

int gasdet_channel_impulse(const gasdet_channel* ch, double* re, double* im) {
  if (!ch || !re || !im) return fail(GASDET_ERR_INVALID_ARGUMENT, "null argument");
  for (std::size_t i = 0; i < ch->ch.h_tilde.size(); ++i) {
    re[i] = ch->ch.h_tilde[i].real();
    im[i] = ch->ch.h_tilde[i].imag();
  }
  return GASDET_OK;
}

int gasdet_channel_lambda(const gasdet_channel* ch, double* re, double* im) {
  if (!ch || !re || !im) return fail(GASDET_ERR_INVALID_ARGUMENT, "null argument");
  for (std::size_t i = 0; i < ch->ch.lambda.size(); ++i) {
    re[i] = ch->ch.lambda[i].real();
    im[i] = ch->ch.lambda[i].imag();
  }
  return GASDET_OK;
}

void gasdet_channel_free(gasdet_channel* ch) { delete ch; }

int gasdet_qubo_build(int n, const double* lambda_re, const double* lambda_im,
                      const double* yf_re, const double* yf_im, gasdet_qubo** out) {
  if (!lambda_re || !lambda_im || !yf_re || !yf_im || !out)
    return fail(GASDET_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    if (n < 1) throw InvalidArgument("n must be >= 1");
    cvec lambda(static_cast<std::size_t>(n)), y_f(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      lambda[static_cast<std::size_t>(i)] = cplx{lambda_re[i], lambda_im[i]};
      y_f[static_cast<std::size_t>(i)] = cplx{yf_re[i], yf_im[i]};
    }
    auto q = std::make_unique<gasdet_qubo>();
    q->p = qubo::build_qubo(lambda, y_f);
    *out = q.release();
  });
}

int gasdet_qubo_energy(const gasdet_qubo* q, const uint8_t* bits, int n, double* energy) {
  if (!q || !bits || !energy) return fail(GASDET_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    std::vector<std::uint8_t> b(bits, bits + n);
    *energy = qubo::energy(q->p, b);
  });
}

int gasdet_qubo_bounds(const gasdet_qubo* q, int exact, double* e_min, double* e_max) {
  if (!q || !e_min || !e_max) return fail(GASDET_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const qubo::EnergyBounds b = qubo::energy_bounds(
        q->p, exact ? qubo::BoundsMode::kExact : qubo::BoundsMode::kInterval);
    *e_min = b.e_min;
    *e_max = b.e_max;
  });
}

int gasdet_register_width(double e_min, double e_max, int margin, int* m) {
  if (!m) return fail(GASDET_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    qubo::EnergyBounds b;
    b.e_min = e_min;
    b.e_max = e_max;
    *m = qubo::register_width(b, margin);
  });
}

int gasdet_qubo_dump(const gasdet_qubo* q, char** text) {
  if (!q || !text) return fail(GASDET_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *text = dup_string(qubo::dump(q->p)); });
}

void gasdet_qubo_free(gasdet_qubo* q) { delete q; }

void gasdet_gas_options_init(gasdet_gas_options* opts) {
  if (!opts) return;
  opts->lambda_growth = 8.0 / 7.0;
  opts->max_iterations = 50;
  opts->patience = 12;
  opts->fixed_iterations = 0;
  opts->width_margin = 0;
  opts->initial_bits = nullptr;
  opts->depolarize_two = 0;
  opts->p2 = 0.02;
  opts->depolarize_one = 0;
  opts->p1 = 0.0;
  opts->readout = 0;
}

int gasdet_gas_run(const gasdet_qubo* q, const gasdet_gas_options* opts, uint64_t seed,
                   gasdet_gas_result** out) {
  if (!q || !out) return fail(GASDET_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    gas::GasConfig cfg;
    if (opts) {
      cfg.lambda_growth = opts->lambda_growth;
      cfg.max_iterations = opts->max_iterations;
      cfg.patience = opts->patience;
      cfg.fixed_iterations = opts->fixed_iterations != 0;
      cfg.width_margin = opts->width_margin;
      cfg.noise.depolarize_two = opts->depolarize_two != 0;
      cfg.noise.p2 = opts->p2;
      cfg.noise.depolarize_one = opts->depolarize_one != 0;
      cfg.noise.p1 = opts->p1;
      cfg.noise.readout = opts->readout != 0;
      if (opts->initial_bits) {
        std::vector<std::uint8_t> bits(opts->initial_bits, opts->initial_bits + q->p.n);
        cfg.initial_word = pack_bits(bits);
      }
    }
    Rng rng(seed);
    auto res = std::make_unique<gasdet_gas_result>();
    res->res = gas::run_gas(q->p, cfg, rng);
    *out = res.release();
  });
}

int gasdet_gas_best(const gasdet_gas_result* res, uint8_t* bits, int n, double* energy) {
  if (!res || !bits || !energy) return fail(GASDET_ERR_INVALID_ARGUMENT, "null argument");
  if (n != res->res.n) return fail(GASDET_ERR_INVALID_ARGUMENT, "bit buffer length mismatch");
  const std::vector<std::uint8_t> b = res->res.best_bits();
  for (int i = 0; i < n; ++i) bits[i] = b[static_cast<std::size_t>(i)];
  *energy = res->res.best_energy;
  return GASDET_OK;
}

int gasdet_gas_iterations(const gasdet_gas_result* res, int* iterations) {
  if (!res || !iterations) return fail(GASDET_ERR_INVALID_ARGUMENT, "null argument");
  *iterations = static_cast<int>(res->res.trace.rows.size());
  return GASDET_OK;
}

int gasdet_gas_register_width(const gasdet_gas_result* res, int* m) {
  if (!res || !m) return fail(GASDET_ERR_INVALID_ARGUMENT, "null argument");
  *m = res->res.m;
  return GASDET_OK;
}

int gasdet_gas_queries(const gasdet_gas_result* res, long* classical, long* grover_calls,
                       double* expected_grover) {
  if (!res || !classical || !grover_calls || !expected_grover)
    return fail(GASDET_ERR_INVALID_ARGUMENT, "null argument");
  const resources::QueryStats qs = resources::query_stats(res->res.trace);
  *classical = qs.classical;
  *grover_calls = qs.grover_calls;
  *expected_grover = qs.expected_grover;
  return GASDET_OK;
}

int gasdet_gas_trace_csv(const gasdet_gas_result* res, char** text) {
  if (!res || !text) return fail(GASDET_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    std::string out = "trial,iter,gamma,k,L,measured_bits,energy,improved\n";
    for (const gas::IterationRecord& row : res->res.trace.rows) {
      std::string bits(static_cast<std::size_t>(res->res.n), '0');
      for (int i = 0; i < res->res.n; ++i)
        if ((row.measured >> i) & 1u) bits[static_cast<std::size_t>(i)] = '1';
      out += "0," + std::to_string(row.iter) + "," + format_double(row.gamma) + "," +
             format_double(row.k) + "," + std::to_string(row.grover_power) + "," + bits + "," +
             format_double(row.energy) + "," + (row.improved ? "1" : "0") + "\n";
    }
    *text = dup_string(out);
  });
}

void gasdet_gas_result_free(gasdet_gas_result* res) { delete res; }

int gasdet_budget_state_prep(int n, int m, int l_taps, long counts[6]) {
  if (!counts) return fail(GASDET_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const resources::GateBudget b = resources::budget_state_prep(n, m, l_taps);
    counts[0] = b.h;
    counts[1] = b.rz;
    counts[2] = b.crz;
    counts[3] = b.ccrz;
    counts[4] = b.higher_controlled;
    counts[5] = b.iqft_blocks;
  });
}

int gasdet_grover_optimal(double search_size, double marked, long* iterations) {
  if (!iterations) return fail(GASDET_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *iterations = resources::grover_optimal(search_size, marked); });
}

int gasdet_experiment_new(const char* config_text, gasdet_experiment** out) {
  if (!config_text || !out) return fail(GASDET_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    auto e = std::make_unique<gasdet_experiment>();
    e->cfg = exp::parse_config(config_text);
    *out = e.release();
  });
}

int gasdet_experiment_run(gasdet_experiment* e) {
  if (!e) return fail(GASDET_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    e->out = exp::run_experiment(e->cfg);
    e->ran = true;
  });
}

const char* gasdet_experiment_output(const gasdet_experiment* e) {
  return e && e->ran ? e->out.main_text.c_str() : "";
}

const char* gasdet_experiment_trace(const gasdet_experiment* e) {
  return e && e->ran ? e->out.trace_text.c_str() : "";
}

void gasdet_experiment_free(gasdet_experiment* e) { delete e; }

}  // extern "C"
