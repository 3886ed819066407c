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

#include "gas.hpp"

#include <cmath>
#include <limits>

namespace gasdet::gas {

namespace {

void check_width(const qubo::EnergyBounds& bounds, double gamma, int m) {
  const double half = std::pow(2.0, m - 1);
  if (bounds.e_max - gamma > half - 1.0 + 1e-9 || bounds.e_min - gamma < -half - 1e-9)
    throw WidthError("value register of " + std::to_string(m) +
                     " qubits cannot represent the shifted cost range");
}

void append_rotation_set(qsim::Circuit& c, const std::vector<int>& support, double coeff,
                         int n, int m) {
  const double kappa = kTwoPi / std::pow(2.0, m);
  for (int j = 0; j < m; ++j) {
    const double angle = coeff * std::pow(2.0, j) * kappa;
    const int target = n + j;
    if (support.empty()) {
      c.append(qsim::Gate::rz(target, angle));
    } else if (support.size() == 1) {
      c.append(qsim::Gate::crz(support[0], target, angle));
    } else {
      c.append(qsim::Gate::mcrz(support, target, angle));
    }
  }
}

qubo::EnergyBounds bounds_for(const qubo::QuboProblem& p) {
  return qubo::energy_bounds(
      p, p.n <= 20 ? qubo::BoundsMode::kExact : qubo::BoundsMode::kInterval);
}

// Ideal-path executor. All rotations of one encoder pass commute, so they
// collapse into a single diagonal phase table per threshold; IQFT and the
// Hadamard layers stay as block passes. Produces the same state as the
// gate-by-gate circuit.
class FusedRunner {
 public:
  FusedRunner(const qubo::QuboProblem& p, int m)
      : n_(p.n),
        m_(m),
        kappa_(kTwoPi / std::pow(2.0, m)),
        energies_(qubo::enumerate_energies(p)) {}

  void set_gamma(double gamma) {
    if (gamma == gamma_ && !diag_.empty()) return;
    gamma_ = gamma;
    const std::size_t keys = std::size_t{1} << n_;
    const std::size_t total = keys << m_;
    diag_.resize(total);
    for (std::size_t b = 0; b < keys; ++b) {
      const double ang = kappa_ * (energies_[b] - gamma);
      const cplx w{std::cos(ang), std::sin(ang)};
      cplx cur{1.0, 0.0};
      for (std::size_t z = 0; z < (std::size_t{1} << m_); ++z) {
        diag_[b + (z << n_)] = cur;
        cur *= w;
      }
    }
  }

  qsim::Statevector run(long grover_power) {
    qsim::Statevector state = qsim::Statevector::zero(n_ + m_);
    const std::size_t keys = std::size_t{1} << n_;
    const double amp = 1.0 / std::sqrt(static_cast<double>(keys));
    state.amps.assign(state.amps.size(), cplx{0.0, 0.0});
    for (std::size_t b = 0; b < keys; ++b) state.amps[b] = cplx{amp, 0.0};
    apply_encoder(state, false);
    for (long l = 0; l < grover_power; ++l) {
      flip_msb(state);
      apply_encoder(state, true);
      qsim::apply_gate(state, qsim::Gate::diffusion(0, n_));
      apply_encoder(state, false);
    }
    return state;
  }

 private:
  void apply_encoder(qsim::Statevector& state, bool dagger) {
    if (!dagger) {
      for (int j = 0; j < m_; ++j) qsim::apply_gate(state, qsim::Gate::h(n_ + j));
      for (std::size_t i = 0; i < state.amps.size(); ++i) state.amps[i] *= diag_[i];
      qsim::apply_gate(state, qsim::Gate::iqft(n_, m_));
    } else {
      qsim::Gate qft = qsim::Gate::iqft(n_, m_);
      qft.adjoint = true;
      qsim::apply_gate(state, qft);
      for (std::size_t i = 0; i < state.amps.size(); ++i)
        state.amps[i] *= std::conj(diag_[i]);
      for (int j = 0; j < m_; ++j) qsim::apply_gate(state, qsim::Gate::h(n_ + j));
    }
  }

  void flip_msb(qsim::Statevector& state) {
    const std::size_t half = state.amps.size() / 2;
    for (std::size_t i = half; i < state.amps.size(); ++i) state.amps[i] = -state.amps[i];
  }

  int n_;
  int m_;
  double kappa_;
  std::vector<double> energies_;
  std::vector<cplx> diag_;
  double gamma_ = std::numeric_limits<double>::quiet_NaN();
};

}  // namespace

void GasConfig::validate() const {
  if (lambda_growth <= 1.0) throw InvalidArgument("GasConfig: lambda_growth must be > 1");
  if (patience < 1) throw InvalidArgument("GasConfig: patience must be >= 1");
  if (max_iterations < 0) throw InvalidArgument("GasConfig: negative max_iterations");
  if (width_margin < 0) throw InvalidArgument("GasConfig: negative width_margin");
  noise.validate();
}

qsim::Circuit build_encoder(const qubo::QuboProblem& p, double gamma, int m) {
  if (m < 1) throw InvalidArgument("build_encoder: m must be >= 1");
  qsim::Circuit f;
  f.num_qubits = p.n + m;
  for (int j = 0; j < m; ++j) f.append(qsim::Gate::h(p.n + j));
  for (const qubo::Monomial& mono : qubo::to_monomials(p)) {
    if (mono.support.empty()) continue;  // folded into the threshold shift below
    append_rotation_set(f, mono.support, mono.coefficient, p.n, m);
  }
  const double shift = p.constant - gamma;
  if (shift != 0.0) append_rotation_set(f, {}, shift, p.n, m);
  f.append(qsim::Gate::iqft(p.n, m));
  return f;
}

qsim::Circuit build_state_prep(const qubo::QuboProblem& p, double gamma, int m,
                               const qubo::EnergyBounds* bounds) {
  if (bounds) check_width(*bounds, gamma, m);
  qsim::Circuit a;
  a.num_qubits = p.n + m;
  for (int i = 0; i < p.n; ++i) a.append(qsim::Gate::h(i));
  a.append(build_encoder(p, gamma, m));
  return a;
}

qsim::Circuit build_oracle(const qubo::QuboProblem& p, double gamma, int m,
                           const qubo::EnergyBounds* bounds) {
  if (bounds) check_width(*bounds, gamma, m);
  const qsim::Circuit f = build_encoder(p, gamma, m);
  qsim::Circuit o;
  o.num_qubits = f.num_qubits;
  o.append(f);
  o.append(qsim::Gate::z(p.n + m - 1));
  o.append(f.inverse());
  return o;
}

qsim::Circuit build_diffusion(int n) {
  if (n < 1) throw InvalidArgument("build_diffusion: n must be >= 1");
  qsim::Circuit d;
  d.num_qubits = n;
  d.append(qsim::Gate::diffusion(0, n));
  return d;
}

void grover_step(qsim::Statevector& state, const qubo::QuboProblem& p, double gamma, int m) {
  if (state.num_qubits != p.n + m) throw InvalidArgument("grover_step: qubit count mismatch");
  const qsim::Circuit f = build_encoder(p, gamma, m);
  qsim::apply_gate(state, qsim::Gate::z(p.n + m - 1));
  for (const qsim::Gate& g : f.inverse().gates) qsim::apply_gate(state, g);
  qsim::apply_gate(state, qsim::Gate::diffusion(0, p.n));
  for (const qsim::Gate& g : f.gates) qsim::apply_gate(state, g);
}

qsim::Statevector encoded_state(const qubo::QuboProblem& p, double gamma, int m,
                                long grover_power) {
  if (grover_power < 0) throw InvalidArgument("encoded_state: negative Grover power");
  FusedRunner runner(p, m);
  runner.set_gamma(gamma);
  return runner.run(grover_power);
}

std::pair<scfde::BpskBlock, double> mmse_threshold(const scfde::RxBlock& rx,
                                                   const channel::ChannelRealization& ch) {
  scfde::BpskBlock b0 = scfde::hard_decision(scfde::mmse_equalize(rx, ch, 1.0));
  const double y0 = scfde::metric(rx.y, ch, b0.bits);
  return {std::move(b0), y0};
}

long sample_grover_power(double k, Rng& rng) {
  const double hi = std::ceil(k - 1.0);
  const long cap = hi <= 0.0 ? 0 : static_cast<long>(hi);
  return static_cast<long>(rng.uniform_int(static_cast<std::uint64_t>(cap)));
}

GasResult run_gas(const qubo::QuboProblem& p, const GasConfig& cfg, Rng& rng) {
  cfg.validate();
  if (cfg.init == InitMode::kMmse && !cfg.initial_word)
    throw InvalidArgument("run_gas: MMSE init requires an initial word (see detect)");
  const int n = p.n;
  if (n < 1) throw InvalidArgument("run_gas: empty problem");

  GasResult res;
  res.n = n;
  res.bounds = bounds_for(p);
  res.m = qubo::register_width(res.bounds, cfg.width_margin);
  const int m = res.m;

  std::uint64_t best =
      cfg.initial_word ? *cfg.initial_word : (rng.u64() & ((std::uint64_t{1} << n) - 1));
  double y_best = qubo::energy_packed(p, best);
  res.trace.initial_word = best;
  res.trace.initial_energy = y_best;
  res.trace.classical_queries = 1;

  const bool gate_path = cfg.noise.any_depolarizing();
  FusedRunner fused(p, m);
  const double k_cap = std::pow(2.0, 0.5 * n);
  double k = 1.0;
  int stale = 0;

  for (int iter = 1; iter <= cfg.max_iterations; ++iter) {
    const long power = sample_grover_power(k, rng);
    const double gamma = y_best;

    qsim::Statevector state = [&] {
      if (!gate_path) {
        fused.set_gamma(gamma);
        return fused.run(power);
      }
      const qsim::Circuit f = build_encoder(p, gamma, m);
      qsim::Circuit circ;
      circ.num_qubits = n + m;
      for (int i = 0; i < n; ++i) circ.append(qsim::Gate::h(i));
      const qsim::Circuit f_dag = f.inverse();
      circ.append(f);
      for (long l = 0; l < power; ++l) {
        circ.append(qsim::Gate::z(n + m - 1));
        circ.append(f_dag);
        circ.append(qsim::Gate::diffusion(0, n));
        circ.append(f);
      }
      const qsim::Circuit noisy = qsim::inject_depolarizing(circ, cfg.noise, rng);
      qsim::Statevector s = qsim::Statevector::zero(n + m);
      qsim::apply_circuit(s, noisy);
      return s;
    }();

    const std::uint64_t word =
        qsim::measure_register(state, 0, n, 1, rng, cfg.noise).front();
    const double e = qubo::energy_packed(p, word);
    ++res.trace.classical_queries;

    const bool improved = e < y_best;
    res.trace.rows.push_back({iter, gamma, k, power, word, e, improved});
    res.trace.grover_calls += power;
    res.trace.a_blocks += 2 * power + 1;
    res.trace.z_gates += power;
    res.trace.diffusion_blocks += power;

    if (improved) {
      best = word;
      y_best = e;
      k = 1.0;
      stale = 0;
    } else {
      k = std::min(cfg.lambda_growth * k, k_cap);
      ++stale;
    }
    if (!cfg.fixed_iterations && stale >= cfg.patience) break;
  }

  res.best_word = best;
  res.best_energy = y_best;
  return res;
}

DetectResult detect(const scfde::RxBlock& rx, const channel::ChannelRealization& ch,
                    const GasConfig& cfg, Rng& rng) {
  const qubo::QuboProblem p = qubo::build_qubo(ch.lambda, rx.y_f);
  GasConfig local = cfg;
  if (cfg.init == InitMode::kMmse && !cfg.initial_word)
    local.initial_word = pack_bits(mmse_threshold(rx, ch).first.bits);
  DetectResult out;
  out.gas = run_gas(p, local, rng);
  out.block = scfde::block_from_bits(out.gas.best_bits());
  return out;
}

}  // namespace gasdet::gas
