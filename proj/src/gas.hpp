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

#ifndef GASDET_GAS_HPP
#define GASDET_GAS_HPP

#include <optional>

#include "qsim.hpp"
#include "qubo.hpp"
#include "scfde.hpp"

namespace gasdet::gas {

enum class InitMode { kRandom, kMmse };

struct GasConfig {
  double lambda_growth = 8.0 / 7.0;
  int max_iterations = 50;
  int patience = 12;           // consecutive non-improving iterations before stop
  bool fixed_iterations = false;  // run exactly max_iterations (convergence studies)
  InitMode init = InitMode::kRandom;
  std::optional<std::uint64_t> initial_word;  // packed b_0; required for kMmse
  int width_margin = 0;
  qsim::NoiseSpec noise;

  void validate() const;
};

struct IterationRecord {
  int iter = 0;          // 1-based
  double gamma = 0.0;    // threshold used this iteration
  double k = 1.0;        // control parameter before the update
  long grover_power = 0; // L_i
  std::uint64_t measured = 0;
  double energy = 0.0;   // classical re-evaluation of the measured bits
  bool improved = false;
};

struct GasTrace {
  std::uint64_t initial_word = 0;
  double initial_energy = 0.0;
  std::vector<IterationRecord> rows;
  long classical_queries = 0;  // rows + initial evaluation
  long grover_calls = 0;       // sum of L_i
  long a_blocks = 0;           // state-preparation blocks applied (2L_i + 1 each)
  long z_gates = 0;
  long diffusion_blocks = 0;
};

struct GasResult {
  std::uint64_t best_word = 0;
  double best_energy = 0.0;
  int n = 0;
  int m = 0;
  qubo::EnergyBounds bounds;
  GasTrace trace;

  std::vector<std::uint8_t> best_bits() const { return unpack_bits(best_word, n); }
};

/// Phase-encoding block F: value-register Hadamards, one rotation per
/// (monomial, value qubit) with angle coeff * 2^j * 2pi/2^m plus the
/// unconditional rotations for (constant - gamma), then the IQFT.
qsim::Circuit build_encoder(const qubo::QuboProblem& p, double gamma, int m);

/// A_gamma = key-register Hadamards followed by the encoder. When `bounds`
/// is given, throws WidthError if some shifted cost cannot be represented.
qsim::Circuit build_state_prep(const qubo::QuboProblem& p, double gamma, int m,
                               const qubo::EnergyBounds* bounds = nullptr);

/// Compute-mark-uncompute oracle F^dag Z F as a gate list [F, Z(msb), F^dag];
/// on a clean value register it flips exactly the keys with E(b) < gamma.
qsim::Circuit build_oracle(const qubo::QuboProblem& p, double gamma, int m,
                           const qubo::EnergyBounds* bounds = nullptr);

/// Reflection about the uniform key superposition, identity on the value
/// register.
qsim::Circuit build_diffusion(int n);

/// One Grover iteration applied to an encoded state (A-prepared): mark via
/// Z on the value MSB, uncompute with F^dag, diffuse the key register,
/// re-encode with F.
void grover_step(qsim::Statevector& state, const qubo::QuboProblem& p, double gamma, int m);

/// G^L A_gamma |0> on n+m qubits, computed by the fast ideal path (fused
/// diagonal phases). Matches the gate-by-gate circuit to float precision.
qsim::Statevector encoded_state(const qubo::QuboProblem& p, double gamma, int m,
                                long grover_power);

/// MMSE hard decision and its exact detection metric (the initial threshold).
std::pair<scfde::BpskBlock, double> mmse_threshold(const scfde::RxBlock& rx,
                                                   const channel::ChannelRealization& ch);

long sample_grover_power(double k, Rng& rng);

GasResult run_gas(const qubo::QuboProblem& p, const GasConfig& cfg, Rng& rng);

struct DetectResult {
  scfde::BpskBlock block;
  GasResult gas;
};

/// End-to-end detection: QUBO from (lambda, y_f), register sizing, GAS.
DetectResult detect(const scfde::RxBlock& rx, const channel::ChannelRealization& ch,
                    const GasConfig& cfg, Rng& rng);

}  // namespace gasdet::gas

#endif  // GASDET_GAS_HPP
