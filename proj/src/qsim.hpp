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

#ifndef GASDET_QSIM_HPP
#define GASDET_QSIM_HPP

#include <string>

#include "common.hpp"
#include "rng.hpp"

namespace gasdet::qsim {

// Qubit 0 is the least-significant bit of the amplitude index. In GAS
// circuits the key register occupies qubits [0, n) and the value register
// sits above it, with value qubit j carrying weight 2^j.

struct Statevector {
  std::vector<cplx> amps;
  int num_qubits = 0;

  static Statevector zero(int num_qubits);
  double norm() const;
};

enum class GateKind {
  kH,
  kX,
  kY,
  kZ,
  kRz,      // diag(1, e^{i theta}) on the target
  kCrz,     // one control
  kMcrz,    // two or more controls
  kCnot,
  kSwap,
  kIqft,        // inverse Fourier block on a contiguous register
  kDiffusion,   // 2|u><u| - I on a contiguous register
};

struct Gate {
  GateKind kind;
  std::vector<int> targets;
  std::vector<int> controls;
  double theta = 0.0;
  bool adjoint = false;   // meaningful for the IQFT block
  bool is_noise = false;  // inserted by a noise channel

  static Gate h(int q) { return {GateKind::kH, {q}, {}, 0.0, false, false}; }
  static Gate x(int q) { return {GateKind::kX, {q}, {}, 0.0, false, false}; }
  static Gate y(int q) { return {GateKind::kY, {q}, {}, 0.0, false, false}; }
  static Gate z(int q) { return {GateKind::kZ, {q}, {}, 0.0, false, false}; }
  static Gate rz(int q, double theta) { return {GateKind::kRz, {q}, {}, theta, false, false}; }
  static Gate crz(int control, int q, double theta) {
    return {GateKind::kCrz, {q}, {control}, theta, false, false};
  }
  static Gate mcrz(std::vector<int> controls, int q, double theta) {
    return {GateKind::kMcrz, {q}, std::move(controls), theta, false, false};
  }
  static Gate cnot(int control, int q) { return {GateKind::kCnot, {q}, {control}, 0.0, false, false}; }
  static Gate swap(int a, int b) { return {GateKind::kSwap, {a, b}, {}, 0.0, false, false}; }
  static Gate iqft(int first, int count);
  static Gate diffusion(int first, int count);

  Gate inverse() const;
};

struct Circuit {
  int num_qubits = 0;
  std::vector<Gate> gates;

  void append(Gate g) { gates.push_back(std::move(g)); }
  void append(const Circuit& other);
  Circuit inverse() const;
  std::string netlist() const;
};

/// Single/two-qubit depolarizing rates and the per-bit readout assignment
/// matrix, P(read r | true t) in row t.
struct NoiseSpec {
  bool depolarize_one = false;
  double p1 = 0.0;
  bool depolarize_two = false;
  double p2 = 0.0;
  bool readout = false;
  double assignment[2][2] = {{0.95, 0.05}, {0.10, 0.90}};

  static NoiseSpec ideal() { return {}; }
  void validate() const;
  bool any_depolarizing() const {
    return (depolarize_one && p1 > 0.0) || (depolarize_two && p2 > 0.0);
  }
};

void apply_gate(Statevector& state, const Gate& g);
void apply_circuit(Statevector& state, const Circuit& c);

/// Per-outcome probabilities of the register [first, first+count).
std::vector<double> register_probabilities(const Statevector& state, int first, int count);

/// Samples `shots` full-width bitstrings; readout noise (when enabled) flips
/// each measured bit independently per the assignment matrix.
std::vector<std::uint64_t> measure(const Statevector& state, std::size_t shots, Rng& rng,
                                   const NoiseSpec& noise);

/// Same, restricted to the register [first, first+count).
std::vector<std::uint64_t> measure_register(const Statevector& state, int first, int count,
                                            std::size_t shots, Rng& rng,
                                            const NoiseSpec& noise);

/// One stochastic Pauli trajectory: after each noisy site a uniformly random
/// non-identity Pauli (3 options on one qubit, 15 on two) is inserted with
/// the site's probability. Controlled rotations count as two-qubit sites on
/// (last control, target).
Circuit inject_depolarizing(const Circuit& circuit, const NoiseSpec& noise, Rng& rng);

/// |<g(theta), g(2 pi l / 2^m)>|^2 for l = 0..2^m-1 with
/// g(t) = [1, e^{it}, ..., e^{i(2^m-1)t}]/sqrt(2^m).
std::vector<double> fejer_profile(double theta, int m);

}  // namespace gasdet::qsim

#endif  // GASDET_QSIM_HPP
