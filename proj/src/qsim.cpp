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

#include "qsim.hpp"

#include <algorithm>
#include <cmath>

#include "dft.hpp"

namespace gasdet::qsim {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

void check_qubit(int q, int num_qubits) {
  if (q < 0 || q >= num_qubits) throw InvalidArgument("gate qubit index out of range");
}

std::uint64_t bit(int q) { return std::uint64_t{1} << q; }

// Iterates amplitude pairs differing in qubit q and applies fn(a0, a1).
template <typename Fn>
void for_each_pair(Statevector& state, int q, Fn&& fn) {
  const std::uint64_t mask = bit(q);
  const std::uint64_t total = state.amps.size();
  for (std::uint64_t base = 0; base < total; ++base) {
    if (base & mask) continue;
    fn(state.amps[base], state.amps[base | mask]);
  }
}

void validate_block(const Gate& g, int num_qubits) {
  if (g.targets.empty()) throw InvalidArgument("block gate with no targets");
  for (std::size_t i = 0; i < g.targets.size(); ++i) {
    check_qubit(g.targets[i], num_qubits);
    if (i > 0 && g.targets[i] != g.targets[i - 1] + 1)
      throw InvalidArgument("block gate requires a contiguous register");
  }
}

void apply_iqft_block(Statevector& state, const Gate& g) {
  validate_block(g, state.num_qubits);
  const int first = g.targets.front();
  const int m = static_cast<int>(g.targets.size());
  const std::uint64_t stride = bit(first);
  const std::uint64_t reg = std::uint64_t{1} << m;
  const std::uint64_t low_count = stride;
  const std::uint64_t high_count = state.amps.size() >> (first + m);
  const int sign = g.adjoint ? +1 : -1;
  for (std::uint64_t high = 0; high < high_count; ++high) {
    const std::uint64_t base_high = high << (first + m);
    for (std::uint64_t low = 0; low < low_count; ++low) {
      fft_pow2_strided(state.amps.data() + base_high + low, static_cast<std::size_t>(m),
                       stride, sign);
      (void)reg;
    }
  }
}

void apply_diffusion_block(Statevector& state, const Gate& g) {
  validate_block(g, state.num_qubits);
  const int first = g.targets.front();
  const int k = static_cast<int>(g.targets.size());
  const std::uint64_t stride = bit(first);
  const std::uint64_t reg = std::uint64_t{1} << k;
  const std::uint64_t low_count = stride;
  const std::uint64_t high_count = state.amps.size() >> (first + k);
  const double inv = 1.0 / static_cast<double>(reg);
  for (std::uint64_t high = 0; high < high_count; ++high) {
    const std::uint64_t base_high = high << (first + k);
    for (std::uint64_t low = 0; low < low_count; ++low) {
      cplx* slice = state.amps.data() + base_high + low;
      cplx mean{0.0, 0.0};
      for (std::uint64_t z = 0; z < reg; ++z) mean += slice[z * stride];
      mean *= inv;
      for (std::uint64_t z = 0; z < reg; ++z) {
        cplx& a = slice[z * stride];
        a = 2.0 * mean - a;
      }
    }
  }
}

}  // namespace

Statevector Statevector::zero(int num_qubits) {
  if (num_qubits < 1 || num_qubits > 30)
    throw InvalidArgument("Statevector: qubit count out of supported range");
  Statevector s;
  s.num_qubits = num_qubits;
  s.amps.assign(std::size_t{1} << num_qubits, cplx{0.0, 0.0});
  s.amps[0] = cplx{1.0, 0.0};
  return s;
}

double Statevector::norm() const {
  double acc = 0.0;
  for (const cplx& a : amps) acc += std::norm(a);
  return std::sqrt(acc);
}

Gate Gate::iqft(int first, int count) {
  Gate g{GateKind::kIqft, {}, {}, 0.0, false, false};
  for (int i = 0; i < count; ++i) g.targets.push_back(first + i);
  return g;
}

Gate Gate::diffusion(int first, int count) {
  Gate g{GateKind::kDiffusion, {}, {}, 0.0, false, false};
  for (int i = 0; i < count; ++i) g.targets.push_back(first + i);
  return g;
}

Gate Gate::inverse() const {
  Gate g = *this;
  switch (kind) {
    case GateKind::kRz:
    case GateKind::kCrz:
    case GateKind::kMcrz:
      g.theta = -theta;
      break;
    case GateKind::kIqft:
      g.adjoint = !adjoint;
      break;
    default:
      break;  // H, Paulis, CNOT, SWAP, diffusion are involutions
  }
  return g;
}

void Circuit::append(const Circuit& other) {
  gates.insert(gates.end(), other.gates.begin(), other.gates.end());
}

Circuit Circuit::inverse() const {
  Circuit inv;
  inv.num_qubits = num_qubits;
  inv.gates.reserve(gates.size());
  for (auto it = gates.rbegin(); it != gates.rend(); ++it) inv.gates.push_back(it->inverse());
  return inv;
}

void NoiseSpec::validate() const {
  if (p1 < 0.0 || p1 > 1.0 || p2 < 0.0 || p2 > 1.0)
    throw InvalidArgument("NoiseSpec: depolarizing probabilities must lie in [0, 1]");
  for (int t = 0; t < 2; ++t) {
    double row = 0.0;
    for (int r = 0; r < 2; ++r) {
      if (assignment[t][r] < 0.0 || assignment[t][r] > 1.0)
        throw InvalidArgument("NoiseSpec: assignment entries must lie in [0, 1]");
      row += assignment[t][r];
    }
    if (std::abs(row - 1.0) > 1e-9)
      throw InvalidArgument("NoiseSpec: assignment rows must sum to 1");
  }
}

void apply_gate(Statevector& state, const Gate& g) {
  const int nq = state.num_qubits;
  switch (g.kind) {
    case GateKind::kH: {
      check_qubit(g.targets.at(0), nq);
      for_each_pair(state, g.targets[0], [](cplx& a0, cplx& a1) {
        const cplx s0 = (a0 + a1) * kInvSqrt2;
        const cplx s1 = (a0 - a1) * kInvSqrt2;
        a0 = s0;
        a1 = s1;
      });
      break;
    }
    case GateKind::kX: {
      check_qubit(g.targets.at(0), nq);
      for_each_pair(state, g.targets[0], [](cplx& a0, cplx& a1) { std::swap(a0, a1); });
      break;
    }
    case GateKind::kY: {
      check_qubit(g.targets.at(0), nq);
      for_each_pair(state, g.targets[0], [](cplx& a0, cplx& a1) {
        const cplx t0 = a0;
        a0 = cplx{0.0, -1.0} * a1;
        a1 = cplx{0.0, 1.0} * t0;
      });
      break;
    }
    case GateKind::kZ: {
      check_qubit(g.targets.at(0), nq);
      const std::uint64_t mask = bit(g.targets[0]);
      for (std::uint64_t i = 0; i < state.amps.size(); ++i)
        if (i & mask) state.amps[i] = -state.amps[i];
      break;
    }
    case GateKind::kRz:
    case GateKind::kCrz:
    case GateKind::kMcrz: {
      check_qubit(g.targets.at(0), nq);
      std::uint64_t mask = bit(g.targets[0]);
      for (int c : g.controls) {
        check_qubit(c, nq);
        if (c == g.targets[0]) throw InvalidArgument("control equals target");
        mask |= bit(c);
      }
      const cplx phase{std::cos(g.theta), std::sin(g.theta)};
      for (std::uint64_t i = 0; i < state.amps.size(); ++i)
        if ((i & mask) == mask) state.amps[i] *= phase;
      break;
    }
    case GateKind::kCnot: {
      check_qubit(g.targets.at(0), nq);
      check_qubit(g.controls.at(0), nq);
      if (g.controls[0] == g.targets[0]) throw InvalidArgument("control equals target");
      const std::uint64_t cmask = bit(g.controls[0]);
      const std::uint64_t tmask = bit(g.targets[0]);
      for (std::uint64_t i = 0; i < state.amps.size(); ++i)
        if ((i & cmask) && !(i & tmask)) std::swap(state.amps[i], state.amps[i | tmask]);
      break;
    }
    case GateKind::kSwap: {
      check_qubit(g.targets.at(0), nq);
      check_qubit(g.targets.at(1), nq);
      const std::uint64_t a = bit(g.targets[0]);
      const std::uint64_t b = bit(g.targets[1]);
      for (std::uint64_t i = 0; i < state.amps.size(); ++i)
        if ((i & a) && !(i & b)) std::swap(state.amps[i], state.amps[(i & ~a) | b]);
      break;
    }
    case GateKind::kIqft:
      apply_iqft_block(state, g);
      break;
    case GateKind::kDiffusion:
      apply_diffusion_block(state, g);
      break;
  }
}

void apply_circuit(Statevector& state, const Circuit& c) {
  if (c.num_qubits != state.num_qubits)
    throw InvalidArgument("apply_circuit: qubit count mismatch");
  for (const Gate& g : c.gates) apply_gate(state, g);
}

std::vector<double> register_probabilities(const Statevector& state, int first, int count) {
  if (first < 0 || count < 1 || first + count > state.num_qubits)
    throw InvalidArgument("register_probabilities: register out of range");
  std::vector<double> probs(std::size_t{1} << count, 0.0);
  const std::uint64_t mask = (std::uint64_t{1} << count) - 1;
  for (std::uint64_t i = 0; i < state.amps.size(); ++i)
    probs[(i >> first) & mask] += std::norm(state.amps[i]);
  return probs;
}

namespace {

std::uint64_t apply_readout(std::uint64_t word, int nbits, const NoiseSpec& noise, Rng& rng) {
  std::uint64_t out = 0;
  for (int q = 0; q < nbits; ++q) {
    const int true_bit = (word >> q) & 1u;
    const double p_read1 = noise.assignment[true_bit][1];
    const int read = rng.uniform() < p_read1 ? 1 : 0;
    if (read) out |= bit(q);
  }
  return out;
}

std::vector<std::uint64_t> sample_from(const std::vector<double>& probs, std::size_t shots,
                                       Rng& rng) {
  std::vector<double> cdf(probs.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    acc += probs[i];
    cdf[i] = acc;
  }
  std::vector<std::uint64_t> out;
  out.reserve(shots);
  for (std::size_t s = 0; s < shots; ++s) {
    const double u = rng.uniform() * acc;
    const auto it = std::lower_bound(cdf.begin(), cdf.end(), u);
    out.push_back(static_cast<std::uint64_t>(it - cdf.begin()));
  }
  return out;
}

}  // namespace

std::vector<std::uint64_t> measure_register(const Statevector& state, int first, int count,
                                            std::size_t shots, Rng& rng,
                                            const NoiseSpec& noise) {
  if (shots == 0) throw InvalidArgument("measure: shots must be >= 1");
  noise.validate();
  const std::vector<double> probs = register_probabilities(state, first, count);
  std::vector<std::uint64_t> outcomes = sample_from(probs, shots, rng);
  if (noise.readout)
    for (auto& w : outcomes) w = apply_readout(w, count, noise, rng);
  return outcomes;
}

std::vector<std::uint64_t> measure(const Statevector& state, std::size_t shots, Rng& rng,
                                   const NoiseSpec& noise) {
  return measure_register(state, 0, state.num_qubits, shots, rng, noise);
}

Circuit inject_depolarizing(const Circuit& circuit, const NoiseSpec& noise, Rng& rng) {
  noise.validate();
  Circuit out;
  out.num_qubits = circuit.num_qubits;
  out.gates.reserve(circuit.gates.size());
  for (const Gate& g : circuit.gates) {
    out.gates.push_back(g);
    if (g.is_noise) continue;
    const bool one_qubit_site = g.controls.empty() &&
                                (g.kind == GateKind::kH || g.kind == GateKind::kX ||
                                 g.kind == GateKind::kY || g.kind == GateKind::kZ ||
                                 g.kind == GateKind::kRz);
    const bool two_qubit_site = g.kind == GateKind::kCrz || g.kind == GateKind::kMcrz ||
                                g.kind == GateKind::kCnot || g.kind == GateKind::kSwap;
    if (one_qubit_site && noise.depolarize_one && rng.uniform() < noise.p1) {
      const int which = static_cast<int>(rng.uniform_int(2));  // X, Y, Z
      Gate pauli = which == 0 ? Gate::x(g.targets[0])
                              : (which == 1 ? Gate::y(g.targets[0]) : Gate::z(g.targets[0]));
      pauli.is_noise = true;
      out.gates.push_back(pauli);
    } else if (two_qubit_site && noise.depolarize_two && rng.uniform() < noise.p2) {
      int qa, qb;
      if (g.kind == GateKind::kSwap) {
        qa = g.targets[0];
        qb = g.targets[1];
      } else {
        qa = g.controls.back();
        qb = g.targets[0];
      }
      // Uniform over the 15 non-identity two-qubit Paulis (pa, pb) with
      // 0 = I, 1 = X, 2 = Y, 3 = Z, skipping (I, I).
      const int idx = static_cast<int>(rng.uniform_int(14)) + 1;
      const int pa = idx / 4;
      const int pb = idx % 4;
      auto push = [&](int kind, int q) {
        if (kind == 0) return;
        Gate pauli = kind == 1 ? Gate::x(q) : (kind == 2 ? Gate::y(q) : Gate::z(q));
        pauli.is_noise = true;
        out.gates.push_back(pauli);
      };
      push(pa, qa);
      push(pb, qb);
    }
  }
  return out;
}

std::vector<double> fejer_profile(double theta, int m) {
  if (m < 1) throw InvalidArgument("fejer_profile: m must be >= 1");
  const std::uint64_t reg = std::uint64_t{1} << m;
  std::vector<double> probs(reg);
  for (std::uint64_t l = 0; l < reg; ++l) {
    const double delta = theta - kTwoPi * static_cast<double>(l) / static_cast<double>(reg);
    cplx acc{0.0, 0.0};
    for (std::uint64_t z = 0; z < reg; ++z) {
      const double ang = delta * static_cast<double>(z);
      acc += cplx{std::cos(ang), std::sin(ang)};
    }
    probs[l] = std::norm(acc) / static_cast<double>(reg * reg);
  }
  return probs;
}

std::string Circuit::netlist() const {
  std::string out;
  for (const Gate& g : gates) {
    switch (g.kind) {
      case GateKind::kH: out += "h"; break;
      case GateKind::kX: out += "x"; break;
      case GateKind::kY: out += "y"; break;
      case GateKind::kZ: out += "z"; break;
      case GateKind::kRz: out += "rz"; break;
      case GateKind::kCrz: out += "crz"; break;
      case GateKind::kMcrz: out += "mcrz"; break;
      case GateKind::kCnot: out += "cnot"; break;
      case GateKind::kSwap: out += "swap"; break;
      case GateKind::kIqft: out += g.adjoint ? "qft" : "iqft"; break;
      case GateKind::kDiffusion: out += "diffusion"; break;
    }
    if (!g.controls.empty()) {
      out += " c=";
      for (std::size_t i = 0; i < g.controls.size(); ++i)
        out += (i ? "," : "") + std::to_string(g.controls[i]);
    }
    out += " t=";
    for (std::size_t i = 0; i < g.targets.size(); ++i)
      out += (i ? "," : "") + std::to_string(g.targets[i]);
    if (g.kind == GateKind::kRz || g.kind == GateKind::kCrz || g.kind == GateKind::kMcrz)
      out += " theta=" + format_double(g.theta);
    if (g.is_noise) out += " # noise";
    out += "\n";
  }
  return out;
}

}  // namespace gasdet::qsim
