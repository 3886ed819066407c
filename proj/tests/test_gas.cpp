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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "gas.hpp"

using namespace gasdet;
using namespace gasdet::gas;
using gasdet::qubo::QuboProblem;

namespace {

QuboProblem example_instance() {
  QuboProblem p;
  p.n = 2;
  p.q = {0.0, 2.0, 2.0, 0.0};
  p.c = {2.0, 3.0};
  p.constant = 0.0;
  return p;
}

QuboProblem random_integer_qubo(int n, int span, Rng& rng) {
  QuboProblem p;
  p.n = n;
  p.q.assign(static_cast<std::size_t>(n) * n, 0.0);
  p.c.assign(static_cast<std::size_t>(n), 0.0);
  auto draw = [&] {
    return static_cast<double>(static_cast<long>(rng.uniform_int(2 * span)) - span);
  };
  for (int i = 0; i < n; ++i) {
    p.c[static_cast<std::size_t>(i)] = draw();
    for (int j = i + 1; j < n; ++j) {
      const double v = draw();
      p.qref(i, j) = v;
      p.qref(j, i) = v;
    }
  }
  p.constant = draw();
  return p;
}

// Cost 2 * popcount(b): unique minimum at b = 0.
QuboProblem popcount_qubo(int n) {
  QuboProblem p;
  p.n = n;
  p.q.assign(static_cast<std::size_t>(n) * n, 0.0);
  p.c.assign(static_cast<std::size_t>(n), 2.0);
  return p;
}

qsim::Statevector gate_path_state(const QuboProblem& p, double gamma, int m, long power) {
  qsim::Statevector s = qsim::Statevector::zero(p.n + m);
  const qsim::Circuit a = build_state_prep(p, gamma, m);
  qsim::apply_circuit(s, a);
  for (long l = 0; l < power; ++l) grover_step(s, p, gamma, m);
  return s;
}

double marked_mass(const qsim::Statevector& s, const QuboProblem& p, double gamma, int n) {
  const std::vector<double> probs = qsim::register_probabilities(s, 0, n);
  double mass = 0.0;
  for (std::uint64_t b = 0; b < probs.size(); ++b)
    if (qubo::energy_packed(p, b) < gamma) mass += probs[b];
  return mass;
}

}  // namespace

TEST_CASE("state preparation rotation angles for the worked example") {
  const QuboProblem p = example_instance();
  const int m = 3;
  const double kappa = kTwoPi / 8.0;
  const qsim::Circuit a = build_state_prep(p, 2.0, m);

  // theta_j = 2^j * 2pi/2^m elementary angles, scaled by each coefficient.
  std::vector<double> crz0, crz1, ccrz, rz;
  for (const qsim::Gate& g : a.gates) {
    if (g.kind == qsim::GateKind::kCrz && g.controls[0] == 0) crz0.push_back(g.theta);
    if (g.kind == qsim::GateKind::kCrz && g.controls[0] == 1) crz1.push_back(g.theta);
    if (g.kind == qsim::GateKind::kMcrz) ccrz.push_back(g.theta);
    if (g.kind == qsim::GateKind::kRz) rz.push_back(g.theta);
  }
  REQUIRE(crz0.size() == 3);
  REQUIRE(crz1.size() == 3);
  REQUIRE(ccrz.size() == 3);
  REQUIRE(rz.size() == 3);  // the -gamma shift
  for (int j = 0; j < 3; ++j) {
    const double elementary = std::pow(2.0, j) * kappa;
    CHECK(crz0[static_cast<std::size_t>(j)] == doctest::Approx(2.0 * elementary));
    CHECK(crz1[static_cast<std::size_t>(j)] == doctest::Approx(3.0 * elementary));
    CHECK(ccrz[static_cast<std::size_t>(j)] == doctest::Approx(4.0 * elementary));
    CHECK(rz[static_cast<std::size_t>(j)] == doctest::Approx(-2.0 * elementary));
  }
  CHECK(std::pow(2.0, 0) * kappa == doctest::Approx(kTwoPi / 8.0));   // pi/4
  CHECK(std::pow(2.0, 2) * kappa == doctest::Approx(kTwoPi / 2.0));   // pi
}

TEST_CASE("all-zero costs prepare uniform keys with a cleared value register") {
  QuboProblem p;
  p.n = 3;
  p.q.assign(9, 0.0);
  p.c.assign(3, 0.0);
  qsim::Statevector s = qsim::Statevector::zero(5);
  qsim::apply_circuit(s, build_state_prep(p, 0.0, 2));
  const double expect = 1.0 / std::sqrt(8.0);
  for (std::uint64_t i = 0; i < s.amps.size(); ++i) {
    const double want = i < 8 ? expect : 0.0;  // value register must be |00>
    CHECK(std::abs(s.amps[i] - cplx{want, 0.0}) < 1e-12);
  }
}

TEST_CASE("integer instances encode shifted costs exactly") {
  Rng rng(3);
  for (int rep = 0; rep < 25; ++rep) {
    const int n = 2 + static_cast<int>(rng.uniform_int(1));
    const QuboProblem p = random_integer_qubo(n, 2, rng);
    const qubo::EnergyBounds bounds = qubo::energy_bounds(p, qubo::BoundsMode::kExact);
    const int m = qubo::register_width(bounds);
    const long gamma = static_cast<long>(bounds.e_min) +
                       static_cast<long>(rng.uniform_int(
                           static_cast<std::uint64_t>(bounds.e_max - bounds.e_min)));
    qsim::Statevector s = qsim::Statevector::zero(n + m);
    qsim::apply_circuit(s, build_state_prep(p, static_cast<double>(gamma), m, &bounds));
    const std::uint64_t reg = std::uint64_t{1} << m;
    const double amp = 1.0 / std::sqrt(static_cast<double>(1 << n));
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
      const long v = static_cast<long>(qubo::energy_packed(p, b)) - gamma;
      const std::uint64_t slot = static_cast<std::uint64_t>(
          (v % static_cast<long>(reg) + static_cast<long>(reg)) % static_cast<long>(reg));
      for (std::uint64_t z = 0; z < reg; ++z) {
        const cplx got = s.amps[b + (z << n)];
        const cplx want = z == slot ? cplx{amp, 0.0} : cplx{0.0, 0.0};
        CHECK(std::abs(got - want) < 1e-9);
      }
    }
  }
}

TEST_CASE("state preparation enforces representable widths") {
  const QuboProblem p = example_instance();
  const qubo::EnergyBounds bounds = qubo::energy_bounds(p, qubo::BoundsMode::kExact);
  CHECK_THROWS_AS(build_state_prep(p, 0.0, 2, &bounds), WidthError);
  CHECK_NOTHROW(build_state_prep(p, 0.0, qubo::register_width(bounds), &bounds));
}

TEST_CASE("oracle flips exactly the below-threshold branches") {
  Rng rng(5);
  for (int rep = 0; rep < 20; ++rep) {
    const QuboProblem p = random_integer_qubo(3, 2, rng);
    const qubo::EnergyBounds bounds = qubo::energy_bounds(p, qubo::BoundsMode::kExact);
    const int m = qubo::register_width(bounds, 1);
    const double gamma =
        bounds.e_min + std::floor((bounds.e_max - bounds.e_min) * 0.5);
    // Uniform key superposition with a clean value register.
    qsim::Statevector s = qsim::Statevector::zero(3 + m);
    for (int q = 0; q < 3; ++q) qsim::apply_gate(s, qsim::Gate::h(q));
    qsim::apply_circuit(s, build_oracle(p, gamma, m, &bounds));
    const double amp = 1.0 / std::sqrt(8.0);
    for (std::uint64_t b = 0; b < 8; ++b) {
      const double sign = qubo::energy_packed(p, b) < gamma ? -1.0 : 1.0;
      CHECK(std::abs(s.amps[b] - cplx{sign * amp, 0.0}) < 1e-9);
    }
    for (std::uint64_t i = 8; i < s.amps.size(); ++i) CHECK(std::abs(s.amps[i]) < 1e-9);
  }
}

TEST_CASE("oracle with nothing below threshold acts as the identity") {
  const QuboProblem p = example_instance();
  const qubo::EnergyBounds bounds = qubo::energy_bounds(p, qubo::BoundsMode::kExact);
  const int m = qubo::register_width(bounds, 1);
  qsim::Statevector s = qsim::Statevector::zero(2 + m);
  for (int q = 0; q < 2; ++q) qsim::apply_gate(s, qsim::Gate::h(q));
  const qsim::Statevector ref = s;

  qsim::Statevector below = s;
  qsim::apply_circuit(below, build_oracle(p, bounds.e_min - 1.0, m, &bounds));
  for (std::size_t i = 0; i < ref.amps.size(); ++i)
    CHECK(std::abs(below.amps[i] - ref.amps[i]) < 1e-9);

  qsim::Statevector above = s;
  qsim::apply_circuit(above, build_oracle(p, bounds.e_max + 1.0, m, &bounds));
  for (std::size_t i = 0; i < ref.amps.size(); ++i)
    CHECK(std::abs(above.amps[i] + ref.amps[i]) < 1e-9);
}

TEST_CASE("oracle is the compute-mark-uncompute sandwich") {
  const QuboProblem p = example_instance();
  const qsim::Circuit f = build_encoder(p, 1.0, 4);
  const qsim::Circuit o = build_oracle(p, 1.0, 4);
  REQUIRE(o.gates.size() == 2 * f.gates.size() + 1);
  const qsim::Gate& mid = o.gates[f.gates.size()];
  CHECK(mid.kind == qsim::GateKind::kZ);
  CHECK(mid.targets[0] == 2 + 4 - 1);  // value MSB
}

TEST_CASE("diffusion fixes the uniform state and squares to identity") {
  const qsim::Circuit d = build_diffusion(3);
  qsim::Statevector u = qsim::Statevector::zero(3);
  for (int q = 0; q < 3; ++q) qsim::apply_gate(u, qsim::Gate::h(q));
  qsim::Statevector s = u;
  qsim::apply_circuit(s, d);
  for (std::size_t i = 0; i < 8; ++i) CHECK(std::abs(s.amps[i] - u.amps[i]) < 1e-12);

  Rng rng(7);
  qsim::Statevector r = qsim::Statevector::zero(3);
  for (cplx& a : r.amps) a = rng.cgaussian();
  const double nrm = r.norm();
  for (cplx& a : r.amps) a /= nrm;
  const qsim::Statevector ref = r;
  qsim::apply_circuit(r, d);
  qsim::apply_circuit(r, d);
  for (std::size_t i = 0; i < 8; ++i) CHECK(std::abs(r.amps[i] - ref.amps[i]) < 1e-10);
}

TEST_CASE("grover steps follow the closed-form success probability") {
  for (int n : {2, 3, 4}) {
    const QuboProblem p = popcount_qubo(n);
    const qubo::EnergyBounds bounds = qubo::energy_bounds(p, qubo::BoundsMode::kExact);
    const int m = qubo::register_width(bounds);
    const double gamma = 1.0;  // marks only b = 0
    const double theta = std::asin(std::pow(2.0, -0.5 * n));
    const long l_opt = static_cast<long>(std::floor(kTwoPi / 8.0 * std::pow(2.0, 0.5 * n)));
    for (long steps = 0; steps <= l_opt; ++steps) {
      const qsim::Statevector s = gate_path_state(p, gamma, m, steps);
      const double p0 = qsim::register_probabilities(s, 0, n)[0];
      const double expect = std::pow(std::sin((2.0 * steps + 1.0) * theta), 2.0);
      CHECK(p0 == doctest::Approx(expect).epsilon(1e-9));
    }
    const qsim::Statevector s = gate_path_state(p, gamma, m, l_opt);
    CHECK(qsim::register_probabilities(s, 0, n)[0] >= 0.94);
  }
}

TEST_CASE("one step on n=2 with a unique mark reaches certainty") {
  const QuboProblem p = popcount_qubo(2);
  const int m = qubo::register_width(qubo::energy_bounds(p, qubo::BoundsMode::kExact));
  const qsim::Statevector s = gate_path_state(p, 1.0, m, 1);
  CHECK(qsim::register_probabilities(s, 0, 2)[0] ==
        doctest::Approx(std::pow(std::sin(3.0 * std::asin(0.5)), 2.0)).epsilon(1e-12));
  CHECK(qsim::register_probabilities(s, 0, 2)[0] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("zero marked states leave the key marginal unchanged") {
  const QuboProblem p = popcount_qubo(3);
  const int m =
      qubo::register_width(qubo::energy_bounds(p, qubo::BoundsMode::kExact), 1);
  const qsim::Statevector before = gate_path_state(p, -1.0, m, 0);
  const qsim::Statevector after = gate_path_state(p, -1.0, m, 3);
  const std::vector<double> pb = qsim::register_probabilities(before, 0, 3);
  const std::vector<double> pa = qsim::register_probabilities(after, 0, 3);
  for (std::size_t b = 0; b < 8; ++b) CHECK(std::abs(pa[b] - pb[b]) < 1e-9);
}

TEST_CASE("multiple marked states match a dense reflection oracle") {
  const int n = 4;
  // E(b) = binary value of b, so the integer threshold 3 marks {0, 1, 2}.
  QuboProblem p;
  p.n = n;
  p.q.assign(16, 0.0);
  p.c = {1.0, 2.0, 4.0, 8.0};
  const double gamma = 3.0;
  const qubo::EnergyBounds bounds = qubo::energy_bounds(p, qubo::BoundsMode::kExact);
  const int m = qubo::register_width(bounds);

  Eigen::VectorXcd key = Eigen::VectorXcd::Constant(16, cplx{0.25, 0.0});
  Eigen::MatrixXcd refl = Eigen::MatrixXcd::Constant(16, 16, cplx{2.0 / 16.0, 0.0}) -
                          Eigen::MatrixXcd::Identity(16, 16);
  for (long steps = 1; steps <= 3; ++steps) {
    for (int b = 0; b < 16; ++b)
      if (qubo::energy_packed(p, static_cast<std::uint64_t>(b)) < gamma) key(b) = -key(b);
    key = refl * key;
    const qsim::Statevector s = gate_path_state(p, gamma, m, steps);
    const std::vector<double> probs = qsim::register_probabilities(s, 0, n);
    for (int b = 0; b < 16; ++b)
      CHECK(probs[static_cast<std::size_t>(b)] ==
            doctest::Approx(std::norm(key(b))).epsilon(1e-9));
  }
}

TEST_CASE("fused executor equals the gate-by-gate circuit") {
  Rng rng(13);
  for (int rep = 0; rep < 10; ++rep) {
    const QuboProblem p = random_integer_qubo(3, 2, rng);
    const qubo::EnergyBounds bounds = qubo::energy_bounds(p, qubo::BoundsMode::kExact);
    const int m = qubo::register_width(bounds);
    const double gamma = 0.5 * (bounds.e_min + bounds.e_max) + 0.37;  // real-valued
    for (long steps : {0L, 1L, 2L}) {
      const qsim::Statevector a = gate_path_state(p, gamma, m, steps);
      const qsim::Statevector b = encoded_state(p, gamma, m, steps);
      REQUIRE(a.amps.size() == b.amps.size());
      for (std::size_t i = 0; i < a.amps.size(); ++i)
        CHECK(std::abs(a.amps[i] - b.amps[i]) < 1e-10);
    }
  }
}

TEST_CASE("a grover step grows sub-threshold mass when it starts below one half") {
  Rng rng(17);
  int tested = 0;
  while (tested < 25) {
    const QuboProblem p = random_integer_qubo(4, 2, rng);
    const qubo::EnergyBounds bounds = qubo::energy_bounds(p, qubo::BoundsMode::kExact);
    const int m = qubo::register_width(bounds);
    const double gamma = bounds.e_min + std::ceil(0.3 * (bounds.e_max - bounds.e_min));
    const qsim::Statevector s0 = encoded_state(p, gamma, m, 0);
    const double mass0 = marked_mass(s0, p, gamma, 4);
    if (mass0 <= 1e-12 || mass0 >= 0.5 - 1e-9) continue;
    const qsim::Statevector s1 = encoded_state(p, gamma, m, 1);
    CHECK(marked_mass(s1, p, gamma, 4) > mass0);
    ++tested;
  }
}

TEST_CASE("mmse threshold is exact and bounds the optimum") {
  Rng rng(19);
  const channel::ChannelRealization flat = channel::make_realization({cplx{1.0, 0.0}}, 4);
  const scfde::BpskBlock x = scfde::random_block(4, rng);
  const scfde::RxBlock clean = scfde::transmit(x, flat, 300.0, rng);
  const auto [b0, y0] = mmse_threshold(clean, flat);
  CHECK(b0.bits == x.bits);
  CHECK(y0 == doctest::Approx(0.0).epsilon(1e-12));

  for (int rep = 0; rep < 30; ++rep) {
    cvec h(3);
    for (cplx& v : h) v = rng.cgaussian(1.0 / 3.0);
    const channel::ChannelRealization ch = channel::make_realization(h, 5);
    const scfde::BpskBlock blk = scfde::random_block(5, rng);
    const scfde::RxBlock rx = scfde::transmit(blk, ch, -2.0, rng);
    const auto [bits, y] = mmse_threshold(rx, ch);
    const qubo::QuboProblem p = qubo::build_qubo(ch.lambda, rx.y_f);
    CHECK(y == doctest::Approx(qubo::energy(p, bits.bits)).epsilon(1e-9));
    const std::vector<double> all = qubo::enumerate_energies(p);
    CHECK(y >= *std::min_element(all.begin(), all.end()) - 1e-9);
  }
}

TEST_CASE("gas finds unique minima almost surely") {
  Rng meta(23);
  int exact = 0;
  const int runs = 200;
  for (int rep = 0; rep < runs; ++rep) {
    QuboProblem p = random_integer_qubo(3, 3, meta);
    const std::vector<double> energies = qubo::enumerate_energies(p);
    const std::size_t argmin = static_cast<std::size_t>(
        std::min_element(energies.begin(), energies.end()) - energies.begin());
    int ties = 0;
    for (double e : energies)
      if (e == energies[argmin]) ++ties;
    if (ties > 1) {
      --rep;
      continue;
    }
    GasConfig cfg;
    cfg.max_iterations = 40;
    cfg.patience = 40;
    Rng rng(1000 + static_cast<std::uint64_t>(rep));
    const GasResult res = run_gas(p, cfg, rng);
    if (res.best_word == argmin) ++exact;
  }
  CHECK(exact >= static_cast<int>(0.99 * runs));
}

TEST_CASE("gas with an optimal start never improves and keeps it") {
  Rng rng(29);
  const channel::ChannelRealization flat = channel::make_realization({cplx{1.0, 0.0}}, 3);
  const scfde::BpskBlock x = scfde::random_block(3, rng);
  const scfde::RxBlock rx = scfde::transmit(x, flat, 300.0, rng);
  GasConfig cfg;
  cfg.init = InitMode::kMmse;
  cfg.patience = 8;
  const DetectResult det = detect(rx, flat, cfg, rng);
  CHECK(det.block.bits == x.bits);
  for (const IterationRecord& row : det.gas.trace.rows) CHECK_FALSE(row.improved);
  CHECK(det.gas.trace.rows.size() == 8);  // stopped by patience
}

TEST_CASE("first iteration with k = 1 measures the uniform superposition") {
  Rng meta(31);
  const QuboProblem p = random_integer_qubo(3, 2, meta);
  const double e0 = qubo::energy_packed(p, 5);
  std::vector<long> counts(8, 0);
  const int runs = 16000;
  for (int rep = 0; rep < runs; ++rep) {
    GasConfig cfg;
    cfg.max_iterations = 1;
    cfg.patience = 1;
    cfg.initial_word = 5;
    Rng rng(777 + static_cast<std::uint64_t>(rep));
    const GasResult res = run_gas(p, cfg, rng);
    REQUIRE(res.trace.rows.size() == 1);
    CHECK(res.trace.rows[0].grover_power == 0);
    CHECK(res.trace.rows[0].gamma == doctest::Approx(e0));
    ++counts[res.trace.rows[0].measured];
  }
  const double expect = runs / 8.0;
  const double sigma = std::sqrt(runs * (1.0 / 8.0) * (7.0 / 8.0));
  for (long c : counts) CHECK(std::abs(c - expect) < 4.0 * sigma);
}

TEST_CASE("trace invariants hold under every noise setting") {
  Rng meta(37);
  for (int mode = 0; mode < 3; ++mode) {
    for (int rep = 0; rep < 6; ++rep) {
      const QuboProblem p = random_integer_qubo(3, 3, meta);
      GasConfig cfg;
      cfg.max_iterations = 30;
      cfg.patience = 10;
      if (mode == 1) {
        cfg.noise.depolarize_two = true;
        cfg.noise.p2 = 0.05;
      } else if (mode == 2) {
        cfg.noise.readout = true;
      }
      Rng rng(500 + static_cast<std::uint64_t>(10 * mode + rep));
      const GasResult res = run_gas(p, cfg, rng);

      CHECK(res.best_energy == doctest::Approx(qubo::energy_packed(p, res.best_word)));
      CHECK(res.best_energy <= res.trace.initial_energy + 1e-12);
      CHECK(res.trace.classical_queries ==
            static_cast<long>(res.trace.rows.size()) + 1);

      double gamma_prev = res.trace.initial_energy;
      double k_prev = 1.0;
      long grover_sum = 0, a_sum = 0;
      const double k_cap = std::pow(2.0, 1.5);
      for (const IterationRecord& row : res.trace.rows) {
        CHECK(row.gamma <= gamma_prev + 1e-12);
        CHECK(row.k == doctest::Approx(k_prev));
        CHECK(row.grover_power >= 0);
        CHECK(row.grover_power <= static_cast<long>(std::ceil(row.k - 1.0)));
        CHECK(row.k <= k_cap + 1e-12);
        if (row.improved) {
          CHECK(row.energy < row.gamma);
          k_prev = 1.0;
        } else {
          k_prev = std::min(cfg.lambda_growth * k_prev, k_cap);
        }
        gamma_prev = std::min(gamma_prev, row.energy);
        grover_sum += row.grover_power;
        a_sum += 2 * row.grover_power + 1;
      }
      CHECK(res.trace.grover_calls == grover_sum);
      CHECK(res.trace.a_blocks == a_sum);
      CHECK(res.trace.z_gates == grover_sum);
      CHECK(res.trace.diffusion_blocks == grover_sum);
    }
  }
}

TEST_CASE("uniform grover-power sampling has the documented mean") {
  Rng rng(41);
  for (double k : {1.0, 1.5, 2.0, 2.83}) {
    const double cap = std::ceil(k - 1.0);
    double acc = 0.0;
    const int draws = 20000;
    for (int i = 0; i < draws; ++i)
      acc += static_cast<double>(sample_grover_power(k, rng));
    const double mean = acc / draws;
    const double sigma = cap > 0 ? std::sqrt((std::pow(cap + 1.0, 2.0) - 1.0) / 12.0 / draws)
                                 : 0.0;
    CHECK(std::abs(mean - cap / 2.0) <= 3.0 * sigma + 1e-12);
  }
}

TEST_CASE("detect recovers blocks through an identity channel") {
  Rng rng(43);
  const channel::ChannelRealization flat = channel::make_realization({cplx{1.0, 0.0}}, 4);
  const scfde::BpskBlock x = scfde::random_block(4, rng);
  const scfde::RxBlock rx = scfde::transmit(x, flat, 300.0, rng);
  GasConfig cfg;
  cfg.init = InitMode::kMmse;
  const DetectResult det = detect(rx, flat, cfg, rng);
  CHECK(det.block.bits == x.bits);
}

TEST_CASE("best-so-far never degrades below the initial threshold under noise") {
  Rng rng(47);
  for (int rep = 0; rep < 20; ++rep) {
    cvec h(3);
    for (cplx& v : h) v = rng.cgaussian(1.0 / 3.0);
    const channel::ChannelRealization ch = channel::make_realization(h, 3);
    const scfde::BpskBlock x = scfde::random_block(3, rng);
    const scfde::RxBlock rx = scfde::transmit(x, ch, -5.0, rng);
    GasConfig cfg;
    cfg.init = InitMode::kMmse;
    cfg.noise.readout = true;
    cfg.noise.depolarize_two = true;
    cfg.noise.p2 = 0.02;
    const DetectResult det = detect(rx, ch, cfg, rng);
    CHECK(det.gas.best_energy <= det.gas.trace.initial_energy + 1e-12);
  }
}

TEST_CASE("config validation") {
  GasConfig bad;
  bad.lambda_growth = 1.0;
  CHECK_THROWS_AS(bad.validate(), InvalidArgument);
  GasConfig negative;
  negative.patience = 0;
  CHECK_THROWS_AS(negative.validate(), InvalidArgument);
  GasConfig mmse;
  mmse.init = InitMode::kMmse;
  CHECK_THROWS_AS(mmse.validate(), InvalidArgument);
  mmse.initial_word = 3;
  CHECK_NOTHROW(mmse.validate());
}
