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

#include "resources.hpp"

#include <cmath>

namespace gasdet::resources {

GateBudget budget_state_prep(int n, int m, int l_taps) {
  if (n < 1 || m < 1 || l_taps < 1)
    throw InvalidArgument("budget_state_prep: n, m, L must be >= 1");
  GateBudget b;
  b.h = n + m;
  b.rz = m;
  b.crz = static_cast<long>(n) * m;
  b.ccrz = static_cast<long>(n) * (l_taps - 1) * m;
  b.higher_controlled = 0;
  b.iqft_blocks = 1;
  return b;
}

GateBudget walk_budget(const qsim::Circuit& circuit) {
  GateBudget b;
  for (const qsim::Gate& g : circuit.gates) {
    if (g.is_noise) continue;
    switch (g.kind) {
      case qsim::GateKind::kH: ++b.h; break;
      case qsim::GateKind::kRz: ++b.rz; break;
      case qsim::GateKind::kCrz: ++b.crz; break;
      case qsim::GateKind::kMcrz:
        if (g.controls.size() == 2) ++b.ccrz;
        else ++b.higher_controlled;
        break;
      case qsim::GateKind::kIqft: ++b.iqft_blocks; break;
      default: break;
    }
  }
  return b;
}

IterationCost iteration_cost(long grover_power) {
  if (grover_power < 0) throw InvalidArgument("iteration_cost: negative Grover power");
  return {2 * grover_power + 1, grover_power, grover_power};
}

QueryStats query_stats(const gas::GasTrace& trace) {
  QueryStats s;
  s.classical = static_cast<long>(trace.rows.size()) + 1;
  for (const gas::IterationRecord& row : trace.rows) {
    s.grover_calls += row.grover_power;
    s.expected_grover += std::max(0.0, std::ceil(row.k - 1.0)) / 2.0;
  }
  return s;
}

long grover_optimal(double search_size, double marked) {
  if (marked <= 0.0) throw InvalidArgument("grover_optimal: marked count must be positive");
  if (search_size < marked)
    throw InvalidArgument("grover_optimal: marked count exceeds search size");
  return static_cast<long>(std::floor(0.25 * kTwoPi / 2.0 * std::sqrt(search_size / marked)));
}

}  // namespace gasdet::resources
