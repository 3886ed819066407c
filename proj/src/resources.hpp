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

#ifndef GASDET_RESOURCES_HPP
#define GASDET_RESOURCES_HPP

#include "gas.hpp"
#include "qsim.hpp"

namespace gasdet::resources {

/// Block-level gate counts of one state-preparation circuit.
struct GateBudget {
  long h = 0;
  long rz = 0;
  long crz = 0;
  long ccrz = 0;
  long higher_controlled = 0;
  long iqft_blocks = 0;

  bool operator==(const GateBudget&) const = default;
};

struct IterationCost {
  long state_prep_blocks = 0;  // 2 L_i + 1
  long oracle_z_gates = 0;     // L_i
  long diffusion_blocks = 0;   // L_i
};

struct QueryStats {
  long classical = 0;       // T + 1
  long grover_calls = 0;    // sum L_i
  double expected_grover = 0.0;  // sum ceil(k_i - 1)/2
};

/// Analytic budget for an n-variable QUBO over an L-tap channel with an
/// m-qubit value register: h = n+m, rz = m, crz = n m, ccrz = n (L-1) m.
GateBudget budget_state_prep(int n, int m, int l_taps);

/// Counts the gates actually present in a circuit (noise insertions excluded).
GateBudget walk_budget(const qsim::Circuit& circuit);

IterationCost iteration_cost(long grover_power);

QueryStats query_stats(const gas::GasTrace& trace);

/// floor((pi/4) sqrt(S / M_s)).
long grover_optimal(double search_size, double marked);

}  // namespace gasdet::resources

#endif  // GASDET_RESOURCES_HPP
