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

#ifndef GASDET_QUBO_HPP
#define GASDET_QUBO_HPP

#include <set>
#include <string>

#include "common.hpp"

namespace gasdet::qubo {

/// E(b) = b^T q b + c^T b + constant over b in {0,1}^n. The constant keeps
/// every bit-independent term (including ||y_f||^2) so energies equal raw
/// detection metrics.
struct QuboProblem {
  std::vector<double> q;  // n x n, row-major, symmetric
  std::vector<double> c;  // n
  double constant = 0.0;
  int n = 0;

  double& qref(int i, int j) { return q[static_cast<std::size_t>(i) * n + j]; }
  double qat(int i, int j) const { return q[static_cast<std::size_t>(i) * n + j]; }
};

struct EnergyBounds {
  double e_min = 0.0;
  double e_max = 0.0;
  bool exact = false;
};

enum class BoundsMode { kExact, kInterval };

/// One multilinear term: empty support = constant, one index = linear
/// (diagonal folded in via b^2 = b), two indices = pairwise coupling.
struct Monomial {
  std::vector<int> support;
  double coefficient = 0.0;
};

/// Builds the detection QUBO from the channel eigenvalues and the
/// frequency-domain receive vector (unitary-DFT convention).
QuboProblem build_qubo(const cvec& lambda, const cvec& y_f);

double energy(const QuboProblem& p, const std::vector<std::uint8_t>& bits);
double energy_packed(const QuboProblem& p, std::uint64_t word);

/// E over all 2^n bitstrings via Gray-code updates (used for exact bounds,
/// argmin checks and GAS phase tables). energies[word] = E(word).
std::vector<double> enumerate_energies(const QuboProblem& p);

EnergyBounds energy_bounds(const QuboProblem& p, BoundsMode mode);

/// Two's-complement width for all shifted costs E(b) - gamma with gamma in
/// [e_min, e_max]: ceil(log2(range + 1)) + 1 + margin, at least 1 + margin.
int register_width(const EnergyBounds& bounds, int margin = 0);

std::vector<Monomial> to_monomials(const QuboProblem& p);

/// Plain-text dump: `const v` line, then `i i coeff` (folded linear) and
/// `i j coeff` (i < j) rows.
std::string dump(const QuboProblem& p);

}  // namespace gasdet::qubo

#endif  // GASDET_QUBO_HPP
