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

#include "qubo.hpp"

#include <algorithm>
#include <cmath>

#include "dft.hpp"

namespace gasdet::qubo {

QuboProblem build_qubo(const cvec& lambda, const cvec& y_f) {
  const std::size_t n = lambda.size();
  if (n == 0 || y_f.size() != n)
    throw InvalidArgument("build_qubo: lambda and y_f must have equal nonzero length");

  // Q^H L^H L Q is circulant with eigenvalues |lambda_k|^2; its first column
  // r gives S_ij = Re r[(i-j) mod n]. Couplings vanish beyond the channel
  // memory, so round-off dust below 1e-12 relative is squashed to exact zero.
  cvec power(n);
  for (std::size_t k = 0; k < n; ++k) power[k] = cplx{std::norm(lambda[k]), 0.0};
  cvec r(n);
  {
    const cvec idft = unitary_idft(power);  // (1/sqrt n) sum |l|^2 w^{+kt}
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (std::size_t d = 0; d < n; ++d) r[d] = idft[d] * scale;
  }
  double r_peak = 0.0;
  for (const cplx& v : r) r_peak = std::max(r_peak, std::abs(v));
  const double dust = 1e-12 * r_peak;
  for (cplx& v : r) {
    if (std::abs(v.real()) < dust) v = cplx{0.0, v.imag()};
    if (std::abs(v.imag()) < dust) v = cplx{v.real(), 0.0};
  }

  // c_bpsk = -2 Re{Q^H L^H y_f}; the IDFT of conj(lambda) .* y_f is H^H y.
  cvec filt(n);
  for (std::size_t k = 0; k < n; ++k) filt[k] = std::conj(lambda[k]) * y_f[k];
  const cvec hh_y = unitary_idft(filt);
  std::vector<double> c_bpsk(n);
  for (std::size_t i = 0; i < n; ++i) c_bpsk[i] = -2.0 * hh_y[i].real();

  double y_energy = 0.0;
  for (const cplx& v : y_f) y_energy += std::norm(v);

  QuboProblem p;
  p.n = static_cast<int>(n);
  p.q.assign(n * n, 0.0);
  p.c.assign(n, 0.0);

  // S = Re(Q^H L^H L Q); q = 4S, c = -4 S 1 + 2 c_bpsk,
  // constant = 1^T S 1 - 1^T c_bpsk + ||y_f||^2.
  double ones_s_ones = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double row_sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double s = r[(i + n - j) % n].real();
      p.q[i * n + j] = 4.0 * s;
      row_sum += s;
    }
    p.c[i] = -4.0 * row_sum + 2.0 * c_bpsk[i];
    ones_s_ones += row_sum;
  }
  double c_sum = 0.0;
  for (double v : c_bpsk) c_sum += v;
  p.constant = ones_s_ones - c_sum + y_energy;

  // Symmetrize away residual round-off.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double s = 0.5 * (p.q[i * n + j] + p.q[j * n + i]);
      p.q[i * n + j] = s;
      p.q[j * n + i] = s;
    }
  return p;
}

double energy_packed(const QuboProblem& p, std::uint64_t word) {
  const int n = p.n;
  double acc = p.constant;
  for (int i = 0; i < n; ++i) {
    if (!((word >> i) & 1u)) continue;
    acc += p.c[static_cast<std::size_t>(i)] + p.qat(i, i);
    for (int j = i + 1; j < n; ++j)
      if ((word >> j) & 1u) acc += 2.0 * p.qat(i, j);
  }
  return acc;
}

double energy(const QuboProblem& p, const std::vector<std::uint8_t>& bits) {
  if (static_cast<int>(bits.size()) != p.n)
    throw InvalidArgument("energy: bitstring length does not match variable count");
  return energy_packed(p, pack_bits(bits));
}

std::vector<double> enumerate_energies(const QuboProblem& p) {
  const int n = p.n;
  if (n > 24) throw ResourceLimit("enumerate_energies: variable count exceeds the 2^24 guard");
  const std::size_t total = std::size_t{1} << n;
  std::vector<double> out(total);
  std::uint64_t word = 0;
  double e = p.constant;
  out[0] = e;
  for (std::size_t g = 1; g < total; ++g) {
    // Gray-code step: flip the lowest set bit of g.
    const int i = __builtin_ctzll(g);
    const double sign = ((word >> i) & 1u) ? -1.0 : 1.0;
    double delta = p.c[static_cast<std::size_t>(i)] + p.qat(i, i);
    for (int j = 0; j < n; ++j)
      if (j != i && ((word >> j) & 1u)) delta += 2.0 * p.qat(i, j);
    e += sign * delta;
    word ^= (std::uint64_t{1} << i);
    out[word] = e;
  }
  return out;
}

EnergyBounds energy_bounds(const QuboProblem& p, BoundsMode mode) {
  EnergyBounds b;
  if (mode == BoundsMode::kExact) {
    const std::vector<double> e = enumerate_energies(p);
    b.e_min = *std::min_element(e.begin(), e.end());
    b.e_max = *std::max_element(e.begin(), e.end());
    b.exact = true;
    return b;
  }
  double lo = p.constant;
  double hi = p.constant;
  for (int i = 0; i < p.n; ++i) {
    const double lin = p.c[static_cast<std::size_t>(i)] + p.qat(i, i);
    lo += std::min(0.0, lin);
    hi += std::max(0.0, lin);
    for (int j = i + 1; j < p.n; ++j) {
      const double quad = 2.0 * p.qat(i, j);
      lo += std::min(0.0, quad);
      hi += std::max(0.0, quad);
    }
  }
  b.e_min = lo;
  b.e_max = hi;
  b.exact = false;
  return b;
}

int register_width(const EnergyBounds& bounds, int margin) {
  if (bounds.e_max < bounds.e_min)
    throw InvalidArgument("register_width: e_max < e_min");
  if (margin < 0) throw InvalidArgument("register_width: negative margin");
  const double range = bounds.e_max - bounds.e_min;
  int m = 1;
  if (range > 0.0) m = static_cast<int>(std::ceil(std::log2(range + 1.0))) + 1;
  return std::max(m, 1) + margin;
}

std::vector<Monomial> to_monomials(const QuboProblem& p) {
  std::vector<Monomial> out;
  if (p.constant != 0.0) out.push_back({{}, p.constant});
  for (int i = 0; i < p.n; ++i) {
    const double lin = p.c[static_cast<std::size_t>(i)] + p.qat(i, i);
    if (lin != 0.0) out.push_back({{i}, lin});
  }
  for (int i = 0; i < p.n; ++i)
    for (int j = i + 1; j < p.n; ++j) {
      const double quad = 2.0 * p.qat(i, j);
      if (quad != 0.0) out.push_back({{i, j}, quad});
    }
  return out;
}

std::string dump(const QuboProblem& p) {
  std::string out;
  out += "const " + format_double(p.constant) + "\n";
  for (int i = 0; i < p.n; ++i) {
    const double lin = p.c[static_cast<std::size_t>(i)] + p.qat(i, i);
    if (lin != 0.0)
      out += std::to_string(i) + " " + std::to_string(i) + " " + format_double(lin) + "\n";
  }
  for (int i = 0; i < p.n; ++i)
    for (int j = i + 1; j < p.n; ++j) {
      const double quad = 2.0 * p.qat(i, j);
      if (quad != 0.0)
        out += std::to_string(i) + " " + std::to_string(j) + " " + format_double(quad) + "\n";
    }
  return out;
}

}  // namespace gasdet::qubo
