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

#include "scfde.hpp"

#include <cmath>

#include "dft.hpp"

namespace gasdet::scfde {

namespace {

cvec symbols_to_cvec(const std::vector<double>& symbols) {
  cvec x(symbols.size());
  for (std::size_t i = 0; i < symbols.size(); ++i) x[i] = cplx{symbols[i], 0.0};
  return x;
}

}  // namespace

BpskBlock block_from_bits(std::vector<std::uint8_t> bits) {
  BpskBlock blk;
  blk.symbols.reserve(bits.size());
  for (std::uint8_t b : bits) blk.symbols.push_back(b ? 1.0 : -1.0);
  blk.bits = std::move(bits);
  return blk;
}

BpskBlock random_block(std::size_t n, Rng& rng) {
  std::vector<std::uint8_t> bits(n);
  for (auto& b : bits) b = static_cast<std::uint8_t>(rng.u64() & 1u);
  return block_from_bits(std::move(bits));
}

cvec add_cp(const cvec& x, std::size_t lcp) {
  if (lcp > x.size()) throw InvalidArgument("add_cp: prefix longer than block");
  cvec out;
  out.reserve(x.size() + lcp);
  out.insert(out.end(), x.end() - static_cast<std::ptrdiff_t>(lcp), x.end());
  out.insert(out.end(), x.begin(), x.end());
  return out;
}

cvec remove_cp(const cvec& x_cp, std::size_t lcp) {
  if (lcp > x_cp.size()) throw InvalidArgument("remove_cp: prefix longer than input");
  return cvec(x_cp.begin() + static_cast<std::ptrdiff_t>(lcp), x_cp.end());
}

RxBlock transmit_with_noise(const BpskBlock& x, const channel::ChannelRealization& ch,
                            double snr_db, const cvec& unit_noise) {
  const std::size_t n = x.symbols.size();
  if (n != ch.block_len) throw InvalidArgument("transmit: block length mismatch");
  if (ch.h_tilde.size() > n)
    throw InvalidArgument("transmit: channel longer than block (circular model invalid)");
  if (unit_noise.size() != n) throw InvalidArgument("transmit: noise length mismatch");

  RxBlock rx;
  rx.noise_var = std::pow(10.0, -snr_db / 10.0);
  rx.snr_linear = 1.0 / rx.noise_var;
  rx.y = circular_convolve(ch.h_tilde, symbols_to_cvec(x.symbols));
  const double sigma = std::sqrt(rx.noise_var);
  for (std::size_t i = 0; i < n; ++i) rx.y[i] += sigma * unit_noise[i];
  rx.y_f = unitary_dft(rx.y);
  return rx;
}

RxBlock transmit(const BpskBlock& x, const channel::ChannelRealization& ch,
                 double snr_db, Rng& rng) {
  cvec unit_noise(x.symbols.size());
  for (auto& w : unit_noise) w = rng.cgaussian(1.0);
  return transmit_with_noise(x, ch, snr_db, unit_noise);
}

cvec mmse_equalize(const RxBlock& rx, const channel::ChannelRealization& ch,
                   double sigma_x2) {
  if (sigma_x2 <= 0.0) throw InvalidArgument("mmse_equalize: sigma_x2 must be positive");
  if (rx.y_f.size() != ch.lambda.size())
    throw InvalidArgument("mmse_equalize: dimension mismatch");
  const double reg = rx.noise_var / sigma_x2;
  cvec filtered(rx.y_f.size());
  for (std::size_t i = 0; i < rx.y_f.size(); ++i) {
    const double denom = std::norm(ch.lambda[i]) + reg;
    const cplx phi = denom > 0.0 ? std::conj(ch.lambda[i]) / denom : cplx{0.0, 0.0};
    filtered[i] = phi * rx.y_f[i];
  }
  return unitary_idft(filtered);
}

double metric(const cvec& y, const channel::ChannelRealization& ch,
              const std::vector<std::uint8_t>& bits) {
  if (bits.size() != ch.block_len) throw InvalidArgument("metric: bit count mismatch");
  cvec x(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) x[i] = cplx{bits[i] ? 1.0 : -1.0, 0.0};
  const cvec hx = circular_convolve(ch.h_tilde, x);
  double acc = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) acc += std::norm(y[i] - hx[i]);
  return acc;
}

BpskBlock mld_exhaustive(const RxBlock& rx, const channel::ChannelRealization& ch) {
  const std::size_t n = ch.block_len;
  if (n > 24) throw ResourceLimit("mld_exhaustive: block length exceeds the 2^24 guard");
  std::uint64_t best_word = 0;
  double best_metric = 0.0;
  bool first = true;
  std::vector<std::uint8_t> bits(n);
  for (std::uint64_t word = 0; word < (std::uint64_t{1} << n); ++word) {
    for (std::size_t i = 0; i < n; ++i) bits[i] = (word >> i) & 1u;
    const double m = metric(rx.y, ch, bits);
    bool better = first || m < best_metric;
    if (!first && m == best_metric) {
      // Lexicographic tie-break on the bit vector (b_0 compared first).
      for (std::size_t i = 0; i < n; ++i) {
        const std::uint8_t cur = (word >> i) & 1u;
        const std::uint8_t old = (best_word >> i) & 1u;
        if (cur != old) {
          better = cur < old;
          break;
        }
      }
    }
    if (better) {
      best_metric = m;
      best_word = word;
      first = false;
    }
  }
  return block_from_bits(unpack_bits(best_word, static_cast<int>(n)));
}

BpskBlock hard_decision(const cvec& d) {
  std::vector<std::uint8_t> bits(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) bits[i] = d[i].real() >= 0.0 ? 1 : 0;
  return block_from_bits(std::move(bits));
}

std::size_t count_bit_errors(const BpskBlock& a, const BpskBlock& b) {
  if (a.bits.size() != b.bits.size())
    throw InvalidArgument("count_bit_errors: length mismatch");
  std::size_t errors = 0;
  for (std::size_t i = 0; i < a.bits.size(); ++i)
    if (a.bits[i] != b.bits[i]) ++errors;
  return errors;
}

}  // namespace gasdet::scfde
