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

#ifndef GASDET_SCFDE_HPP
#define GASDET_SCFDE_HPP

#include "channel.hpp"
#include "common.hpp"
#include "rng.hpp"

namespace gasdet::scfde {

/// BPSK block; symbols[i] = 2*bits[i] - 1.
struct BpskBlock {
  std::vector<std::uint8_t> bits;
  std::vector<double> symbols;
};

/// Received block in both domains; y_f is the unitary DFT of y.
struct RxBlock {
  cvec y;
  cvec y_f;
  double snr_linear = 0.0;
  double noise_var = 0.0;
};

BpskBlock block_from_bits(std::vector<std::uint8_t> bits);
BpskBlock random_block(std::size_t n, Rng& rng);

/// Prepends the last `lcp` samples: [x(N-lcp..N-1), x(0..N-1)].
cvec add_cp(const cvec& x, std::size_t lcp);
cvec remove_cp(const cvec& x_cp, std::size_t lcp);

/// y = h_tilde (x) x + w with w ~ CN(0, sigma_w^2 I), sigma_w^2 = 10^(-snr_db/10).
RxBlock transmit(const BpskBlock& x, const channel::ChannelRealization& ch,
                 double snr_db, Rng& rng);

/// As transmit(), but with a caller-supplied unit-variance noise block so the
/// same draw can be rescaled across SNR points.
RxBlock transmit_with_noise(const BpskBlock& x, const channel::ChannelRealization& ch,
                            double snr_db, const cvec& unit_noise);

/// Per-subcarrier MMSE filter followed by the inverse unitary DFT.
cvec mmse_equalize(const RxBlock& rx, const channel::ChannelRealization& ch,
                   double sigma_x2);

/// ||y - H x(bits)||^2 for the circulant channel.
double metric(const cvec& y, const channel::ChannelRealization& ch,
              const std::vector<std::uint8_t>& bits);

/// Exhaustive search over all 2^N BPSK vectors (guarded at N <= 24); ties go
/// to the lexicographically smallest bit vector.
BpskBlock mld_exhaustive(const RxBlock& rx, const channel::ChannelRealization& ch);

/// bit i = 1 iff Re(d_i) >= 0.
BpskBlock hard_decision(const cvec& d);

std::size_t count_bit_errors(const BpskBlock& a, const BpskBlock& b);

}  // namespace gasdet::scfde

#endif  // GASDET_SCFDE_HPP
