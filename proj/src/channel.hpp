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

#ifndef GASDET_CHANNEL_HPP
#define GASDET_CHANNEL_HPP

#include <cstddef>

#include "common.hpp"
#include "rng.hpp"

namespace gasdet::channel {

/// One multipath link: i.i.d. Rayleigh taps with a uniform power delay
/// profile, normalized to unit total energy.
struct LinkCir {
  cvec taps;
};

/// Per-element cascaded (pre-phase) path responses g_r = h_ui_r * h_ib_r.
/// All paths share the cascaded length L = L_ui + L_ib - 1.
struct RisPaths {
  std::vector<cvec> per_element;

  std::size_t elements() const { return per_element.size(); }
  std::size_t taps() const { return per_element.empty() ? 0 : per_element[0].size(); }
};

/// Reflection settings: one phase per element, unit amplitudes.
struct RisConfig {
  std::vector<double> phases;     // each in [0, 2pi)
  std::vector<double> amplitudes; // fixed to 1
};

/// Cascaded end-to-end response plus its length-N eigenvalue vector
/// (plain DFT of the zero-padded response).
struct ChannelRealization {
  cvec h_tilde;
  cvec lambda;
  std::size_t block_len = 0;
};

enum class TapStrategy { kFirst, kCentral, kMax };

LinkCir gen_link(std::size_t num_taps, Rng& rng);

/// Draws R independent UE->RIS and RIS->BS links and convolves them.
RisPaths sample_paths(std::size_t l_ui, std::size_t l_ib, std::size_t elements, Rng& rng);

/// h_tilde = sum_r g_r * a_r e^{j theta_r}.
cvec cascade(const RisPaths& paths, const RisConfig& cfg);

/// Phases compensating tap `ell` (0-based): theta_r = -angle(g_r(ell)).
RisConfig align_tap(const RisPaths& paths, std::size_t ell);

/// Tap index maximizing the compensated tap power; ties go to the
/// smallest index.
std::size_t best_tap(const RisPaths& paths);

/// Optional b-bit phase quantizer (nearest multiple of 2pi/2^bits).
RisConfig quantize_phases(const RisConfig& cfg, int bits);

RisConfig configure(const RisPaths& paths, TapStrategy strategy, int phase_bits = 0);

ChannelRealization make_realization(const cvec& h_tilde, std::size_t block_len);

const char* strategy_name(TapStrategy s);
TapStrategy strategy_from_name(const std::string& name);

}  // namespace gasdet::channel

#endif  // GASDET_CHANNEL_HPP
