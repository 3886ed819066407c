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

#include "channel.hpp"

#include <cmath>

#include "dft.hpp"

namespace gasdet::channel {

namespace {

cvec convolve(const cvec& a, const cvec& b) {
  cvec out(a.size() + b.size() - 1, cplx{0.0, 0.0});
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

double wrap_phase(double theta) {
  theta = std::fmod(theta, kTwoPi);
  if (theta < 0.0) theta += kTwoPi;
  if (theta >= kTwoPi) theta = 0.0;
  return theta;
}

}  // namespace

LinkCir gen_link(std::size_t num_taps, Rng& rng) {
  if (num_taps == 0) throw InvalidArgument("gen_link: num_taps must be >= 1");
  LinkCir link;
  link.taps.reserve(num_taps);
  const double var = 1.0 / static_cast<double>(num_taps);
  for (std::size_t i = 0; i < num_taps; ++i) link.taps.push_back(rng.cgaussian(var));
  return link;
}

RisPaths sample_paths(std::size_t l_ui, std::size_t l_ib, std::size_t elements, Rng& rng) {
  if (elements == 0) throw InvalidArgument("sample_paths: need at least one RIS element");
  RisPaths paths;
  paths.per_element.reserve(elements);
  for (std::size_t r = 0; r < elements; ++r) {
    const LinkCir ui = gen_link(l_ui, rng);
    const LinkCir ib = gen_link(l_ib, rng);
    paths.per_element.push_back(convolve(ui.taps, ib.taps));
  }
  return paths;
}

cvec cascade(const RisPaths& paths, const RisConfig& cfg) {
  if (cfg.phases.size() != paths.elements())
    throw InvalidArgument("cascade: phase count does not match element count");
  if (!cfg.amplitudes.empty() && cfg.amplitudes.size() != paths.elements())
    throw InvalidArgument("cascade: amplitude count does not match element count");
  cvec h(paths.taps(), cplx{0.0, 0.0});
  for (std::size_t r = 0; r < paths.elements(); ++r) {
    const double amp = cfg.amplitudes.empty() ? 1.0 : cfg.amplitudes[r];
    const cplx phi = amp * cplx{std::cos(cfg.phases[r]), std::sin(cfg.phases[r])};
    const cvec& g = paths.per_element[r];
    if (g.size() != h.size())
      throw InvalidArgument("cascade: ragged per-element path lengths");
    for (std::size_t l = 0; l < h.size(); ++l) h[l] += g[l] * phi;
  }
  return h;
}

RisConfig align_tap(const RisPaths& paths, std::size_t ell) {
  if (ell >= paths.taps()) throw InvalidArgument("align_tap: tap index out of range");
  RisConfig cfg;
  cfg.phases.reserve(paths.elements());
  cfg.amplitudes.assign(paths.elements(), 1.0);
  for (const cvec& g : paths.per_element) {
    const cplx tap = g[ell];
    // A zero tap contributes nothing regardless of phase; use 0.
    const double theta = (tap == cplx{0.0, 0.0}) ? 0.0 : -std::arg(tap);
    cfg.phases.push_back(wrap_phase(theta));
  }
  return cfg;
}

std::size_t best_tap(const RisPaths& paths) {
  if (paths.taps() == 0) throw InvalidArgument("best_tap: empty paths");
  std::size_t best = 0;
  double best_power = -1.0;
  for (std::size_t ell = 0; ell < paths.taps(); ++ell) {
    const cvec h = cascade(paths, align_tap(paths, ell));
    const double power = std::norm(h[ell]);
    if (power > best_power) {
      best_power = power;
      best = ell;
    }
  }
  return best;
}

RisConfig quantize_phases(const RisConfig& cfg, int bits) {
  if (bits <= 0) return cfg;
  RisConfig out = cfg;
  const double step = kTwoPi / static_cast<double>(std::uint64_t{1} << bits);
  for (double& theta : out.phases) theta = wrap_phase(std::round(theta / step) * step);
  return out;
}

RisConfig configure(const RisPaths& paths, TapStrategy strategy, int phase_bits) {
  std::size_t ell = 0;
  switch (strategy) {
    case TapStrategy::kFirst: ell = 0; break;
    case TapStrategy::kCentral: ell = paths.taps() / 2; break;
    case TapStrategy::kMax: ell = best_tap(paths); break;
  }
  return quantize_phases(align_tap(paths, ell), phase_bits);
}

ChannelRealization make_realization(const cvec& h_tilde, std::size_t block_len) {
  if (h_tilde.empty()) throw InvalidArgument("make_realization: empty response");
  if (h_tilde.size() > block_len)
    throw InvalidArgument("make_realization: response longer than block length");
  ChannelRealization ch;
  ch.h_tilde = h_tilde;
  ch.lambda = padded_dft(h_tilde, block_len);
  ch.block_len = block_len;
  return ch;
}

const char* strategy_name(TapStrategy s) {
  switch (s) {
    case TapStrategy::kFirst: return "first";
    case TapStrategy::kCentral: return "central";
    case TapStrategy::kMax: return "max";
  }
  return "?";
}

TapStrategy strategy_from_name(const std::string& name) {
  if (name == "first") return TapStrategy::kFirst;
  if (name == "central") return TapStrategy::kCentral;
  if (name == "max") return TapStrategy::kMax;
  throw ConfigError("unknown RIS strategy '" + name + "' (expected first|central|max)");
}

}  // namespace gasdet::channel
