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

#include "dft.hpp"

#include <cmath>
#include <cstdio>

namespace gasdet {

namespace {

cvec dense_dft(const cvec& x, double expo_sign, double scale) {
  const std::size_t n = x.size();
  cvec out(n);
  for (std::size_t k = 0; k < n; ++k) {
    cplx acc{0.0, 0.0};
    for (std::size_t t = 0; t < n; ++t) {
      const double ang = expo_sign * kTwoPi * static_cast<double>(k) *
                         static_cast<double>(t) / static_cast<double>(n);
      acc += x[t] * cplx{std::cos(ang), std::sin(ang)};
    }
    out[k] = acc * scale;
  }
  return out;
}

}  // namespace

cvec unitary_dft(const cvec& x) {
  return dense_dft(x, -1.0, 1.0 / std::sqrt(static_cast<double>(x.size())));
}

cvec unitary_idft(const cvec& x) {
  return dense_dft(x, +1.0, 1.0 / std::sqrt(static_cast<double>(x.size())));
}

cvec padded_dft(const cvec& x, std::size_t n) {
  if (x.size() > n) throw InvalidArgument("padded_dft: input longer than target length");
  cvec padded(n, cplx{0.0, 0.0});
  for (std::size_t i = 0; i < x.size(); ++i) padded[i] = x[i];
  return dense_dft(padded, -1.0, 1.0);
}

cvec circular_convolve(const cvec& h, const cvec& x) {
  const std::size_t n = x.size();
  if (h.size() > n) throw InvalidArgument("circular_convolve: kernel longer than block");
  cvec y(n, cplx{0.0, 0.0});
  for (std::size_t i = 0; i < n; ++i) {
    cplx acc{0.0, 0.0};
    for (std::size_t l = 0; l < h.size(); ++l) {
      acc += h[l] * x[(i + n - l) % n];
    }
    y[i] = acc;
  }
  return y;
}

void fft_pow2_strided(cplx* data, std::size_t m_qubits, std::size_t stride, int sign) {
  const std::size_t n = std::size_t{1} << m_qubits;
  // Bit-reversal permutation over the strided register.
  for (std::size_t i = 0, j = 0; i < n; ++i) {
    if (i < j) std::swap(data[i * stride], data[j * stride]);
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = static_cast<double>(sign) * kTwoPi / static_cast<double>(len);
    const cplx wstep{std::cos(ang), std::sin(ang)};
    for (std::size_t i = 0; i < n; i += len) {
      cplx w{1.0, 0.0};
      for (std::size_t j = 0; j < len / 2; ++j) {
        cplx& a = data[(i + j) * stride];
        cplx& b = data[(i + j + len / 2) * stride];
        const cplx t = b * w;
        b = a - t;
        a = a + t;
        w *= wstep;
      }
    }
  }
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (std::size_t i = 0; i < n; ++i) data[i * stride] *= scale;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace gasdet
