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

#ifndef GASDET_DFT_HPP
#define GASDET_DFT_HPP

#include "common.hpp"

namespace gasdet {

// Block transforms use the unitary (1/sqrt(N)) convention so Parseval holds
// as-is; channel eigenvalues use the plain DFT so that the circulant channel
// matrix is Q^H diag(lambda) Q with Q the unitary DFT matrix.

/// Unitary DFT, X_k = (1/sqrt(N)) sum_t x_t e^{-2pi i kt/N}.
cvec unitary_dft(const cvec& x);

/// Unitary inverse DFT.
cvec unitary_idft(const cvec& x);

/// Plain N-point DFT of `x` zero-padded to length n (eigenvalues of the
/// circulant matrix whose first column is the padded x).
cvec padded_dft(const cvec& x, std::size_t n);

/// Circular convolution of h (length <= n) with x (length n).
cvec circular_convolve(const cvec& h, const cvec& x);

// Power-of-two FFT used by the statevector simulator; `sign` is the exponent
// sign (-1 forward / IQFT direction), scaling is 1/sqrt(M) either way.
void fft_pow2_strided(cplx* data, std::size_t m_qubits, std::size_t stride, int sign);

}  // namespace gasdet

#endif  // GASDET_DFT_HPP
