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

#ifndef GASDET_COMMON_HPP
#define GASDET_COMMON_HPP

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gasdet {

using cplx = std::complex<double>;
using cvec = std::vector<cplx>;

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

/// Argument outside its documented domain (dimension mismatch, bad index, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Request exceeds a hard size guard (e.g. exhaustive enumeration limits).
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Value register too narrow for the shifted-cost range it must hold.
class WidthError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent experiment configuration.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Key bitstrings are packed into uint64 with bit i holding b_i.
inline std::vector<std::uint8_t> unpack_bits(std::uint64_t word, int n) {
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) bits[static_cast<std::size_t>(i)] = (word >> i) & 1u;
  return bits;
}

inline std::uint64_t pack_bits(const std::vector<std::uint8_t>& bits) {
  std::uint64_t word = 0;
  for (std::size_t i = 0; i < bits.size(); ++i)
    if (bits[i]) word |= (std::uint64_t{1} << i);
  return word;
}

std::string format_double(double v);

}  // namespace gasdet

#endif  // GASDET_COMMON_HPP
