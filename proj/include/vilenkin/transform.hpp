// Copyright 2026 The Vilenkin Authors
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

// Vilenkin-Fourier transforms and partial sums.
//
// Samples and coefficients are both stored by rank, so coefficient k and the
// point with rank k share a slot. The forward transform carries the Haar
// weight 1/M_N; the inverse is plain synthesis sum_k c_k psi_k.

#ifndef VILENKIN_TRANSFORM_HPP
#define VILENKIN_TRANSFORM_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vilenkin/group.hpp"
#include "vilenkin/system.hpp"

namespace vilenkin {

/// M_N complex values tied to a group. Tag keeps samples and coefficients
/// apart at compile time.
template <class Tag>
class Field {
 public:
  Field(GroupPtr group, std::vector<Complex> values);
  /// All-zero field.
  explicit Field(GroupPtr group);

  const Group& group() const noexcept { return *group_; }
  const GroupPtr& group_ptr() const noexcept { return group_; }
  std::size_t size() const noexcept { return values_.size(); }

  std::span<const Complex> values() const noexcept { return values_; }
  std::span<Complex> values() noexcept { return values_; }
  const Complex& operator[](std::uint64_t i) const { return values_[i]; }
  Complex& operator[](std::uint64_t i) { return values_[i]; }

 private:
  GroupPtr group_;
  std::vector<Complex> values_;
};

struct SampleTag {};
struct CoefficientTag {};
using GridFunction = Field<SampleTag>;
using Spectrum = Field<CoefficientTag>;

extern template class Field<SampleTag>;
extern template class Field<CoefficientTag>;

/// O(M_N^2) reference: f^(k) = (1/M_N) sum_x f(x) conj(psi_k(x)).
Spectrum forward_naive(const GridFunction& f);

/// One small DFT per coordinate axis. O(M_N * sum_k m_k).
Spectrum forward_fast(const GridFunction& f);

/// sum_k c_k psi_k, same per-axis factorization as forward_fast.
GridFunction inverse(const Spectrum& s);

/// S_n f = sum_{k<n} f^(k) psi_k, by truncating the spectrum. S_0 f = 0.
GridFunction partial_sum(const Spectrum& s, std::uint64_t n);

/// S_n f(x) = (1/M_N) sum_t f(t) D_n(x - t). O(M_N^2); 1 <= n <= M_N.
GridFunction partial_sum_by_kernel(const GridFunction& f, std::uint64_t n);

/// Streams S_0 f, S_1 f, ..., S_{n_max} f using S_{n+1} = S_n + f^(n) psi_n.
class PartialSumStream {
 public:
  PartialSumStream(const Spectrum& s, std::uint64_t n_max);

  /// Index n of the current partial sum.
  std::uint64_t index() const noexcept { return n_; }
  const GridFunction& current() const noexcept { return sum_; }
  /// Advances to S_{n+1}; false once n_max has been reached.
  bool advance();

 private:
  Spectrum spectrum_;
  std::uint64_t n_max_;
  std::uint64_t n_ = 0;
  GridFunction sum_;
};

/// CSV with header "index,re,im", one row per rank.
std::string to_csv(std::span<const Complex> values);
/// Reads "index,re,im" rows (header optional); indices must be 0..len-1 in order.
std::vector<Complex> complex_from_csv(std::string_view text);

/// Shortest round-trip decimal form of a double.
std::string format_double(double v);

}  // namespace vilenkin

#endif  // VILENKIN_TRANSFORM_HPP
