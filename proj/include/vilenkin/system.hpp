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

// Rademacher functions, Vilenkin characters and Dirichlet kernels.

#ifndef VILENKIN_SYSTEM_HPP
#define VILENKIN_SYSTEM_HPP

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "vilenkin/group.hpp"

namespace vilenkin {

using Complex = std::complex<double>;

/// A character index n < M_N with its digit expansion cached.
class CharacterIndex {
 public:
  CharacterIndex(const Group& g, std::uint64_t n) : value_(n), expansion_(g.digits(n)) {}

  std::uint64_t value() const noexcept { return value_; }
  const std::vector<std::uint32_t>& digits() const noexcept { return expansion_.digits; }
  std::size_t order() const noexcept { return expansion_.order; }

 private:
  std::uint64_t value_;
  Expansion expansion_;
};

/// r_k(x) = exp(2 pi i x_k / m_k).
Complex rademacher(const Group& g, std::size_t k, const Point& x);

/// psi_n(x) = prod_k r_k(x)^{n_k}.
Complex character(const Group& g, const CharacterIndex& n, const Point& x);
Complex character(const Group& g, std::uint64_t n, const Point& x);

/// psi_n sampled at every point, indexed by rank. O(M_N).
std::vector<Complex> sample_character(const Group& g, std::uint64_t n);

/// D_n(x) = sum_{k<n} psi_k(x), summed term by term. 1 <= n <= M_N.
Complex dirichlet_naive(const Group& g, std::uint64_t n, const Point& x);

/// D_{M_n}(x): M_n on I_n, zero elsewhere. 0 <= n <= N.
double dirichlet_block(const Group& g, std::size_t n, const Point& x);

/// D_n(x) from the digit-wise closed form
///   psi_n(x) * sum_{j : n_j != 0} D_{M_j}(x) * sum_{u=m_j-n_j}^{m_j-1} r_j(x)^u.
/// n = M_N has its single nonzero digit beyond the truncation and reduces to
/// the block kernel D_{M_N}.
Complex dirichlet_closed(const Group& g, std::uint64_t n, const Point& x);

/// D_n at every point via the closed form, indexed by rank.
std::vector<Complex> sample_dirichlet(const Group& g, std::uint64_t n);

/// True iff |D_n(x)| <= M_{l+1} on every point of the shell I_l \ I_{l+1}.
bool dirichlet_shell_bound_check(const Group& g, std::uint64_t n, std::size_t l);

}  // namespace vilenkin

#endif  // VILENKIN_SYSTEM_HPP
