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

#include "vilenkin/system.hpp"

#include <string>

#include "vilenkin/error.hpp"

namespace vilenkin {

namespace {

void check_kernel_index(const Group& g, std::uint64_t n) {
  if (n < 1 || n > g.order()) {
    fail(ErrorCode::kOutOfRange, "kernel index " + std::to_string(n) + " outside [1, " +
                                     std::to_string(g.order()) + "]");
  }
}

}  // namespace

Complex rademacher(const Group& g, std::size_t k, const Point& x) {
  if (k >= g.depth()) {
    fail(ErrorCode::kOutOfRange, "Rademacher index " + std::to_string(k) +
                                     " not below depth " + std::to_string(g.depth()));
  }
  g.check(x);
  return g.root(k, x.digits[k]);
}

Complex character(const Group& g, const CharacterIndex& n, const Point& x) {
  g.check(x);
  Complex value{1.0, 0.0};
  const auto& digits = n.digits();
  for (std::size_t k = 0; k < g.depth(); ++k) {
    // r_k^{n_k} = exp(2 pi i n_k x_k / m_k): one table lookup per factor.
    if (digits[k] != 0 && x.digits[k] != 0) {
      value *= g.root(k, std::uint64_t{digits[k]} * x.digits[k]);
    }
  }
  return value;
}

Complex character(const Group& g, std::uint64_t n, const Point& x) {
  return character(g, CharacterIndex(g, n), x);
}

std::vector<Complex> sample_character(const Group& g, std::uint64_t n) {
  const Expansion e = g.digits(n);
  std::vector<Complex> values(g.order());
  values[0] = 1.0;
  // Grow the table one axis at a time: the block for x_k = j is the block for
  // x_k = 0 times r_k^{n_k j}.
  for (std::size_t k = 0; k < g.depth(); ++k) {
    const std::uint64_t block = g.scale(k);
    for (std::uint32_t j = 1; j < g.radix(k); ++j) {
      const Complex factor = g.root(k, std::uint64_t{e.digits[k]} * j);
      Complex* dst = values.data() + j * block;
      for (std::uint64_t i = 0; i < block; ++i) dst[i] = values[i] * factor;
    }
  }
  return values;
}

Complex dirichlet_naive(const Group& g, std::uint64_t n, const Point& x) {
  check_kernel_index(g, n);
  Complex sum{0.0, 0.0};
  for (std::uint64_t k = 0; k < n; ++k) sum += character(g, k, x);
  return sum;
}

double dirichlet_block(const Group& g, std::size_t n, const Point& x) {
  if (n > g.depth()) {
    fail(ErrorCode::kOutOfRange, "scale index " + std::to_string(n) + " above depth " +
                                     std::to_string(g.depth()));
  }
  g.check(x);
  for (std::size_t k = 0; k < n; ++k) {
    if (x.digits[k] != 0) return 0.0;
  }
  return static_cast<double>(g.scale(n));
}

Complex dirichlet_closed(const Group& g, std::uint64_t n, const Point& x) {
  check_kernel_index(g, n);
  if (n == g.order()) return dirichlet_block(g, g.depth(), x);

  const CharacterIndex index(g, n);
  const auto& digits = index.digits();
  Complex sum{0.0, 0.0};
  for (std::size_t j = 0; j < g.depth(); ++j) {
    if (digits[j] == 0) continue;
    const double block = dirichlet_block(g, j, x);
    // D_{M_j} vanishes for every larger j once it vanishes here.
    if (block == 0.0) break;
    const std::uint32_t m = g.radix(j);
    Complex inner{0.0, 0.0};
    for (std::uint32_t u = m - digits[j]; u < m; ++u) {
      inner += g.root(j, std::uint64_t{u} * x.digits[j]);
    }
    sum += block * inner;
  }
  return character(g, index, x) * sum;
}

std::vector<Complex> sample_dirichlet(const Group& g, std::uint64_t n) {
  std::vector<Complex> values(g.order());
  for (std::uint64_t r = 0; r < g.order(); ++r) values[r] = dirichlet_closed(g, n, g.point(r));
  return values;
}

bool dirichlet_shell_bound_check(const Group& g, std::uint64_t n, std::size_t l) {
  if (l >= g.depth()) {
    fail(ErrorCode::kOutOfRange, "shell index " + std::to_string(l) + " not below depth " +
                                     std::to_string(g.depth()));
  }
  const double bound = static_cast<double>(g.scale(l + 1));
  for (std::uint64_t r = 0; r < g.order(); ++r) {
    const auto s = shell_of(g, r);
    if (!s || *s != l) continue;
    if (std::abs(dirichlet_closed(g, n, g.point(r))) > bound * (1.0 + 1e-12)) return false;
  }
  return true;
}

}  // namespace vilenkin
