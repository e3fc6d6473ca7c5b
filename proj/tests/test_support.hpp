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

// Shared generators for the test binaries.

#ifndef VILENKIN_TESTS_TEST_SUPPORT_HPP
#define VILENKIN_TESTS_TEST_SUPPORT_HPP

#include <algorithm>
#include <random>
#include <span>

#include "vilenkin/transform.hpp"

namespace vilenkin::testing {

inline GridFunction random_function(const GroupPtr& g, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  GridFunction f(g);
  for (Complex& v : f.values()) v = {u(rng), u(rng)};
  return f;
}

inline double max_diff(std::span<const Complex> a, std::span<const Complex> b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    worst = std::max(worst, std::abs(a[i] - b[i]));
  }
  return a.size() == b.size() ? worst : 1e300;
}

}  // namespace vilenkin::testing

#endif  // VILENKIN_TESTS_TEST_SUPPORT_HPP
