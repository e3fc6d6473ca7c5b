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

#include <doctest.h>

#include <cmath>
#include <random>

#include "test_support.hpp"
#include "vilenkin/error.hpp"
#include "vilenkin/transform.hpp"

using namespace vilenkin;
using vilenkin::testing::max_diff;
using vilenkin::testing::random_function;

TEST_CASE("forward of constants and characters") {
  const GroupPtr g = Group::parse("2,3", 4);
  const Spectrum one = forward_naive(GridFunction(g, std::vector<Complex>(g->order(), 1.0)));
  CHECK(std::abs(one[0] - 1.0) < 1e-14);
  for (std::uint64_t k = 1; k < g->order(); ++k) CHECK(std::abs(one[k]) < 1e-14);

  for (std::uint64_t j = 0; j < g->order(); ++j) {
    const GridFunction psi(g, sample_character(*g, j));
    const Spectrum naive = forward_naive(psi);
    const Spectrum fast = forward_fast(psi);
    for (std::uint64_t k = 0; k < g->order(); ++k) {
      const double expected = j == k ? 1.0 : 0.0;
      CHECK(std::abs(naive[k] - expected) < 1e-12);
      CHECK(std::abs(fast[k] - expected) < 1e-12);
    }
  }
}

TEST_CASE("delta at zero has a flat spectrum") {
  const GroupPtr g = Group::parse("2,3,5", 4);
  GridFunction delta(g);
  delta[0] = 1.0;
  const Spectrum s = forward_fast(delta);
  for (std::uint64_t k = 0; k < g->order(); ++k) {
    CHECK(std::abs(s[k] - 1.0 / static_cast<double>(g->order())) < 1e-15);
  }
}

TEST_CASE("fast transform matches the naive oracle") {
  std::mt19937_64 rng(7);
  for (const auto& [radices, depth] : {std::pair{"2,3", 4}, std::pair{"2,3", 8}, std::pair{"5,2,7", 4},
                                       std::pair{"4", 5}}) {
    const GroupPtr g = Group::parse(radices, depth);
    for (int trial = 0; trial < 5; ++trial) {
      const GridFunction f = random_function(g, rng);
      CHECK(max_diff(forward_fast(f).values(), forward_naive(f).values()) < 1e-9);
    }
  }
}

TEST_CASE("linearity, Parseval and round trip") {
  std::mt19937_64 rng(11);
  const GroupPtr g = Group::parse("2,3", 6);
  const GridFunction f = random_function(g, rng);
  const GridFunction h = random_function(g, rng);
  const Complex alpha{0.3, -1.2};
  const Complex beta{2.0, 0.5};
  GridFunction mix(g);
  for (std::uint64_t r = 0; r < g->order(); ++r) mix[r] = alpha * f[r] + beta * h[r];
  const Spectrum sf = forward_fast(f);
  const Spectrum sh = forward_fast(h);
  const Spectrum sm = forward_fast(mix);
  for (std::uint64_t k = 0; k < g->order(); ++k) CHECK(std::abs(sm[k] - (alpha * sf[k] + beta * sh[k])) < 1e-10);

  double energy = 0.0;
  double spectral = 0.0;
  for (std::uint64_t r = 0; r < g->order(); ++r) {
    energy += std::norm(f[r]);
    spectral += std::norm(sf[r]);
  }
  CHECK(std::abs(energy / static_cast<double>(g->order()) - spectral) < 1e-10);

  const GridFunction back = inverse(sf);
  double scale = 0.0;
  for (const Complex& v : f.values()) scale = std::max(scale, std::abs(v));
  CHECK(max_diff(back.values(), f.values()) / scale < 1e-9);
}

TEST_CASE("inverse of deltas") {
  const GroupPtr g = Group::parse("2,3", 4);
  Spectrum s(g);
  s[0] = 1.0;
  const GridFunction flat = inverse(s);
  for (const Complex& v : flat.values()) CHECK(std::abs(v - 1.0) < 1e-15);
  for (std::uint64_t j : {1u, 5u, 17u, 35u}) {
    Spectrum d(g);
    d[j] = 1.0;
    CHECK(max_diff(inverse(d).values(), sample_character(*g, j)) < 1e-12);
  }
}

TEST_CASE("translation multiplies coefficients by conj(psi_k(t))") {
  std::mt19937_64 rng(3);
  const GroupPtr g = Group::parse("2,3", 4);
  const GridFunction f = random_function(g, rng);
  const Spectrum sf = forward_fast(f);
  for (std::uint64_t t : {1u, 7u, 30u}) {
    GridFunction shifted(g);
    for (std::uint64_t x = 0; x < g->order(); ++x) shifted[x] = f[g->sub_ranks(x, t)];
    const Spectrum ss = forward_fast(shifted);
    const Point tp = g->point(t);
    for (std::uint64_t k = 0; k < g->order(); ++k) {
      CHECK(std::abs(ss[k] - sf[k] * std::conj(character(*g, k, tp))) < 1e-10);
    }
  }
}

TEST_CASE("partial sums") {
  std::mt19937_64 rng(5);
  const GroupPtr g = Group::parse("2,3", 4);
  const GridFunction f = random_function(g, rng);
  const Spectrum s = forward_fast(f);

  const GridFunction s0 = partial_sum(s, 0);
  for (const Complex& v : s0.values()) CHECK(v == Complex{0.0, 0.0});
  CHECK(max_diff(partial_sum(s, g->order()).values(), f.values()) < 1e-12);
  CHECK_THROWS_AS(partial_sum(s, g->order() + 1), Error);

  // S_{M_n} f is the average over I_n(x), computed here by brute force.
  for (std::size_t n = 0; n <= g->depth(); ++n) {
    const GridFunction sn = partial_sum(s, g->scale(n));
    for (std::uint64_t x = 0; x < g->order(); ++x) {
      const Interval I{n, g->point(x)};
      Complex avg{0.0, 0.0};
      for (std::uint64_t y = 0; y < g->order(); ++y) {
        if (I.contains(g->point(y))) avg += f[y];
      }
      avg /= static_cast<double>(member_count(*g, I));
      CHECK(std::abs(sn[x] - avg) < 1e-10);
    }
  }

  for (std::uint64_t n = 1; n <= g->order(); ++n) {
    CHECK(max_diff(partial_sum_by_kernel(f, n).values(), partial_sum(s, n).values()) < 1e-9);
  }
  const GridFunction one(g, std::vector<Complex>(g->order(), 1.0));
  for (std::uint64_t n = 1; n <= g->order(); n += 5) {
    const GridFunction sn = partial_sum_by_kernel(one, n);
    for (const Complex& v : sn.values()) CHECK(std::abs(v - 1.0) < 1e-12);
  }
}

TEST_CASE("streamed partial sums agree with truncation") {
  std::mt19937_64 rng(9);
  const GroupPtr g = Group::parse("3,2", 5);
  const GridFunction f = random_function(g, rng);
  const Spectrum s = forward_fast(f);
  PartialSumStream stream(s, 50);
  CHECK(stream.index() == 0);
  std::size_t checkpoint = 0;
  while (stream.advance()) {
    const std::uint64_t n = stream.index();
    if (n == 1) {
      for (const Complex& v : stream.current().values()) CHECK(std::abs(v - s[0]) < 1e-14);
    }
    while (checkpoint <= g->depth() && g->scale(checkpoint) < n) ++checkpoint;
    if (checkpoint <= g->depth() && g->scale(checkpoint) == n) {
      CHECK(max_diff(stream.current().values(), partial_sum(s, n).values()) < 1e-10);
    }
  }
  CHECK(stream.index() == 50);
  CHECK(max_diff(stream.current().values(), partial_sum(s, 50).values()) < 1e-10);
  CHECK_THROWS_AS(PartialSumStream(s, g->order() + 1), Error);
}

TEST_CASE("CSV round trip and parse errors") {
  std::mt19937_64 rng(1);
  const GroupPtr g = Group::parse("2,3", 3);
  const GridFunction f = random_function(g, rng);
  const std::string text = to_csv(f.values());
  CHECK(text.starts_with("index,re,im\n"));
  const std::vector<Complex> back = complex_from_csv(text);
  REQUIRE(back.size() == f.size());
  for (std::size_t i = 0; i < back.size(); ++i) CHECK(back[i] == f[i]);

  CHECK(complex_from_csv("0,1,2\n1,3,4\n").size() == 2);
  CHECK_THROWS_AS(complex_from_csv("index,re,im\n0,1\n"), Error);
  CHECK_THROWS_AS(complex_from_csv("0,1,2\n2,3,4\n"), Error);
  CHECK_THROWS_AS(complex_from_csv("0,abc,2\n"), Error);
}

TEST_CASE("fields check their length") {
  const GroupPtr g = Group::parse("2,3", 3);
  CHECK_THROWS_AS(GridFunction(g, std::vector<Complex>(5)), Error);
  CHECK_THROWS_AS(GridFunction(nullptr, std::vector<Complex>(6)), Error);
}
