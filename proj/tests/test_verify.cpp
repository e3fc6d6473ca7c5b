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
#include <set>

#include "test_support.hpp"
#include "vilenkin/error.hpp"
#include "vilenkin/verify.hpp"

using namespace vilenkin;
using vilenkin::testing::random_function;

TEST_CASE("Phi families") {
  const Phi sqrt_phi = Phi::parse("pow:0.5");
  CHECK(sqrt_phi.family() == PhiFamily::kPower);
  CHECK(sqrt_phi(16.0) == doctest::Approx(4.0));
  CHECK(Phi::parse("log")(std::exp(2.0) - 1.0) == doctest::Approx(2.0));
  CHECK(Phi::parse("const:3")(1e6) == 3.0);
  CHECK(Phi::parse("const")(7.0) == 1.0);

  const Phi table = Phi::tabulated_from_csv("n,phi\n1,1\n10,2\n100,5\n");
  CHECK(table.family() == PhiFamily::kTabulated);
  CHECK(table(0.5) == 1.0);
  CHECK(table(1.0) == 1.0);
  CHECK(table(9.99) == 1.0);
  CHECK(table(10.0) == 2.0);
  CHECK(table(1e9) == 5.0);

  CHECK_THROWS_AS(Phi::parse("pow"), Error);
  CHECK_THROWS_AS(Phi::parse("pow:-1"), Error);
  CHECK_THROWS_AS(Phi::parse("const:0"), Error);
  CHECK_THROWS_AS(Phi::parse("log:2"), Error);
  CHECK_THROWS_AS(Phi::parse("exp:1"), Error);
  CHECK_THROWS_AS(Phi::parse("file:/nonexistent/phi.csv"), Error);
  CHECK_THROWS_AS(Phi::tabulated({{1, 2}, {2, 1}}), Error);
  CHECK_THROWS_AS(Phi::tabulated({{2, 1}, {1, 2}}), Error);
  CHECK_THROWS_AS(Phi::tabulated({}), Error);
}

TEST_CASE("growth certification") {
  // At p = 1/2 the threshold exponent is 1.
  CHECK(Phi::power(0.0).certify(0.5) == Certification::kCertified);
  CHECK(Phi::power(0.99).certify(0.5) == Certification::kCertified);
  CHECK(Phi::power(1.0).certify(0.5) == Certification::kRejected);
  CHECK(Phi::power(2.0).certify(0.5) == Certification::kRejected);
  // At p = 3/4 the threshold is 1/3.
  CHECK(Phi::power(0.3).certify(0.75) == Certification::kCertified);
  CHECK(Phi::power(0.34).certify(0.75) == Certification::kRejected);
  CHECK(Phi::log().certify(0.9) == Certification::kCertified);
  CHECK(Phi::constant(2.0).certify(0.1) == Certification::kCertified);
  CHECK(Phi::tabulated({{1, 1}}).certify(0.5) == Certification::kUncertified);
  CHECK(Phi::power(2.0).certification_note(0.5).find("gamma < 1") != std::string::npos);
}

TEST_CASE("weighted maximal operator") {
  const GroupPtr g = Group::parse("2,3", 4);
  const GridFunction one(g, std::vector<Complex>(g->order(), 1.0));
  // S_n 1 = 1 for n >= 1, so the sup is attained at n = 1 with weight 1/2.
  const GridFunction op = maximal_operator_sp(one, 0.5, g->order());
  for (const Complex& v : op.values()) CHECK(v.real() == doctest::Approx(0.5));
  CHECK_THROWS_AS(maximal_operator_sp(one, 1.0, 4), Error);

  // Brute force against partial_sum for a random input.
  std::mt19937_64 rng(1);
  const GridFunction f = random_function(g, rng);
  const Spectrum s = forward_fast(f);
  for (double p : {0.25, 0.5, 0.75}) {
    std::vector<double> expected(g->order(), 0.0);
    for (std::uint64_t n = 1; n <= 20; ++n) {
      const GridFunction sn = partial_sum(s, n);
      const double w = std::pow(static_cast<double>(n + 1), 1.0 - 1.0 / p);
      for (std::uint64_t x = 0; x < g->order(); ++x) expected[x] = std::max(expected[x], std::abs(sn[x]) * w);
    }
    const GridFunction got = maximal_operator_sp(f, p, 20);
    for (std::uint64_t x = 0; x < g->order(); ++x) CHECK(got[x].real() == doctest::Approx(expected[x]).epsilon(1e-10));
  }
}

TEST_CASE("atom estimates") {
  const GroupPtr g = Group::parse("2,3", 6);
  for (std::uint64_t trial = 0; trial < 30; ++trial) {
    const double p = trial % 3 == 0 ? 0.25 : trial % 3 == 1 ? 0.5 : 0.75;
    const Atom a = random_trial_atom(g, p, 42, trial);
    CAPTURE(trial);
    CHECK(validate_atom(a).valid());
    CHECK(atom_nullity_check(a));
    CHECK(atom_tail_integral(a, p) <= tail_bound(*g, a.interval.rank, p));
    CHECK(atom_shell_ratio(a, p) <= 1.0);
    CHECK(hp_quasinorm(Martingale(a.values), p) <= 1.0 + 1e-10);
  }
  CHECK(tail_bound(*g, 0, 0.5) == 0.0);
  // lambda^{2p} (M_0^{p-1} + M_1^{p-1}) at p = 1/2: 3 (1 + 2^{-1/2}).
  CHECK(tail_bound(*g, 2, 0.5) == doctest::Approx(3.0 * (1.0 + std::sqrt(0.5))));
}

TEST_CASE("nullity check catches a non-atom") {
  const GroupPtr g = Group::parse("2,3", 4);
  Atom bad{0.5, Interval{2, g->zero()}, GridFunction(g)};
  for (std::uint64_t r = 0; r < g->order(); r += 6) bad.values[r] = 1.0;
  CHECK_FALSE(atom_nullity_check(bad));
  CHECK_FALSE(validate_atom(bad).valid());
}

TEST_CASE("kernel averages over intervals") {
  const GroupPtr g = Group::parse("2,3", 4);
  for (std::size_t rank = 0; rank <= g->depth(); ++rank) {
    for (std::uint64_t n = 1; n <= g->order(); ++n) {
      CAPTURE(rank);
      CAPTURE(n);
      CHECK(kernel_average_ratio(*g, rank, n) <= 1.0 + 1e-12);
    }
  }
  CHECK_THROWS_AS(kernel_average_ratio(*g, 5, 1), Error);
}

TEST_CASE("coefficient bound ratio") {
  const GroupPtr g = Group::parse("2,3", 5);
  const Martingale constant(GridFunction(g, std::vector<Complex>(g->order(), 1.0)));
  const BoundEntry c = coefficient_bound_ratio(constant, 0.5, 0, g->order());
  CHECK(c.n_star == 0);
  CHECK(c.ratio == doctest::Approx(1.0));
  CHECK(c.hp_norm == doctest::Approx(1.0));
  CHECK(c.ratio_plain == 0.0);

  for (std::uint64_t trial = 0; trial < 20; ++trial) {
    const Atom a = random_trial_atom(g, 0.5, 7, trial);
    const Martingale f(a.values);
    const BoundEntry e = coefficient_bound_ratio(f, 0.5, 0, g->order());
    CHECK(std::isfinite(e.ratio));
    CHECK(e.ratio > 0.0);
    CHECK(e.ratio_plain >= e.ratio);
    // A mean-zero atom on I_k has no coefficients below M_k.
    CHECK(e.n_star >= g->scale(a.interval.rank));
  }
  CHECK_THROWS_AS(coefficient_bound_ratio(Martingale(GridFunction(g)), 0.5, 0, 10), Error);
  CHECK_THROWS_AS(coefficient_bound_ratio(constant, 0.5, 5, 5), Error);
}

TEST_CASE("coefficients from consecutive partial sums") {
  std::mt19937_64 rng(6);
  const GroupPtr g = Group::parse("3,2", 4);
  const CoefficientIdentity id = coefficient_identity_check(random_function(g, rng));
  CHECK(id.max_deviation < 1e-10);
  CHECK(id.dominated);
}

TEST_CASE("greedy scale selection") {
  const GroupPtr g = Group::parse("2,3", 12);
  const AlphaSelection sel = choose_alphas(Phi::power(0.5), 0.5, *g, 0.9);
  CHECK(sel.alphas == std::vector<std::size_t>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11});
  double sum = 0.0;
  for (std::size_t k = 0; k < sel.terms.size(); ++k) {
    CHECK(sel.terms[k] <= std::pow(0.9, static_cast<double>(k)));
    if (k > 0) CHECK(sel.terms[k] < sel.terms[k - 1]);
    sum += sel.terms[k];
  }
  CHECK(sum <= 1.0 / (1.0 - 0.9));
  CHECK_FALSE(sel.reached_requested);

  const AlphaSelection three = choose_alphas(Phi::power(0.5), 0.5, *g, 0.9, 3);
  CHECK(three.alphas.size() == 3);
  CHECK(three.reached_requested);

  // Default budget on the same group skips indices to stay under 2^-k.
  const AlphaSelection half = choose_alphas(Phi::power(0.5), 0.5, *g, 0.5);
  for (std::size_t k = 0; k < half.terms.size(); ++k) CHECK(half.terms[k] <= std::pow(0.5, static_cast<double>(k)));
  CHECK(half.alphas.size() < sel.alphas.size());

  const AlphaSelection logs = choose_alphas(Phi::log(), 0.5, *g, 0.9);
  CHECK(logs.alphas.size() >= 3);

  CHECK_THROWS_AS(choose_alphas(Phi::power(2.0), 0.5, *g, 0.9), Error);
  CHECK_THROWS_AS(choose_alphas(Phi::power(0.5), 0.5, *g, 1.0), Error);
  CHECK_THROWS_AS(choose_alphas(Phi::power(0.5), 1.0, *g, 0.5), Error);
}

TEST_CASE("counterexample coefficients") {
  const GroupPtr g = Group::parse("2,3", 7);
  const CounterexampleSpec cs = make_counterexample_spec(*g, Phi::power(0.5), 0.5, {2, 4, 6});
  CHECK(cs.big_m == 3.0);
  CHECK(block_coefficient_closed(*g, cs, 0) == doctest::Approx(std::pow(6.0, 0.75) / 3.0));

  const AtomicDecomposition d = counterexample_decomposition(g, cs);
  for (const Atom& a : d.atoms) CHECK(validate_atom(a).valid());

  const Martingale f = build_counterexample(g, cs);
  const CoefficientTable table = counterexample_coefficients(f, cs);
  REQUIRE(table.rows.size() == 3);
  CHECK(table.max_relative_error < 1e-9);
  CHECK(table.max_off_block < 1e-12);
  CHECK(table.rows[1].m_alpha == 36);

  const std::vector<double> rho = divergence_ratios(table);
  const std::vector<double> closed = divergence_ratios_closed(*g, cs);
  const std::vector<double> expected = {std::pow(6.0, 0.25) / 3.0, std::pow(36.0, 0.25) / 3.0,
                                        std::pow(216.0, 0.25) / 3.0};
  for (std::size_t k = 0; k < 3; ++k) {
    CHECK(rho[k] == doctest::Approx(expected[k]).epsilon(1e-9));
    CHECK(closed[k] == doctest::Approx(expected[k]).epsilon(1e-12));
  }
  CHECK(strictly_increasing(rho));
  CHECK_FALSE(strictly_increasing({1.0, 1.0}));

  CHECK_THROWS_AS(make_counterexample_spec(*g, Phi::power(0.5), 0.5, {2, 2}), Error);
  CHECK_THROWS_AS(make_counterexample_spec(*g, Phi::power(0.5), 0.5, {7}), Error);
  CHECK_THROWS_AS(make_counterexample_spec(*g, Phi::power(0.5), 0.5, {}), Error);
}

TEST_CASE("Hardy inequality probe") {
  const GroupPtr g = Group::parse("2,3", 4);
  const Martingale psi1(GridFunction(g, sample_character(*g, 1)));
  const HardyInequality h = hardy_inequality_check(psi1, 0.5);
  CHECK(h.lhs == doctest::Approx(1.0));
  CHECK(h.rhs == doctest::Approx(1.0));
  CHECK(h.ratio == doctest::Approx(1.0));
  CHECK_THROWS_AS(hardy_inequality_check(Martingale(GridFunction(g)), 0.5), Error);
  CHECK_THROWS_AS(hardy_inequality_check(psi1, 1.5), Error);
}

TEST_CASE("Riemann-Lebesgue probe") {
  std::mt19937_64 rng(12);
  const GroupPtr g = Group::parse("2,3", 5);
  // Depends on x_0, x_1 only, so every coefficient from M_2 = 6 on vanishes.
  const GridFunction coarse = condition(random_function(g, rng), 2);
  const std::vector<double> tails = riemann_lebesgue_probe(coarse, 6);
  REQUIRE(tails.size() == g->order() / 6);
  CHECK(tails[0] > 0.0);
  for (std::size_t i = 1; i < tails.size(); ++i) CHECK(tails[i] < 1e-14);
  CHECK_THROWS_AS(riemann_lebesgue_probe(coarse, 0), Error);
}

TEST_CASE("trial seeds and populations") {
  std::set<std::uint64_t> seeds;
  for (std::uint64_t s = 0; s < 10; ++s) {
    for (std::uint64_t t = 0; t < 100; ++t) seeds.insert(trial_seed(s, t));
  }
  CHECK(seeds.size() == 1000);
  CHECK(trial_seed(5, 9) == trial_seed(5, 9));

  const GroupPtr g = Group::parse("2,3", 6);
  std::set<std::size_t> ranks;
  for (std::uint64_t t = 0; t < 200; ++t) {
    const Atom a = random_trial_atom(g, 0.5, 1, t);
    CHECK(a.interval.rank >= 1);
    CHECK(a.interval.rank < g->depth());
    CHECK(validate_atom(a).sup > 0.0);
    ranks.insert(a.interval.rank);
  }
  CHECK(ranks.size() == g->depth() - 1);
  const Atom a = random_atom_of_rank(g, 3, 0.5, 1, 4);
  const Atom b = random_atom_of_rank(g, 3, 0.5, 1, 4);
  CHECK(a.interval.base == b.interval.base);
  CHECK_THROWS_AS(random_atom_of_rank(g, 7, 0.5, 1, 0), Error);
}
