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

#include "vilenkin/hardy.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "vilenkin/error.hpp"

namespace vilenkin {

namespace {

void check_exponent(double p) {
  if (!(p > 0.0) || !std::isfinite(p)) {
    fail(ErrorCode::kInvalidArgument, "exponent p = " + format_double(p) + " must be positive");
  }
}

std::uint64_t base_rank(const Group& g, const Interval& interval) {
  std::uint64_t r = 0;
  for (std::size_t k = 0; k < interval.rank; ++k) r += interval.base.digits[k] * g.scale(k);
  return r;
}

void check_interval(const Group& g, const Interval& interval) {
  if (interval.rank > g.depth()) {
    fail(ErrorCode::kOutOfRange, "interval rank " + std::to_string(interval.rank) +
                                     " above depth " + std::to_string(g.depth()));
  }
  g.check(interval.base);
}

bool same_group(const Group& a, const Group& b) {
  return &a == &b || std::ranges::equal(a.radices(), b.radices());
}

}  // namespace

GridFunction condition(const GridFunction& f, std::size_t n) {
  const Group& g = f.group();
  if (n > g.depth()) {
    fail(ErrorCode::kOutOfRange, "level " + std::to_string(n) + " above depth " +
                                     std::to_string(g.depth()));
  }
  const std::uint64_t cells = g.scale(n);
  std::vector<Complex> sums(cells);
  for (std::uint64_t r = 0; r < g.order(); ++r) sums[r % cells] += f[r];
  const double per_cell = static_cast<double>(g.order() / cells);
  GridFunction out(f.group_ptr());
  for (std::uint64_t r = 0; r < g.order(); ++r) out[r] = sums[r % cells] / per_cell;
  return out;
}

GridFunction maximal(const Martingale& f) {
  const Group& g = f.group();
  GridFunction out(f.group_ptr());
  for (std::size_t n = 0; n <= g.depth(); ++n) {
    const GridFunction level = f.level(n);
    for (std::uint64_t r = 0; r < g.order(); ++r) {
      out[r] = std::max(out[r].real(), std::abs(level[r]));
    }
  }
  return out;
}

double lp_quasinorm(const GridFunction& g, double p) {
  check_exponent(p);
  double acc = 0.0;
  for (const Complex& v : g.values()) acc += std::pow(std::abs(v), p);
  return std::pow(acc / static_cast<double>(g.size()), 1.0 / p);
}

double hp_quasinorm(const Martingale& f, double p) {
  check_exponent(p);
  return lp_quasinorm(maximal(f), p);
}

double atom_bound(const Group& g, const Atom& a) {
  return std::pow(static_cast<double>(g.scale(a.interval.rank)), 1.0 / a.p);
}

Atom make_atom(const GroupPtr& group, const Interval& interval, double p, std::uint64_t seed) {
  if (!group) fail(ErrorCode::kInvalidArgument, "atom without a group");
  const Group& g = *group;
  check_exponent(p);
  if (p > 1.0) fail(ErrorCode::kInvalidArgument, "atoms need 0 < p <= 1, got " + format_double(p));
  check_interval(g, interval);

  Atom atom{p, interval, GridFunction(group)};
  // Mean zero with full support forces the zero function.
  if (interval.rank == 0) return atom;

  const std::uint64_t base = base_rank(g, interval);
  const std::uint64_t cell = g.scale(interval.rank);
  const std::uint64_t count = g.order() / cell;

  // Integer draws in [-2^19, 2^19]; after removing the integer mean every
  // |q| <= 2^20 + 1.
  constexpr std::int64_t kHalfRange = std::int64_t{1} << 19;
  // Plain modular reduction of the engine output keeps the stream identical
  // across standard libraries; the bias is below 2^-40.
  std::mt19937_64 rng(seed);
  std::vector<std::int64_t> q(count);
  std::int64_t total = 0;
  for (auto& v : q) {
    v = static_cast<std::int64_t>(rng() % (2 * kHalfRange + 1)) - kHalfRange;
    total += v;
  }
  const auto n = static_cast<std::int64_t>(count);
  const std::int64_t shift = total / n;
  std::int64_t remainder = total - shift * n;
  for (auto& v : q) v -= shift;
  for (std::size_t i = 0; remainder != 0; ++i) {
    const std::int64_t step = remainder > 0 ? 1 : -1;
    q[i] -= step;
    remainder -= step;
  }

  // Power-of-two step keeps every partial sum exact in double precision.
  const double bound = atom_bound(g, atom);
  const double max_level = static_cast<double>(2 * kHalfRange + 1);
  const double step = std::ldexp(1.0, static_cast<int>(std::floor(std::log2(bound / max_level))));
  for (std::uint64_t i = 0; i < count; ++i) atom.values[base + i * cell] = static_cast<double>(q[i]) * step;
  return atom;
}

std::string AtomDiagnostics::describe() const {
  if (valid()) return "valid p-atom";
  std::string out;
  auto add = [&out](const std::string& s) { out += out.empty() ? s : "; " + s; };
  if (!support_ok) add("nonzero value outside the interval");
  if (!mean_ok) add("mean " + format_double(mean) + " is not zero");
  if (!sup_ok) add("sup " + format_double(sup) + " exceeds bound " + format_double(bound));
  return out;
}

AtomDiagnostics validate_atom(const Atom& a) {
  const Group& g = a.values.group();
  check_interval(g, a.interval);
  AtomDiagnostics d;
  d.bound = atom_bound(g, a);
  Complex sum{0.0, 0.0};
  std::uint64_t inside = 0;
  for (std::uint64_t r = 0; r < g.order(); ++r) {
    const Complex v = a.values[r];
    if (interval_contains(g, a.interval, r)) {
      sum += v;
      ++inside;
      d.sup = std::max(d.sup, std::abs(v));
    } else if (v != Complex{0.0, 0.0}) {
      d.support_ok = false;
      d.sup = std::max(d.sup, std::abs(v));
    }
  }
  d.mean = std::abs(sum) / static_cast<double>(inside);
  d.mean_ok = d.mean <= 1e-12 * d.bound;
  d.sup_ok = d.sup <= d.bound * (1.0 + 1e-12);
  return d;
}

Martingale synthesize(const AtomicDecomposition& d) {
  if (d.atoms.empty()) fail(ErrorCode::kInvalidArgument, "empty atomic decomposition");
  if (d.weights.size() != d.atoms.size()) {
    fail(ErrorCode::kInvalidArgument, "decomposition has " + std::to_string(d.weights.size()) +
                                          " weights for " + std::to_string(d.atoms.size()) +
                                          " atoms");
  }
  GridFunction sum(d.atoms.front().values.group_ptr());
  for (std::size_t k = 0; k < d.atoms.size(); ++k) {
    const GridFunction& a = d.atoms[k].values;
    if (!same_group(a.group(), sum.group())) {
      fail(ErrorCode::kInvalidArgument, "atom " + std::to_string(k) + " lives on another group");
    }
    for (std::uint64_t r = 0; r < sum.size(); ++r) sum[r] += d.weights[k] * a[r];
  }
  return Martingale(std::move(sum));
}

std::string decomposition_csv(const Group& g, const AtomicDecomposition& d) {
  std::string out = "k,mu_k,interval_rank,base_rank\n";
  for (std::size_t k = 0; k < d.atoms.size(); ++k) {
    const Interval& I = d.atoms[k].interval;
    out += std::to_string(k) + ',' + format_double(d.weights[k]) + ',' +
           std::to_string(I.rank) + ',' + std::to_string(base_rank(g, I)) + '\n';
  }
  return out;
}

Complex level_coefficient(const Martingale& f, std::size_t k, std::uint64_t i) {
  const Group& g = f.group();
  if (i >= g.order()) {
    fail(ErrorCode::kOutOfRange, "coefficient " + std::to_string(i) +
                                     " is not resolvable below M_N = " + std::to_string(g.order()));
  }
  const GridFunction level = f.level(k);
  const std::vector<Complex> psi = sample_character(g, i);
  Complex acc{0.0, 0.0};
  for (std::uint64_t r = 0; r < g.order(); ++r) acc += level[r] * std::conj(psi[r]);
  return acc / static_cast<double>(g.order());
}

Complex martingale_coefficient(const Martingale& f, std::uint64_t i) {
  return level_coefficient(f, f.depth(), i);
}

}  // namespace vilenkin
