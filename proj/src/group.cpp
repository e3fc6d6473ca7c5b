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

#include "vilenkin/group.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <string>

#include "vilenkin/error.hpp"

namespace vilenkin {

namespace {

// cos/sin values that are exactly 0, +-1/2 or +-1 are snapped so that
// sums of roots cancel exactly (1 + w + w^2 == 0 for m = 3, etc).
double snap(double v) {
  const double nearest_half = std::round(v * 2.0) / 2.0;
  return std::abs(v - nearest_half) < 1e-14 ? nearest_half : v;
}

std::vector<std::complex<double>> root_table(std::uint32_t m) {
  std::vector<std::complex<double>> roots(m);
  roots[0] = {1.0, 0.0};
  for (std::uint32_t u = 1; 2 * u <= m; ++u) {
    const double angle = 2.0 * std::numbers::pi * u / m;
    roots[u] = {snap(std::cos(angle)), snap(std::sin(angle))};
    roots[m - u] = std::conj(roots[u]);
  }
  return roots;
}

}  // namespace

std::vector<std::uint64_t> scale_table(std::span<const std::uint32_t> radices) {
  if (radices.empty()) fail(ErrorCode::kInvalidArgument, "depth must be at least 1");
  std::vector<std::uint64_t> scales(radices.size() + 1);
  scales[0] = 1;
  for (std::size_t k = 0; k < radices.size(); ++k) {
    if (radices[k] < 2) {
      fail(ErrorCode::kInvalidArgument,
           "radix m_" + std::to_string(k) + " = " + std::to_string(radices[k]) + " is below 2");
    }
    if (scales[k] > kMaxOrder / radices[k]) {
      fail(ErrorCode::kOverflow, "group order exceeds the limit of " +
                                     std::to_string(kMaxOrder) + " points at depth " +
                                     std::to_string(k + 1));
    }
    scales[k + 1] = scales[k] * radices[k];
  }
  return scales;
}

Group::Group(std::vector<std::uint32_t> radices)
    : radices_(std::move(radices)), scales_(scale_table(radices_)) {
  lambda_ = *std::max_element(radices_.begin(), radices_.end());
  // One table per distinct radix would do; the depth is small.
  roots_.reserve(radices_.size());
  for (std::uint32_t m : radices_) roots_.push_back(root_table(m));
}

GroupPtr Group::create(std::vector<std::uint32_t> radices) {
  return GroupPtr(new Group(std::move(radices)));
}

GroupPtr Group::cycled(std::span<const std::uint32_t> pattern, std::size_t depth) {
  if (pattern.empty()) fail(ErrorCode::kInvalidArgument, "empty radix pattern");
  if (depth == 0) fail(ErrorCode::kInvalidArgument, "depth must be at least 1");
  std::vector<std::uint32_t> radices(depth);
  for (std::size_t k = 0; k < depth; ++k) radices[k] = pattern[k % pattern.size()];
  return create(std::move(radices));
}

GroupPtr Group::parse(std::string_view radix_list, std::size_t depth) {
  std::vector<std::uint32_t> pattern;
  std::size_t pos = 0;
  while (pos <= radix_list.size()) {
    const std::size_t comma = std::min(radix_list.find(',', pos), radix_list.size());
    std::string_view token = radix_list.substr(pos, comma - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    std::uint32_t value = 0;
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || end != token.data() + token.size()) {
      fail(ErrorCode::kParse, "bad radix '" + std::string(token) + "' in '" +
                                  std::string(radix_list) + "'");
    }
    pattern.push_back(value);
    pos = comma + 1;
  }
  return cycled(pattern, depth);
}

Expansion Group::digits(std::uint64_t n) const {
  if (n >= order()) {
    fail(ErrorCode::kOutOfRange,
         "index " + std::to_string(n) + " outside [0, " + std::to_string(order()) + ")");
  }
  Expansion e;
  e.digits.resize(depth());
  for (std::size_t k = 0; k < depth(); ++k) {
    e.digits[k] = static_cast<std::uint32_t>(n % radices_[k]);
    n /= radices_[k];
    if (e.digits[k] != 0) e.order = k;
  }
  return e;
}

void Group::check(const Point& x) const {
  if (x.digits.size() != depth()) {
    fail(ErrorCode::kInvalidArgument, "point has " + std::to_string(x.digits.size()) +
                                          " digits, group depth is " + std::to_string(depth()));
  }
  for (std::size_t k = 0; k < depth(); ++k) {
    if (x.digits[k] >= radices_[k]) {
      fail(ErrorCode::kOutOfRange, "digit " + std::to_string(k) + " = " +
                                       std::to_string(x.digits[k]) + " not below radix " +
                                       std::to_string(radices_[k]));
    }
  }
}

std::uint64_t Group::rank(const Point& x) const {
  check(x);
  std::uint64_t r = 0;
  for (std::size_t k = 0; k < depth(); ++k) r += x.digits[k] * scales_[k];
  return r;
}

Point Group::point(std::uint64_t rank) const { return Point{digits(rank).digits}; }

Point Group::add(const Point& x, const Point& y) const {
  check(x);
  check(y);
  Point z{std::vector<std::uint32_t>(depth())};
  for (std::size_t k = 0; k < depth(); ++k) z.digits[k] = (x.digits[k] + y.digits[k]) % radices_[k];
  return z;
}

Point Group::sub(const Point& x, const Point& t) const {
  check(x);
  check(t);
  Point z{std::vector<std::uint32_t>(depth())};
  for (std::size_t k = 0; k < depth(); ++k) {
    z.digits[k] = (x.digits[k] + radices_[k] - t.digits[k]) % radices_[k];
  }
  return z;
}

std::uint64_t Group::add_ranks(std::uint64_t x, std::uint64_t y) const {
  std::uint64_t r = 0;
  for (std::size_t k = 0; k < depth(); ++k) {
    const std::uint32_t m = radices_[k];
    r += ((x % m + y % m) % m) * scales_[k];
    x /= m;
    y /= m;
  }
  return r;
}

std::uint64_t Group::sub_ranks(std::uint64_t x, std::uint64_t t) const {
  std::uint64_t r = 0;
  for (std::size_t k = 0; k < depth(); ++k) {
    const std::uint32_t m = radices_[k];
    r += ((x % m + m - t % m) % m) * scales_[k];
    x /= m;
    t /= m;
  }
  return r;
}

bool Interval::contains(const Point& y) const {
  if (y.digits.size() < rank || base.digits.size() < rank) return false;
  return std::equal(base.digits.begin(), base.digits.begin() + rank, y.digits.begin());
}

bool interval_contains(const Interval& interval, const Point& y) {
  return interval.contains(y);
}

bool interval_contains(const Group& g, const Interval& interval, std::uint64_t y) {
  // The first n digits of a rank are its residue mod M_n.
  const std::uint64_t mod = g.scale(interval.rank);
  std::uint64_t base = 0;
  for (std::size_t k = 0; k < interval.rank; ++k) base += interval.base.digits[k] * g.scale(k);
  return y % mod == base;
}

double measure(const Group& g, const Interval& interval) {
  return 1.0 / static_cast<double>(g.scale(interval.rank));
}

std::uint64_t member_count(const Group& g, const Interval& interval) {
  return g.order() / g.scale(interval.rank);
}

bool Shell::contains(const Point& y) const {
  const auto s = shell_of(y);
  return s && *s == index;
}

std::vector<Shell> shell_partition(const Group& g) {
  std::vector<Shell> shells(g.depth());
  for (std::size_t s = 0; s < g.depth(); ++s) {
    shells[s].index = s;
    shells[s].measure = 1.0 / static_cast<double>(g.scale(s)) -
                        1.0 / static_cast<double>(g.scale(s + 1));
  }
  return shells;
}

std::optional<std::size_t> shell_of(const Point& y) {
  for (std::size_t k = 0; k < y.digits.size(); ++k) {
    if (y.digits[k] != 0) return k;
  }
  return std::nullopt;
}

std::optional<std::size_t> shell_of(const Group& g, std::uint64_t y) {
  for (std::size_t k = 0; k < g.depth(); ++k) {
    if (y % g.radix(k) != 0) return k;
    y /= g.radix(k);
  }
  return std::nullopt;
}

}  // namespace vilenkin
