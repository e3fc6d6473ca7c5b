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

// Mixed-radix arithmetic on the truncated bounded Vilenkin group
// Z_{m_0} x ... x Z_{m_{N-1}}. Points are enumerated by rank
// x_0*M_0 + x_1*M_1 + ..., the same expansion used for character indices.

#ifndef VILENKIN_GROUP_HPP
#define VILENKIN_GROUP_HPP

#include <complex>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace vilenkin {

/// Largest group order M_N accepted anywhere in the library. Grids of this
/// many complex samples are the upper end of what a desk machine holds.
inline constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 32;

/// M_0..M_N with M_0 = 1 and M_{k+1} = m_k M_k. Throws on a radix below 2,
/// an empty sequence, or an order above kMaxOrder.
std::vector<std::uint64_t> scale_table(std::span<const std::uint32_t> radices);

/// An element of the truncated group: one digit per coordinate.
struct Point {
  std::vector<std::uint32_t> digits;

  bool operator==(const Point&) const = default;
};

/// Digit expansion n = sum n_j M_j together with |n| = max{j : n_j != 0}.
/// |0| is 0 by convention.
struct Expansion {
  std::vector<std::uint32_t> digits;
  std::size_t order = 0;
};

class Group;
using GroupPtr = std::shared_ptr<const Group>;

class Group {
 public:
  /// Builds the group of depth radices.size().
  static GroupPtr create(std::vector<std::uint32_t> radices);

  /// Cycles a short radix pattern out to the requested depth
  /// ("2,3" with depth 4 gives 2,3,2,3).
  static GroupPtr cycled(std::span<const std::uint32_t> pattern, std::size_t depth);

  /// Parses a comma-separated radix list and cycles it to depth.
  static GroupPtr parse(std::string_view radix_list, std::size_t depth);

  std::size_t depth() const noexcept { return radices_.size(); }
  std::uint32_t radix(std::size_t k) const { return radices_.at(k); }
  std::span<const std::uint32_t> radices() const noexcept { return radices_; }
  std::uint64_t scale(std::size_t k) const { return scales_.at(k); }
  std::span<const std::uint64_t> scales() const noexcept { return scales_; }
  /// M_N, the number of points.
  std::uint64_t order() const noexcept { return scales_.back(); }
  /// lambda = max_k m_k.
  std::uint32_t lambda() const noexcept { return lambda_; }

  /// exp(2 pi i u / m_k) from the per-radix table; u is reduced mod m_k.
  std::complex<double> root(std::size_t k, std::uint64_t u) const {
    return roots_[k][u % radices_[k]];
  }

  Expansion digits(std::uint64_t n) const;
  std::uint64_t rank(const Point& x) const;
  Point point(std::uint64_t rank) const;
  Point zero() const { return Point{std::vector<std::uint32_t>(depth(), 0)}; }

  /// Digit k of a point given by rank.
  std::uint32_t digit(std::uint64_t rank, std::size_t k) const {
    return static_cast<std::uint32_t>((rank / scales_[k]) % radices_[k]);
  }

  Point add(const Point& x, const Point& y) const;
  Point sub(const Point& x, const Point& t) const;
  std::uint64_t add_ranks(std::uint64_t x, std::uint64_t y) const;
  std::uint64_t sub_ranks(std::uint64_t x, std::uint64_t t) const;

  /// Throws unless x has one in-range digit per coordinate.
  void check(const Point& x) const;

 private:
  explicit Group(std::vector<std::uint32_t> radices);

  std::vector<std::uint32_t> radices_;
  std::vector<std::uint64_t> scales_;
  std::vector<std::vector<std::complex<double>>> roots_;
  std::uint32_t lambda_ = 0;
};

/// The cylinder I_n(base): points agreeing with base on coordinates 0..n-1.
struct Interval {
  std::size_t rank = 0;
  Point base;

  bool contains(const Point& y) const;
};

/// Rank-based membership test, used by the grid-sized loops.
bool interval_contains(const Group& g, const Interval& interval, std::uint64_t y);
bool interval_contains(const Interval& interval, const Point& y);

/// Haar measure 1/M_n.
double measure(const Group& g, const Interval& interval);

/// Number of grid points inside I_n, M_N / M_n.
std::uint64_t member_count(const Group& g, const Interval& interval);

/// The annulus I_s \ I_{s+1} around zero.
struct Shell {
  std::size_t index = 0;
  double measure = 0.0;

  bool contains(const Point& y) const;
};

/// Shells s = 0..N-1; together with I_N they partition the group.
std::vector<Shell> shell_partition(const Group& g);

/// The s with y in I_s \ I_{s+1}, i.e. the first nonzero coordinate of y;
/// empty when y lies in I_N (y = 0 at full truncation).
std::optional<std::size_t> shell_of(const Group& g, std::uint64_t y);
std::optional<std::size_t> shell_of(const Point& y);

}  // namespace vilenkin

#endif  // VILENKIN_GROUP_HPP
