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

#include "vilenkin/transform.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "vilenkin/error.hpp"

namespace vilenkin {

template <class Tag>
Field<Tag>::Field(GroupPtr group, std::vector<Complex> values)
    : group_(std::move(group)), values_(std::move(values)) {
  if (!group_) fail(ErrorCode::kInvalidArgument, "field without a group");
  if (values_.size() != group_->order()) {
    fail(ErrorCode::kInvalidArgument, "field has " + std::to_string(values_.size()) +
                                          " values, group order is " +
                                          std::to_string(group_->order()));
  }
}

template <class Tag>
Field<Tag>::Field(GroupPtr group)
    : Field(group, std::vector<Complex>(group ? group->order() : 0)) {}

template class Field<SampleTag>;
template class Field<CoefficientTag>;

namespace {

enum class Direction { kForward, kInverse };

// In-place pass over every axis. Axis k has stride M_k and length m_k in the
// rank layout; each line along it gets a direct length-m_k DFT.
void per_axis_dft(const Group& g, std::span<Complex> data, Direction dir) {
  const std::uint64_t total = g.order();
  std::vector<Complex> line;
  std::vector<Complex> matrix;
  for (std::size_t k = 0; k < g.depth(); ++k) {
    const std::uint32_t m = g.radix(k);
    const std::uint64_t stride = g.scale(k);
    const std::uint64_t span = stride * m;

    if (m == 2) {
      for (std::uint64_t outer = 0; outer < total; outer += span) {
        Complex* a = data.data() + outer;
        Complex* b = a + stride;
        for (std::uint64_t i = 0; i < stride; ++i) {
          const Complex x0 = a[i];
          const Complex x1 = b[i];
          a[i] = x0 + x1;
          b[i] = x0 - x1;
        }
      }
      continue;
    }

    matrix.resize(std::size_t{m} * m);
    for (std::uint32_t v = 0; v < m; ++v) {
      for (std::uint32_t u = 0; u < m; ++u) {
        const Complex w = g.root(k, std::uint64_t{u} * v);
        matrix[std::size_t{v} * m + u] = dir == Direction::kForward ? std::conj(w) : w;
      }
    }
    line.resize(m);
    for (std::uint64_t outer = 0; outer < total; outer += span) {
      for (std::uint64_t i = 0; i < stride; ++i) {
        Complex* base = data.data() + outer + i;
        for (std::uint32_t u = 0; u < m; ++u) line[u] = base[u * stride];
        for (std::uint32_t v = 0; v < m; ++v) {
          const Complex* row = matrix.data() + std::size_t{v} * m;
          Complex acc = line[0];
          for (std::uint32_t u = 1; u < m; ++u) acc += line[u] * row[u];
          base[v * stride] = acc;
        }
      }
    }
  }
}

// psi_k(x) = exp(2 pi i phase / L) with L = lcm(m_j) and
// phase = sum_j k_j x_j (L / m_j) mod L, tracked incrementally along an
// odometer over x. Falls back to per-digit products for huge L.
class CharacterWalker {
 public:
  explicit CharacterWalker(const Group& g) : g_(g) {
    std::uint64_t l = 1;
    for (std::uint32_t m : g.radices()) {
      l = std::lcm(l, std::uint64_t{m});
      if (l > kMaxTable) break;
    }
    lcm_ = l;
    if (lcm_ <= kMaxTable) {
      table_.resize(lcm_);
      for (std::uint64_t u = 0; u < lcm_; ++u) {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(u) /
                             static_cast<double>(lcm_);
        table_[u] = {std::cos(angle), std::sin(angle)};
      }
    }
  }

  // Calls visit(rank, psi_k(x)) for every x in rank order.
  template <class Visit>
  void for_each(std::uint64_t k, Visit&& visit) const {
    const Expansion e = g_.digits(k);
    const std::size_t n = g_.depth();
    std::vector<std::uint32_t> x(n, 0);
    if (lcm_ > kMaxTable) {
      for (std::uint64_t r = 0; r < g_.order(); ++r) {
        Complex value{1.0, 0.0};
        for (std::size_t j = 0; j < n; ++j) {
          value *= g_.root(j, std::uint64_t{e.digits[j]} * x[j]);
        }
        visit(r, value);
        increment(x);
      }
      return;
    }
    std::vector<std::uint64_t> step(n);
    for (std::size_t j = 0; j < n; ++j) step[j] = (e.digits[j] * (lcm_ / g_.radix(j))) % lcm_;
    std::uint64_t phase = 0;
    for (std::uint64_t r = 0; r < g_.order(); ++r) {
      visit(r, table_[phase]);
      for (std::size_t j = 0; j < n; ++j) {
        phase = (phase + step[j]) % lcm_;
        if (++x[j] < g_.radix(j)) break;
        // Wrapped: m_j steps of step[j] add a multiple of L, phase is back.
        x[j] = 0;
      }
    }
  }

 private:
  static constexpr std::uint64_t kMaxTable = std::uint64_t{1} << 20;

  void increment(std::vector<std::uint32_t>& x) const {
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (++x[j] < g_.radix(j)) return;
      x[j] = 0;
    }
  }

  const Group& g_;
  std::uint64_t lcm_ = 1;
  std::vector<Complex> table_;
};

}  // namespace

Spectrum forward_naive(const GridFunction& f) {
  const Group& g = f.group();
  const CharacterWalker walker(g);
  const double weight = static_cast<double>(g.order());
  Spectrum out(f.group_ptr());
  for (std::uint64_t k = 0; k < g.order(); ++k) {
    Complex acc{0.0, 0.0};
    walker.for_each(k, [&](std::uint64_t r, const Complex& psi) { acc += f[r] * std::conj(psi); });
    out[k] = acc / weight;
  }
  return out;
}

Spectrum forward_fast(const GridFunction& f) {
  std::vector<Complex> data(f.values().begin(), f.values().end());
  per_axis_dft(f.group(), data, Direction::kForward);
  const double weight = static_cast<double>(f.group().order());
  for (Complex& c : data) c /= weight;
  return Spectrum(f.group_ptr(), std::move(data));
}

GridFunction inverse(const Spectrum& s) {
  std::vector<Complex> data(s.values().begin(), s.values().end());
  per_axis_dft(s.group(), data, Direction::kInverse);
  return GridFunction(s.group_ptr(), std::move(data));
}

GridFunction partial_sum(const Spectrum& s, std::uint64_t n) {
  if (n > s.group().order()) {
    fail(ErrorCode::kOutOfRange, "partial sum index " + std::to_string(n) + " above M_N = " +
                                     std::to_string(s.group().order()));
  }
  Spectrum truncated = s;
  for (std::uint64_t k = n; k < truncated.size(); ++k) truncated[k] = 0.0;
  return inverse(truncated);
}

GridFunction partial_sum_by_kernel(const GridFunction& f, std::uint64_t n) {
  const Group& g = f.group();
  const std::vector<Complex> kernel = sample_dirichlet(g, n);
  const double weight = static_cast<double>(g.order());
  GridFunction out(f.group_ptr());
  for (std::uint64_t x = 0; x < g.order(); ++x) {
    Complex acc{0.0, 0.0};
    for (std::uint64_t t = 0; t < g.order(); ++t) acc += f[t] * kernel[g.sub_ranks(x, t)];
    out[x] = acc / weight;
  }
  return out;
}

PartialSumStream::PartialSumStream(const Spectrum& s, std::uint64_t n_max)
    : spectrum_(s), n_max_(n_max), sum_(s.group_ptr()) {
  if (n_max > s.group().order()) {
    fail(ErrorCode::kOutOfRange, "n_max " + std::to_string(n_max) + " above M_N = " +
                                     std::to_string(s.group().order()));
  }
}

bool PartialSumStream::advance() {
  if (n_ >= n_max_) return false;
  const Complex c = spectrum_[n_];
  if (c != Complex{0.0, 0.0}) {
    const std::vector<Complex> psi = sample_character(spectrum_.group(), n_);
    for (std::uint64_t x = 0; x < psi.size(); ++x) sum_[x] += c * psi[x];
  }
  ++n_;
  return true;
}

std::string format_double(double v) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, end);
}

std::string to_csv(std::span<const Complex> values) {
  std::string out = "index,re,im\n";
  for (std::size_t i = 0; i < values.size(); ++i) {
    out += std::to_string(i);
    out += ',';
    out += format_double(values[i].real());
    out += ',';
    out += format_double(values[i].imag());
    out += '\n';
  }
  return out;
}

namespace {

double parse_double(std::string_view token, std::size_t line_no) {
  while (!token.empty() && (token.front() == ' ' || token.front() == '\t')) token.remove_prefix(1);
  while (!token.empty() && (token.back() == ' ' || token.back() == '\t' || token.back() == '\r')) {
    token.remove_suffix(1);
  }
  double v = 0.0;
  const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (token.empty() || ec != std::errc() || end != token.data() + token.size()) {
    fail(ErrorCode::kParse, "line " + std::to_string(line_no) + ": bad number '" +
                                std::string(token) + "'");
  }
  return v;
}

}  // namespace

std::vector<Complex> complex_from_csv(std::string_view text) {
  std::vector<Complex> values;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (line_no == 1 && line.starts_with("index")) continue;

    std::string_view fields[3];
    std::size_t count = 0;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = line.find(',', start);
      if (count == 3) fail(ErrorCode::kParse, "line " + std::to_string(line_no) + ": expected 3 columns");
      fields[count++] = line.substr(start, comma == std::string_view::npos ? line.npos : comma - start);
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (count != 3) fail(ErrorCode::kParse, "line " + std::to_string(line_no) + ": expected 3 columns");
    const double index = parse_double(fields[0], line_no);
    if (index != static_cast<double>(values.size())) {
      fail(ErrorCode::kParse, "line " + std::to_string(line_no) + ": expected index " +
                                  std::to_string(values.size()));
    }
    values.emplace_back(parse_double(fields[1], line_no), parse_double(fields[2], line_no));
  }
  return values;
}

}  // namespace vilenkin
