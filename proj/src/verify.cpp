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

#include "vilenkin/verify.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>

#include "vilenkin/error.hpp"

namespace vilenkin {

namespace {

void check_open_exponent(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    fail(ErrorCode::kInvalidArgument, "p = " + format_double(p) + " must lie in (0, 1)");
  }
}

double parse_number(std::string_view token, const std::string& what) {
  while (!token.empty() && (token.front() == ' ' || token.front() == '\t')) token.remove_prefix(1);
  while (!token.empty() && (token.back() == ' ' || token.back() == '\t' || token.back() == '\r')) {
    token.remove_suffix(1);
  }
  double v = 0.0;
  const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (token.empty() || ec != std::errc() || end != token.data() + token.size()) {
    fail(ErrorCode::kParse, "bad number '" + std::string(token) + "' in " + what);
  }
  return v;
}

// First coordinate where x and the interval base differ, i.e. the shell of
// x - base. Empty when x lies in the interval.
std::optional<std::size_t> relative_shell(const Group& g, const Interval& I, std::uint64_t x) {
  for (std::size_t k = 0; k < I.rank; ++k) {
    if (g.digit(x, k) != I.base.digits[k]) return k;
  }
  return std::nullopt;
}

double weight_exponent(double p) { return 1.0 / p - 1.0; }

}  // namespace

// --- Phi ---------------------------------------------------------------------

Phi Phi::power(double gamma) {
  if (!(gamma >= 0.0) || !std::isfinite(gamma)) {
    fail(ErrorCode::kInvalidArgument,
         "pow exponent " + format_double(gamma) + " must be finite and >= 0 (Phi nondecreasing)");
  }
  return Phi(PhiFamily::kPower, gamma);
}

Phi Phi::log() { return Phi(PhiFamily::kLog, 0.0); }

Phi Phi::constant(double c) {
  if (!(c > 0.0) || !std::isfinite(c)) {
    fail(ErrorCode::kInvalidArgument, "const value " + format_double(c) + " must be positive");
  }
  return Phi(PhiFamily::kConstant, c);
}

Phi Phi::tabulated(std::vector<std::pair<double, double>> knots) {
  if (knots.empty()) fail(ErrorCode::kInvalidArgument, "tabulated Phi needs at least one row");
  for (std::size_t i = 0; i < knots.size(); ++i) {
    if (knots[i].second < 0.0) {
      fail(ErrorCode::kInvalidArgument, "tabulated Phi is negative at n = " + format_double(knots[i].first));
    }
    if (i > 0 && !(knots[i].first > knots[i - 1].first)) {
      fail(ErrorCode::kInvalidArgument, "tabulated Phi arguments must be strictly increasing");
    }
    if (i > 0 && knots[i].second < knots[i - 1].second) {
      fail(ErrorCode::kInvalidArgument,
           "tabulated Phi decreases at n = " + format_double(knots[i].first));
    }
  }
  Phi phi(PhiFamily::kTabulated, 0.0);
  phi.knots_ = std::move(knots);
  return phi;
}

Phi Phi::tabulated_from_csv(std::string_view text) {
  std::vector<std::pair<double, double>> knots;
  std::size_t pos = 0;
  bool first = true;
  while (pos < text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (first && line.starts_with("n")) {
      first = false;
      continue;
    }
    first = false;
    const std::size_t comma = line.find(',');
    if (comma == std::string_view::npos) fail(ErrorCode::kParse, "tabulated Phi row '" + std::string(line) + "' needs n,phi");
    knots.emplace_back(parse_number(line.substr(0, comma), "tabulated Phi"),
                       parse_number(line.substr(comma + 1), "tabulated Phi"));
  }
  return tabulated(std::move(knots));
}

Phi Phi::parse(std::string_view descriptor) {
  const std::size_t colon = descriptor.find(':');
  const std::string_view family = descriptor.substr(0, colon);
  const std::string_view param =
      colon == std::string_view::npos ? std::string_view{} : descriptor.substr(colon + 1);
  const std::string what = "Phi descriptor '" + std::string(descriptor) + "'";
  if (family == "pow") {
    if (param.empty()) fail(ErrorCode::kParse, what + " needs an exponent (pow:<gamma>)");
    return power(parse_number(param, what));
  }
  if (family == "log") {
    if (!param.empty()) fail(ErrorCode::kParse, what + ": log takes no parameter");
    return log();
  }
  if (family == "const") {
    return constant(param.empty() ? 1.0 : parse_number(param, what));
  }
  if (family == "file") {
    if (param.empty()) fail(ErrorCode::kParse, what + " needs a path (file:<path>)");
    std::ifstream in{std::string(param)};
    if (!in) fail(ErrorCode::kIo, "cannot open " + std::string(param));
    std::stringstream buffer;
    buffer << in.rdbuf();
    return tabulated_from_csv(buffer.str());
  }
  fail(ErrorCode::kParse, what + ": unknown family (use pow, log, const or file)");
}

double Phi::operator()(double n) const {
  switch (family_) {
    case PhiFamily::kPower:
      return std::pow(n, parameter_);
    case PhiFamily::kLog:
      return std::log1p(n);
    case PhiFamily::kConstant:
      return parameter_;
    case PhiFamily::kTabulated: {
      auto it = std::upper_bound(knots_.begin(), knots_.end(), n,
                                 [](double v, const auto& knot) { return v < knot.first; });
      if (it == knots_.begin()) return knots_.front().second;
      return std::prev(it)->second;
    }
  }
  return 0.0;
}

std::string Phi::describe() const {
  switch (family_) {
    case PhiFamily::kPower:
      return "pow:" + format_double(parameter_);
    case PhiFamily::kLog:
      return "log";
    case PhiFamily::kConstant:
      return "const:" + format_double(parameter_);
    case PhiFamily::kTabulated:
      return "tabulated(" + std::to_string(knots_.size()) + " rows)";
  }
  return "";
}

Certification Phi::certify(double p) const {
  switch (family_) {
    case PhiFamily::kPower:
      return parameter_ < weight_exponent(p) ? Certification::kCertified : Certification::kRejected;
    case PhiFamily::kLog:
    case PhiFamily::kConstant:
      return Certification::kCertified;
    case PhiFamily::kTabulated:
      return Certification::kUncertified;
  }
  return Certification::kRejected;
}

std::string Phi::certification_note(double p) const {
  switch (certify(p)) {
    case Certification::kCertified:
      return describe() + " grows slower than n^{1/p-1} = n^" + format_double(weight_exponent(p));
    case Certification::kUncertified:
      return describe() +
             " is monotone but its growth against n^{1/p-1} is not certified; results are "
             "indicative only";
    case Certification::kRejected:
      return describe() + " does not satisfy limsup n^{1/p-1}/Phi(n) = infinity for p = " +
             format_double(p) + " (need gamma < " + format_double(weight_exponent(p)) + ")";
  }
  return "";
}

// --- maximal operator and atom estimates -------------------------------------

GridFunction maximal_operator_sp(const GridFunction& f, double p, std::uint64_t n_max) {
  check_open_exponent(p);
  const Spectrum s = forward_fast(f);
  PartialSumStream stream(s, n_max);
  GridFunction out(f.group_ptr());
  const double a = weight_exponent(p);
  while (stream.advance()) {
    const std::uint64_t n = stream.index();
    // S_n = S_{n-1} and the weight only shrinks: nothing new to see.
    if (n > 1 && s[n - 1] == Complex{0.0, 0.0}) continue;
    const double w = std::pow(static_cast<double>(n + 1), -a);
    const GridFunction& sum = stream.current();
    for (std::uint64_t x = 0; x < sum.size(); ++x) {
      out[x] = std::max(out[x].real(), std::abs(sum[x]) * w);
    }
  }
  return out;
}

double tail_bound(const Group& g, std::size_t rank, double p) {
  double sum = 0.0;
  for (std::size_t s = 0; s < rank; ++s) sum += std::pow(static_cast<double>(g.scale(s)), p - 1.0);
  return std::pow(static_cast<double>(g.lambda()), 2.0 * p) * sum;
}

double atom_tail_integral(const Atom& a, double p) {
  const Group& g = a.values.group();
  const GridFunction op = maximal_operator_sp(a.values, p, g.order());
  double acc = 0.0;
  for (std::uint64_t x = 0; x < g.order(); ++x) {
    if (!interval_contains(g, a.interval, x)) acc += std::pow(op[x].real(), p);
  }
  return acc / static_cast<double>(g.order());
}

bool atom_nullity_check(const Atom& a) {
  const Group& g = a.values.group();
  double sup = 0.0;
  for (const Complex& v : a.values.values()) sup = std::max(sup, std::abs(v));
  const double tolerance = 1e-10 * sup;
  PartialSumStream stream(forward_fast(a.values), g.scale(a.interval.rank));
  while (stream.advance()) {
    for (const Complex& v : stream.current().values()) {
      if (std::abs(v) > tolerance) return false;
    }
  }
  return true;
}

double atom_shell_ratio(const Atom& a, double p) {
  const Group& g = a.values.group();
  const GridFunction op = maximal_operator_sp(a.values, p, g.order());
  const double lambda_sq = static_cast<double>(g.lambda()) * g.lambda();
  double worst = 0.0;
  for (std::uint64_t x = 0; x < g.order(); ++x) {
    const auto s = relative_shell(g, a.interval, x);
    if (!s) continue;
    worst = std::max(worst, op[x].real() / (lambda_sq * static_cast<double>(g.scale(*s))));
  }
  return worst;
}

double kernel_average_ratio(const Group& g, std::size_t rank, std::uint64_t n) {
  if (rank > g.depth()) {
    fail(ErrorCode::kOutOfRange, "rank " + std::to_string(rank) + " above depth " +
                                     std::to_string(g.depth()));
  }
  const std::vector<Complex> kernel = sample_dirichlet(g, n);
  const std::uint64_t cell = g.scale(rank);
  const double lambda = static_cast<double>(g.lambda());
  double worst = 0.0;
  for (std::uint64_t x = 0; x < g.order(); ++x) {
    const auto s = shell_of(g, x);
    if (!s || *s >= rank) continue;
    double acc = 0.0;
    for (std::uint64_t t = 0; t < g.order(); t += cell) acc += std::abs(kernel[g.sub_ranks(x, t)]);
    acc /= static_cast<double>(g.order());
    const double rhs = lambda * static_cast<double>(g.scale(*s)) / static_cast<double>(cell);
    worst = std::max(worst, acc / rhs);
  }
  return worst;
}

// --- coefficient bound -------------------------------------------------------

BoundEntry coefficient_bound_ratio(const Martingale& f, double p, std::uint64_t n_begin,
                                   std::uint64_t n_end) {
  check_open_exponent(p);
  const Group& g = f.group();
  n_end = std::min<std::uint64_t>(n_end, g.order());
  if (n_begin >= n_end) fail(ErrorCode::kInvalidArgument, "empty coefficient range");
  BoundEntry e;
  e.hp_norm = hp_quasinorm(f, p);
  if (!(e.hp_norm > 0.0)) fail(ErrorCode::kInvalidArgument, "coefficient bound of the zero martingale");
  const Spectrum s = forward_fast(f.finest());
  const double a = weight_exponent(p);
  for (std::uint64_t n = n_begin; n < n_end; ++n) {
    const double c = std::abs(s[n]);
    const double r = c / (std::pow(static_cast<double>(n + 1), a) * e.hp_norm);
    if (r > e.ratio) {
      e.ratio = r;
      e.n_star = n;
    }
    if (n >= 1) {
      const double plain = c / (std::pow(static_cast<double>(n), a) * e.hp_norm);
      if (plain > e.ratio_plain) {
        e.ratio_plain = plain;
        e.n_star_plain = n;
      }
    }
  }
  return e;
}

CoefficientIdentity coefficient_identity_check(const GridFunction& f) {
  const Group& g = f.group();
  const Spectrum s = forward_fast(f);
  std::vector<double> sup(g.order(), 0.0);
  {
    PartialSumStream stream(s, g.order());
    while (stream.advance()) {
      const GridFunction& sum = stream.current();
      for (std::uint64_t x = 0; x < g.order(); ++x) sup[x] = std::max(sup[x], std::abs(sum[x]));
    }
  }
  CoefficientIdentity out;
  PartialSumStream stream(s, g.order());
  GridFunction previous = stream.current();
  while (stream.advance()) {
    const std::uint64_t n = stream.index() - 1;
    const std::vector<Complex> psi = sample_character(g, n);
    const GridFunction& sum = stream.current();
    const double magnitude = std::abs(s[n]);
    for (std::uint64_t x = 0; x < g.order(); ++x) {
      const Complex recovered = (sum[x] - previous[x]) / psi[x];
      out.max_deviation = std::max(out.max_deviation, std::abs(recovered - s[n]));
      if (magnitude > 2.0 * sup[x] * (1.0 + 1e-12) + 1e-300) out.dominated = false;
    }
    previous = sum;
  }
  return out;
}

// --- sharpness construction --------------------------------------------------

AlphaSelection choose_alphas(const Phi& phi, double p, const Group& g, double budget_ratio,
                             std::size_t max_terms) {
  check_open_exponent(p);
  if (!(budget_ratio > 0.0 && budget_ratio < 1.0)) {
    fail(ErrorCode::kInvalidArgument, "budget ratio " + format_double(budget_ratio) + " must lie in (0, 1)");
  }
  if (phi.certify(p) == Certification::kRejected) {
    fail(ErrorCode::kInvalidArgument, phi.certification_note(p));
  }
  const double a = weight_exponent(p);
  AlphaSelection out;
  out.budget_ratio = budget_ratio;
  double previous = std::numeric_limits<double>::infinity();
  std::size_t alpha = 1;
  for (std::size_t k = 0; max_terms == 0 || k < max_terms; ++k) {
    const double cap = std::pow(budget_ratio, static_cast<double>(k));
    bool found = false;
    for (; alpha + 1 <= g.depth(); ++alpha) {
      const double m = static_cast<double>(g.scale(alpha));
      const double value = phi(m);
      if (!(value > 0.0)) continue;
      const double term = std::pow(value / std::pow(m, a), p / 2.0);
      if (term <= cap && term < previous) {
        out.alphas.push_back(alpha);
        out.terms.push_back(term);
        previous = term;
        ++alpha;
        found = true;
        break;
      }
    }
    if (!found) break;
  }
  if (out.alphas.empty()) {
    fail(ErrorCode::kInvalidArgument, "no admissible scale index below depth " +
                                          std::to_string(g.depth()) + " for " + phi.describe());
  }
  out.reached_requested = max_terms != 0 && out.alphas.size() == max_terms;
  return out;
}

CounterexampleSpec make_counterexample_spec(const Group& g, const Phi& phi, double p,
                                            std::vector<std::size_t> alphas) {
  check_open_exponent(p);
  if (alphas.empty()) fail(ErrorCode::kInvalidArgument, "counterexample needs at least one block");
  for (std::size_t k = 0; k < alphas.size(); ++k) {
    if (k > 0 && alphas[k] <= alphas[k - 1]) {
      fail(ErrorCode::kInvalidArgument, "scale indices must be strictly increasing");
    }
    if (alphas[k] + 1 > g.depth()) {
      fail(ErrorCode::kOutOfRange, "block alpha = " + std::to_string(alphas[k]) +
                                       " needs depth at least " + std::to_string(alphas[k] + 1));
    }
  }
  CounterexampleSpec cs{p, phi, std::move(alphas), static_cast<double>(g.lambda()), {}};
  const double a = weight_exponent(p);
  for (std::size_t alpha : cs.alphas) {
    const double m = static_cast<double>(g.scale(alpha));
    cs.lambdas.push_back(std::sqrt(phi(m) / std::pow(m, a)));
  }
  return cs;
}

AtomicDecomposition counterexample_decomposition(const GroupPtr& group, const CounterexampleSpec& cs) {
  const Group& g = *group;
  AtomicDecomposition d;
  d.p = cs.p;
  const double a = weight_exponent(cs.p);
  for (std::size_t k = 0; k < cs.alphas.size(); ++k) {
    const std::size_t alpha = cs.alphas[k];
    if (alpha + 1 > g.depth()) {
      fail(ErrorCode::kOutOfRange, "block alpha = " + std::to_string(alpha) + " beyond depth");
    }
    const double coarse = static_cast<double>(g.scale(alpha));
    const double fine = static_cast<double>(g.scale(alpha + 1));
    const double c = std::pow(coarse, a) / cs.big_m;
    Atom atom{cs.p, Interval{alpha, g.zero()}, GridFunction(group)};
    // D_{M_{alpha+1}} - D_{M_alpha}: M_{alpha+1} - M_alpha on I_{alpha+1},
    // -M_alpha on I_alpha \ I_{alpha+1}, zero elsewhere.
    for (std::uint64_t x = 0; x < g.order(); ++x) {
      const double kernel_fine = x % g.scale(alpha + 1) == 0 ? fine : 0.0;
      const double kernel_coarse = x % g.scale(alpha) == 0 ? coarse : 0.0;
      atom.values[x] = c * (kernel_fine - kernel_coarse);
    }
    d.atoms.push_back(std::move(atom));
    d.weights.push_back(cs.lambdas[k]);
  }
  return d;
}

Martingale build_counterexample(const GroupPtr& g, const CounterexampleSpec& cs) {
  return synthesize(counterexample_decomposition(g, cs));
}

double block_coefficient_closed(const Group& g, const CounterexampleSpec& cs, std::size_t k) {
  const double m = static_cast<double>(g.scale(cs.alphas.at(k)));
  return std::pow(m, weight_exponent(cs.p) / 2.0) * std::sqrt(cs.phi(m)) / cs.big_m;
}

CoefficientTable counterexample_coefficients(const Martingale& f, const CounterexampleSpec& cs) {
  const Group& g = f.group();
  const Spectrum s = forward_fast(f.finest());
  CoefficientTable table;
  std::vector<bool> in_block(g.order(), false);
  for (std::size_t k = 0; k < cs.alphas.size(); ++k) {
    const std::size_t alpha = cs.alphas[k];
    const std::uint64_t lo = g.scale(alpha);
    const std::uint64_t hi = g.scale(alpha + 1);
    const double closed = block_coefficient_closed(g, cs, k);
    for (std::uint64_t j = lo; j < hi; ++j) {
      in_block[j] = true;
      table.max_relative_error = std::max(table.max_relative_error, std::abs(s[j] - closed) / closed);
    }
    BlockRow row;
    row.k = k;
    row.alpha = alpha;
    row.m_alpha = lo;
    row.coeff_numeric = s[lo].real();
    row.coeff_closed = closed;
    row.phi_value = cs.phi(static_cast<double>(lo));
    row.rho = row.coeff_numeric / row.phi_value;
    table.rows.push_back(row);
  }
  for (std::uint64_t j = 0; j < g.order(); ++j) {
    if (!in_block[j]) table.max_off_block = std::max(table.max_off_block, std::abs(s[j]));
  }
  return table;
}

std::vector<double> divergence_ratios(const CoefficientTable& table) {
  std::vector<double> rho;
  for (const BlockRow& row : table.rows) rho.push_back(row.rho);
  return rho;
}

std::vector<double> divergence_ratios_closed(const Group& g, const CounterexampleSpec& cs) {
  std::vector<double> rho;
  const double a = weight_exponent(cs.p);
  for (std::size_t alpha : cs.alphas) {
    const double m = static_cast<double>(g.scale(alpha));
    rho.push_back(std::sqrt(std::pow(m, a) / cs.phi(m)) / cs.big_m);
  }
  return rho;
}

bool strictly_increasing(const std::vector<double>& values) {
  for (std::size_t k = 1; k < values.size(); ++k) {
    if (!(values[k] > values[k - 1])) return false;
  }
  return true;
}

// --- auxiliary probes --------------------------------------------------------

double hardy_inequality_lhs(const Spectrum& s, double p) {
  double lhs = 0.0;
  for (std::uint64_t k = 1; k < s.size(); ++k) {
    const double c = std::abs(s[k]);
    if (c == 0.0) continue;
    lhs += std::pow(c, p) / std::pow(static_cast<double>(k), 2.0 - p);
  }
  return lhs;
}

HardyInequality hardy_inequality_check(const Martingale& f, double p) {
  if (!(p > 0.0 && p <= 1.0)) {
    fail(ErrorCode::kInvalidArgument, "Hardy inequality probe needs 0 < p <= 1, got " + format_double(p));
  }
  HardyInequality h;
  h.lhs = hardy_inequality_lhs(forward_fast(f.finest()), p);
  h.rhs = std::pow(hp_quasinorm(f, p), p);
  if (!(h.rhs > 0.0)) fail(ErrorCode::kInvalidArgument, "Hardy inequality probe of the zero martingale");
  h.ratio = h.lhs / h.rhs;
  return h;
}

std::vector<double> riemann_lebesgue_probe(const GridFunction& f, std::uint64_t window) {
  if (window < 1) fail(ErrorCode::kInvalidArgument, "window must be at least 1");
  const Spectrum s = forward_fast(f);
  std::vector<double> tails((s.size() + window - 1) / window, 0.0);
  for (std::uint64_t n = 0; n < s.size(); ++n) {
    tails[n / window] = std::max(tails[n / window], std::abs(s[n]));
  }
  return tails;
}

// --- trial populations -------------------------------------------------------

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  std::uint32_t words[2];
  seq.generate(words, words + 2);
  return (std::uint64_t{words[0]} << 32) | words[1];
}

Atom random_atom_of_rank(const GroupPtr& group, std::size_t rank, double p, std::uint64_t seed,
                         std::uint64_t trial) {
  const Group& g = *group;
  if (rank > g.depth()) {
    fail(ErrorCode::kOutOfRange, "atom rank " + std::to_string(rank) + " above depth " +
                                     std::to_string(g.depth()));
  }
  std::mt19937_64 rng(trial_seed(seed, trial));
  Point base = g.zero();
  for (std::size_t k = 0; k < rank; ++k) {
    base.digits[k] = static_cast<std::uint32_t>(rng() % g.radix(k));
  }
  return make_atom(group, Interval{rank, std::move(base)}, p, rng());
}

Atom random_trial_atom(const GroupPtr& group, double p, std::uint64_t seed, std::uint64_t trial) {
  // Rank N would be a single point, where the only atom is zero.
  const std::uint64_t ranks = std::max<std::uint64_t>(1, group->depth() - 1);
  const std::size_t rank = 1 + static_cast<std::size_t>(trial_seed(seed ^ 0x9e3779b97f4a7c15ull, trial) % ranks);
  return random_atom_of_rank(group, rank, p, seed, trial);
}

}  // namespace vilenkin
