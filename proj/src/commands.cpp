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

#include "vilenkin/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <json.hpp>
#include <random>

#include "vilenkin/error.hpp"
#include "vilenkin/verify.hpp"

namespace vilenkin {

namespace {

using json = nlohmann::ordered_json;

void require_open_p(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    fail(ErrorCode::kInvalidArgument, "--p " + format_double(p) + " must lie in (0, 1)");
  }
}

void require_trials(const RunConfig& config) {
  if (config.trials == 0) fail(ErrorCode::kInvalidArgument, "--trials must be at least 1");
}

std::string row(std::initializer_list<std::string> cells) {
  std::string out;
  for (const std::string& cell : cells) {
    if (!out.empty()) out += ',';
    out += cell;
  }
  out += '\n';
  return out;
}

std::string num(double v) { return format_double(v); }
std::string num(std::uint64_t v) { return std::to_string(v); }

GridFunction random_function(const GroupPtr& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  GridFunction f(g);
  constexpr double kScale = 1.0 / 9007199254740992.0;  // 2^-53
  for (Complex& v : f.values()) {
    const double re = static_cast<double>(rng() >> 11) * kScale * 2.0 - 1.0;
    const double im = static_cast<double>(rng() >> 11) * kScale * 2.0 - 1.0;
    v = {re, im};
  }
  return f;
}

double max_abs_difference(std::span<const Complex> a, std::span<const Complex> b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

}  // namespace

Report cmd_table(const RunConfig& config) {
  const GroupPtr g = Group::parse(config.radices, config.depth);
  Report report;
  report.csv = "k,m_k,M_k\n";
  json scales = json::array();
  for (std::size_t k = 0; k <= g->depth(); ++k) {
    report.csv += row({num(std::uint64_t{k}), k < g->depth() ? num(std::uint64_t{g->radix(k)}) : "",
                       num(g->scale(k))});
    scales.push_back(g->scale(k));
  }
  json summary;
  summary["depth"] = g->depth();
  summary["radices"] = std::vector<std::uint32_t>(g->radices().begin(), g->radices().end());
  summary["M"] = scales;
  summary["lambda"] = g->lambda();
  summary["order"] = g->order();
  report.summary = summary.dump(2);
  return report;
}

Report cmd_transform(const RunConfig& config, std::string_view input_csv) {
  const GroupPtr g = Group::parse(config.radices, config.depth);
  std::vector<Complex> input = complex_from_csv(input_csv);
  if (input.size() != g->order()) {
    fail(ErrorCode::kInvalidArgument, "input has " + std::to_string(input.size()) +
                                          " rows, the group has M_N = " + std::to_string(g->order()) +
                                          " points");
  }
  Report report;
  json summary;
  summary["direction"] = config.inverse ? "inverse" : "forward";
  summary["order"] = g->order();
  if (config.inverse) {
    const Spectrum s(g, std::move(input));
    const GridFunction f = inverse(s);
    report.csv = to_csv(f.values());
    if (config.check) {
      const double deviation = max_abs_difference(forward_fast(f).values(), s.values());
      summary["round_trip_deviation"] = deviation;
      report.passed = deviation < 1e-9;
    }
  } else {
    const GridFunction f(g, std::move(input));
    const Spectrum s = forward_fast(f);
    report.csv = to_csv(s.values());
    if (config.check) {
      const double deviation = max_abs_difference(forward_naive(f).values(), s.values());
      summary["max_deviation"] = deviation;
      report.passed = deviation < 1e-9;
    }
  }
  if (!report.passed) report.messages.push_back("transform check exceeded 1e-9");
  summary["passed"] = report.passed;
  report.summary = summary.dump(2);
  return report;
}

Report cmd_atom_suite(const RunConfig& config) {
  require_open_p(config.p);
  require_trials(config);
  const GroupPtr g = Group::parse(config.radices, config.depth);
  Report report;
  report.csv = "trial,p,N_a,tail_integral,spec_bound\n";
  double max_tail = 0.0;
  double max_hp = 0.0;
  std::uint64_t failures = 0;
  for (std::uint64_t trial = 0; trial < config.trials; ++trial) {
    Atom atom = random_trial_atom(g, config.p, config.seed, trial);
    if (config.break_atom && trial == 0) {
      // Negative control: a nonzero constant on the interval is not an atom.
      const double bound = atom_bound(*g, atom);
      for (std::uint64_t x = 0; x < g->order(); ++x) {
        atom.values[x] = interval_contains(*g, atom.interval, x) ? bound : 0.0;
      }
    }
    const std::size_t rank = atom.interval.rank;
    const double tail = atom_tail_integral(atom, config.p);
    const double bound = tail_bound(*g, rank, config.p);
    const Martingale m(atom.values);
    const double hp = hp_quasinorm(m, config.p);
    const GridFunction star = maximal(m);
    bool localized = true;
    for (std::uint64_t x = 0; x < g->order(); ++x) {
      if (!interval_contains(*g, atom.interval, x) && star[x].real() != 0.0) localized = false;
    }

    std::vector<std::string> problems;
    if (const AtomDiagnostics d = validate_atom(atom); !d) problems.push_back(d.describe());
    if (!atom_nullity_check(atom)) problems.push_back("S_n a does not vanish for n <= M_{N_a}");
    if (!(tail <= bound)) problems.push_back("tail " + num(tail) + " exceeds " + num(bound));
    if (!(hp <= 1.0 + 1e-10)) problems.push_back("H_p norm " + num(hp) + " exceeds 1");
    if (!localized) problems.push_back("maximal function nonzero off the support");
    for (const std::string& problem : problems) {
      report.messages.push_back("trial " + std::to_string(trial) + ": " + problem);
    }
    failures += problems.empty() ? 0 : 1;

    max_tail = std::max(max_tail, tail);
    max_hp = std::max(max_hp, hp);
    report.csv += row({num(trial), num(config.p), num(std::uint64_t{rank}), num(tail), num(bound)});
  }
  report.passed = failures == 0;
  json summary;
  summary["trials"] = config.trials;
  summary["p"] = config.p;
  summary["N"] = g->depth();
  summary["lambda"] = g->lambda();
  summary["max_tail"] = max_tail;
  summary["tail_bound"] = tail_bound(*g, g->depth(), config.p);
  summary["max_hp_norm"] = max_hp;
  summary["failures"] = failures;
  summary["passed"] = report.passed;
  report.summary = summary.dump(2);
  return report;
}

Report cmd_bound(const RunConfig& config) {
  require_open_p(config.p);
  require_trials(config);
  std::vector<std::size_t> depths;
  if (config.sweep) {
    for (std::size_t n = 4; n <= std::max<std::size_t>(4, config.depth); ++n) depths.push_back(n);
  } else {
    depths.push_back(config.depth);
  }
  // Validate every group before computing anything.
  std::vector<GroupPtr> groups;
  for (std::size_t n : depths) groups.push_back(Group::parse(config.radices, n));

  Report report;
  report.csv = "trial,p,N,n_star,ratio\n";
  json stability = json::array();
  double overall = 0.0;
  double control = 0.0;
  double smallest = std::numeric_limits<double>::infinity();
  for (const GroupPtr& g : groups) {
    const std::uint64_t n_end = config.n_max == 0 ? g->order() : std::min(config.n_max, g->order());
    const Martingale constant(GridFunction(g, std::vector<Complex>(g->order(), 1.0)));
    const BoundEntry c = coefficient_bound_ratio(constant, config.p, 0, n_end);
    control = c.ratio;
    report.csv += row({"0", num(config.p), num(std::uint64_t{g->depth()}), num(c.n_star), num(c.ratio)});

    double worst = 0.0;
    for (std::uint64_t trial = 1; trial <= config.trials; ++trial) {
      const Atom atom = random_trial_atom(g, config.p, config.seed, trial);
      const BoundEntry e = coefficient_bound_ratio(Martingale(atom.values), config.p, 0, n_end);
      if (!std::isfinite(e.ratio)) {
        report.passed = false;
        report.messages.push_back("trial " + std::to_string(trial) + ": ratio is not finite");
      }
      worst = std::max(worst, e.ratio);
      report.csv += row({num(trial), num(config.p), num(std::uint64_t{g->depth()}), num(e.n_star), num(e.ratio)});
    }
    overall = std::max(overall, worst);
    smallest = std::min(smallest, worst);
    stability.push_back({{"N", g->depth()}, {"max_ratio", worst}});
  }
  json summary;
  summary["p"] = config.p;
  summary["trials"] = config.trials;
  summary["max_ratio"] = overall;
  summary["empirical_c_p"] = overall;
  summary["control_ratio"] = control;
  if (config.sweep) {
    summary["stability"] = stability;
    summary["stability_factor"] = overall / smallest;
  }
  summary["passed"] = report.passed;
  report.summary = summary.dump(2);
  return report;
}

Report cmd_counterexample(const RunConfig& config) {
  require_open_p(config.p);
  const Phi phi = Phi::parse(config.phi);
  const Certification cert = phi.certify(config.p);
  if (cert == Certification::kRejected) fail(ErrorCode::kInvalidArgument, phi.certification_note(config.p));
  if (!(config.budget > 0.0 && config.budget < 1.0)) {
    fail(ErrorCode::kInvalidArgument, "--budget " + num(config.budget) + " must lie in (0, 1)");
  }
  const GroupPtr g = Group::parse(config.radices, config.depth);

  Report report;
  if (cert == Certification::kUncertified) report.messages.push_back("warning: " + phi.certification_note(config.p));
  const AlphaSelection selection = choose_alphas(phi, config.p, *g, config.budget, config.max_terms);
  if (config.max_terms != 0 && !selection.reached_requested) {
    report.messages.push_back("warning: only " + std::to_string(selection.alphas.size()) +
                              " blocks fit below depth " + std::to_string(g->depth()));
  }
  const CounterexampleSpec cs = make_counterexample_spec(*g, phi, config.p, selection.alphas);
  const Martingale f = build_counterexample(g, cs);
  const CoefficientTable table = counterexample_coefficients(f, cs);
  const std::vector<double> rho = divergence_ratios(table);
  const bool monotone = strictly_increasing(rho);

  report.csv = "k,alpha_k,M_alpha,coeff_numeric,coeff_closed,phi_value,rho_k\n";
  for (const BlockRow& r : table.rows) {
    report.csv += row({num(std::uint64_t{r.k}), num(std::uint64_t{r.alpha}), num(r.m_alpha),
                       num(r.coeff_numeric), num(r.coeff_closed), num(r.phi_value), num(r.rho)});
  }
  if (table.max_relative_error > 1e-9) {
    report.passed = false;
    report.messages.push_back("closed-form mismatch " + num(table.max_relative_error) + " > 1e-9");
  }
  if (table.max_off_block >= 1e-12) {
    report.passed = false;
    report.messages.push_back("off-block coefficient " + num(table.max_off_block) + " >= 1e-12");
  }
  if (!monotone) {
    report.passed = false;
    report.messages.push_back("rho_k is not strictly increasing");
  }

  double series = 0.0;
  for (double t : selection.terms) series += t;
  json summary;
  summary["p"] = config.p;
  summary["phi"] = phi.describe();
  summary["certification"] = cert == Certification::kCertified ? "certified" : "uncertified";
  summary["budget"] = config.budget;
  summary["blocks"] = table.rows.size();
  summary["alphas"] = selection.alphas;
  summary["series_sum"] = series;
  summary["series_bound"] = 1.0 / (1.0 - config.budget);
  summary["max_relative_error"] = table.max_relative_error;
  summary["max_off_block"] = table.max_off_block;
  summary["monotone"] = monotone;
  summary["passed"] = report.passed;
  report.summary = summary.dump(2);
  return report;
}

Report cmd_bench(const RunConfig& config) {
  const GroupPtr full = Group::parse(config.radices, config.depth);
  using clock = std::chrono::steady_clock;
  auto seconds = [](clock::duration d) { return std::chrono::duration<double>(d).count(); };

  Report report;
  report.csv = "M,depth,fast_seconds,naive_seconds,speedup\n";
  json rows = json::array();
  for (std::size_t depth = 1; depth <= full->depth(); ++depth) {
    const GroupPtr g = Group::create(std::vector<std::uint32_t>(full->radices().begin(),
                                                               full->radices().begin() + depth));
    const GridFunction f = random_function(g, trial_seed(config.seed, depth));

    // Repeat the fast transform until the measurement spans ~20 ms.
    std::uint64_t reps = 0;
    const auto start = clock::now();
    double checksum = 0.0;
    do {
      checksum += forward_fast(f)[0].real();
      ++reps;
    } while (clock::now() - start < std::chrono::milliseconds(20));
    const double fast = seconds(clock::now() - start) / static_cast<double>(reps);

    std::string naive_cell;
    std::string speedup_cell;
    json entry{{"M", g->order()}, {"depth", depth}, {"fast_seconds", fast}};
    if (g->order() <= config.naive_cutoff) {
      const auto naive_start = clock::now();
      checksum += forward_naive(f)[0].real();
      const double naive = seconds(clock::now() - naive_start);
      naive_cell = num(naive);
      speedup_cell = num(naive / fast);
      entry["naive_seconds"] = naive;
      entry["speedup"] = naive / fast;
    }
    if (!std::isfinite(checksum)) report.messages.push_back("non-finite transform output");
    report.csv += row({num(g->order()), num(std::uint64_t{depth}), num(fast), naive_cell, speedup_cell});
    rows.push_back(entry);
  }
  json summary;
  summary["radices"] = config.radices;
  summary["rows"] = rows;
  report.summary = summary.dump(2);
  return report;
}

}  // namespace vilenkin
