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

// Experiment drivers behind the command-line tool. Each command validates its
// configuration up front (throwing vilenkin::Error), then produces a Report:
// a CSV table, a JSON summary and a pass/fail verdict.

#ifndef VILENKIN_COMMANDS_HPP
#define VILENKIN_COMMANDS_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace vilenkin {

struct RunConfig {
  std::string radices = "2,3";  // cycled out to depth
  std::size_t depth = 8;
  double p = 0.5;
  std::string phi = "pow:0.5";
  std::uint64_t seed = 1;
  std::uint64_t trials = 100;
  std::uint64_t n_max = 0;  // 0 means M_N
  double budget = 0.5;
  std::size_t max_terms = 0;  // 0 means as many blocks as fit
  bool check = false;
  bool inverse = false;
  bool sweep = false;
  bool break_atom = false;
  std::uint64_t naive_cutoff = 4096;
};

struct Report {
  std::string csv;
  std::string summary;  // JSON
  bool passed = true;
  std::vector<std::string> messages;  // warnings and failures, one per line
};

/// k,m_k,M_k for k = 0..N.
Report cmd_table(const RunConfig& config);
/// Forward (or --inverse) transform of "index,re,im" input; --check compares
/// against the naive transform (or the round trip for --inverse).
Report cmd_transform(const RunConfig& config, std::string_view input_csv);
/// trial,p,N_a,tail_integral,spec_bound for random p-atoms.
Report cmd_atom_suite(const RunConfig& config);
/// trial,p,N,n_star,ratio; trial 0 is the constant-function control.
Report cmd_bound(const RunConfig& config);
/// k,alpha_k,M_alpha,coeff_numeric,coeff_closed,phi_value,rho_k.
Report cmd_counterexample(const RunConfig& config);
/// M,depth,fast_seconds,naive_seconds,speedup for depths 1..N.
Report cmd_bench(const RunConfig& config);

}  // namespace vilenkin

#endif  // VILENKIN_COMMANDS_HPP
