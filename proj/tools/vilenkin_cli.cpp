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

// vilenkin: command-line driver over the libvilenkin C interface.
//
// Exit codes: 0 pass, 1 assertion failure, 2 configuration error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "vilenkin/vilenkin.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;

struct Options {
  std::string radices = "2,3";
  uint32_t depth = 8;
  double p = 0.5;
  std::string phi = "pow:0.5";
  uint64_t seed = 1;
  uint64_t trials = 100;
  uint64_t n_max = 0;
  double budget = 0.5;
  uint32_t max_terms = 0;
  uint64_t naive_cutoff = 4096;
  std::string out = "-";
  std::string format = "csv";
  std::string input = "-";
  bool check = false;
  bool inverse = false;
  bool sweep = false;
  bool break_atom = false;
};

bool read_all(const std::string& path, std::string& text) {
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    return true;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  text = buffer.str();
  return true;
}

bool write_all(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return static_cast<bool>(std::cout);
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
  return static_cast<bool>(out);
}

int emit(vk_status status, vk_report* report, const Options& o) {
  if (status != VK_OK) {
    std::cerr << "error: " << vk_last_error() << '\n';
    return kExitConfig;
  }
  for (size_t i = 0; i < vk_report_message_count(report); ++i) {
    std::cerr << vk_report_message(report, i) << '\n';
  }
  const bool as_json = o.format == "json";
  if (!write_all(o.out, as_json ? vk_report_summary(report) : vk_report_csv(report))) {
    std::cerr << "error: cannot write " << o.out << '\n';
    vk_report_destroy(report);
    return kExitConfig;
  }
  if (!as_json) std::cerr << vk_report_summary(report) << '\n';
  const bool passed = vk_report_passed(report) != 0;
  if (!passed) std::cerr << "FAILED\n";
  vk_report_destroy(report);
  return passed ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Vilenkin-Fourier analysis on bounded Vilenkin groups"};
  app.require_subcommand(1);
  Options o;

  auto add_group = [&o](CLI::App* cmd) {
    cmd->add_option("--m", o.radices, "Comma-separated radices, cycled to the depth")->capture_default_str();
    cmd->add_option("--depth", o.depth, "Truncation depth N")->capture_default_str();
    cmd->add_option("--out", o.out, "Output path ('-' for stdout)")->capture_default_str();
    cmd->add_option("--format", o.format, "csv (table on --out, summary on stderr) or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
  };
  auto add_experiment = [&o](CLI::App* cmd) {
    cmd->add_option("--p", o.p, "Exponent p in (0, 1)")->capture_default_str();
    cmd->add_option("--seed", o.seed, "Random seed")->capture_default_str();
    cmd->add_option("--trials", o.trials, "Number of random trials")->capture_default_str();
  };

  CLI::App* table = app.add_subcommand("table", "Print the scale table M_0..M_N");
  add_group(table);

  CLI::App* transform = app.add_subcommand("transform", "Vilenkin-Fourier transform of an index,re,im CSV");
  add_group(transform);
  transform->add_option("--input", o.input, "Input CSV ('-' for stdin)")->capture_default_str();
  transform->add_flag("--check", o.check, "Compare against the naive transform (or the round trip)");
  transform->add_flag("--inverse", o.inverse, "Synthesize samples from coefficients");

  CLI::App* atoms = app.add_subcommand("atom-suite", "Tail integral and nullity checks on random p-atoms");
  add_group(atoms);
  add_experiment(atoms);
  atoms->add_flag("--break-atom", o.break_atom, "Replace trial 0 by a non-atom (negative control)");

  CLI::App* bound = app.add_subcommand("bound", "Coefficient bound ratios over single-atom martingales");
  add_group(bound);
  add_experiment(bound);
  bound->add_option("--nmax", o.n_max, "Largest coefficient index examined (0 = M_N)");
  bound->add_flag("--sweep", o.sweep, "Repeat for every depth from 4 to --depth");

  CLI::App* counter = app.add_subcommand("counterexample", "Build the sharpness martingale and check its spectrum");
  add_group(counter);
  counter->add_option("--p", o.p, "Exponent p in (0, 1)")->capture_default_str();
  counter->add_option("--phi", o.phi, "pow:<gamma> | log | const:<c> | file:<path>")->capture_default_str();
  counter->add_option("--budget", o.budget, "Geometric budget ratio r in (0, 1)")->capture_default_str();
  counter->add_option("--terms", o.max_terms, "Maximum number of blocks (0 = as many as fit)");

  CLI::App* bench = app.add_subcommand("bench", "Time the fast transform against the naive one");
  add_group(bench);
  bench->add_option("--seed", o.seed, "Random seed")->capture_default_str();
  bench->add_option("--naive-cutoff", o.naive_cutoff, "Skip the naive transform above this size")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  vk_config config;
  vk_config_init(&config);
  config.radices = o.radices.c_str();
  config.depth = o.depth;
  config.p = o.p;
  config.phi = o.phi.c_str();
  config.seed = o.seed;
  config.trials = o.trials;
  config.n_max = o.n_max;
  config.budget = o.budget;
  config.max_terms = o.max_terms;
  config.check = o.check;
  config.inverse = o.inverse;
  config.sweep = o.sweep;
  config.break_atom = o.break_atom;
  config.naive_cutoff = o.naive_cutoff;

  vk_report* report = nullptr;
  vk_status status = VK_ERROR_INVALID_ARGUMENT;
  if (table->parsed()) {
    status = vk_run_table(&config, &report);
  } else if (transform->parsed()) {
    std::string text;
    if (!read_all(o.input, text)) {
      std::cerr << "error: cannot read " << o.input << '\n';
      return kExitConfig;
    }
    status = vk_run_transform(&config, text.c_str(), &report);
  } else if (atoms->parsed()) {
    status = vk_run_atom_suite(&config, &report);
  } else if (bound->parsed()) {
    status = vk_run_bound(&config, &report);
  } else if (counter->parsed()) {
    status = vk_run_counterexample(&config, &report);
  } else if (bench->parsed()) {
    status = vk_run_bench(&config, &report);
  }
  return emit(status, report, o);
}
