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

#include <json.hpp>

#include "vilenkin/commands.hpp"
#include "vilenkin/error.hpp"
#include "vilenkin/transform.hpp"

using namespace vilenkin;
using json = nlohmann::json;

namespace {

RunConfig small() {
  RunConfig c;
  c.depth = 4;
  c.trials = 10;
  return c;
}

}  // namespace

TEST_CASE("table command") {
  const Report r = cmd_table(small());
  CHECK(r.csv == "k,m_k,M_k\n0,2,1\n1,3,2\n2,2,6\n3,3,12\n4,,36\n");
  const json s = json::parse(r.summary);
  CHECK(s["order"] == 36);
  CHECK(s["lambda"] == 3);
  CHECK(r.passed);
}

TEST_CASE("transform command") {
  RunConfig c = small();
  c.depth = 2;
  std::string input = "index,re,im\n";
  for (int i = 0; i < 6; ++i) input += std::to_string(i) + (i == 0 ? ",6,0\n" : ",0,0\n");
  c.check = true;
  const Report fwd = cmd_transform(c, input);
  CHECK(fwd.passed);
  const std::vector<Complex> s = complex_from_csv(fwd.csv);
  REQUIRE(s.size() == 6);
  for (const Complex& v : s) CHECK(std::abs(v - 1.0) < 1e-15);

  c.inverse = true;
  const Report inv = cmd_transform(c, fwd.csv);
  CHECK(inv.passed);
  const std::vector<Complex> back = complex_from_csv(inv.csv);
  CHECK(std::abs(back[0] - 6.0) < 1e-12);

  CHECK_THROWS_AS(cmd_transform(c, "0,1,0\n"), Error);
}

TEST_CASE("atom suite command") {
  const Report r = cmd_atom_suite(small());
  CHECK(r.passed);
  CHECK(r.messages.empty());
  CHECK(json::parse(r.summary)["failures"] == 0);

  RunConfig broken = small();
  broken.break_atom = true;
  const Report b = cmd_atom_suite(broken);
  CHECK_FALSE(b.passed);
  CHECK_FALSE(b.messages.empty());

  RunConfig bad = small();
  bad.p = 1.0;
  CHECK_THROWS_AS(cmd_atom_suite(bad), Error);
  bad = small();
  bad.trials = 0;
  CHECK_THROWS_AS(cmd_atom_suite(bad), Error);
}

TEST_CASE("bound command") {
  RunConfig c = small();
  c.sweep = true;
  c.depth = 5;
  const Report r = cmd_bound(c);
  CHECK(r.passed);
  const json s = json::parse(r.summary);
  CHECK(s["control_ratio"].get<double>() == doctest::Approx(1.0));
  CHECK(s["stability"].size() == 2);
  CHECK(s["stability_factor"].get<double>() >= 1.0);
}

TEST_CASE("counterexample command") {
  RunConfig c;
  c.depth = 12;
  c.budget = 0.9;
  const Report r = cmd_counterexample(c);
  CHECK(r.passed);
  const json s = json::parse(r.summary);
  CHECK(s["blocks"] == 11);
  CHECK(s["monotone"] == true);
  CHECK(s["certification"] == "certified");

  c.phi = "pow:2";
  CHECK_THROWS_AS(cmd_counterexample(c), Error);
  c.phi = "pow:0.5";
  c.budget = 1.5;
  CHECK_THROWS_AS(cmd_counterexample(c), Error);
}

TEST_CASE("bench command") {
  RunConfig c = small();
  c.naive_cutoff = 12;
  const Report r = cmd_bench(c);
  CHECK(r.passed);
  const json s = json::parse(r.summary);
  REQUIRE(s["rows"].size() == 4);
  CHECK(s["rows"][2].contains("speedup"));
  CHECK_FALSE(s["rows"][3].contains("speedup"));
}

TEST_CASE("reports are deterministic") {
  RunConfig c = small();
  c.depth = 5;
  c.seed = 99;
  CHECK(cmd_atom_suite(c).csv == cmd_atom_suite(c).csv);
  CHECK(cmd_bound(c).summary == cmd_bound(c).summary);
  RunConfig other = c;
  other.seed = 100;
  CHECK(cmd_atom_suite(c).csv != cmd_atom_suite(other).csv);
}
