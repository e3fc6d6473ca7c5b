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

#include "vilenkin/vilenkin.h"

#include <cstring>
#include <memory>
#include <new>
#include <string>

#include "vilenkin/commands.hpp"
#include "vilenkin/error.hpp"
#include "vilenkin/group.hpp"
#include "vilenkin/transform.hpp"

struct vk_group {
  vilenkin::GroupPtr group;
};

struct vk_report {
  vilenkin::Report report;
};

namespace {

thread_local std::string last_error;

vk_status set_error(vk_status status, const std::string& message) {
  last_error = message;
  return status;
}

vk_status to_status(vilenkin::ErrorCode code) {
  switch (code) {
    case vilenkin::ErrorCode::kInvalidArgument:
      return VK_ERROR_INVALID_ARGUMENT;
    case vilenkin::ErrorCode::kOutOfRange:
      return VK_ERROR_OUT_OF_RANGE;
    case vilenkin::ErrorCode::kOverflow:
      return VK_ERROR_OVERFLOW;
    case vilenkin::ErrorCode::kParse:
      return VK_ERROR_PARSE;
    case vilenkin::ErrorCode::kIo:
      return VK_ERROR_IO;
  }
  return VK_ERROR_INTERNAL;
}

// Runs body, translating exceptions into status codes.
template <class Body>
vk_status guarded(Body&& body) {
  try {
    body();
    return VK_OK;
  } catch (const vilenkin::Error& e) {
    return set_error(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(VK_ERROR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(VK_ERROR_INTERNAL, e.what());
  } catch (...) {
    return set_error(VK_ERROR_INTERNAL, "unknown error");
  }
}

vilenkin::RunConfig to_run_config(const vk_config* c) {
  if (!c) vilenkin::fail(vilenkin::ErrorCode::kInvalidArgument, "null config");
  vilenkin::RunConfig r;
  if (c->radices) r.radices = c->radices;
  r.depth = c->depth;
  r.p = c->p;
  if (c->phi) r.phi = c->phi;
  r.seed = c->seed;
  r.trials = c->trials;
  r.n_max = c->n_max;
  r.budget = c->budget;
  r.max_terms = c->max_terms;
  r.check = c->check != 0;
  r.inverse = c->inverse != 0;
  r.sweep = c->sweep != 0;
  r.break_atom = c->break_atom != 0;
  r.naive_cutoff = c->naive_cutoff;
  return r;
}

template <class Command>
vk_status run(const vk_config* config, vk_report** out, Command&& command) {
  if (!out) return set_error(VK_ERROR_INVALID_ARGUMENT, "null output pointer");
  *out = nullptr;
  return guarded([&] {
    auto report = std::make_unique<vk_report>();
    report->report = command(to_run_config(config));
    *out = report.release();
  });
}

vk_status check_group(const vk_group* group) {
  if (!group || !group->group) return set_error(VK_ERROR_INVALID_ARGUMENT, "null group");
  return VK_OK;
}

vk_status check_buffers(const vk_group* group, const double* in, const double* out, uint64_t count) {
  if (vk_status s = check_group(group); s != VK_OK) return s;
  if (!in || !out) return set_error(VK_ERROR_INVALID_ARGUMENT, "null buffer");
  if (count != group->group->order()) {
    return set_error(VK_ERROR_INVALID_ARGUMENT, "buffer holds " + std::to_string(count) +
                                                    " values, M_N = " +
                                                    std::to_string(group->group->order()));
  }
  return VK_OK;
}

std::vector<vilenkin::Complex> load(const double* in, uint64_t count) {
  std::vector<vilenkin::Complex> v(count);
  for (uint64_t i = 0; i < count; ++i) v[i] = {in[2 * i], in[2 * i + 1]};
  return v;
}

void store(std::span<const vilenkin::Complex> v, double* out) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[2 * i] = v[i].real();
    out[2 * i + 1] = v[i].imag();
  }
}

}  // namespace

extern "C" {

const char* vk_version(void) { return "1.0.0"; }

const char* vk_last_error(void) { return last_error.c_str(); }

void vk_config_init(vk_config* config) {
  if (!config) return;
  const vilenkin::RunConfig d;
  std::memset(config, 0, sizeof(*config));
  config->radices = "2,3";
  config->depth = static_cast<uint32_t>(d.depth);
  config->p = d.p;
  config->phi = "pow:0.5";
  config->seed = d.seed;
  config->trials = d.trials;
  config->n_max = d.n_max;
  config->budget = d.budget;
  config->max_terms = static_cast<uint32_t>(d.max_terms);
  config->naive_cutoff = d.naive_cutoff;
}

vk_status vk_group_create(const char* radices, uint32_t depth, vk_group** out) {
  if (!out) return set_error(VK_ERROR_INVALID_ARGUMENT, "null output pointer");
  *out = nullptr;
  if (!radices) return set_error(VK_ERROR_INVALID_ARGUMENT, "null radix list");
  return guarded([&] { *out = new vk_group{vilenkin::Group::parse(radices, depth)}; });
}

void vk_group_destroy(vk_group* group) { delete group; }

uint32_t vk_group_depth(const vk_group* group) {
  return group ? static_cast<uint32_t>(group->group->depth()) : 0;
}

uint64_t vk_group_order(const vk_group* group) { return group ? group->group->order() : 0; }

uint32_t vk_group_lambda(const vk_group* group) { return group ? group->group->lambda() : 0; }

vk_status vk_group_radix(const vk_group* group, uint32_t k, uint32_t* out) {
  if (vk_status s = check_group(group); s != VK_OK) return s;
  if (!out) return set_error(VK_ERROR_INVALID_ARGUMENT, "null output pointer");
  if (k >= group->group->depth()) return set_error(VK_ERROR_OUT_OF_RANGE, "radix index beyond depth");
  *out = group->group->radix(k);
  return VK_OK;
}

vk_status vk_group_scale(const vk_group* group, uint32_t k, uint64_t* out) {
  if (vk_status s = check_group(group); s != VK_OK) return s;
  if (!out) return set_error(VK_ERROR_INVALID_ARGUMENT, "null output pointer");
  if (k > group->group->depth()) return set_error(VK_ERROR_OUT_OF_RANGE, "scale index beyond depth");
  *out = group->group->scale(k);
  return VK_OK;
}

vk_status vk_forward(const vk_group* group, const double* in, double* out, uint64_t count,
                     vk_method method) {
  if (vk_status s = check_buffers(group, in, out, count); s != VK_OK) return s;
  return guarded([&] {
    const vilenkin::GridFunction f(group->group, load(in, count));
    const vilenkin::Spectrum s =
        method == VK_METHOD_NAIVE ? vilenkin::forward_naive(f) : vilenkin::forward_fast(f);
    store(s.values(), out);
  });
}

vk_status vk_inverse(const vk_group* group, const double* in, double* out, uint64_t count) {
  if (vk_status s = check_buffers(group, in, out, count); s != VK_OK) return s;
  return guarded([&] {
    const vilenkin::Spectrum s(group->group, load(in, count));
    store(vilenkin::inverse(s).values(), out);
  });
}

vk_status vk_run_table(const vk_config* config, vk_report** out) {
  return run(config, out, [](const vilenkin::RunConfig& c) { return vilenkin::cmd_table(c); });
}

vk_status vk_run_transform(const vk_config* config, const char* input_csv, vk_report** out) {
  if (!input_csv) return set_error(VK_ERROR_INVALID_ARGUMENT, "null input");
  return run(config, out,
             [input_csv](const vilenkin::RunConfig& c) { return vilenkin::cmd_transform(c, input_csv); });
}

vk_status vk_run_atom_suite(const vk_config* config, vk_report** out) {
  return run(config, out, [](const vilenkin::RunConfig& c) { return vilenkin::cmd_atom_suite(c); });
}

vk_status vk_run_bound(const vk_config* config, vk_report** out) {
  return run(config, out, [](const vilenkin::RunConfig& c) { return vilenkin::cmd_bound(c); });
}

vk_status vk_run_counterexample(const vk_config* config, vk_report** out) {
  return run(config, out, [](const vilenkin::RunConfig& c) { return vilenkin::cmd_counterexample(c); });
}

vk_status vk_run_bench(const vk_config* config, vk_report** out) {
  return run(config, out, [](const vilenkin::RunConfig& c) { return vilenkin::cmd_bench(c); });
}

int vk_report_passed(const vk_report* report) { return report && report->report.passed ? 1 : 0; }

const char* vk_report_csv(const vk_report* report) {
  return report ? report->report.csv.c_str() : "";
}

const char* vk_report_summary(const vk_report* report) {
  return report ? report->report.summary.c_str() : "";
}

size_t vk_report_message_count(const vk_report* report) {
  return report ? report->report.messages.size() : 0;
}

const char* vk_report_message(const vk_report* report, size_t index) {
  if (!report || index >= report->report.messages.size()) return nullptr;
  return report->report.messages[index].c_str();
}

void vk_report_destroy(vk_report* report) { delete report; }

}  // extern "C"
