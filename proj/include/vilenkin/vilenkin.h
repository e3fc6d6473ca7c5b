/*
 * Copyright 2026 The Vilenkin Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to libvilenkin.
 *
 * Every call returns a vk_status; on failure vk_last_error() describes the
 * problem (thread-local, valid until the next failing call on the thread).
 * Objects are opaque handles released with the matching *_destroy function.
 * Complex arrays are interleaved (re, im) doubles in rank order.
 */

#ifndef VILENKIN_H
#define VILENKIN_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(VILENKIN_BUILDING)
#    define VK_API __declspec(dllexport)
#  else
#    define VK_API __declspec(dllimport)
#  endif
#else
#  define VK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum vk_status {
  VK_OK = 0,
  VK_ERROR_INVALID_ARGUMENT = 1,
  VK_ERROR_OUT_OF_RANGE = 2,
  VK_ERROR_OVERFLOW = 3,
  VK_ERROR_PARSE = 4,
  VK_ERROR_IO = 5,
  VK_ERROR_INTERNAL = 99
} vk_status;

typedef enum vk_method {
  VK_METHOD_FAST = 0,
  VK_METHOD_NAIVE = 1
} vk_method;

typedef struct vk_group vk_group;
typedef struct vk_report vk_report;

/* Experiment configuration. Initialize with vk_config_init. */
typedef struct vk_config {
  const char* radices; /* comma-separated, cycled out to depth */
  uint32_t depth;
  double p;
  const char* phi;     /* "pow:<g>", "log", "const:<c>", "file:<path>" */
  uint64_t seed;
  uint64_t trials;
  uint64_t n_max;      /* 0 = M_N */
  double budget;
  uint32_t max_terms;  /* 0 = as many blocks as fit */
  int check;
  int inverse;
  int sweep;
  int break_atom;
  uint64_t naive_cutoff;
} vk_config;

VK_API const char* vk_version(void);
VK_API const char* vk_last_error(void);
VK_API void vk_config_init(vk_config* config);

/* Groups */
VK_API vk_status vk_group_create(const char* radices, uint32_t depth, vk_group** out);
VK_API void vk_group_destroy(vk_group* group);
VK_API uint32_t vk_group_depth(const vk_group* group);
VK_API uint64_t vk_group_order(const vk_group* group);
VK_API uint32_t vk_group_lambda(const vk_group* group);
VK_API vk_status vk_group_radix(const vk_group* group, uint32_t k, uint32_t* out);
VK_API vk_status vk_group_scale(const vk_group* group, uint32_t k, uint64_t* out);

/* Transforms; count is the number of complex values and must equal M_N. */
VK_API vk_status vk_forward(const vk_group* group, const double* in, double* out, uint64_t count,
                            vk_method method);
VK_API vk_status vk_inverse(const vk_group* group, const double* in, double* out, uint64_t count);

/* Commands */
VK_API vk_status vk_run_table(const vk_config* config, vk_report** out);
VK_API vk_status vk_run_transform(const vk_config* config, const char* input_csv, vk_report** out);
VK_API vk_status vk_run_atom_suite(const vk_config* config, vk_report** out);
VK_API vk_status vk_run_bound(const vk_config* config, vk_report** out);
VK_API vk_status vk_run_counterexample(const vk_config* config, vk_report** out);
VK_API vk_status vk_run_bench(const vk_config* config, vk_report** out);

/* Reports */
VK_API int vk_report_passed(const vk_report* report);
VK_API const char* vk_report_csv(const vk_report* report);
VK_API const char* vk_report_summary(const vk_report* report);
VK_API size_t vk_report_message_count(const vk_report* report);
VK_API const char* vk_report_message(const vk_report* report, size_t index);
VK_API void vk_report_destroy(vk_report* report);

#ifdef __cplusplus
}
#endif

#endif /* VILENKIN_H */
