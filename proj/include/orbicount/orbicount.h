/*
 * Copyright (c) 2026 The orbicount Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef ORBICOUNT_ORBICOUNT_H
#define ORBICOUNT_ORBICOUNT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define OC_API __declspec(dllexport)
#else
#define OC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum oc_status {
  OC_OK = 0,
  OC_ERR_PARSE = 1,
  OC_ERR_INVALID = 2,
  OC_ERR_BUDGET = 3,
  OC_ERR_IO = 4,
  OC_ERR_UNKNOWN_ID = 5,
  OC_ERR_INTERNAL = 6,
  OC_ERR_NULL_ARGUMENT = 7
} oc_status;

typedef struct oc_presentation oc_presentation;
typedef struct oc_group oc_group;
typedef struct oc_budget oc_budget;

/* Message of the last failing call on this thread; never NULL. */
OC_API const char *oc_last_error(void);
OC_API const char *oc_status_name(oc_status status);
OC_API const char *oc_version(void);
/* Frees any string returned through a char ** out-parameter. */
OC_API void oc_string_free(char *s);

/* Budgets: keys group_order_cap, table_cap, convolution_cap, hom_nodes, lowindex_nodes, orbit_cap,
   centralizer_cap, wreath_cap. A NULL budget argument means the defaults. */
OC_API oc_status oc_budget_new(oc_budget **out);
OC_API oc_status oc_budget_set(oc_budget *budget, const char *key, uint64_t value);
OC_API oc_status oc_budget_get(const oc_budget *budget, const char *key, uint64_t *value);
OC_API void oc_budget_free(oc_budget *budget);

/* Presentation spec: "family:size", "<a,b | ...>" text, or JSON. */
OC_API oc_status oc_presentation_parse(const char *spec, oc_presentation **out);
OC_API oc_status oc_presentation_render(const oc_presentation *p, char **out);
OC_API oc_status oc_presentation_generator_count(const oc_presentation *p, int *out);
OC_API oc_status oc_presentation_product_with_z(const oc_presentation *p, oc_presentation **out);
OC_API void oc_presentation_free(oc_presentation *p);

/* Group spec: "trivial", "Zn:k", "Sn:k", "D4", "Q8", "V4", "wreath(spec,n)" or permutation JSON. */
OC_API oc_status oc_group_from_spec(const char *spec, const oc_budget *budget, oc_group **out);
OC_API oc_status oc_group_wreath(const oc_group *base, int n, const oc_budget *budget, oc_group **out);
OC_API oc_status oc_group_order(const oc_group *g, uint64_t *out);
OC_API oc_status oc_group_class_count(const oc_group *g, int *out);
OC_API void oc_group_free(oc_group *g);

/* |Hom(p, g)| as a decimal string. */
OC_API oc_status oc_hom_count(const oc_presentation *p, const oc_group *g, const oc_budget *budget, char **out);

/* JSON request/response entry points. */
OC_API oc_status oc_census(const char *request_json, const oc_budget *budget, char **out_json);
OC_API oc_status oc_homcount(const char *request_json, const oc_budget *budget, char **out_json);
OC_API oc_status oc_bundles(const char *request_json, const oc_budget *budget, char **out_json);
OC_API oc_status oc_verify(const char *request_json, const oc_budget *budget, char **out_json);
OC_API oc_status oc_characters(const char *request_json, const oc_budget *budget, char **out_json);
OC_API oc_status oc_identity_ids(char **out_json);

#ifdef __cplusplus
}
#endif

#endif
