// Copyright 2026 The cutgap Authors
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

#ifndef CUTGAP_CUTGAP_H_
#define CUTGAP_CUTGAP_H_

/* C interface to the cut-LP toolkit. Structured values travel as JSON text
 * in the formats documented in README.md. Every function returning
 * cutgap_status leaves a message for cutgap_last_error() on failure; strings
 * returned through char** belong to the caller and are released with
 * cutgap_string_free(). */

#include <stdint.h>

#if defined(CUTGAP_BUILDING_LIBRARY)
#define CUTGAP_API __attribute__((visibility("default")))
#else
#define CUTGAP_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  CUTGAP_OK = 0,
  CUTGAP_INVALID_ARGUMENT = 1,
  CUTGAP_PARSE_ERROR = 2,
  CUTGAP_DOMAIN_ERROR = 3,
  CUTGAP_BOUND_EXCEEDED = 4,
  CUTGAP_INTERNAL_ERROR = 5
} cutgap_status;

typedef struct cutgap_graph cutgap_graph;
typedef struct cutgap_solution cutgap_solution;

CUTGAP_API const char* cutgap_version(void);
/* Message of the last failure on this thread; empty after a success. */
CUTGAP_API const char* cutgap_last_error(void);
CUTGAP_API const char* cutgap_status_name(cutgap_status status);
CUTGAP_API void cutgap_string_free(char* text);

/* Graphs: JSON or edge-list text. */
CUTGAP_API cutgap_status cutgap_graph_parse(const char* text, cutgap_graph** out);
CUTGAP_API cutgap_status cutgap_graph_read(const char* path, cutgap_graph** out);
CUTGAP_API cutgap_status cutgap_graph_to_json(const cutgap_graph* g, char** out);
CUTGAP_API cutgap_status cutgap_graph_to_dot(const cutgap_graph* g, char** out);
CUTGAP_API int cutgap_graph_vertex_count(const cutgap_graph* g);
CUTGAP_API int cutgap_graph_edge_count(const cutgap_graph* g);
CUTGAP_API void cutgap_graph_free(cutgap_graph* g);

/* Undirected fractional solutions. */
CUTGAP_API cutgap_status cutgap_solution_parse(const char* json, cutgap_solution** out);
CUTGAP_API cutgap_status cutgap_solution_read(const char* path, cutgap_solution** out);
CUTGAP_API cutgap_status cutgap_solution_to_json(const cutgap_solution* x, char** out);
CUTGAP_API int cutgap_solution_vertex_count(const cutgap_solution* x);
/* Value of pair {u, v} as "p/q" text. */
CUTGAP_API cutgap_status cutgap_solution_get(const cutgap_solution* x, int u, int v, char** out);
CUTGAP_API void cutgap_solution_free(cutgap_solution* x);

/* Cut LP over g with k-edge-connectivity cuts; bounded adds degree
 * equalities. Writes the optimum report; *solution may be NULL. */
CUTGAP_API cutgap_status cutgap_solve(const cutgap_graph* g, int k, int bounded,
                                      cutgap_solution** solution, char** report);
/* Feasibility report with the most violated cut or degree, if any. */
CUTGAP_API cutgap_status cutgap_separate(const cutgap_solution* x, int k, int bounded,
                                         char** report);
CUTGAP_API cutgap_status cutgap_construct_fibonacci(int t, cutgap_solution** out);
/* Extremeness certificate or refutation for the degree-bounded LP. */
CUTGAP_API cutgap_status cutgap_verify_extreme(const cutgap_solution* x, int k,
                                               char** certificate);
CUTGAP_API cutgap_status cutgap_stats(const cutgap_solution* x, char** out);
/* filters_json may be NULL; keys min_denominator, min_max_degree,
 * require_three_connected, max_n. */
CUTGAP_API cutgap_status cutgap_enumerate(int n, const char* filters_json, char** out);
CUTGAP_API cutgap_status cutgap_domination_gap(const cutgap_solution* x, char** out);
/* Symmetric directed lift, or with face_extreme a vertex of the face of
 * directed solutions projecting onto x. */
CUTGAP_API cutgap_status cutgap_lift(const cutgap_solution* x, int face_extreme, uint64_t seed,
                                     char** out);

CUTGAP_API cutgap_status cutgap_reduce_pcot_to_kecss(const char* instance_json, int k,
                                                     int simple, char** graph_json);
CUTGAP_API cutgap_status cutgap_reduce_setcover_to_pcot(const char* setcover_json,
                                                        char** instance_json);
CUTGAP_API cutgap_status cutgap_pcot_opt(const char* instance_json, char** out);
CUTGAP_API cutgap_status cutgap_setcover_opt(const char* setcover_json, int* out);

CUTGAP_API cutgap_status cutgap_convert_ecsm_to_ecss(const cutgap_graph* g,
                                                     const char* multiset_json, char** out);
CUTGAP_API cutgap_status cutgap_split(const cutgap_graph* g, int a, int b, char** out);
CUTGAP_API cutgap_status cutgap_split_witness(const cutgap_graph* g, int a, int b, char** out);
CUTGAP_API cutgap_status cutgap_split_bound(int c, int k, int t, int n, char** out);

/* options_json may be NULL; keys max_gap_t, max_fibonacci_t,
 * max_directed_t, enumeration_max_n. */
CUTGAP_API cutgap_status cutgap_report(const char* options_json, char** out);

#ifdef __cplusplus
}
#endif

#endif /* CUTGAP_CUTGAP_H_ */
