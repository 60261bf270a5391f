/** Copyright 2026 The gossipnet Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * 	http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to the gossipnet solver: information-sharing network
 * formation games with k-defection stability.
 *
 * Objects are opaque handles released with their *_free function. Strings
 * returned through char** are heap-allocated UTF-8 JSON and must be
 * released with gn_string_free. Every call returns a gn_status; on an
 * error status, gn_last_error() describes the failure for the calling
 * thread.
 */
#ifndef GOSSIPNET_GOSSIPNET_H
#define GOSSIPNET_GOSSIPNET_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(GOSSIPNET_BUILDING)
#define GN_API __attribute__((visibility("default")))
#else
#define GN_API
#endif

typedef struct gn_instance gn_instance;
typedef struct gn_network gn_network;
typedef struct gn_options gn_options;

typedef enum gn_status {
  GN_OK = 0,
  GN_UNSTABLE = 1,          /* verification found an improving defection */
  GN_ERR_USAGE = 2,         /* bad argument or unknown name */
  GN_ERR_ORACLE_BOUND = 3,  /* exhaustive search refused: input too large */
  GN_NONEXISTENT = 4,       /* no stable network exists */
  GN_ERR_PARSE = 5,
  GN_ERR_INVALID = 6,
  GN_ERR_OVERFLOW = 7,
  GN_ERR_NONCONFORMING = 8, /* algorithm needs symmetric {-inf, 1} utilities */
  GN_ERR_NOT_IMPROVING = 9, /* scripted move does not improve a participant */
  GN_ERR_NOT_OPTIMAL = 10,  /* supplied optimum was beaten during repair */
  GN_ERR_INTERNAL = 11
} gn_status;

GN_API const char* gn_version(void);
GN_API const char* gn_last_error(void);
GN_API const char* gn_status_name(gn_status status);
GN_API void gn_string_free(char* s);

/* Oracle ceilings; a NULL gn_options* means defaults (14, 48, 40). */
GN_API gn_options* gn_options_new(void);
GN_API void gn_options_free(gn_options* o);
GN_API void gn_options_set_oracle_bound(gn_options* o, int agents);
GN_API void gn_options_set_mis_bound(gn_options* o, int vertices);
GN_API void gn_options_set_coloring_bound(gn_options* o, int vertices);

/* Instance JSON, or a bundle {"instance", "network"?, "schedule"?}. */
GN_API gn_status gn_instance_parse(const char* json, gn_instance** out);
GN_API gn_status gn_instance_serialize(const gn_instance* inst, char** out);
GN_API int gn_instance_size(const gn_instance* inst);
GN_API void gn_instance_free(gn_instance* inst);

/* Network JSON in edge-list or blocks form. */
GN_API gn_status gn_network_parse(const char* json, gn_network** out);
GN_API gn_status gn_network_serialize(const gn_network* net, char** out);
GN_API int gn_network_size(const gn_network* net);
GN_API void gn_network_free(gn_network* net);

/* Splits a bundle. *net and *schedule_json are set to NULL when absent;
 * either out pointer may itself be NULL when not wanted. */
GN_API gn_status gn_bundle_split(const char* json, gn_instance** inst, gn_network** net,
                                 char** schedule_json);
/* Joins an instance with an optional network and schedule. */
GN_API gn_status gn_bundle_join(const gn_instance* inst, const gn_network* net,
                                const char* schedule_json, char** out);

/* Builds a named family. params_json holds the family parameters, e.g.
 * {"n": 9} or {"rows": 3, "cols": 4}; NULL means none. The result is a
 * bundle carrying the family's network and schedule when it has them. */
GN_API gn_status gn_generate(const char* family, const char* params_json, char** bundle_json);
/* Newline-separated family names. */
GN_API gn_status gn_families(char** out);

/* alg: "peel", "dyn2", "pot3", "pot4" or "repair3" (3-stable repair of the
 * oracle's welfare optimum). */
GN_API gn_status gn_solve(const gn_instance* inst, const char* alg, const gn_options* o,
                          gn_network** out);

/* GN_OK when k-stable, GN_UNSTABLE with the witness defection in
 * *witness_json (NULL when stable). */
GN_API gn_status gn_verify(const gn_instance* inst, const gn_network* net, int k,
                           char** witness_json);

/* All k-stable clique partitions as a JSON array; GN_NONEXISTENT when empty. */
GN_API gn_status gn_enumerate(const gn_instance* inst, int k, const gn_options* o,
                              char** partitions_json);

/* metric: "utility" or "components". GN_NONEXISTENT when no k-stable
 * network exists; the report is still written. */
GN_API gn_status gn_welfare(const gn_instance* inst, int k, const char* metric,
                            const gn_options* o, char** report_json);

/* from: "3col", "3ctpg" or "scbg"; to: "3ctpg", "scbg" or "matching".
 * The result holds every stage from `from` to `to`. With solve != 0 the
 * stage verdicts (3-colorability, stable coloring, stable network) are
 * added where within the oracle bounds. */
GN_API gn_status gn_reduce(const char* input_json, const char* from, const char* to, int solve,
                           const gn_options* o, char** artifacts_json);

/* Best-response run from `start`. schedule_json is a JSON array of moves
 * {"participants": [...], "attached": [[...], ...]}, or NULL for automatic
 * steps. Writes one JSON line per state. */
GN_API gn_status gn_trace(const gn_instance* inst, const gn_network* start,
                          const char* schedule_json, int max_steps, char** jsonl);

GN_API int gn_suite_size(void);
/* id 0 runs every check. format: "markdown" or "json". GN_UNSTABLE when a
 * check fails. */
GN_API gn_status gn_suite_run(int id, const char* format, char** report);

#ifdef __cplusplus
}
#endif

#endif /* GOSSIPNET_GOSSIPNET_H */
