// Copyright 2026 The nsleak Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/*
 * C interface to the nsleak library.
 *
 * Objects are opaque handles created by *_parse / *_load / computing
 * functions and released with the matching *_free. Every function returns an
 * nsleak_status; on failure nsleak_last_error() describes the problem (the
 * message is per thread and valid until the next failing call on it).
 *
 * Variable arguments name one variable ("X") or a comma-separated group
 * ("X1,X2") that acts as a single composite variable.
 *
 * Exact values come back in nsleak_value: `exact` is a heap string of the form
 * "log2(p/q)" (logarithmic quantities) or "p/q" (rationals); `approx` is its
 * double rendering. Release with nsleak_value_clear(). Other strings returned
 * through char** are JSON documents or symbols, released with
 * nsleak_string_free().
 */

#ifndef NSLEAK_NSLEAK_H_
#define NSLEAK_NSLEAK_H_

#include <stddef.h>
#include <stdint.h>

#if defined(NSLEAK_BUILDING_LIBRARY)
#define NSLEAK_API __attribute__((visibility("default")))
#else
#define NSLEAK_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nsleak_status {
  NSLEAK_OK = 0,
  NSLEAK_ERR_INPUT = 2,
  NSLEAK_ERR_INCOMPATIBLE_EVIDENCE = 3,
  NSLEAK_ERR_SEARCH_CAP = 4,
  NSLEAK_ERR_INTERNAL = 5
} nsleak_status;

typedef struct nsleak_relation nsleak_relation;
typedef struct nsleak_channel nsleak_channel;
typedef struct nsleak_attribute nsleak_attribute;
typedef struct nsleak_dist nsleak_dist;
typedef struct nsleak_schannel nsleak_schannel;

typedef struct nsleak_value {
  char* exact;    /* NULL when no exact form exists (see identifiability_bound) */
  double approx;
  int open_bound; /* min_epsilon only: zero infimum that no budget attains */
} nsleak_value;

NSLEAK_API const char* nsleak_version(void);
NSLEAK_API const char* nsleak_last_error(void);
NSLEAK_API void nsleak_string_free(char* s);
NSLEAK_API void nsleak_value_clear(nsleak_value* v);
/* Exact three-way comparison of two "log2(p/q)" strings: *cmp is -1, 0 or 1. */
NSLEAK_API nsleak_status nsleak_value_compare(const char* a, const char* b, int* cmp);

/* ---- relations ---------------------------------------------------------- */

NSLEAK_API nsleak_status nsleak_relation_parse(const char* json, nsleak_relation** out);
NSLEAK_API nsleak_status nsleak_relation_load(const char* path, nsleak_relation** out);
NSLEAK_API nsleak_status nsleak_relation_to_json(const nsleak_relation* rel, char** out);
NSLEAK_API void nsleak_relation_free(nsleak_relation* rel);

NSLEAK_API nsleak_status nsleak_relation_info(const nsleak_relation* rel, size_t* variables,
                                              size_t* tuples, size_t* duplicates_dropped);
/* Borrowed pointer, valid while rel lives. */
NSLEAK_API nsleak_status nsleak_relation_variable(const nsleak_relation* rel, size_t index,
                                                  const char** name);
NSLEAK_API nsleak_status nsleak_marginal(const nsleak_relation* rel, const char* vars,
                                         char** tuples_json);
/* given_json: {"Y": "y1", ...}. Unrealizable evidence fails with
 * NSLEAK_ERR_INCOMPATIBLE_EVIDENCE. */
NSLEAK_API nsleak_status nsleak_conditional(const nsleak_relation* rel, const char* target,
                                            const char* given_json, char** tuples_json);
NSLEAK_API nsleak_status nsleak_is_unrelated(const nsleak_relation* rel, const char* a,
                                             const char* b, int* out);
NSLEAK_API nsleak_status nsleak_is_markov(const nsleak_relation* rel, const char* a,
                                          const char* b, const char* c, int* out);
NSLEAK_API nsleak_status nsleak_relation_project(const nsleak_relation* rel, const char* vars,
                                                 nsleak_relation** out);

/* ---- channels ----------------------------------------------------------- */

NSLEAK_API nsleak_status nsleak_channel_parse(const char* json, nsleak_channel** out);
NSLEAK_API nsleak_status nsleak_channel_load(const char* path, nsleak_channel** out);
NSLEAK_API nsleak_status nsleak_channel_to_json(const nsleak_channel* ch, char** out);
NSLEAK_API void nsleak_channel_free(nsleak_channel* ch);
NSLEAK_API nsleak_status nsleak_channel_from_relation(const nsleak_relation* rel,
                                                      const char* source, const char* target,
                                                      nsleak_channel** out);
/* base: relation over one variable; channels cascade from it in order. */
NSLEAK_API nsleak_status nsleak_compose(const nsleak_relation* base,
                                        const nsleak_channel* const* channels, size_t count,
                                        nsleak_relation** out);

/* ---- attributes --------------------------------------------------------- */

NSLEAK_API nsleak_status nsleak_attribute_parse(const char* json, nsleak_attribute** out);
NSLEAK_API nsleak_status nsleak_attribute_load(const char* path, nsleak_attribute** out);
/* achieved may be NULL. */
NSLEAK_API nsleak_status nsleak_attribute_to_json(const nsleak_attribute* g,
                                                  const nsleak_value* achieved, char** out);
/* The "achieved_leakage" recorded in the file; *present = 0 when absent. */
NSLEAK_API nsleak_status nsleak_attribute_recorded(const nsleak_attribute* g, nsleak_value* out,
                                                   int* present);
NSLEAK_API void nsleak_attribute_free(nsleak_attribute* g);
NSLEAK_API nsleak_status nsleak_apply_attribute(const nsleak_relation* rel,
                                                const nsleak_attribute* g, const char* name,
                                                nsleak_relation** out);
NSLEAK_API nsleak_status nsleak_attribute_leakage(const nsleak_relation* rel,
                                                  const nsleak_attribute* g,
                                                  const char* observed, nsleak_value* out);

/* ---- non-stochastic measures -------------------------------------------- */

NSLEAK_API nsleak_status nsleak_h0(const nsleak_relation* rel, const char* vars,
                                   nsleak_value* out);
NSLEAK_API nsleak_status nsleak_h0_cond(const nsleak_relation* rel, const char* target,
                                        const char* given, nsleak_value* out);
NSLEAK_API nsleak_status nsleak_i0(const nsleak_relation* rel, const char* a, const char* b,
                                   nsleak_value* out);
/* witness (may be NULL): the minimizing observation, components joined by '|'. */
NSLEAK_API nsleak_status nsleak_leakage(const nsleak_relation* rel, const char* target,
                                        const char* observed, nsleak_value* out,
                                        char** witness);
NSLEAK_API nsleak_status nsleak_maximal_leakage(const nsleak_relation* rel, const char* x,
                                                const char* y, nsleak_value* out);
/* y_star may be NULL. */
NSLEAK_API nsleak_status nsleak_worst_attribute(const nsleak_relation* rel, const char* x,
                                                const char* y, nsleak_attribute** out,
                                                char** y_star);
/* epsilon: "log2(p/q)", "p/q" or a decimal. */
NSLEAK_API nsleak_status nsleak_is_identifiable(const nsleak_relation* rel, const char* x,
                                                const char* y, const char* epsilon, int* out);
NSLEAK_API nsleak_status nsleak_min_epsilon(const nsleak_relation* rel, const char* x,
                                            const char* y, nsleak_value* out);
NSLEAK_API nsleak_status nsleak_identifiability_bound(size_t size_x, const char* epsilon,
                                                      nsleak_value* out);
/* *out = 1 iff the exact value `leakage` ("log2(p/q)") lies below the bound. */
NSLEAK_API nsleak_status nsleak_identifiability_admits(size_t size_x, const char* epsilon,
                                                       const char* leakage, int* out);

/* ---- maximin ------------------------------------------------------------ */

/* JSON array of blocks, each a sorted array of symbols. */
NSLEAK_API nsleak_status nsleak_overlap_partition(const nsleak_relation* rel, const char* x,
                                                  const char* y, char** blocks_json);
NSLEAK_API nsleak_status nsleak_maximin_info(const nsleak_relation* rel, const char* x,
                                             const char* y, nsleak_value* out);
NSLEAK_API nsleak_status nsleak_common_variable(const nsleak_relation* rel, const char* x,
                                                const char* y, nsleak_attribute** out);
NSLEAK_API nsleak_status nsleak_maximin_symmetric(const nsleak_relation* rel, const char* x,
                                                  const char* y, int* out);
NSLEAK_API nsleak_status nsleak_one_shot_supremum(const nsleak_relation* rel, const char* x,
                                                  const char* y, nsleak_value* out);
/* epsilon may be NULL. Report JSON: value, witness, max_leakage_over_subsets,
 * below_max_leakage, subsets_searched and, with a budget, identifiability. */
NSLEAK_API nsleak_status nsleak_capacity_bound(const nsleak_channel* ch, size_t max_alphabet,
                                               const char* epsilon, char** report_json);

/* ---- stochastic --------------------------------------------------------- */

NSLEAK_API nsleak_status nsleak_dist_parse(const nsleak_relation* rel, const char* json,
                                           nsleak_dist** out);
NSLEAK_API nsleak_status nsleak_dist_load(const nsleak_relation* rel, const char* path,
                                          nsleak_dist** out);
NSLEAK_API nsleak_status nsleak_dist_uniform(const nsleak_relation* rel, nsleak_dist** out);
NSLEAK_API void nsleak_dist_free(nsleak_dist* dist);
NSLEAK_API nsleak_status nsleak_guessing_entropy(const nsleak_dist* dist, const char* u,
                                                 nsleak_value* out);
/* value: the observed symbol, components joined by '|'. */
NSLEAK_API nsleak_status nsleak_cond_guessing_entropy(const nsleak_dist* dist, const char* u,
                                                      const char* y, const char* value,
                                                      nsleak_value* out);
NSLEAK_API nsleak_status nsleak_stochastic_bf_leakage(const nsleak_dist* dist, const char* u,
                                                      const char* y, nsleak_value* out);
/* Maximal stochastic leakage of the channel P{y|x} induced by dist. */
NSLEAK_API nsleak_status nsleak_dist_max_stochastic_leakage(const nsleak_dist* dist,
                                                            const char* x, const char* y,
                                                            nsleak_value* out);
NSLEAK_API nsleak_status nsleak_schannel_parse(const char* json, nsleak_schannel** out);
NSLEAK_API nsleak_status nsleak_schannel_load(const char* path, nsleak_schannel** out);
NSLEAK_API void nsleak_schannel_free(nsleak_schannel* ch);
/* support: comma-separated source symbols, or NULL for every row. */
NSLEAK_API nsleak_status nsleak_schannel_max_leakage(const nsleak_schannel* ch,
                                                     const char* support, nsleak_value* out);
/* L*(x -> y) <= H0(y) + H0(x|y). */
NSLEAK_API nsleak_status nsleak_entropy_bound_check(const nsleak_relation* rel, const char* x,
                                                    const char* y, nsleak_value* lhs,
                                                    nsleak_value* rhs, int* holds);

/* ---- oracle ------------------------------------------------------------- */

/* witness_json (may be NULL): maximizing partition as an array of blocks. */
NSLEAK_API nsleak_status nsleak_brute_force_max_leakage(const nsleak_relation* rel,
                                                        const char* x, const char* y,
                                                        size_t cap, nsleak_value* out,
                                                        char** witness_json);
NSLEAK_API nsleak_status nsleak_brute_force_one_shot(const nsleak_relation* rel, const char* x,
                                                     const char* y, size_t cap,
                                                     nsleak_value* out, char** witness_json);
/* density: rational in (0, 1] as text. */
NSLEAK_API nsleak_status nsleak_random_relation(const size_t* sizes, size_t count,
                                                const char* density, uint64_t seed,
                                                nsleak_relation** out);
NSLEAK_API nsleak_status nsleak_campaign_names(char** names_json);
/* Report JSON: name, property, seed, trials, checks, violations, passed,
 * notes, counterexamples[{trial, detail, relation}]. */
NSLEAK_API nsleak_status nsleak_campaign(const char* name, size_t trials, uint64_t seed,
                                         size_t partition_cap, char** report_json);

#ifdef __cplusplus
}
#endif

#endif /* NSLEAK_NSLEAK_H_ */
