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

/* Exercises the C interface from plain C. */
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "gossipnet/gossipnet.h"

static int failures = 0;

#define EXPECT(cond)                                              \
  do {                                                            \
    if (!(cond)) {                                                \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                 \
    }                                                             \
  } while (0)

static void test_generate_solve_verify(void) {
  char* bundle = NULL;
  gn_instance* inst = NULL;
  gn_network* net = NULL;
  char* witness = NULL;
  EXPECT(gn_generate("bn", "{\"n\": 9}", &bundle) == GN_OK);
  EXPECT(gn_instance_parse(bundle, &inst) == GN_OK);
  EXPECT(gn_instance_size(inst) == 18);
  EXPECT(gn_solve(inst, "peel", NULL, &net) == GN_OK);
  EXPECT(gn_network_size(net) == 18);
  EXPECT(gn_verify(inst, net, 9, &witness) == GN_OK);
  EXPECT(witness == NULL);
  gn_network_free(net);
  gn_instance_free(inst);
  gn_string_free(bundle);
}

static void test_unstable_witness(void) {
  gn_instance* inst = NULL;
  gn_network* net = NULL;
  char* witness = NULL;
  EXPECT(gn_instance_parse("{\"n\":3,\"symmetric\":true,\"default\":1,\"pairs\":[]}", &inst) ==
         GN_OK);
  EXPECT(gn_network_parse("{\"n\":3,\"edges\":[]}", &net) == GN_OK);
  EXPECT(gn_verify(inst, net, 2, &witness) == GN_UNSTABLE);
  EXPECT(witness != NULL && strstr(witness, "participants") != NULL);
  gn_string_free(witness);
  EXPECT(gn_verify(inst, net, 0, &witness) == GN_ERR_USAGE);
  gn_network_free(net);
  gn_instance_free(inst);
}

static void test_nonexistence_and_bounds(void) {
  char* bundle = NULL;
  gn_instance* inst = NULL;
  char* out = NULL;
  gn_options* o = gn_options_new();
  EXPECT(gn_generate("c-nonexist", "{\"c\": 5}", &bundle) == GN_OK);
  EXPECT(gn_bundle_split(bundle, &inst, NULL, NULL) == GN_OK);
  EXPECT(gn_enumerate(inst, 2, NULL, &out) == GN_NONEXISTENT);
  EXPECT(out != NULL && strcmp(out, "[]") == 0);
  gn_string_free(out);
  out = NULL;
  EXPECT(gn_welfare(inst, 2, "utility", NULL, &out) == GN_NONEXISTENT);
  gn_string_free(out);
  out = NULL;
  gn_options_set_oracle_bound(o, 3);
  EXPECT(gn_enumerate(inst, 2, o, &out) == GN_ERR_ORACLE_BOUND);
  EXPECT(strlen(gn_last_error()) > 0);
  gn_options_free(o);
  gn_instance_free(inst);
  gn_string_free(bundle);
}

static void test_errors(void) {
  gn_instance* inst = NULL;
  char* out = NULL;
  EXPECT(gn_instance_parse("{", &inst) == GN_ERR_PARSE);
  EXPECT(inst == NULL);
  EXPECT(gn_instance_parse("{\"n\":2,\"symmetric\":true,\"default\":1,\"pairs\":"
                           "[{\"i\":0,\"j\":9,\"u_ij\":1}]}",
                           &inst) == GN_ERR_INVALID);
  EXPECT(gn_generate("no-such-family", NULL, &out) == GN_ERR_USAGE);
  EXPECT(gn_generate("bn", "{\"bogus\": 1}", &out) == GN_ERR_USAGE);
  EXPECT(strcmp(gn_status_name(GN_ERR_ORACLE_BOUND), "oracle-bound") == 0);
  EXPECT(gn_instance_parse("{\"n\":2,\"symmetric\":true,\"default\":2,\"pairs\":[]}", &inst) ==
         GN_OK);
  {
    gn_network* net = NULL;
    EXPECT(gn_solve(inst, "dyn2", NULL, &net) == GN_ERR_NONCONFORMING);
    EXPECT(gn_solve(inst, "bogus", NULL, &net) == GN_ERR_USAGE);
  }
  gn_instance_free(inst);
}

static void test_trace_and_bundle(void) {
  char* bundle = NULL;
  gn_instance* inst = NULL;
  gn_network* net = NULL;
  char* schedule = NULL;
  char* lines = NULL;
  char* joined = NULL;
  int count = 0;
  const char* p;
  EXPECT(gn_generate("br-cycle", "{\"s\": 6}", &bundle) == GN_OK);
  EXPECT(gn_bundle_split(bundle, &inst, &net, &schedule) == GN_OK);
  EXPECT(net != NULL && schedule != NULL);
  EXPECT(gn_trace(inst, net, schedule, 50, &lines) == GN_OK);
  for (p = lines; *p; ++p) count += *p == '\n';
  EXPECT(count == 7);
  EXPECT(strstr(lines, "\"repeats_step\":0") != NULL);
  EXPECT(gn_bundle_join(inst, net, schedule, &joined) == GN_OK);
  EXPECT(strcmp(joined, bundle) == 0);
  gn_string_free(joined);
  gn_string_free(lines);
  gn_string_free(schedule);
  gn_network_free(net);
  gn_instance_free(inst);
  gn_string_free(bundle);
}

static void test_reduce_and_welfare(void) {
  char* out = NULL;
  char* bundle = NULL;
  gn_instance* inst = NULL;
  EXPECT(gn_reduce("{\"n\":3,\"edges\":[[0,1],[1,2],[0,2]]}", "3col", "matching", 1, NULL, &out) ==
         GN_OK);
  EXPECT(strstr(out, "\"3col_colorable\":true") != NULL);
  EXPECT(strstr(out, "\"stable_network\":\"skipped") != NULL);
  gn_string_free(out);
  EXPECT(gn_reduce("{}", "matching", "3col", 0, NULL, &out) == GN_ERR_USAGE);
  EXPECT(gn_generate("k4-triangles", NULL, &bundle) == GN_OK);
  EXPECT(gn_instance_parse(bundle, &inst) == GN_OK);
  EXPECT(gn_welfare(inst, 4, "utility", NULL, &out) == GN_OK);
  EXPECT(strstr(out, "\"pos\":\"6/5\"") != NULL);
  gn_string_free(out);
  gn_instance_free(inst);
  gn_string_free(bundle);
}

int main(void) {
  test_generate_solve_verify();
  test_unstable_witness();
  test_nonexistence_and_bounds();
  test_errors();
  test_trace_and_bundle();
  test_reduce_and_welfare();
  if (failures == 0) printf("capi: all checks passed\n");
  return failures == 0 ? 0 : 1;
}
