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

// Exercises the shared library through its C header only.

#include <doctest.h>

#include <cstdio>
#include <cstring>
#include <string>

#include <json.hpp>

#include "nsleak/nsleak.h"

namespace {

using Json = nlohmann::json;

const char* kCor1 =
    R"({"variables":["X","Y"],"tuples":[["x1","y1"],["x2","y1"],["x3","y2"]]})";
const char* kRel2 =
    R"({"variables":["X","Y"],"tuples":[["x1","y1"],["x2","y1"],["x2","y2"],["x3","y2"]]})";

nsleak_relation* parse(const char* json) {
  nsleak_relation* rel = nullptr;
  REQUIRE(nsleak_relation_parse(json, &rel) == NSLEAK_OK);
  return rel;
}

std::string take(char* s) {
  std::string out = s ? s : "";
  nsleak_string_free(s);
  return out;
}

std::string exact_of(nsleak_value& v) {
  std::string out = v.exact ? v.exact : "";
  nsleak_value_clear(&v);
  return out;
}

}  // namespace

TEST_CASE("status codes and error messages") {
  nsleak_relation* rel = nullptr;
  CHECK(nsleak_relation_parse("{", &rel) == NSLEAK_ERR_INPUT);
  CHECK(rel == nullptr);
  CHECK(std::string(nsleak_last_error()).find("invalid JSON") != std::string::npos);
  CHECK(nsleak_relation_parse(nullptr, &rel) == NSLEAK_ERR_INPUT);
  CHECK(nsleak_relation_load("/nonexistent.json", &rel) == NSLEAK_ERR_INPUT);

  rel = parse(kCor1);
  char* out = nullptr;
  CHECK(nsleak_conditional(rel, "X", R"({"Y":"y9"})", &out) ==
        NSLEAK_ERR_INCOMPATIBLE_EVIDENCE);
  CHECK(nsleak_conditional(rel, "X", R"({"Y":"y1"})", &out) == NSLEAK_OK);
  CHECK(Json::parse(take(out)) == Json::parse(R"([["x1"],["x2"]])"));

  nsleak_value v{};
  CHECK(nsleak_h0(rel, "Q", &v) == NSLEAK_ERR_INPUT);
  CHECK(nsleak_h0(rel, "X,", &v) == NSLEAK_ERR_INPUT);
  CHECK(nsleak_h0(nullptr, "X", &v) == NSLEAK_ERR_INPUT);
  nsleak_relation_free(rel);
  nsleak_relation_free(nullptr);
  nsleak_value_clear(nullptr);
  CHECK(std::strlen(nsleak_version()) > 0);
}

TEST_CASE("measures through the C API") {
  nsleak_relation* rel = parse(kCor1);
  size_t vars = 0, tuples = 0, dropped = 0;
  CHECK(nsleak_relation_info(rel, &vars, &tuples, &dropped) == NSLEAK_OK);
  CHECK(vars == 2);
  CHECK(tuples == 3);
  CHECK(dropped == 0);
  const char* name = nullptr;
  CHECK(nsleak_relation_variable(rel, 1, &name) == NSLEAK_OK);
  CHECK(std::string(name) == "Y");

  nsleak_value v{};
  REQUIRE(nsleak_maximal_leakage(rel, "X", "Y", &v) == NSLEAK_OK);
  CHECK(v.approx == doctest::Approx(1.5849625007));
  CHECK(exact_of(v) == "log2(3/1)");
  REQUIRE(nsleak_maximal_leakage(rel, "Y", "X", &v) == NSLEAK_OK);
  CHECK(exact_of(v) == "log2(2/1)");
  REQUIRE(nsleak_h0_cond(rel, "X", "Y", &v) == NSLEAK_OK);
  CHECK(exact_of(v) == "log2(2/1)");
  REQUIRE(nsleak_i0(rel, "X", "Y", &v) == NSLEAK_OK);
  CHECK(exact_of(v) == "log2(3/2)");
  char* witness = nullptr;
  REQUIRE(nsleak_leakage(rel, "X", "Y", &v, &witness) == NSLEAK_OK);
  CHECK(exact_of(v) == "log2(3/1)");
  CHECK(take(witness) == "y2");
  REQUIRE(nsleak_maximin_info(rel, "X", "Y", &v) == NSLEAK_OK);
  CHECK(exact_of(v) == "log2(2/1)");
  REQUIRE(nsleak_one_shot_supremum(rel, "X", "Y", &v) == NSLEAK_OK);
  CHECK(exact_of(v) == "log2(2/1)");

  int flag = -1;
  CHECK(nsleak_is_identifiable(rel, "X", "Y", "log2(3)", &flag) == NSLEAK_OK);
  CHECK(flag == 1);
  CHECK(nsleak_is_identifiable(rel, "X", "Y", "1", &flag) == NSLEAK_OK);
  CHECK(flag == 0);
  CHECK(nsleak_is_identifiable(rel, "X", "Y", "0", &flag) == NSLEAK_ERR_INPUT);
  CHECK(nsleak_maximin_symmetric(rel, "X", "Y", &flag) == NSLEAK_OK);
  CHECK(flag == 1);
  CHECK(nsleak_is_unrelated(rel, "X", "Y", &flag) == NSLEAK_OK);
  CHECK(flag == 0);

  REQUIRE(nsleak_min_epsilon(rel, "X", "Y", &v) == NSLEAK_OK);
  CHECK(v.open_bound == 0);
  CHECK(exact_of(v) == "log2(3/1)");
  REQUIRE(nsleak_identifiability_bound(3, "log2(3)", &v) == NSLEAK_OK);
  CHECK(exact_of(v) == "log2(3/1)");
  REQUIRE(nsleak_identifiability_bound(3, "1/2", &v) == NSLEAK_OK);
  CHECK(v.exact == nullptr);
  CHECK(v.approx > 0);
  nsleak_value_clear(&v);
  CHECK(nsleak_identifiability_admits(3, "log2(3)", "log2(3/1)", &flag) == NSLEAK_OK);
  CHECK(flag == 1);
  CHECK(nsleak_identifiability_admits(3, "1", "log2(3/1)", &flag) == NSLEAK_OK);
  CHECK(flag == 0);

  int cmp = 2;
  CHECK(nsleak_value_compare("log2(6/2)", "log2(3)", &cmp) == NSLEAK_OK);
  CHECK(cmp == 0);
  CHECK(nsleak_value_compare("log2(3/2)", "log2(2)", &cmp) == NSLEAK_OK);
  CHECK(cmp == -1);

  nsleak_value lhs{}, rhs{};
  CHECK(nsleak_entropy_bound_check(rel, "X", "Y", &lhs, &rhs, &flag) == NSLEAK_OK);
  CHECK(flag == 1);
  CHECK(exact_of(lhs) == "log2(3/1)");
  CHECK(exact_of(rhs) == "log2(4/1)");
  nsleak_relation_free(rel);
}

TEST_CASE("attributes through the C API") {
  nsleak_relation* rel = parse(kRel2);
  nsleak_attribute* g = nullptr;
  char* y_star = nullptr;
  REQUIRE(nsleak_worst_attribute(rel, "X", "Y", &g, &y_star) == NSLEAK_OK);
  CHECK(take(y_star) == "y1");

  nsleak_value achieved{};
  int present = 0;
  REQUIRE(nsleak_attribute_recorded(g, &achieved, &present) == NSLEAK_OK);
  CHECK(present == 1);
  char* doc = nullptr;
  REQUIRE(nsleak_attribute_to_json(g, &achieved, &doc) == NSLEAK_OK);
  CHECK(exact_of(achieved) == "log2(2/1)");
  const std::string text = take(doc);
  CHECK(Json::parse(text).at("map") == Json::parse(R"({"x1":"__ustar","x2":"__ustar","x3":"x3"})"));

  nsleak_attribute* back = nullptr;
  REQUIRE(nsleak_attribute_parse(text.c_str(), &back) == NSLEAK_OK);
  nsleak_value v{};
  REQUIRE(nsleak_attribute_leakage(rel, back, "Y", &v) == NSLEAK_OK);
  CHECK(exact_of(v) == "log2(2/1)");

  nsleak_relation* with_u = nullptr;
  REQUIRE(nsleak_apply_attribute(rel, back, "U", &with_u) == NSLEAK_OK);
  REQUIRE(nsleak_h0(with_u, "U", &v) == NSLEAK_OK);
  CHECK(exact_of(v) == "log2(2/1)");

  nsleak_attribute* common = nullptr;
  REQUIRE(nsleak_common_variable(rel, "X", "Y", &common) == NSLEAK_OK);
  REQUIRE(nsleak_attribute_recorded(common, &v, &present) == NSLEAK_OK);
  CHECK(present == 0);

  char* blocks = nullptr;
  REQUIRE(nsleak_overlap_partition(rel, "X", "Y", &blocks) == NSLEAK_OK);
  CHECK(Json::parse(take(blocks)) == Json::parse(R"([["x1","x2","x3"]])"));

  nsleak_attribute_free(common);
  nsleak_relation_free(with_u);
  nsleak_attribute_free(back);
  nsleak_attribute_free(g);
  nsleak_relation_free(rel);
}

TEST_CASE("channels, composition and capacity") {
  nsleak_relation* base = parse(R"({"variables":["X"],"tuples":[["x1"],["x2"]]})");
  nsleak_channel* k1 = nullptr;
  nsleak_channel* k2 = nullptr;
  REQUIRE(nsleak_channel_parse(R"({"from":"X","to":"Y","map":{"x1":["y1"],"x2":["y1","y2"]}})",
                               &k1) == NSLEAK_OK);
  REQUIRE(nsleak_channel_parse(R"({"from":"Y","to":"Z","map":{"y1":["z1"],"y2":["z1","z2"]}})",
                               &k2) == NSLEAK_OK);
  const nsleak_channel* chain[] = {k1, k2};
  nsleak_relation* out = nullptr;
  REQUIRE(nsleak_compose(base, chain, 2, &out) == NSLEAK_OK);
  size_t tuples = 0;
  nsleak_relation_info(out, nullptr, &tuples, nullptr);
  CHECK(tuples == 4);
  int markov = 0;
  CHECK(nsleak_is_markov(out, "X", "Y", "Z", &markov) == NSLEAK_OK);
  CHECK(markov == 1);
  const nsleak_channel* wrong[] = {k2};
  nsleak_relation* bad = nullptr;
  CHECK(nsleak_compose(base, wrong, 1, &bad) == NSLEAK_ERR_INPUT);

  nsleak_relation* cor1 = parse(kCor1);
  nsleak_channel* k = nullptr;
  REQUIRE(nsleak_channel_from_relation(cor1, "X", "Y", &k) == NSLEAK_OK);
  char* report = nullptr;
  REQUIRE(nsleak_capacity_bound(k, 16, "log2(3)", &report) == NSLEAK_OK);
  const Json r = Json::parse(take(report));
  CHECK(r.at("value").at("exact") == "log2(2/1)");
  CHECK(r.at("witness") == Json({"x1", "x3"}));
  CHECK(r.at("identifiability").at("within_ceiling") == true);
  CHECK(nsleak_capacity_bound(k, 2, nullptr, &report) == NSLEAK_ERR_SEARCH_CAP);

  nsleak_channel_free(k);
  nsleak_relation_free(cor1);
  nsleak_relation_free(out);
  nsleak_channel_free(k1);
  nsleak_channel_free(k2);
  nsleak_relation_free(base);
}

TEST_CASE("stochastic quantities through the C API") {
  nsleak_relation* rel = parse(kCor1);
  nsleak_dist* u = nullptr;
  REQUIRE(nsleak_dist_uniform(rel, &u) == NSLEAK_OK);
  nsleak_value v{};
  REQUIRE(nsleak_stochastic_bf_leakage(u, "X", "Y", &v) == NSLEAK_OK);
  CHECK(exact_of(v) == "2/3");
  REQUIRE(nsleak_guessing_entropy(u, "X", &v) == NSLEAK_OK);
  CHECK(exact_of(v) == "2/1");
  REQUIRE(nsleak_cond_guessing_entropy(u, "X", "Y", "y1", &v) == NSLEAK_OK);
  CHECK(exact_of(v) == "3/2");
  REQUIRE(nsleak_dist_max_stochastic_leakage(u, "X", "Y", &v) == NSLEAK_OK);
  CHECK(exact_of(v) == "log2(2/1)");

  nsleak_dist* d = nullptr;
  CHECK(nsleak_dist_parse(rel, R"({"weights":{"x1|y1":"1/2"}})", &d) == NSLEAK_ERR_INPUT);

  nsleak_schannel* ch = nullptr;
  REQUIRE(nsleak_schannel_parse(
              R"({"from":"X","to":"Y","map":{"x1":{"y1":"3/4","y2":"1/4"},"x2":{"y1":"1/4","y2":"3/4"}}})",
              &ch) == NSLEAK_OK);
  REQUIRE(nsleak_schannel_max_leakage(ch, nullptr, &v) == NSLEAK_OK);
  CHECK(exact_of(v) == "log2(3/2)");
  REQUIRE(nsleak_schannel_max_leakage(ch, "x1", &v) == NSLEAK_OK);
  CHECK(exact_of(v) == "log2(1/1)");
  nsleak_schannel_free(ch);
  nsleak_dist_free(u);
  nsleak_relation_free(rel);
}

TEST_CASE("oracle entry points") {
  nsleak_relation* rel = parse(kCor1);
  nsleak_value v{};
  char* witness = nullptr;
  REQUIRE(nsleak_brute_force_max_leakage(rel, "X", "Y", 10, &v, &witness) == NSLEAK_OK);
  CHECK(exact_of(v) == "log2(3/1)");
  CHECK(Json::parse(take(witness)) == Json::parse(R"([["x1"],["x2"],["x3"]])"));
  REQUIRE(nsleak_brute_force_one_shot(rel, "X", "Y", 10, &v, &witness) == NSLEAK_OK);
  CHECK(exact_of(v) == "log2(2/1)");
  CHECK(Json::parse(take(witness)) == Json::parse(R"([["x1","x2"],["x3"]])"));
  CHECK(nsleak_brute_force_max_leakage(rel, "X", "Y", 2, &v, nullptr) == NSLEAK_ERR_SEARCH_CAP);
  nsleak_relation_free(rel);

  const size_t sizes[] = {4, 3};
  nsleak_relation* a = nullptr;
  nsleak_relation* b = nullptr;
  REQUIRE(nsleak_random_relation(sizes, 2, "1/2", 42, &a) == NSLEAK_OK);
  REQUIRE(nsleak_random_relation(sizes, 2, "1/2", 42, &b) == NSLEAK_OK);
  char* ja = nullptr;
  char* jb = nullptr;
  nsleak_relation_to_json(a, &ja);
  nsleak_relation_to_json(b, &jb);
  CHECK(take(ja) == take(jb));
  nsleak_relation_free(a);
  nsleak_relation_free(b);

  char* names = nullptr;
  REQUIRE(nsleak_campaign_names(&names) == NSLEAK_OK);
  CHECK(Json::parse(take(names)).size() == 9);
  char* report = nullptr;
  REQUIRE(nsleak_campaign("dpi", 20, 3, 10, &report) == NSLEAK_OK);
  const Json r = Json::parse(take(report));
  CHECK(r.at("violations") == 0);
  CHECK(r.at("passed") == true);
  CHECK(nsleak_campaign("bogus", 1, 1, 10, &report) == NSLEAK_ERR_INPUT);
}
