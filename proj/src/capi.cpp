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

#include "nsleak/nsleak.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "nsleak/errors.hpp"
#include "nsleak/io.hpp"
#include "nsleak/maximin.hpp"
#include "nsleak/measures.hpp"
#include "nsleak/oracle.hpp"
#include "nsleak/stochastic.hpp"

struct nsleak_relation {
  nsleak::Relation value;
};
struct nsleak_channel {
  nsleak::Channel value;
};
struct nsleak_attribute {
  nsleak::AttributeMap value;
  std::optional<nsleak::LeakageValue> recorded;
};
struct nsleak_dist {
  nsleak::RationalDist value;
};
struct nsleak_schannel {
  nsleak::StochasticChannel value;
};

namespace {

using nsleak::io::Json;

thread_local std::string g_last_error;

template <class F>
nsleak_status guard(F&& f) {
  try {
    f();
    return NSLEAK_OK;
  } catch (const nsleak::IncompatibleEvidence& e) {
    g_last_error = e.what();
    return NSLEAK_ERR_INCOMPATIBLE_EVIDENCE;
  } catch (const nsleak::SearchCapError& e) {
    g_last_error = e.what();
    return NSLEAK_ERR_SEARCH_CAP;
  } catch (const nsleak::InputError& e) {
    g_last_error = e.what();
    return NSLEAK_ERR_INPUT;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return NSLEAK_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = std::string("internal error: ") + e.what();
    return NSLEAK_ERR_INTERNAL;
  }
}

template <class T>
void require(const T* p, const char* what) {
  if (p == nullptr) throw nsleak::InputError(std::string(what) + " must not be NULL");
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

nsleak::VarList group(const char* text) {
  require(text, "variable list");
  nsleak::VarList out;
  std::string_view s(text);
  while (true) {
    const auto comma = s.find(',');
    std::string_view part = s.substr(0, comma);
    while (!part.empty() && part.front() == ' ') part.remove_prefix(1);
    while (!part.empty() && part.back() == ' ') part.remove_suffix(1);
    if (part.empty()) throw nsleak::InputError("empty variable name in '" + std::string(text) + "'");
    out.emplace_back(part);
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

std::string single(const char* text) {
  const auto g = group(text);
  if (g.size() != 1) throw nsleak::InputError("expected a single variable, got '" + std::string(text) + "'");
  return g[0];
}

void set_value(nsleak_value* out, const nsleak::LeakageValue& v, bool open_bound = false) {
  require(out, "output value");
  out->exact = dup_string(v.exact());
  out->approx = v.approx();
  out->open_bound = open_bound ? 1 : 0;
}

void set_value(nsleak_value* out, const nsleak::Rational& r) {
  require(out, "output value");
  out->exact = dup_string(nsleak::rational_to_string(r));
  out->approx = nsleak::to_double(r);
  out->open_bound = 0;
}

void set_json(char** out, const Json& doc) {
  require(out, "output string");
  *out = dup_string(doc.dump());
}

// Parses a file with `parse`, prefixing schema errors with the file name.
template <class F>
auto from_file(const char* path, F&& parse) {
  const Json doc = nsleak::io::load_json_file(path);
  try {
    return parse(doc);
  } catch (const nsleak::InputError& e) {
    throw nsleak::InputError(std::string(path) + ": " + e.what());
  }
}

Json partition_json(const nsleak::Partition& p) { return Json(p.blocks()); }

Json campaign_json(const nsleak::CampaignReport& r) {
  Json cx = Json::array();
  for (const auto& c : r.counterexamples) {
    cx.push_back({{"trial", c.trial},
                  {"detail", c.detail},
                  {"relation", nsleak::io::relation_to_json(c.relation)}});
  }
  return {{"name", r.name},         {"property", r.property},   {"seed", r.seed},
          {"trials", r.trials},     {"checks", r.checks},       {"violations", r.violations},
          {"passed", r.passed()},   {"notes", r.notes},         {"counterexamples", cx}};
}

Json value_json(const nsleak::LeakageValue& v) {
  return {{"exact", v.exact()}, {"approx", v.approx()}};
}

}  // namespace

extern "C" {

const char* nsleak_version(void) { return "1.0.0"; }

const char* nsleak_last_error(void) { return g_last_error.c_str(); }

void nsleak_string_free(char* s) { std::free(s); }

void nsleak_value_clear(nsleak_value* v) {
  if (v == nullptr) return;
  std::free(v->exact);
  v->exact = nullptr;
  v->approx = 0;
  v->open_bound = 0;
}

nsleak_status nsleak_value_compare(const char* a, const char* b, int* cmp) {
  return guard([&] {
    require(a, "a");
    require(b, "b");
    require(cmp, "cmp");
    const auto va = nsleak::LeakageValue::parse(a);
    const auto vb = nsleak::LeakageValue::parse(b);
    *cmp = va < vb ? -1 : (vb < va ? 1 : 0);
  });
}

nsleak_status nsleak_relation_parse(const char* json, nsleak_relation** out) {
  return guard([&] {
    require(json, "json");
    require(out, "out");
    *out = new nsleak_relation{nsleak::io::relation_from_json(nsleak::io::parse_json(json))};
  });
}

nsleak_status nsleak_relation_load(const char* path, nsleak_relation** out) {
  return guard([&] {
    require(path, "path");
    require(out, "out");
    *out = new nsleak_relation{from_file(path, nsleak::io::relation_from_json)};
  });
}

nsleak_status nsleak_relation_to_json(const nsleak_relation* rel, char** out) {
  return guard([&] {
    require(rel, "relation");
    set_json(out, nsleak::io::relation_to_json(rel->value));
  });
}

void nsleak_relation_free(nsleak_relation* rel) { delete rel; }

nsleak_status nsleak_relation_info(const nsleak_relation* rel, size_t* variables,
                                   size_t* tuples, size_t* duplicates_dropped) {
  return guard([&] {
    require(rel, "relation");
    if (variables) *variables = rel->value.arity();
    if (tuples) *tuples = rel->value.size();
    if (duplicates_dropped) *duplicates_dropped = rel->value.duplicates_dropped();
  });
}

nsleak_status nsleak_relation_variable(const nsleak_relation* rel, size_t index,
                                       const char** name) {
  return guard([&] {
    require(rel, "relation");
    require(name, "name");
    if (index >= rel->value.arity()) throw nsleak::InputError("variable index out of range");
    *name = rel->value.variables()[index].c_str();
  });
}

nsleak_status nsleak_marginal(const nsleak_relation* rel, const char* vars, char** tuples_json) {
  return guard([&] {
    require(rel, "relation");
    set_json(tuples_json, Json(nsleak::marginal(rel->value, group(vars))));
  });
}

nsleak_status nsleak_conditional(const nsleak_relation* rel, const char* target,
                                 const char* given_json, char** tuples_json) {
  return guard([&] {
    require(rel, "relation");
    require(given_json, "given");
    const Json given = nsleak::io::parse_json(given_json, "evidence");
    if (!given.is_object()) throw nsleak::InputError("evidence must be a JSON object");
    nsleak::Assignment evidence;
    for (const auto& item : given.items()) {
      if (!item.value().is_string()) throw nsleak::InputError("evidence values must be strings");
      evidence.emplace_back(item.key(), item.value().get<std::string>());
    }
    set_json(tuples_json, Json(nsleak::conditional(rel->value, group(target), evidence)));
  });
}

nsleak_status nsleak_is_unrelated(const nsleak_relation* rel, const char* a, const char* b,
                                  int* out) {
  return guard([&] {
    require(rel, "relation");
    require(out, "out");
    *out = nsleak::is_unrelated(rel->value, group(a), group(b)) ? 1 : 0;
  });
}

nsleak_status nsleak_is_markov(const nsleak_relation* rel, const char* a, const char* b,
                               const char* c, int* out) {
  return guard([&] {
    require(rel, "relation");
    require(out, "out");
    *out = nsleak::is_markov(rel->value, group(a), group(b), group(c)) ? 1 : 0;
  });
}

nsleak_status nsleak_relation_project(const nsleak_relation* rel, const char* vars,
                                      nsleak_relation** out) {
  return guard([&] {
    require(rel, "relation");
    require(out, "out");
    *out = new nsleak_relation{nsleak::project(rel->value, group(vars))};
  });
}

nsleak_status nsleak_channel_parse(const char* json, nsleak_channel** out) {
  return guard([&] {
    require(json, "json");
    require(out, "out");
    *out = new nsleak_channel{nsleak::io::channel_from_json(nsleak::io::parse_json(json))};
  });
}

nsleak_status nsleak_channel_load(const char* path, nsleak_channel** out) {
  return guard([&] {
    require(path, "path");
    require(out, "out");
    *out = new nsleak_channel{from_file(path, nsleak::io::channel_from_json)};
  });
}

nsleak_status nsleak_channel_to_json(const nsleak_channel* ch, char** out) {
  return guard([&] {
    require(ch, "channel");
    set_json(out, nsleak::io::channel_to_json(ch->value));
  });
}

void nsleak_channel_free(nsleak_channel* ch) { delete ch; }

nsleak_status nsleak_channel_from_relation(const nsleak_relation* rel, const char* source,
                                           const char* target, nsleak_channel** out) {
  return guard([&] {
    require(rel, "relation");
    require(out, "out");
    *out = new nsleak_channel{
        nsleak::channel_from_relation(rel->value, single(source), single(target))};
  });
}

nsleak_status nsleak_compose(const nsleak_relation* base, const nsleak_channel* const* channels,
                             size_t count, nsleak_relation** out) {
  return guard([&] {
    require(base, "base");
    require(out, "out");
    if (count > 0) require(channels, "channels");
    std::vector<nsleak::Channel> chain;
    for (size_t i = 0; i < count; ++i) {
      require(channels[i], "channel");
      chain.push_back(channels[i]->value);
    }
    *out = new nsleak_relation{nsleak::compose_chain(base->value, chain)};
  });
}

nsleak_status nsleak_attribute_parse(const char* json, nsleak_attribute** out) {
  return guard([&] {
    require(json, "json");
    require(out, "out");
    auto file = nsleak::io::attribute_from_json(nsleak::io::parse_json(json));
    *out = new nsleak_attribute{std::move(file.map), file.achieved_leakage};
  });
}

nsleak_status nsleak_attribute_load(const char* path, nsleak_attribute** out) {
  return guard([&] {
    require(path, "path");
    require(out, "out");
    auto file = from_file(path, nsleak::io::attribute_from_json);
    *out = new nsleak_attribute{std::move(file.map), file.achieved_leakage};
  });
}

nsleak_status nsleak_attribute_to_json(const nsleak_attribute* g, const nsleak_value* achieved,
                                       char** out) {
  return guard([&] {
    require(g, "attribute");
    std::optional<nsleak::LeakageValue> value;
    if (achieved != nullptr && achieved->exact != nullptr) {
      value = nsleak::LeakageValue::parse(achieved->exact);
    }
    set_json(out, nsleak::io::attribute_to_json(g->value, value));
  });
}

nsleak_status nsleak_attribute_recorded(const nsleak_attribute* g, nsleak_value* out,
                                        int* present) {
  return guard([&] {
    require(g, "attribute");
    require(present, "present");
    *present = g->recorded ? 1 : 0;
    if (g->recorded) set_value(out, *g->recorded);
  });
}

void nsleak_attribute_free(nsleak_attribute* g) { delete g; }

nsleak_status nsleak_apply_attribute(const nsleak_relation* rel, const nsleak_attribute* g,
                                     const char* name, nsleak_relation** out) {
  return guard([&] {
    require(rel, "relation");
    require(g, "attribute");
    require(out, "out");
    *out = new nsleak_relation{
        nsleak::apply_attribute(rel->value, g->value, name ? single(name) : "U")};
  });
}

nsleak_status nsleak_attribute_leakage(const nsleak_relation* rel, const nsleak_attribute* g,
                                       const char* observed, nsleak_value* out) {
  return guard([&] {
    require(rel, "relation");
    require(g, "attribute");
    set_value(out, nsleak::attribute_leakage(rel->value, g->value, group(observed)).value);
  });
}

nsleak_status nsleak_h0(const nsleak_relation* rel, const char* vars, nsleak_value* out) {
  return guard([&] {
    require(rel, "relation");
    set_value(out, nsleak::h0(rel->value, group(vars)));
  });
}

nsleak_status nsleak_h0_cond(const nsleak_relation* rel, const char* target, const char* given,
                             nsleak_value* out) {
  return guard([&] {
    require(rel, "relation");
    set_value(out, nsleak::h0_cond(rel->value, group(target), group(given)));
  });
}

nsleak_status nsleak_i0(const nsleak_relation* rel, const char* a, const char* b,
                        nsleak_value* out) {
  return guard([&] {
    require(rel, "relation");
    set_value(out, nsleak::i0(rel->value, group(a), group(b)));
  });
}

nsleak_status nsleak_leakage(const nsleak_relation* rel, const char* target,
                             const char* observed, nsleak_value* out, char** witness) {
  return guard([&] {
    require(rel, "relation");
    const auto r = nsleak::leakage(rel->value, group(target), group(observed));
    set_value(out, r.value);
    if (witness) *witness = dup_string(nsleak::join_tuple(r.witness));
  });
}

nsleak_status nsleak_maximal_leakage(const nsleak_relation* rel, const char* x, const char* y,
                                     nsleak_value* out) {
  return guard([&] {
    require(rel, "relation");
    set_value(out, nsleak::maximal_leakage(rel->value, group(x), group(y)));
  });
}

nsleak_status nsleak_worst_attribute(const nsleak_relation* rel, const char* x, const char* y,
                                     nsleak_attribute** out, char** y_star) {
  return guard([&] {
    require(rel, "relation");
    require(out, "out");
    auto w = nsleak::worst_attribute(rel->value, group(x), group(y));
    const auto achieved = nsleak::attribute_leakage(rel->value, w.map, group(y)).value;
    if (y_star) *y_star = dup_string(nsleak::join_tuple(w.y_star));
    *out = new nsleak_attribute{std::move(w.map), achieved};
  });
}

nsleak_status nsleak_is_identifiable(const nsleak_relation* rel, const char* x, const char* y,
                                     const char* epsilon, int* out) {
  return guard([&] {
    require(rel, "relation");
    require(epsilon, "epsilon");
    require(out, "out");
    *out = nsleak::is_identifiable(rel->value, group(x), group(y),
                                   nsleak::PrivacyBudget::parse(epsilon))
               ? 1
               : 0;
  });
}

nsleak_status nsleak_min_epsilon(const nsleak_relation* rel, const char* x, const char* y,
                                 nsleak_value* out) {
  return guard([&] {
    require(rel, "relation");
    const auto m = nsleak::min_epsilon(rel->value, group(x), group(y));
    set_value(out, m.value, m.open_bound);
  });
}

nsleak_status nsleak_identifiability_bound(size_t size_x, const char* epsilon,
                                           nsleak_value* out) {
  return guard([&] {
    require(epsilon, "epsilon");
    require(out, "out");
    const auto bound = nsleak::identifiability_bound(size_x, nsleak::PrivacyBudget::parse(epsilon));
    if (const auto exact = bound.exact()) {
      set_value(out, *exact);
    } else {
      out->exact = nullptr;
      out->approx = bound.approx();
      out->open_bound = 0;
    }
  });
}

nsleak_status nsleak_identifiability_admits(size_t size_x, const char* epsilon,
                                            const char* leakage, int* out) {
  return guard([&] {
    require(epsilon, "epsilon");
    require(leakage, "leakage");
    require(out, "out");
    const auto bound = nsleak::identifiability_bound(size_x, nsleak::PrivacyBudget::parse(epsilon));
    *out = bound.admits(nsleak::LeakageValue::parse(leakage)) ? 1 : 0;
  });
}

nsleak_status nsleak_overlap_partition(const nsleak_relation* rel, const char* x, const char* y,
                                       char** blocks_json) {
  return guard([&] {
    require(rel, "relation");
    set_json(blocks_json, partition_json(nsleak::overlap_partition(rel->value, group(x), group(y))));
  });
}

nsleak_status nsleak_maximin_info(const nsleak_relation* rel, const char* x, const char* y,
                                  nsleak_value* out) {
  return guard([&] {
    require(rel, "relation");
    set_value(out, nsleak::maximin_info(rel->value, group(x), group(y)));
  });
}

nsleak_status nsleak_common_variable(const nsleak_relation* rel, const char* x, const char* y,
                                     nsleak_attribute** out) {
  return guard([&] {
    require(rel, "relation");
    require(out, "out");
    *out = new nsleak_attribute{nsleak::common_variable(rel->value, group(x), group(y)),
                                std::nullopt};
  });
}

nsleak_status nsleak_maximin_symmetric(const nsleak_relation* rel, const char* x, const char* y,
                                       int* out) {
  return guard([&] {
    require(rel, "relation");
    require(out, "out");
    *out = nsleak::maximin_symmetry_check(rel->value, group(x), group(y)) ? 1 : 0;
  });
}

nsleak_status nsleak_one_shot_supremum(const nsleak_relation* rel, const char* x, const char* y,
                                       nsleak_value* out) {
  return guard([&] {
    require(rel, "relation");
    set_value(out, nsleak::one_shot_supremum(rel->value, group(x), group(y)));
  });
}

nsleak_status nsleak_capacity_bound(const nsleak_channel* ch, size_t max_alphabet,
                                    const char* epsilon, char** report_json) {
  return guard([&] {
    require(ch, "channel");
    std::optional<nsleak::PrivacyBudget> budget;
    if (epsilon != nullptr) budget = nsleak::PrivacyBudget::parse(epsilon);
    const auto c = nsleak::zero_error_capacity_bound(ch->value.source_alphabet(), ch->value,
                                                     max_alphabet, budget);
    Json doc{{"value", value_json(c.value)},
             {"witness", c.witness},
             {"max_leakage_over_subsets", value_json(c.max_leakage_over_subsets)},
             {"below_max_leakage", c.below_max_leakage},
             {"subsets_searched", c.subsets_searched},
             {"alphabet_size", ch->value.source_alphabet().size()}};
    if (c.identifiability) {
      const auto& id = *c.identifiability;
      Json ceiling{{"exact", nullptr}, {"approx", id.ceiling.approx()}};
      if (const auto exact = id.ceiling.exact()) ceiling = value_json(*exact);
      doc["identifiability"] = {{"epsilon", id.ceiling.budget().text()},
                                {"identifiable", id.identifiable},
                                {"ceiling", ceiling},
                                {"within_ceiling", id.within_ceiling}};
    }
    set_json(report_json, doc);
  });
}

nsleak_status nsleak_dist_parse(const nsleak_relation* rel, const char* json, nsleak_dist** out) {
  return guard([&] {
    require(rel, "relation");
    require(json, "json");
    require(out, "out");
    *out = new nsleak_dist{
        nsleak::io::distribution_from_json(rel->value, nsleak::io::parse_json(json))};
  });
}

nsleak_status nsleak_dist_load(const nsleak_relation* rel, const char* path, nsleak_dist** out) {
  return guard([&] {
    require(rel, "relation");
    require(path, "path");
    require(out, "out");
    *out = new nsleak_dist{
        from_file(path, [&](const Json& d) { return nsleak::io::distribution_from_json(rel->value, d); })};
  });
}

nsleak_status nsleak_dist_uniform(const nsleak_relation* rel, nsleak_dist** out) {
  return guard([&] {
    require(rel, "relation");
    require(out, "out");
    *out = new nsleak_dist{nsleak::RationalDist::uniform(rel->value)};
  });
}

void nsleak_dist_free(nsleak_dist* dist) { delete dist; }

nsleak_status nsleak_guessing_entropy(const nsleak_dist* dist, const char* u, nsleak_value* out) {
  return guard([&] {
    require(dist, "distribution");
    set_value(out, nsleak::guessing_entropy(dist->value, group(u)));
  });
}

nsleak_status nsleak_cond_guessing_entropy(const nsleak_dist* dist, const char* u, const char* y,
                                           const char* value, nsleak_value* out) {
  return guard([&] {
    require(dist, "distribution");
    require(value, "value");
    set_value(out, nsleak::cond_guessing_entropy(dist->value, group(u), group(y),
                                                 nsleak::split_tuple(value)));
  });
}

nsleak_status nsleak_stochastic_bf_leakage(const nsleak_dist* dist, const char* u, const char* y,
                                           nsleak_value* out) {
  return guard([&] {
    require(dist, "distribution");
    set_value(out, nsleak::stochastic_bf_leakage(dist->value, group(u), group(y)));
  });
}

nsleak_status nsleak_dist_max_stochastic_leakage(const nsleak_dist* dist, const char* x,
                                                 const char* y, nsleak_value* out) {
  return guard([&] {
    require(dist, "distribution");
    const auto ch = nsleak::induced_channel(dist->value, single(x), single(y));
    set_value(out, nsleak::maximal_stochastic_leakage(ch, ch.source_alphabet()));
  });
}

nsleak_status nsleak_schannel_parse(const char* json, nsleak_schannel** out) {
  return guard([&] {
    require(json, "json");
    require(out, "out");
    *out = new nsleak_schannel{
        nsleak::io::stochastic_channel_from_json(nsleak::io::parse_json(json))};
  });
}

nsleak_status nsleak_schannel_load(const char* path, nsleak_schannel** out) {
  return guard([&] {
    require(path, "path");
    require(out, "out");
    *out = new nsleak_schannel{
        from_file(path, nsleak::io::stochastic_channel_from_json)};
  });
}

void nsleak_schannel_free(nsleak_schannel* ch) { delete ch; }

nsleak_status nsleak_schannel_max_leakage(const nsleak_schannel* ch, const char* support,
                                          nsleak_value* out) {
  return guard([&] {
    require(ch, "channel");
    const std::vector<nsleak::Symbol> symbols =
        support ? group(support) : ch->value.source_alphabet();
    set_value(out, nsleak::maximal_stochastic_leakage(ch->value, symbols));
  });
}

nsleak_status nsleak_entropy_bound_check(const nsleak_relation* rel, const char* x,
                                         const char* y, nsleak_value* lhs, nsleak_value* rhs,
                                         int* holds) {
  return guard([&] {
    require(rel, "relation");
    require(holds, "holds");
    const auto r = nsleak::entropy_bound_check(rel->value, group(x), group(y));
    set_value(lhs, r.lhs);
    set_value(rhs, r.rhs);
    *holds = r.holds ? 1 : 0;
  });
}

nsleak_status nsleak_brute_force_max_leakage(const nsleak_relation* rel, const char* x,
                                             const char* y, size_t cap, nsleak_value* out,
                                             char** witness_json) {
  return guard([&] {
    require(rel, "relation");
    const auto r = nsleak::brute_force_max_leakage(rel->value, group(x), group(y), cap);
    set_value(out, r.value);
    if (witness_json) set_json(witness_json, partition_json(r.witness));
  });
}

nsleak_status nsleak_brute_force_one_shot(const nsleak_relation* rel, const char* x,
                                          const char* y, size_t cap, nsleak_value* out,
                                          char** witness_json) {
  return guard([&] {
    require(rel, "relation");
    const auto r = nsleak::brute_force_one_shot(rel->value, group(x), group(y), cap);
    set_value(out, r.value);
    if (witness_json) set_json(witness_json, partition_json(r.witness));
  });
}

nsleak_status nsleak_random_relation(const size_t* sizes, size_t count, const char* density,
                                     uint64_t seed, nsleak_relation** out) {
  return guard([&] {
    require(sizes, "sizes");
    require(density, "density");
    require(out, "out");
    nsleak::InstanceSpec spec;
    spec.sizes.assign(sizes, sizes + count);
    spec.density = nsleak::parse_rational(density);
    spec.seed = seed;
    *out = new nsleak_relation{nsleak::random_relation(spec)};
  });
}

nsleak_status nsleak_campaign_names(char** names_json) {
  return guard([&] { set_json(names_json, Json(nsleak::campaign_names())); });
}

nsleak_status nsleak_campaign(const char* name, size_t trials, uint64_t seed,
                              size_t partition_cap, char** report_json) {
  return guard([&] {
    require(name, "name");
    nsleak::CampaignOptions options;
    options.partition_cap = partition_cap;
    set_json(report_json, campaign_json(nsleak::property_campaign(name, trials, seed, options)));
  });
}

}  // extern "C"
