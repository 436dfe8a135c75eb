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

// nsleak: command-line front end over the C API.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nsleak/nsleak.h"

namespace {

using Json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitEvidence = 3;
constexpr int kExitInternal = 4;

struct Failure {
  int code;
  std::string message;
};

int exit_code_of(nsleak_status s) {
  switch (s) {
    case NSLEAK_OK:
      return kExitOk;
    case NSLEAK_ERR_INPUT:
    case NSLEAK_ERR_SEARCH_CAP:
      return kExitInput;
    case NSLEAK_ERR_INCOMPATIBLE_EVIDENCE:
      return kExitEvidence;
    default:
      return kExitInternal;
  }
}

void check(nsleak_status s) {
  if (s != NSLEAK_OK) throw Failure{exit_code_of(s), nsleak_last_error()};
}

template <auto Fn>
struct Deleter {
  template <class T>
  void operator()(T* p) const {
    Fn(p);
  }
};

using RelationPtr = std::unique_ptr<nsleak_relation, Deleter<nsleak_relation_free>>;
using ChannelPtr = std::unique_ptr<nsleak_channel, Deleter<nsleak_channel_free>>;
using AttributePtr = std::unique_ptr<nsleak_attribute, Deleter<nsleak_attribute_free>>;
using DistPtr = std::unique_ptr<nsleak_dist, Deleter<nsleak_dist_free>>;

std::string take(char* s) {
  std::string out = s ? s : "";
  nsleak_string_free(s);
  return out;
}

struct Exact {
  std::optional<std::string> exact;
  double approx = 0;
  bool open_bound = false;
};

template <class F>
Exact value_of(F&& call) {
  nsleak_value v{};
  check(call(&v));
  Exact out;
  if (v.exact) out.exact = v.exact;
  out.approx = v.approx;
  out.open_bound = v.open_bound != 0;
  nsleak_value_clear(&v);
  return out;
}

Exact exact_from_json(const Json& doc) {
  Exact out;
  if (doc.at("exact").is_string()) out.exact = doc.at("exact").get<std::string>();
  out.approx = doc.at("approx").get<double>();
  return out;
}

int compare(const Exact& a, const Exact& b) {
  if (!a.exact || !b.exact) return a.approx < b.approx ? -1 : (b.approx < a.approx ? 1 : 0);
  int cmp = 0;
  check(nsleak_value_compare(a.exact->c_str(), b.exact->c_str(), &cmp));
  return cmp;
}

std::string decimal(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

// ---- reports ---------------------------------------------------------------

// Sections of named entries rendered either as aligned text or as one JSON
// object; both renderings come from the same entries so they cannot drift.
class Report {
 public:
  explicit Report(std::string command) : command_(std::move(command)) {}

  void fact(const std::string& section, const std::string& key, Json value) {
    std::string text = value.is_string() ? value.get<std::string>() : value.dump();
    add(section, key, std::move(value), std::move(text));
  }

  void value(const std::string& section, const std::string& key, const Exact& v) {
    Json doc{{"exact", v.exact ? Json(*v.exact) : Json(nullptr)}, {"approx", v.approx}};
    std::string text = decimal(v.approx);
    if (v.exact) text += "  " + *v.exact;
    if (v.open_bound) {
      doc["open_bound"] = true;
      text += "  (open bound: any positive budget, none attains it)";
    }
    add(section, key, std::move(doc), std::move(text));
  }

  void verdict(const std::string& key, bool pass, const std::string& detail) {
    passed_ = passed_ && pass;
    add("checks", key, Json{{"pass", pass}, {"detail", detail}},
        std::string(pass ? "PASS" : "FAIL") + "  " + detail);
  }

  bool passed() const { return passed_; }

  Json to_json() const {
    Json doc{{"command", command_}, {"passed", passed_}};
    for (const auto& s : sections_) {
      Json& body = doc[s.name] = Json::object();
      for (const auto& e : s.entries) body[e.key] = e.json;
    }
    return doc;
  }

  void print(std::ostream& os, bool json) const {
    if (json) {
      os << to_json().dump(2) << '\n';
      return;
    }
    size_t width = 0;
    for (const auto& s : sections_)
      for (const auto& e : s.entries) width = std::max(width, e.key.size());
    os << "nsleak " << command_ << '\n';
    for (const auto& s : sections_) {
      os << '[' << s.name << "]\n";
      for (const auto& e : s.entries) {
        os << "  " << e.key << std::string(width - e.key.size() + 2, ' ') << e.text << '\n';
      }
    }
  }

 private:
  struct Entry {
    std::string key;
    Json json;
    std::string text;
  };
  struct Section {
    std::string name;
    std::vector<Entry> entries;
  };

  void add(const std::string& section, const std::string& key, Json json, std::string text) {
    auto it = std::find_if(sections_.begin(), sections_.end(),
                           [&](const Section& s) { return s.name == section; });
    if (it == sections_.end()) it = sections_.insert(sections_.end(), Section{section, {}});
    it->entries.push_back({key, std::move(json), std::move(text)});
  }

  std::string command_;
  std::vector<Section> sections_;
  bool passed_ = true;
};

// ---- shared options and loaders ---------------------------------------------

struct Globals {
  std::string format = "human";
  uint64_t seed = 1;
  size_t partition_cap = 10;
  size_t max_alphabet = 16;

  bool json() const { return format == "json"; }
};

RelationPtr load_relation(const std::string& path) {
  nsleak_relation* raw = nullptr;
  check(nsleak_relation_load(path.c_str(), &raw));
  RelationPtr rel(raw);
  size_t dropped = 0;
  check(nsleak_relation_info(rel.get(), nullptr, nullptr, &dropped));
  if (dropped > 0) {
    std::cerr << "warning: " << path << ": " << dropped << " duplicate tuple(s) dropped\n";
  }
  return rel;
}

ChannelPtr load_channel(const std::string& path) {
  nsleak_channel* raw = nullptr;
  check(nsleak_channel_load(path.c_str(), &raw));
  return ChannelPtr(raw);
}

std::string variable(const nsleak_relation* rel, size_t index) {
  const char* name = nullptr;
  check(nsleak_relation_variable(rel, index, &name));
  return name;
}

// Fills X and Y from the first two variables when not given explicitly.
void default_pair(const nsleak_relation* rel, std::string& x, std::string& y) {
  size_t arity = 0;
  check(nsleak_relation_info(rel, &arity, nullptr, nullptr));
  if (x.empty()) {
    if (arity < 1) throw Failure{kExitInput, "relation has no variables"};
    x = variable(rel, 0);
  }
  if (y.empty()) {
    for (size_t i = 0; i < arity && y.empty(); ++i) {
      if (variable(rel, i) != x) y = variable(rel, i);
    }
    if (y.empty()) throw Failure{kExitInput, "relation needs a second variable for --y"};
  }
}

size_t range_size(const nsleak_relation* rel, const std::string& vars) {
  char* doc = nullptr;
  check(nsleak_marginal(rel, vars.c_str(), &doc));
  return Json::parse(take(doc)).size();
}

void write_output(const std::optional<std::string>& path, const std::string& text) {
  if (!path) {
    std::cout << text;
    return;
  }
  std::ofstream out(*path);
  if (!out || !(out << text)) throw Failure{kExitInput, "cannot write " + *path};
}

void warn_partition_cap(const Globals& g) {
  if (g.partition_cap > 10) {
    std::cerr << "warning: partition cap " << g.partition_cap
              << " raises brute-force cost to Bell(" << g.partition_cap
              << ") partitions per instance\n";
  }
}

std::string arrow(const std::string& a, const std::string& b) { return "(" + a + "->" + b + ")"; }
std::string pair(const std::string& a, const std::string& b) { return "(" + a + ";" + b + ")"; }

// ---- measure -----------------------------------------------------------------

struct MeasureArgs {
  std::string relation;
  std::string x, y;
  std::optional<std::string> epsilon;
  std::optional<std::string> dist;
  std::optional<std::string> attribute;
  std::vector<std::string> given;  // VAR=symbol evidence
};

void identifiability_ceiling(Report& r, const std::string& key, size_t size_x,
                             const std::string& eps, const Exact& lstar, bool expect_equality) {
  const Exact ceiling =
      value_of([&](nsleak_value* v) { return nsleak_identifiability_bound(size_x, eps.c_str(), v); });
  r.value("measures", key, ceiling);
  int admits = 0;
  check(nsleak_identifiability_admits(size_x, eps.c_str(), lstar.exact->c_str(), &admits));
  std::string detail = decimal(lstar.approx) + " <= " + decimal(ceiling.approx);
  bool pass = admits != 0;
  if (expect_equality) {
    const bool equal = ceiling.exact && compare(lstar, ceiling) == 0;
    detail += equal ? " (equality)" : " (equality expected)";
    pass = pass && equal;
  }
  r.verdict(key, pass, detail);
}

int cmd_measure(const Globals& g, MeasureArgs a) {
  const auto rel = load_relation(a.relation);
  default_pair(rel.get(), a.x, a.y);
  const char* x = a.x.c_str();
  const char* y = a.y.c_str();
  const size_t size_x = range_size(rel.get(), a.x);
  size_t tuples = 0;
  check(nsleak_relation_info(rel.get(), nullptr, &tuples, nullptr));

  Report r("measure");
  r.fact("instance", "relation", a.relation);
  r.fact("instance", "X", a.x);
  r.fact("instance", "Y", a.y);
  r.fact("instance", "|X|", size_x);
  r.fact("instance", "|Y|", range_size(rel.get(), a.y));
  r.fact("instance", "tuples", tuples);

  r.value("measures", "H0(" + a.x + ")", value_of([&](auto v) { return nsleak_h0(rel.get(), x, v); }));
  r.value("measures", "H0(" + a.y + ")", value_of([&](auto v) { return nsleak_h0(rel.get(), y, v); }));
  r.value("measures", "H0(" + a.x + "|" + a.y + ")",
          value_of([&](auto v) { return nsleak_h0_cond(rel.get(), x, y, v); }));
  r.value("measures", "I0" + pair(a.x, a.y),
          value_of([&](auto v) { return nsleak_i0(rel.get(), x, y, v); }));

  char* argmin = nullptr;
  r.value("measures", "L" + arrow(a.x, a.y),
          value_of([&](auto v) { return nsleak_leakage(rel.get(), x, y, v, &argmin); }));
  const std::string y_min = take(argmin);

  const Exact lstar = value_of([&](auto v) { return nsleak_maximal_leakage(rel.get(), x, y, v); });
  r.value("measures", "Lstar" + arrow(a.x, a.y), lstar);
  r.value("measures", "Lstar" + arrow(a.y, a.x),
          value_of([&](auto v) { return nsleak_maximal_leakage(rel.get(), y, x, v); }));
  r.value("measures", "Istar" + pair(a.x, a.y),
          value_of([&](auto v) { return nsleak_maximin_info(rel.get(), x, y, v); }));
  const Exact min_eps = value_of([&](auto v) { return nsleak_min_epsilon(rel.get(), x, y, v); });
  r.value("measures", "min_epsilon", min_eps);

  r.fact("witnesses", "argmin_y", y_min);
  nsleak_attribute* raw_g = nullptr;
  char* y_star = nullptr;
  check(nsleak_worst_attribute(rel.get(), x, y, &raw_g, &y_star));
  AttributePtr worst(raw_g);
  r.fact("witnesses", "y_star", take(y_star));
  char* worst_doc = nullptr;
  check(nsleak_attribute_to_json(worst.get(), nullptr, &worst_doc));
  r.fact("witnesses", "worst_attribute", Json::parse(take(worst_doc)).at("map"));
  char* blocks = nullptr;
  check(nsleak_overlap_partition(rel.get(), x, y, &blocks));
  r.fact("witnesses", "overlap_partition", Json::parse(take(blocks)));

  // The identifiability ceiling at the smallest budget must be met with
  // equality; an unrelated pair has no attaining budget and leaks nothing.
  if (min_eps.open_bound) {
    r.verdict("identifiability_ceiling", lstar.approx == 0,
              "unrelated pair: leakage " + decimal(lstar.approx) + ", ceiling tends to 0");
  } else {
    identifiability_ceiling(r, "identifiability_ceiling", size_x, *min_eps.exact, lstar, true);
  }

  Exact lhs, rhs;
  int holds = 0;
  {
    nsleak_value l{}, h{};
    check(nsleak_entropy_bound_check(rel.get(), x, y, &l, &h, &holds));
    lhs = Exact{std::string(l.exact), l.approx, false};
    rhs = Exact{std::string(h.exact), h.approx, false};
    nsleak_value_clear(&l);
    nsleak_value_clear(&h);
  }
  r.value("measures", "H0(" + a.y + ")+H0(" + a.x + "|" + a.y + ")", rhs);
  r.verdict("entropy_bound", holds != 0, decimal(lhs.approx) + " <= " + decimal(rhs.approx));

  if (a.epsilon) {
    int identifiable = 0;
    check(nsleak_is_identifiable(rel.get(), x, y, a.epsilon->c_str(), &identifiable));
    r.fact("identifiability", "epsilon", *a.epsilon);
    r.fact("identifiability", "identifiable", identifiable != 0);
    if (identifiable) {
      identifiability_ceiling(r, "epsilon_ceiling", size_x, *a.epsilon, lstar, false);
    }
  }

  if (!a.given.empty()) {
    Json evidence = Json::object();
    for (const auto& item : a.given) {
      const auto eq = item.find('=');
      if (eq == std::string::npos || eq == 0) {
        throw Failure{kExitInput, "--given expects VAR=symbol, got '" + item + "'"};
      }
      evidence[item.substr(0, eq)] = item.substr(eq + 1);
    }
    char* range = nullptr;
    check(nsleak_conditional(rel.get(), x, evidence.dump().c_str(), &range));
    const Json tuples = Json::parse(take(range));
    r.fact("evidence", "given", evidence);
    r.fact("evidence", "range(" + a.x + ")", tuples);
    r.fact("evidence", "|range(" + a.x + ")|", tuples.size());
  }

  if (a.attribute) {
    nsleak_attribute* raw = nullptr;
    check(nsleak_attribute_load(a.attribute->c_str(), &raw));
    AttributePtr attr(raw);
    const Exact achieved =
        value_of([&](auto v) { return nsleak_attribute_leakage(rel.get(), attr.get(), y, v); });
    r.value("attribute", "L(U->" + a.y + ")", achieved);
    r.verdict("attribute_within_maximal", compare(achieved, lstar) <= 0,
              decimal(achieved.approx) + " <= " + decimal(lstar.approx));
    nsleak_value recorded{};
    int present = 0;
    check(nsleak_attribute_recorded(attr.get(), &recorded, &present));
    if (present) {
      const Exact rec{std::string(recorded.exact), recorded.approx, false};
      nsleak_value_clear(&recorded);
      r.value("attribute", "recorded", rec);
      r.verdict("attribute_recorded_value", compare(achieved, rec) == 0,
                "recomputed " + *achieved.exact + " vs recorded " + *rec.exact);
    }
  }

  if (a.dist) {
    nsleak_dist* raw = nullptr;
    check(nsleak_dist_load(rel.get(), a.dist->c_str(), &raw));
    DistPtr dist(raw);
    r.fact("stochastic", "distribution", *a.dist);
    r.value("stochastic", "H_G(" + a.x + ")",
            value_of([&](auto v) { return nsleak_guessing_entropy(dist.get(), x, v); }));
    r.value("stochastic", "L_G" + arrow(a.x, a.y),
            value_of([&](auto v) { return nsleak_stochastic_bf_leakage(dist.get(), x, y, v); }));
    if (a.x.find(',') == std::string::npos && a.y.find(',') == std::string::npos) {
      r.value("stochastic", "I_inf" + arrow(a.x, a.y), value_of([&](auto v) {
                return nsleak_dist_max_stochastic_leakage(dist.get(), x, y, v);
              }));
    }
  }

  r.print(std::cout, g.json());
  return r.passed() ? kExitOk : kExitFail;
}

// ---- worst-attribute ---------------------------------------------------------

struct WorstArgs {
  std::string relation;
  std::string x, y;
  std::string output;
};

int cmd_worst_attribute(const Globals& g, WorstArgs a) {
  const auto rel = load_relation(a.relation);
  default_pair(rel.get(), a.x, a.y);
  nsleak_attribute* raw = nullptr;
  char* y_star = nullptr;
  check(nsleak_worst_attribute(rel.get(), a.x.c_str(), a.y.c_str(), &raw, &y_star));
  AttributePtr worst(raw);

  nsleak_value achieved{};
  int present = 0;
  check(nsleak_attribute_recorded(worst.get(), &achieved, &present));
  char* doc = nullptr;
  const nsleak_status st = nsleak_attribute_to_json(worst.get(), &achieved, &doc);
  const Exact value{std::string(achieved.exact), achieved.approx, false};
  nsleak_value_clear(&achieved);
  check(st);
  write_output(a.output, Json::parse(take(doc)).dump(2) + "\n");

  // Reload what was written and evaluate it from scratch.
  nsleak_attribute* reloaded_raw = nullptr;
  check(nsleak_attribute_load(a.output.c_str(), &reloaded_raw));
  AttributePtr reloaded(reloaded_raw);
  const Exact again = value_of([&](auto v) {
    return nsleak_attribute_leakage(rel.get(), reloaded.get(), a.y.c_str(), v);
  });

  Report r("worst-attribute");
  r.fact("instance", "relation", a.relation);
  r.fact("instance", "X", a.x);
  r.fact("instance", "Y", a.y);
  r.fact("witnesses", "y_star", take(y_star));
  r.fact("witnesses", "output", a.output);
  r.value("measures", "achieved_leakage", value);
  r.value("measures", "reloaded_leakage", again);
  r.verdict("round_trip", compare(value, again) == 0, *value.exact + " vs " + *again.exact);
  r.print(std::cout, g.json());
  return r.passed() ? kExitOk : kExitFail;
}

// ---- audit -------------------------------------------------------------------

struct AuditArgs {
  std::string relation;
  std::string x, y;
  std::string epsilon;
};

int cmd_audit(const Globals& g, AuditArgs a) {
  const auto rel = load_relation(a.relation);
  default_pair(rel.get(), a.x, a.y);
  const char* x = a.x.c_str();
  const char* y = a.y.c_str();
  const size_t size_x = range_size(rel.get(), a.x);

  int identifiable = 0;
  check(nsleak_is_identifiable(rel.get(), x, y, a.epsilon.c_str(), &identifiable));
  const Exact lstar = value_of([&](auto v) { return nsleak_maximal_leakage(rel.get(), x, y, v); });
  const Exact min_eps = value_of([&](auto v) { return nsleak_min_epsilon(rel.get(), x, y, v); });

  Report r("audit");
  r.fact("instance", "relation", a.relation);
  r.fact("instance", "X", a.x);
  r.fact("instance", "Y", a.y);
  r.fact("instance", "|X|", size_x);
  r.fact("instance", "epsilon", a.epsilon);
  r.value("measures", "min_epsilon", min_eps);
  r.value("measures", "Lstar" + arrow(a.x, a.y), lstar);
  r.verdict("epsilon_identifiable", identifiable != 0,
            identifiable ? "min_epsilon within budget" : "budget below min_epsilon");
  if (identifiable) {
    identifiability_ceiling(r, "leakage_ceiling", size_x, a.epsilon, lstar, false);
  } else {
    r.value("measures", "leakage_ceiling", value_of([&](auto v) {
              return nsleak_identifiability_bound(size_x, a.epsilon.c_str(), v);
            }));
  }
  r.print(std::cout, g.json());
  return r.passed() ? kExitOk : kExitFail;
}

// ---- maximin -----------------------------------------------------------------

struct PairArgs {
  std::string relation;
  std::string x, y;
};

int cmd_maximin(const Globals& g, PairArgs a) {
  const auto rel = load_relation(a.relation);
  default_pair(rel.get(), a.x, a.y);
  const char* x = a.x.c_str();
  const char* y = a.y.c_str();

  const Exact info = value_of([&](auto v) { return nsleak_maximin_info(rel.get(), x, y, v); });
  const Exact reverse = value_of([&](auto v) { return nsleak_maximin_info(rel.get(), y, x, v); });
  const Exact one_shot =
      value_of([&](auto v) { return nsleak_one_shot_supremum(rel.get(), x, y, v); });
  const Exact lstar = value_of([&](auto v) { return nsleak_maximal_leakage(rel.get(), x, y, v); });

  Report r("maximin");
  r.fact("instance", "relation", a.relation);
  r.fact("instance", "X", a.x);
  r.fact("instance", "Y", a.y);
  r.value("measures", "Istar" + pair(a.x, a.y), info);
  r.value("measures", "Istar" + pair(a.y, a.x), reverse);
  r.value("measures", "one_shot_supremum", one_shot);
  r.value("measures", "Lstar" + arrow(a.x, a.y), lstar);

  char* blocks = nullptr;
  check(nsleak_overlap_partition(rel.get(), x, y, &blocks));
  r.fact("witnesses", "overlap_partition", Json::parse(take(blocks)));
  nsleak_attribute* raw = nullptr;
  check(nsleak_common_variable(rel.get(), x, y, &raw));
  AttributePtr common(raw);
  char* doc = nullptr;
  check(nsleak_attribute_to_json(common.get(), nullptr, &doc));
  r.fact("witnesses", "common_variable", Json::parse(take(doc)).at("map"));

  int symmetric = 0;
  check(nsleak_maximin_symmetric(rel.get(), x, y, &symmetric));
  r.verdict("symmetry", symmetric != 0, decimal(info.approx) + " = " + decimal(reverse.approx));
  r.verdict("one_shot_matches", compare(one_shot, info) == 0,
            decimal(one_shot.approx) + " = " + decimal(info.approx));
  r.verdict("below_maximal_leakage", compare(info, lstar) <= 0,
            decimal(info.approx) + " <= " + decimal(lstar.approx));
  r.print(std::cout, g.json());
  return r.passed() ? kExitOk : kExitFail;
}

// ---- capacity ----------------------------------------------------------------

struct CapacityArgs {
  std::string channel;
  std::optional<std::string> epsilon;
};

int cmd_capacity(const Globals& g, const CapacityArgs& a) {
  const auto ch = load_channel(a.channel);
  char* raw = nullptr;
  check(nsleak_capacity_bound(ch.get(), g.max_alphabet, a.epsilon ? a.epsilon->c_str() : nullptr,
                              &raw));
  const Json doc = Json::parse(take(raw));

  Report r("capacity");
  r.fact("instance", "channel", a.channel);
  r.fact("instance", "alphabet_size", doc.at("alphabet_size"));
  r.fact("instance", "subsets_searched", doc.at("subsets_searched"));
  const Exact value = exact_from_json(doc.at("value"));
  const Exact sup = exact_from_json(doc.at("max_leakage_over_subsets"));
  r.value("measures", "C0_bound", value);
  r.value("measures", "max_leakage_over_subsets", sup);
  r.fact("witnesses", "subset", doc.at("witness"));
  r.verdict("below_max_leakage", doc.at("below_max_leakage").get<bool>(),
            decimal(value.approx) + " <= " + decimal(sup.approx));
  if (doc.contains("identifiability")) {
    const Json& id = doc.at("identifiability");
    r.fact("identifiability", "epsilon", id.at("epsilon"));
    r.fact("identifiability", "identifiable", id.at("identifiable"));
    const Exact ceiling = exact_from_json(id.at("ceiling"));
    r.value("identifiability", "ceiling", ceiling);
    if (id.at("identifiable").get<bool>()) {
      r.verdict("within_ceiling", id.at("within_ceiling").get<bool>(),
                decimal(value.approx) + " <= " + decimal(ceiling.approx));
    }
  }
  r.print(std::cout, g.json());
  return r.passed() ? kExitOk : kExitFail;
}

// ---- compose -----------------------------------------------------------------

struct ComposeArgs {
  std::string range;
  std::vector<std::string> channels;
  std::optional<std::string> output;
};

int cmd_compose(const Globals&, const ComposeArgs& a) {
  const auto base = load_relation(a.range);
  std::vector<ChannelPtr> owned;
  std::vector<const nsleak_channel*> chain;
  for (const auto& path : a.channels) {
    owned.push_back(load_channel(path));
    chain.push_back(owned.back().get());
  }
  nsleak_relation* raw = nullptr;
  check(nsleak_compose(base.get(), chain.data(), chain.size(), &raw));
  RelationPtr out(raw);
  char* doc = nullptr;
  check(nsleak_relation_to_json(out.get(), &doc));
  write_output(a.output, Json::parse(take(doc)).dump(2) + "\n");
  return kExitOk;
}

// ---- oracle ------------------------------------------------------------------

struct VerifyArgs {
  std::string prop = "all";
  size_t trials = 1000;
  std::optional<std::string> counterexamples;
};

int cmd_oracle_verify(const Globals& g, const VerifyArgs& a) {
  warn_partition_cap(g);
  std::vector<std::string> names;
  if (a.prop == "all") {
    char* raw = nullptr;
    check(nsleak_campaign_names(&raw));
    names = Json::parse(take(raw)).get<std::vector<std::string>>();
  } else {
    names.push_back(a.prop);
  }
  if (a.counterexamples) std::filesystem::create_directories(*a.counterexamples);

  Json reports = Json::array();
  bool all_passed = true;
  for (const auto& name : names) {
    char* raw = nullptr;
    check(nsleak_campaign(name.c_str(), a.trials, g.seed, g.partition_cap, &raw));
    Json report = Json::parse(take(raw));
    all_passed = all_passed && report.at("passed").get<bool>();
    if (a.counterexamples) {
      size_t i = 0;
      for (const auto& cx : report.at("counterexamples")) {
        const auto path = std::filesystem::path(*a.counterexamples) /
                          (name + "-" + std::to_string(i++) + ".json");
        write_output(path.string(), cx.dump(2) + "\n");
      }
    }
    if (!g.json()) {
      std::cout << (report.at("passed").get<bool>() ? "PASS" : "FAIL") << "  " << name
                << "  trials=" << report.at("trials") << " checks=" << report.at("checks")
                << " violations=" << report.at("violations") << " seed=" << report.at("seed")
                << "\n      " << report.at("property").get<std::string>() << '\n';
      for (const auto& note : report.at("notes")) {
        std::cout << "      note: " << note.get<std::string>() << '\n';
      }
      for (const auto& cx : report.at("counterexamples")) {
        std::cout << "      counterexample (trial " << cx.at("trial")
                  << "): " << cx.at("detail").get<std::string>() << '\n';
      }
    }
    reports.push_back(std::move(report));
  }
  if (g.json()) {
    std::cout << Json{{"command", "oracle verify"}, {"passed", all_passed}, {"campaigns", reports}}
                     .dump(2)
              << '\n';
  }
  return all_passed ? kExitOk : kExitFail;
}

int cmd_oracle_list(const Globals& g) {
  char* raw = nullptr;
  check(nsleak_campaign_names(&raw));
  const Json names = Json::parse(take(raw));
  if (g.json()) {
    std::cout << names.dump(2) << '\n';
  } else {
    for (const auto& n : names) std::cout << n.get<std::string>() << '\n';
  }
  return kExitOk;
}

int cmd_oracle_brute_force(const Globals& g, PairArgs a) {
  warn_partition_cap(g);
  const auto rel = load_relation(a.relation);
  default_pair(rel.get(), a.x, a.y);
  const char* x = a.x.c_str();
  const char* y = a.y.c_str();

  char* w_max = nullptr;
  char* w_one = nullptr;
  const Exact bf_max = value_of([&](auto v) {
    return nsleak_brute_force_max_leakage(rel.get(), x, y, g.partition_cap, v, &w_max);
  });
  const Exact bf_one = value_of([&](auto v) {
    return nsleak_brute_force_one_shot(rel.get(), x, y, g.partition_cap, v, &w_one);
  });
  const Exact lstar = value_of([&](auto v) { return nsleak_maximal_leakage(rel.get(), x, y, v); });
  const Exact info = value_of([&](auto v) { return nsleak_maximin_info(rel.get(), x, y, v); });

  Report r("oracle brute-force");
  r.fact("instance", "relation", a.relation);
  r.fact("instance", "X", a.x);
  r.fact("instance", "Y", a.y);
  r.value("measures", "brute_force_max_leakage", bf_max);
  r.value("measures", "Lstar" + arrow(a.x, a.y), lstar);
  r.value("measures", "brute_force_one_shot", bf_one);
  r.value("measures", "Istar" + pair(a.x, a.y), info);
  r.fact("witnesses", "max_leakage_partition", Json::parse(take(w_max)));
  r.fact("witnesses", "one_shot_partition", Json::parse(take(w_one)));
  r.verdict("max_leakage_closed_form", compare(bf_max, lstar) == 0,
            decimal(bf_max.approx) + " = " + decimal(lstar.approx));
  r.verdict("maximin_closed_form", compare(bf_one, info) == 0,
            decimal(bf_one.approx) + " = " + decimal(info.approx));
  r.print(std::cout, g.json());
  return r.passed() ? kExitOk : kExitFail;
}

// ---- random ------------------------------------------------------------------

struct RandomArgs {
  std::vector<size_t> sizes;
  std::string density = "1/2";
  std::optional<std::string> output;
};

int cmd_random(const Globals& g, const RandomArgs& a) {
  nsleak_relation* raw = nullptr;
  check(nsleak_random_relation(a.sizes.data(), a.sizes.size(), a.density.c_str(), g.seed, &raw));
  RelationPtr rel(raw);
  char* doc = nullptr;
  check(nsleak_relation_to_json(rel.get(), &doc));
  write_output(a.output, Json::parse(take(doc)).dump(2) + "\n");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Non-stochastic information leakage over finite uncertain variables", "nsleak"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(nsleak_version()));

  Globals g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"human", "json"}))
      ->capture_default_str();
  app.add_option("--seed", g.seed, "Seed for random generation and campaigns")
      ->capture_default_str();
  app.add_option("--max-partition-cap", g.partition_cap,
                 "Largest |X| the brute-force oracle enumerates")
      ->capture_default_str();
  app.add_option("--max-alphabet", g.max_alphabet,
                 "Largest input alphabet for the zero-error capacity search")
      ->capture_default_str();

  std::function<int()> run;

  MeasureArgs measure;
  auto* m = app.add_subcommand("measure", "Report every leakage measure for a relation");
  m->add_option("relation", measure.relation, "Relation file")->required();
  m->add_option("--x", measure.x, "Secret variable(s), comma separated");
  m->add_option("--y", measure.y, "Observed variable(s), comma separated");
  m->add_option("--epsilon", measure.epsilon, "Privacy budget: p/q, decimal or log2(p/q)");
  m->add_option("--dist", measure.dist, "Distribution file for the stochastic block");
  m->add_option("--attribute", measure.attribute, "Attribute file to evaluate");
  m->add_option("--given", measure.given, "Evidence VAR=symbol; reports the range of X under it");
  m->callback([&] { run = [&] { return cmd_measure(g, measure); }; });

  WorstArgs worst;
  auto* w = app.add_subcommand("worst-attribute", "Write the most vulnerable attribute");
  w->add_option("relation", worst.relation, "Relation file")->required();
  w->add_option("--x", worst.x, "Secret variable(s)");
  w->add_option("--y", worst.y, "Observed variable(s)");
  w->add_option("-o,--output", worst.output, "Attribute file to write")->required();
  w->callback([&] { run = [&] { return cmd_worst_attribute(g, worst); }; });

  AuditArgs audit;
  auto* au = app.add_subcommand("audit", "Check epsilon-identifiability");
  au->add_option("relation", audit.relation, "Relation file")->required();
  au->add_option("--x", audit.x, "Secret variable(s)");
  au->add_option("--y", audit.y, "Observed variable(s)");
  au->add_option("--epsilon", audit.epsilon, "Privacy budget")->required();
  au->callback([&] { run = [&] { return cmd_audit(g, audit); }; });

  PairArgs maximin;
  auto* mx = app.add_subcommand("maximin", "Overlap partition and maximin information");
  mx->add_option("relation", maximin.relation, "Relation file")->required();
  mx->add_option("--x", maximin.x, "First variable(s)");
  mx->add_option("--y", maximin.y, "Second variable(s)");
  mx->callback([&] { run = [&] { return cmd_maximin(g, maximin); }; });

  CapacityArgs capacity;
  auto* cp = app.add_subcommand("capacity", "Zero-error capacity bound of a channel");
  cp->add_option("channel", capacity.channel, "Channel file")->required();
  cp->add_option("--epsilon", capacity.epsilon, "Also check the identifiability ceiling");
  cp->callback([&] { run = [&] { return cmd_capacity(g, capacity); }; });

  ComposeArgs compose;
  auto* co = app.add_subcommand("compose", "Chain channels onto a base range");
  co->add_option("--range", compose.range, "Relation file with the base variable")->required();
  co->add_option("channels", compose.channels, "Channel files in chain order")->required();
  co->add_option("-o,--output", compose.output, "Relation file to write (default stdout)");
  co->callback([&] { run = [&] { return cmd_compose(g, compose); }; });

  auto* oracle = app.add_subcommand("oracle", "Brute-force oracles and property campaigns");
  oracle->require_subcommand(1);
  VerifyArgs verify;
  auto* ov = oracle->add_subcommand("verify", "Run property campaigns");
  ov->add_option("--prop", verify.prop, "Campaign name or 'all'")->capture_default_str();
  ov->add_option("--trials", verify.trials, "Random trials per campaign")->capture_default_str();
  ov->add_option("--counterexamples", verify.counterexamples,
                 "Directory receiving counterexample files");
  ov->callback([&] { run = [&] { return cmd_oracle_verify(g, verify); }; });
  auto* ol = oracle->add_subcommand("list", "List campaign names");
  ol->callback([&] { run = [&] { return cmd_oracle_list(g); }; });
  PairArgs brute;
  auto* ob = oracle->add_subcommand("brute-force", "Compare closed forms with exhaustive search");
  ob->add_option("relation", brute.relation, "Relation file")->required();
  ob->add_option("--x", brute.x, "Secret variable(s)");
  ob->add_option("--y", brute.y, "Observed variable(s)");
  ob->callback([&] { run = [&] { return cmd_oracle_brute_force(g, brute); }; });

  RandomArgs random;
  auto* rn = app.add_subcommand("random", "Generate a seeded random relation");
  rn->add_option("--sizes", random.sizes, "Alphabet size per variable")
      ->required()
      ->delimiter(',');
  rn->add_option("--density", random.density, "Probability of each extra tuple")
      ->capture_default_str();
  rn->add_option("-o,--output", random.output, "Relation file to write (default stdout)");
  rn->callback([&] { run = [&] { return cmd_random(g, random); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    return run();
  } catch (const Failure& f) {
    std::cerr << "nsleak: " << f.message << '\n';
    return f.code;
  } catch (const Json::exception& e) {
    std::cerr << "nsleak: malformed library output: " << e.what() << '\n';
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "nsleak: " << e.what() << '\n';
    return kExitInternal;
  }
}
