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

#include "orbicount/orbicount.h"

#include "orbicount/bundles.hpp"
#include "orbicount/characters.hpp"
#include "orbicount/homs.hpp"
#include "orbicount/identities.hpp"
#include "orbicount/subgroups.hpp"

#include "json.hpp"

#include <cstring>
#include <new>
#include <regex>
#include <set>

struct oc_presentation {
  orbicount::Presentation value;
};

struct oc_group {
  orbicount::GroupPtr value;
};

struct oc_budget {
  orbicount::Budget value;
};

namespace {

using namespace orbicount;
using Json = nlohmann::ordered_json;

thread_local std::string last_error;

oc_status status_of(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::Parse: return OC_ERR_PARSE;
  case ErrorKind::Invalid: return OC_ERR_INVALID;
  case ErrorKind::Budget: return OC_ERR_BUDGET;
  case ErrorKind::Io: return OC_ERR_IO;
  case ErrorKind::UnknownId: return OC_ERR_UNKNOWN_ID;
  case ErrorKind::Internal: return OC_ERR_INTERNAL;
  }
  return OC_ERR_INTERNAL;
}

template <typename F> oc_status guarded(F &&f) {
  try {
    f();
    last_error.clear();
    return OC_OK;
  } catch (const Error &e) {
    last_error = e.what();
    return status_of(e.kind());
  } catch (const nlohmann::json::exception &e) {
    last_error = std::string("malformed request: ") + e.what();
    return OC_ERR_PARSE;
  } catch (const std::bad_alloc &) {
    last_error = "out of memory";
    return OC_ERR_BUDGET;
  } catch (const std::exception &e) {
    last_error = e.what();
    return OC_ERR_INTERNAL;
  }
}

char *copy_string(const std::string &s) {
  char *out = static_cast<char *>(std::malloc(s.size() + 1));
  if (!out) {
    throw std::bad_alloc();
  }
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(const void *p) {
  if (!p) {
    throw Error(ErrorKind::Invalid, "null argument");
  }
}

const Budget &budget_of(const oc_budget *b) { return b ? b->value : default_budget(); }

std::uint64_t *budget_field(Budget &b, const std::string &key) {
  if (key == "group_order_cap") return &b.group_order_cap;
  if (key == "table_cap") return &b.table_cap;
  if (key == "convolution_cap") return &b.convolution_cap;
  if (key == "hom_nodes") return &b.hom_nodes;
  if (key == "lowindex_nodes") return &b.lowindex_nodes;
  if (key == "orbit_cap") return &b.orbit_cap;
  if (key == "centralizer_cap") return &b.centralizer_cap;
  if (key == "wreath_cap") return &b.wreath_cap;
  throw Error(ErrorKind::UnknownId, "unknown budget key '" + key + "'");
}

Json parse_request(const char *text) {
  require(text);
  try {
    Json j = Json::parse(text);
    if (!j.is_object()) {
      throw ParseError(0, "request must be a JSON object");
    }
    return j;
  } catch (const nlohmann::json::parse_error &e) {
    throw ParseError(e.byte == 0 ? 0 : e.byte - 1, "invalid request JSON");
  }
}

std::string spec_field(const Json &j, const char *key, const std::string &fallback = {}) {
  if (!j.contains(key)) {
    if (fallback.empty()) {
      throw Error(ErrorKind::Invalid, std::string("request needs '") + key + "'");
    }
    return fallback;
  }
  const auto &v = j.at(key);
  return v.is_string() ? v.get<std::string>() : v.dump();
}

std::string big(const BigInt &x) { return x.get_str(); }

Json invariants_json(const AbelianInvariants &inv) {
  Json torsion = Json::array();
  for (const auto &t : inv.torsion) torsion.push_back(big(t));
  return {{"free_rank", inv.free_rank}, {"torsion", torsion}};
}

Json census_json(const Json &req, const Budget &budget) {
  Presentation p = presentation_from_spec(spec_field(req, "presentation"));
  int N = req.value("max_index", 4);
  CensusOptions opts;
  if (req.contains("cache_dir")) {
    opts.cache_dir = resolve_cache_dir(req.at("cache_dir").get<std::string>());
  }
  opts.cross_check = false;
  CensusTable t = census(p, N, opts, budget);
  Json out;
  out["presentation"] = p.render();
  out["max_index"] = N;
  Json rows = Json::array();
  for (int r = 1; r <= N; ++r) {
    Json row{{"r", r}, {"j", big(t.j[r])}, {"u", big(t.u[r])}};
    if (t.j_plus) {
      row["j_plus"] = big((*t.j_plus)[r]);
      row["j_minus"] = big((*t.j_minus)[r]);
    }
    rows.push_back(row);
  }
  out["rows"] = rows;
  if (req.value("verify", false)) {
    Json checks = Json::array();
    bool passed = true;
    VerifyParams vp;
    vp.gamma = spec_field(req, "presentation");
    vp.N = N;
    vp.cache_dir = opts.cache_dir;
    IdentityReport rep = verify("8-1", vp, budget);
    checks.push_back({{"name", "subgroups_of_product_with_Z"}, {"passed", rep.passed()}, {"truncated", rep.truncated}});
    passed = passed && rep.passed();
    try {
      auto j = census_from_homcounts(p, N, budget);
      bool same = true;
      Json values = Json::array();
      for (int r = 1; r <= N; ++r) {
        values.push_back(big(j[r]));
        same = same && j[r] == t.j[r];
      }
      checks.push_back({{"name", "hom_series"}, {"passed", same}, {"values", values}});
      passed = passed && same;
    } catch (const Error &e) {
      if (e.kind() != ErrorKind::Budget) {
        throw;
      }
      checks.push_back({{"name", "hom_series"}, {"skipped", e.what()}});
    }
    out["verify"] = {{"checks", checks}, {"passed", passed}};
  }
  return out;
}

GroupPtr target_group(const Json &req, const Budget &budget, const char *n_key) {
  GroupPtr G = group_from_spec(spec_field(req, "group", "trivial"), budget);
  if (req.contains(n_key) && !req.at(n_key).is_null()) {
    int n = req.at(n_key).get<int>();
    if (n < 0) {
      throw Error(ErrorKind::Invalid, "wreath degree must be non-negative");
    }
    if (n == 0) {
      return FiniteGroup::trivial();
    }
    return FiniteGroup::wreath(G, n, budget);
  }
  return G;
}

Json homcount_json(const Json &req, const Budget &budget) {
  Presentation p = presentation_from_spec(spec_field(req, "presentation"));
  GroupPtr T = target_group(req, budget, "wreath_n");
  BigInt homs = count_homs(p, *T, budget);
  BigInt classes = static_cast<unsigned long>(hom_classes(p, *T, budget).size());
  BigInt ext = count_homs(product_with_Z(p), *T, budget);
  Rational ratio = make_rational(ext, BigInt(T->order()));
  Json out;
  out["presentation"] = p.render();
  out["target"] = T->name();
  out["target_order"] = T->order();
  out["hom_count"] = big(homs);
  out["class_count"] = big(classes);
  out["product_with_Z_ratio"] = rational_to_string(ratio);
  out["passed"] = ratio == Rational(classes);
  return out;
}

std::vector<int> parse_theta(const Json &images, const FiniteGroup &W) {
  const WreathCodec *codec = W.codec();
  std::vector<int> theta;
  for (const auto &im : images) {
    if (im.is_number_integer()) {
      int x = im.get<int>();
      if (x < 0 || x >= W.order()) {
        throw Error(ErrorKind::Invalid, "wreath element id out of range");
      }
      theta.push_back(x);
    } else {
      if (!codec) {
        throw Error(ErrorKind::Invalid, "element objects need a wreath product target");
      }
      auto f = im.at("f").get<std::vector<int>>();
      auto sigma = im.at("sigma").get<Perm>();
      if (static_cast<int>(f.size()) != codec->degree() || static_cast<int>(sigma.size()) != codec->degree() ||
          !perm_is_valid(sigma)) {
        throw Error(ErrorKind::Invalid, "element object has the wrong degree");
      }
      for (int v : f) {
        if (v < 0 || v >= codec->base()->order()) {
          throw Error(ErrorKind::Invalid, "base element id out of range");
        }
      }
      theta.push_back(codec->encode(f, sigma));
    }
  }
  return theta;
}

Json bundle_dump(const Presentation &p, const GroupPtr &W, const std::vector<int> &theta, BundleClassifier &classifier,
                 const Budget &budget, bool &passed) {
  if (!is_homomorphism(p, *W, theta)) {
    throw Error(ErrorKind::Invalid, "theta is not a homomorphism");
  }
  BundleDecomposition d = decompose(p, W, theta, &classifier);
  const FiniteGroup &base = *W->codec()->base();
  Json out;
  Json labels = Json::array();
  for (int x : theta) {
    std::string label = W->element_label(x);
    labels.push_back(Json::accept(label) ? Json::parse(label) : Json(label));
  }
  out["theta"] = theta;
  out["theta_labels"] = labels;
  Json comps = Json::array();
  for (std::size_t i = 0; i < d.components.size(); ++i) {
    const auto &c = d.components[i];
    comps.push_back({{"orbit", c.orbit},
                     {"base_point", c.base_point},
                     {"index", c.isotropy->index()},
                     {"abelian_invariants", invariants_json(c.isotropy->abelian_invariants())},
                     {"schreier_generators", c.isotropy->schreier_generators().size()},
                     {"rho", c.rho}});
  }
  out["components"] = comps;
  Json classes = Json::array();
  for (const auto &[key, mult] : d.grouped) {
    auto rec = classifier.record(key.table);
    AutData a = aut_data(*rec, base, key.rho);
    classes.push_back({{"table", Json::parse(key.table.to_json())},
                       {"abelian_invariants", invariants_json(rec->abelian_invariants())},
                       {"rho", key.rho},
                       {"multiplicity", mult},
                       {"aut_order", big(a.aut_order)},
                       {"normalizer_quotient", a.n_rho_quotient_order},
                       {"centralizer_of_rho", a.c_g_rho_order}});
  }
  out["classes"] = classes;
  BigInt structural = centralizer_order_structural(d);
  out["centralizer_structural"] = big(structural);
  try {
    auto brute = brute_centralizer(W, theta, budget);
    bool match = BigInt(static_cast<unsigned long>(brute.size())) == structural;
    out["centralizer_brute"] = std::to_string(brute.size());
    out["match"] = match;
    passed = passed && match;
  } catch (const Error &e) {
    if (e.kind() != ErrorKind::Budget) {
      throw;
    }
    out["centralizer_brute"] = nullptr;
    out["note"] = e.what();
  }
  return out;
}

Json bundles_json(const Json &req, const Budget &budget) {
  Presentation p = presentation_from_spec(spec_field(req, "presentation"));
  GroupPtr G = group_from_spec(spec_field(req, "group", "trivial"), budget);
  int n = req.value("n", 1);
  if (n < 1) {
    throw Error(ErrorKind::Invalid, "bundle degree must be at least 1");
  }
  GroupPtr W = FiniteGroup::wreath(G, n, budget);
  BundleClassifier classifier(p, G, budget);
  Json out;
  out["presentation"] = p.render();
  out["wreath"] = W->name();
  out["wreath_order"] = W->order();
  bool passed = true;
  Json homs = Json::array();
  if (req.value("all", false)) {
    auto classes = hom_classes(p, *W, budget);
    std::set<std::map<ClassificationKey, int>> distinct;
    for (const auto &hc : classes) {
      Json h = bundle_dump(p, W, hc.representative.images, classifier, budget, passed);
      h["class_size"] = hc.orbit_size;
      homs.push_back(h);
      distinct.insert(decompose(p, W, hc.representative.images, &classifier).grouped);
    }
    bool bij = distinct.size() == classes.size();
    out["hom_classes"] = classes.size();
    out["distinct_classifications"] = distinct.size();
    out["bijection"] = bij;
    passed = passed && bij;
  } else {
    if (!req.contains("theta")) {
      throw Error(ErrorKind::Invalid, "request needs 'theta' or 'all'");
    }
    Json t = req.at("theta");
    if (t.is_string()) {
      t = Json::parse(t.get<std::string>());
    }
    std::vector<Json> list;
    if (!t.empty() && t.at(0).is_array()) {
      for (const auto &x : t) list.push_back(x);
    } else {
      list.push_back(t);
    }
    for (const auto &images : list) {
      auto theta = parse_theta(images, *W);
      if (static_cast<int>(theta.size()) != p.generator_count()) {
        throw Error(ErrorKind::Invalid, "theta needs one image per generator");
      }
      homs.push_back(bundle_dump(p, W, theta, classifier, budget, passed));
    }
  }
  out["homs"] = homs;
  out["passed"] = passed;
  return out;
}

Json check_json(const CharacterCheck &c) {
  Json j{{"check", c.check},
         {"table", c.table},
         {"parameter", c.parameter},
         {"character_side", rational_to_string(c.character_side)},
         {"oracle_side", rational_to_string(c.oracle_side)},
         {"oracle", c.oracle},
         {"match", c.match}};
  if (!c.values.empty()) {
    Json v = Json::array();
    for (const auto &x : c.values) v.push_back(rational_to_string(x));
    j["values"] = v;
  }
  return j;
}

bool symmetric_table(const CharacterTable &t) { return std::regex_match(t.name, std::regex("S[0-9]+")); }

Json characters_json(const Json &req, const Budget &budget) {
  std::vector<CharacterTable> tables;
  if (req.contains("table_json")) {
    tables.push_back(character_table_from_json(spec_field(req, "table_json"), budget));
  } else {
    std::string name = req.value("table", std::string("all"));
    if (name == "all") {
      for (const auto &n : character_table_names()) tables.push_back(load_character_table(n));
    } else {
      tables.push_back(load_character_table(name));
    }
  }
  std::string which = req.value("check", std::string("all"));
  static const std::set<std::string> known{"all", "none", "eq_1_15_first", "eq_1_15_second", "eq_5_16", "eq_5_17",
                                           "epsilon2"};
  if (!known.count(which)) {
    throw Error(ErrorKind::UnknownId, "unknown character check '" + which + "'");
  }
  std::vector<int> custom;
  if (req.contains("params")) custom = req.at("params").get<std::vector<int>>();
  auto params = [&](std::vector<int> fallback) { return custom.empty() ? fallback : custom; };
  Json out;
  Json tj = Json::array();
  Json checks = Json::array();
  bool passed = true;
  auto run = [&](const CharacterCheck &c) {
    checks.push_back(check_json(c));
    passed = passed && c.match;
  };
  for (const auto &t : tables) {
    Json degrees = Json::array();
    for (const auto &d : t.degrees) degrees.push_back(big(d));
    Json eps = Json::array();
    for (const auto &e : schur_indicators(t)) eps.push_back(rational_to_string(e));
    tj.push_back({{"name", t.name},
                  {"order", t.group->order()},
                  {"classes", t.class_reps.size()},
                  {"field", t.field},
                  {"degrees", degrees},
                  {"orthogonality", true},
                  {"schur_indicators", eps}});
    bool all = which == "all";
    if (all || which == "eq_1_15_first") {
      for (int g : params({0, 1, 2})) run(check_surface_hom_count(t, g));
    }
    if (all || which == "eq_1_15_second") {
      for (int g : params({0, 1})) run(check_surface_class_count(t, g));
    }
    if ((all && symmetric_table(t)) || which == "eq_5_16") {
      if (!symmetric_table(t)) {
        throw Error(ErrorKind::Invalid, "eq_5_16 applies to symmetric group tables");
      }
      for (int h : params({-1, 0, 1, 2})) run(check_symmetric_nonorientable(t, h));
    }
    if (all || which == "eq_5_17") {
      for (int h : params({-1, 0, 1, 2})) run(check_nonorientable_indicator(t, h));
    }
    if ((all && symmetric_table(t)) || which == "epsilon2") {
      run(check_real_type(t));
    }
  }
  out["tables"] = tj;
  out["checks"] = checks;
  out["passed"] = passed;
  return out;
}

template <typename Build> oc_status json_call(const char *request, const oc_budget *budget, char **out, Build build) {
  return guarded([&] {
    require(out);
    *out = nullptr;
    Json req = parse_request(request);
    *out = copy_string(build(req, budget_of(budget)).dump(2));
  });
}

} // namespace

extern "C" {

const char *oc_last_error(void) { return last_error.c_str(); }

const char *oc_status_name(oc_status status) {
  switch (status) {
  case OC_OK: return "ok";
  case OC_ERR_PARSE: return "parse error";
  case OC_ERR_INVALID: return "invalid argument";
  case OC_ERR_BUDGET: return "budget exceeded";
  case OC_ERR_IO: return "io error";
  case OC_ERR_UNKNOWN_ID: return "unknown id";
  case OC_ERR_INTERNAL: return "internal error";
  case OC_ERR_NULL_ARGUMENT: return "null argument";
  }
  return "unknown status";
}

const char *oc_version(void) { return "1.0.0"; }

void oc_string_free(char *s) { std::free(s); }

oc_status oc_budget_new(oc_budget **out) {
  if (!out) return OC_ERR_NULL_ARGUMENT;
  return guarded([&] { *out = new oc_budget{default_budget()}; });
}

oc_status oc_budget_set(oc_budget *budget, const char *key, uint64_t value) {
  if (!budget || !key) return OC_ERR_NULL_ARGUMENT;
  return guarded([&] {
    if (value == 0) {
      throw Error(ErrorKind::Invalid, "budgets must be positive");
    }
    *budget_field(budget->value, key) = value;
  });
}

oc_status oc_budget_get(const oc_budget *budget, const char *key, uint64_t *value) {
  if (!budget || !key || !value) return OC_ERR_NULL_ARGUMENT;
  return guarded([&] {
    Budget copy = budget->value;
    *value = *budget_field(copy, key);
  });
}

void oc_budget_free(oc_budget *budget) { delete budget; }

oc_status oc_presentation_parse(const char *spec, oc_presentation **out) {
  if (!spec || !out) return OC_ERR_NULL_ARGUMENT;
  return guarded([&] { *out = new oc_presentation{presentation_from_spec(spec)}; });
}

oc_status oc_presentation_render(const oc_presentation *p, char **out) {
  if (!p || !out) return OC_ERR_NULL_ARGUMENT;
  return guarded([&] { *out = copy_string(p->value.render()); });
}

oc_status oc_presentation_generator_count(const oc_presentation *p, int *out) {
  if (!p || !out) return OC_ERR_NULL_ARGUMENT;
  *out = p->value.generator_count();
  return OC_OK;
}

oc_status oc_presentation_product_with_z(const oc_presentation *p, oc_presentation **out) {
  if (!p || !out) return OC_ERR_NULL_ARGUMENT;
  return guarded([&] { *out = new oc_presentation{product_with_Z(p->value)}; });
}

void oc_presentation_free(oc_presentation *p) { delete p; }

oc_status oc_group_from_spec(const char *spec, const oc_budget *budget, oc_group **out) {
  if (!spec || !out) return OC_ERR_NULL_ARGUMENT;
  return guarded([&] { *out = new oc_group{group_from_spec(spec, budget_of(budget))}; });
}

oc_status oc_group_wreath(const oc_group *base, int n, const oc_budget *budget, oc_group **out) {
  if (!base || !out) return OC_ERR_NULL_ARGUMENT;
  return guarded([&] {
    if (n < 0) {
      throw Error(ErrorKind::Invalid, "wreath degree must be non-negative");
    }
    *out = new oc_group{n == 0 ? FiniteGroup::trivial() : FiniteGroup::wreath(base->value, n, budget_of(budget))};
  });
}

oc_status oc_group_order(const oc_group *g, uint64_t *out) {
  if (!g || !out) return OC_ERR_NULL_ARGUMENT;
  *out = static_cast<uint64_t>(g->value->order());
  return OC_OK;
}

oc_status oc_group_class_count(const oc_group *g, int *out) {
  if (!g || !out) return OC_ERR_NULL_ARGUMENT;
  *out = g->value->class_count();
  return OC_OK;
}

void oc_group_free(oc_group *g) { delete g; }

oc_status oc_hom_count(const oc_presentation *p, const oc_group *g, const oc_budget *budget, char **out) {
  if (!p || !g || !out) return OC_ERR_NULL_ARGUMENT;
  return guarded([&] { *out = copy_string(count_homs(p->value, *g->value, budget_of(budget)).get_str()); });
}

oc_status oc_census(const char *request_json, const oc_budget *budget, char **out_json) {
  if (!request_json || !out_json) return OC_ERR_NULL_ARGUMENT;
  return json_call(request_json, budget, out_json, census_json);
}

oc_status oc_homcount(const char *request_json, const oc_budget *budget, char **out_json) {
  if (!request_json || !out_json) return OC_ERR_NULL_ARGUMENT;
  return json_call(request_json, budget, out_json, homcount_json);
}

oc_status oc_bundles(const char *request_json, const oc_budget *budget, char **out_json) {
  if (!request_json || !out_json) return OC_ERR_NULL_ARGUMENT;
  return json_call(request_json, budget, out_json, bundles_json);
}

oc_status oc_verify(const char *request_json, const oc_budget *budget, char **out_json) {
  if (!request_json || !out_json) return OC_ERR_NULL_ARGUMENT;
  return guarded([&] {
    *out_json = nullptr;
    Json req = parse_request(request_json);
    std::string id = req.at("id").get<std::string>();
    std::string params = req.contains("params") ? req.at("params").dump() : std::string("{}");
    VerifyParams vp = VerifyParams::from_json(params);
    if (req.contains("cache_dir")) {
      vp.cache_dir = resolve_cache_dir(req.at("cache_dir").get<std::string>());
    }
    IdentityReport r = verify(id, vp, budget_of(budget));
    *out_json = copy_string(r.to_json(req.value("timing", false)));
  });
}

oc_status oc_characters(const char *request_json, const oc_budget *budget, char **out_json) {
  if (!request_json || !out_json) return OC_ERR_NULL_ARGUMENT;
  return json_call(request_json, budget, out_json, characters_json);
}

oc_status oc_identity_ids(char **out_json) {
  if (!out_json) return OC_ERR_NULL_ARGUMENT;
  return guarded([&] { *out_json = copy_string(Json(identity_ids()).dump()); });
}

} // extern "C"
