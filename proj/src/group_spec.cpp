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

#include "orbicount/group.hpp"

#include "json.hpp"

#include <cctype>

namespace orbicount {

namespace {

std::string trim(const std::string &s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) {
    return {};
  }
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

int parse_size(const std::string &s, std::size_t offset) {
  if (s.empty() || s.size() > 6) {
    throw ParseError(offset, "expected a group size");
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
      throw ParseError(offset + i, "expected a digit");
    }
  }
  return std::stoi(s);
}

GroupPtr named_group(const std::string &name) {
  if (name == "D4") {
    return FiniteGroup::from_generators(4, {{1, 2, 3, 0}, {0, 3, 2, 1}}, default_budget(), "D4");
  }
  if (name == "Q8") {
    // Regular representation on 1, i, j, k, -1, -i, -j, -k by right multiplication.
    return FiniteGroup::from_generators(8, {{1, 4, 7, 2, 5, 0, 3, 6}, {2, 3, 4, 5, 6, 7, 0, 1}}, default_budget(),
                                        "Q8");
  }
  if (name == "V4") {
    return FiniteGroup::from_generators(4, {{1, 0, 3, 2}, {2, 3, 0, 1}}, default_budget(), "V4");
  }
  return nullptr;
}

GroupPtr group_from_json(const nlohmann::json &j, const Budget &budget) {
  if (j.is_string()) {
    return group_from_spec(j.get<std::string>(), budget);
  }
  if (!j.is_object()) {
    fail_invalid("group reference must be a string or an object");
  }
  if (j.contains("wreath")) {
    const auto &w = j.at("wreath");
    return FiniteGroup::wreath(group_from_json(w.at("base"), budget), w.at("n").get<int>(), budget);
  }
  int degree = j.at("degree").get<int>();
  auto gens = j.value("generators", std::vector<Perm>{});
  for (const auto &g : gens) {
    if (static_cast<int>(g.size()) != degree || !perm_is_valid(g)) {
      fail_invalid("generator is not a permutation of the given degree");
    }
  }
  return FiniteGroup::from_generators(degree, gens, budget, j.value("name", std::string()));
}

} // namespace

GroupPtr group_from_spec(const std::string &raw, const Budget &budget) {
  std::string spec = trim(raw);
  if (spec.empty()) {
    throw ParseError(0, "empty group specification");
  }
  if (spec[0] == '{' || spec[0] == '"') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(spec);
    } catch (const nlohmann::json::parse_error &e) {
      throw ParseError(e.byte == 0 ? 0 : e.byte - 1, "invalid JSON group");
    }
    try {
      return group_from_json(j, budget);
    } catch (const nlohmann::json::exception &e) {
      throw ParseError(0, std::string("malformed JSON group: ") + e.what());
    }
  }
  if (spec == "trivial" || spec == "1") {
    return FiniteGroup::trivial();
  }
  if (auto g = named_group(spec)) {
    return g;
  }
  if (spec.rfind("wreath(", 0) == 0 && spec.back() == ')') {
    std::size_t comma = spec.rfind(',');
    if (comma == std::string::npos) {
      throw ParseError(spec.size() - 1, "expected wreath(base, n)");
    }
    auto base = group_from_spec(spec.substr(7, comma - 7), budget);
    int n = parse_size(trim(spec.substr(comma + 1, spec.size() - comma - 2)), comma + 1);
    return FiniteGroup::wreath(base, n, budget);
  }
  std::string family;
  std::string size;
  std::size_t colon = spec.find(':');
  std::size_t offset = 0;
  if (colon != std::string::npos) {
    family = spec.substr(0, colon);
    size = spec.substr(colon + 1);
    offset = colon + 1;
  } else if (spec[0] == 'Z' || spec[0] == 'S') {
    family = spec.substr(0, 1) == "Z" ? "Zn" : "Sn";
    size = spec.substr(1);
    offset = 1;
  } else {
    throw Error(ErrorKind::UnknownId, "unknown group: " + spec);
  }
  int k = parse_size(size, offset);
  if (family == "Zn" || family == "cyclic") {
    if (k < 1) {
      fail_invalid("cyclic group order must be positive");
    }
    return FiniteGroup::cyclic(k);
  }
  if (family == "Sn" || family == "symmetric") {
    if (k < 1 || factorial(k) > BigInt(static_cast<unsigned long>(budget.group_order_cap))) {
      if (k >= 1) {
        fail_budget("symmetric group exceeds the group order cap");
      }
      fail_invalid("symmetric group degree must be positive");
    }
    return FiniteGroup::symmetric(k);
  }
  throw Error(ErrorKind::UnknownId, "unknown group family: " + family);
}

} // namespace orbicount
