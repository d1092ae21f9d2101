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

#include "orbicount/presentation.hpp"

#include "json.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace orbicount {

Word free_reduce(const Word &w) {
  Word out;
  out.reserve(w.size());
  for (auto x : w) {
    if (x == 0) {
      fail_invalid("word letter 0 is not a generator");
    }
    if (!out.empty() && out.back() == -x) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  return out;
}

Word inverse_word(const Word &w) {
  Word out(w.rbegin(), w.rend());
  for (auto &x : out) {
    x = -x;
  }
  return out;
}

Word concat(const Word &a, const Word &b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return free_reduce(out);
}

Word power_word(const Word &w, int k) {
  Word base = k < 0 ? inverse_word(w) : w;
  Word out;
  for (int i = 0; i < std::abs(k); ++i) {
    out.insert(out.end(), base.begin(), base.end());
  }
  return free_reduce(out);
}

Word commutator_word(const Word &a, const Word &b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  Word ai = inverse_word(a);
  Word bi = inverse_word(b);
  out.insert(out.end(), ai.begin(), ai.end());
  out.insert(out.end(), bi.begin(), bi.end());
  return free_reduce(out);
}

std::vector<std::int64_t> exponent_sums(const Word &w, int generator_count) {
  std::vector<std::int64_t> sums(generator_count, 0);
  for (auto x : w) {
    sums.at(std::abs(x) - 1) += x > 0 ? 1 : -1;
  }
  return sums;
}

Presentation::Presentation(int generator_count, std::vector<Word> relators, std::vector<std::string> names,
                           std::string label)
    : generator_count_(generator_count), names_(std::move(names)), label_(std::move(label)) {
  if (generator_count < 0) {
    fail_invalid("negative generator count");
  }
  for (auto &r : relators) {
    Word w = free_reduce(r);
    for (auto x : w) {
      if (std::abs(x) > generator_count) {
        fail_invalid("relator letter exceeds generator count");
      }
    }
    if (!w.empty()) {
      relators_.push_back(std::move(w));
    }
  }
  if (names_.empty()) {
    for (int i = 1; i <= generator_count; ++i) {
      names_.push_back("x" + std::to_string(i));
    }
  }
  if (static_cast<int>(names_.size()) != generator_count) {
    fail_invalid("generator name count does not match generator count");
  }
}

std::string Presentation::render() const {
  std::string out = "< ";
  for (int i = 0; i < generator_count_; ++i) {
    out += (i ? ", " : "") + names_[i];
  }
  out += generator_count_ ? " | " : "| ";
  for (std::size_t r = 0; r < relators_.size(); ++r) {
    if (r) {
      out += ", ";
    }
    const Word &w = relators_[r];
    std::size_t i = 0;
    bool first = true;
    while (i < w.size()) {
      std::size_t j = i;
      while (j < w.size() && w[j] == w[i]) {
        ++j;
      }
      int run = static_cast<int>(j - i) * (w[i] > 0 ? 1 : -1);
      out += (first ? "" : " ") + names_[std::abs(w[i]) - 1];
      if (run != 1) {
        out += "^" + std::to_string(run);
      }
      first = false;
      i = j;
    }
  }
  out += relators_.empty() ? ">" : " >";
  return out;
}

std::uint64_t Presentation::hash() const {
  std::uint64_t h = 14695981039346656037ULL;
  auto mix = [&h](std::int64_t v) {
    for (int b = 0; b < 8; ++b) {
      h ^= static_cast<std::uint64_t>((v >> (8 * b)) & 0xff);
      h *= 1099511628211ULL;
    }
  };
  mix(generator_count_);
  for (const auto &r : relators_) {
    mix(static_cast<std::int64_t>(r.size()));
    for (auto x : r) {
      mix(x);
    }
  }
  return h;
}

std::vector<Word> Presentation::sorted_relators() const {
  auto out = relators_;
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<OneRelatorShape> Presentation::one_relator_shape() const {
  if (relators_.size() != 1 || generator_count_ == 0) {
    return std::nullopt;
  }
  if (generator_count_ % 2 == 0 && relators_[0] == presentation_catalog(Family::Surface, generator_count_ / 2).relators()[0]) {
    return OneRelatorShape{OneRelatorShape::Commutators, generator_count_ / 2};
  }
  if (relators_[0] == presentation_catalog(Family::Nonorientable, generator_count_).relators()[0]) {
    return OneRelatorShape{OneRelatorShape::Squares, generator_count_};
  }
  return std::nullopt;
}

namespace {

class Parser {
public:
  explicit Parser(const std::string &text) : s_(text) {}

  Presentation run() {
    skip();
    expect('<');
    skip();
    if (peek() != '|') {
      for (;;) {
        skip();
        std::size_t at = pos_;
        std::string name = identifier();
        if (index_.count(name)) {
          throw ParseError(at, "duplicate generator name '" + name + "'");
        }
        index_[name] = static_cast<int>(names_.size()) + 1;
        names_.push_back(name);
        skip();
        if (peek() == ',') {
          ++pos_;
          continue;
        }
        break;
      }
    }
    skip();
    expect('|');
    skip();
    std::vector<Word> rels;
    if (peek() != '>') {
      for (;;) {
        skip();
        rels.push_back(word());
        skip();
        if (peek() == ',') {
          ++pos_;
          continue;
        }
        break;
      }
    }
    skip();
    expect('>');
    skip();
    if (pos_ != s_.size()) {
      throw ParseError(pos_, "trailing characters after '>'");
    }
    return Presentation(static_cast<int>(names_.size()), rels, names_);
  }

private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
      ++pos_;
    }
  }

  void expect(char c) {
    if (peek() != c) {
      std::string got = pos_ < s_.size() ? std::string("'") + s_[pos_] + "'" : std::string("end of input");
      throw ParseError(pos_, std::string("expected '") + c + "', found " + got);
    }
    ++pos_;
  }

  std::string identifier() {
    if (!(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_')) {
      throw ParseError(pos_, "expected a generator name");
    }
    std::size_t start = pos_;
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') {
      ++pos_;
    }
    return s_.substr(start, pos_ - start);
  }

  int exponent() {
    std::size_t at = pos_;
    bool neg = false;
    if (peek() == '-' || peek() == '+') {
      neg = peek() == '-';
      ++pos_;
    }
    skip();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) {
      throw ParseError(pos_, "expected an integer exponent");
    }
    long long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      if (v > 1000000) {
        throw ParseError(at, "exponent too large");
      }
      ++pos_;
    }
    if (v == 0) {
      throw ParseError(at, "zero exponent");
    }
    return static_cast<int>(neg ? -v : v);
  }

  bool term_start() const {
    char c = peek();
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '[' || c == '(' || c == '1';
  }

  Word atom() {
    char c = peek();
    if (c == '[') {
      ++pos_;
      skip();
      Word a = word();
      skip();
      expect(',');
      skip();
      Word b = word();
      skip();
      expect(']');
      return commutator_word(a, b);
    }
    if (c == '(') {
      ++pos_;
      skip();
      Word a = word();
      skip();
      expect(')');
      return a;
    }
    if (c == '1') {
      ++pos_;
      return {};
    }
    std::size_t at = pos_;
    std::string name = identifier();
    auto it = index_.find(name);
    if (it == index_.end()) {
      throw ParseError(at, "unknown generator '" + name + "'");
    }
    return {it->second};
  }

  Word word() {
    if (!term_start()) {
      throw ParseError(pos_, "expected a word");
    }
    Word out;
    while (term_start()) {
      Word a = atom();
      skip();
      if (peek() == '^') {
        ++pos_;
        skip();
        a = power_word(a, exponent());
        skip();
      }
      out.insert(out.end(), a.begin(), a.end());
    }
    return free_reduce(out);
  }

  const std::string &s_;
  std::size_t pos_ = 0;
  std::vector<std::string> names_;
  std::map<std::string, int> index_;
};

} // namespace

Presentation parse_presentation(const std::string &text) { return Parser(text).run(); }

Family family_from_string(const std::string &name) {
  if (name == "free") return Family::Free;
  if (name == "surface") return Family::Surface;
  if (name == "nonorientable") return Family::Nonorientable;
  if (name == "free_abelian") return Family::FreeAbelian;
  fail_invalid("unsupported family '" + name + "'");
}

std::string family_name(Family family) {
  switch (family) {
  case Family::Free: return "free";
  case Family::Surface: return "surface";
  case Family::Nonorientable: return "nonorientable";
  case Family::FreeAbelian: return "free_abelian";
  }
  return "";
}

Presentation presentation_catalog(Family family, int size) {
  if (size < 1) {
    fail_invalid("catalog size must be at least 1");
  }
  std::vector<std::string> names;
  std::vector<Word> rels;
  int gens = size;
  switch (family) {
  case Family::Free:
    for (int i = 1; i <= size; ++i) names.push_back("x" + std::to_string(i));
    break;
  case Family::FreeAbelian:
    for (int i = 1; i <= size; ++i) names.push_back("x" + std::to_string(i));
    for (int i = 1; i <= size; ++i)
      for (int j = i + 1; j <= size; ++j) rels.push_back({i, j, -i, -j});
    break;
  case Family::Surface: {
    gens = 2 * size;
    Word r;
    for (int i = 1; i <= size; ++i) {
      names.push_back("a" + std::to_string(i));
      names.push_back("b" + std::to_string(i));
      int a = 2 * i - 1;
      int b = 2 * i;
      r.insert(r.end(), {a, b, -a, -b});
    }
    rels.push_back(r);
    break;
  }
  case Family::Nonorientable: {
    Word r;
    for (int i = 1; i <= size; ++i) {
      names.push_back("c" + std::to_string(i));
      r.insert(r.end(), {i, i});
    }
    rels.push_back(r);
    break;
  }
  }
  return Presentation(gens, rels, names, family_name(family) + "_" + std::to_string(size));
}

Presentation presentation_catalog(const std::string &family, int size) {
  return presentation_catalog(family_from_string(family), size);
}

Presentation product_with_Z(const Presentation &p) {
  int k = p.generator_count();
  std::set<std::string> used(p.names().begin(), p.names().end());
  std::string z = "z";
  for (int i = 1; used.count(z); ++i) {
    z = "z" + std::to_string(i);
  }
  auto names = p.names();
  names.push_back(z);
  auto rels = p.relators();
  for (int i = 1; i <= k; ++i) {
    rels.push_back({i, k + 1, -i, -(k + 1)});
  }
  std::string label = p.label().empty() ? std::string() : p.label() + "_x_Z";
  return Presentation(k + 1, rels, names, label);
}

Presentation product_with_Z_power(const Presentation &p, int d) {
  Presentation q = p;
  for (int i = 0; i < d; ++i) {
    q = product_with_Z(q);
  }
  return q;
}

std::string presentation_to_json(const Presentation &p) {
  nlohmann::json j;
  j["generators"] = p.names();
  j["relators"] = p.relators();
  if (!p.label().empty()) {
    j["label"] = p.label();
  }
  return j.dump();
}

Presentation presentation_from_json(const std::string &text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    throw ParseError(e.byte == 0 ? 0 : e.byte - 1, "invalid JSON presentation");
  }
  try {
    std::vector<std::string> names = j.at("generators").get<std::vector<std::string>>();
    std::vector<Word> rels = j.value("relators", std::vector<Word>{});
    std::string label = j.value("label", std::string());
    return Presentation(static_cast<int>(names.size()), rels, names, label);
  } catch (const nlohmann::json::exception &e) {
    throw ParseError(0, std::string("malformed JSON presentation: ") + e.what());
  }
}

Presentation presentation_from_spec(const std::string &spec) {
  std::size_t first = spec.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) {
    throw ParseError(0, "empty presentation");
  }
  if (spec[first] == '<') {
    return parse_presentation(spec);
  }
  if (spec[first] == '{') {
    return presentation_from_json(spec);
  }
  auto colon = spec.find(':');
  if (colon == std::string::npos) {
    throw ParseError(first, "expected 'family:size', '<...>' or JSON");
  }
  std::string fam = spec.substr(0, colon);
  std::string num = spec.substr(colon + 1);
  int size = 0;
  try {
    std::size_t used = 0;
    size = std::stoi(num, &used);
    if (used != num.size()) {
      throw std::invalid_argument(num);
    }
  } catch (const std::exception &) {
    throw ParseError(colon + 1, "expected an integer size");
  }
  if (fam == "trivial") {
    return Presentation(0, {}, {}, "trivial");
  }
  return presentation_catalog(fam, size);
}

} // namespace orbicount
