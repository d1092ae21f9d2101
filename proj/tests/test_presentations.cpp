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

#include "doctest.h"
#include "json.hpp"

#include <random>

using namespace orbicount;

TEST_CASE("parser examples") {
  auto p = parse_presentation("< a, b | [a,b] >");
  CHECK(p.generator_count() == 2);
  REQUIRE(p.relators().size() == 1);
  CHECK(p.relators()[0] == Word{1, 2, -1, -2});

  auto k = parse_presentation("< c1, c2 | c1^2 c2^2 >");
  CHECK(k.relators() == std::vector<Word>{{1, 1, 2, 2}});
  CHECK(k == presentation_catalog(Family::Nonorientable, 2));

  auto r = parse_presentation("< a | a a^-1 >");
  CHECK(r.generator_count() == 1);
  CHECK(r.relators().empty());

  auto q = parse_presentation("<x,y|x^3, y^-2 x, [x, y^2]>");
  CHECK(q.relators() == std::vector<Word>{{1, 1, 1}, {-2, -2, 1}, {1, 2, 2, -1, -2, -2}});
}

TEST_CASE("parser errors carry positions") {
  auto position_of = [](const std::string &text) -> long {
    try {
      parse_presentation(text);
    } catch (const ParseError &e) {
      return static_cast<long>(e.position());
    }
    return -1;
  };
  CHECK(position_of("< a, b | a c >") == 11);
  CHECK(position_of("< a | a^0 >") >= 6);
  CHECK(position_of("< a, b | a b") >= 0);
  CHECK(position_of("a, b | a") == 0);
  CHECK(position_of("< a, a | a >") >= 0);
  CHECK_THROWS_AS(parse_presentation("< a | [a] >"), ParseError);
}

TEST_CASE("catalog families") {
  auto s2 = presentation_catalog(Family::Surface, 2);
  CHECK(s2.generator_count() == 4);
  CHECK(s2.relators() == std::vector<Word>{{1, 2, -1, -2, 3, 4, -3, -4}});
  auto z1 = presentation_catalog(Family::FreeAbelian, 1);
  CHECK(z1.generator_count() == 1);
  CHECK(z1.relators().empty());
  auto z3 = presentation_catalog(Family::FreeAbelian, 3);
  CHECK(z3.relators().size() == 3);
  auto f3 = presentation_catalog(Family::Free, 3);
  CHECK(f3.generator_count() == 3);
  CHECK(f3.relators().empty());
  auto n3 = presentation_catalog(Family::Nonorientable, 3);
  CHECK(n3.relators() == std::vector<Word>{{1, 1, 2, 2, 3, 3}});
  CHECK(presentation_catalog("surface", 1) == parse_presentation("<a,b|[a,b]>"));
  CHECK_THROWS_AS(presentation_catalog(Family::Free, 0), Error);
  CHECK_THROWS_AS(presentation_catalog("torus", 1), Error);
  for (auto f : {Family::Free, Family::Surface, Family::Nonorientable, Family::FreeAbelian}) {
    CHECK(family_from_string(family_name(f)) == f);
  }
}

TEST_CASE("one-relator shapes") {
  auto s = presentation_catalog(Family::Surface, 3).one_relator_shape();
  REQUIRE(s);
  CHECK(s->kind == OneRelatorShape::Commutators);
  CHECK(s->count == 3);
  auto n = presentation_catalog(Family::Nonorientable, 4).one_relator_shape();
  REQUIRE(n);
  CHECK(n->kind == OneRelatorShape::Squares);
  CHECK(n->count == 4);
  CHECK_FALSE(presentation_catalog(Family::FreeAbelian, 3).one_relator_shape());
  CHECK_FALSE(parse_presentation("<a,b|[b,a]>").one_relator_shape());
}

TEST_CASE("product with Z") {
  auto z2 = product_with_Z(presentation_catalog(Family::Free, 1));
  CHECK(z2.generator_count() == 2);
  CHECK(z2.relators().size() == 1);
  auto k = product_with_Z(presentation_catalog(Family::Nonorientable, 2));
  CHECK(k.generator_count() == 3);
  CHECK(k.sorted_relators() ==
        Presentation(3, {{1, 1, 2, 2}, {1, 3, -1, -3}, {2, 3, -2, -3}}).sorted_relators());
  for (int d = 1; d <= 4; ++d) {
    auto a = product_with_Z(presentation_catalog(Family::FreeAbelian, d));
    auto b = presentation_catalog(Family::FreeAbelian, d + 1);
    CHECK(a.generator_count() == b.generator_count());
    CHECK(a.sorted_relators() == b.sorted_relators());
  }
  auto s = presentation_catalog(Family::Surface, 2);
  auto sz = product_with_Z(s);
  CHECK(sz.generator_count() == s.generator_count() + 1);
  CHECK(sz.relators().size() == s.relators().size() + static_cast<std::size_t>(s.generator_count()));
  CHECK(product_with_Z_power(s, 2) == product_with_Z(product_with_Z(s)));
}

TEST_CASE("render and parse round trip") {
  std::vector<Presentation> ps{presentation_catalog(Family::Surface, 2), presentation_catalog(Family::Nonorientable, 3),
                               presentation_catalog(Family::FreeAbelian, 3), presentation_catalog(Family::Free, 2),
                               parse_presentation("<x,y|x^3, y^-2 x>")};
  for (const auto &p : ps) {
    CHECK(parse_presentation(p.render()) == p);
    CHECK(presentation_from_json(presentation_to_json(p)) == p);
    CHECK(presentation_from_spec(p.render()) == p);
  }
  CHECK(presentation_from_spec("surface:2") == ps[0]);
}

TEST_CASE("JSON schema") {
  auto p = presentation_from_json(R"({"generators": ["a","b"], "relators": [[1,2,-1,-2]], "label": "surface_1"})");
  CHECK(p.generator_count() == 2);
  CHECK(p.label() == "surface_1");
  CHECK(p.relators() == std::vector<Word>{{1, 2, -1, -2}});
  auto j = nlohmann::json::parse(presentation_to_json(p));
  CHECK(j["generators"].size() == 2);
  CHECK(j["relators"][0] == nlohmann::json::array({1, 2, -1, -2}));
  CHECK_THROWS_AS(presentation_from_json(R"({"generators": ["a"], "relators": [[2]]})"), Error);
  CHECK_THROWS_AS(presentation_from_json(R"({"generators": ["a"], "relators": [[0]]})"), Error);
  CHECK_THROWS_AS(presentation_from_json("{"), Error);
}

TEST_CASE("free reduction") {
  CHECK(free_reduce({1, -1}).empty());
  CHECK(free_reduce({1, 2, -2, -1, 3}) == Word{3});
  CHECK(free_reduce({-1, 1, 1}) == Word{1});
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> letter(-3, 3), len(0, 20);
  for (int t = 0; t < 200; ++t) {
    Word w;
    int n = len(rng);
    for (int i = 0; i < n; ++i) {
      int x = letter(rng);
      if (x != 0) w.push_back(x);
    }
    auto r = free_reduce(w);
    CHECK(r.size() <= w.size());
    CHECK(free_reduce(r) == r);
    for (std::size_t i = 1; i < r.size(); ++i) CHECK(r[i] != -r[i - 1]);
    CHECK(free_reduce(concat(w, inverse_word(w))).empty());
    auto e = exponent_sums(w, 3);
    auto er = exponent_sums(r, 3);
    CHECK(e == er);
  }
  CHECK(commutator_word({1}, {2}) == Word{1, 2, -1, -2});
  CHECK(power_word({1, 2}, -2) == Word{-2, -1, -2, -1});
}
