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

#include "orbicount/characters.hpp"

#include "doctest.h"
#include "oracles.hpp"

#include <functional>
#include <string>

using namespace orbicount;

namespace {

// Counts tuples (x_1..x_k) of group elements whose word evaluates to the identity.
BigInt brute_tuple_count(const FiniteGroup &G, int k, const std::function<int(const std::vector<int> &)> &word) {
  std::vector<int> x(k, 0);
  BigInt count = 0;
  while (true) {
    if (word(x) == G.identity()) {
      ++count;
    }
    int i = 0;
    while (i < k && ++x[i] == G.order()) {
      x[i++] = 0;
    }
    if (i == k) {
      break;
    }
  }
  return count;
}

int commutator_word(const FiniteGroup &G, const std::vector<int> &x) {
  int w = G.identity();
  for (std::size_t i = 0; i + 1 < x.size(); i += 2) {
    int a = x[i];
    int b = x[i + 1];
    w = G.mul(w, G.mul(G.mul(a, b), G.mul(G.inv(a), G.inv(b))));
  }
  return w;
}

int square_word(const FiniteGroup &G, const std::vector<int> &x) {
  int w = G.identity();
  for (int a : x) {
    w = G.mul(w, G.mul(a, a));
  }
  return w;
}

std::string s3_json(const std::string &row2) {
  return R"({"name":"S3x","group":"Sn:3","field":1,"classes":[{"rep":[0,1,2],"size":1},)"
         R"({"rep":[1,0,2],"size":3},{"rep":[1,2,0],"size":2}],"rows":[["1","1","1"],)" +
         row2 + R"(,["2","0","-1"]]})";
}

} // namespace

TEST_CASE("cyclotomic arithmetic") {
  Cyclo z3 = Cyclo::zeta_power(3, 1);
  CHECK((z3 + z3 * z3) == Cyclo::rational(3, -1));
  CHECK((z3 * z3 * z3) == Cyclo::rational(3, 1));
  CHECK(z3.conjugate() == z3 * z3);
  CHECK_FALSE(z3.is_rational());

  Cyclo i = Cyclo::zeta_power(4, 1);
  CHECK((i * i) == Cyclo::rational(4, -1));
  CHECK((i * i.conjugate()).is_rational());
  CHECK((i * i.conjugate()).to_rational() == 1);

  Cyclo sum(5);
  for (int k = 0; k < 5; ++k) {
    sum = sum + Cyclo::zeta_power(5, k);
  }
  CHECK(sum == Cyclo(5));

  Cyclo z6 = Cyclo::zeta_power(6, 1);
  CHECK((z6 - Cyclo::zeta_power(6, 2)) == Cyclo::rational(6, 1));
  CHECK(Cyclo::from_coefficients(3, {make_rational(1, 2), 1, 1}) == Cyclo::rational(3, make_rational(-1, 2)));
  CHECK(Cyclo::rational(1, make_rational(3, 4)).to_string() == "3/4");
}

TEST_CASE("shipped tables load and satisfy both orthogonality relations") {
  auto names = character_table_names();
  CHECK(names.size() == 15);
  for (const auto &name : names) {
    CAPTURE(name);
    auto t = load_character_table(name);
    const FiniteGroup &G = *t.group;
    REQUIRE(t.rows.size() == static_cast<std::size_t>(G.class_count()));

    BigInt squares = 0;
    for (const auto &d : t.degrees) {
      squares += d * d;
    }
    CHECK(squares == G.order());

    int classes = static_cast<int>(t.class_reps.size());
    for (int c = 0; c < classes; ++c) {
      CHECK(G.class_sizes()[t.group_class[c]] == t.class_sizes[c]);
      Cyclo col(t.field);
      for (const auto &row : t.rows) {
        col = col + row[c] * row[c].conjugate();
      }
      REQUIRE(col.is_rational());
      CHECK(col.to_rational() * t.class_sizes[c] == G.order());
    }

    for (std::size_t a = 0; a < t.rows.size(); ++a) {
      for (std::size_t b = 0; b < t.rows.size(); ++b) {
        Cyclo inner(t.field);
        for (int c = 0; c < classes; ++c) {
          inner = inner + Cyclo::rational(t.field, t.class_sizes[c]) * t.rows[a][c] * t.rows[b][c].conjugate();
        }
        CHECK(inner == Cyclo::rational(t.field, a == b ? G.order() : 0));
      }
    }

    for (int x = 0; x < G.order(); ++x) {
      int col = table_column(t, x);
      CHECK(t.group_class[col] == G.class_of(x));
    }
  }
}

TEST_CASE("indicators agree with the involution count") {
  for (const auto &name : character_table_names()) {
    CAPTURE(name);
    auto t = load_character_table(name);
    const FiniteGroup &G = *t.group;
    auto eps = schur_indicators(t);
    Rational weighted = 0;
    for (std::size_t i = 0; i < eps.size(); ++i) {
      CHECK((eps[i] == 1 || eps[i] == 0 || eps[i] == -1));
      weighted += eps[i] * Rational(t.degrees[i]);
    }
    int roots = 0;
    for (int x = 0; x < G.order(); ++x) {
      roots += G.mul(x, x) == G.identity() ? 1 : 0;
    }
    CHECK(weighted == roots);
  }

  auto s3 = load_character_table("S3");
  CHECK(schur_indicators(s3) == std::vector<Rational>{1, 1, 1});
  auto q8 = load_character_table("Q8");
  auto eq = schur_indicators(q8);
  CHECK(std::count(eq.begin(), eq.end(), Rational(-1)) == 1);
  CHECK(std::count(eq.begin(), eq.end(), Rational(1)) == 4);
  auto z3 = load_character_table("Z3");
  auto ez = schur_indicators(z3);
  CHECK(std::count(ez.begin(), ez.end(), Rational(0)) == 2);
}

TEST_CASE("S3 worked values") {
  auto t = load_character_table("S3");
  auto c = check_surface_hom_count(t, 1);
  CHECK(c.character_side == 81);
  CHECK(c.match);
  CHECK(brute_tuple_count(*t.group, 4, [&](const std::vector<int> &x) { return commutator_word(*t.group, x); }) ==
        486);

  auto n = check_symmetric_nonorientable(t, 0);
  CHECK(n.character_side == 3);
  CHECK(n.match);
  CHECK(brute_tuple_count(*t.group, 2, [&](const std::vector<int> &x) { return square_word(*t.group, x); }) == 18);

  CHECK(degree_power_sum(t, -1) == make_rational(2, 3));
  CHECK(check_real_type(t).match);
}

TEST_CASE("character sides match brute-force tuple counts") {
  for (const auto &name : character_table_names()) {
    auto t = load_character_table(name);
    const FiniteGroup &G = *t.group;
    if (G.order() > 24) {
      continue;
    }
    CAPTURE(name);
    Rational order(G.order());
    for (int g = 0; g <= 1; ++g) {
      auto c = check_surface_hom_count(t, g);
      BigInt brute =
          brute_tuple_count(G, 2 * (g + 1), [&](const std::vector<int> &x) { return commutator_word(G, x); });
      CHECK(c.character_side == Rational(brute) / order);
      CHECK(c.match);
    }
    for (int h = -1; h <= 1; ++h) {
      BigInt brute = brute_tuple_count(G, h + 2, [&](const std::vector<int> &x) { return square_word(G, x); });
      auto ind = check_nonorientable_indicator(t, h);
      CHECK(ind.character_side == Rational(brute) / order);
      CHECK(ind.match);
    }
    // With g = 0 the product with Z is Z^3, so the count is commuting triples over |G|.
    auto cc = check_surface_class_count(t, 0);
    BigInt triples = 0;
    for (int a = 0; a < G.order(); ++a) {
      for (int b = 0; b < G.order(); ++b) {
        if (!G.commutes(a, b)) {
          continue;
        }
        for (int c = 0; c < G.order(); ++c) {
          triples += (G.commutes(a, c) && G.commutes(b, c)) ? 1 : 0;
        }
      }
    }
    CHECK(cc.character_side == Rational(triples) / order);
    CHECK(cc.match);
  }
}

TEST_CASE("symmetric tables satisfy the square-root count and real type") {
  for (int k = 1; k <= 5; ++k) {
    auto t = load_character_table("S" + std::to_string(k));
    CAPTURE(k);
    CHECK(t.group->order() == oracle::fact(k));
    CHECK(check_real_type(t).match);
    for (int h = -1; h <= 2; ++h) {
      CHECK(check_symmetric_nonorientable(t, h).match);
    }
  }
  CHECK_FALSE(check_real_type(load_character_table("Q8")).match);
  CHECK_FALSE(check_real_type(load_character_table("Z3")).match);
}

TEST_CASE("class count identity on nonabelian groups") {
  for (const char *name : {"S3", "D4", "Q8", "S4"}) {
    CAPTURE(name);
    auto t = load_character_table(name);
    for (int g = 0; g <= 1; ++g) {
      CHECK(check_surface_class_count(t, g).match);
    }
  }
}

TEST_CASE("catalog identification by element orders") {
  auto s4 = load_character_table("S4");
  std::vector<int> all(s4.group->order());
  for (int x = 0; x < s4.group->order(); ++x) {
    all[x] = x;
  }
  CHECK(identify_catalog_table(*s4.group, all) == "S4");
  for (int rep : s4.group->class_reps()) {
    const auto &C = s4.group->element_centralizer(rep);
    auto name = identify_catalog_table(*s4.group, C);
    CHECK_FALSE(name.empty());
    CHECK(load_character_table(name).group->order() == static_cast<int>(C.size()));
  }
  CHECK(load_character_table(identify_catalog_table(*s4.group, {0})).group->order() == 1);
}

TEST_CASE("malformed tables are rejected") {
  CHECK_NOTHROW(character_table_from_json(s3_json(R"(["1","-1","1"])")));
  CHECK_THROWS_AS(character_table_from_json(s3_json(R"(["1","1","1"])")), Error);
  CHECK_THROWS_AS(character_table_from_json(s3_json(R"(["1","-1","2"])")), Error);
  CHECK_THROWS_AS(character_table_from_json(s3_json(R"(["1","-1"])")), Error);
  CHECK_THROWS_AS(character_table_from_json("{\"name\":"), Error);
  CHECK_THROWS_AS(load_character_table("A7"), Error);
  CHECK_THROWS_AS(check_surface_hom_count(load_character_table("S3"), -1), Error);
  CHECK_THROWS_AS(check_symmetric_nonorientable(load_character_table("S3"), -2), Error);
}
