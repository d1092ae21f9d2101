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

#include "orbicount/homs.hpp"

#include "doctest.h"
#include "oracles.hpp"

#include <random>

using namespace orbicount;

namespace {

// Brute-force |Hom| over all generator tuples with explicit relator evaluation.
BigInt brute_hom_count(const Presentation &p, const FiniteGroup &G) {
  int k = p.generator_count();
  std::vector<int> images(k, 0);
  BigInt count = 0;
  while (true) {
    bool ok = true;
    for (const auto &r : p.relators()) {
      int x = G.identity();
      for (int letter : r) {
        int g = images[std::abs(letter) - 1];
        x = G.mul(x, letter > 0 ? g : G.inv(g));
      }
      ok = ok && x == G.identity();
    }
    if (ok) ++count;
    int i = 0;
    while (i < k && ++images[i] == G.order()) images[i++] = 0;
    if (i == k) break;
  }
  return count;
}

} // namespace

TEST_CASE("closure of permutation generators") {
  auto c3 = FiniteGroup::from_generators(3, {{1, 2, 0}});
  CHECK(c3->order() == 3);
  auto s3 = FiniteGroup::from_generators(3, {{1, 0, 2}, {1, 2, 0}});
  CHECK(s3->order() == 6);
  CHECK(s3->class_count() == 3);
  auto sizes = s3->class_sizes();
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<int>{1, 2, 3});
  auto t = FiniteGroup::from_generators(4, {});
  CHECK(t->order() == 1);
  Budget small;
  small.group_order_cap = 100;
  CHECK_THROWS_AS(FiniteGroup::from_generators(5, {{1, 0, 2, 3, 4}, {1, 2, 3, 4, 0}}, small), Error);
  CHECK_THROWS_AS(FiniteGroup::from_generators(3, {{0, 0, 1}}), Error);
}

TEST_CASE("group axioms and class data") {
  for (const auto &spec : {"S4", "Zn:6", "D4", "Q8", "V4", "Sn:3"}) {
    auto G = group_from_spec(spec);
    int n = G->order();
    int total = 0;
    for (int s : G->class_sizes()) {
      CHECK(n % s == 0);
      total += s;
    }
    CHECK(total == n);
    for (int a = 0; a < n; ++a) {
      CHECK(G->mul(a, G->identity()) == a);
      CHECK(G->mul(a, G->inv(a)) == G->identity());
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) CHECK(G->mul(G->mul(a, b), c) == G->mul(a, G->mul(b, c)));
      CHECK(G->conj(G->class_transversal(a), G->class_reps()[G->class_of(a)]) == a);
    }
  }
  CHECK(group_from_spec("trivial")->order() == 1);
  CHECK(group_from_spec("Zn:5")->order() == 5);
  CHECK(group_from_spec("Sn:4")->order() == 24);
  CHECK(group_from_spec(R"({"degree": 4, "generators": [[1,0,3,2],[2,3,0,1]]})")->order() == 4);
  CHECK_THROWS_AS(group_from_spec("Zn:0"), Error);
  CHECK_THROWS_AS(group_from_spec("GL2"), Error);
}

TEST_CASE("wreath products") {
  auto Z2 = FiniteGroup::cyclic(2);
  auto W = FiniteGroup::wreath(Z2, 3);
  CHECK(W->order() == 48);
  auto W2 = FiniteGroup::wreath(Z2, 2);
  const WreathCodec &c = *W2->codec();
  int a = c.encode({1, 0}, {1, 0});
  int sq = W2->mul(a, a);
  CHECK(c.f_vector(sq) == std::vector<int>{1, 1});
  CHECK(c.sigma(sq) == Perm{0, 1});
  CHECK(FiniteGroup::wreath(group_from_spec("S3"), 4)->order() == 31104);
  Budget small;
  small.wreath_cap = 1000;
  CHECK_THROWS_AS(FiniteGroup::wreath(group_from_spec("S3"), 4, small), Error);
  CHECK(FiniteGroup::wreath(Z2, 1)->order() == 2);
}

TEST_CASE("wreath product law, associativity and projection") {
  std::mt19937 rng(23);
  for (const auto &spec : {"Zn:2", "Zn:3", "S3"}) {
    auto G = group_from_spec(spec);
    for (int n = 1; n <= 4; ++n) {
      if (std::pow(G->order(), n) * oracle::fact(n).get_ui() > 40000) continue;
      auto W = FiniteGroup::wreath(G, n);
      const WreathCodec &c = *W->codec();
      std::uniform_int_distribution<int> pick(0, W->order() - 1);
      for (int t = 0; t < 200; ++t) {
        int x = pick(rng), y = pick(rng), z = pick(rng);
        CHECK(W->mul(W->mul(x, y), z) == W->mul(x, W->mul(y, z)));
        int xy = W->mul(x, y);
        CHECK(c.sigma(xy) == perm_compose(c.sigma(x), c.sigma(y)));
        auto fx = c.f_vector(x), fy = c.f_vector(y), fxy = c.f_vector(xy);
        auto sinv = perm_inverse(c.sigma(x));
        for (int l = 0; l < n; ++l) CHECK(fxy[l] == G->mul(fx[l], fy[sinv[l]]));
        CHECK(c.encode(c.f_vector(x), c.sigma(x)) == x);
      }
    }
  }
}

TEST_CASE("f-component cocycle on random homomorphisms") {
  std::mt19937 rng(29);
  auto Gamma = presentation_catalog(Family::FreeAbelian, 2);
  auto W = FiniteGroup::wreath(FiniteGroup::cyclic(2), 3);
  const WreathCodec &c = *W->codec();
  auto homs = HomEnumerator(Gamma, *W).list();
  std::uniform_int_distribution<std::size_t> pick(0, homs.size() - 1);
  std::uniform_int_distribution<int> letter(-2, 2), len(1, 6);
  auto random_word = [&] {
    Word w;
    int n = len(rng);
    while (static_cast<int>(w.size()) < n) {
      int x = letter(rng);
      if (x) w.push_back(x);
    }
    return w;
  };
  for (int t = 0; t < 100; ++t) {
    const auto &theta = homs[pick(rng)];
    Word u1 = random_word(), u2 = random_word();
    int a = evaluate_word(*W, u1, theta), b = evaluate_word(*W, u2, theta);
    int ab = evaluate_word(*W, concat(u1, u2), theta);
    auto sinv = perm_inverse(c.sigma(a));
    for (int l = 0; l < 3; ++l) CHECK(c.f_vector(ab)[l] == c.base()->mul(c.f_vector(a)[l], c.f_vector(b)[sinv[l]]));
  }
}

TEST_CASE("homomorphism enumeration against brute force") {
  auto S3 = FiniteGroup::symmetric(3);
  auto Z2sq = presentation_catalog(Family::FreeAbelian, 2);
  CHECK(count_homs(Z2sq, *S3) == 18);
  CHECK(brute_hom_count(Z2sq, *S3) == 18);
  CHECK(count_homs(presentation_catalog(Family::Nonorientable, 2), *S3) == 18);
  CHECK(brute_hom_count(presentation_catalog(Family::Nonorientable, 2), *S3) == 18);
  for (const auto &spec : {"Zn:4", "S3", "Q8", "D4"}) {
    auto G = group_from_spec(spec);
    CHECK(count_homs(presentation_catalog(Family::Free, 2), *G) == G->order() * G->order());
  }
  std::vector<Presentation> ps{presentation_catalog(Family::Surface, 1), presentation_catalog(Family::Nonorientable, 3),
                               presentation_catalog(Family::FreeAbelian, 3), parse_presentation("<a,b|a^2, b^3, [a,b]>"),
                               presentation_catalog(Family::Surface, 2)};
  for (const auto &p : ps) {
    for (const auto &spec : {"S3", "D4", "Q8", "Zn:3"}) {
      auto G = group_from_spec(spec);
      if (std::pow(G->order(), p.generator_count()) > 5e6) continue;
      CHECK(count_homs(p, *G) == brute_hom_count(p, *G));
      auto list = enumerate_homs(p, *G);
      CHECK(BigInt(static_cast<unsigned long>(list.size())) == count_homs(p, *G));
      for (std::size_t i = 1; i < list.size(); ++i) CHECK(list[i - 1].images < list[i].images);
      for (const auto &h : list) CHECK(is_homomorphism(p, *G, h.images));
    }
  }
  Budget tiny;
  tiny.hom_nodes = 10;
  CHECK_THROWS_AS(count_homs(presentation_catalog(Family::Surface, 2), *S3, tiny), Error);
}

TEST_CASE("homomorphism counts multiply over direct products") {
  auto G1 = FiniteGroup::cyclic(2), G2 = FiniteGroup::symmetric(3);
  auto G = FiniteGroup::direct_product(G1, G2);
  for (const auto &p : {presentation_catalog(Family::FreeAbelian, 2), presentation_catalog(Family::Nonorientable, 2),
                        presentation_catalog(Family::Surface, 1), presentation_catalog(Family::Nonorientable, 3)}) {
    CHECK(count_homs(p, *G) == count_homs(p, *G1) * count_homs(p, *G2));
  }
}

TEST_CASE("conjugacy classes of homomorphisms") {
  auto S3 = FiniteGroup::symmetric(3);
  CHECK(hom_classes(presentation_catalog(Family::Free, 1), *S3).size() == 3);
  auto Z2sq = presentation_catalog(Family::FreeAbelian, 2);
  auto classes = hom_classes(Z2sq, *S3);
  CHECK(BigInt(static_cast<unsigned long>(classes.size())) * 6 ==
        count_homs(presentation_catalog(Family::FreeAbelian, 3), *S3));
  std::set<std::pair<oracle::P, oracle::P>> seen;
  int orbits = 0;
  auto perms = oracle::all_perms(3);
  for (const auto &a : perms)
    for (const auto &b : perms) {
      if (oracle::mul(a, b) != oracle::mul(b, a) || seen.count({a, b})) continue;
      ++orbits;
      for (const auto &g : perms) seen.insert({oracle::conj(g, a), oracle::conj(g, b)});
    }
  CHECK(static_cast<int>(classes.size()) == orbits);
  CHECK(hom_classes(Z2sq, *FiniteGroup::trivial()).size() == 1);
  for (const auto &spec : {"S4", "D4", "Q8"}) {
    auto G = group_from_spec(spec);
    for (const auto &p : {Z2sq, presentation_catalog(Family::Nonorientable, 2)}) {
      auto cl = hom_classes(p, *G);
      BigInt total = 0;
      for (const auto &c : cl) {
        total += static_cast<unsigned long>(c.orbit_size);
        CHECK(G->order() % c.orbit_size == 0);
        for (int g = 0; g < G->order(); ++g) {
          std::vector<int> conj;
          for (int x : c.representative.images) conj.push_back(G->conj(g, x));
          CHECK(c.representative.images <= conj);
        }
      }
      CHECK(total == count_homs(p, *G));
    }
  }
}

TEST_CASE("centralizers") {
  auto S3 = FiniteGroup::symmetric(3);
  int three_cycle = S3->index_of_perm({1, 2, 0});
  CHECK(S3->centralizer({three_cycle}).size() == 3);
  CHECK(S3->centralizer({}).size() == 6);
  CHECK(S3->centralizer({S3->identity()}).size() == 6);
  std::vector<int> all(6);
  std::iota(all.begin(), all.end(), 0);
  CHECK(S3->centralizer(all) == std::vector<int>{S3->identity()});
  auto S4 = FiniteGroup::symmetric(4);
  for (int a = 0; a < 24; ++a) {
    auto C = S4->centralizer({a});
    CHECK(S4->is_subgroup(C));
    int scan = 0;
    for (int g = 0; g < 24; ++g) scan += S4->commutes(g, a);
    CHECK(static_cast<int>(C.size()) == scan);
    CHECK(S4->element_centralizer(a) == C);
  }
}

TEST_CASE("relator count distributions") {
  auto S3 = FiniteGroup::symmetric(3);
  auto at_identity = [](const FiniteGroup &G, const std::vector<BigInt> &d) { return d[G.class_of(G.identity())]; };
  CHECK(at_identity(*S3, relator_count_distribution(*S3, RelatorShape::CommutatorPower, 1)) == 18);
  CHECK(at_identity(*S3, relator_count_distribution(*S3, RelatorShape::SquaresPower, 1)) == 4);
  CHECK(at_identity(*S3, relator_count_distribution(*S3, RelatorShape::SquaresPower, 2)) == 18);
  for (const auto &spec : {"S3", "D4", "Q8", "S4", "Zn:5"}) {
    auto G = group_from_spec(spec);
    for (int k = 1; k <= 3; ++k) {
      auto sq = relator_count_distribution(*G, RelatorShape::SquaresPower, k);
      CHECK(at_identity(*G, sq) == count_homs(presentation_catalog(Family::Nonorientable, k), *G));
      if (k <= 2) {
        auto cm = relator_count_distribution(*G, RelatorShape::CommutatorPower, k);
        CHECK(at_identity(*G, cm) == count_homs(presentation_catalog(Family::Surface, k), *G));
      }
      BigInt total = 0;
      for (int c = 0; c < G->class_count(); ++c) total += sq[c] * G->class_sizes()[c];
      BigInt all = 1;
      for (int i = 0; i < k; ++i) all *= G->order();
      CHECK(total == all);
    }
  }
  Budget small;
  small.convolution_cap = 10;
  CHECK_THROWS_AS(relator_count_distribution(*FiniteGroup::symmetric(4), RelatorShape::SquaresPower, 2, small), Error);
}

TEST_CASE("commuting p-power tuples") {
  auto S3 = FiniteGroup::symmetric(3);
  CHECK(commuting_p_power_tuples(*S3, 1, 2) == 4);
  CHECK(commuting_p_power_tuples(*S3, 2, 5) == 1);
  CHECK(commuting_p_power_tuples(*FiniteGroup::cyclic(4), 2, 2) == 16);
  CHECK_THROWS_AS(commuting_p_power_tuples(*S3, 1, 4), Error);
  auto S4 = FiniteGroup::symmetric(4);
  BigInt scan = 0;
  for (int a = 0; a < 24; ++a)
    for (int b = 0; b < 24; ++b) {
      int oa = S4->element_order(a), ob = S4->element_order(b);
      bool pp = (oa & (oa - 1)) == 0 && (ob & (ob - 1)) == 0;
      if (pp && S4->commutes(a, b)) ++scan;
    }
  CHECK(commuting_p_power_tuples(*S4, 2, 2) == scan);
}
