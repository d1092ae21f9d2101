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

#include "orbicount/bundles.hpp"
#include "orbicount/homs.hpp"

#include "doctest.h"
#include "oracles.hpp"

#include <random>

using namespace orbicount;

namespace {

GroupPtr Z() { return FiniteGroup::trivial(); }

Presentation cyc() { return presentation_catalog(Family::Free, 1); }

int sym_element(const GroupPtr &W, const Perm &sigma) {
  return W->codec()->encode(std::vector<int>(sigma.size(), 0), sigma);
}

// Fixed points of theta on M^n for the natural permutation action of G on M.
long fixed_tuples(const GroupPtr &W, const std::vector<int> &theta) {
  const WreathCodec &c = *W->codec();
  const FiniteGroup &G = *c.base();
  int m = G.degree() == 0 ? 1 : G.degree();
  int n = c.degree();
  long total = 1;
  for (int i = 0; i < n; ++i) total *= m;
  long fixed = 0;
  for (long code = 0; code < total; ++code) {
    std::vector<int> tuple(n);
    long x = code;
    for (int i = 0; i < n; ++i, x /= m) tuple[i] = static_cast<int>(x % m);
    bool ok = true;
    for (int t : theta) {
      const auto &sigma = c.sigma(t);
      const auto *f = c.f(t);
      std::vector<int> y(n);
      for (int k = 0; k < n; ++k) {
        int g = f[sigma[k]];
        y[sigma[k]] = G.degree() == 0 ? 0 : G.perm(g)[tuple[k]];
      }
      ok = ok && y == tuple;
    }
    fixed += ok;
  }
  return fixed;
}

long fixed_points_of_rho(const FiniteGroup &G, const std::vector<int> &rho) {
  int m = G.degree() == 0 ? 1 : G.degree();
  long fixed = 0;
  for (int x = 0; x < m; ++x) {
    bool ok = true;
    for (int g : rho) ok = ok && (G.degree() == 0 || G.perm(g)[x] == x);
    fixed += ok;
  }
  return fixed;
}

void check_decomposition(const Presentation &p, const GroupPtr &W, const std::vector<int> &theta) {
  BundleClassifier classifier(p, W->codec()->base());
  auto d = decompose(p, W, theta, &classifier);
  const FiniteGroup &G = *W->codec()->base();
  std::size_t points = 0;
  for (const auto &c : d.components) {
    points += c.orbit.size();
    CHECK(c.base_point == c.orbit.front());
    for (const auto &rel : c.isotropy->subgroup_presentation().relators())
      CHECK(evaluate_rho(G, c.rho, rel) == G.identity());
    for (std::size_t k = 0; k < c.rho.size(); ++k) {
      int u = evaluate_word(*W, c.isotropy->schreier_generators()[k], theta);
      CHECK(W->codec()->sigma(u)[c.base_point] == c.base_point);
      CHECK(W->codec()->f(u)[c.base_point] == c.rho[k]);
    }
    AutData a = aut_data(*c.isotropy, G, c.rho);
    CHECK(a.aut_order == BigInt(a.c_g_rho_order) * a.n_rho_quotient_order);
    CHECK(a.t_rho_model_order == a.aut_order);
    CHECK(a.centralizer.size() == static_cast<std::size_t>(a.c_g_rho_order));
    for (int g : a.centralizer)
      CHECK(std::binary_search(a.acting_subgroup.begin(), a.acting_subgroup.end(), g));
    CHECK(G.is_subgroup(a.acting_subgroup));
    for (int g : a.image)
      CHECK(std::binary_search(a.acting_subgroup.begin(), a.acting_subgroup.end(), g));
    REQUIRE(a.acting_subgroup.size() % a.image.size() == 0);
    CHECK(a.aut_order % static_cast<unsigned long>(a.acting_subgroup.size() / a.image.size()) == 0);
    CHECK(aut_group(*c.isotropy, G, c.rho)->order() == a.aut_order);
  }
  CHECK(points == static_cast<std::size_t>(W->codec()->degree()));
  auto brute = brute_centralizer(W, theta);
  CHECK(BigInt(static_cast<unsigned long>(brute.size())) == centralizer_order_structural(d));
  auto structural = structural_centralizer_elements(d);
  std::sort(structural.begin(), structural.end());
  CHECK(structural == brute);
  long product = 1;
  for (const auto &[key, mult] : d.grouped) {
    long f = fixed_points_of_rho(G, key.rho);
    for (int i = 0; i < mult; ++i) product *= f;
  }
  CHECK(fixed_tuples(W, theta) == product);
}

} // namespace

TEST_CASE("decomposition examples") {
  auto W = FiniteGroup::wreath(Z(), 3);
  auto d = decompose(cyc(), W, {sym_element(W, {1, 2, 0})});
  REQUIRE(d.components.size() == 1);
  CHECK(d.components[0].isotropy->index() == 3);
  CHECK(d.components[0].rho == std::vector<int>{0});

  auto Z2 = FiniteGroup::cyclic(2);
  auto W4 = FiniteGroup::wreath(Z2, 4);
  auto triv = decompose(presentation_catalog(Family::Free, 2), W4, {0, 0});
  CHECK(triv.components.size() == 4);
  REQUIRE(triv.grouped.size() == 1);
  CHECK(triv.grouped.begin()->second == 4);
  CHECK(triv.grouped.begin()->first.table.index() == 1);
  CHECK(centralizer_order_structural(triv) == W4->order());

  auto D4 = FiniteGroup::wreath(Z2, 2);
  int x = D4->codec()->encode({1, 0}, {1, 0});
  auto dd = decompose(cyc(), D4, {x});
  REQUIRE(dd.components.size() == 1);
  CHECK(dd.components[0].isotropy->index() == 2);
  CHECK(dd.components[0].rho == std::vector<int>{1});
  AutData a = aut_data(*dd.components[0].isotropy, *Z2, dd.components[0].rho);
  CHECK(a.c_g_rho_order == 2);
  CHECK(a.n_rho_quotient_order == 2);
  CHECK(a.aut_order == 4);
  CHECK(brute_centralizer(D4, {x}).size() == 4);
  CHECK(centralizer_order_structural(dd) == 4);
}

TEST_CASE("classification keys") {
  auto W = FiniteGroup::wreath(Z(), 4);
  auto d = decompose(cyc(), W, {sym_element(W, {1, 0, 3, 2})});
  REQUIRE(d.components.size() == 2);
  CHECK(d.keys[0] == d.keys[1]);
  CHECK(d.grouped.size() == 1);
  CHECK(centralizer_order_structural(d) == 8);
  CHECK(brute_centralizer(W, d.theta).size() == 8);

  auto S3 = FiniteGroup::symmetric(3);
  auto F2 = presentation_catalog(Family::Free, 2);
  BundleClassifier cl(F2, S3);
  auto whole = cl.record(low_index_subgroups(F2, 1)[0].table());
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b)
      for (int g = 0; g < 6; ++g)
        CHECK(cl.classify(*whole, {a, b}) == cl.classify(*whole, {S3->conj(g, a), S3->conj(g, b)}));

  auto Z2 = FiniteGroup::cyclic(2);
  auto Z2sq = presentation_catalog(Family::FreeAbelian, 2);
  BundleClassifier ab(Z2sq, Z2);
  auto top = ab.record(low_index_subgroups(Z2sq, 1)[0].table());
  CHECK_FALSE(ab.classify(*top, {1, 0}) == ab.classify(*top, {0, 1}));
  CHECK(ab.orbit(*top, {1, 0}).size() == 1);
}

TEST_CASE("automorphism orders in the degenerate cases") {
  auto F2 = presentation_catalog(Family::Free, 2);
  auto T = FiniteGroup::trivial();
  for (const auto &rec : low_index_subgroups(F2, 3)) {
    std::vector<int> rho(rec.schreier_generators().size(), 0);
    CHECK(aut_data(rec, *T, rho).aut_order == rec.normalizer_quotient_order());
  }
  auto S3 = FiniteGroup::symmetric(3);
  auto top = low_index_subgroups(F2, 1)[0];
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b)
      CHECK(aut_data(top, *S3, {a, b}).aut_order == S3->centralizer({a, b}).size());
}

TEST_CASE("centralizer examples") {
  for (int n = 2; n <= 5; ++n) {
    auto W = FiniteGroup::wreath(Z(), n);
    Perm cycle(n);
    for (int i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
    CHECK(brute_centralizer(W, {sym_element(W, cycle)}).size() == static_cast<std::size_t>(n));
    CHECK(brute_centralizer(W, {0}).size() == static_cast<std::size_t>(W->order()));
    auto d = decompose(cyc(), W, {sym_element(W, cycle)});
    auto back = reconstruct(d);
    CHECK(W->codec()->sigma(back[0]) != perm_identity(n));
    CHECK(perm_cycles(W->codec()->sigma(back[0])).size() == 1);
  }
}

TEST_CASE("structural and brute centralizers on random homomorphisms") {
  std::mt19937 rng(97);
  int checked = 0;
  for (const auto &p : {presentation_catalog(Family::Free, 2), presentation_catalog(Family::FreeAbelian, 2)}) {
    for (const auto &spec : {"Zn:2", "S3"}) {
      auto G = group_from_spec(spec);
      for (int n = 1; n <= 4; ++n) {
        auto W = FiniteGroup::wreath(G, n);
        std::vector<std::vector<int>> homs;
        if (p.relators().empty()) {
          std::uniform_int_distribution<int> pick(0, W->order() - 1);
          for (int t = 0; t < 6; ++t) homs.push_back({pick(rng), pick(rng)});
        } else {
          auto all = HomEnumerator(p, *W).list();
          std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
          for (int t = 0; t < 6; ++t) homs.push_back(all[pick(rng)]);
        }
        for (const auto &theta : homs) {
          check_decomposition(p, W, theta);
          ++checked;
        }
      }
    }
  }
  CHECK(checked == 96);
}

TEST_CASE("keys are invariant under conjugation and reconstruct recovers the class") {
  std::mt19937 rng(101);
  auto F2 = presentation_catalog(Family::Free, 2);
  for (const auto &spec : {"Zn:2", "S3"}) {
    auto G = group_from_spec(spec);
    for (int n = 1; n <= 3; ++n) {
      auto W = FiniteGroup::wreath(G, n);
      std::uniform_int_distribution<int> pick(0, W->order() - 1);
      for (int t = 0; t < 10; ++t) {
        std::vector<int> theta{pick(rng), pick(rng)};
        int x = pick(rng);
        std::vector<int> conj{W->conj(x, theta[0]), W->conj(x, theta[1])};
        auto d1 = decompose(F2, W, theta), d2 = decompose(F2, W, conj);
        CHECK(d1.grouped == d2.grouped);
        auto back = reconstruct(d1);
        CHECK(decompose(F2, W, back).grouped == d1.grouped);
        int c = find_conjugator(W, back, theta);
        REQUIRE(c >= 0);
        CHECK(W->conj(c, back[0]) == theta[0]);
        CHECK(W->conj(c, back[1]) == theta[1]);
      }
      CHECK(reconstruct(decompose(F2, W, {0, 0})) == std::vector<int>{0, 0});
    }
  }
}

TEST_CASE("classification multisets biject with conjugacy classes of homomorphisms") {
  for (const auto &p : {cyc(), presentation_catalog(Family::Free, 2)}) {
    for (const auto &spec : {"trivial", "Zn:2"}) {
      auto G = group_from_spec(spec);
      for (int n = 1; n <= 3; ++n) {
        auto W = FiniteGroup::wreath(G, n);
        BundleClassifier cl(p, G);
        std::set<std::map<ClassificationKey, int>> distinct;
        HomEnumerator(p, *W).for_each([&](const std::vector<int> &theta) {
          distinct.insert(decompose(p, W, theta, &cl).grouped);
        });
        auto classes = hom_classes(p, *W);
        CHECK(distinct.size() == classes.size());
        CHECK(BigInt(static_cast<unsigned long>(classes.size())) * W->order() == count_homs(product_with_Z(p), *W));
      }
    }
  }
  auto W = FiniteGroup::wreath(Z(), 3);
  CHECK(hom_classes(cyc(), *W).size() == 3);
}
