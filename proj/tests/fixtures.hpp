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

#ifndef ORBICOUNT_TESTS_FIXTURES_HPP
#define ORBICOUNT_TESTS_FIXTURES_HPP

#include "orbicount/spaces.hpp"

#include <random>
#include <set>

namespace fixture {

// Subgroup of G generated by the given elements, as a sorted element list.
inline std::vector<int> generated(const orbicount::FiniteGroup &G, const std::vector<int> &gens) {
  std::set<int> H{G.identity()};
  std::vector<int> frontier{G.identity()};
  while (!frontier.empty()) {
    int x = frontier.back();
    frontier.pop_back();
    for (int g : gens) {
      int y = G.mul(x, g);
      if (H.insert(y).second) frontier.push_back(y);
    }
  }
  return {H.begin(), H.end()};
}

// Integer combination of up to three coset spaces G/H with H generated by at most two random elements.
inline orbicount::VirtualGSpace random_space(const orbicount::GroupPtr &G, std::mt19937 &rng) {
  std::uniform_int_distribution<int> terms(1, 3), coeff(-3, 3), elem(0, G->order() - 1), ngens(0, 2);
  orbicount::VirtualGSpace M(G);
  int t = terms(rng);
  for (int i = 0; i < t; ++i) {
    int c = coeff(rng);
    if (c == 0) c = 1;
    std::vector<int> gens;
    int k = ngens(rng);
    for (int j = 0; j < k; ++j) gens.push_back(elem(rng));
    M.add_coset_space(c, generated(*G, gens));
  }
  return M;
}

} // namespace fixture

#endif
