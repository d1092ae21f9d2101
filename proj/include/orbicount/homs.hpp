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

#ifndef ORBICOUNT_HOMS_HPP
#define ORBICOUNT_HOMS_HPP

#include "orbicount/group.hpp"
#include "orbicount/presentation.hpp"

#include <functional>
#include <map>
#include <vector>

namespace orbicount {

struct GroupHom {
  std::vector<int> images;
};

int evaluate_word(const FiniteGroup &G, const Word &w, const std::vector<int> &images);
bool is_homomorphism(const Presentation &p, const FiniteGroup &G, const std::vector<int> &images);

// Backtracking over generator images with relator checks as soon as a relator is fully assigned.
class HomEnumerator {
public:
  HomEnumerator(const Presentation &p, const FiniteGroup &G, const Budget &budget = default_budget());

  BigInt count();
  // Visits every homomorphism once; images are indexed by generator.
  void for_each(const std::function<void(const std::vector<int> &)> &visit);
  // Visits one homomorphism per value of the first searched generator up to conjugacy, with the class size
  // as weight; sums of conjugation-invariant functions over Hom may use this.
  void for_each_weighted(const std::function<void(const std::vector<int> &, std::uint64_t)> &visit);
  // All homomorphisms, sorted lexicographically by image ids.
  std::vector<std::vector<int>> list();
  std::uint64_t nodes() const { return nodes_; }

private:
  enum class Source { All, Singleton, Centralizer, SquareRoot };
  struct Letter {
    int gen;
    bool inverse;
  };
  struct Step {
    int gen;
    Source source = Source::All;
    int covered = -1;
    std::vector<int> others;
    std::vector<Letter> before;
    std::vector<Letter> after;
    bool inverse = false;
    std::vector<int> checks;
  };

  int eval(const std::vector<Letter> &w) const;
  template <typename Leaf> void search(std::size_t depth, Leaf &leaf);
  void tick();
  void centralizer_candidates(const Step &st, std::vector<int> &out) const;

  const FiniteGroup &G_;
  Budget budget_;
  int k_;
  std::vector<std::vector<Letter>> relators_;
  std::vector<Step> steps_;
  std::vector<int> unused_;
  std::vector<int> images_;
  std::uint64_t nodes_ = 0;
  bool counting_ = false;
  bool by_class_ = false;
  std::uint64_t weight_ = 1;
  BigInt leaf_count_;
  std::vector<std::vector<int>> scratch_;
};

std::vector<GroupHom> enumerate_homs(const Presentation &p, const FiniteGroup &G,
                                     const Budget &budget = default_budget());
BigInt count_homs(const Presentation &p, const FiniteGroup &G, const Budget &budget = default_budget());

struct HomClass {
  GroupHom representative;
  std::uint64_t orbit_size;
};

// Orbits of G acting by conjugation; representatives are orbit minima; sorted by representative.
std::vector<HomClass> hom_classes(const Presentation &p, const FiniteGroup &G,
                                  const Budget &budget = default_budget());

enum class RelatorShape { CommutatorPower, SquaresPower };

// Per conjugacy class c: number of tuples whose relator word evaluates to the class representative.
std::vector<BigInt> relator_count_distribution(const FiniteGroup &G, RelatorShape shape, int count,
                                               const Budget &budget = default_budget());
// Hom count of a catalog one-relator presentation via the distribution at the identity.
BigInt one_relator_hom_count(const FiniteGroup &G, const OneRelatorShape &shape,
                             const Budget &budget = default_budget());

BigInt commuting_p_power_tuples(const FiniteGroup &G, int d, int p);
void for_each_commuting_p_power_tuple(const FiniteGroup &G, int d, int p,
                                      const std::function<void(const std::vector<int> &)> &visit);

} // namespace orbicount

#endif
