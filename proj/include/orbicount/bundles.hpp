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

#ifndef ORBICOUNT_BUNDLES_HPP
#define ORBICOUNT_BUNDLES_HPP

#include "orbicount/group.hpp"
#include "orbicount/presentation.hpp"
#include "orbicount/subgroups.hpp"

#include <map>
#include <memory>
#include <vector>

namespace orbicount {

struct BundleComponent {
  std::vector<int> orbit;
  int base_point = 0;
  // Point of the orbit represented by each coset of the isotropy table.
  std::vector<int> coset_point;
  std::shared_ptr<const SubgroupRecord> isotropy;
  // Image of each Schreier generator of the isotropy subgroup.
  std::vector<int> rho;
};

struct ClassificationKey {
  CosetTable table;
  std::vector<int> rho;
  friend bool operator<(const ClassificationKey &a, const ClassificationKey &b) {
    if (!(a.table == b.table)) return a.table < b.table;
    return a.rho < b.rho;
  }
  friend bool operator==(const ClassificationKey &a, const ClassificationKey &b) {
    return a.table == b.table && a.rho == b.rho;
  }
};

struct BundleDecomposition {
  Presentation source;
  GroupPtr wreath;
  std::vector<int> theta;
  std::vector<BundleComponent> components;
  std::vector<ClassificationKey> keys;
  std::map<ClassificationKey, int> grouped;
};

struct AutData {
  int n_rho_quotient_order = 0;
  int c_g_rho_order = 0;
  BigInt aut_order;
  // Pairs (fixed coset c, g) with g^-1 rho^{t_c} g = rho.
  std::vector<int> fixed_cosets;
  std::vector<std::vector<int>> witnesses;
  std::vector<int> centralizer;
  std::vector<int> acting_subgroup;
  std::vector<int> image;
  BigInt t_rho_model_order;
};

// rho evaluated on a word in Schreier generator letters.
int evaluate_rho(const FiniteGroup &G, const std::vector<int> &rho, const Word &schreier_word);
// rho^u on Schreier generators, for u = t_c with c an H-fixed coset.
std::vector<int> rho_conjugated(const SubgroupRecord &record, const FiniteGroup &G, const std::vector<int> &rho, int c);

class BundleClassifier {
public:
  BundleClassifier(const Presentation &source, GroupPtr G, const Budget &budget = default_budget());

  std::shared_ptr<const SubgroupRecord> record(const CosetTable &table);
  ClassificationKey classify(const SubgroupRecord &record, const std::vector<int> &rho);
  // N x G orbit of rho (all elements), sorted.
  std::vector<std::vector<int>> orbit(const SubgroupRecord &record, const std::vector<int> &rho);

private:
  Presentation source_;
  GroupPtr G_;
  Budget budget_;
  std::map<CosetTable, std::shared_ptr<const SubgroupRecord>> records_;
};

BundleDecomposition decompose(const Presentation &p, const GroupPtr &wreath, const std::vector<int> &theta,
                              BundleClassifier *classifier = nullptr);
ClassificationKey classify(const Presentation &p, const GroupPtr &G, const BundleComponent &c);
AutData aut_data(const SubgroupRecord &record, const FiniteGroup &G, const std::vector<int> &rho);
// Aut_{Gamma-G}(P_rho) as a group; element i is the pair (fixed coset, g) listed in pairs[i].
GroupPtr aut_group(const SubgroupRecord &record, const FiniteGroup &G, const std::vector<int> &rho,
                   std::vector<std::pair<int, int>> *pairs = nullptr);
BigInt centralizer_order_structural(const BundleDecomposition &d);
std::vector<int> brute_centralizer(const GroupPtr &wreath, const std::vector<int> &theta,
                                   const Budget &budget = default_budget());
// All wreath elements built from orbit-wise bundle isomorphisms; equals the centralizer of theta.
std::vector<int> structural_centralizer_elements(const BundleDecomposition &d);
std::vector<int> reconstruct(const BundleDecomposition &d);
// x with x theta(g) x^-1 = other(g) for every generator, or -1.
int find_conjugator(const GroupPtr &wreath, const std::vector<int> &theta, const std::vector<int> &other);
std::vector<ClassificationKey> sorted_keys(const BundleDecomposition &d);

} // namespace orbicount

#endif
