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

#ifndef ORBICOUNT_SPACES_HPP
#define ORBICOUNT_SPACES_HPP

#include "orbicount/group.hpp"
#include "orbicount/presentation.hpp"
#include "orbicount/subgroups.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace orbicount {

// Finite model of a G-manifold: an integer combination of finite G-sets.
class VirtualGSpace {
public:
  struct Term {
    std::int64_t coeff;
    int degree;
    std::vector<Perm> generator_images;
  };

  explicit VirtualGSpace(GroupPtr G);

  // Images of the generators of G, in the order of G.generators().
  void add_term(std::int64_t coeff, int degree, std::vector<Perm> generator_images);
  // Left cosets of a subgroup given by its element list.
  void add_coset_space(std::int64_t coeff, const std::vector<int> &subgroup);
  void add_point(std::int64_t coeff);

  static VirtualGSpace from_json(const std::string &text, const Budget &budget = default_budget());
  static VirtualGSpace from_json(GroupPtr G, const std::string &text);
  std::string to_json() const;
  // M1 x M2 over the direct product built by FiniteGroup::direct_product.
  static VirtualGSpace product(const VirtualGSpace &a, const VirtualGSpace &b, GroupPtr product_group);

  const GroupPtr &group() const { return G_; }
  const std::vector<Term> &terms() const { return terms_; }
  const Perm &action(std::size_t term, int element) const { return actions_[term][element]; }
  std::int64_t euler() const;
  std::int64_t fixed_euler(const std::vector<int> &S) const;
  // Orbit count of K on the points fixed by S, per term and summed with coefficients.
  std::int64_t orbit_count(const std::vector<int> &S, const std::vector<int> &K) const;
  // Burnside average over K of the points fixed by S and k.
  Rational burnside_quotient(const std::vector<int> &S, const std::vector<int> &K) const;
  // chi(M^S / K); both routes are computed and must agree.
  std::int64_t quotient_euler(const std::vector<int> &K, const std::vector<int> &S = {}) const;

private:
  void check_element(int a) const;
  std::uint64_t fixed_mask_count(std::size_t term, const std::vector<int> &S) const;

  GroupPtr G_;
  std::vector<Term> terms_;
  std::vector<std::vector<Perm>> actions_;
  std::vector<std::vector<std::vector<std::uint64_t>>> fixed_;
};

struct OrbifoldValue {
  Rational value;
  bool integral = false;
};

OrbifoldValue chi_orb_gamma(const Presentation &p, const FiniteGroup &G, const VirtualGSpace &M,
                            const Budget &budget = default_budget());
// Sum over conjugacy classes of homomorphisms of chi(M^phi / C(phi)).
OrbifoldValue chi_gamma_by_classes(const Presentation &p, const FiniteGroup &G, const VirtualGSpace &M,
                                   const Budget &budget = default_budget());
// chi^orb of p x Z.
OrbifoldValue chi_gamma_by_extension(const Presentation &p, const FiniteGroup &G, const VirtualGSpace &M,
                                     const Budget &budget = default_budget());
OrbifoldValue chi_gamma(const Presentation &p, const FiniteGroup &G, const VirtualGSpace &M,
                        const Budget &budget = default_budget());
// Degree-d extension: chi of p x Z^d.
OrbifoldValue chi_higher(const Presentation &p, const FiniteGroup &G, const VirtualGSpace &M, int d,
                         const Budget &budget = default_budget());

// chi^(d)(M^S; K) where K acts on M through k -> via[k] in G: average over commuting (d+1)-tuples of K.
Rational chi_acting(const VirtualGSpace &M, const std::vector<int> &S, const FiniteGroup &K,
                    const std::vector<int> &via, int d, const Budget &budget = default_budget());

struct TransitiveTerm {
  std::vector<int> rho;
  std::uint64_t orbit_size;
  BigInt aut_order;
  Rational value;
};

struct TransitiveValue {
  OrbifoldValue total;
  std::vector<TransitiveTerm> terms;
};

TransitiveValue chi_class_transitive(const SubgroupRecord &record, const GroupPtr &G, const VirtualGSpace &M, int d,
                                     const Budget &budget = default_budget());
OrbifoldValue chi_class_gset(const std::vector<std::pair<SubgroupRecord, int>> &X, const GroupPtr &G,
                             const VirtualGSpace &M, int d, const Budget &budget = default_budget());

// Number of index-r subgroups of Z^d for r = 0..N (entry 0 is 0).
std::vector<BigInt> free_abelian_subgroup_counts(int d, int N);

// chi of the fixed points of a subgroup of G wr S_n acting on M^n, given by generating elements.
std::int64_t wreath_fixed_euler(const WreathCodec &codec, const std::vector<int> &elements, const VirtualGSpace &M);

} // namespace orbicount

#endif
