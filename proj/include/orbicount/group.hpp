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

#ifndef ORBICOUNT_GROUP_HPP
#define ORBICOUNT_GROUP_HPP

#include "orbicount/core.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

namespace orbicount {

// images[i] is the image of point i.
using Perm = std::vector<int>;

// (p * q)(i) = p(q(i)); q acts first.
Perm perm_compose(const Perm &p, const Perm &q);
Perm perm_inverse(const Perm &p);
Perm perm_identity(int degree);
bool perm_is_valid(const Perm &p);
std::string perm_to_string(const Perm &p);
std::vector<std::vector<int>> perm_cycles(const Perm &p);
// Lexicographic rank among all permutations of the same degree.
std::uint64_t perm_rank(const Perm &p);
Perm perm_unrank(std::uint64_t rank, int degree);

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

// Element ids of G wr S_n: rank(sigma) * |G|^n + f read as a base-|G| number with f[0] most significant.
class WreathCodec {
public:
  WreathCodec(GroupPtr base, int n);

  const GroupPtr &base() const { return base_; }
  int degree() const { return n_; }
  std::uint64_t order() const { return order_; }
  std::uint64_t base_power() const { return gpow_; }

  int encode(const std::vector<int> &f, const Perm &sigma) const;
  int encode_rank(const int *f, int sigma_rank) const;
  int sigma_rank(int id) const { return sig_[id]; }
  const Perm &sigma(int id) const { return perms_[sig_[id]]; }
  const Perm &perm_of_rank(int rank) const { return perms_[rank]; }
  const std::int32_t *f(int id) const { return f_.data() + static_cast<std::size_t>(id) * n_; }
  std::vector<int> f_vector(int id) const;

  int mul(int a, int b) const;
  int inv(int a) const;
  bool commutes(int a, int b) const;
  std::vector<int> generators() const;
  std::string label(int id) const;
  // (f, sigma) . (k, x) = (sigma(k), f(sigma(k)) x)
  std::pair<int, int> act(int id, int k, int x) const;

private:
  int compose_rank(int a, int b) const;

  GroupPtr base_;
  int n_;
  int nfact_;
  std::uint64_t gpow_;
  std::uint64_t order_;
  std::vector<Perm> perms_;
  std::vector<std::int32_t> perm_inv_;
  std::vector<std::int32_t> comp_;
  std::vector<std::int32_t> sig_;
  std::vector<std::int32_t> f_;
};

class FiniteGroup {
public:
  static GroupPtr from_generators(int degree, const std::vector<Perm> &gens, const Budget &budget = default_budget(),
                                  std::string name = {});
  static GroupPtr trivial();
  static GroupPtr cyclic(int k);
  static GroupPtr symmetric(int k);
  static GroupPtr direct_product(const GroupPtr &a, const GroupPtr &b);
  // G wr S_n; the codec is reachable through codec().
  static GroupPtr wreath(const GroupPtr &base, int n, const Budget &budget = default_budget());
  // Subgroup given by an element list closed under multiplication; element i of the result is elements[i].
  static GroupPtr subgroup(const GroupPtr &parent, const std::vector<int> &elements);
  // Group given by its multiplication; element 0 must be the identity.
  static GroupPtr from_multiplication(int order, const std::function<int(int, int)> &mul, std::string name = {});

  int order() const { return order_; }
  int identity() const { return 0; }
  int mul(int a, int b) const;
  int inv(int a) const { return inv_[a]; }
  int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }
  int power(int a, std::int64_t k) const;
  int element_order(int a) const;
  bool commutes(int a, int b) const;
  const std::vector<int> &generators() const { return gens_; }
  const std::string &name() const { return name_; }
  bool has_table() const { return !table_.empty(); }

  int class_count() const { return static_cast<int>(class_reps_.size()); }
  int class_of(int a) const { return class_of_[a]; }
  const std::vector<int> &class_reps() const { return class_reps_; }
  const std::vector<int> &class_sizes() const { return class_sizes_; }
  // t with a = t rep t^-1 where rep is the representative of the class of a.
  int class_transversal(int a) const { return transversal_[a]; }

  std::vector<int> centralizer(const std::vector<int> &S) const;
  // Sorted centralizer of one element; cached.
  const std::vector<int> &element_centralizer(int a) const;
  // Sorted list of x with x^2 = a; cached.
  std::vector<int> square_roots(int a) const;
  bool is_subgroup(const std::vector<int> &elements) const;

  bool has_perms() const { return !perms_.empty(); }
  const Perm &perm(int a) const { return perms_.at(a); }
  int degree() const { return degree_; }
  int index_of_perm(const Perm &p) const;
  const WreathCodec *codec() const { return codec_.get(); }
  const std::shared_ptr<const WreathCodec> &codec_ptr() const { return codec_; }
  // For subgroups: element id in the parent group.
  int parent_element(int a) const { return parent_ids_.empty() ? a : parent_ids_[a]; }
  std::string element_label(int a) const;

private:
  FiniteGroup() = default;
  void finish(const Budget &budget);
  void build_classes();

  int order_ = 1;
  int degree_ = 0;
  std::string name_;
  std::vector<std::uint32_t> table_;
  std::vector<int> inv_;
  std::vector<int> gens_;
  std::vector<Perm> perms_;
  std::unordered_map<std::string, int> perm_index_;
  std::shared_ptr<const WreathCodec> codec_;
  GroupPtr parent_;
  std::vector<int> parent_ids_;
  std::unordered_map<int, int> parent_index_;

  std::vector<int> class_of_;
  std::vector<int> class_reps_;
  std::vector<int> class_sizes_;
  std::vector<int> transversal_;

  mutable std::mutex cache_mutex_;
  mutable std::vector<std::unique_ptr<std::vector<int>>> rep_centralizers_;
  mutable std::unordered_map<int, std::unique_ptr<std::vector<int>>> centralizers_;
  mutable std::vector<int> sqrt_offsets_;
  mutable std::vector<int> sqrt_values_;
};

// "trivial", "Zn:k", "Sn:k", a catalog table name (D4, Q8, V4), or a JSON object {"degree": n, "generators": [...]}.
GroupPtr group_from_spec(const std::string &spec, const Budget &budget = default_budget());

} // namespace orbicount

#endif
