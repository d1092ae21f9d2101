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

#ifndef ORBICOUNT_SUBGROUPS_HPP
#define ORBICOUNT_SUBGROUPS_HPP

#include "orbicount/group.hpp"
#include "orbicount/presentation.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace orbicount {

// Right action of the generators on cosets; column 2i is g_(i+1), column 2i+1 its inverse; coset 0 is H.
class CosetTable {
public:
  CosetTable() = default;
  CosetTable(int index, int generator_count, std::vector<int> entries);
  // Table of the transitive action of generators (perms on m points) read with the given base point.
  static CosetTable from_action(const std::vector<Perm> &generator_actions, int base);

  int index() const { return index_; }
  int generator_count() const { return gens_; }
  int columns() const { return 2 * gens_; }
  int at(int coset, int column) const { return entries_[static_cast<std::size_t>(coset) * 2 * gens_ + column]; }
  const std::vector<int> &entries() const { return entries_; }
  // Coset reached from c by reading w left to right.
  int trace(int c, const Word &w) const;
  std::vector<Perm> action() const;
  // Renumbering with the given coset as base, in first-appearance row-major order.
  CosetTable standardized(int base) const;
  // Least standardized table over all base points.
  CosetTable canonical() const;
  bool is_complete_for(const std::vector<Word> &relators) const;
  std::string to_json() const;
  static CosetTable from_json(const std::string &text);

  friend bool operator==(const CosetTable &a, const CosetTable &b) {
    return a.index_ == b.index_ && a.gens_ == b.gens_ && a.entries_ == b.entries_;
  }
  friend bool operator<(const CosetTable &a, const CosetTable &b) {
    if (a.index_ != b.index_) return a.index_ < b.index_;
    return a.entries_ < b.entries_;
  }

private:
  int index_ = 0;
  int gens_ = 0;
  std::vector<int> entries_;
};

struct AbelianInvariants {
  int free_rank = 0;
  std::vector<BigInt> torsion;
  friend bool operator==(const AbelianInvariants &a, const AbelianInvariants &b) {
    return a.free_rank == b.free_rank && a.torsion == b.torsion;
  }
};

class SubgroupRecord {
public:
  SubgroupRecord() = default;
  SubgroupRecord(const Presentation &source, const CosetTable &table);

  int index() const { return table_.index(); }
  const CosetTable &table() const { return table_; }
  const std::vector<Word> &schreier_generators() const { return schreier_; }
  const Presentation &subgroup_presentation() const { return presentation_; }
  const AbelianInvariants &abelian_invariants() const { return invariants_; }
  int normalizer_quotient_order() const { return normalizer_order_; }
  const std::vector<int> &h_fixed_cosets() const { return fixed_cosets_; }
  std::optional<bool> orientable() const { return orientable_; }
  // Tree word from coset 0 to coset c.
  const Word &transversal(int c) const { return transversal_[c]; }
  const Presentation &source() const { return source_; }

  // Rewrites a word read from coset c into Schreier generator letters; sets end to the final coset.
  Word rewrite_from(int c, const Word &w, int *end) const;
  // Rewrites an element of H (a word returning to coset 0).
  Word rewrite(const Word &w) const;

private:
  Presentation source_;
  CosetTable table_;
  std::vector<Word> transversal_;
  std::vector<Word> schreier_;
  std::vector<int> edge_generator_;
  Presentation presentation_;
  AbelianInvariants invariants_;
  int normalizer_order_ = 1;
  std::vector<int> fixed_cosets_;
  std::optional<bool> orientable_;
};

std::vector<SubgroupRecord> low_index_subgroups(const Presentation &p, int N, const Budget &budget = default_budget());
// Canonical tables only, without building records.
std::vector<CosetTable> low_index_tables(const Presentation &p, int N, const Budget &budget = default_budget());

struct SmithResult {
  std::vector<BigInt> diagonal;
  std::vector<std::vector<BigInt>> U;
  std::vector<std::vector<BigInt>> V;
};
// U A V = diag; diagonal entries non-negative with the divisibility chain.
SmithResult smith_normal_form(const std::vector<std::vector<BigInt>> &A, bool with_factors = false);
AbelianInvariants abelian_invariants_of_matrix(const std::vector<std::vector<BigInt>> &A, int columns);
AbelianInvariants abelianization(const Presentation &p);
BigInt hom_count_to_cyclic(const AbelianInvariants &inv, const BigInt &r);

Word conjugate_schreier_generator(const SubgroupRecord &record, const Word &u, int k);

struct CensusClass {
  std::size_t record;
  int index;
  int normalizer_quotient_order;
  BigInt multiplicity;
};

struct CensusTable {
  int max_index = 0;
  std::vector<SubgroupRecord> records;
  std::vector<BigInt> u;
  std::vector<BigInt> j;
  std::vector<CensusClass> classes;
  // Orientable / non-orientable counts, present for squares presentations.
  std::optional<std::vector<BigInt>> j_plus;
  std::optional<std::vector<BigInt>> j_minus;
  // Cross-check through transitive actions; empty when the budget did not allow it.
  std::vector<BigInt> j_transitive;
  std::string transitive_note;
  bool from_cache = false;
};

struct CensusOptions {
  std::string cache_dir;
  bool cross_check = true;
};

CensusTable census(const Presentation &p, int N, const CensusOptions &options = {},
                   const Budget &budget = default_budget());

// |Hom(p, S_n)| for n = 0..N; entries past the budget are left empty.
std::vector<std::optional<BigInt>> symmetric_hom_counts(const Presentation &p, int N, const Budget &budget);
// j_n from |Hom(p, S_k)|, k <= n, by the transitive recursion.
std::vector<BigInt> transitive_subgroup_counts(const std::vector<BigInt> &h);

struct OrientabilitySplit {
  std::vector<bool> flags;
  std::vector<BigInt> j_plus;
  std::vector<BigInt> j_minus;
};
OrientabilitySplit orientability_split(const Presentation &p, const std::vector<SubgroupRecord> &records, int N);

std::string resolve_cache_dir(const std::string &flag);

} // namespace orbicount

#endif
