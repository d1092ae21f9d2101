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

#include "orbicount/subgroups.hpp"
#include "orbicount/homs.hpp"

#include "json.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

namespace orbicount {

namespace {

int letter_column(std::int32_t x) { return x > 0 ? 2 * (x - 1) : 2 * (-x - 1) + 1; }

} // namespace

CosetTable::CosetTable(int index, int generator_count, std::vector<int> entries)
    : index_(index), gens_(generator_count), entries_(std::move(entries)) {
  if (static_cast<int>(entries_.size()) != index_ * 2 * gens_) {
    fail_invalid("coset table has the wrong size");
  }
  for (int c = 0; c < index_; ++c) {
    for (int col = 0; col < 2 * gens_; ++col) {
      int d = at(c, col);
      if (d < 0 || d >= index_ || at(d, col ^ 1) != c) {
        fail_invalid("coset table columns are not mutually inverse permutations");
      }
    }
  }
}

CosetTable CosetTable::from_action(const std::vector<Perm> &generator_actions, int base) {
  int k = static_cast<int>(generator_actions.size());
  int m = k ? static_cast<int>(generator_actions[0].size()) : 1;
  std::vector<int> full(static_cast<std::size_t>(m) * 2 * k);
  for (int i = 0; i < k; ++i) {
    Perm inv = perm_inverse(generator_actions[i]);
    for (int c = 0; c < m; ++c) {
      full[static_cast<std::size_t>(c) * 2 * k + 2 * i] = generator_actions[i][c];
      full[static_cast<std::size_t>(c) * 2 * k + 2 * i + 1] = inv[c];
    }
  }
  CosetTable t(m, k, full);
  CosetTable s = t.standardized(base);
  if (s.index() != m) {
    fail_invalid("action is not transitive");
  }
  return s;
}

int CosetTable::trace(int c, const Word &w) const {
  for (auto x : w) {
    c = at(c, letter_column(x));
  }
  return c;
}

std::vector<Perm> CosetTable::action() const {
  std::vector<Perm> out(gens_, Perm(index_));
  for (int i = 0; i < gens_; ++i) {
    for (int c = 0; c < index_; ++c) {
      out[i][c] = at(c, 2 * i);
    }
  }
  return out;
}

CosetTable CosetTable::standardized(int base) const {
  std::vector<int> to_new(index_, -1);
  std::vector<int> to_old;
  to_new[base] = 0;
  to_old.push_back(base);
  std::vector<int> out;
  out.reserve(entries_.size());
  for (std::size_t i = 0; i < to_old.size(); ++i) {
    for (int col = 0; col < 2 * gens_; ++col) {
      int x = at(to_old[i], col);
      if (to_new[x] < 0) {
        to_new[x] = static_cast<int>(to_old.size());
        to_old.push_back(x);
      }
      out.push_back(to_new[x]);
    }
  }
  return CosetTable(static_cast<int>(to_old.size()), gens_, out);
}

CosetTable CosetTable::canonical() const {
  CosetTable best = standardized(0);
  for (int b = 1; b < index_; ++b) {
    CosetTable t = standardized(b);
    if (t.entries_ < best.entries_) {
      best = t;
    }
  }
  return best;
}

bool CosetTable::is_complete_for(const std::vector<Word> &relators) const {
  for (const auto &r : relators) {
    for (int c = 0; c < index_; ++c) {
      if (trace(c, r) != c) {
        return false;
      }
    }
  }
  return true;
}

std::string CosetTable::to_json() const {
  nlohmann::json j;
  j["index"] = index_;
  std::vector<std::vector<int>> act;
  for (const auto &p : action()) {
    act.push_back(p);
  }
  j["action"] = act;
  return j.dump();
}

CosetTable CosetTable::from_json(const std::string &text) {
  auto j = nlohmann::json::parse(text);
  auto act = j.at("action").get<std::vector<std::vector<int>>>();
  int index = j.at("index").get<int>();
  for (const auto &p : act) {
    if (static_cast<int>(p.size()) != index || !perm_is_valid(p)) {
      fail_invalid("coset table action is not a permutation of the cosets");
    }
  }
  if (act.empty()) {
    return CosetTable(index, 0, {});
  }
  return from_action(act, 0);
}

SubgroupRecord::SubgroupRecord(const Presentation &source, const CosetTable &table) : source_(source), table_(table) {
  int r = table.index();
  int k = table.generator_count();
  transversal_.assign(r, Word{});
  std::vector<char> seen(r, 0);
  // tree_edge[c*k+i] marks the edge c --g_i--> c.g_i as a spanning tree edge.
  std::vector<char> tree_edge(static_cast<std::size_t>(r) * k, 0);
  std::vector<int> queue{0};
  seen[0] = 1;
  for (std::size_t h = 0; h < queue.size(); ++h) {
    int c = queue[h];
    for (int col = 0; col < 2 * k; ++col) {
      int d = table.at(c, col);
      if (seen[d]) {
        continue;
      }
      seen[d] = 1;
      int gen = col / 2;
      bool inverse = col % 2 == 1;
      transversal_[d] = transversal_[c];
      transversal_[d].push_back(inverse ? -(gen + 1) : gen + 1);
      if (inverse) {
        tree_edge[static_cast<std::size_t>(d) * k + gen] = 1;
      } else {
        tree_edge[static_cast<std::size_t>(c) * k + gen] = 1;
      }
      queue.push_back(d);
    }
  }
  edge_generator_.assign(static_cast<std::size_t>(r) * k, -1);
  for (int c = 0; c < r; ++c) {
    for (int i = 0; i < k; ++i) {
      if (tree_edge[static_cast<std::size_t>(c) * k + i]) {
        continue;
      }
      int d = table.at(c, 2 * i);
      Word s = transversal_[c];
      s.push_back(i + 1);
      Word td = inverse_word(transversal_[d]);
      s.insert(s.end(), td.begin(), td.end());
      edge_generator_[static_cast<std::size_t>(c) * k + i] = static_cast<int>(schreier_.size());
      schreier_.push_back(free_reduce(s));
    }
  }
  std::vector<Word> rels;
  for (int c = 0; c < r; ++c) {
    for (const auto &rel : source.relators()) {
      int end = -1;
      Word w = rewrite_from(c, rel, &end);
      if (end != c) {
        fail_invalid("coset table does not satisfy the relators");
      }
      if (!w.empty()) {
        rels.push_back(w);
      }
    }
  }
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= schreier_.size(); ++i) {
    names.push_back("s" + std::to_string(i));
  }
  presentation_ = Presentation(static_cast<int>(schreier_.size()), rels, names);
  invariants_ = abelianization(presentation_);
  for (int c = 0; c < r; ++c) {
    bool fixed = true;
    for (const auto &s : schreier_) {
      if (table.trace(c, s) != c) {
        fixed = false;
        break;
      }
    }
    if (fixed) {
      fixed_cosets_.push_back(c);
    }
  }
  normalizer_order_ = static_cast<int>(fixed_cosets_.size());
  auto shape = source.one_relator_shape();
  if (shape && shape->kind == OneRelatorShape::Squares) {
    bool even = true;
    for (const auto &s : schreier_) {
      if (s.size() % 2 != 0) {
        even = false;
        break;
      }
    }
    orientable_ = even;
  }
}

Word SubgroupRecord::rewrite_from(int c, const Word &w, int *end) const {
  int k = table_.generator_count();
  Word out;
  for (auto x : w) {
    int gen = std::abs(x) - 1;
    if (x > 0) {
      int s = edge_generator_[static_cast<std::size_t>(c) * k + gen];
      if (s >= 0) {
        out.push_back(s + 1);
      }
      c = table_.at(c, 2 * gen);
    } else {
      int d = table_.at(c, 2 * gen + 1);
      int s = edge_generator_[static_cast<std::size_t>(d) * k + gen];
      if (s >= 0) {
        out.push_back(-(s + 1));
      }
      c = d;
    }
  }
  if (end) {
    *end = c;
  }
  return free_reduce(out);
}

Word SubgroupRecord::rewrite(const Word &w) const {
  int end = -1;
  Word out = rewrite_from(0, w, &end);
  if (end != 0) {
    fail_invalid("word is not an element of the subgroup");
  }
  return out;
}

Word conjugate_schreier_generator(const SubgroupRecord &record, const Word &u, int k) {
  if (k < 0 || k >= static_cast<int>(record.schreier_generators().size())) {
    fail_invalid("Schreier generator index out of range");
  }
  int c = record.table().trace(0, u);
  const auto &fixed = record.h_fixed_cosets();
  if (!std::binary_search(fixed.begin(), fixed.end(), c)) {
    fail_invalid("word does not normalize the subgroup");
  }
  Word w = concat(concat(u, record.schreier_generators()[k]), inverse_word(u));
  return record.rewrite(w);
}

namespace {

class LowIndexSearch {
public:
  LowIndexSearch(const Presentation &p, int N, const Budget &budget)
      : N_(N), k_(p.generator_count()), cols_(2 * p.generator_count()), budget_(budget) {
    for (const auto &r : p.relators()) {
      std::vector<int> cols;
      for (auto x : r) {
        cols.push_back(letter_column(x));
      }
      relators_.push_back(cols);
    }
  }

  std::vector<CosetTable> run() {
    std::vector<int> t(static_cast<std::size_t>(N_) * cols_, -1);
    if (k_ == 0) {
      results_.emplace_back(1, 0, std::vector<int>{});
      return results_;
    }
    dfs(t, 1);
    std::sort(results_.begin(), results_.end());
    return results_;
  }

private:
  int &cell(std::vector<int> &t, int c, int col) const { return t[static_cast<std::size_t>(c) * cols_ + col]; }

  bool process(std::vector<int> &t, int n) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto &rel : relators_) {
        int len = static_cast<int>(rel.size());
        for (int c = 0; c < n; ++c) {
          int f = c;
          int i = 0;
          while (i < len && cell(t, f, rel[i]) >= 0) {
            f = cell(t, f, rel[i]);
            ++i;
          }
          if (i == len) {
            if (f != c) {
              return false;
            }
            continue;
          }
          int b = c;
          int j = len;
          while (j > i && cell(t, b, rel[j - 1] ^ 1) >= 0) {
            b = cell(t, b, rel[j - 1] ^ 1);
            --j;
          }
          if (j == i + 1) {
            int col = rel[i];
            int &back = cell(t, b, col ^ 1);
            if (back >= 0 && back != f) {
              return false;
            }
            cell(t, f, col) = b;
            back = f;
            changed = true;
          }
        }
      }
    }
    return true;
  }

  void record_if_canonical(const std::vector<int> &t, int n) {
    std::vector<int> entries(t.begin(), t.begin() + static_cast<long>(n) * cols_);
    std::vector<int> to_new(n);
    std::vector<int> to_old(n);
    for (int b = 1; b < n; ++b) {
      std::fill(to_new.begin(), to_new.end(), -1);
      to_new[b] = 0;
      to_old[0] = b;
      int next = 1;
      int cmp = 0;
      for (int i = 0; i < n && cmp == 0; ++i) {
        for (int col = 0; col < cols_; ++col) {
          int x = entries[static_cast<std::size_t>(to_old[i]) * cols_ + col];
          if (to_new[x] < 0) {
            to_new[x] = next;
            to_old[next] = x;
            ++next;
          }
          int mine = entries[static_cast<std::size_t>(i) * cols_ + col];
          if (to_new[x] != mine) {
            cmp = to_new[x] < mine ? -1 : 1;
            break;
          }
        }
      }
      if (cmp < 0) {
        return;
      }
    }
    results_.emplace_back(n, k_, entries);
  }

  void dfs(std::vector<int> &t, int n) {
    if (++nodes_ > budget_.lowindex_nodes) {
      fail_budget("low-index search exceeded node budget " + std::to_string(budget_.lowindex_nodes));
    }
    if (!process(t, n)) {
      return;
    }
    int c = -1;
    int col = -1;
    for (int row = 0; row < n && c < 0; ++row) {
      for (int cc = 0; cc < cols_; ++cc) {
        if (cell(t, row, cc) < 0) {
          c = row;
          col = cc;
          break;
        }
      }
    }
    if (c < 0) {
      record_if_canonical(t, n);
      return;
    }
    for (int d = 0; d < n; ++d) {
      if (cell(t, d, col ^ 1) >= 0) {
        continue;
      }
      std::vector<int> copy = t;
      cell(copy, c, col) = d;
      cell(copy, d, col ^ 1) = c;
      dfs(copy, n);
    }
    if (n < N_) {
      std::vector<int> copy = t;
      cell(copy, c, col) = n;
      cell(copy, n, col ^ 1) = c;
      dfs(copy, n + 1);
    }
  }

  int N_;
  int k_;
  int cols_;
  Budget budget_;
  std::vector<std::vector<int>> relators_;
  std::vector<CosetTable> results_;
  std::uint64_t nodes_ = 0;
};

} // namespace

std::vector<CosetTable> low_index_tables(const Presentation &p, int N, const Budget &budget) {
  if (N < 1) {
    fail_invalid("maximum index must be at least 1");
  }
  return LowIndexSearch(p, N, budget).run();
}

std::vector<SubgroupRecord> low_index_subgroups(const Presentation &p, int N, const Budget &budget) {
  std::vector<SubgroupRecord> out;
  for (const auto &t : low_index_tables(p, N, budget)) {
    out.emplace_back(p, t);
  }
  return out;
}

SmithResult smith_normal_form(const std::vector<std::vector<BigInt>> &input, bool with_factors) {
  std::size_t m = input.size();
  std::size_t n = m ? input[0].size() : 0;
  auto A = input;
  SmithResult res;
  if (with_factors) {
    res.U.assign(m, std::vector<BigInt>(m, 0));
    res.V.assign(n, std::vector<BigInt>(n, 0));
    for (std::size_t i = 0; i < m; ++i) res.U[i][i] = 1;
    for (std::size_t i = 0; i < n; ++i) res.V[i][i] = 1;
  }
  auto swap_rows = [&](std::size_t a, std::size_t b) {
    std::swap(A[a], A[b]);
    if (with_factors) std::swap(res.U[a], res.U[b]);
  };
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    for (auto &row : A) std::swap(row[a], row[b]);
    if (with_factors)
      for (auto &row : res.V) std::swap(row[a], row[b]);
  };
  // row_a += q row_b
  auto add_row = [&](std::size_t a, std::size_t b, const BigInt &q) {
    for (std::size_t j = 0; j < n; ++j) A[a][j] += q * A[b][j];
    if (with_factors)
      for (std::size_t j = 0; j < m; ++j) res.U[a][j] += q * res.U[b][j];
  };
  auto add_col = [&](std::size_t a, std::size_t b, const BigInt &q) {
    for (std::size_t i = 0; i < m; ++i) A[i][a] += q * A[i][b];
    if (with_factors)
      for (std::size_t i = 0; i < n; ++i) res.V[i][a] += q * res.V[i][b];
  };
  std::size_t t = 0;
  for (; t < std::min(m, n); ++t) {
    for (;;) {
      std::size_t pi = m;
      std::size_t pj = n;
      for (std::size_t i = t; i < m; ++i) {
        for (std::size_t j = t; j < n; ++j) {
          if (A[i][j] != 0 && (pi == m || abs(A[i][j]) < abs(A[pi][pj]))) {
            pi = i;
            pj = j;
          }
        }
      }
      if (pi == m) {
        goto done;
      }
      swap_rows(t, pi);
      swap_cols(t, pj);
      bool dirty = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (A[i][t] != 0) {
          BigInt q = A[i][t] / A[t][t];
          add_row(i, t, -q);
          dirty = dirty || A[i][t] != 0;
        }
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (A[t][j] != 0) {
          BigInt q = A[t][j] / A[t][t];
          add_col(j, t, -q);
          dirty = dirty || A[t][j] != 0;
        }
      }
      if (dirty) {
        continue;
      }
      bool divisible = true;
      for (std::size_t i = t + 1; i < m && divisible; ++i) {
        for (std::size_t j = t + 1; j < n; ++j) {
          if (A[i][j] % A[t][t] != 0) {
            add_row(t, i, 1);
            divisible = false;
            break;
          }
        }
      }
      if (divisible) {
        break;
      }
    }
    if (A[t][t] < 0) {
      for (std::size_t j = 0; j < n; ++j) A[t][j] = -A[t][j];
      if (with_factors)
        for (std::size_t j = 0; j < m; ++j) res.U[t][j] = -res.U[t][j];
    }
    res.diagonal.push_back(A[t][t]);
  }
done:
  return res;
}

AbelianInvariants abelian_invariants_of_matrix(const std::vector<std::vector<BigInt>> &A, int columns) {
  AbelianInvariants inv;
  auto res = smith_normal_form(A);
  inv.free_rank = columns - static_cast<int>(res.diagonal.size());
  for (const auto &d : res.diagonal) {
    if (d > 1) {
      inv.torsion.push_back(d);
    }
  }
  return inv;
}

AbelianInvariants abelianization(const Presentation &p) {
  std::vector<std::vector<BigInt>> A;
  for (const auto &r : p.relators()) {
    std::vector<BigInt> row;
    for (auto e : exponent_sums(r, p.generator_count())) {
      row.emplace_back(static_cast<long>(e));
    }
    A.push_back(row);
  }
  return abelian_invariants_of_matrix(A, p.generator_count());
}

BigInt hom_count_to_cyclic(const AbelianInvariants &inv, const BigInt &r) {
  if (r <= 0) {
    fail_invalid("modulus must be positive");
  }
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(inv.free_rank));
  for (const auto &d : inv.torsion) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), r.get_mpz_t());
    out *= g;
  }
  return out;
}

std::vector<BigInt> transitive_subgroup_counts(const std::vector<BigInt> &h) {
  std::size_t N = h.size() - 1;
  std::vector<BigInt> t(N + 1, 0);
  std::vector<BigInt> j(N + 1, 0);
  for (std::size_t n = 1; n <= N; ++n) {
    BigInt acc = h[n];
    for (std::size_t k = 1; k < n; ++k) {
      acc -= binomial(BigInt(static_cast<unsigned long>(n - 1)), static_cast<unsigned>(k - 1)) * t[k] * h[n - k];
    }
    t[n] = acc;
    j[n] = acc / factorial(static_cast<unsigned>(n - 1));
  }
  return j;
}

std::vector<std::optional<BigInt>> symmetric_hom_counts(const Presentation &p, int N, const Budget &budget) {
  std::vector<std::optional<BigInt>> out(N + 1);
  out[0] = BigInt(1);
  auto shape = p.one_relator_shape();
  for (int n = 1; n <= N; ++n) {
    try {
      auto S = FiniteGroup::symmetric(n);
      if (shape && static_cast<std::uint64_t>(S->order()) <= budget.convolution_cap) {
        out[n] = one_relator_hom_count(*S, *shape, budget);
      } else {
        out[n] = count_homs(p, *S, budget);
      }
    } catch (const Error &e) {
      if (e.kind() != ErrorKind::Budget) {
        throw;
      }
      break;
    }
  }
  return out;
}

OrientabilitySplit orientability_split(const Presentation &p, const std::vector<SubgroupRecord> &records, int N) {
  auto shape = p.one_relator_shape();
  if (!shape || shape->kind != OneRelatorShape::Squares) {
    fail_invalid("orientability split needs a presentation of the nonorientable family");
  }
  OrientabilitySplit s;
  s.j_plus.assign(N + 1, 0);
  s.j_minus.assign(N + 1, 0);
  for (const auto &rec : records) {
    bool o = rec.orientable().value_or(false);
    s.flags.push_back(o);
    BigInt mult = rec.index() / rec.normalizer_quotient_order();
    if (rec.index() <= N) {
      (o ? s.j_plus : s.j_minus)[rec.index()] += mult;
    }
  }
  return s;
}

std::string resolve_cache_dir(const std::string &flag) {
  if (!flag.empty()) {
    return flag;
  }
  if (const char *env = std::getenv("ORBICOUNT_CACHE")) {
    if (*env) {
      return env;
    }
  }
  return ".orbicount-cache";
}

namespace {

std::string cache_path(const std::string &dir, const Presentation &p, int N) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%016llx_%d.json", static_cast<unsigned long long>(p.hash()), N);
  return (std::filesystem::path(dir) / buf).string();
}

std::optional<std::vector<CosetTable>> cache_load(const std::string &dir, const Presentation &p, int N) {
  std::ifstream in(cache_path(dir, p, N));
  if (!in) {
    return std::nullopt;
  }
  try {
    nlohmann::json j = nlohmann::json::parse(in);
    if (j.at("generator_count").get<int>() != p.generator_count() ||
        j.at("relators").get<std::vector<Word>>() != p.relators() || j.at("N").get<int>() != N) {
      return std::nullopt;
    }
    std::vector<CosetTable> out;
    for (const auto &t : j.at("tables")) {
      out.emplace_back(t.at("index").get<int>(), p.generator_count(), t.at("entries").get<std::vector<int>>());
    }
    return out;
  } catch (const std::exception &) {
    return std::nullopt;
  }
}

void cache_store(const std::string &dir, const Presentation &p, int N, const std::vector<CosetTable> &tables) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    return;
  }
  nlohmann::json j;
  j["generator_count"] = p.generator_count();
  j["relators"] = p.relators();
  j["N"] = N;
  j["tables"] = nlohmann::json::array();
  for (const auto &t : tables) {
    j["tables"].push_back({{"index", t.index()}, {"entries", t.entries()}});
  }
  std::string path = cache_path(dir, p, N);
  std::string tmp = path + ".tmp" + std::to_string(static_cast<long>(::getpid()));
  {
    std::ofstream out(tmp);
    if (!out) {
      return;
    }
    out << j.dump();
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
  }
}

} // namespace

CensusTable census(const Presentation &p, int N, const CensusOptions &options, const Budget &budget) {
  if (N < 1) {
    fail_invalid("maximum index must be at least 1");
  }
  CensusTable c;
  c.max_index = N;
  std::vector<CosetTable> tables;
  bool cached = false;
  if (!options.cache_dir.empty()) {
    if (auto hit = cache_load(options.cache_dir, p, N)) {
      tables = std::move(*hit);
      cached = true;
    }
  }
  if (!cached) {
    tables = low_index_tables(p, N, budget);
    if (!options.cache_dir.empty()) {
      cache_store(options.cache_dir, p, N, tables);
    }
  }
  c.from_cache = cached;
  c.u.assign(N + 1, 0);
  c.j.assign(N + 1, 0);
  for (const auto &t : tables) {
    c.records.emplace_back(p, t);
  }
  for (std::size_t i = 0; i < c.records.size(); ++i) {
    const auto &rec = c.records[i];
    int r = rec.index();
    BigInt mult = r / rec.normalizer_quotient_order();
    c.u[r] += 1;
    c.j[r] += mult;
    c.classes.push_back({i, r, rec.normalizer_quotient_order(), mult});
  }
  auto shape = p.one_relator_shape();
  if (shape && shape->kind == OneRelatorShape::Squares) {
    auto split = orientability_split(p, c.records, N);
    c.j_plus = split.j_plus;
    c.j_minus = split.j_minus;
  }
  if (options.cross_check) {
    auto h = symmetric_hom_counts(p, N, budget);
    std::vector<BigInt> hv{BigInt(1)};
    for (int n = 1; n <= N && h[n]; ++n) {
      hv.push_back(*h[n]);
    }
    c.j_transitive = transitive_subgroup_counts(hv);
    if (static_cast<int>(hv.size()) <= N) {
      c.transitive_note = "transitive cross-check limited to index " + std::to_string(hv.size() - 1) + " by budget";
    }
  }
  return c;
}

} // namespace orbicount
