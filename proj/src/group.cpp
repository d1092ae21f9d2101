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

#include "orbicount/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace orbicount {

Perm perm_compose(const Perm &p, const Perm &q) {
  Perm r(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    r[i] = p[q[i]];
  }
  return r;
}

Perm perm_inverse(const Perm &p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    r[p[i]] = static_cast<int>(i);
  }
  return r;
}

Perm perm_identity(int degree) {
  Perm p(degree);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

bool perm_is_valid(const Perm &p) {
  std::vector<char> seen(p.size(), 0);
  for (int x : p) {
    if (x < 0 || x >= static_cast<int>(p.size()) || seen[x]) {
      return false;
    }
    seen[x] = 1;
  }
  return true;
}

std::string perm_to_string(const Perm &p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    s += (i ? "," : "") + std::to_string(p[i]);
  }
  return s + "]";
}

std::vector<std::vector<int>> perm_cycles(const Perm &p) {
  std::vector<std::vector<int>> cycles;
  std::vector<char> seen(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) {
      continue;
    }
    std::vector<int> c;
    for (int x = static_cast<int>(i); !seen[x]; x = p[x]) {
      seen[x] = 1;
      c.push_back(x);
    }
    cycles.push_back(c);
  }
  return cycles;
}

std::uint64_t perm_rank(const Perm &p) {
  std::uint64_t rank = 0;
  int n = static_cast<int>(p.size());
  for (int i = 0; i < n; ++i) {
    std::uint64_t smaller = 0;
    for (int j = i + 1; j < n; ++j) {
      if (p[j] < p[i]) {
        ++smaller;
      }
    }
    rank = rank * static_cast<std::uint64_t>(n - i) + smaller;
  }
  return rank;
}

Perm perm_unrank(std::uint64_t rank, int degree) {
  std::vector<std::uint64_t> digits(degree);
  for (int i = degree - 1; i >= 0; --i) {
    std::uint64_t base = static_cast<std::uint64_t>(degree - i);
    digits[i] = rank % base;
    rank /= base;
  }
  std::vector<int> pool(degree);
  std::iota(pool.begin(), pool.end(), 0);
  Perm p(degree);
  for (int i = 0; i < degree; ++i) {
    p[i] = pool[digits[i]];
    pool.erase(pool.begin() + static_cast<long>(digits[i]));
  }
  return p;
}

namespace {

std::string perm_key(const Perm &p) {
  std::string k(p.size(), '\0');
  for (std::size_t i = 0; i < p.size(); ++i) {
    k[i] = static_cast<char>(p[i]);
  }
  return k;
}

} // namespace

WreathCodec::WreathCodec(GroupPtr base, int n) : base_(std::move(base)), n_(n) {
  if (n < 0 || n > 12) {
    fail_invalid("wreath degree must lie in 0..12");
  }
  std::uint64_t g = static_cast<std::uint64_t>(base_->order());
  gpow_ = 1;
  for (int i = 0; i < n; ++i) {
    gpow_ *= g;
  }
  std::uint64_t nf = 1;
  for (int i = 2; i <= n; ++i) {
    nf *= static_cast<std::uint64_t>(i);
  }
  nfact_ = static_cast<int>(nf);
  order_ = gpow_ * nf;
  if (order_ > (1ULL << 30)) {
    fail_budget("wreath product too large");
  }
  Perm p = perm_identity(n);
  do {
    perms_.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  perm_inv_.resize(nfact_);
  for (int r = 0; r < nfact_; ++r) {
    perm_inv_[r] = static_cast<std::int32_t>(perm_rank(perm_inverse(perms_[r])));
  }
  if (nfact_ <= 720) {
    comp_.resize(static_cast<std::size_t>(nfact_) * nfact_);
    for (int a = 0; a < nfact_; ++a) {
      for (int b = 0; b < nfact_; ++b) {
        comp_[static_cast<std::size_t>(a) * nfact_ + b] =
            static_cast<std::int32_t>(perm_rank(perm_compose(perms_[a], perms_[b])));
      }
    }
  }
  sig_.resize(order_);
  f_.resize(order_ * static_cast<std::uint64_t>(n));
  for (std::uint64_t id = 0; id < order_; ++id) {
    sig_[id] = static_cast<std::int32_t>(id / gpow_);
    std::uint64_t rest = id % gpow_;
    for (int k = n - 1; k >= 0; --k) {
      f_[id * n + k] = static_cast<std::int32_t>(rest % g);
      rest /= g;
    }
  }
}

int WreathCodec::compose_rank(int a, int b) const {
  if (!comp_.empty()) {
    return comp_[static_cast<std::size_t>(a) * nfact_ + b];
  }
  return static_cast<int>(perm_rank(perm_compose(perms_[a], perms_[b])));
}

int WreathCodec::encode_rank(const int *f, int sigma_rank) const {
  std::uint64_t g = static_cast<std::uint64_t>(base_->order());
  std::uint64_t v = 0;
  for (int k = 0; k < n_; ++k) {
    v = v * g + static_cast<std::uint64_t>(f[k]);
  }
  return static_cast<int>(static_cast<std::uint64_t>(sigma_rank) * gpow_ + v);
}

int WreathCodec::encode(const std::vector<int> &f, const Perm &sigma) const {
  if (static_cast<int>(f.size()) != n_ || static_cast<int>(sigma.size()) != n_ || !perm_is_valid(sigma)) {
    fail_invalid("wreath element has the wrong shape");
  }
  for (int x : f) {
    if (x < 0 || x >= base_->order()) {
      fail_invalid("wreath element f-component out of range");
    }
  }
  return encode_rank(f.data(), static_cast<int>(perm_rank(sigma)));
}

std::vector<int> WreathCodec::f_vector(int id) const {
  const std::int32_t *fp = f(id);
  return std::vector<int>(fp, fp + n_);
}

int WreathCodec::mul(int a, int b) const {
  int fa[16];
  const std::int32_t *f1 = f(a);
  const std::int32_t *f2 = f(b);
  const Perm &s1inv = perms_[perm_inv_[sig_[a]]];
  for (int k = 0; k < n_; ++k) {
    fa[k] = base_->mul(f1[k], f2[s1inv[k]]);
  }
  return encode_rank(fa, compose_rank(sig_[a], sig_[b]));
}

int WreathCodec::inv(int a) const {
  // (f, s)^-1 = (s^-1 f^-1, s^-1): value at k is f(s(k))^-1.
  int fa[16];
  const std::int32_t *f1 = f(a);
  const Perm &s = perms_[sig_[a]];
  for (int k = 0; k < n_; ++k) {
    fa[k] = base_->inv(f1[s[k]]);
  }
  return encode_rank(fa, perm_inv_[sig_[a]]);
}

bool WreathCodec::commutes(int a, int b) const {
  int sa = sig_[a];
  int sb = sig_[b];
  if (compose_rank(sa, sb) != compose_rank(sb, sa)) {
    return false;
  }
  const std::int32_t *fa = f(a);
  const std::int32_t *fb = f(b);
  const Perm &sainv = perms_[perm_inv_[sa]];
  const Perm &sbinv = perms_[perm_inv_[sb]];
  for (int k = 0; k < n_; ++k) {
    if (base_->mul(fa[k], fb[sainv[k]]) != base_->mul(fb[k], fa[sbinv[k]])) {
      return false;
    }
  }
  return true;
}

std::vector<int> WreathCodec::generators() const {
  std::vector<int> gens;
  std::vector<int> f(n_, 0);
  Perm id = perm_identity(n_);
  if (n_ >= 1) {
    for (int g : base_->generators()) {
      f[0] = g;
      gens.push_back(encode(f, id));
    }
    f[0] = 0;
  }
  if (n_ >= 2) {
    Perm t = id;
    std::swap(t[0], t[1]);
    gens.push_back(encode(f, t));
  }
  if (n_ >= 3) {
    Perm c(n_);
    for (int k = 0; k < n_; ++k) {
      c[k] = (k + 1) % n_;
    }
    gens.push_back(encode(f, c));
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  gens.erase(std::remove(gens.begin(), gens.end(), 0), gens.end());
  return gens;
}

std::string WreathCodec::label(int id) const {
  std::string s = "{\"f\":[";
  const std::int32_t *fp = f(id);
  for (int k = 0; k < n_; ++k) {
    s += (k ? "," : "") + std::to_string(fp[k]);
  }
  return s + "],\"sigma\":" + perm_to_string(sigma(id)) + "}";
}

std::pair<int, int> WreathCodec::act(int id, int k, int x) const {
  int sk = sigma(id)[k];
  return {sk, base_->mul(f(id)[sk], x)};
}

int FiniteGroup::mul(int a, int b) const {
  if (!table_.empty()) {
    return static_cast<int>(table_[static_cast<std::size_t>(a) * order_ + b]);
  }
  if (codec_) {
    return codec_->mul(a, b);
  }
  if (parent_) {
    return parent_index_.at(parent_->mul(parent_ids_[a], parent_ids_[b]));
  }
  return perm_index_.at(perm_key(perm_compose(perms_[a], perms_[b])));
}

int FiniteGroup::power(int a, std::int64_t k) const {
  if (k < 0) {
    return power(inv(a), -k);
  }
  int result = identity();
  int base = a;
  while (k > 0) {
    if (k & 1) {
      result = mul(result, base);
    }
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

int FiniteGroup::element_order(int a) const {
  int k = 1;
  for (int x = a; x != identity(); x = mul(x, a)) {
    ++k;
  }
  return k;
}

bool FiniteGroup::commutes(int a, int b) const {
  if (codec_ && table_.empty()) {
    return codec_->commutes(a, b);
  }
  return mul(a, b) == mul(b, a);
}

int FiniteGroup::index_of_perm(const Perm &p) const {
  auto it = perm_index_.find(perm_key(p));
  if (it == perm_index_.end()) {
    fail_invalid("permutation " + perm_to_string(p) + " is not an element of the group");
  }
  return it->second;
}

std::string FiniteGroup::element_label(int a) const {
  if (codec_) {
    return codec_->label(a);
  }
  if (!perms_.empty()) {
    return perm_to_string(perms_[a]);
  }
  return std::to_string(a);
}

void FiniteGroup::finish(const Budget &budget) {
  if (!perms_.empty()) {
    perm_index_.reserve(perms_.size());
    for (std::size_t i = 0; i < perms_.size(); ++i) {
      perm_index_[perm_key(perms_[i])] = static_cast<int>(i);
    }
  }
  if (parent_) {
    for (std::size_t i = 0; i < parent_ids_.size(); ++i) {
      parent_index_[parent_ids_[i]] = static_cast<int>(i);
    }
  }
  if (static_cast<std::uint64_t>(order_) <= budget.table_cap && table_.empty()) {
    std::vector<std::uint32_t> t(static_cast<std::size_t>(order_) * order_);
    for (int a = 0; a < order_; ++a) {
      for (int b = 0; b < order_; ++b) {
        t[static_cast<std::size_t>(a) * order_ + b] = static_cast<std::uint32_t>(mul(a, b));
      }
    }
    table_ = std::move(t);
  }
  if (inv_.empty()) {
    inv_.assign(order_, -1);
    if (codec_) {
      for (int a = 0; a < order_; ++a) {
        inv_[a] = codec_->inv(a);
      }
    } else if (!perms_.empty()) {
      for (int a = 0; a < order_; ++a) {
        inv_[a] = index_of_perm(perm_inverse(perms_[a]));
      }
    } else if (parent_) {
      for (int a = 0; a < order_; ++a) {
        inv_[a] = parent_index_.at(parent_->inv(parent_ids_[a]));
      }
    } else {
      for (int a = 0; a < order_; ++a) {
        for (int b = 0; b < order_; ++b) {
          if (mul(a, b) == 0) {
            inv_[a] = b;
            break;
          }
        }
      }
    }
  }
  build_classes();
}

void FiniteGroup::build_classes() {
  centralizers_.clear();
  rep_centralizers_.clear();
  class_of_.assign(order_, -1);
  transversal_.assign(order_, 0);
  class_reps_.clear();
  class_sizes_.clear();
  std::vector<int> queue;
  for (int x = 0; x < order_; ++x) {
    if (class_of_[x] >= 0) {
      continue;
    }
    int c = static_cast<int>(class_reps_.size());
    class_reps_.push_back(x);
    class_of_[x] = c;
    transversal_[x] = identity();
    queue.assign(1, x);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int y = queue[head];
      for (int g : gens_) {
        int z = conj(g, y);
        if (class_of_[z] < 0) {
          class_of_[z] = c;
          transversal_[z] = mul(g, transversal_[y]);
          queue.push_back(z);
        }
      }
    }
    class_sizes_.push_back(static_cast<int>(queue.size()));
  }
  rep_centralizers_.resize(class_reps_.size());
}

std::vector<int> FiniteGroup::centralizer(const std::vector<int> &S) const {
  if (S.empty()) {
    std::vector<int> all(order_);
    std::iota(all.begin(), all.end(), 0);
    return all;
  }
  std::vector<int> current = element_centralizer(S[0]);
  for (std::size_t i = 1; i < S.size(); ++i) {
    std::vector<int> next;
    for (int g : current) {
      if (commutes(g, S[i])) {
        next.push_back(g);
      }
    }
    current.swap(next);
  }
  return current;
}

const std::vector<int> &FiniteGroup::element_centralizer(int a) const {
  std::lock_guard<std::mutex> lock(cache_mutex_);
  auto it = centralizers_.find(a);
  if (it != centralizers_.end()) {
    return *it->second;
  }
  int c = class_of_[a];
  if (!rep_centralizers_[c]) {
    auto list = std::make_unique<std::vector<int>>();
    int rep = class_reps_[c];
    for (int g = 0; g < order_; ++g) {
      if (commutes(g, rep)) {
        list->push_back(g);
      }
    }
    rep_centralizers_[c] = std::move(list);
  }
  const std::vector<int> &base = *rep_centralizers_[c];
  auto list = std::make_unique<std::vector<int>>();
  int t = transversal_[a];
  if (t == identity()) {
    *list = base;
  } else {
    list->reserve(base.size());
    for (int g : base) {
      list->push_back(conj(t, g));
    }
    std::sort(list->begin(), list->end());
  }
  auto &ref = *list;
  centralizers_[a] = std::move(list);
  return ref;
}

std::vector<int> FiniteGroup::square_roots(int a) const {
  std::lock_guard<std::mutex> lock(cache_mutex_);
  if (sqrt_offsets_.empty()) {
    std::vector<int> sq(order_);
    std::vector<int> counts(order_ + 1, 0);
    for (int x = 0; x < order_; ++x) {
      sq[x] = mul(x, x);
      ++counts[sq[x] + 1];
    }
    for (int i = 0; i < order_; ++i) {
      counts[i + 1] += counts[i];
    }
    sqrt_values_.assign(order_, 0);
    std::vector<int> fill(counts.begin(), counts.end() - 1);
    for (int x = 0; x < order_; ++x) {
      sqrt_values_[fill[sq[x]]++] = x;
    }
    sqrt_offsets_ = std::move(counts);
  }
  return std::vector<int>(sqrt_values_.begin() + sqrt_offsets_[a], sqrt_values_.begin() + sqrt_offsets_[a + 1]);
}

bool FiniteGroup::is_subgroup(const std::vector<int> &elements) const {
  if (elements.empty()) {
    return false;
  }
  std::vector<char> in(order_, 0);
  for (int e : elements) {
    in[e] = 1;
  }
  if (!in[identity()]) {
    return false;
  }
  for (int a : elements) {
    for (int b : elements) {
      if (!in[mul(a, b)]) {
        return false;
      }
    }
  }
  return true;
}

GroupPtr FiniteGroup::from_generators(int degree, const std::vector<Perm> &gens, const Budget &budget,
                                      std::string name) {
  if (degree < 0 || degree > 255) {
    fail_invalid("permutation degree out of range");
  }
  for (const auto &g : gens) {
    if (static_cast<int>(g.size()) != degree || !perm_is_valid(g)) {
      fail_invalid("generator " + perm_to_string(g) + " is not a permutation of degree " + std::to_string(degree));
    }
  }
  std::vector<Perm> elements{perm_identity(degree)};
  std::unordered_map<std::string, int> seen{{perm_key(elements[0]), 0}};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto &g : gens) {
      Perm p = perm_compose(elements[head], g);
      std::string k = perm_key(p);
      if (!seen.count(k)) {
        if (elements.size() >= budget.group_order_cap) {
          fail_budget("group closure exceeds order cap " + std::to_string(budget.group_order_cap));
        }
        seen.emplace(k, static_cast<int>(elements.size()));
        elements.push_back(std::move(p));
      }
    }
  }
  std::sort(elements.begin(), elements.end());
  auto G = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  G->order_ = static_cast<int>(elements.size());
  G->degree_ = degree;
  G->name_ = std::move(name);
  G->perms_ = std::move(elements);
  G->finish(budget);
  for (const auto &g : gens) {
    int id = G->index_of_perm(g);
    if (id != 0 && std::find(G->gens_.begin(), G->gens_.end(), id) == G->gens_.end()) {
      G->gens_.push_back(id);
    }
  }
  G->build_classes();
  return G;
}

GroupPtr FiniteGroup::trivial() { return from_generators(1, {}, default_budget(), "trivial"); }

GroupPtr FiniteGroup::cyclic(int k) {
  if (k < 1) {
    fail_invalid("cyclic group order must be positive");
  }
  Perm c(k);
  for (int i = 0; i < k; ++i) {
    c[i] = (i + 1) % k;
  }
  return from_generators(k, k > 1 ? std::vector<Perm>{c} : std::vector<Perm>{}, default_budget(),
                         "Z" + std::to_string(k));
}

GroupPtr FiniteGroup::symmetric(int k) {
  if (k < 1) {
    fail_invalid("symmetric group degree must be positive");
  }
  std::vector<Perm> gens;
  if (k >= 2) {
    Perm t = perm_identity(k);
    std::swap(t[0], t[1]);
    gens.push_back(t);
  }
  if (k >= 3) {
    Perm c(k);
    for (int i = 0; i < k; ++i) {
      c[i] = (i + 1) % k;
    }
    gens.push_back(c);
  }
  return from_generators(k, gens, default_budget(), "S" + std::to_string(k));
}

GroupPtr FiniteGroup::direct_product(const GroupPtr &a, const GroupPtr &b) {
  if (!a->has_perms() || !b->has_perms()) {
    fail_invalid("direct product needs permutation groups");
  }
  int da = a->degree();
  int db = b->degree();
  std::vector<Perm> gens;
  for (int g : a->generators()) {
    Perm p = perm_identity(da + db);
    for (int i = 0; i < da; ++i) p[i] = a->perm(g)[i];
    gens.push_back(p);
  }
  for (int g : b->generators()) {
    Perm p = perm_identity(da + db);
    for (int i = 0; i < db; ++i) p[da + i] = da + b->perm(g)[i];
    gens.push_back(p);
  }
  return from_generators(da + db, gens, default_budget(), a->name() + "x" + b->name());
}

GroupPtr FiniteGroup::wreath(const GroupPtr &base, int n, const Budget &budget) {
  auto codec = std::make_shared<const WreathCodec>(base, n);
  if (codec->order() > budget.wreath_cap) {
    fail_budget("wreath product order " + std::to_string(codec->order()) + " exceeds cap " +
                std::to_string(budget.wreath_cap));
  }
  auto G = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  G->order_ = static_cast<int>(codec->order());
  G->degree_ = n;
  G->name_ = base->name() + "wrS" + std::to_string(n);
  G->codec_ = codec;
  G->gens_ = codec->generators();
  G->finish(budget);
  return G;
}

GroupPtr FiniteGroup::subgroup(const GroupPtr &parent, const std::vector<int> &elements) {
  std::vector<int> sorted = elements;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.empty() || sorted[0] != parent->identity()) {
    fail_invalid("subgroup must contain the identity");
  }
  auto G = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  G->order_ = static_cast<int>(sorted.size());
  G->parent_ = parent;
  G->parent_ids_ = sorted;
  G->name_ = parent->name() + "_sub";
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    G->parent_index_[sorted[i]] = static_cast<int>(i);
  }
  if (sorted.size() <= 200) {
    for (int a : sorted) {
      for (int b : sorted) {
        if (!G->parent_index_.count(parent->mul(a, b))) {
          fail_invalid("element list is not closed under multiplication");
        }
      }
    }
  }
  // Greedy generating set.
  std::vector<char> in(sorted.size(), 0);
  in[0] = 1;
  std::vector<int> closure{0};
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (in[i]) {
      continue;
    }
    G->gens_.push_back(static_cast<int>(i));
    closure.clear();
    std::fill(in.begin(), in.end(), 0);
    in[0] = 1;
    closure.push_back(0);
    for (std::size_t h = 0; h < closure.size(); ++h) {
      for (int g : G->gens_) {
        int z = G->parent_index_.at(parent->mul(sorted[closure[h]], sorted[g]));
        if (!in[z]) {
          in[z] = 1;
          closure.push_back(z);
        }
      }
    }
  }
  Budget b = default_budget();
  G->parent_index_.clear();
  G->finish(b);
  return G;
}

GroupPtr FiniteGroup::from_multiplication(int order, const std::function<int(int, int)> &mul, std::string name) {
  if (order < 1) {
    fail_invalid("group order must be positive");
  }
  auto G = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  G->order_ = order;
  G->name_ = std::move(name);
  G->table_.resize(static_cast<std::size_t>(order) * order);
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      G->table_[static_cast<std::size_t>(a) * order + b] = static_cast<std::uint32_t>(mul(a, b));
    }
  }
  std::vector<char> in(order, 0);
  in[0] = 1;
  std::vector<int> closure{0};
  for (int i = 0; i < order; ++i) {
    if (in[i]) {
      continue;
    }
    G->gens_.push_back(i);
    std::fill(in.begin(), in.end(), 0);
    in[0] = 1;
    closure.assign(1, 0);
    for (std::size_t h = 0; h < closure.size(); ++h) {
      for (int g : G->gens_) {
        int z = G->mul(closure[h], g);
        if (!in[z]) {
          in[z] = 1;
          closure.push_back(z);
        }
      }
    }
  }
  G->finish(default_budget());
  return G;
}

} // namespace orbicount
