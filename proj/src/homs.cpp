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

#include <algorithm>
#include <map>
#include <set>

namespace orbicount {

int evaluate_word(const FiniteGroup &G, const Word &w, const std::vector<int> &images) {
  int acc = G.identity();
  for (auto x : w) {
    int img = images.at(std::abs(x) - 1);
    acc = G.mul(acc, x > 0 ? img : G.inv(img));
  }
  return acc;
}

bool is_homomorphism(const Presentation &p, const FiniteGroup &G, const std::vector<int> &images) {
  if (static_cast<int>(images.size()) != p.generator_count()) {
    return false;
  }
  for (const auto &r : p.relators()) {
    if (evaluate_word(G, r, images) != G.identity()) {
      return false;
    }
  }
  return true;
}

HomEnumerator::HomEnumerator(const Presentation &p, const FiniteGroup &G, const Budget &budget)
    : G_(G), budget_(budget), k_(p.generator_count()) {
  for (const auto &r : p.relators()) {
    std::vector<Letter> w;
    for (auto x : r) {
      w.push_back({std::abs(x) - 1, x < 0});
    }
    relators_.push_back(w);
  }
  std::vector<int> order;
  std::vector<char> placed(k_, 0);
  for (const auto &r : relators_) {
    for (const auto &l : r) {
      if (!placed[l.gen]) {
        placed[l.gen] = 1;
        order.push_back(l.gen);
      }
    }
  }
  for (int g = 0; g < k_; ++g) {
    if (!placed[g]) {
      unused_.push_back(g);
    }
  }
  std::vector<int> position(k_, -1);
  for (std::size_t i = 0; i < order.size(); ++i) {
    position[order[i]] = static_cast<int>(i);
  }
  std::vector<std::vector<int>> completed(order.size());
  for (std::size_t ri = 0; ri < relators_.size(); ++ri) {
    int last = -1;
    for (const auto &l : relators_[ri]) {
      last = std::max(last, position[l.gen]);
    }
    completed[last].push_back(static_cast<int>(ri));
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    Step st;
    st.gen = order[i];
    std::vector<int> comm_covered;
    for (int ri : completed[i]) {
      const auto &w = relators_[ri];
      if (w.size() != 4) {
        continue;
      }
      const Letter &a = w[0];
      const Letter &b = w[1];
      bool is_comm = a.gen != b.gen && w[2].gen == a.gen && w[2].inverse != a.inverse && w[3].gen == b.gen &&
                     w[3].inverse != b.inverse && (a.gen == st.gen || b.gen == st.gen);
      if (is_comm) {
        comm_covered.push_back(ri);
        st.others.push_back(a.gen == st.gen ? b.gen : a.gen);
      }
    }
    for (int ri : completed[i]) {
      const auto &w = relators_[ri];
      int occurrences = 0;
      for (const auto &l : w) {
        occurrences += l.gen == st.gen;
      }
      if (occurrences == 1) {
        st.source = Source::Singleton;
        st.covered = ri;
        std::size_t at = 0;
        while (w[at].gen != st.gen) {
          ++at;
        }
        st.before.assign(w.begin(), w.begin() + static_cast<long>(at));
        st.after.assign(w.begin() + static_cast<long>(at) + 1, w.end());
        st.inverse = w[at].inverse;
        break;
      }
    }
    if (st.source == Source::All && !comm_covered.empty()) {
      st.source = Source::Centralizer;
    }
    if (st.source == Source::All) {
      for (int ri : completed[i]) {
        const auto &w = relators_[ri];
        int occurrences = 0;
        for (const auto &l : w) {
          occurrences += l.gen == st.gen;
        }
        if (occurrences != 2) {
          continue;
        }
        for (std::size_t j = 0; j + 1 < w.size(); ++j) {
          if (w[j].gen == st.gen && w[j + 1].gen == st.gen && w[j].inverse == w[j + 1].inverse) {
            st.source = Source::SquareRoot;
            st.covered = ri;
            // w = A x x B, so x^2 = (B A)^-1 up to the sign of x.
            st.after.assign(w.begin() + static_cast<long>(j) + 2, w.end());
            st.after.insert(st.after.end(), w.begin(), w.begin() + static_cast<long>(j));
            st.inverse = w[j].inverse;
            break;
          }
        }
        if (st.source == Source::SquareRoot) {
          break;
        }
      }
    }
    if (st.source != Source::Centralizer) {
      st.others.clear();
      comm_covered.clear();
    }
    for (int ri : completed[i]) {
      if (ri != st.covered && std::find(comm_covered.begin(), comm_covered.end(), ri) == comm_covered.end()) {
        st.checks.push_back(ri);
      }
    }
    steps_.push_back(std::move(st));
  }
  scratch_.resize(steps_.size());
}

int HomEnumerator::eval(const std::vector<Letter> &w) const {
  int acc = G_.identity();
  for (const auto &l : w) {
    int img = images_[l.gen];
    acc = G_.mul(acc, l.inverse ? G_.inv(img) : img);
  }
  return acc;
}

void HomEnumerator::tick() {
  if (++nodes_ > budget_.hom_nodes) {
    fail_budget("homomorphism search exceeded node budget " + std::to_string(budget_.hom_nodes));
  }
}

template <typename Leaf> void HomEnumerator::search(std::size_t depth, Leaf &leaf) {
  if (depth == steps_.size()) {
    leaf();
    return;
  }
  const Step &st = steps_[depth];
  auto try_value = [&](int v) {
    tick();
    images_[st.gen] = v;
    for (int ri : st.checks) {
      if (eval(relators_[ri]) != G_.identity()) {
        return;
      }
    }
    search(depth + 1, leaf);
  };
  bool last = depth + 1 == steps_.size();
  switch (st.source) {
  case Source::Singleton: {
    // before x^e after = 1 gives x^e = before^-1 after^-1.
    int v = G_.mul(G_.inv(eval(st.before)), G_.inv(eval(st.after)));
    if (st.inverse) {
      v = G_.inv(v);
    }
    try_value(v);
    break;
  }
  case Source::Centralizer: {
    if (st.others.size() == 1) {
      const std::vector<int> &cands = G_.element_centralizer(images_[st.others[0]]);
      if (last && counting_ && st.checks.empty()) {
        nodes_ += cands.size();
        leaf_count_ += BigInt(static_cast<unsigned long>(cands.size())) * weight_;
        return;
      }
      for (int v : cands) {
        try_value(v);
      }
      break;
    }
    std::vector<int> &cands = scratch_[depth];
    centralizer_candidates(st, cands);
    if (last && counting_ && st.checks.empty()) {
      leaf_count_ += BigInt(static_cast<unsigned long>(cands.size())) * weight_;
      return;
    }
    for (std::size_t i = 0; i < cands.size(); ++i) {
      try_value(scratch_[depth][i]);
    }
    break;
  }
  case Source::SquareRoot: {
    int target = G_.inv(eval(st.after));
    if (st.inverse) {
      target = G_.inv(target);
    }
    std::vector<int> cands = G_.square_roots(target);
    if (last && counting_ && st.checks.empty()) {
      nodes_ += cands.size();
      leaf_count_ += BigInt(static_cast<unsigned long>(cands.size())) * weight_;
      return;
    }
    for (int v : cands) {
      try_value(v);
    }
    break;
  }
  case Source::All:
    if (depth == 0 && by_class_) {
      for (int c = 0; c < G_.class_count(); ++c) {
        weight_ = static_cast<std::uint64_t>(G_.class_sizes()[c]);
        try_value(G_.class_reps()[c]);
      }
      weight_ = 1;
      break;
    }
    for (int v = 0; v < G_.order(); ++v) {
      try_value(v);
    }
    break;
  }
}

void HomEnumerator::centralizer_candidates(const Step &st, std::vector<int> &out) const {
  out.clear();
  std::size_t best = 0;
  std::size_t best_size = static_cast<std::size_t>(-1);
  for (std::size_t i = 0; i < st.others.size(); ++i) {
    std::size_t sz = G_.element_centralizer(images_[st.others[i]]).size();
    if (sz < best_size) {
      best_size = sz;
      best = i;
    }
  }
  for (int v : G_.element_centralizer(images_[st.others[best]])) {
    bool ok = true;
    for (std::size_t i = 0; i < st.others.size() && ok; ++i) {
      if (i != best) {
        ok = G_.commutes(v, images_[st.others[i]]);
      }
    }
    if (ok) {
      out.push_back(v);
    }
  }
}

BigInt HomEnumerator::count() {
  images_.assign(k_, G_.identity());
  nodes_ = 0;
  counting_ = true;
  by_class_ = true;
  weight_ = 1;
  leaf_count_ = 0;
  auto leaf = [this]() { leaf_count_ += weight_; };
  search(0, leaf);
  counting_ = false;
  by_class_ = false;
  BigInt factor;
  mpz_ui_pow_ui(factor.get_mpz_t(), static_cast<unsigned long>(G_.order()), unused_.size());
  return leaf_count_ * factor;
}

void HomEnumerator::for_each(const std::function<void(const std::vector<int> &)> &visit) {
  images_.assign(k_, G_.identity());
  nodes_ = 0;
  counting_ = false;
  auto leaf = [&]() {
    if (unused_.empty()) {
      visit(images_);
      return;
    }
    // Odometer over generators that occur in no relator.
    for (int g : unused_) {
      images_[g] = 0;
    }
    for (;;) {
      tick();
      visit(images_);
      std::size_t i = 0;
      while (i < unused_.size()) {
        int &x = images_[unused_[unused_.size() - 1 - i]];
        if (++x < G_.order()) {
          break;
        }
        x = 0;
        ++i;
      }
      if (i == unused_.size()) {
        break;
      }
    }
  };
  search(0, leaf);
}

void HomEnumerator::for_each_weighted(const std::function<void(const std::vector<int> &, std::uint64_t)> &visit) {
  by_class_ = true;
  weight_ = 1;
  try {
    for_each([&](const std::vector<int> &im) { visit(im, weight_); });
  } catch (...) {
    by_class_ = false;
    throw;
  }
  by_class_ = false;
}

std::vector<std::vector<int>> HomEnumerator::list() {
  std::vector<std::vector<int>> out;
  for_each([&](const std::vector<int> &im) { out.push_back(im); });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<GroupHom> enumerate_homs(const Presentation &p, const FiniteGroup &G, const Budget &budget) {
  HomEnumerator e(p, G, budget);
  std::vector<GroupHom> out;
  for (auto &im : e.list()) {
    out.push_back({std::move(im)});
  }
  return out;
}

BigInt count_homs(const Presentation &p, const FiniteGroup &G, const Budget &budget) {
  return HomEnumerator(p, G, budget).count();
}

std::vector<HomClass> hom_classes(const Presentation &p, const FiniteGroup &G, const Budget &budget) {
  HomEnumerator e(p, G, budget);
  auto all = e.list();
  std::vector<char> seen(all.size(), 0);
  std::vector<HomClass> out;
  std::vector<int> conj(p.generator_count());
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (seen[i]) {
      continue;
    }
    seen[i] = 1;
    std::vector<std::size_t> queue{i};
    for (std::size_t h = 0; h < queue.size(); ++h) {
      const auto &cur = all[queue[h]];
      for (int g : G.generators()) {
        for (std::size_t j = 0; j < cur.size(); ++j) {
          conj[j] = G.conj(g, cur[j]);
        }
        auto it = std::lower_bound(all.begin(), all.end(), conj);
        std::size_t idx = static_cast<std::size_t>(it - all.begin());
        if (!seen[idx]) {
          seen[idx] = 1;
          queue.push_back(idx);
        }
      }
    }
    out.push_back({{all[i]}, queue.size()});
  }
  return out;
}

namespace {

std::vector<BigInt> convolve(const FiniteGroup &G, const std::vector<BigInt> &a, const std::vector<BigInt> &b) {
  // Class functions: (a*b)(c) = sum_x a(x) b(x^-1 c).
  std::vector<BigInt> out(G.class_count());
  for (int c = 0; c < G.class_count(); ++c) {
    int rep = G.class_reps()[c];
    BigInt acc = 0;
    for (int x = 0; x < G.order(); ++x) {
      const BigInt &ax = a[G.class_of(x)];
      if (ax == 0) {
        continue;
      }
      acc += ax * b[G.class_of(G.mul(G.inv(x), rep))];
    }
    out[c] = acc;
  }
  return out;
}

} // namespace

std::vector<BigInt> relator_count_distribution(const FiniteGroup &G, RelatorShape shape, int count,
                                               const Budget &budget) {
  if (static_cast<std::uint64_t>(G.order()) > budget.convolution_cap) {
    fail_budget("group order " + std::to_string(G.order()) + " exceeds convolution cap " +
                std::to_string(budget.convolution_cap));
  }
  if (count < 1) {
    fail_invalid("relator power must be positive");
  }
  std::vector<BigInt> per_element(G.order());
  if (shape == RelatorShape::CommutatorPower) {
    for (int a = 0; a < G.order(); ++a) {
      for (int b = 0; b < G.order(); ++b) {
        per_element[G.mul(G.mul(a, b), G.mul(G.inv(a), G.inv(b)))] += 1;
      }
    }
  } else {
    for (int a = 0; a < G.order(); ++a) {
      per_element[G.mul(a, a)] += 1;
    }
  }
  std::vector<BigInt> single(G.class_count());
  for (int c = 0; c < G.class_count(); ++c) {
    single[c] = per_element[G.class_reps()[c]];
  }
  std::vector<BigInt> acc = single;
  for (int i = 1; i < count; ++i) {
    acc = convolve(G, acc, single);
  }
  return acc;
}

BigInt one_relator_hom_count(const FiniteGroup &G, const OneRelatorShape &shape, const Budget &budget) {
  auto dist = relator_count_distribution(
      G, shape.kind == OneRelatorShape::Commutators ? RelatorShape::CommutatorPower : RelatorShape::SquaresPower,
      shape.count, budget);
  return dist[G.class_of(G.identity())];
}

namespace {

std::vector<int> p_power_elements(const FiniteGroup &G, int p) {
  if (!is_prime(static_cast<std::uint64_t>(p))) {
    fail_invalid(std::to_string(p) + " is not prime");
  }
  std::vector<int> out;
  for (int a = 0; a < G.order(); ++a) {
    int o = G.element_order(a);
    while (o % p == 0) {
      o /= p;
    }
    if (o == 1) {
      out.push_back(a);
    }
  }
  return out;
}

void tuples_rec(const FiniteGroup &G, int d, const std::vector<int> &cands, std::vector<int> &cur,
                const std::function<void(const std::vector<int> &)> &visit) {
  if (static_cast<int>(cur.size()) == d) {
    visit(cur);
    return;
  }
  for (int x : cands) {
    std::vector<int> next;
    for (int y : cands) {
      if (G.commutes(x, y)) {
        next.push_back(y);
      }
    }
    cur.push_back(x);
    tuples_rec(G, d, next, cur, visit);
    cur.pop_back();
  }
}

BigInt tuples_count(const FiniteGroup &G, int d, const std::vector<int> &cands) {
  if (d == 0) {
    return 1;
  }
  if (d == 1) {
    return static_cast<unsigned long>(cands.size());
  }
  BigInt total = 0;
  for (int x : cands) {
    std::vector<int> next;
    for (int y : cands) {
      if (G.commutes(x, y)) {
        next.push_back(y);
      }
    }
    total += tuples_count(G, d - 1, next);
  }
  return total;
}

} // namespace

BigInt commuting_p_power_tuples(const FiniteGroup &G, int d, int p) {
  if (d < 0) {
    fail_invalid("arity must be non-negative");
  }
  return tuples_count(G, d, p_power_elements(G, p));
}

void for_each_commuting_p_power_tuple(const FiniteGroup &G, int d, int p,
                                      const std::function<void(const std::vector<int> &)> &visit) {
  std::vector<int> cur;
  tuples_rec(G, d, p_power_elements(G, p), cur, visit);
}

} // namespace orbicount
