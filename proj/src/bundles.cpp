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

#include <algorithm>
#include <functional>
#include <set>
#include <unordered_set>

namespace orbicount {

namespace {

const WreathCodec &codec_of(const GroupPtr &wreath) {
  if (!wreath || !wreath->codec()) {
    fail_invalid("group is not a wreath product");
  }
  return *wreath->codec();
}

int wreath_word(const FiniteGroup &W, const std::vector<int> &theta, const Word &w) {
  int x = W.identity();
  for (auto letter : w) {
    int g = theta[std::abs(letter) - 1];
    x = W.mul(x, letter > 0 ? g : W.inv(g));
  }
  return x;
}

struct Orbit {
  std::vector<int> points;
  std::vector<int> local;
};

std::vector<std::vector<int>> sigma_orbits(const WreathCodec &codec, const std::vector<int> &theta) {
  int n = codec.degree();
  std::vector<int> seen(n, 0);
  std::vector<std::vector<int>> orbits;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) {
      continue;
    }
    std::vector<int> orbit{s};
    seen[s] = 1;
    for (std::size_t h = 0; h < orbit.size(); ++h) {
      for (int t : theta) {
        int k = codec.sigma(t)[orbit[h]];
        if (!seen[k]) {
          seen[k] = 1;
          orbit.push_back(k);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

} // namespace

int evaluate_rho(const FiniteGroup &G, const std::vector<int> &rho, const Word &schreier_word) {
  int x = G.identity();
  for (auto letter : schreier_word) {
    int g = rho.at(std::abs(letter) - 1);
    x = G.mul(x, letter > 0 ? g : G.inv(g));
  }
  return x;
}

std::vector<int> rho_conjugated(const SubgroupRecord &record, const FiniteGroup &G, const std::vector<int> &rho,
                                int c) {
  std::vector<int> out(rho.size());
  const Word &u = record.transversal(c);
  for (std::size_t k = 0; k < rho.size(); ++k) {
    out[k] = evaluate_rho(G, rho, conjugate_schreier_generator(record, u, static_cast<int>(k)));
  }
  return out;
}

BundleClassifier::BundleClassifier(const Presentation &source, GroupPtr G, const Budget &budget)
    : source_(source), G_(std::move(G)), budget_(budget) {}

std::shared_ptr<const SubgroupRecord> BundleClassifier::record(const CosetTable &table) {
  auto it = records_.find(table);
  if (it != records_.end()) {
    return it->second;
  }
  auto r = std::make_shared<const SubgroupRecord>(source_, table);
  records_.emplace(table, r);
  return r;
}

std::vector<std::vector<int>> BundleClassifier::orbit(const SubgroupRecord &record, const std::vector<int> &rho) {
  const FiniteGroup &G = *G_;
  std::vector<std::vector<Word>> conj;
  for (int c : record.h_fixed_cosets()) {
    if (c == 0) {
      continue;
    }
    std::vector<Word> words;
    for (std::size_t k = 0; k < rho.size(); ++k) {
      words.push_back(conjugate_schreier_generator(record, record.transversal(c), static_cast<int>(k)));
    }
    conj.push_back(std::move(words));
  }
  std::set<std::vector<int>> seen{rho};
  std::vector<std::vector<int>> queue{rho};
  for (std::size_t h = 0; h < queue.size(); ++h) {
    auto cur = queue[h];
    auto push = [&](std::vector<int> next) {
      if (seen.insert(next).second) {
        if (seen.size() > budget_.orbit_cap) {
          fail_budget("bundle orbit exceeds the orbit cap");
        }
        queue.push_back(std::move(next));
      }
    };
    for (int g : G.generators()) {
      std::vector<int> next(cur.size());
      for (std::size_t k = 0; k < cur.size(); ++k) {
        next[k] = G.mul(G.mul(G.inv(g), cur[k]), g);
      }
      push(std::move(next));
    }
    for (const auto &words : conj) {
      std::vector<int> next(cur.size());
      for (std::size_t k = 0; k < cur.size(); ++k) {
        next[k] = evaluate_rho(G, cur, words[k]);
      }
      push(std::move(next));
    }
  }
  return {seen.begin(), seen.end()};
}

ClassificationKey BundleClassifier::classify(const SubgroupRecord &rec, const std::vector<int> &rho) {
  const CosetTable &T = rec.table();
  CosetTable C = T.canonical();
  int b = 0;
  for (; b < T.index(); ++b) {
    if (T.standardized(b) == C) {
      break;
    }
  }
  auto recC = record(C);
  const Word &t = rec.transversal(b);
  std::vector<int> moved;
  for (const auto &s : recC->schreier_generators()) {
    Word h = concat(concat(t, s), inverse_word(t));
    moved.push_back(evaluate_rho(*G_, rho, rec.rewrite(h)));
  }
  auto orb = orbit(*recC, moved);
  return ClassificationKey{C, orb.front()};
}

BundleDecomposition decompose(const Presentation &p, const GroupPtr &wreath, const std::vector<int> &theta,
                              BundleClassifier *classifier) {
  const WreathCodec &codec = codec_of(wreath);
  const FiniteGroup &W = *wreath;
  if (static_cast<int>(theta.size()) != p.generator_count()) {
    fail_invalid("theta must give one image per generator");
  }
  for (int t : theta) {
    if (t < 0 || t >= W.order()) {
      fail_invalid("theta image out of range");
    }
  }
  if (!is_homomorphism(p, W, theta)) {
    fail_invalid("theta is not a homomorphism");
  }
  std::unique_ptr<BundleClassifier> own;
  if (!classifier) {
    own = std::make_unique<BundleClassifier>(p, codec.base());
    classifier = own.get();
  }
  BundleDecomposition d;
  d.source = p;
  d.wreath = wreath;
  d.theta = theta;
  const int gens = p.generator_count();
  std::vector<Perm> sigma_inv;
  for (int t : theta) {
    sigma_inv.push_back(perm_inverse(codec.sigma(t)));
  }
  for (auto &orbit : sigma_orbits(codec, theta)) {
    std::vector<int> local(codec.degree(), -1);
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      local[orbit[i]] = static_cast<int>(i);
    }
    std::vector<Perm> actions(gens, Perm(orbit.size()));
    for (int g = 0; g < gens; ++g) {
      for (std::size_t i = 0; i < orbit.size(); ++i) {
        actions[g][i] = local[sigma_inv[g][orbit[i]]];
      }
    }
    CosetTable table = CosetTable::from_action(actions, 0);
    BundleComponent comp;
    comp.orbit = orbit;
    comp.base_point = orbit.front();
    comp.isotropy = classifier->record(table);
    for (int c = 0; c < table.index(); ++c) {
      int k = comp.base_point;
      for (auto letter : comp.isotropy->transversal(c)) {
        int g = std::abs(letter) - 1;
        k = letter > 0 ? sigma_inv[g][k] : codec.sigma(theta[g])[k];
      }
      comp.coset_point.push_back(k);
    }
    for (const auto &s : comp.isotropy->schreier_generators()) {
      int x = wreath_word(W, theta, s);
      comp.rho.push_back(codec.f(x)[comp.base_point]);
    }
    d.keys.push_back(classifier->classify(*comp.isotropy, comp.rho));
    d.components.push_back(std::move(comp));
  }
  for (const auto &key : d.keys) {
    ++d.grouped[key];
  }
  return d;
}

ClassificationKey classify(const Presentation &p, const GroupPtr &G, const BundleComponent &c) {
  BundleClassifier classifier(p, G);
  return classifier.classify(*c.isotropy, c.rho);
}

AutData aut_data(const SubgroupRecord &record, const FiniteGroup &G, const std::vector<int> &rho) {
  AutData a;
  std::vector<int> image{G.identity()};
  {
    std::vector<char> in(G.order(), 0);
    in[G.identity()] = 1;
    for (std::size_t h = 0; h < image.size(); ++h) {
      for (int r : rho) {
        int z = G.mul(image[h], r);
        if (!in[z]) {
          in[z] = 1;
          image.push_back(z);
        }
      }
    }
    std::sort(image.begin(), image.end());
  }
  a.image = image;
  a.t_rho_model_order = 0;
  std::set<int> acting;
  for (int c : record.h_fixed_cosets()) {
    auto moved = rho_conjugated(record, G, rho, c);
    std::vector<int> w;
    for (int g = 0; g < G.order(); ++g) {
      bool ok = true;
      for (std::size_t k = 0; k < rho.size() && ok; ++k) {
        ok = G.mul(G.mul(G.inv(g), moved[k]), g) == rho[k];
      }
      if (ok) {
        w.push_back(g);
      }
    }
    if (c == 0) {
      a.centralizer = w;
    }
    if (!w.empty()) {
      a.fixed_cosets.push_back(c);
      for (int g : w) {
        for (int x : image) {
          acting.insert(G.mul(x, g));
        }
      }
      a.t_rho_model_order += static_cast<unsigned long>(w.size());
      a.witnesses.push_back(std::move(w));
    }
  }
  a.acting_subgroup.assign(acting.begin(), acting.end());
  a.n_rho_quotient_order = static_cast<int>(a.fixed_cosets.size());
  a.c_g_rho_order = static_cast<int>(a.centralizer.size());
  a.aut_order = BigInt(a.c_g_rho_order) * a.n_rho_quotient_order;
  if (a.aut_order != a.t_rho_model_order) {
    throw Error(ErrorKind::Internal, "automorphism group order mismatch");
  }
  return a;
}

GroupPtr aut_group(const SubgroupRecord &record, const FiniteGroup &G, const std::vector<int> &rho,
                   std::vector<std::pair<int, int>> *pairs_out) {
  AutData a = aut_data(record, G, rho);
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t i = 0; i < a.fixed_cosets.size(); ++i) {
    for (int g : a.witnesses[i]) {
      pairs.emplace_back(a.fixed_cosets[i], g);
    }
  }
  std::sort(pairs.begin(), pairs.end());
  const int m = static_cast<int>(a.fixed_cosets.size());
  std::vector<int> slot(record.index(), -1);
  for (int i = 0; i < m; ++i) {
    slot[a.fixed_cosets[i]] = i;
  }
  std::vector<int> target(static_cast<std::size_t>(m) * m);
  std::vector<int> correction(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      Word u = concat(record.transversal(a.fixed_cosets[i]), record.transversal(a.fixed_cosets[j]));
      int c3 = record.table().trace(0, u);
      if (slot[c3] < 0) {
        throw Error(ErrorKind::Internal, "automorphism product left the stabilizer");
      }
      Word h = concat(u, inverse_word(record.transversal(c3)));
      target[i * m + j] = c3;
      correction[i * m + j] = G.inv(evaluate_rho(G, rho, record.rewrite(h)));
    }
  }
  auto mul = [&](int x, int y) {
    auto [c1, g1] = pairs[x];
    auto [c2, g2] = pairs[y];
    int k = slot[c1] * m + slot[c2];
    std::pair<int, int> z{target[k], G.mul(correction[k], G.mul(g1, g2))};
    auto it = std::lower_bound(pairs.begin(), pairs.end(), z);
    if (it == pairs.end() || *it != z) {
      throw Error(ErrorKind::Internal, "automorphism product is not a bundle automorphism");
    }
    return static_cast<int>(it - pairs.begin());
  };
  auto out = FiniteGroup::from_multiplication(static_cast<int>(pairs.size()), mul, "Aut");
  if (pairs_out) {
    *pairs_out = pairs;
  }
  return out;
}

BigInt centralizer_order_structural(const BundleDecomposition &d) {
  const GroupPtr &G = codec_of(d.wreath).base();
  BundleClassifier classifier(d.source, G);
  BigInt total = 1;
  for (const auto &[key, r] : d.grouped) {
    auto rec = classifier.record(key.table);
    AutData a = aut_data(*rec, *G, key.rho);
    BigInt p;
    mpz_pow_ui(p.get_mpz_t(), a.aut_order.get_mpz_t(), static_cast<unsigned long>(r));
    total *= p * factorial(r);
  }
  return total;
}

std::vector<int> brute_centralizer(const GroupPtr &wreath, const std::vector<int> &theta, const Budget &budget) {
  const WreathCodec &codec = codec_of(wreath);
  if (codec.order() > budget.wreath_cap) {
    fail_budget("wreath product too large for the direct centralizer");
  }
  std::vector<int> out;
  for (int x = 0; x < static_cast<int>(codec.order()); ++x) {
    bool ok = true;
    for (int t : theta) {
      if (!codec.commutes(x, t)) {
        ok = false;
        break;
      }
    }
    if (ok) {
      out.push_back(x);
    }
  }
  return out;
}

std::vector<int> structural_centralizer_elements(const BundleDecomposition &d) {
  const WreathCodec &codec = codec_of(d.wreath);
  const FiniteGroup &W = *d.wreath;
  const FiniteGroup &G = *codec.base();
  const int n = codec.degree();
  const std::size_t m = d.components.size();

  // Valid images (y, g) of the base point of component a inside component b.
  std::vector<std::vector<std::vector<std::pair<int, int>>>> valid(
      m, std::vector<std::vector<std::pair<int, int>>>(m));
  std::vector<std::vector<int>> hol(m);
  for (std::size_t a = 0; a < m; ++a) {
    const auto &ca = d.components[a];
    for (const auto &s : ca.isotropy->schreier_generators()) {
      hol[a].push_back(wreath_word(W, d.theta, s));
    }
    for (std::size_t b = 0; b < m; ++b) {
      if (!(d.keys[a] == d.keys[b])) {
        continue;
      }
      for (int y : d.components[b].orbit) {
        for (int g = 0; g < G.order(); ++g) {
          bool ok = true;
          for (std::size_t k = 0; k < hol[a].size() && ok; ++k) {
            int h = hol[a][k];
            ok = codec.sigma(h)[y] == y && codec.f(h)[y] == G.mul(G.mul(g, ca.rho[k]), G.inv(g));
          }
          if (ok) {
            valid[a][b].emplace_back(y, g);
          }
        }
      }
    }
  }
  // Left-action words reaching each point of each component from its base point.
  std::vector<std::vector<std::pair<int, int>>> reach(m);
  for (std::size_t a = 0; a < m; ++a) {
    const auto &ca = d.components[a];
    for (int c = 0; c < ca.isotropy->index(); ++c) {
      int w = W.inv(wreath_word(W, d.theta, ca.isotropy->transversal(c)));
      reach[a].emplace_back(ca.coset_point[c], w);
    }
  }
  std::vector<int> out;
  std::vector<int> F(n, 0);
  Perm tau(n, 0);
  std::vector<char> used(m, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t a) {
    if (a == m) {
      out.push_back(codec.encode(F, tau));
      return;
    }
    int x = d.components[a].base_point;
    for (std::size_t b = 0; b < m; ++b) {
      if (used[b] || valid[a][b].empty()) {
        continue;
      }
      used[b] = 1;
      for (auto [y, g] : valid[a][b]) {
        for (auto [k, w] : reach[a]) {
          auto base_image = codec.act(w, x, G.identity());
          auto moved = codec.act(w, y, g);
          tau[k] = moved.first;
          F[moved.first] = G.mul(moved.second, G.inv(base_image.second));
        }
        rec(a + 1);
      }
      used[b] = 0;
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ClassificationKey> sorted_keys(const BundleDecomposition &d) {
  auto keys = d.keys;
  std::sort(keys.begin(), keys.end());
  return keys;
}

std::vector<int> reconstruct(const BundleDecomposition &d) {
  const WreathCodec &codec = codec_of(d.wreath);
  const FiniteGroup &G = *codec.base();
  BundleClassifier classifier(d.source, codec.base());
  const int gens = d.source.generator_count();
  const int n = codec.degree();
  std::vector<std::vector<int>> f(gens, std::vector<int>(n, 0));
  std::vector<Perm> sigma(gens, Perm(n, 0));
  int offset = 0;
  for (const auto &[key, r] : d.grouped) {
    auto rec = classifier.record(key.table);
    const int idx = key.table.index();
    for (int copy = 0; copy < r; ++copy) {
      for (int g = 0; g < gens; ++g) {
        Word gamma{static_cast<std::int32_t>(g + 1)};
        for (int c = 0; c < idx; ++c) {
          int cp = key.table.at(c, 2 * g + 1);
          sigma[g][offset + c] = offset + cp;
          Word h = concat(concat(rec->transversal(cp), gamma), inverse_word(rec->transversal(c)));
          f[g][offset + cp] = evaluate_rho(G, key.rho, rec->rewrite(h));
        }
      }
      offset += idx;
    }
  }
  if (offset != n) {
    throw Error(ErrorKind::Internal, "reconstruction does not cover every point");
  }
  std::vector<int> theta;
  for (int g = 0; g < gens; ++g) {
    theta.push_back(codec.encode(f[g], sigma[g]));
  }
  return theta;
}

int find_conjugator(const GroupPtr &wreath, const std::vector<int> &theta, const std::vector<int> &other) {
  const FiniteGroup &W = *wreath;
  for (int x = 0; x < W.order(); ++x) {
    bool ok = true;
    for (std::size_t i = 0; i < theta.size() && ok; ++i) {
      ok = W.mul(W.mul(x, theta[i]), W.inv(x)) == other[i];
    }
    if (ok) {
      return x;
    }
  }
  return -1;
}

} // namespace orbicount
