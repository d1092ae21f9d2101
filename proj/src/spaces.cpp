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

#include "orbicount/spaces.hpp"

#include "orbicount/bundles.hpp"
#include "orbicount/homs.hpp"
#include "orbicount/series.hpp"

#include "json.hpp"

#include <algorithm>
#include <map>

namespace orbicount {

namespace {

std::vector<std::uint64_t> fixed_bits(const Perm &p) {
  std::vector<std::uint64_t> bits((p.size() + 63) / 64, 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == static_cast<int>(i)) {
      bits[i / 64] |= std::uint64_t{1} << (i % 64);
    }
  }
  return bits;
}

Rational integral_check(const Rational &v, const char *what) {
  if (v.get_den() != 1) {
    throw Error(ErrorKind::Internal, std::string(what) + " is not an integer: " + rational_to_string(v));
  }
  return v;
}

} // namespace

VirtualGSpace::VirtualGSpace(GroupPtr G) : G_(std::move(G)) {
  if (!G_) {
    fail_invalid("virtual G-space needs a group");
  }
}

void VirtualGSpace::add_term(std::int64_t coeff, int degree, std::vector<Perm> generator_images) {
  const FiniteGroup &G = *G_;
  if (degree < 0) {
    fail_invalid("term degree must be non-negative");
  }
  if (generator_images.size() != G.generators().size()) {
    fail_invalid("term needs one image per group generator (" + std::to_string(G.generators().size()) + ")");
  }
  for (const auto &p : generator_images) {
    if (static_cast<int>(p.size()) != degree || !perm_is_valid(p)) {
      fail_invalid("term generator image is not a permutation of its degree");
    }
  }
  std::vector<Perm> act(G.order());
  std::vector<char> seen(G.order(), 0);
  act[G.identity()] = perm_identity(degree);
  seen[G.identity()] = 1;
  std::vector<int> queue{G.identity()};
  for (std::size_t h = 0; h < queue.size(); ++h) {
    int a = queue[h];
    for (std::size_t i = 0; i < G.generators().size(); ++i) {
      int b = G.mul(a, G.generators()[i]);
      Perm pb = perm_compose(act[a], generator_images[i]);
      if (!seen[b]) {
        seen[b] = 1;
        act[b] = std::move(pb);
        queue.push_back(b);
      } else if (act[b] != pb) {
        fail_invalid("term generator images do not define a group action");
      }
    }
  }
  if (static_cast<int>(queue.size()) != G.order()) {
    throw Error(ErrorKind::Internal, "group generators do not generate the group");
  }
  std::vector<std::vector<std::uint64_t>> fixed;
  fixed.reserve(act.size());
  for (const auto &p : act) {
    fixed.push_back(fixed_bits(p));
  }
  terms_.push_back(Term{coeff, degree, std::move(generator_images)});
  actions_.push_back(std::move(act));
  fixed_.push_back(std::move(fixed));
}

void VirtualGSpace::add_coset_space(std::int64_t coeff, const std::vector<int> &subgroup) {
  const FiniteGroup &G = *G_;
  std::vector<int> H = subgroup;
  std::sort(H.begin(), H.end());
  H.erase(std::unique(H.begin(), H.end()), H.end());
  for (int h : H) {
    check_element(h);
  }
  if (!G.is_subgroup(H)) {
    fail_invalid("coset space needs a subgroup");
  }
  std::vector<int> coset_of(G.order(), -1);
  std::vector<int> reps;
  for (int x = 0; x < G.order(); ++x) {
    if (coset_of[x] >= 0) {
      continue;
    }
    int c = static_cast<int>(reps.size());
    reps.push_back(x);
    for (int h : H) {
      coset_of[G.mul(x, h)] = c;
    }
  }
  std::vector<Perm> images;
  for (int g : G.generators()) {
    Perm p(reps.size());
    for (std::size_t c = 0; c < reps.size(); ++c) {
      p[c] = coset_of[G.mul(g, reps[c])];
    }
    images.push_back(std::move(p));
  }
  add_term(coeff, static_cast<int>(reps.size()), std::move(images));
}

void VirtualGSpace::add_point(std::int64_t coeff) {
  add_term(coeff, 1, std::vector<Perm>(G_->generators().size(), Perm{0}));
}

VirtualGSpace VirtualGSpace::from_json(const std::string &text, const Budget &budget) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    throw ParseError(e.byte == 0 ? 0 : e.byte - 1, "invalid JSON G-space");
  }
  if (!j.is_object() || !j.contains("group")) {
    throw ParseError(0, "G-space JSON needs a group");
  }
  const auto &g = j.at("group");
  GroupPtr G = group_from_spec(g.is_string() ? g.get<std::string>() : g.dump(), budget);
  return from_json(G, text);
}

VirtualGSpace VirtualGSpace::from_json(GroupPtr G, const std::string &text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    throw ParseError(e.byte == 0 ? 0 : e.byte - 1, "invalid JSON G-space");
  }
  VirtualGSpace M(std::move(G));
  try {
    for (const auto &t : j.at("terms")) {
      auto coeff = t.value("coeff", std::int64_t{1});
      if (t.value("point", false)) {
        M.add_point(coeff);
      } else if (t.contains("subgroup_generators")) {
        std::vector<int> gens;
        for (const auto &p : t.at("subgroup_generators")) {
          gens.push_back(M.G_->index_of_perm(p.get<Perm>()));
        }
        std::vector<int> H{M.G_->identity()};
        for (std::size_t h = 0; h < H.size(); ++h) {
          for (int s : gens) {
            int z = M.G_->mul(H[h], s);
            if (std::find(H.begin(), H.end(), z) == H.end()) {
              H.push_back(z);
            }
          }
        }
        M.add_coset_space(coeff, H);
      } else {
        M.add_term(coeff, t.at("degree").get<int>(), t.at("gens").get<std::vector<Perm>>());
      }
    }
  } catch (const nlohmann::json::exception &e) {
    throw ParseError(0, std::string("malformed JSON G-space: ") + e.what());
  }
  return M;
}

std::string VirtualGSpace::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto &t : terms_) {
    terms.push_back({{"coeff", t.coeff}, {"degree", t.degree}, {"gens", t.generator_images}});
  }
  nlohmann::json j;
  if (!G_->name().empty()) {
    j["group"] = G_->name();
  }
  j["terms"] = terms;
  return j.dump();
}

VirtualGSpace VirtualGSpace::product(const VirtualGSpace &a, const VirtualGSpace &b, GroupPtr product_group) {
  const FiniteGroup &P = *product_group;
  const FiniteGroup &A = *a.G_;
  const FiniteGroup &B = *b.G_;
  if (!P.has_perms() || !A.has_perms() || !B.has_perms() || P.degree() != A.degree() + B.degree()) {
    fail_invalid("product space needs a direct product of permutation groups");
  }
  std::vector<std::pair<int, int>> split;
  for (int g : P.generators()) {
    const Perm &p = P.perm(g);
    Perm pa(p.begin(), p.begin() + A.degree());
    Perm pb;
    for (int i = A.degree(); i < P.degree(); ++i) {
      pb.push_back(p[i] - A.degree());
    }
    split.emplace_back(A.index_of_perm(pa), B.index_of_perm(pb));
  }
  VirtualGSpace out(product_group);
  for (std::size_t s = 0; s < a.terms_.size(); ++s) {
    for (std::size_t t = 0; t < b.terms_.size(); ++t) {
      int m1 = a.terms_[s].degree;
      int m2 = b.terms_[t].degree;
      std::vector<Perm> images;
      for (auto [x, y] : split) {
        Perm q(static_cast<std::size_t>(m1) * m2);
        for (int i = 0; i < m1; ++i) {
          for (int k = 0; k < m2; ++k) {
            q[i * m2 + k] = a.actions_[s][x][i] * m2 + b.actions_[t][y][k];
          }
        }
        images.push_back(std::move(q));
      }
      out.add_term(a.terms_[s].coeff * b.terms_[t].coeff, m1 * m2, std::move(images));
    }
  }
  return out;
}

void VirtualGSpace::check_element(int a) const {
  if (a < 0 || a >= G_->order()) {
    fail_invalid("group element id out of range");
  }
}

std::int64_t VirtualGSpace::euler() const {
  std::int64_t e = 0;
  for (const auto &t : terms_) {
    e += t.coeff * t.degree;
  }
  return e;
}

std::uint64_t VirtualGSpace::fixed_mask_count(std::size_t term, const std::vector<int> &S) const {
  const auto &all = fixed_[term];
  std::size_t words = (static_cast<std::size_t>(terms_[term].degree) + 63) / 64;
  std::uint64_t total = 0;
  for (std::size_t w = 0; w < words; ++w) {
    std::uint64_t bits = ~std::uint64_t{0};
    if (w + 1 == words && terms_[term].degree % 64) {
      bits = (std::uint64_t{1} << (terms_[term].degree % 64)) - 1;
    }
    for (int s : S) {
      bits &= all[s][w];
    }
    total += static_cast<std::uint64_t>(__builtin_popcountll(bits));
  }
  return total;
}

std::int64_t VirtualGSpace::fixed_euler(const std::vector<int> &S) const {
  for (int s : S) {
    check_element(s);
  }
  std::int64_t e = 0;
  for (std::size_t t = 0; t < terms_.size(); ++t) {
    e += terms_[t].coeff * static_cast<std::int64_t>(fixed_mask_count(t, S));
  }
  return e;
}

std::int64_t VirtualGSpace::orbit_count(const std::vector<int> &S, const std::vector<int> &K) const {
  std::int64_t e = 0;
  for (std::size_t t = 0; t < terms_.size(); ++t) {
    int m = terms_[t].degree;
    std::vector<char> fixed(m, 1);
    for (int s : S) {
      for (int i = 0; i < m; ++i) {
        if (actions_[t][s][i] != i) {
          fixed[i] = 0;
        }
      }
    }
    std::vector<char> seen(m, 0);
    std::int64_t orbits = 0;
    for (int i = 0; i < m; ++i) {
      if (!fixed[i] || seen[i]) {
        continue;
      }
      ++orbits;
      std::vector<int> queue{i};
      seen[i] = 1;
      for (std::size_t h = 0; h < queue.size(); ++h) {
        for (int k : K) {
          int z = actions_[t][k][queue[h]];
          if (!fixed[z]) {
            fail_invalid("acting group does not preserve the fixed set");
          }
          if (!seen[z]) {
            seen[z] = 1;
            queue.push_back(z);
          }
        }
      }
    }
    e += terms_[t].coeff * orbits;
  }
  return e;
}

Rational VirtualGSpace::burnside_quotient(const std::vector<int> &S, const std::vector<int> &K) const {
  if (K.empty()) {
    fail_invalid("acting group must be non-empty");
  }
  std::vector<int> SK = S;
  SK.push_back(0);
  BigInt sum = 0;
  for (int k : K) {
    SK.back() = k;
    sum += static_cast<long>(fixed_euler(SK));
  }
  return make_rational(sum, BigInt(static_cast<unsigned long>(K.size())));
}

std::int64_t VirtualGSpace::quotient_euler(const std::vector<int> &K, const std::vector<int> &S) const {
  for (int k : K) {
    check_element(k);
  }
  std::vector<int> sorted = K;
  std::sort(sorted.begin(), sorted.end());
  if (!G_->is_subgroup(sorted)) {
    fail_invalid("quotient needs a subgroup");
  }
  Rational b = burnside_quotient(S, sorted);
  std::int64_t orbits = orbit_count(S, sorted);
  if (b != Rational(static_cast<long>(orbits))) {
    throw Error(ErrorKind::Internal, "orbit count and Burnside average disagree");
  }
  return orbits;
}

OrbifoldValue chi_orb_gamma(const Presentation &p, const FiniteGroup &G, const VirtualGSpace &M,
                            const Budget &budget) {
  if (M.group().get() != &G && M.group()->order() != G.order()) {
    fail_invalid("space is not over the given group");
  }
  HomEnumerator e(p, G, budget);
  BigInt sum = 0;
  e.for_each_weighted([&](const std::vector<int> &images, std::uint64_t w) {
    sum += BigInt(static_cast<unsigned long>(w)) * static_cast<long>(M.fixed_euler(images));
  });
  return OrbifoldValue{make_rational(sum, BigInt(G.order())), false};
}

OrbifoldValue chi_gamma_by_classes(const Presentation &p, const FiniteGroup &G, const VirtualGSpace &M,
                                   const Budget &budget) {
  Rational total = 0;
  for (const auto &cls : hom_classes(p, G, budget)) {
    const auto &images = cls.representative.images;
    auto C = G.centralizer(images);
    total += static_cast<long>(M.quotient_euler(C, images));
  }
  return OrbifoldValue{total, true};
}

OrbifoldValue chi_gamma_by_extension(const Presentation &p, const FiniteGroup &G, const VirtualGSpace &M,
                                     const Budget &budget) {
  auto v = chi_orb_gamma(product_with_Z(p), G, M, budget);
  v.integral = true;
  integral_check(v.value, "Gamma-extended Euler characteristic");
  return v;
}

OrbifoldValue chi_gamma(const Presentation &p, const FiniteGroup &G, const VirtualGSpace &M, const Budget &budget) {
  auto a = chi_gamma_by_classes(p, G, M, budget);
  auto b = chi_gamma_by_extension(p, G, M, budget);
  if (a.value != b.value) {
    throw Error(ErrorKind::Internal, "class sum and extension route disagree");
  }
  return a;
}

OrbifoldValue chi_higher(const Presentation &p, const FiniteGroup &G, const VirtualGSpace &M, int d,
                         const Budget &budget) {
  if (d < 0) {
    fail_invalid("degree must be non-negative");
  }
  return chi_gamma(product_with_Z_power(p, d), G, M, budget);
}

Rational chi_acting(const VirtualGSpace &M, const std::vector<int> &S, const FiniteGroup &K,
                    const std::vector<int> &via, int d, const Budget &budget) {
  if (d < 0) {
    fail_invalid("degree must be non-negative");
  }
  if (static_cast<int>(via.size()) != K.order()) {
    fail_invalid("acting map needs one image per element");
  }
  Presentation tuples = presentation_catalog(Family::FreeAbelian, d + 1);
  HomEnumerator e(tuples, K, budget);
  std::vector<int> all = S;
  std::size_t base = all.size();
  all.resize(base + d + 1);
  BigInt sum = 0;
  e.for_each([&](const std::vector<int> &t) {
    for (int i = 0; i <= d; ++i) {
      all[base + i] = via[t[i]];
    }
    sum += static_cast<long>(M.fixed_euler(all));
  });
  return make_rational(sum, BigInt(K.order()));
}

TransitiveValue chi_class_transitive(const SubgroupRecord &record, const GroupPtr &G, const VirtualGSpace &M, int d,
                                     const Budget &budget) {
  TransitiveValue out;
  auto homs = HomEnumerator(record.subgroup_presentation(), *G, budget).list();
  BundleClassifier classifier(record.source(), G, budget);
  std::vector<char> visited(homs.size(), 0);
  Rational total = 0;
  for (std::size_t i = 0; i < homs.size(); ++i) {
    if (visited[i]) {
      continue;
    }
    auto orbit = classifier.orbit(record, homs[i]);
    for (const auto &r : orbit) {
      auto it = std::lower_bound(homs.begin(), homs.end(), r);
      if (it == homs.end() || *it != r) {
        throw Error(ErrorKind::Internal, "bundle orbit left the homomorphism set");
      }
      visited[it - homs.begin()] = 1;
    }
    std::vector<std::pair<int, int>> pairs;
    auto aut = aut_group(record, *G, homs[i], &pairs);
    std::vector<int> via;
    for (const auto &pr : pairs) {
      via.push_back(pr.second);
    }
    TransitiveTerm term;
    term.rho = homs[i];
    term.orbit_size = orbit.size();
    term.aut_order = aut->order();
    term.value = chi_acting(M, homs[i], *aut, via, d, budget);
    total += term.value;
    out.terms.push_back(std::move(term));
  }
  out.total = OrbifoldValue{integral_check(total, "transitive class invariant"), true};
  return out;
}

std::vector<BigInt> free_abelian_subgroup_counts(int d, int N) {
  if (d < 0 || N < 0) {
    fail_invalid("degree and length must be non-negative");
  }
  std::vector<BigInt> j(N + 1, 0);
  if (N >= 1) {
    j[1] = 1;
  }
  for (int k = 1; k <= d; ++k) {
    std::vector<BigInt> next(N + 1, 0);
    for (int a = 1; a <= N; ++a) {
      for (int b = 1; a * b <= N; ++b) {
        BigInt w;
        mpz_ui_pow_ui(w.get_mpz_t(), static_cast<unsigned long>(b), static_cast<unsigned long>(k - 1));
        next[a * b] += j[a] * w;
      }
    }
    j = std::move(next);
  }
  return j;
}

OrbifoldValue chi_class_gset(const std::vector<std::pair<SubgroupRecord, int>> &X, const GroupPtr &G,
                             const VirtualGSpace &M, int d, const Budget &budget) {
  std::map<CosetTable, std::pair<const SubgroupRecord *, int>> grouped;
  for (const auto &[record, r] : X) {
    if (r < 0) {
      fail_invalid("multiplicity must be non-negative");
    }
    if (r == 0) {
      continue;
    }
    auto key = record.table().canonical();
    auto it = grouped.find(key);
    if (it == grouped.end()) {
      grouped.emplace(key, std::make_pair(&record, r));
    } else {
      it->second.second += r;
    }
  }
  Rational total = 1;
  for (const auto &[key, entry] : grouped) {
    auto [record, r] = entry;
    Rational c = chi_class_transitive(*record, G, M, d, budget).total.value;
    auto j = free_abelian_subgroup_counts(d, r);
    std::map<unsigned, Rational> exponents;
    for (int s = 1; s <= r; ++s) {
      exponents[s] = Rational(j[s]);
    }
    auto series = pow_rational(product_expansion(exponents, r), c);
    total *= series[r];
  }
  return OrbifoldValue{integral_check(total, "Gamma-set invariant"), true};
}

std::int64_t wreath_fixed_euler(const WreathCodec &codec, const std::vector<int> &elements, const VirtualGSpace &M) {
  const FiniteGroup &G = *codec.base();
  if (M.group()->order() != G.order()) {
    fail_invalid("space is not over the wreath base group");
  }
  const int n = codec.degree();
  std::vector<int> label(n, -1);
  std::int64_t product = 1;
  std::vector<int> hol;
  for (int x = 0; x < n; ++x) {
    if (label[x] >= 0) {
      continue;
    }
    label[x] = G.identity();
    hol.clear();
    std::vector<int> queue{x};
    for (std::size_t h = 0; h < queue.size(); ++h) {
      int k = queue[h];
      for (int w : elements) {
        auto [k2, v] = codec.act(w, k, label[k]);
        if (label[k2] < 0) {
          label[k2] = v;
          queue.push_back(k2);
        } else {
          int z = G.mul(G.inv(label[k2]), v);
          if (z != G.identity()) {
            hol.push_back(z);
          }
        }
      }
    }
    std::sort(hol.begin(), hol.end());
    hol.erase(std::unique(hol.begin(), hol.end()), hol.end());
    product *= M.fixed_euler(hol);
    if (product == 0) {
      return 0;
    }
  }
  return product;
}

} // namespace orbicount
