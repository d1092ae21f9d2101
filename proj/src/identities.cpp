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

#include "orbicount/identities.hpp"

#include "orbicount/homs.hpp"

#include "json.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <numeric>

namespace orbicount {

namespace {

using Json = nlohmann::ordered_json;

VirtualGSpace point_space(const GroupPtr &G) {
  VirtualGSpace M(G);
  M.add_point(1);
  return M;
}

Rational hom_ratio(const BigInt &homs, int order) { return make_rational(homs, BigInt(order)); }

BigInt big_pow(const BigInt &base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

bool is_power_of(unsigned r, int p) {
  if (p < 2 || r < 1) {
    return false;
  }
  while (r % p == 0) {
    r /= p;
  }
  return r == 1;
}

std::vector<Rational> to_vector(const PowerSeries &s) { return s.coeffs(); }

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

double power_estimate(std::uint64_t base, int e) { return std::pow(static_cast<double>(base), e); }

} // namespace

bool is_point_space(const VirtualGSpace &M) {
  const auto &terms = M.terms();
  return terms.size() == 1 && terms[0].coeff == 1 && terms[0].degree == 1;
}

bool acts_trivially(const VirtualGSpace &M) {
  for (const auto &t : M.terms()) {
    for (const auto &g : t.generator_images) {
      for (std::size_t i = 0; i < g.size(); ++i) {
        if (g[i] != static_cast<int>(i)) {
          return false;
        }
      }
    }
  }
  return true;
}

PowerSeries lhs_orb_series(const Presentation &p, const GroupPtr &G, const VirtualGSpace &M, int N,
                           LhsMethod method, const Budget &budget) {
  PowerSeries out(N);
  out[0] = 1;
  const bool pt = is_point_space(M);
  const auto shape = p.one_relator_shape();
  bool convolution = method == LhsMethod::Convolution || (method == LhsMethod::Auto && pt && shape);
  if (convolution && (!pt || !shape)) {
    fail_invalid("the convolution route needs a point space and a one-relator surface presentation");
  }
  for (int n = 1; n <= N; ++n) {
    GroupPtr Gn = FiniteGroup::wreath(G, n, budget);
    if (method == LhsMethod::Auto && static_cast<std::uint64_t>(Gn->order()) > budget.convolution_cap) {
      convolution = false;
    }
    if (convolution) {
      out[n] = hom_ratio(one_relator_hom_count(*Gn, *shape, budget), Gn->order());
    } else if (pt) {
      HomEnumerator e(p, *Gn, budget);
      out[n] = hom_ratio(e.count(), Gn->order());
    } else {
      BigInt sum = 0;
      const WreathCodec &codec = *Gn->codec();
      HomEnumerator e(p, *Gn, budget);
      e.for_each_weighted([&](const std::vector<int> &images, std::uint64_t w) {
        sum += BigInt(static_cast<unsigned long>(w)) * BigInt(static_cast<long>(wreath_fixed_euler(codec, images, M)));
      });
      out[n] = hom_ratio(sum, Gn->order());
    }
  }
  return out;
}

PowerSeries lhs_hom_series(const Presentation &p, const GroupPtr &G, int N, const Budget &budget) {
  return lhs_orb_series(p, G, point_space(G), N, LhsMethod::Enumeration, budget);
}

PowerSeries lhs_class_series(const Presentation &p, const GroupPtr &G, const VirtualGSpace &M, int N,
                             const Budget &budget) {
  return lhs_orb_series(product_with_Z(p), G, M, N, LhsMethod::Enumeration, budget);
}

namespace {

template <typename Fixed>
BigInt p_primary_sum(const FiniteGroup &G, int d, int p, bool with_z, const Fixed &fixed) {
  BigInt sum = 0;
  for_each_commuting_p_power_tuple(G, d, p, [&](const std::vector<int> &tuple) {
    if (!with_z) {
      sum += BigInt(static_cast<long>(fixed(tuple)));
      return;
    }
    std::vector<int> zs;
    if (tuple.empty()) {
      zs.resize(G.order());
      std::iota(zs.begin(), zs.end(), 0);
    } else {
      zs = G.centralizer(tuple);
    }
    std::vector<int> elements = tuple;
    elements.push_back(0);
    for (int z : zs) {
      elements.back() = z;
      sum += BigInt(static_cast<long>(fixed(elements)));
    }
  });
  return sum;
}

} // namespace

PowerSeries lhs_p_primary_series(const GroupPtr &G, const VirtualGSpace &M, int d, int p, bool with_z, int N,
                                 const Budget &budget) {
  if (!is_prime(static_cast<std::uint64_t>(p))) {
    fail_invalid("p must be prime");
  }
  PowerSeries out(N);
  out[0] = 1;
  for (int n = 1; n <= N; ++n) {
    GroupPtr Gn = FiniteGroup::wreath(G, n, budget);
    const WreathCodec &codec = *Gn->codec();
    BigInt sum = p_primary_sum(*Gn, d, p, with_z,
                               [&](const std::vector<int> &e) { return wreath_fixed_euler(codec, e, M); });
    out[n] = hom_ratio(sum, Gn->order());
  }
  return out;
}

Rational p_primary_value(const FiniteGroup &G, const VirtualGSpace &M, int d, int p, bool with_z) {
  if (!is_prime(static_cast<std::uint64_t>(p))) {
    fail_invalid("p must be prime");
  }
  BigInt sum = p_primary_sum(G, d, p, with_z, [&](const std::vector<int> &e) { return M.fixed_euler(e); });
  return hom_ratio(sum, G.order());
}

Rational orb_value(const Presentation &p, const FiniteGroup &G, const VirtualGSpace &M, const Budget &budget) {
  if (acts_trivially(M)) {
    auto shape = p.one_relator_shape();
    BigInt homs = shape ? one_relator_hom_count(G, *shape, budget) : count_homs(p, G, budget);
    return Rational(M.euler()) * hom_ratio(homs, G.order());
  }
  return chi_orb_gamma(p, G, M, budget).value;
}

PowerSeries rhs_exp_series(const CensusTable &census, const FiniteGroup &G, const VirtualGSpace &M, int N,
                           const Budget &budget) {
  PowerSeries a(N);
  for (const auto &cls : census.classes) {
    if (cls.index > N) {
      continue;
    }
    const auto &rec = census.records[cls.record];
    a[cls.index] += Rational(cls.multiplicity) * orb_value(rec.subgroup_presentation(), G, M, budget) /
                    Rational(cls.index);
  }
  return exp(a);
}

std::vector<Rational> class_exponents(const CensusTable &census, const GroupPtr &G, const VirtualGSpace &M, int d,
                                      const Budget &budget) {
  std::vector<Rational> e(census.max_index + 1, 0);
  for (const auto &cls : census.classes) {
    e[cls.index] += chi_class_transitive(census.records[cls.record], G, M, d, budget).total.value;
  }
  return e;
}

PowerSeries rhs_prod_series(const CensusTable &census, const GroupPtr &G, const VirtualGSpace &M, int N,
                            const Budget &budget) {
  auto e = class_exponents(census, G, M, 0, budget);
  std::map<unsigned, Rational> exps;
  for (int r = 1; r <= N && r < static_cast<int>(e.size()); ++r) {
    exps[r] = e[r];
  }
  return product_expansion(exps, N);
}

BigInt closed_form_jr(int d, unsigned r, int p) {
  if (d < 0 || r < 1) {
    fail_invalid("closed form needs d >= 0 and r >= 1");
  }
  if (p != 0 && !is_power_of(r, p)) {
    fail_invalid("index " + std::to_string(r) + " is not a power of " + std::to_string(p));
  }
  if (d == 0) {
    return r == 1 ? 1 : 0;
  }
  BigInt sum = 0;
  for (auto m : divisors(r)) {
    sum += BigInt(static_cast<unsigned long>(m)) * closed_form_jr(d - 1, static_cast<unsigned>(m), 0);
  }
  return sum;
}

std::vector<BigInt> census_from_homcounts(const Presentation &p, int N, const Budget &budget) {
  auto h = symmetric_hom_counts(p, N, budget);
  PowerSeries f(N);
  for (int n = 0; n <= N; ++n) {
    if (!h[n]) {
      fail_budget("|Hom(G, S_" + std::to_string(n) + ")| is beyond the budget");
    }
    f[n] = make_rational(*h[n], factorial(n));
  }
  PowerSeries L = log(f);
  std::vector<BigInt> j(N + 1, 0);
  for (int r = 1; r <= N; ++r) {
    Rational v = L[r] * Rational(r);
    if (v.get_den() != 1) {
      throw Error(ErrorKind::Internal, "non-integral subgroup count from the hom series");
    }
    j[r] = v.get_num();
  }
  return j;
}

std::vector<BigInt> symmetric_class_hom_counts(const Presentation &p, int N, const Budget &budget) {
  std::vector<BigInt> out{BigInt(1)};
  auto shape = p.one_relator_shape();
  for (int n = 1; n <= N; ++n) {
    GroupPtr S = FiniteGroup::symmetric(n);
    BigInt total = 0;
    for (int c = 0; c < S->class_count(); ++c) {
      int rep = S->class_reps()[c];
      GroupPtr C = FiniteGroup::subgroup(S, S->element_centralizer(rep));
      BigInt homs = shape ? one_relator_hom_count(*C, *shape, budget) : count_homs(p, *C, budget);
      total += BigInt(S->class_sizes()[c]) * homs;
    }
    out.push_back(total);
  }
  return out;
}

VerifyParams VerifyParams::from_json(const std::string &text) {
  VerifyParams v;
  Json j;
  try {
    j = Json::parse(text.empty() ? std::string("{}") : text);
  } catch (const nlohmann::json::parse_error &e) {
    throw ParseError(e.byte == 0 ? 0 : e.byte - 1, "invalid parameter JSON");
  }
  if (!j.is_object()) {
    throw ParseError(0, "parameters must be a JSON object");
  }
  try {
    for (auto it = j.begin(); it != j.end(); ++it) {
      const std::string &k = it.key();
      const auto &val = it.value();
      if (k == "gamma") v.gamma = val.get<std::string>();
      else if (k == "group") v.group = val.is_string() ? val.get<std::string>() : val.dump();
      else if (k == "space") v.space = val.is_string() ? val.get<std::string>() : val.dump();
      else if (k == "N" || k == "m") v.N = val.get<int>();
      else if (k == "g") v.g = val.get<int>();
      else if (k == "s") v.s = val.get<int>();
      else if (k == "h") v.h = val.get<int>();
      else if (k == "d") v.d = val.get<int>();
      else if (k == "p") v.p = val.get<int>();
      else if (k == "direct_max") v.direct_max = val.get<int>();
      else if (k == "cache_dir") v.cache_dir = val.get<std::string>();
      else fail_invalid("unknown parameter '" + k + "'");
    }
  } catch (const nlohmann::json::exception &e) {
    throw ParseError(0, std::string("malformed parameter: ") + e.what());
  }
  if (v.N < 0) {
    fail_invalid("truncation must be non-negative");
  }
  return v;
}

std::string VerifyParams::to_json() const {
  Json j;
  if (!gamma.empty()) j["gamma"] = gamma;
  j["group"] = group;
  if (!space.empty()) j["space"] = space;
  j["N"] = N;
  if (g >= 0) j["g"] = g;
  if (s >= 0) j["s"] = s;
  if (h >= 0) j["h"] = h;
  if (d >= 0) j["d"] = d;
  if (p > 0) j["p"] = p;
  if (direct_max >= 0) j["direct_max"] = direct_max;
  return j.dump();
}

bool IdentityReport::passed() const {
  if (truncated || match.empty()) {
    return false;
  }
  for (bool m : match) {
    if (!m) {
      return false;
    }
  }
  for (const auto &r : routes) {
    if (!r.control && !r.agrees) {
      return false;
    }
  }
  return true;
}

std::string IdentityReport::to_json(bool timing) const {
  auto strings = [](const std::vector<Rational> &v) {
    Json a = Json::array();
    for (const auto &x : v) {
      a.push_back(rational_to_string(x));
    }
    return a;
  };
  Json j;
  j["id"] = id;
  j["params"] = Json::parse(params.to_json());
  j["lhs"] = strings(lhs);
  j["rhs"] = strings(rhs);
  j["match"] = match;
  j["oracles"] = {{"lhs", lhs_oracle}, {"rhs", rhs_oracle}};
  Json rs = Json::array();
  for (const auto &r : routes) {
    rs.push_back({{"name", r.name},
                  {"oracle", r.oracle},
                  {"values", strings(r.values)},
                  {"agrees", r.agrees},
                  {"control", r.control}});
  }
  j["routes"] = rs;
  j["notes"] = notes;
  j["truncated"] = truncated;
  j["passed"] = passed();
  if (timing) {
    j["timing"] = {{"lhs_seconds", lhs_seconds}, {"rhs_seconds", rhs_seconds}};
  }
  return j.dump(2);
}

std::vector<std::string> identity_ids() {
  return {"C-exp", "C-prod", "A", "A'", "B", "5-7", "6-5", "5-9", "5-10", "6-7", "6-8", "8-1", "8-2", "5-22"};
}

namespace {

struct Context {
  const VerifyParams &params;
  int N;
  Budget budget;
  GroupPtr G;
  VirtualGSpace M;
  IdentityReport report;

  CensusTable census_of(const Presentation &p, int n) const {
    CensusOptions opts;
    opts.cache_dir = params.cache_dir;
    opts.cross_check = false;
    return census(p, std::max(n, 1), opts, budget);
  }

  Presentation gamma() const {
    if (params.gamma.empty()) {
      fail_invalid("this identity needs a gamma presentation");
    }
    return presentation_from_spec(params.gamma);
  }

  template <typename F> std::vector<Rational> timed(double &slot, F &&f) {
    auto start = std::chrono::steady_clock::now();
    std::vector<Rational> v = f();
    slot = seconds_since(start);
    return v;
  }

  void add_route(std::string name, std::string oracle, std::vector<Rational> values,
                 const std::vector<Rational> &reference, bool control = false) {
    ReportRoute r;
    r.name = std::move(name);
    r.oracle = std::move(oracle);
    r.agrees = values.size() <= reference.size();
    for (std::size_t i = 0; r.agrees && i < values.size(); ++i) {
      r.agrees = values[i] == reference[i];
    }
    r.values = std::move(values);
    r.control = control;
    report.routes.push_back(std::move(r));
  }
};

int family_size(const Presentation &p, OneRelatorShape::Kind kind, const char *what) {
  auto shape = p.one_relator_shape();
  if (!shape || shape->kind != kind) {
    fail_invalid(std::string("gamma must be a ") + what + " group");
  }
  return shape->count;
}

Presentation surface(int k) { return presentation_catalog(Family::Surface, k); }
Presentation nonorientable(int k) { return presentation_catalog(Family::Nonorientable, k); }
Presentation free_group(int k) { return presentation_catalog(Family::Free, k); }
Presentation free_abelian(int k) { return presentation_catalog(Family::FreeAbelian, k); }

PowerSeries series_of(int N, const std::vector<Rational> &a) {
  PowerSeries s(N);
  for (int n = 0; n <= N && n < static_cast<int>(a.size()); ++n) {
    s[n] = a[n];
  }
  return s;
}

std::vector<Rational> big_to_rational(const std::vector<BigInt> &v) {
  return std::vector<Rational>(v.begin(), v.end());
}

void verify_c_exp(Context &c) {
  Presentation p = c.gamma();
  c.report.lhs_oracle = "homomorphism enumeration into G wr S_n";
  c.report.rhs_oracle = "exponential over the low-index census with subgroup presentations";
  c.report.lhs = c.timed(c.report.lhs_seconds, [&] { return to_vector(lhs_orb_series(p, c.G, c.M, c.N, LhsMethod::Enumeration, c.budget)); });
  c.report.rhs = c.timed(c.report.rhs_seconds, [&] {
    return to_vector(rhs_exp_series(c.census_of(p, c.N), *c.G, c.M, c.N, c.budget));
  });
}

void verify_c_prod(Context &c, const Presentation &p) {
  c.report.lhs_oracle = "homomorphism enumeration of gamma x Z into G wr S_n";
  c.report.rhs_oracle = "product over conjugacy classes of subgroups with bundle-classification exponents";
  c.report.lhs = c.timed(c.report.lhs_seconds, [&] { return to_vector(lhs_class_series(p, c.G, c.M, c.N, c.budget)); });
  std::vector<Rational> e;
  CensusTable t;
  c.report.rhs = c.timed(c.report.rhs_seconds, [&] {
    t = c.census_of(p, c.N);
    e = class_exponents(t, c.G, c.M, 0, c.budget);
    std::map<unsigned, Rational> exps;
    for (int r = 1; r <= c.N; ++r) {
      exps[r] = e[r];
    }
    return to_vector(product_expansion(exps, c.N));
  });
  e.resize(c.N + 1);
  auto extracted = extract_exponents(series_of(c.N, c.report.lhs));
  std::vector<Rational> ev(c.N + 1, 0);
  for (const auto &[r, a] : extracted) {
    if (static_cast<int>(r) <= c.N) {
      ev[r] = a;
    }
  }
  c.add_route("extracted_exponents", "exponents extracted from the left side", ev, e);
  if (is_point_space(c.M)) {
    std::vector<Rational> orbits(c.N + 1, 0);
    for (const auto &cls : t.classes) {
      if (cls.index <= c.N) {
        orbits[cls.index] += static_cast<long>(
            chi_class_transitive(t.records[cls.record], c.G, c.M, 0, c.budget).terms.size());
      }
    }
    c.add_route("orbit_counts", "number of N x G orbits on Hom(H, G) per class", orbits, e);
  }
}

void verify_a(Context &c) {
  int g = c.params.g;
  if (g < 0) {
    g = c.params.gamma.empty() ? 1 : family_size(c.gamma(), OneRelatorShape::Commutators, "surface") - 1;
  }
  c.report.params.g = g;
  Presentation p = surface(g + 1);
  const bool pt = is_point_space(c.M);
  const bool trivial = c.G->order() == 1;
  LhsMethod primary = (pt && !trivial) ? LhsMethod::Convolution : LhsMethod::Enumeration;
  c.report.lhs_oracle = primary == LhsMethod::Convolution ? "class-algebra convolution in G wr S_n"
                                                          : "homomorphism enumeration into G wr S_n";
  c.report.rhs_oracle = "exponential with the low-index census of the surface group";
  c.report.lhs = c.timed(c.report.lhs_seconds, [&] { return to_vector(lhs_orb_series(p, c.G, c.M, c.N, primary, c.budget)); });
  c.report.rhs = c.timed(c.report.rhs_seconds, [&] {
    CensusTable t = c.census_of(p, c.N);
    PowerSeries a(c.N);
    for (int r = 1; r <= c.N; ++r) {
      a[r] = Rational(t.j[r]) * orb_value(surface(r * g + 1), *c.G, c.M, c.budget) / Rational(r);
    }
    return to_vector(exp(a));
  });
  if (pt) {
    LhsMethod other = primary == LhsMethod::Convolution ? LhsMethod::Enumeration : LhsMethod::Convolution;
    std::uint64_t top = c.N > 0 ? FiniteGroup::wreath(c.G, c.N, c.budget)->order() : 1;
    if (other == LhsMethod::Enumeration && power_estimate(top, p.generator_count() - 1) > 5e7) {
      c.report.notes.push_back("enumeration route skipped: search space too large");
    } else {
      c.add_route(other == LhsMethod::Convolution ? "convolution" : "enumeration",
                  other == LhsMethod::Convolution ? "class-algebra convolution" : "homomorphism enumeration",
                  to_vector(lhs_orb_series(p, c.G, c.M, c.N, other, c.budget)), c.report.lhs);
    }
  }
}

PowerSeries product_one_minus(int N, int step) {
  PowerSeries s = PowerSeries::constant(N, 1);
  for (int r = step; r <= N; r += step) {
    PowerSeries f = PowerSeries::constant(N, 1);
    f[r] = -1;
    s = s * f;
  }
  return s;
}

void verify_b(Context &c) {
  Presentation p = nonorientable(2);
  c.report.lhs_oracle = "homomorphisms of the Klein bottle group into G wr S_n";
  c.report.rhs_oracle = "rational powers of eta-type products";
  c.report.lhs = c.timed(c.report.lhs_seconds, [&] { return to_vector(lhs_orb_series(p, c.G, c.M, c.N, LhsMethod::Auto, c.budget)); });
  Rational chi_torus, chi_klein;
  c.report.rhs = c.timed(c.report.rhs_seconds, [&] {
    chi_torus = orb_value(surface(1), *c.G, c.M, c.budget);
    chi_klein = orb_value(p, *c.G, c.M, c.budget);
    PowerSeries plus = PowerSeries::constant(c.N, 1);
    for (int r = 1; r <= c.N; ++r) {
      PowerSeries f = PowerSeries::constant(c.N, 1);
      f[r] = 1;
      plus = plus * f;
    }
    PowerSeries ratio = plus * inverse(product_one_minus(c.N, 1));
    return to_vector(pow_rational(product_one_minus(c.N, 2), Rational(-1, 2) * chi_torus) *
                     pow_rational(ratio, Rational(1, 2) * chi_klein));
  });
  c.report.notes.push_back("exponents: -1/2 * " + rational_to_string(chi_torus) + " and +1/2 * " +
                           rational_to_string(chi_klein));
  PowerSeries a(c.N);
  for (int r = 1; r <= c.N; ++r) {
    BigInt sigma = closed_form_jr(2, r);
    a[r] += Rational(sigma) * chi_klein / Rational(r);
    if (2 * r <= c.N) {
      a[2 * r] += Rational(sigma) * (chi_torus - chi_klein) / Rational(2 * r);
    }
  }
  c.add_route("exp_form", "exponential with divisor sums", to_vector(exp(a)), c.report.lhs);
}

void verify_5_7(Context &c) {
  int d = c.params.d < 0 ? 1 : c.params.d;
  c.report.params.d = d;
  if (d < 1) {
    fail_invalid("d must be at least 1");
  }
  const int p = c.params.p;
  if (p == 0) {
    Presentation zd = free_abelian(d);
    c.report.lhs_oracle = "homomorphisms of Z^d into G wr S_n";
    c.report.rhs_oracle = "closed-form product raised to chi^orb";
    c.report.lhs = c.timed(c.report.lhs_seconds, [&] { return to_vector(lhs_orb_series(zd, c.G, c.M, c.N, LhsMethod::Enumeration, c.budget)); });
    Rational chi;
    c.report.rhs = c.timed(c.report.rhs_seconds, [&] {
      chi = orb_value(zd, *c.G, c.M, c.budget);
      std::map<unsigned, Rational> exps;
      for (int r = 1; r <= c.N; ++r) {
        exps[r] = Rational(closed_form_jr(d - 1, r));
      }
      return to_vector(pow_rational(product_expansion(exps, c.N), chi));
    });
    CensusTable t = c.census_of(zd, c.N);
    PowerSeries a(c.N);
    for (int r = 1; r <= c.N; ++r) {
      a[r] = Rational(t.j[r]) * chi / Rational(r);
    }
    c.add_route("exp_form", "exponential with the low-index census of Z^d", to_vector(exp(a)), c.report.lhs);
    return;
  }
  c.report.lhs_oracle = "commuting p-power tuples in G wr S_n";
  c.report.rhs_oracle = "exponential over p-power indices with the p-adic divisor recursion";
  c.report.lhs = c.timed(c.report.lhs_seconds, [&] { return to_vector(lhs_p_primary_series(c.G, c.M, d, p, false, c.N, c.budget)); });
  Rational chi;
  c.report.rhs = c.timed(c.report.rhs_seconds, [&] {
    chi = p_primary_value(*c.G, c.M, d, p, false);
    PowerSeries a(c.N);
    for (long q = 1; q <= c.N; q *= p) {
      a[q] = Rational(closed_form_jr(d, q, p)) * chi / Rational(q);
    }
    return to_vector(exp(a));
  });
  std::map<unsigned, Rational> exps;
  for (long q = 1; q <= c.N; q *= p) {
    exps[q] = Rational(closed_form_jr(d - 1, q, p));
  }
  c.add_route("literal_product", "product over p-power indices as displayed",
              to_vector(pow_rational(product_expansion(exps, c.N), chi)), c.report.lhs, true);
  c.report.notes.push_back("literal_product is a control: the p-power product form does not follow from the "
                           "exponential form, whose inner sums over p-power indices are not logarithms");
}

void verify_6_5(Context &c) {
  int d = c.params.d < 0 ? 1 : c.params.d;
  c.report.params.d = d;
  const int p = c.params.p;
  if (p == 0) {
    Presentation zd1 = free_abelian(d + 1);
    c.report.lhs_oracle = "homomorphisms of Z^(d+1) into G wr S_n";
    c.report.rhs_oracle = "product with low-index subgroup counts of Z^d raised to chi^(d)";
    c.report.lhs = c.timed(c.report.lhs_seconds, [&] { return to_vector(lhs_orb_series(zd1, c.G, c.M, c.N, LhsMethod::Enumeration, c.budget)); });
    c.report.rhs = c.timed(c.report.rhs_seconds, [&] {
      std::vector<int> via(c.G->order());
      std::iota(via.begin(), via.end(), 0);
      Rational chi = chi_acting(c.M, {}, *c.G, via, d, c.budget);
      std::vector<BigInt> j(c.N + 1, 0);
      if (d == 0) {
        j[1] = c.N >= 1 ? 1 : 0;
      } else {
        j = c.census_of(free_abelian(d), c.N).j;
      }
      std::map<unsigned, Rational> exps;
      for (int r = 1; r <= c.N; ++r) {
        exps[r] = Rational(j[r]);
      }
      return to_vector(pow_rational(product_expansion(exps, c.N), chi));
    });
    std::vector<Rational> closed(c.N + 1, 0);
    std::vector<Rational> census_j(c.N + 1, 0);
    for (int r = 1; r <= c.N; ++r) {
      closed[r] = Rational(closed_form_jr(d, r));
    }
    if (d >= 1) {
      census_j = big_to_rational(c.census_of(free_abelian(d), c.N).j);
      census_j.resize(c.N + 1);
    } else if (c.N >= 1) {
      census_j[1] = 1;
    }
    c.add_route("closed_form_jr", "divisor recursion for j_r(Z^d) against the census", closed, census_j);
    return;
  }
  c.report.lhs_oracle = "commuting tuples (d p-power elements and one arbitrary) in G wr S_n";
  c.report.rhs_oracle = "product over p-power indices with the p-adic divisor recursion";
  c.report.lhs = c.timed(c.report.lhs_seconds, [&] { return to_vector(lhs_p_primary_series(c.G, c.M, d, p, true, c.N, c.budget)); });
  c.report.rhs = c.timed(c.report.rhs_seconds, [&] {
    Rational chi = p_primary_value(*c.G, c.M, d, p, true);
    std::map<unsigned, Rational> exps;
    for (long q = 1; q <= c.N; q *= p) {
      exps[q] = Rational(closed_form_jr(d, q, p));
    }
    return to_vector(pow_rational(product_expansion(exps, c.N), chi));
  });
}

void verify_5_9(Context &c) {
  int s = c.params.s;
  if (s < 0) {
    s = c.params.gamma.empty() ? 1 : c.gamma().generator_count() - 1;
  }
  c.report.params.s = s;
  Presentation p = free_group(s + 1);
  c.report.lhs_oracle = "homomorphism enumeration into G wr S_n";
  c.report.rhs_oracle = "exponential with the low-index census of the free group";
  c.report.lhs = c.timed(c.report.lhs_seconds, [&] { return to_vector(lhs_orb_series(p, c.G, c.M, c.N, LhsMethod::Enumeration, c.budget)); });
  c.report.rhs = c.timed(c.report.rhs_seconds, [&] {
    CensusTable t = c.census_of(p, c.N);
    PowerSeries a(c.N);
    for (int r = 1; r <= c.N; ++r) {
      a[r] = Rational(t.j[r]) * orb_value(free_group(r * s + 1), *c.G, c.M, c.budget) / Rational(r);
    }
    return to_vector(exp(a));
  });
  if (is_point_space(c.M)) {
    std::vector<Rational> closed(c.N + 1);
    for (int n = 0; n <= c.N; ++n) {
      closed[n] = Rational(big_pow(big_pow(BigInt(c.G->order()), n) * factorial(n), s));
    }
    c.add_route("closed_form", "(|G|^n n!)^s", closed, c.report.lhs);
  }
}

void verify_5_10(Context &c) {
  int h = c.params.h;
  if (h < 0) {
    h = c.params.gamma.empty() ? 0 : family_size(c.gamma(), OneRelatorShape::Squares, "non-orientable surface") - 2;
  }
  if (h < 0) {
    fail_invalid("h must be non-negative");
  }
  c.report.params.h = h;
  Presentation p = nonorientable(h + 2);
  c.report.lhs_oracle = "homomorphisms into G wr S_n";
  c.report.rhs_oracle = "exponential with non-orientable terms at genus rh+2 and orientable corrections";
  c.report.lhs = c.timed(c.report.lhs_seconds, [&] { return to_vector(lhs_orb_series(p, c.G, c.M, c.N, LhsMethod::Auto, c.budget)); });
  CensusTable t;
  std::vector<Rational> literal_exp(c.N + 1, 0);
  c.report.rhs = c.timed(c.report.rhs_seconds, [&] {
    t = c.census_of(p, c.N);
    CensusTable orient = c.census_of(surface(h + 1), std::max(1, c.N / 2));
    PowerSeries a(c.N);
    Rational base = orb_value(p, *c.G, c.M, c.budget);
    for (int r = 1; r <= c.N; ++r) {
      a[r] += Rational(t.j[r]) * orb_value(nonorientable(r * h + 2), *c.G, c.M, c.budget) / Rational(r);
      literal_exp[r] += Rational(t.j[r]) * base / Rational(r);
      if (2 * r <= c.N) {
        Rational corr = Rational(orient.j[r]) *
                        (orb_value(surface(r * h + 1), *c.G, c.M, c.budget) -
                         orb_value(nonorientable(2 * r * h + 2), *c.G, c.M, c.budget)) /
                        Rational(2 * r);
        a[2 * r] += corr;
        literal_exp[2 * r] += corr;
      }
    }
    return to_vector(exp(a));
  });
  PowerSeries split(c.N);
  for (int r = 1; r <= c.N; ++r) {
    Rational plus = (*t.j_plus)[r];
    Rational minus = (*t.j_minus)[r];
    Rational term = minus * orb_value(nonorientable(r * h + 2), *c.G, c.M, c.budget);
    if (r % 2 == 0 && plus != 0) {
      term += plus * orb_value(surface(r * h / 2 + 1), *c.G, c.M, c.budget);
    }
    split[r] = term / Rational(r);
  }
  c.add_route("orientability_split", "exponential over orientable and non-orientable subgroups",
              to_vector(exp(split)), c.report.lhs);
  c.add_route("literal_display", "first term at genus h+2 for every index",
              to_vector(exp(series_of(c.N, literal_exp))), c.report.lhs, true);
}

void for_each_gamma_set(const CensusTable &t, int n,
                        const std::function<void(const std::vector<std::pair<std::size_t, int>> &)> &visit) {
  std::vector<std::pair<std::size_t, int>> cur;
  std::function<void(std::size_t, int)> rec = [&](std::size_t from, int left) {
    if (left == 0) {
      visit(cur);
      return;
    }
    for (std::size_t i = from; i < t.classes.size(); ++i) {
      int idx = t.classes[i].index;
      for (int k = 1; k * idx <= left; ++k) {
        cur.emplace_back(i, k);
        rec(i + 1, left - k * idx);
        cur.pop_back();
      }
    }
  };
  rec(0, n);
}

void verify_6_7(Context &c) {
  int d = c.params.d < 0 ? 1 : c.params.d;
  c.report.params.d = d;
  Presentation p = c.gamma();
  c.report.lhs_oracle = "homomorphisms of gamma x Z^(d+1) into G wr S_n";
  c.report.rhs_oracle = "double product over subgroup indices and classes";
  c.report.lhs = c.timed(c.report.lhs_seconds, [&] {
    return to_vector(lhs_orb_series(product_with_Z_power(p, d + 1), c.G, c.M, c.N, LhsMethod::Enumeration, c.budget));
  });
  CensusTable t;
  c.report.rhs = c.timed(c.report.rhs_seconds, [&] {
    t = c.census_of(p, c.N);
    auto e = class_exponents(t, c.G, c.M, d, c.budget);
    std::map<unsigned, Rational> exps;
    for (int r = 1; r <= c.N; ++r) {
      for (int l = 1; r * l <= c.N; ++l) {
        exps[r * l] += Rational(closed_form_jr(d, r)) * e[l];
      }
    }
    return to_vector(product_expansion(exps, c.N));
  });
  std::vector<Rational> sets(c.N + 1, 0);
  sets[0] = 1;
  for (int n = 1; n <= c.N; ++n) {
    for_each_gamma_set(t, n, [&](const std::vector<std::pair<std::size_t, int>> &X) {
      std::vector<std::pair<SubgroupRecord, int>> parts;
      for (const auto &[i, k] : X) {
        parts.emplace_back(t.records[t.classes[i].record], k);
      }
      sets[n] += chi_class_gset(parts, c.G, c.M, d, c.budget).value;
    });
  }
  c.add_route("gamma_sets", "sum over isomorphism classes of gamma-sets of size n", sets, c.report.lhs);
}

void verify_6_8(Context &c) {
  Presentation p = c.gamma();
  VirtualGSpace pt = point_space(c.G);
  c.report.lhs_oracle = "low-index census of gamma x Z with subgroup hom counts";
  c.report.rhs_oracle = "bundle-classification orbit counts over classes of gamma";
  c.report.lhs = c.timed(c.report.lhs_seconds, [&] {
    CensusTable t = c.census_of(product_with_Z(p), c.N);
    std::vector<Rational> v(c.N + 1, 0);
    for (const auto &cls : t.classes) {
      v[cls.index] += Rational(cls.multiplicity) *
                      orb_value(t.records[cls.record].subgroup_presentation(), *c.G, pt, c.budget);
    }
    return v;
  });
  c.report.rhs = c.timed(c.report.rhs_seconds, [&] {
    auto e = class_exponents(c.census_of(p, c.N), c.G, pt, 0, c.budget);
    std::vector<Rational> v(c.N + 1, 0);
    for (int r = 1; r <= c.N; ++r) {
      for (auto l : divisors(r)) {
        v[r] += Rational(static_cast<long>(l)) * e[l];
      }
    }
    return v;
  });
}

void verify_8_1(Context &c) {
  Presentation p = c.gamma();
  c.report.lhs_oracle = "sum over divisors of r * u_r from the low-index census";
  c.report.rhs_oracle = "sum over divisors of |Hom(H_ab, Z_r)| over subgroups of index m/r";
  CensusTable t;
  c.report.lhs = c.timed(c.report.lhs_seconds, [&] {
    t = c.census_of(p, c.N);
    std::vector<Rational> v(c.N + 1, 0);
    for (int m = 1; m <= c.N; ++m) {
      for (auto r : divisors(m)) {
        v[m] += Rational(static_cast<long>(r)) * Rational(t.u[r]);
      }
    }
    return v;
  });
  c.report.rhs = c.timed(c.report.rhs_seconds, [&] {
    std::vector<Rational> v(c.N + 1, 0);
    for (int m = 1; m <= c.N; ++m) {
      for (auto r : divisors(m)) {
        int idx = m / static_cast<int>(r);
        for (const auto &cls : t.classes) {
          if (cls.index == idx) {
            v[m] += Rational(cls.multiplicity *
                             hom_count_to_cyclic(t.records[cls.record].abelian_invariants(), BigInt(static_cast<unsigned long>(r))));
          }
        }
      }
    }
    return v;
  });
  int direct = c.params.direct_max < 0 ? c.N : std::min(c.params.direct_max, c.N);
  if (direct >= 1) {
    auto j = big_to_rational(c.census_of(product_with_Z(p), direct).j);
    j.resize(direct + 1);
    c.add_route("direct", "low-index census of gamma x Z", j, c.report.lhs);
  }
  try {
    auto h = symmetric_class_hom_counts(p, c.N, c.budget);
    PowerSeries f(c.N);
    for (int n = 0; n <= c.N; ++n) {
      f[n] = make_rational(h[n], factorial(n));
    }
    PowerSeries L = log(f);
    std::vector<Rational> v(c.N + 1, 0);
    for (int m = 1; m <= c.N; ++m) {
      v[m] = L[m] * Rational(m);
    }
    c.add_route("hom_series", "logarithm of the class-count series of Hom(gamma, S_n)", v, c.report.lhs);
  } catch (const Error &e) {
    if (e.kind() != ErrorKind::Budget) {
      throw;
    }
    c.report.notes.push_back(std::string("hom_series route skipped: ") + e.what());
  }
}

void verify_8_2(Context &c) {
  Presentation p = c.gamma();
  auto shape = p.one_relator_shape();
  enum { Surface, Free, Nonorientable } family;
  int size = 0;
  if (shape && shape->kind == OneRelatorShape::Commutators) {
    family = Surface;
    size = shape->count - 1;
  } else if (shape && shape->kind == OneRelatorShape::Squares && shape->count >= 2) {
    family = Nonorientable;
    size = shape->count - 2;
  } else if (p.relators().empty() && p.generator_count() >= 1) {
    family = Free;
    size = p.generator_count() - 1;
  } else {
    fail_invalid("gamma must be an orientable surface, free or non-orientable surface group of genus >= 2");
  }
  c.report.lhs_oracle = "sum over divisors of r * u_r from the low-index census";
  c.report.rhs_oracle = "family recursion with census subgroup counts";
  CensusTable t;
  c.report.lhs = c.timed(c.report.lhs_seconds, [&] {
    t = c.census_of(p, c.N);
    std::vector<Rational> v(c.N + 1, 0);
    for (int m = 1; m <= c.N; ++m) {
      for (auto r : divisors(m)) {
        v[m] += Rational(static_cast<long>(r)) * Rational(t.u[r]);
      }
    }
    return v;
  });
  c.report.rhs = c.timed(c.report.rhs_seconds, [&] {
    std::vector<Rational> v(c.N + 1, 0);
    for (int m = 1; m <= c.N; ++m) {
      for (auto r64 : divisors(m)) {
        unsigned long r = r64;
        int k = m / static_cast<int>(r);
        BigInt R(r);
        BigInt term;
        if (family == Surface) {
          term = t.j[k] * big_pow(R, 2 * (static_cast<unsigned long>(size) * k + 1));
        } else if (family == Free) {
          term = t.j[k] * big_pow(R, static_cast<unsigned long>(size) * k + 1);
        } else {
          BigInt plus = (*t.j_plus)[k];
          unsigned long e = static_cast<unsigned long>(size) * k + 1;
          term = (t.j[k] - plus) * BigInt(r % 2 == 0 ? 2 : 1) * big_pow(R, e) + plus * big_pow(R, e + 1);
        }
        v[m] += Rational(term);
      }
    }
    return v;
  });
}

void verify_5_22(Context &c) {
  int g = c.params.g < 0 ? 0 : c.params.g;
  c.report.params.g = g;
  Presentation orientable = surface(g + 1);
  Presentation klein = nonorientable(2 * g + 2);
  c.report.lhs_oracle = "orientable genus g+1 series";
  c.report.rhs_oracle = "non-orientable genus 2g+2 series";
  c.report.lhs = c.timed(c.report.lhs_seconds, [&] { return to_vector(lhs_orb_series(orientable, c.G, c.M, c.N, LhsMethod::Auto, c.budget)); });
  c.report.rhs = c.timed(c.report.rhs_seconds, [&] { return to_vector(lhs_orb_series(klein, c.G, c.M, c.N, LhsMethod::Auto, c.budget)); });
  auto jo = big_to_rational(census_from_homcounts(orientable, c.N, c.budget));
  auto jn = big_to_rational(census_from_homcounts(klein, c.N, c.budget));
  c.add_route("subgroup_counts", "j_r of both groups from their hom series", jn, jo);
}

IdentityReport verify_at(const std::string &id, const VerifyParams &params, int N, const Budget &budget) {
  GroupPtr G = group_from_spec(params.group, budget);
  VirtualGSpace M = params.space.empty() ? point_space(G) : VirtualGSpace::from_json(G, params.space);
  Context c{params, N, budget, G, M, {}};
  c.report.id = id;
  c.report.params = params;
  c.report.params.N = N;
  if (id == "C-exp") verify_c_exp(c);
  else if (id == "C-prod") verify_c_prod(c, c.gamma());
  else if (id == "A'") {
    int g = params.g;
    if (g < 0) {
      g = params.gamma.empty() ? 1 : family_size(c.gamma(), OneRelatorShape::Commutators, "surface") - 1;
    }
    c.report.params.g = g;
    verify_c_prod(c, surface(g + 1));
  } else if (id == "A") verify_a(c);
  else if (id == "B") verify_b(c);
  else if (id == "5-7") verify_5_7(c);
  else if (id == "6-5") verify_6_5(c);
  else if (id == "5-9") verify_5_9(c);
  else if (id == "5-10") verify_5_10(c);
  else if (id == "6-7") verify_6_7(c);
  else if (id == "6-8") verify_6_8(c);
  else if (id == "8-1") verify_8_1(c);
  else if (id == "8-2") verify_8_2(c);
  else if (id == "5-22") verify_5_22(c);
  else throw Error(ErrorKind::UnknownId, "unknown identity id '" + id + "'");
  auto &r = c.report;
  if (r.lhs.size() != r.rhs.size()) {
    throw Error(ErrorKind::Internal, "sides have different lengths");
  }
  for (std::size_t i = 0; i < r.lhs.size(); ++i) {
    r.match.push_back(r.lhs[i] == r.rhs[i]);
  }
  return r;
}

} // namespace

IdentityReport verify(const std::string &id, const VerifyParams &params, const Budget &budget) {
  auto ids = identity_ids();
  if (std::find(ids.begin(), ids.end(), id) == ids.end()) {
    throw Error(ErrorKind::UnknownId, "unknown identity id '" + id + "'");
  }
  std::vector<std::string> overflow;
  for (int N = params.N; N >= 0; --N) {
    try {
      IdentityReport r = verify_at(id, params, N, budget);
      if (N < params.N) {
        r.truncated = true;
        r.notes.push_back("truncated from N=" + std::to_string(params.N) + " to N=" + std::to_string(N) +
                          " by the budget: " + overflow.front());
      }
      return r;
    } catch (const Error &e) {
      if (e.kind() != ErrorKind::Budget) {
        throw;
      }
      overflow.push_back(e.what());
    }
  }
  IdentityReport r;
  r.id = id;
  r.params = params;
  r.truncated = true;
  r.notes.push_back("no coefficient fits the budget: " + overflow.front());
  return r;
}

} // namespace orbicount
