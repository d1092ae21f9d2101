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

#ifndef ORBICOUNT_IDENTITIES_HPP
#define ORBICOUNT_IDENTITIES_HPP

#include "orbicount/group.hpp"
#include "orbicount/presentation.hpp"
#include "orbicount/series.hpp"
#include "orbicount/spaces.hpp"
#include "orbicount/subgroups.hpp"

#include <string>
#include <vector>

namespace orbicount {

enum class LhsMethod { Auto, Enumeration, Convolution };

bool is_point_space(const VirtualGSpace &M);
bool acts_trivially(const VirtualGSpace &M);

// Sum over n <= N of q^n chi^orb_p(M^n; G wr S_n); with M a point this is |Hom(p, G_n)| / |G_n|.
PowerSeries lhs_orb_series(const Presentation &p, const GroupPtr &G, const VirtualGSpace &M, int N,
                           LhsMethod method = LhsMethod::Auto, const Budget &budget = default_budget());
PowerSeries lhs_hom_series(const Presentation &p, const GroupPtr &G, int N, const Budget &budget = default_budget());
// Same with p x Z, i.e. the series of chi_p(M^n; G_n).
PowerSeries lhs_class_series(const Presentation &p, const GroupPtr &G, const VirtualGSpace &M, int N,
                             const Budget &budget = default_budget());
// Homomorphisms from Z_p^d, times Z when with_z is set, into G_n as commuting tuples of p-power elements.
PowerSeries lhs_p_primary_series(const GroupPtr &G, const VirtualGSpace &M, int d, int p, bool with_z, int N,
                                 const Budget &budget = default_budget());

// chi^orb_p(M; G), using convolution or plain counting when M carries the trivial action.
Rational orb_value(const Presentation &p, const FiniteGroup &G, const VirtualGSpace &M,
                   const Budget &budget = default_budget());
// (1/|G|) sum over commuting tuples of d p-power elements, plus one arbitrary element when with_z is set.
Rational p_primary_value(const FiniteGroup &G, const VirtualGSpace &M, int d, int p, bool with_z);

PowerSeries rhs_exp_series(const CensusTable &census, const FiniteGroup &G, const VirtualGSpace &M, int N,
                           const Budget &budget = default_budget());
// Exponent of (1 - q^r)^{-1} per index r: the sum over classes [H] of index r of chi^(d)_[p/H](M; G).
std::vector<Rational> class_exponents(const CensusTable &census, const GroupPtr &G, const VirtualGSpace &M, int d,
                                      const Budget &budget = default_budget());
PowerSeries rhs_prod_series(const CensusTable &census, const GroupPtr &G, const VirtualGSpace &M, int N,
                            const Budget &budget = default_budget());

// Index-r subgroup count of Z^d (p = 0) or of the p-adic Z_p^d (r a power of p).
BigInt closed_form_jr(int d, unsigned r, int p = 0);
// j_1..j_N from the logarithm of sum q^n |Hom(p, S_n)| / n!; entry 0 is 0.
std::vector<BigInt> census_from_homcounts(const Presentation &p, int N, const Budget &budget = default_budget());
// |Hom(p x Z, S_n)| for n = 0..N via centralizers of class representatives.
std::vector<BigInt> symmetric_class_hom_counts(const Presentation &p, int N, const Budget &budget = default_budget());

struct VerifyParams {
  std::string gamma;
  std::string group = "trivial";
  std::string space;
  int N = 4;
  int g = -1;
  int s = -1;
  int h = -1;
  int d = -1;
  int p = 0;
  int direct_max = -1;
  std::string cache_dir;

  static VerifyParams from_json(const std::string &text);
  std::string to_json() const;
};

struct ReportRoute {
  std::string name;
  std::string oracle;
  std::vector<Rational> values;
  bool agrees = false;
  bool control = false;
};

struct IdentityReport {
  std::string id;
  VerifyParams params;
  std::vector<Rational> lhs;
  std::vector<Rational> rhs;
  std::vector<bool> match;
  std::string lhs_oracle;
  std::string rhs_oracle;
  std::vector<ReportRoute> routes;
  std::vector<std::string> notes;
  bool truncated = false;
  double lhs_seconds = 0;
  double rhs_seconds = 0;

  bool passed() const;
  std::string to_json(bool timing = false) const;
};

std::vector<std::string> identity_ids();
// On budget exhaustion the truncation is lowered until both sides fit, and the report says so.
IdentityReport verify(const std::string &id, const VerifyParams &params, const Budget &budget = default_budget());

} // namespace orbicount

#endif
