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
#include "orbicount/series.hpp"

#include "doctest.h"
#include "oracles.hpp"

#include <random>

using namespace orbicount;

namespace {

PowerSeries random_series(std::mt19937 &rng, unsigned N, bool unit_constant) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  PowerSeries s(N);
  for (unsigned i = 0; i <= N; ++i) s[i] = make_rational(num(rng), den(rng));
  if (unit_constant) s[0] = 1;
  return s;
}

PowerSeries geometric(unsigned N) {
  PowerSeries s(N);
  for (unsigned i = 0; i <= N; ++i) s[i] = 1;
  return s;
}

PowerSeries one_minus_q(unsigned N) { return PowerSeries::constant(N, 1) - PowerSeries::monomial(N, 1, 1); }

} // namespace

TEST_CASE("ring operations on truncated series") {
  CHECK(one_minus_q(10) * geometric(10) == PowerSeries::constant(10, 1));
  CHECK(inverse(one_minus_q(12)) == geometric(12));
  PowerSeries a(5), b(3);
  CHECK((a * b).truncation() == 3);
  CHECK((a + b).truncation() == 3);
  CHECK_THROWS_AS(inverse(PowerSeries::monomial(4, 1, 1)), Error);
}

TEST_CASE("ring axioms on random series") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    auto a = random_series(rng, 16, false), b = random_series(rng, 16, false), c = random_series(rng, 16, false);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == PowerSeries(16));
    auto u = random_series(rng, 16, true);
    CHECK(u * inverse(u) == PowerSeries::constant(16, 1));
  }
}

TEST_CASE("exp and log") {
  unsigned N = 12;
  auto one_plus_q = PowerSeries::constant(N, 1) + PowerSeries::monomial(N, 1, 1);
  CHECK(exp(log(one_plus_q)) == one_plus_q);
  PowerSeries harmonic(N);
  for (unsigned r = 1; r <= N; ++r) harmonic[r] = make_rational(1, r);
  CHECK(exp(harmonic) == geometric(N));
  CHECK_THROWS_AS(exp(PowerSeries::constant(N, 1)), Error);
  CHECK_THROWS_AS(log(PowerSeries::constant(N, 2)), Error);

  std::mt19937 rng(11);
  for (int trial = 0; trial < 8; ++trial) {
    auto a = random_series(rng, 16, true), b = random_series(rng, 16, true);
    CHECK(exp(log(a)) == a);
    CHECK(log(a * b) == log(a) + log(b));
    auto z = random_series(rng, 16, false);
    z[0] = 0;
    CHECK(exp(z).derivative() == (exp(z) * z.derivative()).truncated(15));
  }
}

TEST_CASE("exp of the subgroup-count series of Z is the geometric series") {
  // j_r(Z) = 1 for every r, and |Hom(Z, S_n)| / n! = 1.
  unsigned N = 10;
  PowerSeries s(N);
  for (unsigned r = 1; r <= N; ++r) s[r] = make_rational(1, r);
  CHECK(exp(s) == geometric(N));
}

TEST_CASE("rational powers") {
  unsigned N = 10;
  auto sq = inverse(one_minus_q(N) * one_minus_q(N));
  CHECK(pow_rational(sq, make_rational(1, 2)) == inverse(one_minus_q(N)));
  std::mt19937 rng(3);
  auto a = random_series(rng, N, true);
  CHECK(pow_rational(a, 0) == PowerSeries::constant(N, 1));
  CHECK(pow_rational(a, 1) == a);
  CHECK(pow_rational(a, make_rational(1, 3)) * pow_rational(a, make_rational(2, 3)) == a);
  CHECK_THROWS_AS(pow_rational(PowerSeries::constant(N, 3), make_rational(1, 2)), Error);
}

TEST_CASE("product expansion against independent oracles") {
  std::map<unsigned, Rational> ones;
  for (unsigned r = 1; r <= 6; ++r) ones[r] = 1;
  auto p = product_expansion(ones, 6);
  auto partitions = oracle::partition_counts(6);
  for (unsigned n = 0; n <= 6; ++n) CHECK(p[n] == Rational(partitions[n]));

  for (const Rational &chi : {Rational(-3), Rational(2), make_rational(-1, 2), make_rational(5, 3)}) {
    auto m = product_expansion({{1, chi}}, 9);
    auto b = oracle::binomial_series(chi, 9);
    for (unsigned n = 0; n <= 9; ++n) CHECK(m[n] == b[n]);
  }
  std::map<unsigned, Rational> zeros{{1, 0}, {2, 0}, {3, 0}};
  CHECK(product_expansion(zeros, 5) == PowerSeries::constant(5, 1));
}

TEST_CASE("exponent extraction inverts product expansion") {
  std::mt19937 rng(19);
  std::uniform_int_distribution<int> dist(-6, 6);
  for (int trial = 0; trial < 20; ++trial) {
    std::map<unsigned, Rational> E;
    for (unsigned r = 1; r <= 20; ++r) E[r] = dist(rng);
    auto back = extract_exponents(product_expansion(E, 20));
    for (unsigned r = 1; r <= 20; ++r) CHECK(back[r] == E[r]);
  }
  std::map<unsigned, Rational> Q{{1, make_rational(1, 2)}, {2, make_rational(-7, 3)}, {3, 5}};
  auto back = extract_exponents(product_expansion(Q, 6));
  CHECK(back[1] == Q[1]);
  CHECK(back[2] == Q[2]);
  CHECK(back[3] == Q[3]);
  for (unsigned r = 4; r <= 6; ++r) CHECK(back[r] == 0);

  auto g = extract_exponents(geometric(8));
  CHECK(g[1] == 1);
  for (unsigned r = 2; r <= 8; ++r) CHECK(g[r] == 0);
  CHECK_THROWS_AS(extract_exponents(PowerSeries::constant(4, 2)), Error);
}

TEST_CASE("exponents of the class-count series of F2 are the conjugacy-class counts u_r") {
  unsigned N = 4;
  PowerSeries f(N);
  for (unsigned n = 0; n <= N; ++n) f[n] = Rational(oracle::tuple_orbits(static_cast<int>(n), 2));
  auto E = extract_exponents(f);
  auto c = census(presentation_catalog(Family::Free, 2), static_cast<int>(N));
  for (unsigned r = 1; r <= N; ++r) CHECK(E[r] == Rational(c.u[r]));
}

TEST_CASE("series print as num/den strings") {
  PowerSeries s(2, {Rational(1), make_rational(-1, 2), Rational(3)});
  CHECK(s.to_strings() == std::vector<std::string>{"1/1", "-1/2", "3/1"});
}
