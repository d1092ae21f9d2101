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

#ifndef ORBICOUNT_SERIES_HPP
#define ORBICOUNT_SERIES_HPP

#include "orbicount/core.hpp"

#include <map>
#include <string>
#include <vector>

namespace orbicount {

// Truncated power series sum_{n<=N} c_n q^n with exact rational coefficients.
class PowerSeries {
public:
  explicit PowerSeries(unsigned truncation = 0);
  PowerSeries(unsigned truncation, std::vector<Rational> coeffs);

  static PowerSeries constant(unsigned truncation, const Rational &c);
  static PowerSeries monomial(unsigned truncation, unsigned degree, const Rational &c);

  unsigned truncation() const { return static_cast<unsigned>(coeffs_.size() - 1); }
  const Rational &operator[](unsigned n) const { return coeffs_.at(n); }
  Rational &operator[](unsigned n) { return coeffs_.at(n); }
  const std::vector<Rational> &coeffs() const { return coeffs_; }

  PowerSeries truncated(unsigned n) const;
  PowerSeries derivative() const;
  PowerSeries integral() const;
  // f(q) -> f(q^k)
  PowerSeries substitute_power(unsigned k) const;

  std::vector<std::string> to_strings() const;

  friend PowerSeries operator+(const PowerSeries &a, const PowerSeries &b);
  friend PowerSeries operator-(const PowerSeries &a, const PowerSeries &b);
  friend PowerSeries operator*(const PowerSeries &a, const PowerSeries &b);
  friend PowerSeries operator*(const Rational &c, const PowerSeries &a);
  friend bool operator==(const PowerSeries &a, const PowerSeries &b);

private:
  std::vector<Rational> coeffs_;
};

PowerSeries inverse(const PowerSeries &a);
PowerSeries exp(const PowerSeries &a);
PowerSeries log(const PowerSeries &a);
PowerSeries pow_rational(const PowerSeries &a, const Rational &c);

// prod_{r<=N} (1 - q^r)^{-a_r}
PowerSeries product_expansion(const std::map<unsigned, Rational> &exponents, unsigned N);
// The unique a_r with f = prod_r (1 - q^r)^{-a_r} up to the truncation of f.
std::map<unsigned, Rational> extract_exponents(const PowerSeries &f);

} // namespace orbicount

#endif
