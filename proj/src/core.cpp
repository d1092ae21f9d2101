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

#include "orbicount/core.hpp"

namespace orbicount {

const Budget &default_budget() {
  static const Budget budget;
  return budget;
}

Rational make_rational(const BigInt &num, const BigInt &den) {
  if (den == 0) {
    fail_invalid("zero denominator");
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string rational_to_string(const Rational &q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational rational_from_string(const std::string &text) {
  Rational q;
  if (q.set_str(text, 10) != 0) {
    throw Error(ErrorKind::Parse, "not a rational number: " + text);
  }
  q.canonicalize();
  return q;
}

BigInt factorial(unsigned n) {
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

BigInt binomial(const BigInt &n, unsigned k) {
  BigInt b;
  mpz_bin_ui(b.get_mpz_t(), n.get_mpz_t(), k);
  return b;
}

Rational binomial(const Rational &x, unsigned k) {
  Rational acc = 1;
  for (unsigned i = 0; i < k; ++i) {
    acc *= (x - Rational(i)) / Rational(i + 1);
  }
  return acc;
}

bool is_prime(std::uint64_t p) {
  if (p < 2) {
    return false;
  }
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) {
      return false;
    }
  }
  return true;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
    }
  }
  return out;
}

} // namespace orbicount
