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

#include "orbicount/series.hpp"

#include <algorithm>
#include <utility>

namespace orbicount {

PowerSeries::PowerSeries(unsigned truncation) : coeffs_(truncation + 1, Rational(0)) {}

PowerSeries::PowerSeries(unsigned truncation, std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  coeffs_.resize(truncation + 1, Rational(0));
}

PowerSeries PowerSeries::constant(unsigned truncation, const Rational &c) {
  PowerSeries s(truncation);
  s.coeffs_[0] = c;
  return s;
}

PowerSeries PowerSeries::monomial(unsigned truncation, unsigned degree, const Rational &c) {
  PowerSeries s(truncation);
  if (degree <= truncation) {
    s.coeffs_[degree] = c;
  }
  return s;
}

PowerSeries PowerSeries::truncated(unsigned n) const {
  std::vector<Rational> c(coeffs_.begin(), coeffs_.begin() + std::min<std::size_t>(n + 1, coeffs_.size()));
  return PowerSeries(std::min(n, truncation()), std::move(c));
}

PowerSeries PowerSeries::derivative() const {
  unsigned N = truncation();
  PowerSeries d(N == 0 ? 0 : N - 1);
  for (unsigned n = 1; n <= N; ++n) {
    d.coeffs_[n - 1] = coeffs_[n] * n;
  }
  return d;
}

PowerSeries PowerSeries::integral() const {
  unsigned N = truncation();
  PowerSeries s(N + 1);
  for (unsigned n = 0; n <= N; ++n) {
    s.coeffs_[n + 1] = coeffs_[n] / Rational(n + 1);
  }
  return s;
}

PowerSeries PowerSeries::substitute_power(unsigned k) const {
  unsigned N = truncation();
  PowerSeries s(N);
  for (unsigned n = 0; n * k <= N && n <= N; ++n) {
    s.coeffs_[n * k] = coeffs_[n];
    if (k == 0) {
      break;
    }
  }
  return s;
}

std::vector<std::string> PowerSeries::to_strings() const {
  std::vector<std::string> out;
  out.reserve(coeffs_.size());
  for (const auto &c : coeffs_) {
    out.push_back(rational_to_string(c));
  }
  return out;
}

PowerSeries operator+(const PowerSeries &a, const PowerSeries &b) {
  unsigned N = std::min(a.truncation(), b.truncation());
  PowerSeries s(N);
  for (unsigned n = 0; n <= N; ++n) {
    s.coeffs_[n] = a.coeffs_[n] + b.coeffs_[n];
  }
  return s;
}

PowerSeries operator-(const PowerSeries &a, const PowerSeries &b) {
  unsigned N = std::min(a.truncation(), b.truncation());
  PowerSeries s(N);
  for (unsigned n = 0; n <= N; ++n) {
    s.coeffs_[n] = a.coeffs_[n] - b.coeffs_[n];
  }
  return s;
}

PowerSeries operator*(const PowerSeries &a, const PowerSeries &b) {
  unsigned N = std::min(a.truncation(), b.truncation());
  PowerSeries s(N);
  for (unsigned i = 0; i <= N; ++i) {
    if (a.coeffs_[i] == 0) {
      continue;
    }
    for (unsigned j = 0; i + j <= N; ++j) {
      s.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return s;
}

PowerSeries operator*(const Rational &c, const PowerSeries &a) {
  PowerSeries s(a.truncation());
  for (unsigned n = 0; n <= a.truncation(); ++n) {
    s.coeffs_[n] = c * a.coeffs_[n];
  }
  return s;
}

bool operator==(const PowerSeries &a, const PowerSeries &b) { return a.coeffs_ == b.coeffs_; }

PowerSeries inverse(const PowerSeries &a) {
  if (a[0] == 0) {
    fail_invalid("inverse of a series with zero constant term");
  }
  unsigned N = a.truncation();
  PowerSeries b(N);
  b[0] = 1 / a[0];
  for (unsigned n = 1; n <= N; ++n) {
    Rational acc = 0;
    for (unsigned k = 1; k <= n; ++k) {
      acc += a[k] * b[n - k];
    }
    b[n] = -acc / a[0];
  }
  return b;
}

PowerSeries exp(const PowerSeries &a) {
  if (a[0] != 0) {
    fail_invalid("exp requires a zero constant term");
  }
  unsigned N = a.truncation();
  PowerSeries b(N);
  b[0] = 1;
  for (unsigned n = 1; n <= N; ++n) {
    Rational acc = 0;
    for (unsigned k = 1; k <= n; ++k) {
      acc += Rational(k) * a[k] * b[n - k];
    }
    b[n] = acc / Rational(n);
  }
  return b;
}

PowerSeries log(const PowerSeries &b) {
  if (b[0] != 1) {
    fail_invalid("log requires constant term 1");
  }
  unsigned N = b.truncation();
  PowerSeries a(N);
  for (unsigned n = 1; n <= N; ++n) {
    Rational acc = 0;
    for (unsigned k = 1; k < n; ++k) {
      acc += Rational(k) * a[k] * b[n - k];
    }
    a[n] = b[n] - acc / Rational(n);
  }
  return a;
}

PowerSeries pow_rational(const PowerSeries &a, const Rational &c) {
  if (a[0] != 1) {
    fail_invalid("pow_rational requires constant term 1");
  }
  return exp(c * log(a));
}

PowerSeries product_expansion(const std::map<unsigned, Rational> &exponents, unsigned N) {
  PowerSeries L(N);
  for (const auto &[r, a] : exponents) {
    if (r == 0) {
      fail_invalid("product_expansion exponent index must be positive");
    }
    if (r > N || a == 0) {
      continue;
    }
    for (unsigned l = 1; r * l <= N; ++l) {
      L[r * l] += a / Rational(l);
    }
  }
  return exp(L);
}

std::map<unsigned, Rational> extract_exponents(const PowerSeries &f) {
  PowerSeries L = log(f);
  unsigned N = f.truncation();
  std::vector<Rational> a(N + 1, Rational(0));
  std::map<unsigned, Rational> out;
  for (unsigned n = 1; n <= N; ++n) {
    // n L_n = sum_{r|n} r a_r
    Rational acc = Rational(n) * L[n];
    for (unsigned r = 1; r < n; ++r) {
      if (n % r == 0) {
        acc -= Rational(r) * a[r];
      }
    }
    a[n] = acc / Rational(n);
    out[n] = a[n];
  }
  return out;
}

} // namespace orbicount
