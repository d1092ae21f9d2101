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

#ifndef ORBICOUNT_CORE_HPP
#define ORBICOUNT_CORE_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace orbicount {

using BigInt = mpz_class;
using Rational = mpq_class;

enum class ErrorKind { Parse, Invalid, Budget, Io, UnknownId, Internal };

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string &message)
      : std::runtime_error(message), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

class ParseError : public Error {
public:
  ParseError(std::size_t position, const std::string &message)
      : Error(ErrorKind::Parse, "parse error at position " + std::to_string(position) + ": " + message),
        position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

[[noreturn]] inline void fail_invalid(const std::string &message) { throw Error(ErrorKind::Invalid, message); }
[[noreturn]] inline void fail_budget(const std::string &message) { throw Error(ErrorKind::Budget, message); }

// Resource limits shared by every enumeration kernel.
struct Budget {
  std::uint64_t group_order_cap = 20000;
  std::uint64_t table_cap = 4096;
  std::uint64_t convolution_cap = 2000;
  std::uint64_t hom_nodes = 4000000000ULL;
  std::uint64_t lowindex_nodes = 200000000ULL;
  std::uint64_t orbit_cap = 1000000;
  std::uint64_t centralizer_cap = 20000;
  std::uint64_t wreath_cap = 40000;
};

const Budget &default_budget();

// "num/den" with den >= 1.
std::string rational_to_string(const Rational &q);
// Reduced fraction num / den.
Rational make_rational(const BigInt &num, const BigInt &den);
Rational rational_from_string(const std::string &text);
BigInt factorial(unsigned n);
BigInt binomial(const BigInt &n, unsigned k);
Rational binomial(const Rational &x, unsigned k);
bool is_prime(std::uint64_t p);
std::vector<std::uint64_t> divisors(std::uint64_t n);

} // namespace orbicount

#endif
