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

#ifndef ORBICOUNT_CHARACTERS_HPP
#define ORBICOUNT_CHARACTERS_HPP

#include "orbicount/group.hpp"

#include <map>
#include <string>
#include <vector>

namespace orbicount {

// Element of the cyclotomic field Q(zeta_n), reduced modulo the n-th cyclotomic polynomial.
class Cyclo {
public:
  explicit Cyclo(int n = 1);
  static Cyclo rational(int n, const Rational &q);
  static Cyclo zeta_power(int n, int k);
  // Coefficients of 1, zeta, ..., zeta^(n-1), not necessarily reduced.
  static Cyclo from_coefficients(int n, const std::vector<Rational> &c);

  int field() const { return n_; }
  bool is_rational() const;
  Rational to_rational() const;
  Cyclo conjugate() const;
  std::string to_string() const;

  friend Cyclo operator+(const Cyclo &a, const Cyclo &b);
  friend Cyclo operator-(const Cyclo &a, const Cyclo &b);
  friend Cyclo operator*(const Cyclo &a, const Cyclo &b);
  friend bool operator==(const Cyclo &a, const Cyclo &b) { return a.n_ == b.n_ && a.c_ == b.c_; }

private:
  void reduce(std::vector<Rational> full);

  int n_;
  std::vector<Rational> c_;
};

struct CharacterTable {
  std::string name;
  GroupPtr group;
  int field = 1;
  // Per table column: a representative element, the class size, and the class id in the group.
  std::vector<int> class_reps;
  std::vector<int> class_sizes;
  std::vector<int> group_class;
  std::vector<std::vector<Cyclo>> rows;
  std::vector<BigInt> degrees;
};

// Parses and validates (class data against the group, then orthogonality).
CharacterTable character_table_from_json(const std::string &text, const Budget &budget = default_budget());
CharacterTable load_character_table(const std::string &name);
std::vector<std::string> character_table_names();
const std::map<std::string, std::string> &embedded_character_tables();

// Throws Invalid when row orthogonality or the degree sum fails.
void validate_orthogonality(const CharacterTable &t);
// Table column holding the class of a group element.
int table_column(const CharacterTable &t, int element);
std::vector<Rational> schur_indicators(const CharacterTable &t);
// Catalog table of a group with the same order and element-order statistics, or empty name.
std::string identify_catalog_table(const FiniteGroup &G, const std::vector<int> &elements);

struct CharacterCheck {
  std::string check;
  std::string table;
  int parameter = 0;
  Rational character_side;
  Rational oracle_side;
  std::string oracle;
  bool match = false;
  std::vector<Rational> values;
};

// Sum over irreducibles of (|G|/dim)^exponent.
Rational degree_power_sum(const CharacterTable &t, int exponent);
CharacterCheck check_surface_hom_count(const CharacterTable &t, int g);
CharacterCheck check_surface_class_count(const CharacterTable &t, int g);
CharacterCheck check_symmetric_nonorientable(const CharacterTable &t, int h);
CharacterCheck check_nonorientable_indicator(const CharacterTable &t, int h);
CharacterCheck check_real_type(const CharacterTable &t);

} // namespace orbicount

#endif
