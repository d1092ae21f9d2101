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

#include "orbicount/characters.hpp"

#include "orbicount/homs.hpp"
#include "orbicount/presentation.hpp"

#include "json.hpp"

#include <algorithm>
#include <mutex>

namespace orbicount {

namespace {

using Poly = std::vector<BigInt>;

// Exact quotient of a by a monic divisor b.
Poly poly_divide(Poly a, const Poly &b) {
  std::size_t db = b.size() - 1;
  Poly q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    BigInt coef = a[i];
    q[i - db] = coef;
    for (std::size_t k = 0; k <= db; ++k) {
      a[i - db + k] -= coef * b[k];
    }
  }
  return q;
}

Poly cyclotomic_uncached(int n, std::map<int, Poly> &cache) {
  Poly p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) {
      auto it = cache.find(d);
      if (it == cache.end()) {
        it = cache.emplace(d, cyclotomic_uncached(d, cache)).first;
      }
      p = poly_divide(p, it->second);
    }
  }
  return p;
}

Poly cyclotomic(int n) {
  static std::mutex mutex;
  static std::map<int, Poly> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) {
    it = cache.emplace(n, cyclotomic_uncached(n, cache)).first;
  }
  return it->second;
}

Rational parse_value(const nlohmann::json &v) {
  if (v.is_number_integer()) {
    return Rational(v.get<long>());
  }
  return rational_from_string(v.get<std::string>());
}

std::vector<int> element_order_profile(const FiniteGroup &G, const std::vector<int> &elements) {
  std::vector<int> orders;
  for (int x : elements) {
    orders.push_back(G.element_order(x));
  }
  std::sort(orders.begin(), orders.end());
  return orders;
}

Rational rational_power(const Rational &x, int e) {
  Rational r = 1;
  Rational base = e >= 0 ? x : Rational(1) / x;
  for (int i = 0; i < std::abs(e); ++i) {
    r *= base;
  }
  return r;
}

} // namespace

Cyclo::Cyclo(int n) : n_(n) {
  if (n < 1) {
    fail_invalid("cyclotomic field order must be positive");
  }
  c_.assign(cyclotomic(n).size() - 1, 0);
}

void Cyclo::reduce(std::vector<Rational> full) {
  std::vector<Rational> folded(n_, 0);
  for (std::size_t k = 0; k < full.size(); ++k) {
    folded[k % n_] += full[k];
  }
  const Poly phi = cyclotomic(n_);
  std::size_t deg = phi.size() - 1;
  for (std::size_t i = folded.size(); i-- > deg;) {
    Rational coef = folded[i];
    if (coef == 0) {
      continue;
    }
    for (std::size_t k = 0; k <= deg; ++k) {
      folded[i - deg + k] -= coef * Rational(phi[k]);
    }
  }
  folded.resize(deg);
  c_ = std::move(folded);
}

Cyclo Cyclo::rational(int n, const Rational &q) {
  Cyclo c(n);
  c.c_[0] = q;
  return c;
}

Cyclo Cyclo::zeta_power(int n, int k) {
  Cyclo c(n);
  std::vector<Rational> full(n, 0);
  full[((k % n) + n) % n] = 1;
  c.reduce(std::move(full));
  return c;
}

Cyclo Cyclo::from_coefficients(int n, const std::vector<Rational> &coeffs) {
  Cyclo c(n);
  c.reduce(coeffs);
  return c;
}

bool Cyclo::is_rational() const {
  for (std::size_t k = 1; k < c_.size(); ++k) {
    if (c_[k] != 0) {
      return false;
    }
  }
  return true;
}

Rational Cyclo::to_rational() const {
  if (!is_rational()) {
    fail_invalid("cyclotomic value is not rational");
  }
  return c_[0];
}

Cyclo Cyclo::conjugate() const {
  std::vector<Rational> full(n_, 0);
  for (std::size_t k = 0; k < c_.size(); ++k) {
    full[(n_ - static_cast<int>(k)) % n_] += c_[k];
  }
  Cyclo out(n_);
  out.reduce(std::move(full));
  return out;
}

std::string Cyclo::to_string() const {
  if (is_rational()) {
    return rational_to_string(c_[0]);
  }
  std::string s;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) {
      continue;
    }
    if (!s.empty()) {
      s += " + ";
    }
    s += rational_to_string(c_[k]);
    if (k > 0) {
      s += "*E(" + std::to_string(n_) + ")^" + std::to_string(k);
    }
  }
  return s;
}

Cyclo operator+(const Cyclo &a, const Cyclo &b) {
  if (a.n_ != b.n_) {
    fail_invalid("cyclotomic fields differ");
  }
  Cyclo r = a;
  for (std::size_t k = 0; k < r.c_.size(); ++k) {
    r.c_[k] += b.c_[k];
  }
  return r;
}

Cyclo operator-(const Cyclo &a, const Cyclo &b) {
  if (a.n_ != b.n_) {
    fail_invalid("cyclotomic fields differ");
  }
  Cyclo r = a;
  for (std::size_t k = 0; k < r.c_.size(); ++k) {
    r.c_[k] -= b.c_[k];
  }
  return r;
}

Cyclo operator*(const Cyclo &a, const Cyclo &b) {
  if (a.n_ != b.n_) {
    fail_invalid("cyclotomic fields differ");
  }
  std::vector<Rational> full(a.c_.size() + b.c_.size(), 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) {
      continue;
    }
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      full[i + j] += a.c_[i] * b.c_[j];
    }
  }
  Cyclo r(a.n_);
  r.reduce(std::move(full));
  return r;
}

CharacterTable character_table_from_json(const std::string &text, const Budget &budget) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    throw ParseError(e.byte == 0 ? 0 : e.byte - 1, "invalid JSON character table");
  }
  CharacterTable t;
  try {
    t.name = j.value("name", std::string());
    const auto &spec = j.at("group");
    t.group = group_from_spec(spec.is_string() ? spec.get<std::string>() : spec.dump(), budget);
    t.field = j.value("field", 1);
    const FiniteGroup &G = *t.group;
    std::vector<char> covered(G.class_count(), 0);
    for (const auto &c : j.at("classes")) {
      int x = G.index_of_perm(c.at("rep").get<Perm>());
      if (x < 0) {
        fail_invalid("class representative is not a group element");
      }
      int cls = G.class_of(x);
      if (covered[cls]) {
        fail_invalid("conjugacy class listed twice");
      }
      covered[cls] = 1;
      if (c.at("size").get<int>() != G.class_sizes()[cls]) {
        fail_invalid("class size does not match the group");
      }
      t.class_reps.push_back(x);
      t.class_sizes.push_back(G.class_sizes()[cls]);
      t.group_class.push_back(cls);
    }
    if (static_cast<int>(t.class_reps.size()) != G.class_count()) {
      fail_invalid("table does not list every conjugacy class");
    }
    for (const auto &row : j.at("rows")) {
      if (row.size() != t.class_reps.size()) {
        fail_invalid("character row length differs from the class count");
      }
      std::vector<Cyclo> values;
      for (const auto &v : row) {
        if (t.field == 1) {
          values.push_back(Cyclo::rational(1, parse_value(v)));
        } else {
          std::vector<Rational> coeffs;
          for (const auto &c : v) {
            coeffs.push_back(parse_value(c));
          }
          values.push_back(Cyclo::from_coefficients(t.field, coeffs));
        }
      }
      t.rows.push_back(std::move(values));
    }
  } catch (const nlohmann::json::exception &e) {
    throw ParseError(0, std::string("malformed character table: ") + e.what());
  }
  int id_col = table_column(t, t.group->identity());
  for (const auto &row : t.rows) {
    Rational d = row[id_col].to_rational();
    if (d.get_den() != 1 || d <= 0) {
      fail_invalid("character degree must be a positive integer");
    }
    t.degrees.push_back(d.get_num());
  }
  validate_orthogonality(t);
  return t;
}

CharacterTable load_character_table(const std::string &name) {
  const auto &tables = embedded_character_tables();
  auto it = tables.find(name);
  if (it == tables.end()) {
    throw Error(ErrorKind::UnknownId, "no character table named " + name);
  }
  return character_table_from_json(it->second);
}

std::vector<std::string> character_table_names() {
  std::vector<std::string> names;
  for (const auto &[name, text] : embedded_character_tables()) {
    names.push_back(name);
  }
  return names;
}

int table_column(const CharacterTable &t, int element) {
  int cls = t.group->class_of(element);
  for (std::size_t c = 0; c < t.group_class.size(); ++c) {
    if (t.group_class[c] == cls) {
      return static_cast<int>(c);
    }
  }
  throw Error(ErrorKind::Internal, "class missing from the character table");
}

void validate_orthogonality(const CharacterTable &t) {
  const int order = t.group->order();
  if (static_cast<int>(t.rows.size()) != t.group->class_count()) {
    fail_invalid("table " + t.name + " must have one row per conjugacy class");
  }
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    for (std::size_t k = i; k < t.rows.size(); ++k) {
      Cyclo sum(t.field);
      for (std::size_t c = 0; c < t.class_reps.size(); ++c) {
        sum = sum + Cyclo::rational(t.field, t.class_sizes[c]) * t.rows[i][c] * t.rows[k][c].conjugate();
      }
      Cyclo expected = Cyclo::rational(t.field, i == k ? order : 0);
      if (!(sum == expected)) {
        fail_invalid("table " + t.name + " fails row orthogonality at rows " + std::to_string(i) + ", " +
                     std::to_string(k));
      }
    }
  }
  BigInt squares = 0;
  for (const auto &d : t.degrees) {
    squares += d * d;
  }
  if (squares != order) {
    fail_invalid("table " + t.name + " degrees do not square-sum to the group order");
  }
}

std::vector<Rational> schur_indicators(const CharacterTable &t) {
  const FiniteGroup &G = *t.group;
  std::vector<int> square_col;
  for (int x : t.class_reps) {
    square_col.push_back(table_column(t, G.mul(x, x)));
  }
  std::vector<Rational> out;
  for (const auto &row : t.rows) {
    Cyclo sum(t.field);
    for (std::size_t c = 0; c < t.class_reps.size(); ++c) {
      sum = sum + Cyclo::rational(t.field, t.class_sizes[c]) * row[square_col[c]];
    }
    if (!sum.is_rational()) {
      throw Error(ErrorKind::Internal, "Schur indicator is not rational");
    }
    out.push_back(sum.to_rational() / Rational(G.order()));
  }
  return out;
}

std::string identify_catalog_table(const FiniteGroup &G, const std::vector<int> &elements) {
  auto profile = element_order_profile(G, elements);
  static std::mutex mutex;
  static std::vector<std::pair<std::vector<int>, std::string>> catalog;
  std::lock_guard<std::mutex> lock(mutex);
  if (catalog.empty()) {
    for (const auto &name : character_table_names()) {
      auto t = load_character_table(name);
      std::vector<int> all(t.group->order());
      for (int x = 0; x < t.group->order(); ++x) {
        all[x] = x;
      }
      catalog.emplace_back(element_order_profile(*t.group, all), name);
    }
  }
  for (const auto &[p, name] : catalog) {
    if (p == profile) {
      return name;
    }
  }
  return {};
}

Rational degree_power_sum(const CharacterTable &t, int exponent) {
  Rational sum = 0;
  for (const auto &d : t.degrees) {
    sum += rational_power(Rational(t.group->order()) / Rational(d), exponent);
  }
  return sum;
}

CharacterCheck check_surface_hom_count(const CharacterTable &t, int g) {
  if (g < 0) {
    fail_invalid("genus parameter must be non-negative");
  }
  CharacterCheck c;
  c.check = "eq_1_15_first";
  c.table = t.name;
  c.parameter = g;
  c.character_side = degree_power_sum(t, 2 * g);
  BigInt homs = one_relator_hom_count(*t.group, OneRelatorShape{OneRelatorShape::Commutators, g + 1});
  c.oracle_side = make_rational(homs, BigInt(t.group->order()));
  c.oracle = "class-algebra convolution";
  c.match = c.character_side == c.oracle_side;
  return c;
}

CharacterCheck check_surface_class_count(const CharacterTable &t, int g) {
  if (g < 0) {
    fail_invalid("genus parameter must be non-negative");
  }
  const FiniteGroup &G = *t.group;
  CharacterCheck c;
  c.check = "eq_1_15_second";
  c.table = t.name;
  c.parameter = g;
  Rational sum = 0;
  for (int rep : G.class_reps()) {
    const auto &C = G.element_centralizer(rep);
    std::string name = identify_catalog_table(G, C);
    if (name.empty()) {
      fail_invalid("no shipped character table for a centralizer of order " + std::to_string(C.size()));
    }
    auto sub = load_character_table(name);
    sum += degree_power_sum(sub, 2 * g);
  }
  c.character_side = sum;
  Presentation p = product_with_Z(presentation_catalog(Family::Surface, g + 1));
  c.oracle_side = make_rational(count_homs(p, G), BigInt(G.order()));
  c.oracle = "homomorphism enumeration of the product with Z";
  c.match = c.character_side == c.oracle_side;
  return c;
}

CharacterCheck check_symmetric_nonorientable(const CharacterTable &t, int h) {
  if (h < -1) {
    fail_invalid("genus parameter must be at least -1");
  }
  CharacterCheck c;
  c.check = "eq_5_16";
  c.table = t.name;
  c.parameter = h;
  c.character_side = degree_power_sum(t, h);
  BigInt homs = one_relator_hom_count(*t.group, OneRelatorShape{OneRelatorShape::Squares, h + 2});
  c.oracle_side = make_rational(homs, BigInt(t.group->order()));
  c.oracle = "class-algebra convolution";
  c.match = c.character_side == c.oracle_side;
  return c;
}

CharacterCheck check_nonorientable_indicator(const CharacterTable &t, int h) {
  if (h < -1) {
    fail_invalid("genus parameter must be at least -1");
  }
  CharacterCheck c;
  c.check = "eq_5_17";
  c.table = t.name;
  c.parameter = h;
  auto eps = schur_indicators(t);
  Rational sum = 0;
  for (std::size_t i = 0; i < t.degrees.size(); ++i) {
    sum += rational_power(Rational(t.group->order()) / Rational(t.degrees[i]), h) * rational_power(eps[i], h + 2);
  }
  c.character_side = sum;
  c.values = eps;
  BigInt homs = one_relator_hom_count(*t.group, OneRelatorShape{OneRelatorShape::Squares, h + 2});
  c.oracle_side = make_rational(homs, BigInt(t.group->order()));
  c.oracle = "class-algebra convolution";
  c.match = c.character_side == c.oracle_side;
  return c;
}

CharacterCheck check_real_type(const CharacterTable &t) {
  CharacterCheck c;
  c.check = "epsilon2";
  c.table = t.name;
  c.values = schur_indicators(t);
  c.match = std::all_of(c.values.begin(), c.values.end(), [](const Rational &e) { return e == 1; });
  c.character_side = c.match ? 1 : 0;
  c.oracle_side = 1;
  c.oracle = "every indicator equals 1";
  return c;
}

} // namespace orbicount
