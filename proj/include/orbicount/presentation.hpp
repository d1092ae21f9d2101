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

#ifndef ORBICOUNT_PRESENTATION_HPP
#define ORBICOUNT_PRESENTATION_HPP

#include "orbicount/core.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace orbicount {

// Signed 1-based generator indices; negative entries are inverses.
using Word = std::vector<std::int32_t>;

Word free_reduce(const Word &w);
Word inverse_word(const Word &w);
Word concat(const Word &a, const Word &b);
Word power_word(const Word &w, int k);
Word commutator_word(const Word &a, const Word &b);
std::vector<std::int64_t> exponent_sums(const Word &w, int generator_count);

enum class Family { Free, Surface, Nonorientable, FreeAbelian };

struct OneRelatorShape {
  enum Kind { Commutators, Squares } kind;
  int count;
};

class Presentation {
public:
  Presentation() = default;
  Presentation(int generator_count, std::vector<Word> relators, std::vector<std::string> names = {},
               std::string label = {});

  int generator_count() const { return generator_count_; }
  const std::vector<Word> &relators() const { return relators_; }
  const std::vector<std::string> &names() const { return names_; }
  const std::string &label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  std::string render() const;
  std::uint64_t hash() const;
  // Relator multiset after sorting; used for presentation-data comparison.
  std::vector<Word> sorted_relators() const;
  // Detects the one-relator surface or squares relator of the catalog literally.
  std::optional<OneRelatorShape> one_relator_shape() const;

  friend bool operator==(const Presentation &a, const Presentation &b) {
    return a.generator_count_ == b.generator_count_ && a.relators_ == b.relators_;
  }

private:
  int generator_count_ = 0;
  std::vector<Word> relators_;
  std::vector<std::string> names_;
  std::string label_;
};

Presentation parse_presentation(const std::string &text);
Presentation presentation_catalog(Family family, int size);
Presentation presentation_catalog(const std::string &family, int size);
Family family_from_string(const std::string &name);
std::string family_name(Family family);
Presentation product_with_Z(const Presentation &p);
Presentation product_with_Z_power(const Presentation &p, int d);

std::string presentation_to_json(const Presentation &p);
Presentation presentation_from_json(const std::string &text);
// Accepts "family:size", the textual grammar, or JSON.
Presentation presentation_from_spec(const std::string &spec);

} // namespace orbicount

#endif
