// Copyright 2026 The hypgrp Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HYPGRP_SUBSTITUTION_HPP
#define HYPGRP_SUBSTITUTION_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hypgrp/bigint.hpp"
#include "hypgrp/word.hpp"

namespace hypgrp {

inline constexpr std::size_t kDefaultSizeCap = 1'000'000;

// Endomorphism of the free group on alphabet(), given by generator images.
class Endomorphism {
 public:
  Endomorphism(AlphabetPtr alphabet, std::vector<Word> images);
  static Endomorphism identity(const AlphabetPtr& alphabet);
  // "a->ab, b->ba" (also accepts ':' or '=' in place of '->'). Generators
  // not mentioned map to themselves.
  static Endomorphism parse(const AlphabetPtr& alphabet, std::string_view text);

  const AlphabetPtr& alphabet() const { return alphabet_; }
  const std::vector<Word>& images() const { return images_; }
  const Word& image(std::size_t generator) const { return images_.at(generator); }
  bool is_positive() const;
  std::string to_string() const;

  friend bool operator==(const Endomorphism& a, const Endomorphism& b) {
    return same_alphabet(a.alphabet_, b.alphabet_) && a.images_ == b.images_;
  }

 private:
  AlphabetPtr alphabet_;
  std::vector<Word> images_;
};

// Homomorphism F(w.alphabet()) -> F(codomain) given by generator images.
Word substitute(const Word& w, std::span<const Word> images, const AlphabetPtr& codomain);

Word apply(const Endomorphism& phi, const Word& w);
// phi ∘ psi, i.e. x -> phi(psi(x)).
Endomorphism compose(const Endomorphism& phi, const Endomorphism& psi);

struct IterateResult {
  // phi^n(w) when every iterate stayed within the cap.
  std::optional<Word> word;
  bool overflow = false;
  // Exact length from matrix arithmetic; present on overflow when phi and w
  // are positive.
  std::optional<BigInt> exact_length;
};

// Overflow is signalled as soon as an intermediate iterate (before free
// reduction) would exceed size_cap letters.
IterateResult iterate(const Endomorphism& phi, unsigned long long n, const Word& w,
                      std::size_t size_cap = kDefaultSizeCap);

inline bool is_positive(const Endomorphism& phi) { return phi.is_positive(); }

// Entry (i, j): occurrences of generator i (either sign) in the image of j.
BigMatrix letter_count_matrix(const Endomorphism& phi);
// Entry (i, j): exponent sum of generator i in the image of j.
BigMatrix exponent_sum_matrix(const Endomorphism& phi);
std::vector<BigInt> count_vector(const Word& w);

struct LengthResult {
  BigInt value;
  bool exact = false;  // otherwise an upper bound
};

// 1^T M^n count(w). Exact when phi and w are positive.
LengthResult length_of_iterate(const Endomorphism& phi, const Word& w, unsigned long long n);

// Images form a free basis of the subgroup they generate.
bool injectivity_check(const Endomorphism& phi);

enum class LengthSource { matrix, expansion, upper_bound };

struct GrowthRow {
  unsigned k = 0;
  BigInt length;
  LengthSource source = LengthSource::matrix;
};

struct GrowthReport {
  std::vector<GrowthRow> rows;
  bool monotone = true;
  // Ratio of the last two exact lengths, NaN when undefined.
  double ratio = 0.0;
  // Hyperbolicity of phi is never decided; this is growth evidence only.
  static constexpr bool proxy_only = true;
};

GrowthReport conjugate_growth_report(const Endomorphism& phi, const Word& w, unsigned n_max,
                                     std::size_t size_cap = kDefaultSizeCap);
// Columns k, exact_length, log10_length. Upper-bound rows leave exact_length
// empty and report log10 of the bound.
std::string growth_csv(const GrowthReport& report);

}  // namespace hypgrp

#endif  // HYPGRP_SUBSTITUTION_HPP
