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

#ifndef HYPGRP_SMALLCANCELLATION_HPP
#define HYPGRP_SMALLCANCELLATION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hypgrp/word.hpp"

namespace hypgrp {

struct Rational {
  std::int64_t num = 1;
  std::int64_t den = 6;
  // "1/6" or an integer.
  static Rational parse(std::string_view text);
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string to_string() const { return std::to_string(num) + "/" + std::to_string(den); }
};

class Presentation {
 public:
  // Relators are cyclically reduced; duplicates up to rotation and inversion
  // are dropped, keeping the first.
  Presentation(AlphabetPtr alphabet, const std::vector<Word>& relators, std::string name = {});

  // Text format: `gens: a b`, `rel: <word>` lines, `#` comments.
  static Presentation parse(std::string_view text, std::string name = {});
  static Presentation load(const std::string& path);
  std::string to_text() const;

  const AlphabetPtr& alphabet() const { return alphabet_; }
  const std::vector<CyclicWord>& relators() const { return relators_; }
  const std::string& name() const { return name_; }
  std::size_t shortest_relator() const;
  std::size_t longest_relator() const;

  // Hypotheses that were declared, not computed (written as `# assume:`
  // comment lines).
  const std::vector<std::string>& assumptions() const { return assumptions_; }
  void add_assumption(std::string text) { assumptions_.push_back(std::move(text)); }

  // Same generator names and the same relator words in order.
  friend bool operator==(const Presentation& a, const Presentation& b);

 private:
  AlphabetPtr alphabet_;
  std::vector<CyclicWord> relators_;
  std::string name_;
  std::vector<std::string> assumptions_;
};

// Every rotation of every relator and of its inverse, as distinct words.
std::vector<Word> symmetrize(const Presentation& p);

struct PieceOccurrence {
  std::size_t relator = 0;
  bool inverted = false;
  std::size_t offset = 0;  // cyclic start inside the (inverted) relator
};

struct PieceWitness {
  Word piece;
  PieceOccurrence first;
  PieceOccurrence second;
};

struct PieceTable {
  // Longest piece occurring in relator i (any rotation or its inverse).
  std::vector<std::size_t> max_piece;
  std::vector<std::size_t> relator_length;
  // Relator attaining the largest piece/length ratio.
  std::optional<std::size_t> worst;
  std::optional<PieceWitness> witness;

  double max_ratio() const;
};

// Occurrences are counted at distinct positions (relator, orientation,
// offset), so a periodic relator has pieces against its own shifts. A piece
// is shorter than its relator.
PieceTable piece_table(const Presentation& p);

struct MetricCheck {
  bool holds = false;
  PieceTable table;
};

MetricCheck check_metric(const Presentation& p, Rational lambda);

struct DehnStep {
  std::size_t position = 0;
  std::size_t relator = 0;
  Word removed{nullptr};
  Word inserted{nullptr};
  std::size_t length_after = 0;
};

struct DehnResult {
  Word word;
  std::vector<DehnStep> trace;
  bool trivial() const { return word.empty(); }
};

// Dehn's algorithm. Construction throws PreconditionError unless the
// presentation is C'(1/6).
class DehnSolver {
 public:
  explicit DehnSolver(Presentation p);

  const Presentation& presentation() const { return p_; }
  const PieceTable& pieces() const { return table_; }

  DehnResult reduce(const Word& w) const;
  bool is_reduced(const Word& w) const;
  bool equal(const Word& u, const Word& v) const;

 private:
  struct Entry {
    std::vector<Letter> letters;
    std::size_t relator;
  };
  struct Match {
    std::size_t position = 0;
    std::size_t length = 0;
    const Entry* entry = nullptr;
  };
  Match best_at(std::span<const Letter> w, std::size_t i) const;
  std::optional<Match> find(std::span<const Letter> w) const;

  Presentation p_;
  PieceTable table_;
  std::vector<Entry> entries_;  // sorted by letter code sequence
};

DehnResult dehn_reduce(const Presentation& p, const Word& w);
bool is_dehn_reduced(const Presentation& p, const Word& w);

}  // namespace hypgrp

#endif  // HYPGRP_SMALLCANCELLATION_HPP
