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

#ifndef HYPGRP_WORD_HPP
#define HYPGRP_WORD_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hypgrp/error.hpp"

namespace hypgrp {

class Alphabet;
using AlphabetPtr = std::shared_ptr<const Alphabet>;

// Ordered list of generator names. The order fixes ShortLex.
class Alphabet {
 public:
  // Names must be distinct and match [a-z][a-z0-9_]*.
  static AlphabetPtr make(std::vector<std::string> names);
  // x1, ..., xn style alphabet (prefix must itself be a valid name stem).
  static AlphabetPtr indexed(std::string_view prefix, std::size_t n);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> find(std::string_view name) const;
  // True when every name is one character long, so words print without
  // separators.
  bool single_char() const { return single_char_; }

  // New alphabet with extra names appended; throws on collision.
  AlphabetPtr extended(const std::vector<std::string>& extra) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.names_ == b.names_;
  }

 private:
  explicit Alphabet(std::vector<std::string> names);
  std::vector<std::string> names_;
  bool single_char_ = true;
};

bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b);
void require_same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b);

// A generator or its formal inverse, packed as +(i+1) / -(i+1).
class Letter {
 public:
  constexpr Letter() = default;
  constexpr Letter(std::size_t generator, int sign)
      : code_(sign > 0 ? static_cast<std::int32_t>(generator) + 1
                       : -static_cast<std::int32_t>(generator) - 1) {}

  static constexpr Letter from_code(std::int32_t code) {
    Letter l;
    l.code_ = code;
    return l;
  }

  constexpr std::size_t generator() const {
    return static_cast<std::size_t>(code_ > 0 ? code_ - 1 : -code_ - 1);
  }
  constexpr int sign() const { return code_ > 0 ? 1 : -1; }
  constexpr bool positive() const { return code_ > 0; }
  constexpr Letter inverse() const { return from_code(-code_); }
  constexpr std::int32_t code() const { return code_; }
  // ShortLex rank: alphabet order, generator before its inverse.
  constexpr std::size_t rank() const { return 2 * generator() + (code_ < 0); }

  constexpr bool cancels(Letter other) const { return code_ == -other.code_; }

  friend constexpr bool operator==(Letter, Letter) = default;

 private:
  std::int32_t code_ = 1;
};

// Freely reduced word. The empty word is the identity. Words are never
// observed in unreduced form.
class Word {
 public:
  explicit Word(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {}

  static Word reduce(AlphabetPtr alphabet, std::span<const Letter> raw);
  static Word letter(AlphabetPtr alphabet, std::size_t generator, int sign = 1);
  // Caller guarantees `letters` is already freely reduced.
  static Word from_reduced(AlphabetPtr alphabet, std::vector<Letter> letters);

  const AlphabetPtr& alphabet() const { return alphabet_; }
  std::span<const Letter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }

  Word inverse() const;
  Word prefix(std::size_t n) const;
  Word subword(std::size_t pos, std::size_t len) const;
  Word power(long long k) const;
  bool is_positive() const;
  // Same letters re-homed on another alphabet by generator name.
  Word translate(const AlphabetPtr& target) const;
  // Same generator indices on another alphabet of at least the same size.
  Word reinterpret(const AlphabetPtr& target) const;

  friend bool operator==(const Word& u, const Word& v) {
    return u.letters_ == v.letters_ && same_alphabet(u.alphabet_, v.alphabet_);
  }

 private:
  AlphabetPtr alphabet_;
  std::vector<Letter> letters_;
};

// Accumulates letters while keeping the buffer freely reduced.
class ReducingBuffer {
 public:
  explicit ReducingBuffer(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {}
  void push(Letter l) {
    if (!letters_.empty() && letters_.back().cancels(l)) {
      letters_.pop_back();
    } else {
      letters_.push_back(l);
    }
  }
  void append(std::span<const Letter> ls) {
    for (Letter l : ls) push(l);
  }
  void append_inverse(std::span<const Letter> ls) {
    for (auto it = ls.rbegin(); it != ls.rend(); ++it) push(it->inverse());
  }
  void append(const Word& w) { append(w.letters()); }
  std::size_t size() const { return letters_.size(); }
  void reserve(std::size_t n) { letters_.reserve(n); }
  Word take() { return Word::from_reduced(alphabet_, std::move(letters_)); }

 private:
  AlphabetPtr alphabet_;
  std::vector<Letter> letters_;
};

// Cyclically reduced word: reduced, and first letter does not cancel the last.
class CyclicWord {
 public:
  // Cyclically reduces w (dropping the conjugator).
  explicit CyclicWord(const Word& w);
  // Caller guarantees w is already cyclically reduced.
  static CyclicWord from_cyclically_reduced(Word w);

  const Word& word() const { return word_; }
  std::span<const Letter> letters() const { return word_.letters(); }
  std::size_t size() const { return word_.size(); }
  bool empty() const { return word_.empty(); }
  const AlphabetPtr& alphabet() const { return word_.alphabet(); }

  Word rotation(std::size_t k) const;
  CyclicWord inverse() const { return CyclicWord(word_.inverse()); }
  // True if v is a rotation of this word.
  bool is_rotation_of(const CyclicWord& v) const;

  friend bool operator==(const CyclicWord& a, const CyclicWord& b) {
    return a.word_ == b.word_;
  }

 private:
  CyclicWord() : word_(nullptr) {}
  Word word_;
};

struct CyclicReduction {
  CyclicWord cyclic;
  Word conjugator;  // w = conjugator * cyclic * conjugator^-1
};

Word free_reduce(const AlphabetPtr& alphabet, std::span<const Letter> raw);
Word concat(const Word& u, const Word& v);
inline Word operator*(const Word& u, const Word& v) { return concat(u, v); }
inline Word invert(const Word& w) { return w.inverse(); }
CyclicReduction cyclic_reduce(const Word& w);
std::size_t common_prefix_len(const Word& u, const Word& v);

// ShortLex comparison (length first, then alphabet order with a < A).
std::strong_ordering shortlex_compare(const Word& u, const Word& v);
inline bool shortlex_less(const Word& u, const Word& v) {
  return shortlex_compare(u, v) < 0;
}

// Text syntax: lowercase name = generator, uppercase = inverse, optional
// ^k exponent (k may be negative). Whitespace, '*' and '.' separate tokens;
// "1" or the empty string is the identity.
Word parse_word(const AlphabetPtr& alphabet, std::string_view text);
// Raw letter sequence without reduction (used where the unreduced input
// matters, e.g. Britton normal forms).
std::vector<Letter> parse_letters(const AlphabetPtr& alphabet,
                                  std::string_view text);
std::string format_word(const Word& w);
std::string format_letters(const Alphabet& alphabet,
                           std::span<const Letter> letters);
// Compact form using ^k for runs, e.g. "c1 c2^3".
std::string format_word_compact(const Word& w);

std::size_t hash_letters(std::span<const Letter> letters);

}  // namespace hypgrp

template <>
struct std::hash<hypgrp::Word> {
  std::size_t operator()(const hypgrp::Word& w) const noexcept {
    return hypgrp::hash_letters(w.letters());
  }
};

#endif  // HYPGRP_WORD_HPP
