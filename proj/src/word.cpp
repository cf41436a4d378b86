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

#include "hypgrp/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <unordered_set>

namespace hypgrp {

namespace {

bool valid_name(std::string_view s) {
  if (s.empty() || !(s[0] >= 'a' && s[0] <= 'z')) return false;
  return std::all_of(s.begin() + 1, s.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
  });
}

std::string upper(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw Error("alphabet must be nonempty");
  std::unordered_set<std::string> seen;
  for (const auto& n : names_) {
    if (!valid_name(n)) throw ParseError("invalid generator name '" + n + "'");
    if (!seen.insert(n).second) throw Error("duplicate generator name '" + n + "'");
    if (n.size() != 1) single_char_ = false;
  }
}

AlphabetPtr Alphabet::make(std::vector<std::string> names) {
  return AlphabetPtr(new Alphabet(std::move(names)));
}

AlphabetPtr Alphabet::indexed(std::string_view prefix, std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) names.push_back(std::string(prefix) + std::to_string(i));
  return make(std::move(names));
}

std::optional<std::size_t> Alphabet::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

AlphabetPtr Alphabet::extended(const std::vector<std::string>& extra) const {
  std::vector<std::string> names = names_;
  for (const auto& e : extra) {
    if (find(e)) throw Error("generator name '" + e + "' already in alphabet");
    names.push_back(e);
  }
  return make(std::move(names));
}

bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) {
  return a == b || (a && b && *a == *b);
}

void require_same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) {
  if (!same_alphabet(a, b)) throw AlphabetMismatch();
}

// ---------------------------------------------------------------------------

Word Word::reduce(AlphabetPtr alphabet, std::span<const Letter> raw) {
  ReducingBuffer buf(std::move(alphabet));
  buf.reserve(raw.size());
  buf.append(raw);
  return buf.take();
}

Word Word::letter(AlphabetPtr alphabet, std::size_t generator, int sign) {
  if (generator >= alphabet->size()) throw Error("generator index out of range");
  return from_reduced(std::move(alphabet), {Letter(generator, sign)});
}

Word Word::from_reduced(AlphabetPtr alphabet, std::vector<Letter> letters) {
  Word w(std::move(alphabet));
  w.letters_ = std::move(letters);
  return w;
}

Word Word::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(it->inverse());
  return from_reduced(alphabet_, std::move(out));
}

Word Word::prefix(std::size_t n) const {
  n = std::min(n, letters_.size());
  return from_reduced(alphabet_, {letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(n)});
}

Word Word::subword(std::size_t pos, std::size_t len) const {
  pos = std::min(pos, letters_.size());
  len = std::min(len, letters_.size() - pos);
  auto first = letters_.begin() + static_cast<std::ptrdiff_t>(pos);
  return from_reduced(alphabet_, {first, first + static_cast<std::ptrdiff_t>(len)});
}

Word Word::power(long long k) const {
  if (k == 0 || empty()) return Word(alphabet_);
  if (k < 0) return inverse().power(-k);
  auto cr = cyclic_reduce(*this);
  std::vector<Letter> out(cr.conjugator.letters().begin(), cr.conjugator.letters().end());
  for (long long i = 0; i < k; ++i) {
    out.insert(out.end(), cr.cyclic.letters().begin(), cr.cyclic.letters().end());
  }
  auto inv = cr.conjugator.inverse();
  out.insert(out.end(), inv.letters().begin(), inv.letters().end());
  return from_reduced(alphabet_, std::move(out));
}

bool Word::is_positive() const {
  return std::all_of(letters_.begin(), letters_.end(), [](Letter l) { return l.positive(); });
}

Word Word::translate(const AlphabetPtr& target) const {
  if (same_alphabet(alphabet_, target)) return from_reduced(target, letters_);
  std::vector<std::size_t> map(alphabet_->size());
  for (std::size_t i = 0; i < alphabet_->size(); ++i) {
    auto j = target->find(alphabet_->name(i));
    if (!j) throw AlphabetMismatch("generator '" + alphabet_->name(i) + "' missing from target alphabet");
    map[i] = *j;
  }
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (Letter l : letters_) out.emplace_back(map[l.generator()], l.sign());
  return from_reduced(target, std::move(out));
}

Word Word::reinterpret(const AlphabetPtr& target) const {
  for (Letter l : letters_) {
    if (l.generator() >= target->size()) throw AlphabetMismatch("generator index out of range for target alphabet");
  }
  return from_reduced(target, letters_);
}

// ---------------------------------------------------------------------------

CyclicWord::CyclicWord(const Word& w) : word_(cyclic_reduce(w).cyclic.word_) {}

CyclicWord CyclicWord::from_cyclically_reduced(Word w) {
  CyclicWord c;
  c.word_ = std::move(w);
  return c;
}

Word CyclicWord::rotation(std::size_t k) const {
  const auto ls = word_.letters();
  if (ls.empty()) return word_;
  k %= ls.size();
  std::vector<Letter> out;
  out.reserve(ls.size());
  out.insert(out.end(), ls.begin() + static_cast<std::ptrdiff_t>(k), ls.end());
  out.insert(out.end(), ls.begin(), ls.begin() + static_cast<std::ptrdiff_t>(k));
  return Word::from_reduced(word_.alphabet(), std::move(out));
}

bool CyclicWord::is_rotation_of(const CyclicWord& v) const {
  if (size() != v.size() || !same_alphabet(alphabet(), v.alphabet())) return false;
  if (empty()) return true;
  for (std::size_t k = 0; k < size(); ++k) {
    if (rotation(k) == v.word()) return true;
  }
  return false;
}

Word free_reduce(const AlphabetPtr& alphabet, std::span<const Letter> raw) {
  return Word::reduce(alphabet, raw);
}

Word concat(const Word& u, const Word& v) {
  require_same_alphabet(u.alphabet(), v.alphabet());
  const auto a = u.letters();
  const auto b = v.letters();
  std::size_t cancel = 0;
  while (cancel < a.size() && cancel < b.size() &&
         a[a.size() - 1 - cancel].cancels(b[cancel])) {
    ++cancel;
  }
  std::vector<Letter> out;
  out.reserve(a.size() + b.size() - 2 * cancel);
  out.insert(out.end(), a.begin(), a.end() - static_cast<std::ptrdiff_t>(cancel));
  out.insert(out.end(), b.begin() + static_cast<std::ptrdiff_t>(cancel), b.end());
  return Word::from_reduced(u.alphabet(), std::move(out));
}

CyclicReduction cyclic_reduce(const Word& w) {
  const auto ls = w.letters();
  std::size_t k = 0;
  while (2 * k + 1 < ls.size() && ls[k].cancels(ls[ls.size() - 1 - k])) ++k;
  // Dropping k letters from both ends keeps the word reduced.
  return CyclicReduction{CyclicWord::from_cyclically_reduced(w.subword(k, ls.size() - 2 * k)),
                         w.prefix(k)};
}

std::size_t common_prefix_len(const Word& u, const Word& v) {
  require_same_alphabet(u.alphabet(), v.alphabet());
  const auto a = u.letters();
  const auto b = v.letters();
  auto [ia, ib] = std::mismatch(a.begin(), a.end(), b.begin(), b.end());
  return static_cast<std::size_t>(ia - a.begin());
}

std::strong_ordering shortlex_compare(const Word& u, const Word& v) {
  if (u.size() != v.size()) return u.size() <=> v.size();
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] != v[i]) return u[i].rank() <=> v[i].rank();
  }
  return std::strong_ordering::equal;
}

std::size_t hash_letters(std::span<const Letter> letters) {
  std::size_t h = 1469598103934665603ULL;
  for (Letter l : letters) {
    h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(l.code()));
    h *= 1099511628211ULL;
  }
  return h;
}

// ---------------------------------------------------------------------------

std::vector<Letter> parse_letters(const AlphabetPtr& alphabet, std::string_view text) {
  std::vector<Letter> out;
  std::vector<std::string> uppers;
  uppers.reserve(alphabet->size());
  for (const auto& n : alphabet->names()) uppers.push_back(upper(n));

  auto trimmed = text;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front()))) trimmed.remove_prefix(1);
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) trimmed.remove_suffix(1);
  if (trimmed.empty() || trimmed == "1") return out;

  std::size_t pos = 0;
  while (pos < text.size()) {
    char c = text[pos];
    if (std::isspace(static_cast<unsigned char>(c)) || c == '*' || c == '.') {
      ++pos;
      continue;
    }
    // Longest generator name (or its uppercase form) at this position.
    std::size_t best_len = 0;
    std::optional<Letter> best;
    for (std::size_t i = 0; i < alphabet->size(); ++i) {
      const auto& lo = alphabet->name(i);
      const auto& up = uppers[i];
      if (lo.size() > best_len && text.substr(pos, lo.size()) == lo) {
        best_len = lo.size();
        best = Letter(i, 1);
      }
      if (up != lo && up.size() > best_len && text.substr(pos, up.size()) == up) {
        best_len = up.size();
        best = Letter(i, -1);
      }
    }
    if (!best) {
      throw ParseError("unknown generator at position " + std::to_string(pos) + " in '" +
                       std::string(text) + "'");
    }
    pos += best_len;
    long long exponent = 1;
    while (pos < text.size() && text[pos] == ' ') ++pos;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      std::size_t start = pos;
      if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      std::string_view num = text.substr(start, pos - start);
      if (!num.empty() && num.front() == '+') num.remove_prefix(1);
      auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), exponent);
      if (num.empty() || ec != std::errc() || ptr != num.data() + num.size()) {
        throw ParseError("malformed exponent at position " + std::to_string(start) + " in '" +
                         std::string(text) + "'");
      }
      if (exponent > 100000000 || exponent < -100000000) throw ParseError("exponent too large");
    }
    Letter l = exponent < 0 ? best->inverse() : *best;
    for (long long k = 0; k < (exponent < 0 ? -exponent : exponent); ++k) out.push_back(l);
  }
  return out;
}

Word parse_word(const AlphabetPtr& alphabet, std::string_view text) {
  auto raw = parse_letters(alphabet, text);
  return Word::reduce(alphabet, raw);
}

std::string format_letters(const Alphabet& alphabet, std::span<const Letter> letters) {
  if (letters.empty()) return "1";
  std::string out;
  const bool sep = !alphabet.single_char();
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (sep && i > 0) out.push_back(' ');
    const auto& n = alphabet.name(letters[i].generator());
    out += letters[i].positive() ? n : upper(n);
  }
  return out;
}

std::string format_word(const Word& w) { return format_letters(*w.alphabet(), w.letters()); }

std::string format_word_compact(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  const auto ls = w.letters();
  const auto& a = *w.alphabet();
  std::size_t i = 0;
  while (i < ls.size()) {
    std::size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    if (!out.empty()) out.push_back(' ');
    out += a.name(ls[i].generator());
    long long e = static_cast<long long>(j - i) * ls[i].sign();
    if (e != 1) out += "^" + std::to_string(e);
    i = j;
  }
  return out;
}

}  // namespace hypgrp
