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

#include "hypgrp/substitution.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "hypgrp/stallings.hpp"

namespace hypgrp {

Endomorphism::Endomorphism(AlphabetPtr alphabet, std::vector<Word> images)
    : alphabet_(std::move(alphabet)), images_(std::move(images)) {
  if (images_.size() != alphabet_->size()) throw Error("endomorphism needs one image per generator");
  bool any = false;
  for (const auto& w : images_) {
    require_same_alphabet(alphabet_, w.alphabet());
    any = any || !w.empty();
  }
  if (!any) throw Error("endomorphism has only trivial images");
}

Endomorphism Endomorphism::identity(const AlphabetPtr& alphabet) {
  std::vector<Word> images;
  for (std::size_t i = 0; i < alphabet->size(); ++i) images.push_back(Word::letter(alphabet, i));
  return Endomorphism(alphabet, std::move(images));
}

Endomorphism Endomorphism::parse(const AlphabetPtr& alphabet, std::string_view text) {
  std::vector<Word> images;
  for (std::size_t i = 0; i < alphabet->size(); ++i) images.push_back(Word::letter(alphabet, i));
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(pos, end - pos);
    pos = end + 1;
    std::size_t arrow = item.find("->");
    std::size_t skip = 2;
    if (arrow == std::string_view::npos) {
      arrow = item.find_first_of(":=");
      skip = 1;
    }
    if (arrow == std::string_view::npos) {
      if (item.find_first_not_of(" \t") == std::string_view::npos) continue;
      throw ParseError("expected 'gen->word' in '" + std::string(item) + "'");
    }
    std::string name(item.substr(0, arrow));
    name.erase(0, name.find_first_not_of(" \t"));
    name.erase(name.find_last_not_of(" \t") + 1);
    auto g = alphabet->find(name);
    if (!g) throw ParseError("unknown generator '" + name + "' in endomorphism");
    images[*g] = parse_word(alphabet, item.substr(arrow + skip));
  }
  return Endomorphism(alphabet, std::move(images));
}

bool Endomorphism::is_positive() const {
  for (const auto& w : images_) {
    if (!w.is_positive()) return false;
  }
  return true;
}

std::string Endomorphism::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) out += ", ";
    out += alphabet_->name(i) + "->" + format_word(images_[i]);
  }
  return out;
}

Word substitute(const Word& w, std::span<const Word> images, const AlphabetPtr& codomain) {
  if (images.size() != w.alphabet()->size()) throw AlphabetMismatch("image count does not match alphabet");
  ReducingBuffer b(codomain);
  for (Letter l : w.letters()) {
    const Word& img = images[l.generator()];
    require_same_alphabet(codomain, img.alphabet());
    if (l.positive()) b.append(img); else b.append_inverse(img.letters());
  }
  return b.take();
}

Word apply(const Endomorphism& phi, const Word& w) {
  require_same_alphabet(phi.alphabet(), w.alphabet());
  return substitute(w, phi.images(), phi.alphabet());
}

Endomorphism compose(const Endomorphism& phi, const Endomorphism& psi) {
  require_same_alphabet(phi.alphabet(), psi.alphabet());
  std::vector<Word> images;
  for (const auto& w : psi.images()) images.push_back(apply(phi, w));
  return Endomorphism(phi.alphabet(), std::move(images));
}

IterateResult iterate(const Endomorphism& phi, unsigned long long n, const Word& w,
                      std::size_t size_cap) {
  require_same_alphabet(phi.alphabet(), w.alphabet());
  IterateResult r;
  Word cur = w;
  for (unsigned long long k = 0; k < n; ++k) {
    std::size_t raw = 0;
    for (Letter l : cur.letters()) raw += phi.image(l.generator()).size();
    if (raw > size_cap) {
      r.overflow = true;
      if (phi.is_positive() && w.is_positive()) r.exact_length = length_of_iterate(phi, w, n).value;
      return r;
    }
    cur = apply(phi, cur);
  }
  if (cur.size() > size_cap) {
    r.overflow = true;
    if (phi.is_positive() && w.is_positive()) r.exact_length = BigInt(cur.size());
    return r;
  }
  r.word = std::move(cur);
  return r;
}

BigMatrix letter_count_matrix(const Endomorphism& phi) {
  const std::size_t n = phi.alphabet()->size();
  BigMatrix m(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (Letter l : phi.image(j).letters()) m(l.generator(), j) += 1;
  }
  return m;
}

BigMatrix exponent_sum_matrix(const Endomorphism& phi) {
  const std::size_t n = phi.alphabet()->size();
  BigMatrix m(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (Letter l : phi.image(j).letters()) m(l.generator(), j) += l.sign();
  }
  return m;
}

std::vector<BigInt> count_vector(const Word& w) {
  std::vector<BigInt> v(w.alphabet()->size());
  for (Letter l : w.letters()) v[l.generator()] += 1;
  return v;
}

LengthResult length_of_iterate(const Endomorphism& phi, const Word& w, unsigned long long n) {
  require_same_alphabet(phi.alphabet(), w.alphabet());
  auto v = letter_count_matrix(phi).power(n).apply(count_vector(w));
  LengthResult r;
  for (const auto& x : v) r.value += x;
  r.exact = phi.is_positive() && w.is_positive();
  return r;
}

bool injectivity_check(const Endomorphism& phi) {
  auto g = SubgroupGraph::build(phi.alphabet(), phi.images());
  return g.rank() == phi.alphabet()->size();
}

GrowthReport conjugate_growth_report(const Endomorphism& phi, const Word& w, unsigned n_max,
                                     std::size_t size_cap) {
  require_same_alphabet(phi.alphabet(), w.alphabet());
  GrowthReport report;
  const bool exact_by_matrix = phi.is_positive() && w.is_positive();
  const BigMatrix m = letter_count_matrix(phi);
  std::vector<BigInt> counts = count_vector(w);
  std::optional<Word> cur = w;
  for (unsigned k = 0; k <= n_max; ++k) {
    GrowthRow row;
    row.k = k;
    if (exact_by_matrix) {
      // Positive words are cyclically reduced.
      for (const auto& x : counts) row.length += x;
      row.source = LengthSource::matrix;
    } else if (cur) {
      row.length = cyclic_reduce(*cur).cyclic.size();
      row.source = LengthSource::expansion;
    } else {
      for (const auto& x : counts) row.length += x;
      row.source = LengthSource::upper_bound;
    }
    report.rows.push_back(row);
    counts = m.apply(counts);
    if (!exact_by_matrix && cur) {
      std::size_t raw = 0;
      for (Letter l : cur->letters()) raw += phi.image(l.generator()).size();
      if (raw > size_cap) cur.reset(); else cur = apply(phi, *cur);
    }
  }
  std::optional<BigInt> prev, last;
  std::optional<BigInt> prev_exact;
  for (const auto& row : report.rows) {
    if (row.source == LengthSource::upper_bound) continue;
    if (prev_exact && row.length < *prev_exact) report.monotone = false;
    prev = prev_exact;
    prev_exact = row.length;
  }
  if (prev && prev_exact && *prev > 0 && *prev_exact > 0) {
    report.ratio = std::pow(10.0, log10_big(*prev_exact) - log10_big(*prev));
  } else {
    report.ratio = std::numeric_limits<double>::quiet_NaN();
  }
  return report;
}

std::string growth_csv(const GrowthReport& report) {
  std::ostringstream out;
  out << "k,exact_length,log10_length\n";
  for (const auto& row : report.rows) {
    out << row.k << ',';
    if (row.source != LengthSource::upper_bound) out << to_decimal(row.length);
    out << ',';
    if (row.length > 0) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.6f", log10_big(row.length));
      out << buf;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace hypgrp
