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

#include <random>

#include "doctest.h"
#include "hypgrp/substitution.hpp"
#include "oracles.hpp"

using namespace hypgrp;
using namespace hypgrp::testing;

namespace {

Endomorphism thue_morse() {
  auto a = Alphabet::make({"a", "b"});
  return Endomorphism::parse(a, "a->ab, b->ba");
}

// c_i -> c1 c2^(ri+1) c1 c2^(ri+2) ... c1 c2^(ri+r), built by hand.
Word big_c(const AlphabetPtr& a, int r, int i) {
  std::vector<Letter> ls;
  for (int k = 1; k <= r; ++k) {
    ls.emplace_back(0, 1);
    for (int e = 0; e < r * i + k; ++e) ls.emplace_back(1, 1);
  }
  return Word::reduce(a, ls);
}

// Brute-force kernel element of length <= max_len.
bool kernel_nontrivial(const Endomorphism& phi, std::size_t max_len) {
  for (const auto& w : all_words(phi.alphabet(), max_len)) {
    if (!w.empty() && apply(phi, w).empty()) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("apply") {
  auto phi = thue_morse();
  auto a = phi.alphabet();
  CHECK(apply(phi, parse_word(a, "ab")) == parse_word(a, "abba"));
  CHECK(apply(phi, parse_word(a, "A")) == parse_word(a, "BA"));
  auto id = Endomorphism::identity(a);
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    auto u = random_word(a, rng() % 12, rng);
    auto v = random_word(a, rng() % 12, rng);
    CHECK(apply(id, u) == u);
    CHECK(apply(phi, u * v) == apply(phi, u) * apply(phi, v));
  }
  CHECK_THROWS_AS(apply(phi, Word(Alphabet::make({"x", "y"}))), AlphabetMismatch);
  CHECK_THROWS(Endomorphism(a, {Word(a), Word(a)}));
}

TEST_CASE("apply respects free reduction") {
  auto a = Alphabet::make({"a", "b", "c"});
  auto phi = Endomorphism::parse(a, "a->aB, b->cca, c->Ab");
  std::mt19937_64 rng(11);
  for (int t = 0; t < 300; ++t) {
    std::vector<std::int32_t> raw;
    for (int i = 0; i < 14; ++i) {
      int g = static_cast<int>(rng() % 3) + 1;
      raw.push_back(rng() % 2 ? g : -g);
    }
    std::vector<std::int32_t> sub;
    for (auto c : raw) {
      auto img = codes_of(phi.image(std::abs(c) - 1));
      if (c > 0) {
        sub.insert(sub.end(), img.begin(), img.end());
      } else {
        for (auto it = img.rbegin(); it != img.rend(); ++it) sub.push_back(-*it);
      }
    }
    std::vector<Letter> ls;
    for (auto c : raw) ls.push_back(Letter::from_code(c));
    CHECK(codes_of(apply(phi, Word::reduce(a, ls))) == naive_reduce(sub));
  }
}

TEST_CASE("compose and iterate") {
  auto phi = thue_morse();
  auto a = phi.alphabet();
  auto id = Endomorphism::identity(a);
  CHECK(compose(phi, id) == phi);
  CHECK(compose(id, phi) == phi);
  auto r = iterate(phi, 3, parse_word(a, "a"), 100);
  REQUIRE(r.word);
  CHECK(format_word(*r.word) == "abbabaab");
  auto w = parse_word(a, "abAb");
  CHECK(*iterate(phi, 0, w).word == w);

  auto over = iterate(phi, 20, parse_word(a, "a"), 1000);
  CHECK(over.overflow);
  CHECK(!over.word);
  REQUIRE(over.exact_length);
  CHECK(*over.exact_length == BigInt(1) << 20);

  auto psi = Endomorphism::parse(a, "a->aab, b->b");
  auto pp = compose(phi, psi);
  for (const char* s : {"a", "b", "aB", "AbbA"}) {
    auto x = parse_word(a, s);
    CHECK(apply(pp, x) == apply(phi, apply(psi, x)));
  }
  CHECK(letter_count_matrix(pp) == letter_count_matrix(phi) * letter_count_matrix(psi));
}

TEST_CASE("positivity") {
  auto a = Alphabet::make({"a", "b"});
  CHECK(is_positive(thue_morse()));
  CHECK(!is_positive(Endomorphism::parse(a, "a->aB")));
  auto c = Alphabet::make({"c1", "c2"});
  Endomorphism psi(c, {big_c(c, 17, 1), big_c(c, 17, 2)});
  CHECK(is_positive(psi));
}

TEST_CASE("lengths by matrix") {
  auto phi = thue_morse();
  auto a = phi.alphabet();
  auto m = letter_count_matrix(phi);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) CHECK(m(i, j) == 1);
  }
  Word cur = parse_word(a, "a");
  for (unsigned n = 0; n <= 12; ++n) {
    auto len = length_of_iterate(phi, parse_word(a, "a"), n);
    CHECK(len.exact);
    CHECK(len.value == BigInt(1) << n);
    CHECK(BigInt(cur.size()) == len.value);
    cur = apply(phi, cur);
  }
  auto w = parse_word(a, "abbab");
  CHECK(length_of_iterate(Endomorphism::identity(a), w, 9).value == 5);

  auto c = Alphabet::make({"c1", "c2"});
  auto c1 = big_c(c, 17, 1), c2 = big_c(c, 17, 2);
  CHECK(c1.size() == 459);
  CHECK(c2.size() == 748);
  for (int i = 1; i <= 2; ++i) {
    for (int r : {3, 5, 17}) CHECK(big_c(c, r, i).size() == std::size_t(r + r * r * i + r * (r + 1) / 2));
  }
  // Expansion agrees with the matrix for every iterate within 1e5 letters.
  Endomorphism psi(c, {c1, c2});
  Word x = parse_word(c, "c1 c2");
  for (unsigned n = 0;; ++n) {
    CHECK(BigInt(x.size()) == length_of_iterate(psi, parse_word(c, "c1 c2"), n).value);
    auto next = iterate(psi, 1, x, 100000);
    if (!next.word) break;
    x = *next.word;
  }
  // Non-positive: matrix only bounds.
  auto nonpos = Endomorphism::parse(a, "a->aB, b->b");
  auto bound = length_of_iterate(nonpos, parse_word(a, "ab"), 3);
  CHECK(!bound.exact);
  CHECK(bound.value >= BigInt(iterate(nonpos, 3, parse_word(a, "ab")).word->size()));
}

TEST_CASE("injectivity") {
  auto a = Alphabet::make({"a", "b"});
  CHECK(injectivity_check(thue_morse()));
  CHECK(!injectivity_check(Endomorphism::parse(a, "a->a, b->a")));
  CHECK(!injectivity_check(Endomorphism::parse(a, "a->ab, b->ab")));
  CHECK(injectivity_check(Endomorphism::parse(a, "a->ab, b->b")));
  CHECK(injectivity_check(Endomorphism::parse(a, "a->bA, b->aab")));

  std::mt19937_64 rng(5);
  for (auto alpha : {Alphabet::make({"a", "b"}), Alphabet::make({"a", "b", "c"})}) {
    const std::size_t max_len = alpha->size() == 2 ? 6 : 4;
    for (int t = 0; t < 40; ++t) {
      std::vector<Word> imgs;
      for (std::size_t i = 0; i < alpha->size(); ++i) {
        // Short images over few letters make kernels common.
        imgs.push_back(random_word(alpha, 1 + rng() % 3, rng));
      }
      if (rng() % 3 == 0) imgs[1] = imgs[0];
      Endomorphism phi(alpha, imgs);
      bool inj = injectivity_check(phi);
      bool ker = kernel_nontrivial(phi, max_len);
      if (ker) CHECK(!inj);
      if (inj) CHECK(!ker);
    }
  }
}

TEST_CASE("growth report") {
  auto phi = thue_morse();
  auto a = phi.alphabet();
  auto rep = conjugate_growth_report(phi, parse_word(a, "a"), 10);
  REQUIRE(rep.rows.size() == 11);
  for (unsigned k = 0; k <= 10; ++k) CHECK(rep.rows[k].length == BigInt(1) << k);
  CHECK(rep.monotone);
  CHECK(rep.ratio == doctest::Approx(2.0));
  CHECK(GrowthReport::proxy_only);

  auto flat = conjugate_growth_report(Endomorphism::identity(a), parse_word(a, "abA"), 5);
  for (const auto& row : flat.rows) CHECK(row.length == 1);
  auto zero = conjugate_growth_report(phi, Word(a), 5);
  for (const auto& row : zero.rows) CHECK(row.length == 0);

  auto csv = growth_csv(rep);
  CHECK(csv.rfind("k,exact_length,log10_length\n", 0) == 0);
  CHECK(csv.find("\n10,1024,3.010300\n") != std::string::npos);

  // Non-positive map past the cap falls back to flagged upper bounds.
  auto np = Endomorphism::parse(a, "a->aBa, b->bab");
  auto capped = conjugate_growth_report(np, parse_word(a, "ab"), 12, 2000);
  CHECK(capped.rows.front().source == LengthSource::expansion);
  CHECK(capped.rows.back().source == LengthSource::upper_bound);
}
