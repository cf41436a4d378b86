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
#include "hypgrp/gog.hpp"
#include "oracles.hpp"

using namespace hypgrp;
using namespace hypgrp::testing;

namespace {

AscendingHnnSpec thue_morse_hnn() {
  auto a = Alphabet::make({"a", "b"});
  return AscendingHnnSpec(Endomorphism::parse(a, "a->ab, b->ba"));
}

NormalForm nf(const MultiHnnSpec& s, const char* text) {
  return britton_normal_form(s, parse_letters(s.full_alphabet(), text));
}

std::vector<Letter> random_letters(const AlphabetPtr& a, std::size_t n, std::mt19937_64& rng) {
  std::vector<Letter> out;
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(rng() % a->size(), rng() % 2 ? 1 : -1);
  return out;
}

}  // namespace

TEST_CASE("specs") {
  auto a = Alphabet::make({"a", "b"});
  CHECK_THROWS_AS(AscendingHnnSpec(Endomorphism::parse(a, "a->ab, b->ab")), PreconditionError);
  CHECK_THROWS_AS(AscendingHnnSpec(Endomorphism::parse(a, "a->ab"), "a"), Error);
  MultiHnnSpec m({{"s", Endomorphism::parse(a, "a->ab, b->ba")}, {"t", Endomorphism::parse(a, "a->aa, b->b")}});
  CHECK(m.full_alphabet()->names() == std::vector<std::string>{"a", "b", "s", "t"});
  auto p = m.presentation();
  REQUIRE(p.relators().size() == 4);
  CHECK(format_word(p.relators()[0].word()) == "saSBA");
  CHECK(format_word(p.relators()[3].word()) == "tbTB");
  CHECK_THROWS_AS(MultiHnnSpec({{"s", Endomorphism::parse(a, "a->ab")}, {"s", Endomorphism::parse(a, "a->ab")}}),
                  Error);
}

TEST_CASE("britton examples") {
  auto s = thue_morse_hnn();
  CHECK(nf(s, "taT").to_string() == "[ab]");
  CHECK(nf(s, "Tabbat").to_string() == "[ab]");
  CHECK(nf(s, "Tat").to_string() == "[t^-1][a][t]");
  CHECK(nf(s, "tT").trivial());
  CHECK(nf(s, "TbAt").to_string() == "[t^-1][bA][t]");
  CHECK(nf(s, "ttaTT").to_string() == "[abba]");
  CHECK(nf(s, "TTabbatt").to_string() == "[a]");
  CHECK(nf(s, "").to_string() == "1");
}

TEST_CASE("britton pinches and triviality") {
  auto s = thue_morse_hnn();
  auto base = s.base();
  auto full = s.full_alphabet();
  const Word t = Word::letter(full, 2);
  std::mt19937_64 rng(17);
  for (int i = 0; i < 300; ++i) {
    Word k = random_word(base, rng() % 9, rng);
    Word fk = apply(s.phi(), k);
    auto up = britton_normal_form(s, t.inverse() * fk.reinterpret(full) * t);
    auto down = britton_normal_form(s, t * k.reinterpret(full) * t.inverse());
    CHECK(up.flatten() == k.reinterpret(full));
    CHECK(up.stable_syllables() == 0);
    CHECK(down.flatten() == fk.reinterpret(full));
  }
  auto pres = s.presentation();
  for (int i = 0; i < 300; ++i) {
    // Products of conjugated relators are trivial.
    Word w(full);
    for (int f = 0; f < 1 + static_cast<int>(rng() % 4); ++f) {
      Word g = random_word(full, rng() % 6, rng);
      Word r = pres.relators()[rng() % pres.relators().size()].word();
      if (rng() % 2) r = r.inverse();
      w = w * g * r * g.inverse();
    }
    CHECK(britton_normal_form(s, w).trivial());
    CHECK(ascending_canonical(s, w.letters()) == ascending_identity(s));
  }
  for (int i = 0; i < 400; ++i) {
    auto raw = random_letters(full, rng() % 14, rng);
    auto n1 = britton_normal_form(s, raw);
    // Idempotent and value preserving.
    auto n2 = britton_normal_form(s, n1.flatten());
    CHECK(n2.to_string() == n1.to_string());
    // Two independent procedures agree on triviality.
    auto c = ascending_canonical(s, raw);
    CHECK(n1.trivial() == (c == ascending_identity(s)));
    CHECK(britton_normal_form(s, free_reduce(full, raw) * ascending_flatten(s, c).inverse()).trivial());
    // No pinch survives.
    const auto& syl = n1.syllables;
    for (std::size_t j = 0; j + 2 < syl.size(); ++j) {
      if (syl[j].kind != Syllable::Kind::stable || syl[j + 2].kind != Syllable::Kind::stable) continue;
      if (syl[j].exponent > 0 && syl[j + 2].exponent < 0) CHECK(false);
      if (syl[j].exponent < 0 && syl[j + 2].exponent > 0) CHECK(!s.preimage(0, syl[j + 1].base));
    }
  }
}

TEST_CASE("canonical form is a complete invariant") {
  auto s = thue_morse_hnn();
  auto full = s.full_alphabet();
  std::mt19937_64 rng(23);
  std::vector<std::vector<Letter>> words;
  for (int i = 0; i < 120; ++i) words.push_back(random_letters(full, rng() % 7, rng));
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i; j < words.size(); ++j) {
      Word u = free_reduce(full, words[i]), v = free_reduce(full, words[j]);
      const bool eq = britton_normal_form(s, u * v.inverse()).trivial();
      CHECK(eq == (ascending_canonical(s, words[i]) == ascending_canonical(s, words[j])));
    }
  }
}

TEST_CASE("multiple stable letters") {
  auto a = Alphabet::make({"a", "b"});
  MultiHnnSpec m({{"s", Endomorphism::parse(a, "a->ab, b->ba")}, {"t", Endomorphism::parse(a, "a->aab, b->b")}});
  CHECK(nf(m, "saS").to_string() == "[ab]");
  CHECK(nf(m, "Taabt").to_string() == "[a]");
  CHECK(nf(m, "Sabt").to_string() == "[s^-1][ab][t]");
  CHECK(nf(m, "stTS").trivial());
  auto pres = m.presentation();
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    Word w(m.full_alphabet());
    for (int f = 0; f < 3; ++f) {
      Word g = random_word(m.full_alphabet(), rng() % 5, rng);
      w = w * g * pres.relators()[rng() % 4].word() * g.inverse();
    }
    CHECK(britton_normal_form(m, w).trivial());
  }
}

TEST_CASE("free product normal form") {
  auto a = Alphabet::make({"a", "b"});
  auto full = a->extended({"t"});
  auto fp = [&](const char* s) { return freeprod_normal_form(a, "t", parse_letters(full, s)); };
  CHECK(fp("attA").to_string() == "[a][t^2][A]");
  CHECK(fp("tT").trivial());
  CHECK(fp("a*t*t").to_string() == "[a][t^2]");
  CHECK(fp("abBt").to_string() == "[a][t]");
  std::mt19937_64 rng(9);
  for (int i = 0; i < 200; ++i) {
    auto raw = random_letters(full, rng() % 12, rng);
    auto u = fp("");
    auto n = freeprod_normal_form(a, "t", raw);
    auto back = freeprod_normal_form(a, "t", (n.flatten() * n.flatten().inverse()).letters());
    CHECK(back.trivial());
    for (std::size_t j = 0; j + 1 < n.syllables.size(); ++j) CHECK(n.syllables[j].kind != n.syllables[j + 1].kind);
    CHECK(n.flatten() == free_reduce(full, raw));
  }
  CHECK_THROWS(freeprod_normal_form(a, "a", {}));
}

TEST_CASE("bass-serre projection") {
  auto a = Alphabet::make({"a", "b"});
  auto full = a->extended({"t"});
  auto fp = [&](const char* s) { return freeprod_normal_form(a, "t", parse_letters(full, s)); };
  auto p = bass_serre_projection(fp("attb"));
  REQUIRE(p.length() == 2);
  CHECK(p.vertices[1].kind == TreeVertex::Kind::stable_coset);
  CHECK(format_word(p.vertices[1].representative) == "a");
  CHECK(format_word(p.vertices[2].representative) == "att");
  CHECK(bass_serre_projection(fp("abAB")).length() == 0);
  CHECK(bass_serre_projection(fp("ttttt")).length() == 2);
  CHECK(bass_serre_projection(fp("atbtat")).length() == 6);

  // HNN projection: one edge per stable letter, no backtracking.
  auto s = thue_morse_hnn();
  std::mt19937_64 rng(31);
  for (int i = 0; i < 200; ++i) {
    auto n = britton_normal_form(s, random_letters(s.full_alphabet(), rng() % 12, rng));
    auto path = bass_serre_projection(n);
    CHECK(path.length() == n.stable_letters());
    for (std::size_t j = 0; j + 2 < path.vertices.size(); ++j) {
      Word d = path.vertices[j].representative.inverse() * path.vertices[j + 2].representative;
      CHECK(britton_normal_form(s, d).stable_syllables() > 0);
    }
  }
}

TEST_CASE("rays") {
  auto rd = [](const std::string& j) { return RayDescriptor::from_json(j); };
  auto splus = rd(R"({"prefix": "a t^3", "tail": {"kind": "stable+"}})");
  CHECK(classify_ray(splus) == RayClass::t_finite_stable);
  CHECK(omega_membership(splus));
  auto gamma = rd(R"({"prefix": "t", "tail": {"kind": "base-endo", "images": {"a": "ab", "b": "ba"}, "seed": "a"}})");
  CHECK(classify_ray(gamma) == RayClass::t_finite_base);
  CHECK(!omega_membership(gamma));
  auto alt = rd(R"({"tail": {"kind": "periodic", "pattern": "a t"}})");
  CHECK(classify_ray(alt) == RayClass::t_infinite);
  CHECK(!omega_membership(alt));
  CHECK(classify_ray(rd(R"({"tail": {"kind": "periodic", "pattern": "a t A"}})")) == RayClass::t_finite_stable);
  CHECK(classify_ray(rd(R"({"tail": {"kind": "periodic", "pattern": "T ab t"}})")) == RayClass::t_finite_base);

  CHECK(landing_verdict(alt, {}) == Landing::lands);
  CHECK(landing_verdict(alt, {true, true}) == Landing::lands);
  CHECK(landing_verdict(splus, {false, true}) == Landing::lands_by_hypothesis);
  CHECK(landing_verdict(splus, {true, false}) == Landing::unknown);
  CHECK(landing_verdict(gamma, {false, true}) == Landing::unknown);
  CHECK(landing_verdict(gamma, {true, false}) == Landing::lands_by_hypothesis);

  auto e = gamma.expand(9);
  CHECK(format_letters(*gamma.full, e) == "tabbabaab");

  for (const auto* text : {R"({"prefix": "a t^3", "tail": {"kind": "stable-"}})",
                           R"({"base": ["x", "y"], "stable": "s", "prefix": "x", "tail": {"kind": "periodic", "pattern": "x s y"}})",
                           R"({"tail": {"kind": "base-endo", "images": "a->ab, b->ba", "seed": "a"}})"}) {
    auto r = rd(text);
    auto again = RayDescriptor::from_json(r.to_json());
    CHECK(again.to_json() == r.to_json());
    CHECK(classify_ray(again) == classify_ray(r));
  }
  CHECK_THROWS_AS(rd(R"({"tail": {"kind": "base-endo", "images": {"a": "ba"}, "seed": "a"}})"), Error);
  CHECK_THROWS_AS(rd(R"({"tail": {"kind": "periodic", "pattern": "a A"}})"), Error);
  CHECK_THROWS_AS(rd(R"({"tail": {"kind": "sideways"}})"), ParseError);
  CHECK_THROWS_AS(rd("{"), ParseError);

  // Prefix extension changes neither the class nor Omega membership.
  std::mt19937_64 rng(2);
  for (auto base : {splus, gamma, alt}) {
    for (int i = 0; i < 50; ++i) {
      RayDescriptor r = base;
      r.prefix = random_word(r.full, rng() % 10, rng) * r.prefix;
      if (r.tail.kind == RayTail::Kind::periodic) r.prefix = r.prefix * r.tail.pattern.power(rng() % 4);
      CHECK(classify_ray(r) == classify_ray(base));
      CHECK(omega_membership(r) == omega_membership(base));
    }
  }
}

TEST_CASE("composition") {
  auto h = Presentation::parse("gens: a b\nrel: abABab\n");
  auto q = Alphabet::make({"x"});
  auto id = Endomorphism::identity(q);
  auto g = compose_amalgam(h, {parse_word(h.alphabet(), "ab")}, id, "t");
  REQUIRE(g.relators().size() == 2);
  CHECK(format_word(g.relators()[1].word()) == "tabTBA");
  CHECK_THROWS_AS(compose_amalgam(h, {parse_word(h.alphabet(), "a")}, id, "b"), Error);
  CHECK_THROWS_AS(compose_amalgam(h, {}, id, "t"), Error);

  auto l = Presentation::parse("gens: c d\nrel: cdCD\n");
  auto am = amalgamate(h, l, {{parse_word(h.alphabet(), "a"), parse_word(l.alphabet(), "cd")}});
  CHECK(am.alphabet()->names() == std::vector<std::string>{"a", "b", "c", "d"});
  CHECK(am.relators().size() == 3);
  CHECK_THROWS_AS(amalgamate(h, h, {}), Error);

  auto hnn = compose_hnn(h, "s", {{parse_word(h.alphabet(), "a"), parse_word(h.alphabet(), "bA")}});
  CHECK(format_word(hnn.relators()[1].word()) == "saSaB");
}
