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

#include "hypgrp/examples.hpp"

#include <algorithm>

#include "hypgrp/error.hpp"

namespace hypgrp {

namespace {

// prod_{k=1..r} x y^{offset + k}
Word block_word(const AlphabetPtr& alpha, int r, long long offset) {
  std::vector<Letter> raw;
  for (int k = 1; k <= r; ++k) {
    raw.emplace_back(0, 1);
    for (long long e = 0; e < offset + k; ++e) raw.emplace_back(1, 1);
  }
  return Word::from_reduced(alpha, std::move(raw));
}

// First k letters of phi(v) for positive phi.
Word image_prefix(const Endomorphism& phi, const Word& v, std::size_t k) {
  std::vector<Letter> out;
  for (Letter x : v.letters()) {
    for (Letter y : phi.image(x.generator()).letters()) {
      if (out.size() == k) break;
      out.push_back(y);
    }
    if (out.size() == k) break;
  }
  return Word::from_reduced(v.alphabet(), std::move(out));
}

AlphabetPtr family_alphabet() {
  static const AlphabetPtr full = Alphabet::make({"d1", "d2", "c1", "c2", "b", "a"});
  return full;
}

std::vector<Word> lifted(const std::vector<Word>& words, const AlphabetPtr& target) {
  std::vector<Word> out;
  for (const auto& w : words) out.push_back(w.translate(target));
  return out;
}

}  // namespace

BakerRileyFamily::BakerRileyFamily(int r, int l)
    : r_(r),
      l_(l),
      c_(Alphabet::make({"c1", "c2"})),
      d_(Alphabet::make({"d1", "d2"})),
      big_c_(nullptr),
      psi_(Endomorphism::identity(c_)),
      g_cd_(Alphabet::make({"x"}), {}),
      g_bcd_(Alphabet::make({"x"}), {}),
      g_(Alphabet::make({"x"}), {}) {
  if (r < 2) throw Error("baker-riley: r must be at least 2");
  if (l < 2) throw Error("baker-riley: l must be at least 2");
  big_c_ = block_word(c_, r, 0);
  for (int i = 1; i <= 2; ++i) c_words_.push_back(block_word(c_, r, static_cast<long long>(r) * i));
  for (int j = 1; j <= 2; ++j) d_words_.push_back(block_word(d_, r, static_cast<long long>(r) * j));
  for (int i = 1; i <= 2; ++i) {
    dij_.emplace_back();
    for (int j = 1; j <= 2; ++j) {
      dij_.back().push_back(block_word(d_, r, static_cast<long long>(r) * (i * l + j)));
    }
  }
  psi_ = Endomorphism(c_, c_words_);
  for (int i = 0; i < 2; ++i) sigma_.emplace_back(d_, dij_[i]);

  const auto full = family_alphabet();
  const auto cd = Alphabet::make({"d1", "d2", "c1", "c2"});
  const auto bcd = Alphabet::make({"d1", "d2", "c1", "c2", "b"});
  auto gen = [&](const AlphabetPtr& alpha, const char* name) {
    return Word::letter(alpha, *alpha->find(name));
  };

  std::vector<Word> rels;
  for (int i = 1; i <= 2; ++i) {
    for (int j = 1; j <= 2; ++j) {
      Word ci = gen(cd, i == 1 ? "c1" : "c2");
      Word dj = gen(cd, j == 1 ? "d1" : "d2");
      rels.push_back(ci * dj * ci.inverse() * D_ij(i, j).translate(cd).inverse());
    }
  }
  g_cd_ = Presentation(cd, rels, "G_cd");

  rels = lifted(rels, bcd);
  const Word b = gen(bcd, "b");
  for (int i = 1; i <= 2; ++i) {
    Word ci = gen(bcd, i == 1 ? "c1" : "c2");
    rels.push_back(b * ci * b.inverse() * C_i(i).translate(bcd).inverse());
  }
  g_bcd_ = Presentation(bcd, rels, "G_bcd");

  rels = lifted(rels, full);
  const Word a = gen(full, "a");
  const Word bf = gen(full, "b");
  rels.push_back(a * bf * a.inverse() * (bf * big_c_.translate(full).inverse()).inverse());
  for (int j = 1; j <= 2; ++j) {
    Word dj = gen(full, j == 1 ? "d1" : "d2");
    Word image = bf * D_j(j).translate(full) * bf.inverse();
    rels.push_back(a * dj * a.inverse() * image.inverse());
  }
  g_ = Presentation(full, rels, "G");
}

Word BakerRileyFamily::u_outer(unsigned n) const {
  const auto& alpha = g_bcd_.alphabet();
  const Word b = Word::letter(alpha, *alpha->find("b"));
  return b.power(n) * Word::letter(alpha, *alpha->find("c1")) * b.power(-static_cast<long long>(n));
}

Word BakerRileyFamily::w_outer(unsigned n) const {
  const auto& alpha = g_bcd_.alphabet();
  const Word u = u_outer(n);
  return u * Word::letter(alpha, *alpha->find("d1")) * u.inverse();
}

std::optional<Word> BakerRileyFamily::u_inner(unsigned n, std::size_t cap) const {
  auto res = iterate(psi_, n, Word::letter(c_, 0), cap);
  return res.word;
}

std::optional<Word> BakerRileyFamily::w_inner(unsigned n, std::size_t cap) const {
  auto u = u_inner(n, cap);
  if (!u) return std::nullopt;
  Word v = Word::letter(d_, 0);
  const auto letters = u->letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    const Endomorphism& s = sigma_[it->generator()];
    std::size_t predicted = 0;
    for (Letter x : v.letters()) predicted += s.image(x.generator()).size();
    if (predicted > cap) return std::nullopt;
    v = apply(s, v);
  }
  return v;
}

Word BakerRileyFamily::u_inner_head(unsigned n, std::size_t k) const {
  Word v = Word::letter(c_, 0);
  for (unsigned i = 0; i < n; ++i) v = image_prefix(psi_, v, k);
  return v.prefix(std::min(k, v.size()));
}

Word BakerRileyFamily::w_inner_head(unsigned n, std::size_t k) const {
  // Every sigma_i(d1) starts with d1, so the inner word starts with
  // sigma_{x1} ... sigma_{xm}(d1) for each prefix x1..xm of psi^n(c1). Grow m
  // until that word is long enough.
  const Word d1 = Word::letter(d_, 0);
  for (std::size_t m = 1;; ++m) {
    const Word head = u_inner_head(n, m);
    Word v = d1;
    const auto letters = head.letters();
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
      v = image_prefix(sigma_[it->generator()], v, k);
    }
    if (v.size() >= k || head.size() < m) return v;
  }
}

BakerRileyFamily baker_riley(int r, int l) { return BakerRileyFamily(r, l); }

AscendingHnnSpec ascending_demo() {
  const auto k = Alphabet::make({"a", "b"});
  return AscendingHnnSpec(Endomorphism::parse(k, "a->ab, b->ba"), "t");
}

Presentation genus2() {
  const auto alpha = Alphabet::make({"a", "b", "c", "d"});
  return Presentation(alpha, {parse_word(alpha, "abABcdCD")}, "genus2");
}

Presentation abab_example() {
  const auto alpha = Alphabet::make({"a", "b"});
  return Presentation(alpha, {parse_word(alpha, "abab")}, "abab");
}

ThmEndoPipeline thm_endo_pipeline(std::size_t k_rank,
                                  std::vector<std::pair<std::string, Endomorphism>> endos,
                                  const Endomorphism& phi_top, const std::string& top,
                                  std::string name) {
  if (endos.empty()) throw Error("pipeline: no endomorphisms");
  if (endos.front().second.alphabet()->size() != k_rank) {
    throw Error("pipeline: base rank " + std::to_string(endos.front().second.alphabet()->size()) +
                " does not match " + std::to_string(k_rank));
  }
  for (const auto& [stable, phi] : endos) {
    if (!phi.is_positive()) throw PreconditionError("pipeline: endomorphism for " + stable + " is not positive");
  }
  if (!phi_top.is_positive()) throw PreconditionError("pipeline: top endomorphism is not positive");
  std::vector<std::string> stables;
  for (const auto& e : endos) stables.push_back(e.first);
  if (phi_top.alphabet()->names() != stables) {
    throw Error("pipeline: top endomorphism must act on the stable letters in order");
  }
  MultiHnnSpec spec(std::move(endos));
  Presentation h = spec.presentation("H");
  std::vector<Word> q_gens;
  for (std::size_t j = 0; j < spec.stable_count(); ++j) {
    q_gens.push_back(Word::letter(h.alphabet(), spec.base()->size() + j));
  }
  Presentation g = compose_amalgam(h, q_gens, phi_top, top, name);
  std::vector<std::string> assumptions = {
      "H is hyperbolic",
      "the endomorphisms of K are hyperbolic",
      "the top endomorphism is hyperbolic",
      "Q generated by the stable letters is malnormal and quasiconvex in H",
  };
  for (const auto& a : assumptions) g.add_assumption(a);
  AlphabetPtr base = spec.base();
  return ThmEndoPipeline{std::move(spec), std::move(h), std::move(g), std::move(base), top,
                         std::move(assumptions)};
}

ThmEndoPipeline baker_riley_pipeline(const BakerRileyFamily& family) {
  return thm_endo_pipeline(2, {{"c1", family.sigma(1)}, {"c2", family.sigma(2)}}, family.psi(), "b",
                           "G_bcd");
}

const std::vector<NamedExample>& example_registry() {
  static const std::vector<NamedExample> registry = {
      {"genus2", "closed genus-2 surface group", [](int, int) { return genus2(); }, false},
      {"abab", "<a, b | abab>, not C'(1/6)", [](int, int) { return abab_example(); }, false},
      {"baker-riley-cd", "Baker-Riley G_cd", [](int r, int l) { return baker_riley(r, l).G_cd(); }, true},
      {"baker-riley-bcd", "Baker-Riley G_bcd", [](int r, int l) { return baker_riley(r, l).G_bcd(); }, true},
      {"baker-riley-g", "Baker-Riley G", [](int r, int l) { return baker_riley(r, l).G(); }, true},
      {"ascending-demo", "K*_phi with phi: a->ab, b->ba",
       [](int, int) { return ascending_demo().presentation("ascending-demo"); }, false},
  };
  return registry;
}

const NamedExample& find_example(const std::string& label) {
  for (const auto& e : example_registry()) {
    if (e.label == label) return e;
  }
  throw Error("unknown example: " + label);
}

}  // namespace hypgrp
