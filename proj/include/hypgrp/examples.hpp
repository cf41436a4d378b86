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

#ifndef HYPGRP_EXAMPLES_HPP
#define HYPGRP_EXAMPLES_HPP

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hypgrp/gog.hpp"
#include "hypgrp/smallcancellation.hpp"
#include "hypgrp/substitution.hpp"
#include "hypgrp/word.hpp"

namespace hypgrp {

inline constexpr int kDefaultR = 17;
inline constexpr int kDefaultL = 2;

// Words on c1, c2 and d1, d2, indices i, j in {1, 2}:
//   C      = prod_{k=1..r} c1 c2^k
//   C_i    = prod_{k=1..r} c1 c2^{r i + k}
//   D_j    = prod_{k=1..r} d1 d2^{r j + k}
//   D_ij   = prod_{k=1..r} d1 d2^{r (i l + j) + k}
// G_cd  = < d, c | c_i d_j c_i^-1 = D_ij >
// G_bcd = G_cd + < b | b c_i b^-1 = C_i >
// G     = G_bcd + < a | a b a^-1 = b C^-1, a d_j a^-1 = b D_j b^-1 >
class BakerRileyFamily {
 public:
  BakerRileyFamily(int r, int l);

  int r() const { return r_; }
  int l() const { return l_; }

  const AlphabetPtr& c_alphabet() const { return c_; }
  const AlphabetPtr& d_alphabet() const { return d_; }

  Word C() const { return big_c_; }
  Word C_i(int i) const { return c_words_.at(i - 1); }
  Word D_j(int j) const { return d_words_.at(j - 1); }
  Word D_ij(int i, int j) const { return dij_.at(i - 1).at(j - 1); }

  const Presentation& G_cd() const { return g_cd_; }
  const Presentation& G_bcd() const { return g_bcd_; }
  const Presentation& G() const { return g_; }

  // c_i -> C_i on F(c1, c2).
  const Endomorphism& psi() const { return psi_; }
  // d_j -> D_ij on F(d1, d2).
  const Endomorphism& sigma(int i) const { return sigma_.at(i - 1); }

  // b^n c1 b^-n over G_bcd's generators.
  Word u_outer(unsigned n) const;
  // u_n d1 u_n^-1 over G_bcd's generators; length 4n + 3.
  Word w_outer(unsigned n) const;
  // psi^n(c1) in F(c1, c2), when it fits the cap.
  std::optional<Word> u_inner(unsigned n, std::size_t cap = kDefaultSizeCap) const;
  // sigma along the letters of psi^n(c1) applied to d1, when every
  // intermediate word fits the cap.
  std::optional<Word> w_inner(unsigned n, std::size_t cap = kDefaultSizeCap) const;
  // First k letters of the inner word of u_n / w_n (no expansion needed).
  Word u_inner_head(unsigned n, std::size_t k) const;
  Word w_inner_head(unsigned n, std::size_t k) const;

  // A c- or d-word re-homed on G_bcd's generators.
  Word lift(const Word& w) const { return w.translate(g_bcd_.alphabet()); }

 private:
  int r_;
  int l_;
  AlphabetPtr c_;
  AlphabetPtr d_;
  Word big_c_;
  std::vector<Word> c_words_;
  std::vector<Word> d_words_;
  std::vector<std::vector<Word>> dij_;
  Endomorphism psi_;
  std::vector<Endomorphism> sigma_;
  Presentation g_cd_;
  Presentation g_bcd_;
  Presentation g_;
};

BakerRileyFamily baker_riley(int r = kDefaultR, int l = kDefaultL);

// K = F(a, b), a -> ab, b -> ba, stable letter t.
AscendingHnnSpec ascending_demo();
// < a, b, c, d | [a, b][c, d] >
Presentation genus2();
// < a, b | abab >
Presentation abab_example();

struct ThmEndoPipeline {
  MultiHnnSpec h_spec;
  Presentation h;
  Presentation g;
  // G_1 = K * <top>: base generators and the top stable letter.
  AlphabetPtr g1_base;
  std::string g1_stable;
  std::vector<std::string> assumptions;
};

// H = multiple ascending HNN extension of K by the given endomorphisms,
// G = H extended by a new letter `top` acting on the stable letters of H
// through phi_top (whose alphabet names must be those stable letters).
// Endomorphisms must be positive and injective; phi_top positive.
ThmEndoPipeline thm_endo_pipeline(std::size_t k_rank,
                                  std::vector<std::pair<std::string, Endomorphism>> endos,
                                  const Endomorphism& phi_top, const std::string& top,
                                  std::string name = {});

// G_bcd rebuilt from the pieces of the family.
ThmEndoPipeline baker_riley_pipeline(const BakerRileyFamily& family);

struct NamedExample {
  std::string label;
  std::string description;
  // Builds the presentation for the given (r, l); parameters are ignored by
  // examples that have none.
  std::function<Presentation(int r, int l)> build;
  bool parametrized = false;
};

const std::vector<NamedExample>& example_registry();
const NamedExample& find_example(const std::string& label);

}  // namespace hypgrp

#endif  // HYPGRP_EXAMPLES_HPP
