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

#ifndef HYPGRP_GOG_HPP
#define HYPGRP_GOG_HPP

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hypgrp/smallcancellation.hpp"
#include "hypgrp/stallings.hpp"
#include "hypgrp/substitution.hpp"
#include "hypgrp/word.hpp"

namespace hypgrp {

// Free base K with one or more stable letters t_j acting by injective
// endomorphisms: t_j x t_j^-1 = phi_j(x).
class MultiHnnSpec {
 public:
  MultiHnnSpec(std::vector<std::pair<std::string, Endomorphism>> endos);

  const AlphabetPtr& base() const { return base_; }
  // Base generators followed by the stable letters.
  const AlphabetPtr& full_alphabet() const { return full_; }
  std::size_t stable_count() const { return stables_.size(); }
  const std::string& stable_name(std::size_t j) const { return stables_.at(j).name; }
  const Endomorphism& endo(std::size_t j) const { return stables_.at(j).endo; }
  // Stallings graph of phi_j(K); its generators are the images in order.
  const SubgroupGraph& image_graph(std::size_t j) const { return stables_.at(j).image; }
  std::optional<std::size_t> stable_index(Letter l) const;
  // Preimage under phi_j when k lies in phi_j(K).
  std::optional<Word> preimage(std::size_t j, const Word& k) const;
  // Relators t_j x t_j^-1 phi_j(x)^-1.
  Presentation presentation(std::string name = {}) const;

 private:
  struct Stable {
    std::string name;
    Endomorphism endo;
    SubgroupGraph image;
  };
  AlphabetPtr base_;
  AlphabetPtr full_;
  std::vector<Stable> stables_;
};

// Single stable letter; K*_phi.
class AscendingHnnSpec : public MultiHnnSpec {
 public:
  explicit AscendingHnnSpec(Endomorphism phi, std::string stable = "t");
  const std::string& stable() const { return stable_name(0); }
  const Endomorphism& phi() const { return endo(0); }
};

struct Syllable {
  enum class Kind { base, stable };
  Kind kind = Kind::base;
  Word base{nullptr};
  std::size_t stable = 0;  // index among the stable letters
  long long exponent = 0;
};

struct NormalForm {
  enum class Shape { hnn, free_product };
  Shape shape = Shape::hnn;
  AlphabetPtr base;
  AlphabetPtr full;
  std::vector<Syllable> syllables;

  bool trivial() const { return syllables.empty(); }
  std::size_t stable_syllables() const;
  // Total |exponent| over stable syllables.
  std::size_t stable_letters() const;
  Word flatten() const;
  // e.g. "[ab][t^2][A]"; "1" for the identity.
  std::string to_string() const;
};

// Britton-reduced form. Pinches t k t^-1 always rewrite to phi(k); pinches
// t^-1 k t rewrite only when the Stallings graph of phi(K) accepts k.
NormalForm britton_normal_form(const MultiHnnSpec& spec, std::span<const Letter> raw);
inline NormalForm britton_normal_form(const MultiHnnSpec& spec, const Word& raw) {
  return britton_normal_form(spec, raw.letters());
}

// Element of an ascending HNN extension written t^-p k t^q with p minimal.
// Unique, so usable as a dictionary key.
struct AscendingCanonical {
  unsigned long long p = 0;
  Word k{nullptr};
  unsigned long long q = 0;

  friend bool operator==(const AscendingCanonical&, const AscendingCanonical&) = default;
};

AscendingCanonical ascending_identity(const AscendingHnnSpec& spec);
AscendingCanonical ascending_multiply(const AscendingHnnSpec& spec, const AscendingCanonical& g,
                                      Letter l);
AscendingCanonical ascending_canonical(const AscendingHnnSpec& spec, std::span<const Letter> raw);
Word ascending_flatten(const AscendingHnnSpec& spec, const AscendingCanonical& g);

// K * <t> with K free on `base`. `raw` is over base.extended({stable}).
NormalForm freeprod_normal_form(const AlphabetPtr& base, const std::string& stable,
                                std::span<const Letter> raw);

struct TreeVertex {
  enum class Kind { base_coset, stable_coset };
  Kind kind = Kind::base_coset;
  Word representative{nullptr};  // g with vertex g.K or g.<t>
};

struct TreeProjection {
  std::vector<TreeVertex> vertices;
  std::size_t length() const { return vertices.empty() ? 0 : vertices.size() - 1; }
};

// Free-product forms alternate K- and <t>-cosets. HNN forms take one tree
// edge per stable letter.
TreeProjection bass_serre_projection(const NormalForm& nf);

struct RayTail {
  enum class Kind { stable_plus, stable_minus, base_endo, periodic };
  Kind kind = Kind::stable_plus;
  std::optional<Endomorphism> endo;  // base_endo
  Word seed{nullptr};                // base_endo
  Word pattern{nullptr};             // periodic, over the full alphabet
};

// Boundary point of K * <t> given by a finite prefix and a finitely
// described tail.
struct RayDescriptor {
  AlphabetPtr base;
  std::string stable = "t";
  AlphabetPtr full;
  Word prefix{nullptr};
  RayTail tail;

  // {"base": [...], "stable": "t", "prefix": "...", "tail": {...}}.
  static RayDescriptor from_json(const std::string& text);
  std::string to_json() const;
  // First n letters of the (unreduced) stream prefix . tail.
  std::vector<Letter> expand(std::size_t n) const;
};

enum class RayClass { t_finite_base, t_finite_stable, t_infinite };
std::string to_string(RayClass c);

RayClass classify_ray(const RayDescriptor& rd);

struct ComponentFlags {
  bool base_pair_has_ray_ct = false;
  bool stable_pair_has_ray_ct = false;
};

enum class Landing { lands, lands_by_hypothesis, unknown };
std::string to_string(Landing l);

Landing landing_verdict(const RayDescriptor& rd, ComponentFlags flags);

bool omega_membership(const RayDescriptor& rd);

// New stable letter t with relators t q t^-1 image^-1 for each (q, image)
// pair, all words over h's alphabet.
Presentation compose_hnn(const Presentation& h, const std::string& stable,
                         const std::vector<std::pair<Word, Word>>& relations, std::string name = {});
// Images of phi spelled through q_gens.
Presentation compose_amalgam(const Presentation& h, const std::vector<Word>& q_gens,
                             const Endomorphism& phi, const std::string& stable,
                             std::string name = {});
// H *_Q L: union of generators and relators plus u_i = v_i.
Presentation amalgamate(const Presentation& h, const Presentation& l,
                        const std::vector<std::pair<Word, Word>>& identifications,
                        std::string name = {});

}  // namespace hypgrp

#endif  // HYPGRP_GOG_HPP
