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

#ifndef HYPGRP_CAYLEY_HPP
#define HYPGRP_CAYLEY_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hypgrp/bigint.hpp"
#include "hypgrp/gog.hpp"
#include "hypgrp/smallcancellation.hpp"
#include "hypgrp/word.hpp"

namespace hypgrp {

class WordProblemOracle {
 public:
  virtual ~WordProblemOracle() = default;
  virtual std::string kind() const = 0;
  virtual const AlphabetPtr& alphabet() const = 0;
  virtual bool is_trivial(const Word& w) const = 0;
  bool equal(const Word& u, const Word& v) const { return is_trivial(u * v.inverse()); }
  // key(u) == key(v) implies u = v. When canonical() the converse holds too.
  virtual std::string key(const Word& w) const = 0;
  virtual bool canonical() const { return false; }
  // Generators whose exponent sum is a homomorphism to Z (zero in every
  // relator). Used to bucket elements before pairwise comparison.
  virtual std::vector<std::size_t> invariant_generators() const { return {}; }
};

using OraclePtr = std::shared_ptr<const WordProblemOracle>;

OraclePtr make_free_oracle(const AlphabetPtr& alphabet);
// Throws PreconditionError unless the presentation is C'(1/6).
OraclePtr make_dehn_oracle(const Presentation& p);
OraclePtr make_britton_oracle(const AscendingHnnSpec& spec);
OraclePtr make_freeprod_oracle(const AlphabetPtr& base, const std::string& stable);

inline constexpr std::size_t kDefaultBallCap = 2'000'000;
// kDefaultBallCap unless HYPGRP_CAP is set.
std::size_t default_ball_cap();

struct BallOptions {
  std::size_t cap = default_ball_cap();
  unsigned threads = 1;
};

class Ball {
 public:
  const WordProblemOracle& oracle() const { return *oracle_; }
  const OraclePtr& oracle_ptr() const { return oracle_; }
  // Symmetric closure of the requested generators, trivial ones dropped.
  const std::vector<Word>& generators() const { return gens_; }
  std::size_t requested_radius() const { return requested_; }
  // Largest radius for which every layer is complete.
  std::size_t radius() const { return layers_.size() - 2; }
  bool truncated() const { return radius() < requested_; }
  std::size_t size() const { return elements_.size(); }
  std::size_t layer_size(std::size_t d) const { return layers_.at(d + 1) - layers_.at(d); }

  // Geodesic spelling (product of generators, reduced over the oracle's
  // alphabet) of element i.
  const Word& element(std::size_t i) const { return elements_.at(i).word; }
  std::size_t distance_of(std::size_t i) const { return elements_.at(i).distance; }
  std::optional<std::size_t> parent(std::size_t i) const;
  // Generator indices along the stored geodesic from 1.
  std::vector<std::size_t> spelling(std::size_t i) const;

  std::optional<std::size_t> find(const Word& w) const;

 private:
  friend Ball build_ball(OraclePtr, std::vector<Word>, std::size_t, BallOptions);
  struct Element {
    Word word;
    std::size_t distance;
    std::size_t parent;  // self for the identity
    std::size_t via;     // generator index
  };
  std::vector<std::int64_t> bucket_of(const Word& w) const;
  std::optional<std::size_t> match(const Word& w, const std::string& key, std::size_t lo,
                                   std::size_t hi) const;
  void insert(Element e, std::string key);

  OraclePtr oracle_;
  std::vector<Word> gens_;
  std::size_t requested_ = 0;
  std::vector<Element> elements_;
  std::vector<std::size_t> layers_;  // layer d occupies [layers_[d], layers_[d+1])
  std::unordered_map<std::string, std::size_t> by_key_;
  std::vector<std::size_t> invariants_;
  std::unordered_map<std::string, std::vector<std::size_t>> by_bucket_;
};

// BFS to radius R with deduplication through the oracle. Stops early, with
// an honest radius, when the next layer would exceed the cap.
Ball build_ball(OraclePtr oracle, std::vector<Word> gens, std::size_t radius, BallOptions options = {});
// Standard generators of the oracle's alphabet.
Ball build_ball(OraclePtr oracle, std::size_t radius, BallOptions options = {});

struct Distance {
  std::optional<std::size_t> exact;
  // When exact is empty: d(1, w) > lower_bound - 1, i.e. d >= lower_bound.
  std::size_t lower_bound = 0;
};

Distance distance(const Ball& ball, const Word& w);

struct GromovProduct {
  std::optional<long long> twice;  // 2 <x, y>_1
  double value() const { return twice ? static_cast<double>(*twice) / 2.0 : -1.0; }
  bool known() const { return twice.has_value(); }
};

// Uses d(x, y) = d(1, x^-1 y); unknown when any distance is out of reach.
GromovProduct gromov_product(const Ball& ball, const Word& x, const Word& y);

// Word certified geodesic (or at least Dehn-reduced) by a stated method.
class CertifiedWord {
 public:
  enum class Method { free_reduction, dehn_reduced };
  static CertifiedWord free_reduced(const Word& w);
  // Throws PreconditionError when w is not Dehn-reduced, or when a spot-check
  // ball disagrees with |prefix| for some prefix within its radius.
  static CertifiedWord dehn_reduced(const DehnSolver& solver, const Word& w, const Ball* spot_check = nullptr);

  const Word& word() const { return word_; }
  Method method() const { return method_; }

 private:
  CertifiedWord(Word w, Method m) : word_(std::move(w)), method_(m) {}
  Word word_;
  Method method_;
};

// Common prefix length of two certified geodesic spellings; bounds the
// Gromov product from below up to delta.
std::size_t prefix_gromov_lower_bound(const CertifiedWord& u, const CertifiedWord& v);

struct MitraRow {
  std::size_t n = 0;
  std::optional<double> m_hat;  // min outer Gromov product over pairs beyond n
  std::size_t pairs = 0;
  std::size_t unreachable = 0;  // pairs skipped for lack of reach
};

struct MitraTable {
  std::vector<MitraRow> rows;
};

// points[i]: outer spelling of the ray point at inner distance
// inner_distance[i]. Row n: pairs i < j with both inner distances >= n.
MitraTable mitra_table(const Ball& outer, const std::vector<Word>& points,
                       const std::vector<std::size_t>& inner_distance);

struct FamilyMember {
  std::size_t index = 0;
  Word outer{nullptr};
  BigLength inner_length;
  Word inner_head{nullptr};  // leading letters of the inner reduced word
};

struct JkloRow {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t prefix_bound = 0;
};

struct JkloReport {
  std::vector<JkloRow> rows;
  bool a_diverges = false;
  bool b_quasigeodesic = false;
  std::string b_certificate;
  bool distinct_limits = false;
  bool unbounded = false;
  bool evidence = false;
  // Finite evidence only; no theorem is claimed.
  static constexpr bool finite_evidence_only = true;
};

// seq_a: family diverging in the inner group; seq_b: powers of one outer
// generator. Throws PreconditionError for uncertified or degenerate families.
JkloReport jklo_probe(const DehnSolver& outer, const std::vector<FamilyMember>& seq_a,
                      const std::vector<FamilyMember>& seq_b, const Ball* spot_check = nullptr);

struct DeltaEstimate {
  // Largest sampled insize, a lower bound for the thin-triangles constant.
  double lower_bound = 0.0;
  std::size_t triangles = 0;
};

DeltaEstimate estimate_delta(const Ball& ball, std::size_t samples = 4000, std::uint64_t seed = 1);

}  // namespace hypgrp

#endif  // HYPGRP_CAYLEY_HPP
