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

#ifndef HYPGRP_STALLINGS_HPP
#define HYPGRP_STALLINGS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hypgrp/word.hpp"

namespace hypgrp {

// Result of a membership query. `expression` is over basis_alphabet() of the
// graph (x1..xr, the spanning-tree complement basis); `generator_expression`
// is over generator_alphabet() (g1..gk, the generators the graph was built
// from). Both are present iff in_subgroup.
struct MembershipWitness {
  bool in_subgroup = false;
  std::optional<Word> expression;
  std::optional<Word> generator_expression;
};

struct BuildOptions {
  // When set, pending folds are processed in a shuffled order. The folded
  // graph does not depend on it; tests use this to check confluence.
  std::optional<std::uint64_t> fold_order_seed;
};

// Folded, core Stallings graph of a finitely generated subgroup of the free
// group on alphabet(). Vertex 0 is the basepoint.
class SubgroupGraph {
 public:
  struct Edge {
    std::size_t from;
    std::size_t to;
    std::size_t label;  // generator index
  };

  static SubgroupGraph build(const AlphabetPtr& alphabet, std::span<const Word> generators,
                             const BuildOptions& options = {});
  static SubgroupGraph trivial(const AlphabetPtr& alphabet);

  const AlphabetPtr& alphabet() const { return alphabet_; }
  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t rank() const { return edges_.size() + 1 - vertex_count_; }
  bool is_trivial() const { return edges_.empty(); }
  static constexpr std::size_t basepoint() { return 0; }
  const std::vector<Edge>& edges() const { return edges_; }

  // Target of reading letter l from vertex v, if that edge exists.
  std::optional<std::size_t> follow(std::size_t v, Letter l) const;
  // Vertex reached by reading w from the basepoint.
  std::optional<std::size_t> endpoint(const Word& w) const;
  // Label of the spanning-tree path from the basepoint to v.
  const Word& tree_path(std::size_t v) const { return tree_path_.at(v); }

  // Free basis read off the spanning-tree complement, in the order the
  // generators first traverse the corresponding edges.
  const std::vector<Word>& basis() const { return basis_; }
  const AlphabetPtr& basis_alphabet() const { return basis_alphabet_; }
  const std::vector<Word>& generators() const { return generators_; }
  const AlphabetPtr& generator_alphabet() const { return generator_alphabet_; }
  // Each basis element written in the original generators.
  const std::vector<Word>& basis_in_generators() const { return basis_in_generators_; }

  Word evaluate_basis_word(const Word& expression) const;
  Word evaluate_generator_word(const Word& expression) const;

  // Labeled-graph canonical form (BFS numbering from the basepoint); equal
  // strings iff the graphs are isomorphic as based labeled graphs.
  std::string canonical_form() const;

 private:
  struct RawEdge {
    std::size_t from;
    std::size_t to;
    std::size_t label;
    std::vector<Letter> tag;  // over generator_alphabet_
  };

  explicit SubgroupGraph(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {}
  // Builds tables, spanning tree and basis from a folded core edge list.
  void finalize(std::size_t vertex_count, std::vector<RawEdge> edges, bool have_tags);
  static SubgroupGraph from_folded(const AlphabetPtr& alphabet, std::size_t vertex_count,
                                   std::vector<Edge> edges);

  friend MembershipWitness contains(const SubgroupGraph& g, const Word& w);
  friend SubgroupGraph intersect(const SubgroupGraph& g1, const SubgroupGraph& g2);

  AlphabetPtr alphabet_;
  std::size_t vertex_count_ = 1;
  std::vector<Edge> edges_;
  std::vector<std::vector<Letter>> tags_;
  std::vector<std::ptrdiff_t> out_;  // vertex * |alphabet| + label -> edge id or -1
  std::vector<std::ptrdiff_t> in_;
  std::vector<Word> tree_path_;
  std::vector<std::ptrdiff_t> basis_index_;  // per edge, -1 on tree edges
  std::vector<Word> basis_;
  AlphabetPtr basis_alphabet_;
  std::vector<Word> generators_;
  AlphabetPtr generator_alphabet_;
  std::vector<Word> basis_in_generators_;
};

MembershipWitness contains(const SubgroupGraph& g, const Word& w);

// Core of the fiber-product component at (base, base).
SubgroupGraph intersect(const SubgroupGraph& g1, const SubgroupGraph& g2);

struct MalnormalityResult {
  bool malnormal = true;
  // On failure: h not in H and a nontrivial u in H with h^-1 u h in H, so
  // u lies in H ∩ hHh^-1.
  std::optional<Word> conjugator;
  std::optional<Word> witness;
};

MalnormalityResult is_malnormal(const SubgroupGraph& g);

// For the graph of <y1..yk>, returns a word v over generator_alphabet() with
// v(y1..yk) = w, or nullopt if w is not in the subgroup.
std::optional<Word> express_in_generators(const SubgroupGraph& g, const Word& w);

}  // namespace hypgrp

#endif  // HYPGRP_STALLINGS_HPP
