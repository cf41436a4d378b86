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

#include "hypgrp/stallings.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

namespace hypgrp {

namespace {

using Tag = std::vector<Letter>;

Tag reduce_tag(std::initializer_list<std::span<const Letter>> parts,
               std::initializer_list<bool> inverted) {
  std::vector<Letter> out;
  auto inv = inverted.begin();
  for (auto part : parts) {
    bool flip = *inv++;
    if (!flip) {
      for (Letter l : part) {
        if (!out.empty() && out.back().cancels(l)) out.pop_back(); else out.push_back(l);
      }
    } else {
      for (auto it = part.rbegin(); it != part.rend(); ++it) {
        Letter l = it->inverse();
        if (!out.empty() && out.back().cancels(l)) out.pop_back(); else out.push_back(l);
      }
    }
  }
  return out;
}

// Mutable folding workspace. Every edge carries a tag over the generator
// alphabet such that the product of tags along any basepoint loop evaluates
// (generator i -> generators[i]) to the loop's label.
class Folder {
 public:
  struct E {
    std::size_t from, to, label;
    Tag tag;
    bool alive = true;
  };

  std::size_t add_vertex() {
    incident_.emplace_back();
    alive_.push_back(true);
    return alive_.size() - 1;
  }

  void add_edge(std::size_t from, std::size_t to, std::size_t label, Tag tag) {
    edges_.push_back({from, to, label, std::move(tag)});
    incident_[from].push_back(edges_.size() - 1);
    if (to != from) incident_[to].push_back(edges_.size() - 1);
  }

  void fold_all(std::optional<std::uint64_t> seed) {
    std::vector<std::size_t> work(alive_.size());
    std::iota(work.begin(), work.end(), 0);
    std::mt19937_64 rng(seed.value_or(0));
    while (!work.empty()) {
      std::size_t pick = work.size() - 1;
      if (seed) pick = std::uniform_int_distribution<std::size_t>(0, work.size() - 1)(rng);
      std::size_t v = work[pick];
      work[pick] = work.back();
      work.pop_back();
      if (!alive_[v]) continue;
      if (auto touched = fold_at(v)) {
        work.push_back(touched->first);
        work.push_back(touched->second);
      }
    }
  }

  void trim() {
    std::vector<std::size_t> work;
    for (std::size_t v = 1; v < alive_.size(); ++v) work.push_back(v);
    while (!work.empty()) {
      std::size_t v = work.back();
      work.pop_back();
      if (v == 0 || !alive_[v]) continue;
      compact_incident(v);
      std::size_t degree = 0;
      for (auto e : incident_[v]) degree += (edges_[e].from == edges_[e].to) ? 2 : 1;
      if (degree >= 2) continue;
      alive_[v] = false;
      for (auto e : incident_[v]) {
        edges_[e].alive = false;
        std::size_t other = edges_[e].from == v ? edges_[e].to : edges_[e].from;
        work.push_back(other);
      }
      incident_[v].clear();
    }
  }

  const std::vector<E>& edges() const { return edges_; }
  const std::vector<bool>& alive() const { return alive_; }

 private:
  void compact_incident(std::size_t v) {
    auto& inc = incident_[v];
    inc.erase(std::remove_if(inc.begin(), inc.end(), [&](std::size_t e) { return !edges_[e].alive; }),
              inc.end());
  }

  // Performs one fold at v if any applies; returns the vertices to revisit.
  std::optional<std::pair<std::size_t, std::size_t>> fold_at(std::size_t v) {
    compact_incident(v);
    std::map<std::pair<std::size_t, int>, std::size_t> seen;
    for (auto e : incident_[v]) {
      const auto& ed = edges_[e];
      for (int dir : {1, -1}) {
        if ((dir == 1 && ed.from != v) || (dir == -1 && ed.to != v)) continue;
        auto [it, inserted] = seen.emplace(std::make_pair(ed.label, dir), e);
        if (!inserted && it->second != e) {
          return fold(it->second, e, dir);
        }
      }
    }
    return std::nullopt;
  }

  std::pair<std::size_t, std::size_t> fold(std::size_t e1, std::size_t e2, int dir) {
    // dir = 1: both leave a common vertex; merge their targets.
    // dir = -1: both enter a common vertex; merge their sources.
    auto far = [&](std::size_t e) { return dir == 1 ? edges_[e].to : edges_[e].from; };
    auto near = dir == 1 ? edges_[e1].from : edges_[e1].to;
    if (far(e1) == far(e2)) {
      edges_[e2].alive = false;
      return {near, far(e1)};
    }
    if (far(e2) == 0) std::swap(e1, e2);
    const std::size_t keep = far(e1);
    const std::size_t drop = far(e2);
    const Tag& t1 = edges_[e1].tag;
    const Tag& t2 = edges_[e2].tag;
    Tag p = dir == 1 ? reduce_tag({t1, t2}, {true, false}) : reduce_tag({t1, t2}, {false, true});
    edges_[e2].alive = false;
    for (auto e : incident_[drop]) {
      auto& ed = edges_[e];
      if (!ed.alive) continue;
      if (ed.from == drop) {
        ed.tag = reduce_tag({p, ed.tag}, {false, false});
        ed.from = keep;
      }
      if (ed.to == drop) {
        ed.tag = reduce_tag({ed.tag, p}, {false, true});
        ed.to = keep;
      }
      if (ed.from == keep && ed.to == keep) {
        // Becomes (or stays) a loop at keep; avoid listing it twice.
        if (std::find(incident_[keep].begin(), incident_[keep].end(), e) == incident_[keep].end()) {
          incident_[keep].push_back(e);
        }
      } else {
        incident_[keep].push_back(e);
      }
    }
    incident_[drop].clear();
    alive_[drop] = false;
    compact_incident(keep);
    return {near == drop ? keep : near, keep};
  }

  std::vector<E> edges_;
  std::vector<std::vector<std::size_t>> incident_;
  std::vector<bool> alive_;
};

}  // namespace

SubgroupGraph SubgroupGraph::trivial(const AlphabetPtr& alphabet) {
  SubgroupGraph g(alphabet);
  g.generator_alphabet_ = Alphabet::indexed("g", 1);
  g.finalize(1, {}, true);
  return g;
}

SubgroupGraph SubgroupGraph::build(const AlphabetPtr& alphabet, std::span<const Word> generators,
                                   const BuildOptions& options) {
  for (const auto& w : generators) require_same_alphabet(alphabet, w.alphabet());
  SubgroupGraph g(alphabet);
  g.generators_.assign(generators.begin(), generators.end());
  g.generator_alphabet_ = Alphabet::indexed("g", std::max<std::size_t>(1, generators.size()));

  Folder f;
  f.add_vertex();
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const auto ls = generators[i].letters();
    if (ls.empty()) continue;
    std::size_t cur = 0;
    for (std::size_t k = 0; k < ls.size(); ++k) {
      std::size_t next = (k + 1 == ls.size()) ? 0 : f.add_vertex();
      Tag tag;
      if (k == 0) tag.push_back(Letter(i, ls[k].sign()));
      if (ls[k].positive()) {
        f.add_edge(cur, next, ls[k].generator(), std::move(tag));
      } else {
        f.add_edge(next, cur, ls[k].generator(), std::move(tag));
      }
      cur = next;
    }
  }
  f.fold_all(options.fold_order_seed);
  f.trim();

  std::vector<std::size_t> renumber(f.alive().size(), SIZE_MAX);
  std::size_t n = 0;
  for (std::size_t v = 0; v < f.alive().size(); ++v) {
    if (f.alive()[v]) renumber[v] = n++;
  }
  std::vector<RawEdge> raw;
  for (const auto& e : f.edges()) {
    if (!e.alive) continue;
    raw.push_back({renumber[e.from], renumber[e.to], e.label, e.tag});
  }
  g.finalize(n, std::move(raw), true);
  return g;
}

SubgroupGraph SubgroupGraph::from_folded(const AlphabetPtr& alphabet, std::size_t vertex_count,
                                         std::vector<Edge> edges) {
  // Trim hanging trees away from the basepoint, then renumber.
  Folder f;
  for (std::size_t v = 0; v < vertex_count; ++v) f.add_vertex();
  for (const auto& e : edges) f.add_edge(e.from, e.to, e.label, {});
  f.trim();
  std::vector<std::size_t> renumber(vertex_count, SIZE_MAX);
  std::size_t n = 0;
  for (std::size_t v = 0; v < vertex_count; ++v) {
    if (f.alive()[v]) renumber[v] = n++;
  }
  std::vector<RawEdge> raw;
  for (const auto& e : f.edges()) {
    if (e.alive) raw.push_back({renumber[e.from], renumber[e.to], e.label, {}});
  }
  SubgroupGraph g(alphabet);
  g.finalize(n, std::move(raw), false);
  return g;
}

void SubgroupGraph::finalize(std::size_t vertex_count, std::vector<RawEdge> raw, bool have_tags) {
  const std::size_t k = alphabet_->size();
  vertex_count_ = vertex_count;
  edges_.clear();
  tags_.clear();
  for (auto& e : raw) {
    edges_.push_back({e.from, e.to, e.label});
    tags_.push_back(std::move(e.tag));
  }
  out_.assign(vertex_count * k, -1);
  in_.assign(vertex_count * k, -1);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    out_[edges_[i].from * k + edges_[i].label] = static_cast<std::ptrdiff_t>(i);
    in_[edges_[i].to * k + edges_[i].label] = static_cast<std::ptrdiff_t>(i);
  }

  // BFS spanning tree; neighbours visited in letter rank order.
  std::vector<bool> seen(vertex_count, false);
  std::vector<bool> tree_edge(edges_.size(), false);
  std::vector<std::vector<Letter>> path(vertex_count);
  std::vector<Tag> path_tag(vertex_count);
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t gen = 0; gen < k; ++gen) {
      for (int sign : {1, -1}) {
        auto e = (sign == 1 ? out_ : in_)[v * k + gen];
        if (e < 0) continue;
        const auto& ed = edges_[static_cast<std::size_t>(e)];
        std::size_t w = sign == 1 ? ed.to : ed.from;
        if (seen[w]) continue;
        seen[w] = true;
        tree_edge[static_cast<std::size_t>(e)] = true;
        path[w] = path[v];
        path[w].push_back(Letter(gen, sign));
        path_tag[w] = reduce_tag({path_tag[v], tags_[static_cast<std::size_t>(e)]}, {false, sign == -1});
        queue.push_back(w);
      }
    }
  }
  tree_path_.clear();
  for (auto& p : path) tree_path_.push_back(Word::from_reduced(alphabet_, std::move(p)));

  // Basis order: first traversal by the generators, then edge order.
  basis_index_.assign(edges_.size(), -1);
  std::vector<std::size_t> order;
  auto claim = [&](std::size_t e) {
    if (!tree_edge[e] && basis_index_[e] < 0) {
      basis_index_[e] = static_cast<std::ptrdiff_t>(order.size());
      order.push_back(e);
    }
  };
  for (const auto& gen : generators_) {
    std::size_t v = 0;
    for (Letter l : gen.letters()) {
      auto e = (l.positive() ? out_ : in_)[v * k + l.generator()];
      if (e < 0) break;
      claim(static_cast<std::size_t>(e));
      v = l.positive() ? edges_[static_cast<std::size_t>(e)].to : edges_[static_cast<std::size_t>(e)].from;
    }
  }
  for (std::size_t e = 0; e < edges_.size(); ++e) claim(e);

  basis_alphabet_ = Alphabet::indexed("x", std::max<std::size_t>(1, order.size()));
  basis_.clear();
  std::vector<Word> in_gens;
  for (std::size_t e : order) {
    const auto& ed = edges_[e];
    ReducingBuffer b(alphabet_);
    b.append(tree_path_[ed.from]);
    b.push(Letter(ed.label, 1));
    b.append_inverse(tree_path_[ed.to].letters());
    basis_.push_back(b.take());
  }
  if (!have_tags) {
    // Generators are the basis itself; tag each non-tree edge by its letter.
    generators_ = basis_;
    generator_alphabet_ = basis_alphabet_;
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      tags_[e].clear();
      if (basis_index_[e] >= 0) tags_[e].push_back(Letter(static_cast<std::size_t>(basis_index_[e]), 1));
    }
    for (auto& p : path_tag) p.clear();
  }
  basis_in_generators_.clear();
  for (std::size_t e : order) {
    const auto& ed = edges_[e];
    Tag t = reduce_tag({path_tag[ed.from], tags_[e], path_tag[ed.to]}, {false, false, true});
    basis_in_generators_.push_back(Word::from_reduced(generator_alphabet_, std::move(t)));
  }
}

std::optional<std::size_t> SubgroupGraph::follow(std::size_t v, Letter l) const {
  const std::size_t k = alphabet_->size();
  auto e = (l.positive() ? out_ : in_)[v * k + l.generator()];
  if (e < 0) return std::nullopt;
  const auto& ed = edges_[static_cast<std::size_t>(e)];
  return l.positive() ? ed.to : ed.from;
}

std::optional<std::size_t> SubgroupGraph::endpoint(const Word& w) const {
  require_same_alphabet(alphabet_, w.alphabet());
  std::size_t v = 0;
  for (Letter l : w.letters()) {
    auto next = follow(v, l);
    if (!next) return std::nullopt;
    v = *next;
  }
  return v;
}

Word SubgroupGraph::evaluate_basis_word(const Word& expression) const {
  ReducingBuffer b(alphabet_);
  for (Letter l : expression.letters()) {
    const auto& x = basis_.at(l.generator());
    if (l.positive()) b.append(x); else b.append_inverse(x.letters());
  }
  return b.take();
}

Word SubgroupGraph::evaluate_generator_word(const Word& expression) const {
  ReducingBuffer b(alphabet_);
  for (Letter l : expression.letters()) {
    const auto& x = generators_.at(l.generator());
    if (l.positive()) b.append(x); else b.append_inverse(x.letters());
  }
  return b.take();
}

std::string SubgroupGraph::canonical_form() const {
  const std::size_t k = alphabet_->size();
  std::vector<std::ptrdiff_t> id(vertex_count_, -1);
  std::deque<std::size_t> queue{0};
  id[0] = 0;
  std::ptrdiff_t next = 1;
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t gen = 0; gen < k; ++gen) {
      for (int sign : {1, -1}) {
        auto w = follow(v, Letter(gen, sign));
        if (w && id[*w] < 0) {
          id[*w] = next++;
          queue.push_back(*w);
        }
      }
    }
  }
  std::vector<std::tuple<std::ptrdiff_t, std::size_t, std::ptrdiff_t>> es;
  for (const auto& e : edges_) es.emplace_back(id[e.from], e.label, id[e.to]);
  std::sort(es.begin(), es.end());
  std::ostringstream out;
  out << vertex_count_ << ':';
  for (auto [a, l, b] : es) out << a << ',' << l << ',' << b << ';';
  return out.str();
}

MembershipWitness contains(const SubgroupGraph& g, const Word& w) {
  require_same_alphabet(g.alphabet(), w.alphabet());
  const std::size_t k = g.alphabet()->size();
  ReducingBuffer expr(g.basis_alphabet_);
  ReducingBuffer gen_expr(g.generator_alphabet_);
  std::size_t v = 0;
  for (Letter l : w.letters()) {
    auto e = (l.positive() ? g.out_ : g.in_)[v * k + l.generator()];
    if (e < 0) return {};
    auto ei = static_cast<std::size_t>(e);
    const auto& ed = g.edges_[ei];
    if (g.basis_index_[ei] >= 0) expr.push(Letter(static_cast<std::size_t>(g.basis_index_[ei]), l.sign()));
    if (l.positive()) gen_expr.append(g.tags_[ei]); else gen_expr.append_inverse(g.tags_[ei]);
    v = l.positive() ? ed.to : ed.from;
  }
  if (v != 0) return {};
  return {true, expr.take(), gen_expr.take()};
}

std::optional<Word> express_in_generators(const SubgroupGraph& g, const Word& w) {
  auto m = contains(g, w);
  if (!m.in_subgroup) return std::nullopt;
  return m.generator_expression;
}

namespace {

struct Product {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> id;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<SubgroupGraph::Edge> edges;
};

// Component of the fiber product containing `start`.
Product product_component(const SubgroupGraph& g1, const SubgroupGraph& g2,
                          std::pair<std::size_t, std::size_t> start) {
  Product p;
  const std::size_t k = g1.alphabet()->size();
  p.id[start] = 0;
  p.pairs.push_back(start);
  for (std::size_t i = 0; i < p.pairs.size(); ++i) {
    auto [u, v] = p.pairs[i];
    for (std::size_t gen = 0; gen < k; ++gen) {
      for (int sign : {1, -1}) {
        auto u2 = g1.follow(u, Letter(gen, sign));
        auto v2 = g2.follow(v, Letter(gen, sign));
        if (!u2 || !v2) continue;
        auto key = std::make_pair(*u2, *v2);
        auto [it, inserted] = p.id.emplace(key, p.pairs.size());
        if (inserted) p.pairs.push_back(key);
        if (sign == 1) p.edges.push_back({i, it->second, gen});
      }
    }
  }
  return p;
}

}  // namespace

SubgroupGraph intersect(const SubgroupGraph& g1, const SubgroupGraph& g2) {
  require_same_alphabet(g1.alphabet(), g2.alphabet());
  auto p = product_component(g1, g2, {0, 0});
  return SubgroupGraph::from_folded(g1.alphabet(), p.pairs.size(), std::move(p.edges));
}

MalnormalityResult is_malnormal(const SubgroupGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> visited(n * n, false);
  for (std::size_t v = 0; v < n; ++v) visited[v * n + v] = true;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (visited[a * n + b]) continue;
      auto comp = product_component(g, g, {a, b});
      for (auto [u, v] : comp.pairs) visited[u * n + v] = true;
      if (comp.edges.size() < comp.pairs.size()) continue;  // a tree
      // Find a cycle: BFS tree from the root, first non-tree edge closes it.
      const std::size_t m = comp.pairs.size();
      std::vector<std::ptrdiff_t> parent_edge(m, -1);
      std::vector<bool> seen(m, false);
      std::vector<std::vector<std::size_t>> inc(m);
      for (std::size_t e = 0; e < comp.edges.size(); ++e) {
        inc[comp.edges[e].from].push_back(e);
        inc[comp.edges[e].to].push_back(e);
      }
      std::vector<std::vector<Letter>> path(m);
      std::deque<std::size_t> queue{0};
      seen[0] = true;
      std::vector<bool> used(comp.edges.size(), false);
      while (!queue.empty()) {
        auto x = queue.front();
        queue.pop_front();
        for (auto e : inc[x]) {
          if (used[e]) continue;
          const auto& ed = comp.edges[e];
          std::size_t y = ed.from == x ? ed.to : ed.from;
          int sign = ed.from == x ? 1 : -1;
          if (ed.from == ed.to) y = x;
          if (seen[y]) continue;
          used[e] = true;
          seen[y] = true;
          parent_edge[y] = static_cast<std::ptrdiff_t>(e);
          path[y] = path[x];
          path[y].push_back(Letter(ed.label, sign));
          queue.push_back(y);
        }
      }
      for (std::size_t e = 0; e < comp.edges.size(); ++e) {
        if (used[e]) continue;
        const auto& ed = comp.edges[e];
        ReducingBuffer loop(g.alphabet());
        loop.append(path[ed.from]);
        loop.push(Letter(ed.label, 1));
        loop.append_inverse(path[ed.to]);
        Word u_loop = loop.take();
        if (u_loop.empty()) continue;
        auto [p, q] = comp.pairs[0];
        const Word& alpha = g.tree_path(p);
        const Word& beta = g.tree_path(q);
        MalnormalityResult r;
        r.malnormal = false;
        r.conjugator = beta * alpha.inverse();
        r.witness = beta * u_loop * beta.inverse();
        return r;
      }
    }
  }
  return {};
}

}  // namespace hypgrp
