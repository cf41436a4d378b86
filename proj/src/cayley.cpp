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

#include "hypgrp/cayley.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <random>
#include <thread>

namespace hypgrp {

namespace {

std::string codes_key(std::span<const Letter> ls) {
  std::string s(ls.size() * sizeof(std::int32_t), '\0');
  for (std::size_t i = 0; i < ls.size(); ++i) {
    const std::int32_t c = ls[i].code();
    std::memcpy(s.data() + i * sizeof c, &c, sizeof c);
  }
  return s;
}

template <class F>
void parallel_for(std::size_t n, unsigned threads, F&& fn) {
  if (threads <= 1 || n < 64) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  const std::size_t chunk = (n + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::size_t lo = t * chunk, hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&fn, lo, hi] {
      for (std::size_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

class FreeOracle : public WordProblemOracle {
 public:
  FreeOracle(AlphabetPtr a, std::string kind) : alphabet_(std::move(a)), kind_(std::move(kind)) {}
  std::string kind() const override { return kind_; }
  const AlphabetPtr& alphabet() const override { return alphabet_; }
  bool is_trivial(const Word& w) const override {
    require_same_alphabet(alphabet_, w.alphabet());
    return w.empty();
  }
  std::string key(const Word& w) const override { return codes_key(w.letters()); }
  bool canonical() const override { return true; }

 private:
  AlphabetPtr alphabet_;
  std::string kind_;
};

class DehnOracle : public WordProblemOracle {
 public:
  explicit DehnOracle(const Presentation& p) : solver_(p) {
    const auto n = p.alphabet()->size();
    for (std::size_t g = 0; g < n; ++g) {
      bool zero = true;
      for (const auto& r : p.relators()) {
        long long sum = 0;
        for (Letter l : r.letters()) {
          if (l.generator() == g) sum += l.sign();
        }
        zero = zero && sum == 0;
      }
      if (zero) invariants_.push_back(g);
    }
  }
  std::string kind() const override { return "dehn"; }
  const AlphabetPtr& alphabet() const override { return solver_.presentation().alphabet(); }
  bool is_trivial(const Word& w) const override { return solver_.reduce(w).trivial(); }
  std::string key(const Word& w) const override { return codes_key(solver_.reduce(w).word.letters()); }
  std::vector<std::size_t> invariant_generators() const override { return invariants_; }

 private:
  DehnSolver solver_;
  std::vector<std::size_t> invariants_;
};

class BrittonOracle : public WordProblemOracle {
 public:
  explicit BrittonOracle(AscendingHnnSpec spec) : spec_(std::move(spec)) {}
  std::string kind() const override { return "britton"; }
  const AlphabetPtr& alphabet() const override { return spec_.full_alphabet(); }
  bool is_trivial(const Word& w) const override {
    require_same_alphabet(alphabet(), w.alphabet());
    return britton_normal_form(spec_, w).trivial();
  }
  std::string key(const Word& w) const override {
    auto c = ascending_canonical(spec_, w.letters());
    return std::to_string(c.p) + "," + std::to_string(c.q) + ":" + codes_key(c.k.letters());
  }
  bool canonical() const override { return true; }

 private:
  AscendingHnnSpec spec_;
};

}  // namespace

OraclePtr make_free_oracle(const AlphabetPtr& alphabet) {
  return std::make_shared<FreeOracle>(alphabet, "free");
}

OraclePtr make_dehn_oracle(const Presentation& p) { return std::make_shared<DehnOracle>(p); }

OraclePtr make_britton_oracle(const AscendingHnnSpec& spec) {
  return std::make_shared<BrittonOracle>(spec);
}

OraclePtr make_freeprod_oracle(const AlphabetPtr& base, const std::string& stable) {
  if (base->find(stable)) throw Error("name collision: '" + stable + "' is already a base generator");
  return std::make_shared<FreeOracle>(base->extended({stable}), "freeprod");
}

std::size_t default_ball_cap() {
  if (const char* env = std::getenv("HYPGRP_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultBallCap;
}

// ---------------------------------------------------------------------------

std::optional<std::size_t> Ball::parent(std::size_t i) const {
  if (i == 0) return std::nullopt;
  return elements_.at(i).parent;
}

std::vector<std::size_t> Ball::spelling(std::size_t i) const {
  std::vector<std::size_t> out;
  while (i != 0) {
    out.push_back(elements_.at(i).via);
    i = elements_[i].parent;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<std::int64_t> Ball::bucket_of(const Word& w) const {
  std::vector<std::int64_t> v(invariants_.size(), 0);
  for (Letter l : w.letters()) {
    for (std::size_t k = 0; k < invariants_.size(); ++k) {
      if (invariants_[k] == l.generator()) v[k] += l.sign();
    }
  }
  return v;
}

namespace {

std::string bucket_key(const std::vector<std::int64_t>& v) {
  std::string s;
  for (auto x : v) s += std::to_string(x) + ",";
  return s;
}

}  // namespace

std::optional<std::size_t> Ball::match(const Word& w, const std::string& key, std::size_t lo,
                                       std::size_t hi) const {
  if (auto it = by_key_.find(key); it != by_key_.end()) return it->second;
  if (oracle_->canonical()) return std::nullopt;
  auto b = by_bucket_.find(bucket_key(bucket_of(w)));
  if (b == by_bucket_.end()) return std::nullopt;
  for (std::size_t idx : b->second) {
    if (idx < lo || idx >= hi) continue;
    if (oracle_->equal(w, elements_[idx].word)) return idx;
  }
  return std::nullopt;
}

void Ball::insert(Element e, std::string key) {
  const std::size_t idx = elements_.size();
  by_key_.emplace(std::move(key), idx);
  if (!oracle_->canonical()) by_bucket_[bucket_key(bucket_of(e.word))].push_back(idx);
  elements_.push_back(std::move(e));
}

std::optional<std::size_t> Ball::find(const Word& w) const {
  require_same_alphabet(oracle_->alphabet(), w.alphabet());
  return match(w, oracle_->key(w), 0, elements_.size());
}

Ball build_ball(OraclePtr oracle, std::vector<Word> gens, std::size_t radius, BallOptions options) {
  Ball b;
  b.oracle_ = oracle;
  b.requested_ = radius;
  b.invariants_ = oracle->invariant_generators();
  for (const auto& g : gens) {
    require_same_alphabet(oracle->alphabet(), g.alphabet());
    for (const Word& h : {g, g.inverse()}) {
      if (oracle->is_trivial(h)) continue;
      bool dup = false;
      for (const auto& e : b.gens_) dup = dup || oracle->equal(e, h);
      if (!dup) b.gens_.push_back(h);
    }
  }
  const Word one(oracle->alphabet());
  b.insert({one, 0, 0, 0}, oracle->key(one));
  b.layers_ = {0, 1};
  for (std::size_t d = 0; d < radius; ++d) {
    const std::size_t lo = b.layers_[d], hi = b.layers_[d + 1];
    const std::size_t prev_lo = d == 0 ? 0 : b.layers_[d - 1];
    struct Cand {
      Word word;
      std::size_t parent;
      std::size_t via;
      std::string key;
      bool dup;
    };
    std::vector<Cand> cands;
    cands.reserve((hi - lo) * b.gens_.size());
    for (std::size_t i = lo; i < hi; ++i) {
      for (std::size_t s = 0; s < b.gens_.size(); ++s) {
        cands.push_back({b.elements_[i].word * b.gens_[s], i, s, {}, false});
      }
    }
    // Against the two finished layers; read-only, so parallel.
    parallel_for(cands.size(), options.threads, [&](std::size_t c) {
      cands[c].key = oracle->key(cands[c].word);
      cands[c].dup = b.match(cands[c].word, cands[c].key, prev_lo, hi).has_value();
    });
    const std::size_t layer_start = b.elements_.size();
    bool over = false;
    for (auto& c : cands) {
      if (c.dup) continue;
      if (b.match(c.word, c.key, layer_start, b.elements_.size())) continue;
      if (b.elements_.size() >= options.cap) {
        over = true;
        break;
      }
      b.insert({std::move(c.word), d + 1, c.parent, c.via}, std::move(c.key));
    }
    if (over) {
      // Drop the partial layer so the reported radius stays honest.
      for (std::size_t i = layer_start; i < b.elements_.size(); ++i) {
        b.by_key_.erase(b.oracle_->key(b.elements_[i].word));
      }
      for (auto& [k, v] : b.by_bucket_) {
        v.erase(std::remove_if(v.begin(), v.end(), [&](std::size_t x) { return x >= layer_start; }), v.end());
      }
      b.elements_.erase(b.elements_.begin() + static_cast<std::ptrdiff_t>(layer_start), b.elements_.end());
      break;
    }
    b.layers_.push_back(b.elements_.size());
  }
  return b;
}

Ball build_ball(OraclePtr oracle, std::size_t radius, BallOptions options) {
  std::vector<Word> gens;
  for (std::size_t i = 0; i < oracle->alphabet()->size(); ++i) gens.push_back(Word::letter(oracle->alphabet(), i));
  return build_ball(std::move(oracle), std::move(gens), radius, options);
}

Distance distance(const Ball& ball, const Word& w) {
  Distance d;
  if (auto idx = ball.find(w)) {
    d.exact = ball.distance_of(*idx);
    d.lower_bound = *d.exact;
  } else {
    d.lower_bound = ball.radius() + 1;
  }
  return d;
}

GromovProduct gromov_product(const Ball& ball, const Word& x, const Word& y) {
  GromovProduct g;
  auto dx = distance(ball, x).exact;
  auto dy = distance(ball, y).exact;
  if (!dx || !dy) return g;
  auto dxy = distance(ball, x.inverse() * y).exact;
  if (!dxy) return g;
  g.twice = static_cast<long long>(*dx + *dy) - static_cast<long long>(*dxy);
  return g;
}

// ---------------------------------------------------------------------------

CertifiedWord CertifiedWord::free_reduced(const Word& w) { return CertifiedWord(w, Method::free_reduction); }

CertifiedWord CertifiedWord::dehn_reduced(const DehnSolver& solver, const Word& w, const Ball* spot_check) {
  if (!solver.is_reduced(w)) {
    throw PreconditionError("word " + format_word_compact(w) + " is not Dehn-reduced");
  }
  if (spot_check) {
    for (std::size_t k = 1; k <= std::min(w.size(), spot_check->radius()); ++k) {
      auto d = distance(*spot_check, w.prefix(k));
      if (!d.exact || *d.exact != k) {
        throw PreconditionError("prefix of length " + std::to_string(k) + " of " + format_word_compact(w) +
                                " is not geodesic in the spot-check ball");
      }
    }
  }
  return CertifiedWord(w, Method::dehn_reduced);
}

std::size_t prefix_gromov_lower_bound(const CertifiedWord& u, const CertifiedWord& v) {
  require_same_alphabet(u.word().alphabet(), v.word().alphabet());
  return common_prefix_len(u.word(), v.word());
}

MitraTable mitra_table(const Ball& outer, const std::vector<Word>& points,
                       const std::vector<std::size_t>& inner_distance) {
  if (points.size() != inner_distance.size()) throw Error("mitra: one inner distance per point");
  MitraTable t;
  if (points.size() < 2) return t;
  const std::size_t n = points.size();
  std::vector<std::vector<std::optional<long long>>> twice(n, std::vector<std::optional<long long>>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) twice[i][j] = gromov_product(outer, points[i], points[j]).twice;
  }
  const std::size_t top = *std::max_element(inner_distance.begin(), inner_distance.end());
  for (std::size_t level = 0; level < top; ++level) {
    MitraRow row;
    row.n = level;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (inner_distance[i] < level || inner_distance[j] < level) continue;
        if (!twice[i][j]) {
          ++row.unreachable;
          continue;
        }
        ++row.pairs;
        const double v = static_cast<double>(*twice[i][j]) / 2.0;
        if (!row.m_hat || v < *row.m_hat) row.m_hat = v;
      }
    }
    if (row.pairs + row.unreachable == 0) break;
    t.rows.push_back(row);
  }
  return t;
}

JkloReport jklo_probe(const DehnSolver& outer, const std::vector<FamilyMember>& seq_a,
                      const std::vector<FamilyMember>& seq_b, const Ball* spot_check) {
  if (seq_a.size() < 2 || seq_b.size() < 2) throw PreconditionError("jklo: each family needs at least two members");
  std::vector<CertifiedWord> ca, cb;
  for (const auto& m : seq_a) ca.push_back(CertifiedWord::dehn_reduced(outer, m.outer, spot_check));
  for (const auto& m : seq_b) cb.push_back(CertifiedWord::dehn_reduced(outer, m.outer, spot_check));

  JkloReport rep;
  rep.a_diverges = true;
  for (std::size_t i = 1; i < seq_a.size(); ++i) {
    rep.a_diverges = rep.a_diverges && seq_a[i - 1].inner_length < seq_a[i].inner_length;
  }
  if (!rep.a_diverges) throw PreconditionError("jklo: first family does not diverge in the inner group");

  // Second family: s^m for one generator s.
  std::optional<Letter> s;
  for (const auto& m : seq_b) {
    for (Letter l : m.outer.letters()) {
      if (!s) s = l;
      if (l != *s) throw PreconditionError("jklo: second family is not a power family of one generator");
    }
    if (m.outer.size() != m.index) throw PreconditionError("jklo: second family member m must be s^m");
  }
  if (!s) throw PreconditionError("jklo: second family is trivial");
  bool zero_sum = true;
  for (const auto& r : outer.presentation().relators()) {
    long long sum = 0;
    for (Letter l : r.letters()) {
      if (l.generator() == s->generator()) sum += l.sign();
    }
    zero_sum = zero_sum && sum == 0;
  }
  const std::string sname = outer.presentation().alphabet()->name(s->generator());
  if (zero_sum) {
    rep.b_quasigeodesic = true;
    rep.b_certificate = "exponent sum of " + sname + " is a homomorphism to Z, so d(1, " + sname + "^m) = m";
  } else if (spot_check) {
    rep.b_quasigeodesic = true;
    for (const auto& m : seq_b) {
      if (m.index == 0 || m.index > spot_check->radius()) continue;
      auto d = distance(*spot_check, m.outer);
      rep.b_quasigeodesic = rep.b_quasigeodesic && d.exact && 2 * *d.exact >= m.index;
    }
    rep.b_certificate = "ball ratio d(1, " + sname + "^m)/m >= 1/2 within radius " +
                        std::to_string(spot_check->radius());
  }
  if (!rep.b_quasigeodesic) throw PreconditionError("jklo: second family is not certified quasigeodesic");

  const Word& ha = seq_a.back().inner_head;
  const Word& hb = seq_b.back().inner_head;
  require_same_alphabet(ha.alphabet(), hb.alphabet());
  const std::size_t cp = common_prefix_len(ha, hb);
  rep.distinct_limits = cp < std::min(ha.size(), hb.size());
  if (!rep.distinct_limits) throw PreconditionError("jklo: the two families do not have distinct inner limits");

  for (std::size_t i = 0; i < seq_a.size(); ++i) {
    for (std::size_t j = 0; j < seq_b.size(); ++j) {
      rep.rows.push_back({seq_a[i].index, seq_b[j].index, prefix_gromov_lower_bound(ca[i], cb[j])});
    }
  }
  // Diagonal bound must grow with min(n, m).
  rep.unbounded = true;
  std::optional<std::size_t> prev;
  for (std::size_t i = 0; i < seq_a.size(); ++i) {
    for (std::size_t j = 0; j < seq_b.size(); ++j) {
      if (seq_a[i].index != seq_b[j].index) continue;
      const std::size_t bnd = prefix_gromov_lower_bound(ca[i], cb[j]);
      if (prev && bnd <= *prev) rep.unbounded = false;
      prev = bnd;
    }
  }
  rep.unbounded = rep.unbounded && prev && *prev > 0;
  rep.evidence = rep.a_diverges && rep.b_quasigeodesic && rep.distinct_limits && rep.unbounded;
  return rep;
}

DeltaEstimate estimate_delta(const Ball& ball, std::size_t samples, std::uint64_t seed) {
  DeltaEstimate est;
  if (ball.radius() < 2) return est;
  const std::size_t n = ball.size();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  if (n * (n - 1) / 2 <= samples) {
    for (std::size_t i = 1; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    }
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(1, n - 1);
    while (pairs.size() < samples) {
      std::size_t i = pick(rng), j = pick(rng);
      if (i != j) pairs.emplace_back(std::min(i, j), std::max(i, j));
    }
  }
  auto path_from_one = [&](std::size_t i) {
    std::vector<std::size_t> path;
    for (std::size_t v = i;; v = *ball.parent(v)) {
      path.push_back(v);
      if (v == 0) break;
    }
    std::reverse(path.begin(), path.end());
    return path;
  };
  for (auto [i, j] : pairs) {
    const Word& x = ball.element(i);
    const Word& y = ball.element(j);
    auto g = ball.find(x.inverse() * y);
    if (!g) continue;
    // Third side x -> y along the stored geodesic for x^-1 y; it must stay
    // inside the ball.
    std::vector<std::size_t> side{i};
    Word cur = x;
    bool inside = true;
    for (std::size_t s : ball.spelling(*g)) {
      cur = cur * ball.generators()[s];
      auto v = ball.find(cur);
      if (!v) {
        inside = false;
        break;
      }
      side.push_back(*v);
    }
    if (!inside) continue;
    const std::size_t dx = ball.distance_of(i), dy = ball.distance_of(j), dxy = ball.distance_of(*g);
    const std::size_t a = (dx + dy - dxy) / 2;
    auto px = path_from_one(i), py = path_from_one(j);
    const std::size_t p1 = px[a], p2 = py[a], p3 = side[std::min(dx - a, side.size() - 1)];
    double insize = 0.0;
    bool ok = true;
    for (auto [u, v] : {std::pair{p1, p2}, std::pair{p1, p3}, std::pair{p2, p3}}) {
      auto d = ball.find(ball.element(u).inverse() * ball.element(v));
      if (!d) {
        ok = false;
        break;
      }
      insize = std::max(insize, static_cast<double>(ball.distance_of(*d)));
    }
    if (!ok) continue;
    ++est.triangles;
    est.lower_bound = std::max(est.lower_bound, insize);
  }
  return est;
}

}  // namespace hypgrp
