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

#include "hypgrp/gog.hpp"

#include <algorithm>

#include "nlohmann/json.hpp"

namespace hypgrp {

namespace {

AlphabetPtr with_stables(const AlphabetPtr& base, const std::vector<std::string>& names) {
  for (const auto& n : names) {
    if (base->find(n)) throw Error("name collision: '" + n + "' is already a base generator");
  }
  return base->extended(names);
}

}  // namespace

MultiHnnSpec::MultiHnnSpec(std::vector<std::pair<std::string, Endomorphism>> endos) {
  if (endos.empty()) throw Error("HNN extension needs at least one stable letter");
  base_ = endos.front().second.alphabet();
  std::vector<std::string> names;
  for (auto& [name, phi] : endos) {
    require_same_alphabet(base_, phi.alphabet());
    if (std::find(names.begin(), names.end(), name) != names.end()) {
      throw Error("name collision: stable letter '" + name + "' repeated");
    }
    names.push_back(name);
    auto image = SubgroupGraph::build(base_, phi.images());
    if (image.rank() != base_->size()) {
      throw PreconditionError("endomorphism for '" + name + "' is not injective");
    }
    stables_.push_back({name, std::move(phi), std::move(image)});
  }
  full_ = with_stables(base_, names);
}

std::optional<std::size_t> MultiHnnSpec::stable_index(Letter l) const {
  if (l.generator() < base_->size()) return std::nullopt;
  return l.generator() - base_->size();
}

std::optional<Word> MultiHnnSpec::preimage(std::size_t j, const Word& k) const {
  auto e = express_in_generators(stables_.at(j).image, k);
  if (!e) return std::nullopt;
  return e->reinterpret(base_);
}

Presentation MultiHnnSpec::presentation(std::string name) const {
  std::vector<Word> rels;
  for (std::size_t j = 0; j < stables_.size(); ++j) {
    const Word t = Word::letter(full_, base_->size() + j);
    for (std::size_t x = 0; x < base_->size(); ++x) {
      const Word xw = Word::letter(full_, x);
      rels.push_back(t * xw * t.inverse() * stables_[j].endo.image(x).reinterpret(full_).inverse());
    }
  }
  return Presentation(full_, rels, std::move(name));
}

AscendingHnnSpec::AscendingHnnSpec(Endomorphism phi, std::string stable)
    : MultiHnnSpec({{std::move(stable), std::move(phi)}}) {}

std::size_t NormalForm::stable_syllables() const {
  return static_cast<std::size_t>(std::count_if(syllables.begin(), syllables.end(), [](const Syllable& s) {
    return s.kind == Syllable::Kind::stable;
  }));
}

std::size_t NormalForm::stable_letters() const {
  std::size_t n = 0;
  for (const auto& s : syllables) {
    if (s.kind == Syllable::Kind::stable) n += static_cast<std::size_t>(std::llabs(s.exponent));
  }
  return n;
}

Word NormalForm::flatten() const {
  ReducingBuffer b(full);
  for (const auto& s : syllables) {
    if (s.kind == Syllable::Kind::base) {
      b.append(s.base.reinterpret(full).letters());
    } else {
      const Letter t(base->size() + s.stable, s.exponent > 0 ? 1 : -1);
      for (long long i = 0; i < std::llabs(s.exponent); ++i) b.push(t);
    }
  }
  return b.take();
}

std::string NormalForm::to_string() const {
  if (syllables.empty()) return "1";
  std::string out;
  for (const auto& s : syllables) {
    out += '[';
    if (s.kind == Syllable::Kind::base) {
      out += format_word(s.base);
    } else {
      out += full->name(base->size() + s.stable);
      if (s.exponent != 1) out += "^" + std::to_string(s.exponent);
    }
    out += ']';
  }
  return out;
}

NormalForm britton_normal_form(const MultiHnnSpec& spec, std::span<const Letter> raw) {
  struct Item {
    bool stable;
    std::vector<Letter> word;
    std::size_t j;
    long long e;
  };
  std::vector<Item> st;
  const std::size_t nbase = spec.base()->size();
  auto push_base = [&](Letter l) {
    if (st.empty() || st.back().stable) st.push_back({false, {}, 0, 0});
    auto& w = st.back().word;
    if (!w.empty() && w.back().cancels(l)) {
      w.pop_back();
      if (w.empty()) st.pop_back();
    } else {
      w.push_back(l);
    }
  };
  for (Letter l : raw) {
    if (l.generator() >= spec.full_alphabet()->size()) throw AlphabetMismatch("letter outside the HNN alphabet");
    if (l.generator() < nbase) {
      push_base(l);
      continue;
    }
    const std::size_t j = l.generator() - nbase;
    const int eps = l.sign();
    const bool has_k = !st.empty() && !st.back().stable;
    const std::ptrdiff_t prev = static_cast<std::ptrdiff_t>(st.size()) - (has_k ? 2 : 1);
    if (prev >= 0 && st[prev].stable && st[prev].j == j && (st[prev].e > 0) == (eps < 0)) {
      Word k = has_k ? Word::from_reduced(spec.base(), st.back().word) : Word(spec.base());
      std::optional<Word> repl;
      if (eps < 0) {
        repl = apply(spec.endo(j), k);
      } else {
        repl = spec.preimage(j, k);
      }
      if (repl) {
        if (has_k) st.pop_back();
        st.back().e += eps;
        if (st.back().e == 0) st.pop_back();
        for (Letter x : repl->letters()) push_base(x);
        continue;
      }
    }
    if (!st.empty() && st.back().stable && st.back().j == j && (st.back().e > 0) == (eps > 0)) {
      st.back().e += eps;
    } else {
      st.push_back({true, {}, j, eps});
    }
  }
  NormalForm nf;
  nf.shape = NormalForm::Shape::hnn;
  nf.base = spec.base();
  nf.full = spec.full_alphabet();
  for (auto& it : st) {
    Syllable s;
    if (it.stable) {
      s.kind = Syllable::Kind::stable;
      s.stable = it.j;
      s.exponent = it.e;
    } else {
      s.kind = Syllable::Kind::base;
      s.base = Word::from_reduced(spec.base(), std::move(it.word));
    }
    nf.syllables.push_back(std::move(s));
  }
  return nf;
}

AscendingCanonical ascending_identity(const AscendingHnnSpec& spec) {
  return {0, Word(spec.base()), 0};
}

AscendingCanonical ascending_multiply(const AscendingHnnSpec& spec, const AscendingCanonical& g,
                                      Letter l) {
  AscendingCanonical r = g;
  const std::size_t nbase = spec.base()->size();
  if (l.generator() < nbase) {
    Word x = Word::letter(spec.base(), l.generator(), l.sign());
    for (unsigned long long i = 0; i < r.q; ++i) x = apply(spec.phi(), x);
    r.k = r.k * x;
  } else if (l.generator() == nbase) {
    if (l.positive()) {
      r.q += 1;
    } else if (r.q > 0) {
      r.q -= 1;
    } else {
      r.p += 1;
      r.k = apply(spec.phi(), r.k);
    }
  } else {
    throw AlphabetMismatch("letter outside the HNN alphabet");
  }
  while (r.p > 0 && r.q > 0) {
    auto pre = spec.preimage(0, r.k);
    if (!pre) break;
    r.k = *pre;
    r.p -= 1;
    r.q -= 1;
  }
  return r;
}

AscendingCanonical ascending_canonical(const AscendingHnnSpec& spec, std::span<const Letter> raw) {
  AscendingCanonical g = ascending_identity(spec);
  for (Letter l : raw) g = ascending_multiply(spec, g, l);
  return g;
}

Word ascending_flatten(const AscendingHnnSpec& spec, const AscendingCanonical& g) {
  const auto& full = spec.full_alphabet();
  const Word t = Word::letter(full, spec.base()->size());
  return t.power(-static_cast<long long>(g.p)) * g.k.reinterpret(full) *
         t.power(static_cast<long long>(g.q));
}

NormalForm freeprod_normal_form(const AlphabetPtr& base, const std::string& stable,
                                std::span<const Letter> raw) {
  NormalForm nf;
  nf.shape = NormalForm::Shape::free_product;
  nf.base = base;
  nf.full = with_stables(base, {stable});
  // K * <t> is free on base + {t}; syllables are the maximal runs.
  Word w = free_reduce(nf.full, raw);
  const std::size_t nbase = base->size();
  std::vector<Letter> run;
  for (std::size_t i = 0; i <= w.size(); ++i) {
    const bool end = i == w.size();
    if (!end && w[i].generator() > nbase) throw AlphabetMismatch("letter outside K * <t>");
    if (!end && w[i].generator() < nbase) {
      run.push_back(w[i]);
      continue;
    }
    if (!run.empty()) {
      Syllable s;
      s.base = Word::from_reduced(base, std::move(run));
      nf.syllables.push_back(std::move(s));
      run.clear();
    }
    if (end) break;
    if (!nf.syllables.empty() && nf.syllables.back().kind == Syllable::Kind::stable) {
      nf.syllables.back().exponent += w[i].sign();
    } else {
      Syllable s;
      s.kind = Syllable::Kind::stable;
      s.exponent = w[i].sign();
      nf.syllables.push_back(std::move(s));
    }
  }
  return nf;
}

TreeProjection bass_serre_projection(const NormalForm& nf) {
  TreeProjection tp;
  std::vector<Letter> cur;
  auto rep = [&]() { return free_reduce(nf.full, cur); };
  tp.vertices.push_back({TreeVertex::Kind::base_coset, Word(nf.full)});
  for (const auto& s : nf.syllables) {
    if (s.kind == Syllable::Kind::base) {
      auto ls = s.base.letters();
      cur.insert(cur.end(), ls.begin(), ls.end());
      continue;
    }
    const Letter t(nf.base->size() + s.stable, s.exponent > 0 ? 1 : -1);
    const std::size_t n = static_cast<std::size_t>(std::llabs(s.exponent));
    if (nf.shape == NormalForm::Shape::free_product) {
      tp.vertices.push_back({TreeVertex::Kind::stable_coset, rep()});
      cur.insert(cur.end(), n, t);
      tp.vertices.push_back({TreeVertex::Kind::base_coset, rep()});
    } else {
      for (std::size_t i = 0; i < n; ++i) {
        cur.push_back(t);
        tp.vertices.push_back({TreeVertex::Kind::base_coset, rep()});
      }
    }
  }
  return tp;
}

// ---------------------------------------------------------------------------

namespace {

using nlohmann::json;

AlphabetPtr ray_full(const AlphabetPtr& base, const std::string& stable) {
  return with_stables(base, {stable});
}

void validate_tail(const RayDescriptor& rd) {
  switch (rd.tail.kind) {
    case RayTail::Kind::stable_plus:
    case RayTail::Kind::stable_minus:
      return;
    case RayTail::Kind::base_endo: {
      if (!rd.tail.endo) throw Error("base-endo tail needs images");
      if (rd.tail.seed.empty()) throw Error("base-endo tail needs a nonempty seed");
      Word next = apply(*rd.tail.endo, rd.tail.seed);
      if (next.size() <= rd.tail.seed.size() || next.prefix(rd.tail.seed.size()) != rd.tail.seed) {
        throw Error("base-endo tail does not define a ray: phi(seed) must extend seed");
      }
      return;
    }
    case RayTail::Kind::periodic:
      if (CyclicWord(rd.tail.pattern).empty()) throw Error("periodic tail pattern is trivial");
      return;
  }
}

}  // namespace

RayDescriptor RayDescriptor::from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("ray descriptor: ") + e.what());
  }
  try {
    RayDescriptor rd;
    std::vector<std::string> names = j.value("base", std::vector<std::string>{"a", "b"});
    rd.base = Alphabet::make(names);
    rd.stable = j.value("stable", std::string("t"));
    rd.full = ray_full(rd.base, rd.stable);
    rd.prefix = parse_word(rd.full, j.value("prefix", std::string("1")));
    const json& tail = j.at("tail");
    const std::string kind = tail.at("kind").get<std::string>();
    if (kind == "stable+") {
      rd.tail.kind = RayTail::Kind::stable_plus;
    } else if (kind == "stable-") {
      rd.tail.kind = RayTail::Kind::stable_minus;
    } else if (kind == "base-endo") {
      rd.tail.kind = RayTail::Kind::base_endo;
      const json& images = tail.at("images");
      if (images.is_string()) {
        rd.tail.endo = Endomorphism::parse(rd.base, images.get<std::string>());
      } else {
        std::string spec;
        for (auto it = images.begin(); it != images.end(); ++it) {
          spec += it.key() + "->" + it.value().get<std::string>() + ",";
        }
        rd.tail.endo = Endomorphism::parse(rd.base, spec);
      }
      rd.tail.seed = parse_word(rd.base, tail.at("seed").get<std::string>());
    } else if (kind == "periodic") {
      rd.tail.kind = RayTail::Kind::periodic;
      rd.tail.pattern = parse_word(rd.full, tail.at("pattern").get<std::string>());
    } else {
      throw ParseError("unknown tail kind '" + kind + "'");
    }
    validate_tail(rd);
    return rd;
  } catch (const json::exception& e) {
    throw ParseError(std::string("ray descriptor: ") + e.what());
  }
}

std::string RayDescriptor::to_json() const {
  json j;
  j["base"] = base->names();
  j["stable"] = stable;
  j["prefix"] = format_word(prefix);
  json tail;
  switch (this->tail.kind) {
    case RayTail::Kind::stable_plus: tail["kind"] = "stable+"; break;
    case RayTail::Kind::stable_minus: tail["kind"] = "stable-"; break;
    case RayTail::Kind::base_endo: {
      tail["kind"] = "base-endo";
      json images = json::object();
      for (std::size_t i = 0; i < base->size(); ++i) {
        images[base->name(i)] = format_word(this->tail.endo->image(i));
      }
      tail["images"] = images;
      tail["seed"] = format_word(this->tail.seed);
      break;
    }
    case RayTail::Kind::periodic:
      tail["kind"] = "periodic";
      tail["pattern"] = format_word(this->tail.pattern);
      break;
  }
  j["tail"] = tail;
  return j.dump();
}

std::vector<Letter> RayDescriptor::expand(std::size_t n) const {
  std::vector<Letter> out(prefix.letters().begin(), prefix.letters().end());
  const Letter t(base->size(), 1);
  switch (tail.kind) {
    case RayTail::Kind::stable_plus:
    case RayTail::Kind::stable_minus:
      while (out.size() < n) out.push_back(tail.kind == RayTail::Kind::stable_plus ? t : t.inverse());
      break;
    case RayTail::Kind::base_endo: {
      Word w = tail.seed;
      while (out.size() + w.size() < n) w = apply(*tail.endo, w);
      for (Letter l : w.letters()) out.push_back(l);
      break;
    }
    case RayTail::Kind::periodic:
      while (out.size() < n) {
        for (Letter l : tail.pattern.letters()) out.push_back(l);
      }
      break;
  }
  out.resize(std::min(out.size(), n));
  return out;
}

std::string to_string(RayClass c) {
  switch (c) {
    case RayClass::t_finite_base: return "T-finite-base";
    case RayClass::t_finite_stable: return "T-finite-stable";
    case RayClass::t_infinite: return "T-infinite";
  }
  return "?";
}

RayClass classify_ray(const RayDescriptor& rd) {
  switch (rd.tail.kind) {
    case RayTail::Kind::stable_plus:
    case RayTail::Kind::stable_minus:
      return RayClass::t_finite_stable;
    case RayTail::Kind::base_endo:
      return RayClass::t_finite_base;
    case RayTail::Kind::periodic: {
      // pattern^n = c p^n c^-1 with p cyclically reduced.
      CyclicWord p(rd.tail.pattern);
      bool has_base = false, has_stable = false;
      for (Letter l : p.letters()) {
        if (l.generator() < rd.base->size()) has_base = true; else has_stable = true;
      }
      if (has_base && has_stable) return RayClass::t_infinite;
      return has_stable ? RayClass::t_finite_stable : RayClass::t_finite_base;
    }
  }
  return RayClass::t_infinite;
}

std::string to_string(Landing l) {
  switch (l) {
    case Landing::lands: return "lands";
    case Landing::lands_by_hypothesis: return "lands-by-hypothesis";
    case Landing::unknown: return "unknown";
  }
  return "?";
}

Landing landing_verdict(const RayDescriptor& rd, ComponentFlags flags) {
  switch (classify_ray(rd)) {
    case RayClass::t_infinite:
      return Landing::lands;
    case RayClass::t_finite_stable:
      return flags.stable_pair_has_ray_ct ? Landing::lands_by_hypothesis : Landing::unknown;
    case RayClass::t_finite_base:
      return flags.base_pair_has_ray_ct ? Landing::lands_by_hypothesis : Landing::unknown;
  }
  return Landing::unknown;
}

bool omega_membership(const RayDescriptor& rd) {
  return classify_ray(rd) == RayClass::t_finite_stable;
}

// ---------------------------------------------------------------------------

Presentation compose_hnn(const Presentation& h, const std::string& stable,
                         const std::vector<std::pair<Word, Word>>& relations, std::string name) {
  auto full = with_stables(h.alphabet(), {stable});
  std::vector<Word> rels;
  for (const auto& r : h.relators()) rels.push_back(r.word().reinterpret(full));
  const Word t = Word::letter(full, h.alphabet()->size());
  for (const auto& [q, image] : relations) {
    require_same_alphabet(h.alphabet(), q.alphabet());
    require_same_alphabet(h.alphabet(), image.alphabet());
    rels.push_back(t * q.reinterpret(full) * t.inverse() * image.reinterpret(full).inverse());
  }
  return Presentation(full, rels, std::move(name));
}

Presentation compose_amalgam(const Presentation& h, const std::vector<Word>& q_gens,
                             const Endomorphism& phi, const std::string& stable, std::string name) {
  if (q_gens.size() != phi.alphabet()->size()) {
    throw Error("compose: " + std::to_string(q_gens.size()) + " subgroup generators for an endomorphism of rank " +
                std::to_string(phi.alphabet()->size()));
  }
  std::vector<std::pair<Word, Word>> relations;
  for (std::size_t i = 0; i < q_gens.size(); ++i) {
    relations.emplace_back(q_gens[i], substitute(phi.image(i), q_gens, h.alphabet()));
  }
  return compose_hnn(h, stable, relations, std::move(name));
}

Presentation amalgamate(const Presentation& h, const Presentation& l,
                        const std::vector<std::pair<Word, Word>>& identifications, std::string name) {
  auto full = with_stables(h.alphabet(), l.alphabet()->names());
  std::vector<Word> rels;
  for (const auto& r : h.relators()) rels.push_back(r.word().reinterpret(full));
  for (const auto& r : l.relators()) rels.push_back(r.word().translate(full));
  for (const auto& [u, v] : identifications) {
    require_same_alphabet(h.alphabet(), u.alphabet());
    require_same_alphabet(l.alphabet(), v.alphabet());
    rels.push_back(u.reinterpret(full) * v.translate(full).inverse());
  }
  return Presentation(full, rels, std::move(name));
}

}  // namespace hypgrp
