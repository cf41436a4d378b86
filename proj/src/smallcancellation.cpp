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

#include "hypgrp/smallcancellation.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>

namespace hypgrp {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool code_less(Letter x, Letter y) { return x.code() < y.code(); }

struct Position {
  std::size_t relator;
  bool inverted;
  std::size_t offset;
};

}  // namespace

Rational Rational::parse(std::string_view text) {
  text = trim(text);
  Rational r;
  r.den = 1;
  const auto slash = text.find('/');
  auto num_text = text.substr(0, slash);
  auto [p1, e1] = std::from_chars(num_text.data(), num_text.data() + num_text.size(), r.num);
  if (e1 != std::errc() || p1 != num_text.data() + num_text.size()) {
    throw ParseError("bad rational '" + std::string(text) + "'");
  }
  if (slash != std::string_view::npos) {
    auto den_text = text.substr(slash + 1);
    auto [p2, e2] = std::from_chars(den_text.data(), den_text.data() + den_text.size(), r.den);
    if (e2 != std::errc() || p2 != den_text.data() + den_text.size()) {
      throw ParseError("bad rational '" + std::string(text) + "'");
    }
  }
  if (r.num <= 0 || r.den <= 0 || r.num > r.den) throw ParseError("lambda must lie in (0, 1]");
  return r;
}

Presentation::Presentation(AlphabetPtr alphabet, const std::vector<Word>& relators, std::string name)
    : alphabet_(std::move(alphabet)), name_(std::move(name)) {
  for (const auto& w : relators) {
    require_same_alphabet(alphabet_, w.alphabet());
    CyclicWord c(w);
    if (c.empty()) throw Error("relator reduces to the identity");
    bool dup = false;
    for (const auto& r : relators_) {
      if (r.size() == c.size() && (c.is_rotation_of(r) || c.inverse().is_rotation_of(r))) {
        dup = true;
        break;
      }
    }
    if (!dup) relators_.push_back(std::move(c));
  }
}

Presentation Presentation::parse(std::string_view text, std::string name) {
  AlphabetPtr alphabet;
  std::vector<Word> rels;
  std::vector<std::string> assumptions;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line(raw);
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      auto comment = trim(line.substr(hash + 1));
      if (comment.rfind("assume:", 0) == 0) {
        assumptions.emplace_back(trim(comment.substr(7)));
      } else if (name.empty() && !alphabet && rels.empty() && assumptions.empty() && !comment.empty()) {
        // A leading comment names the presentation.
        name = std::string(comment);
      }
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) {
      throw ParseError("line " + std::to_string(line_no) + ": expected 'gens:' or 'rel:'");
    }
    auto key = trim(line.substr(0, colon));
    auto body = trim(line.substr(colon + 1));
    if (key == "gens") {
      if (alphabet) throw ParseError("line " + std::to_string(line_no) + ": duplicate gens");
      std::vector<std::string> names;
      std::istringstream ns{std::string(body)};
      for (std::string n; ns >> n;) names.push_back(n);
      alphabet = Alphabet::make(std::move(names));
    } else if (key == "rel") {
      if (!alphabet) throw ParseError("line " + std::to_string(line_no) + ": rel before gens");
      rels.push_back(parse_word(alphabet, body));
    } else {
      throw ParseError("line " + std::to_string(line_no) + ": unknown key '" + std::string(key) + "'");
    }
  }
  if (!alphabet) throw ParseError("presentation has no gens line");
  Presentation p(alphabet, rels, std::move(name));
  p.assumptions_ = std::move(assumptions);
  return p;
}

Presentation Presentation::load(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  std::string name = path;
  if (auto slash = name.find_last_of('/'); slash != std::string::npos) name = name.substr(slash + 1);
  if (auto dot = name.rfind('.'); dot != std::string::npos && dot > 0) name = name.substr(0, dot);
  return parse(ss.str(), name);
}

std::string Presentation::to_text() const {
  std::string out;
  if (!name_.empty()) out += "# " + name_ + "\n";
  for (const auto& a : assumptions_) out += "# assume: " + a + "\n";
  out += "gens:";
  for (const auto& n : alphabet_->names()) out += " " + n;
  out += "\n";
  for (const auto& r : relators_) out += "rel: " + format_word(r.word()) + "\n";
  return out;
}

bool operator==(const Presentation& a, const Presentation& b) {
  if (a.alphabet_->names() != b.alphabet_->names() || a.relators_.size() != b.relators_.size()) return false;
  for (std::size_t i = 0; i < a.relators_.size(); ++i) {
    if (!std::equal(a.relators_[i].letters().begin(), a.relators_[i].letters().end(),
                    b.relators_[i].letters().begin(), b.relators_[i].letters().end())) {
      return false;
    }
  }
  return true;
}

std::size_t Presentation::shortest_relator() const {
  std::size_t m = 0;
  for (const auto& r : relators_) m = (m == 0 ? r.size() : std::min(m, r.size()));
  return m;
}

std::size_t Presentation::longest_relator() const {
  std::size_t m = 0;
  for (const auto& r : relators_) m = std::max(m, r.size());
  return m;
}

std::vector<Word> symmetrize(const Presentation& p) {
  std::vector<Word> out;
  for (const auto& r : p.relators()) {
    for (const CyclicWord& c : {r, r.inverse()}) {
      for (std::size_t k = 0; k < c.size(); ++k) {
        Word w = c.rotation(k);
        if (std::find(out.begin(), out.end(), w) == out.end()) out.push_back(std::move(w));
      }
    }
  }
  return out;
}

double PieceTable::max_ratio() const {
  if (!worst) return 0.0;
  return static_cast<double>(max_piece[*worst]) / static_cast<double>(relator_length[*worst]);
}

PieceTable piece_table(const Presentation& p) {
  const auto& rels = p.relators();
  std::vector<std::vector<Letter>> seq[2];
  for (const auto& r : rels) {
    seq[0].emplace_back(r.letters().begin(), r.letters().end());
    auto inv = r.word().inverse();
    seq[1].emplace_back(inv.letters().begin(), inv.letters().end());
  }
  std::vector<Position> pos;
  for (std::size_t i = 0; i < rels.size(); ++i) {
    for (int o = 0; o < 2; ++o) {
      for (std::size_t k = 0; k < rels[i].size(); ++k) pos.push_back({i, o == 1, k});
    }
  }
  auto at = [&](const Position& q, std::size_t k) {
    const auto& s = seq[q.inverted][q.relator];
    return s[(q.offset + k) % s.size()];
  };
  auto cap = [&](const Position& q) { return rels[q.relator].size() - 1; };
  auto lcp = [&](const Position& x, const Position& y) {
    const std::size_t m = std::min(cap(x), cap(y));
    std::size_t k = 0;
    while (k < m && at(x, k) == at(y, k)) ++k;
    return k;
  };
  std::vector<std::size_t> order(pos.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto& x = pos[a];
    const auto& y = pos[b];
    const std::size_t m = std::min(cap(x), cap(y));
    for (std::size_t k = 0; k < m; ++k) {
      const Letter u = at(x, k), v = at(y, k);
      if (u != v) return u.code() < v.code();
    }
    return cap(x) < cap(y);
  });
  // best[j]: longest common prefix of position j with any other position,
  // partner[j]: a position attaining it.
  std::vector<std::size_t> best(pos.size(), 0), partner(pos.size(), 0);
  for (std::size_t s = 0; s + 1 < order.size(); ++s) {
    const std::size_t a = order[s], b = order[s + 1];
    const std::size_t l = lcp(pos[a], pos[b]);
    if (l > best[a] || (l == best[a] && partner[a] == a)) best[a] = l, partner[a] = b;
    if (l > best[b] || (l == best[b] && partner[b] == b)) best[b] = l, partner[b] = a;
  }
  PieceTable t;
  t.max_piece.assign(rels.size(), 0);
  for (const auto& r : rels) t.relator_length.push_back(r.size());
  std::optional<std::size_t> wpos;
  for (std::size_t j = 0; j < pos.size(); ++j) {
    const std::size_t rel = pos[j].relator;
    t.max_piece[rel] = std::max(t.max_piece[rel], best[j]);
    if (best[j] == 0) continue;
    if (!wpos || best[j] * rels[pos[*wpos].relator].size() > best[*wpos] * rels[rel].size()) {
      wpos = j;
    }
  }
  if (wpos) {
    const Position& x = pos[*wpos];
    const Position& y = pos[partner[*wpos]];
    std::vector<Letter> piece;
    for (std::size_t k = 0; k < best[*wpos]; ++k) piece.push_back(at(x, k));
    t.worst = x.relator;
    t.witness = PieceWitness{Word::from_reduced(p.alphabet(), std::move(piece)),
                             {x.relator, x.inverted, x.offset},
                             {y.relator, y.inverted, y.offset}};
  }
  return t;
}

MetricCheck check_metric(const Presentation& p, Rational lambda) {
  MetricCheck m;
  m.table = piece_table(p);
  m.holds = true;
  for (std::size_t i = 0; i < m.table.max_piece.size(); ++i) {
    const auto piece = static_cast<std::int64_t>(m.table.max_piece[i]);
    const auto len = static_cast<std::int64_t>(m.table.relator_length[i]);
    if (piece * lambda.den >= lambda.num * len) m.holds = false;
  }
  return m;
}

DehnSolver::DehnSolver(Presentation p) : p_(std::move(p)) {
  auto check = check_metric(p_, Rational{1, 6});
  table_ = std::move(check.table);
  if (!check.holds) {
    std::string msg = "presentation";
    if (!p_.name().empty()) msg += " '" + p_.name() + "'";
    msg += " is not C'(1/6)";
    if (table_.witness) {
      msg += ": piece " + format_word(table_.witness->piece) + " of length " +
             std::to_string(table_.witness->piece.size()) + " in a relator of length " +
             std::to_string(table_.relator_length[*table_.worst]);
    }
    throw PreconditionError(msg);
  }
  const auto& rels = p_.relators();
  for (std::size_t i = 0; i < rels.size(); ++i) {
    for (const CyclicWord& c : {rels[i], rels[i].inverse()}) {
      for (std::size_t k = 0; k < c.size(); ++k) {
        Word w = c.rotation(k);
        entries_.push_back({{w.letters().begin(), w.letters().end()}, i});
      }
    }
  }
  std::stable_sort(entries_.begin(), entries_.end(), [](const Entry& a, const Entry& b) {
    return std::lexicographical_compare(a.letters.begin(), a.letters.end(), b.letters.begin(),
                                        b.letters.end(), code_less);
  });
  // Keep the first occurrence of identical words (presentation order).
  entries_.erase(std::unique(entries_.begin(), entries_.end(),
                             [](const Entry& a, const Entry& b) { return a.letters == b.letters; }),
                 entries_.end());
}

DehnSolver::Match DehnSolver::best_at(std::span<const Letter> w, std::size_t i) const {
  Match m;
  m.position = i;
  if (entries_.empty()) return m;
  auto suffix = w.subspan(i);
  auto it = std::lower_bound(entries_.begin(), entries_.end(), suffix,
                             [](const Entry& e, std::span<const Letter> x) {
                               return std::lexicographical_compare(e.letters.begin(), e.letters.end(),
                                                                   x.begin(), x.end(), code_less);
                             });
  auto consider = [&](const Entry& e) {
    const std::size_t n = std::min(e.letters.size(), suffix.size());
    std::size_t k = 0;
    while (k < n && e.letters[k] == suffix[k]) ++k;
    if (2 * k > e.letters.size() && k > m.length) {
      m.length = k;
      m.entry = &e;
    }
  };
  if (it != entries_.begin()) consider(*std::prev(it));
  if (it != entries_.end()) consider(*it);
  return m;
}

std::optional<DehnSolver::Match> DehnSolver::find(std::span<const Letter> w) const {
  std::optional<Match> best;
  for (std::size_t i = 0; i < w.size(); ++i) {
    Match m = best_at(w, i);
    if (m.entry && (!best || m.length > best->length)) best = m;
  }
  return best;
}

DehnResult DehnSolver::reduce(const Word& w) const {
  require_same_alphabet(p_.alphabet(), w.alphabet());
  DehnResult r{w, {}};
  while (auto m = find(r.word.letters())) {
    auto ls = r.word.letters();
    const auto& s = m->entry->letters;
    DehnStep step;
    step.position = m->position;
    step.relator = m->entry->relator;
    step.removed = Word::from_reduced(p_.alphabet(), {s.begin(), s.begin() + m->length});
    ReducingBuffer rest(p_.alphabet());
    rest.append(std::span<const Letter>(s).subspan(m->length));
    step.inserted = rest.take().inverse();
    ReducingBuffer b(p_.alphabet());
    b.append(ls.subspan(0, m->position));
    b.append(step.inserted);
    b.append(ls.subspan(m->position + m->length));
    r.word = b.take();
    step.length_after = r.word.size();
    r.trace.push_back(std::move(step));
  }
  return r;
}

bool DehnSolver::is_reduced(const Word& w) const {
  require_same_alphabet(p_.alphabet(), w.alphabet());
  return !find(w.letters());
}

bool DehnSolver::equal(const Word& u, const Word& v) const {
  return reduce(u * v.inverse()).trivial();
}

DehnResult dehn_reduce(const Presentation& p, const Word& w) { return DehnSolver(p).reduce(w); }

bool is_dehn_reduced(const Presentation& p, const Word& w) { return DehnSolver(p).is_reduced(w); }

}  // namespace hypgrp
