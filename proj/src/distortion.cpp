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

#include "hypgrp/distortion.hpp"

#include <algorithm>
#include <cstdio>

#include "json.hpp"

namespace hypgrp {

std::string to_string(DistortionMethod m) {
  return m == DistortionMethod::exhaustive ? "exhaustive" : "witness-lower-bound";
}

std::string to_string(Derivation d) {
  switch (d) {
    case Derivation::expansion: return "expansion";
    case Derivation::matrix: return "matrix";
    case Derivation::matrix_log: return "matrix-log";
  }
  return "?";
}

InnerLength free_subgroup_inner_length(const SubgroupGraph& h) {
  if (h.rank() != h.generators().size()) {
    throw PreconditionError("subgroup generators are not a free basis (rank " + std::to_string(h.rank()) +
                            ", " + std::to_string(h.generators().size()) + " generators)");
  }
  return [&h](const Word& w) -> std::optional<std::size_t> {
    auto expr = express_in_generators(h, w.translate(h.alphabet()));
    if (!expr) return std::nullopt;
    return expr->size();
  };
}

InnerLength base_subgroup_inner_length(const MultiHnnSpec& spec) {
  return [&spec](const Word& w) -> std::optional<std::size_t> {
    auto nf = britton_normal_form(spec, w.translate(spec.full_alphabet()));
    if (nf.stable_syllables() != 0) return std::nullopt;
    return nf.flatten().size();
  };
}

DistortionTable distortion_table_exhaustive(const Ball& outer_ball, const InnerLength& inner,
                                            std::size_t n_max) {
  if (n_max > outer_ball.radius()) {
    throw PreconditionError("distortion: n_max " + std::to_string(n_max) + " exceeds ball radius " +
                            std::to_string(outer_ball.radius()));
  }
  // Best inner length per exact outer distance, then running maxima.
  std::vector<std::size_t> best(n_max + 1, 0);
  std::vector<std::optional<std::size_t>> where(n_max + 1);
  for (std::size_t i = 0; i < outer_ball.size(); ++i) {
    const std::size_t d = outer_ball.distance_of(i);
    if (d > n_max) continue;
    auto len = inner(outer_ball.element(i));
    if (!len) continue;
    if (!where[d] || *len > best[d]) {
      best[d] = *len;
      where[d] = i;
    }
  }
  DistortionTable table;
  table.method = DistortionMethod::exhaustive;
  std::size_t run = 0;
  std::size_t run_at = 0;
  for (std::size_t n = 0; n <= n_max; ++n) {
    if (where[n] && (n == 0 || best[n] > run)) {
      run = best[n];
      run_at = *where[n];
    }
    DistortionRow row;
    row.index = n;
    row.outer_length = n;
    row.inner = BigLength::from_exact(run);
    row.witness = outer_ball.element(run_at);
    table.rows.push_back(std::move(row));
  }
  return table;
}

namespace {

// Q_k(i): product of the sigma count matrices along psi^k(c_i). Letters of
// psi(c_i) come in runs, which become matrix powers.
template <class Matrix>
std::vector<Matrix> next_products(const Endomorphism& psi, const std::vector<Matrix>& prev) {
  std::vector<Matrix> next;
  const std::size_t dim = prev.front().size();
  for (std::size_t i = 0; i < psi.alphabet()->size(); ++i) {
    Matrix acc = Matrix::identity(dim);
    const auto letters = psi.image(i).letters();
    for (std::size_t p = 0; p < letters.size();) {
      std::size_t q = p;
      while (q < letters.size() && letters[q] == letters[p]) ++q;
      acc = acc * prev[letters[p].generator()].power(q - p);
      p = q;
    }
    next.push_back(std::move(acc));
  }
  return next;
}

double max_log10(const LogMatrix& m) {
  double best = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) best = std::max(best, m(i, j).log10());
  }
  return best;
}

BigInt column_sum(const BigMatrix& m, std::size_t col) {
  BigInt s = 0;
  for (std::size_t i = 0; i < m.size(); ++i) s += m(i, col);
  return s;
}

double column_sum_log(const LogMatrix& m, std::size_t col) {
  LogScaled s;
  for (std::size_t i = 0; i < m.size(); ++i) s = s + m(i, col);
  return s.log10();
}

std::string text_or_log(const BigLength& b) {
  if (b.exact) return to_decimal(*b.exact);
  char buf[64];
  std::snprintf(buf, sizeof buf, "10^%.6f", b.log10);
  return buf;
}

bool is_defining_relator(const Presentation& p, const Word& rel) {
  CyclicWord c(rel);
  const CyclicWord inv = c.inverse();
  for (const auto& r : p.relators()) {
    if (r.size() == c.size() && (r.is_rotation_of(c) || r.is_rotation_of(inv))) return true;
  }
  return false;
}

}  // namespace

std::vector<WitnessCertificate> baker_riley_witnesses(const BakerRileyFamily& family, unsigned n_max,
                                                      const WitnessOptions& opts) {
  const Endomorphism& psi = family.psi();
  std::vector<BigMatrix> exact = {letter_count_matrix(family.sigma(1)), letter_count_matrix(family.sigma(2))};
  std::vector<LogMatrix> logs = {LogMatrix::from_big(exact[0]), LogMatrix::from_big(exact[1])};
  bool have_exact = true;
  const Word c1 = Word::letter(family.c_alphabet(), 0);

  std::vector<WitnessCertificate> out;
  for (unsigned n = 0; n <= n_max; ++n) {
    if (n > 0) {
      auto next_logs = next_products(psi, logs);
      if (have_exact) {
        const double digits = std::max(max_log10(next_logs[0]), max_log10(next_logs[1]));
        if (digits + 1 <= static_cast<double>(opts.digit_budget)) {
          exact = next_products(psi, exact);
        } else {
          have_exact = false;
          exact.clear();
        }
      }
      logs = std::move(next_logs);
    }

    WitnessCertificate cert;
    cert.n = n;
    cert.outer = family.w_outer(n);
    cert.outer_length = cert.outer.size();
    if (have_exact) {
      cert.inner_length = BigLength::from_exact(column_sum(exact[0], 0));
      cert.derivation = Derivation::matrix;
    } else {
      cert.inner_length = BigLength::from_log10(column_sum_log(logs[0], 0));
      cert.derivation = Derivation::matrix_log;
    }
    if (cert.inner_length.exact && *cert.inner_length.exact <= opts.expansion_budget) {
      auto w = family.w_inner(n, opts.expansion_budget);
      if (w) {
        if (BigInt(w->size()) != *cert.inner_length.exact) {
          throw Error("witness " + std::to_string(n) + ": matrix length " + text_or_log(cert.inner_length) +
                      " disagrees with expansion " + std::to_string(w->size()));
        }
        cert.inner_word = std::move(*w);
        cert.derivation = Derivation::expansion;
      }
    }
    cert.inner_head = family.w_inner_head(n, opts.head_length);

    for (unsigned k = 1; k <= n; ++k) {
      TraceStep step;
      step.relation = "b c_i b^-1 = C_i";
      step.description = "b^" + std::to_string(n - k + 1) + " psi^" + std::to_string(k - 1) + "(c1) b^-" +
                         std::to_string(n - k + 1) + " -> b^" + std::to_string(n - k) + " psi^" +
                         std::to_string(k) + "(c1) b^-" + std::to_string(n - k) + ", in u_n and u_n^-1";
      step.applications = BigLength::from_exact(2 * length_of_iterate(psi, c1, k - 1).value);
      step.result_length = BigLength::from_exact(length_of_iterate(psi, c1, k).value);
      cert.trace.push_back(std::move(step));
    }
    TraceStep conj;
    conj.relation = "c_i d_j c_i^-1 = D_ij";
    conj.description = "conjugate d1 by psi^" + std::to_string(n) + "(c1), innermost letter first";
    conj.applications = BigLength::from_exact(length_of_iterate(psi, c1, n).value);
    conj.result_length = cert.inner_length;
    cert.trace.push_back(std::move(conj));
    out.push_back(std::move(cert));
  }
  return out;
}

std::vector<WitnessCertificate> baker_riley_witnesses(int r, int l, unsigned n_max, const WitnessOptions& opts) {
  return baker_riley_witnesses(baker_riley(r, l), n_max, opts);
}

std::vector<WitnessCertificate> ascending_witnesses(const AscendingHnnSpec& spec, const Word& seed,
                                                    unsigned n_max, const WitnessOptions& opts) {
  require_same_alphabet(spec.base(), seed.alphabet());
  const Endomorphism& phi = spec.phi();
  const auto& full = spec.full_alphabet();
  const Word t = Word::letter(full, spec.base()->size());
  std::vector<WitnessCertificate> out;
  for (unsigned n = 0; n <= n_max; ++n) {
    WitnessCertificate cert;
    cert.n = n;
    cert.outer = t.power(n) * seed.reinterpret(full) * t.power(-static_cast<long long>(n));
    cert.outer_length = cert.outer.size();
    auto len = length_of_iterate(phi, seed, n);
    if (!len.exact) throw PreconditionError("ascending witnesses need a positive endomorphism and seed");
    cert.inner_length = BigLength::from_exact(len.value);
    cert.derivation = Derivation::matrix;
    if (len.value <= opts.expansion_budget) {
      auto it = iterate(phi, n, seed, opts.expansion_budget);
      if (it.word) {
        if (BigInt(it.word->size()) != len.value) {
          throw Error("witness " + std::to_string(n) + ": matrix and expansion disagree");
        }
        cert.inner_head = it.word->prefix(std::min(opts.head_length, it.word->size()));
        cert.inner_word = std::move(it.word);
        cert.derivation = Derivation::expansion;
      }
    }
    if (!cert.inner_word) {
      Word head = seed;
      for (unsigned k = 0; k < n; ++k) {
        Word next = apply(phi, head.prefix(std::min(opts.head_length, head.size())));
        head = next.prefix(std::min(opts.head_length, next.size()));
      }
      cert.inner_head = head;
    }
    for (unsigned k = 1; k <= n; ++k) {
      TraceStep step;
      step.relation = spec.stable() + " x " + spec.stable() + "^-1 = phi(x)";
      step.description = "pinch the innermost " + spec.stable() + " ... " + spec.stable() + "^-1 pair";
      step.applications = BigLength::from_exact(length_of_iterate(phi, seed, k - 1).value);
      step.result_length = BigLength::from_exact(length_of_iterate(phi, seed, k).value);
      cert.trace.push_back(std::move(step));
    }
    out.push_back(std::move(cert));
  }
  return out;
}

ReplayResult replay_witness(const BakerRileyFamily& family, const WitnessCertificate& cert,
                            std::size_t budget) {
  ReplayResult res;
  const auto& g = family.G_bcd();
  const auto& alpha = g.alphabet();
  const Word b = Word::letter(alpha, *alpha->find("b"));
  res.relations_valid = cert.outer == family.w_outer(cert.n);
  for (int i = 1; i <= 2 && res.relations_valid; ++i) {
    const Word ci = family.lift(Word::letter(family.c_alphabet(), i - 1));
    res.relations_valid = is_defining_relator(g, b * ci * b.inverse() * family.lift(family.C_i(i)).inverse());
    for (int j = 1; j <= 2 && res.relations_valid; ++j) {
      const Word dj = family.lift(Word::letter(family.d_alphabet(), j - 1));
      res.relations_valid =
          is_defining_relator(g, ci * dj * ci.inverse() * family.lift(family.D_ij(i, j)).inverse());
    }
  }
  if (!res.relations_valid) return res;

  // b x b^-1 -> psi(x), one letter of x at a time.
  Word x = Word::letter(family.c_alphabet(), 0);
  for (unsigned k = 0; k < cert.n; ++k) {
    std::size_t predicted = 0;
    for (Letter y : x.letters()) predicted += family.psi().image(y.generator()).size();
    if (predicted > budget) return res;
    x = apply(family.psi(), x);
  }
  // c_i v c_i^-1 -> sigma_i(v), innermost letter first.
  Word v = Word::letter(family.d_alphabet(), 0);
  const auto letters = x.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    const Endomorphism& s = family.sigma(static_cast<int>(it->generator()) + 1);
    std::size_t predicted = 0;
    for (Letter y : v.letters()) predicted += s.image(y.generator()).size();
    if (predicted > budget) return res;
    v = apply(s, v);
  }
  res.expanded = true;
  res.matches = cert.inner_length.exact && BigInt(v.size()) == *cert.inner_length.exact &&
                (!cert.inner_word || *cert.inner_word == v) && v.prefix(std::min(v.size(), cert.inner_head.size())) == cert.inner_head;
  res.inner_word = std::move(v);
  return res;
}

ReplayResult replay_witness(const AscendingHnnSpec& spec, const Word& seed, const WitnessCertificate& cert,
                            std::size_t budget) {
  ReplayResult res;
  const auto& full = spec.full_alphabet();
  const Word t = Word::letter(full, spec.base()->size());
  const Presentation p = spec.presentation();
  res.relations_valid = cert.outer == t.power(cert.n) * seed.reinterpret(full) * t.power(-static_cast<long long>(cert.n));
  for (std::size_t i = 0; i < spec.base()->size() && res.relations_valid; ++i) {
    const Word x = Word::letter(full, i);
    res.relations_valid = is_defining_relator(p, t * x * t.inverse() * spec.phi().image(i).reinterpret(full).inverse());
  }
  if (!res.relations_valid) return res;
  Word x = seed;
  for (unsigned k = 0; k < cert.n; ++k) {
    std::size_t predicted = 0;
    for (Letter y : x.letters()) predicted += spec.phi().image(y.generator()).size();
    if (predicted > budget) return res;
    x = apply(spec.phi(), x);
  }
  res.expanded = true;
  res.matches = cert.inner_length.exact && BigInt(x.size()) == *cert.inner_length.exact &&
                (!cert.inner_word || *cert.inner_word == x);
  res.inner_word = std::move(x);
  return res;
}

JkloFamilies baker_riley_jklo_families(const BakerRileyFamily& family, unsigned n_max,
                                       const WitnessOptions& opts) {
  const auto inner = Alphabet::make({"d1", "d2", "b"});
  const auto& alpha = family.G_bcd().alphabet();
  const Word b = Word::letter(alpha, *alpha->find("b"));
  const Word b_inner = Word::letter(inner, 2);
  JkloFamilies out;
  for (auto& c : baker_riley_witnesses(family, n_max, opts)) {
    out.a.push_back({c.n, c.outer, c.inner_length, c.inner_head.translate(inner)});
  }
  for (unsigned m = 0; m <= n_max; ++m) {
    out.b.push_back({m, b.power(m), BigLength::from_exact(BigInt(m)),
                     b_inner.power(std::min<long long>(m, static_cast<long long>(opts.head_length)))});
  }
  return out;
}

DistortionTable witness_lower_bound_table(const std::vector<WitnessCertificate>& certs) {
  DistortionTable table;
  table.method = DistortionMethod::witness_lower_bound;
  for (const auto& c : certs) {
    DistortionRow row;
    row.index = c.n;
    row.outer_length = c.outer_length;
    row.inner = c.inner_length;
    row.witness = c.outer;
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::string distortion_csv(const DistortionTable& table) {
  std::string out = "n,outer_len,inner_len_decimal,log10_inner\n";
  char buf[64];
  for (const auto& row : table.rows) {
    const double l = row.inner.exact && *row.inner.exact == 0 ? 0.0 : row.inner.log10;
    // Doubles carry about 16 significant digits; fixed notation would print
    // noise for very large logarithms.
    std::snprintf(buf, sizeof buf, l < 1e12 ? "%.6f" : "%.12e", l);
    out += std::to_string(row.index) + "," + std::to_string(row.outer_length) + "," + row.inner.decimal() + "," +
           buf + "\n";
  }
  return out;
}

namespace {

nlohmann::json length_json(const BigLength& b) {
  nlohmann::json j;
  j["decimal"] = b.exact ? nlohmann::json(to_decimal(*b.exact)) : nlohmann::json(nullptr);
  j["log10"] = b.log10;
  return j;
}

}  // namespace

std::string witnesses_json(const std::vector<WitnessCertificate>& certs) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : certs) {
    nlohmann::json j;
    j["n"] = c.n;
    j["outer"] = format_word(c.outer);
    j["outer_length"] = c.outer_length;
    j["inner_length"] = length_json(c.inner_length);
    j["derivation"] = to_string(c.derivation);
    j["inner_head"] = format_word(c.inner_head);
    if (c.inner_word) j["inner_word"] = format_word(*c.inner_word);
    nlohmann::json trace = nlohmann::json::array();
    for (const auto& s : c.trace) {
      trace.push_back({{"relation", s.relation},
                       {"description", s.description},
                       {"applications", length_json(s.applications)},
                       {"result_length", length_json(s.result_length)}});
    }
    j["trace"] = std::move(trace);
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

}  // namespace hypgrp
