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

#ifndef HYPGRP_DISTORTION_HPP
#define HYPGRP_DISTORTION_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hypgrp/bigint.hpp"
#include "hypgrp/cayley.hpp"
#include "hypgrp/examples.hpp"
#include "hypgrp/gog.hpp"
#include "hypgrp/stallings.hpp"

namespace hypgrp {

enum class DistortionMethod { exhaustive, witness_lower_bound };
std::string to_string(DistortionMethod m);

struct DistortionRow {
  std::size_t index = 0;
  std::size_t outer_length = 0;
  BigLength inner;
  // Element realising the row, over the outer alphabet (exhaustive rows, and
  // witness rows whose outer word is known).
  std::optional<Word> witness;
};

struct DistortionTable {
  DistortionMethod method = DistortionMethod::exhaustive;
  std::vector<DistortionRow> rows;
};

// Inner length of an element of the outer group given by a spelling, or
// nullopt when it is not in the subgroup.
using InnerLength = std::function<std::optional<std::size_t>(const Word&)>;

// Subgroup of a free group; its generators must be a free basis. Spellings
// are read in the free group on the graph's alphabet.
InnerLength free_subgroup_inner_length(const SubgroupGraph& h);
// Base group K = F(x1..xn) inside a multiple ascending HNN extension,
// measured in the basis x1..xn.
InnerLength base_subgroup_inner_length(const MultiHnnSpec& spec);

// Dist(n) = max inner length over subgroup elements of outer length <= n,
// for n = 0..n_max.
DistortionTable distortion_table_exhaustive(const Ball& outer_ball, const InnerLength& inner,
                                            std::size_t n_max);

enum class Derivation { expansion, matrix, matrix_log };
std::string to_string(Derivation d);

struct TraceStep {
  // Defining relation used, e.g. "b c_i b^-1 = C_i".
  std::string relation;
  std::string description;
  // Number of relation applications in this step.
  BigLength applications;
  // Length of the subword produced by this step.
  BigLength result_length;
};

struct WitnessCertificate {
  unsigned n = 0;
  Word outer{nullptr};
  std::size_t outer_length = 0;
  BigLength inner_length;
  Derivation derivation = Derivation::matrix;
  // Reduced inner word in the subgroup's free basis, when expanded.
  std::optional<Word> inner_word;
  Word inner_head{nullptr};
  std::vector<TraceStep> trace;
};

struct WitnessOptions {
  // Largest inner word materialised for the expansion cross-check.
  std::size_t expansion_budget = 100'000;
  // Largest exact inner length kept, in decimal digits.
  std::size_t digit_budget = 20'000;
  std::size_t head_length = 32;
};

// w_n = u_n d1 u_n^-1 with u_n = b^n c1 b^-n; inner element of F(d1, d2).
std::vector<WitnessCertificate> baker_riley_witnesses(const BakerRileyFamily& family, unsigned n_max,
                                                      const WitnessOptions& opts = {});
std::vector<WitnessCertificate> baker_riley_witnesses(int r, int l, unsigned n_max,
                                                      const WitnessOptions& opts = {});

// t^n x t^-n = phi^n(x) in K*_phi.
std::vector<WitnessCertificate> ascending_witnesses(const AscendingHnnSpec& spec, const Word& seed,
                                                    unsigned n_max, const WitnessOptions& opts = {});

struct ReplayResult {
  // Every relation the trace names is a defining relator of the presentation.
  bool relations_valid = false;
  // The trace was carried out letter by letter within the budget.
  bool expanded = false;
  std::optional<Word> inner_word;
  // Agreement of the replayed word with the certificate (length and, when
  // stored, letters); only meaningful when expanded.
  bool matches = false;
};

ReplayResult replay_witness(const BakerRileyFamily& family, const WitnessCertificate& cert,
                            std::size_t budget = 100'000);
ReplayResult replay_witness(const AscendingHnnSpec& spec, const Word& seed, const WitnessCertificate& cert,
                            std::size_t budget = 100'000);

// Families for the JKLO probe in G_bcd: w_n (inner group F(d1, d2)) and
// b^m (inner ray b^infinity). Inner heads are spelled over {d1, d2, b}.
struct JkloFamilies {
  std::vector<FamilyMember> a;
  std::vector<FamilyMember> b;
};
JkloFamilies baker_riley_jklo_families(const BakerRileyFamily& family, unsigned n_max,
                                       const WitnessOptions& opts = {});

DistortionTable witness_lower_bound_table(const std::vector<WitnessCertificate>& certs);

// Columns n, outer_len, inner_len_decimal, log10_inner.
std::string distortion_csv(const DistortionTable& table);

// Certificates as a JSON array (pretty-printed).
std::string witnesses_json(const std::vector<WitnessCertificate>& certs);

}  // namespace hypgrp

#endif  // HYPGRP_DISTORTION_HPP
