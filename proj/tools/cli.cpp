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

#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "hypgrp/cayley.hpp"
#include "hypgrp/distortion.hpp"
#include "hypgrp/examples.hpp"
#include "hypgrp/gog.hpp"
#include "hypgrp/smallcancellation.hpp"
#include "hypgrp/stallings.hpp"
#include "hypgrp/substitution.hpp"
#include "svg.hpp"

namespace hypgrp::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(std::ostream& out, const std::string& path, const std::string& text) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write " + path);
  f << text;
  if (!f) throw Error("cannot write " + path);
}

std::vector<std::string> split_on(const std::string& s, const std::string& seps) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (seps.find(c) != std::string::npos) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

AlphabetPtr alphabet_of(const std::string& gens) {
  auto names = split_on(gens, " ,\t");
  if (names.empty()) throw UsageError("empty generator list");
  return Alphabet::make(names);
}

std::vector<Word> word_list(const AlphabetPtr& alpha, const std::string& text) {
  std::vector<Word> out;
  for (const auto& part : split_on(text, ",;")) out.push_back(parse_word(alpha, part));
  return out;
}

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string yes(bool b) { return b ? "yes" : "no"; }

// Where a command gets its group from: a presentation file, a registry
// example, a free group, or an ascending HNN extension.
struct SourceOpts {
  std::string example;
  std::string free_gens;
  std::string endo;
  std::string gens = "a b";
  std::string stable = "t";
  int r = kDefaultR;
  int l = kDefaultL;
};

struct Source {
  AlphabetPtr alphabet;
  OraclePtr oracle;
  std::optional<Presentation> presentation;
  std::shared_ptr<AscendingHnnSpec> ascending;
};

void add_source(CLI::App* sub, SourceOpts& s) {
  sub->add_option("--example", s.example, "registry label");
  sub->add_option("--free", s.free_gens, "free group on these generators");
  sub->add_option("--endo", s.endo, "ascending HNN extension by this endomorphism, e.g. 'a->ab, b->ba'");
  sub->add_option("--gens", s.gens, "base generators for --endo")->capture_default_str();
  sub->add_option("--stable", s.stable, "stable letter for --endo")->capture_default_str();
  sub->add_option("--r", s.r, "Baker-Riley r")->capture_default_str();
  sub->add_option("--l", s.l, "Baker-Riley l")->capture_default_str();
}

Source from_presentation(Presentation p) {
  Source s;
  s.alphabet = p.alphabet();
  s.oracle = p.relators().empty() ? make_free_oracle(p.alphabet()) : make_dehn_oracle(p);
  s.presentation = std::move(p);
  return s;
}

Source from_ascending(std::shared_ptr<AscendingHnnSpec> spec) {
  Source s;
  s.alphabet = spec->full_alphabet();
  s.oracle = make_britton_oracle(*spec);
  s.ascending = std::move(spec);
  return s;
}

// `file` may be empty when an option names the group.
Source resolve(const SourceOpts& o, const std::string& file) {
  const int chosen = !file.empty() + !o.example.empty() + !o.free_gens.empty() + !o.endo.empty();
  if (chosen != 1) throw UsageError("give exactly one of FILE, --example, --free, --endo");
  if (!file.empty()) return from_presentation(Presentation::load(file));
  if (!o.free_gens.empty()) {
    Source s;
    s.alphabet = alphabet_of(o.free_gens);
    s.oracle = make_free_oracle(s.alphabet);
    return s;
  }
  if (!o.endo.empty()) {
    auto k = alphabet_of(o.gens);
    return from_ascending(std::make_shared<AscendingHnnSpec>(Endomorphism::parse(k, o.endo), o.stable));
  }
  if (o.example == "ascending-demo") return from_ascending(std::make_shared<AscendingHnnSpec>(ascending_demo()));
  return from_presentation(find_example(o.example).build(o.r, o.l));
}

// Splits positionals into an optional leading file and `words` trailing
// arguments.
std::string take_file(std::vector<std::string>& pos, std::size_t words) {
  if (pos.size() == words + 1) {
    std::string f = pos.front();
    pos.erase(pos.begin());
    return f;
  }
  if (pos.size() != words) {
    throw UsageError("expected " + std::to_string(words) + " argument(s) after the optional FILE");
  }
  return {};
}

Presentation load_presentation(const SourceOpts& o, const std::string& file) {
  if (!file.empty() && o.example.empty()) return Presentation::load(file);
  if (file.empty() && !o.example.empty()) return find_example(o.example).build(o.r, o.l);
  throw UsageError("give a presentation FILE or --example");
}

RayDescriptor load_ray(const std::string& arg) {
  if (!arg.empty() && arg.front() == '{') return RayDescriptor::from_json(arg);
  return RayDescriptor::from_json(read_file(arg));
}

void write_svg(const std::string& path, const std::string& csv, const AxesSpec& axes) {
  if (path.empty()) return;
  emit(std::cout, path, emit_svg(CsvTable::parse(csv), axes));
}

std::string ball_csv(const Ball& ball) {
  std::string out = "radius,sphere_size,ball_size\n";
  std::size_t total = 0;
  for (std::size_t d = 0; d <= ball.radius(); ++d) {
    total += ball.layer_size(d);
    out += std::to_string(d) + "," + std::to_string(ball.layer_size(d)) + "," + std::to_string(total) + "\n";
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Executable constructions for hyperbolic groups and their subgroups", "hypgrp"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "help for every command");

  // check-sc
  std::string lambda_text = "1/6";
  std::vector<std::string> pos;
  SourceOpts src;
  auto* check_sc = app.add_subcommand("check-sc", "certify the metric small cancellation condition C'(lambda)");
  check_sc->add_option("--lambda", lambda_text, "lambda as p/q")->capture_default_str();
  check_sc->add_option("file", pos, "presentation file");
  check_sc->add_option("--example", src.example, "registry label");
  check_sc->add_option("--r", src.r)->capture_default_str();
  check_sc->add_option("--l", src.l)->capture_default_str();

  // word
  auto* word = app.add_subcommand("word", "word problem");
  word->require_subcommand(1);
  bool show_trace = false;
  auto* word_solve = word->add_subcommand("solve", "decide triviality by Dehn's algorithm");
  word_solve->add_option("args", pos, "[FILE] WORD")->required();
  word_solve->add_option("--example", src.example, "registry label");
  word_solve->add_option("--r", src.r)->capture_default_str();
  word_solve->add_option("--l", src.l)->capture_default_str();
  word_solve->add_flag("--trace", show_trace, "print each Dehn replacement");
  std::string gens_text = "a b";
  auto* word_reduce = word->add_subcommand("reduce", "free reduction");
  word_reduce->add_option("--gens", gens_text)->capture_default_str();
  word_reduce->add_option("args", pos, "WORD")->required();

  // subgroup
  auto* subgroup = app.add_subcommand("subgroup", "finitely generated subgroups of free groups");
  subgroup->require_subcommand(1);
  std::string sub_text, with_text;
  auto* sub_member = subgroup->add_subcommand("member", "membership with an expression in the generators");
  auto* sub_intersect = subgroup->add_subcommand("intersect", "intersection of two subgroups");
  auto* sub_malnormal = subgroup->add_subcommand("malnormal", "malnormality test");
  for (auto* s : {sub_member, sub_intersect, sub_malnormal}) {
    s->add_option("--gens", gens_text, "ambient free generators")->capture_default_str();
    s->add_option("--sub", sub_text, "comma-separated generators")->required();
  }
  sub_member->add_option("args", pos, "WORD")->required();
  sub_intersect->add_option("--with", with_text, "second subgroup")->required();

  // nf
  auto* nf = app.add_subcommand("nf", "normal forms");
  nf->require_subcommand(1);
  std::string endo_text = "a->ab, b->ba", stable = "t";
  auto* nf_britton = nf->add_subcommand("britton", "Britton normal form in an ascending HNN extension");
  nf_britton->add_option("--endo", endo_text)->capture_default_str();
  auto* nf_freeprod = nf->add_subcommand("freeprod", "syllables in K * <t>");
  for (auto* s : {nf_britton, nf_freeprod}) {
    s->add_option("--gens", gens_text)->capture_default_str();
    s->add_option("--stable", stable)->capture_default_str();
    s->add_option("args", pos, "WORD")->required();
  }

  // ray, omega
  auto* ray = app.add_subcommand("ray", "rays in K * <t>");
  ray->require_subcommand(1);
  bool base_ct = false, stable_ct = false;
  auto* ray_classify = ray->add_subcommand("classify", "T-finite or T-infinite");
  auto* ray_landing = ray->add_subcommand("landing", "landing verdict");
  ray_landing->add_flag("--base-ray-ct", base_ct, "the base pair admits a ray CT map");
  ray_landing->add_flag("--stable-ray-ct", stable_ct, "the stable pair admits a ray CT map");
  auto* omega = app.add_subcommand("omega", "membership in the orbit of t^(+-infinity)");
  for (auto* s : {ray_classify, ray_landing, omega}) s->add_option("args", pos, "descriptor JSON file or inline JSON")->required();

  // compose
  auto* compose = app.add_subcommand("compose", "presentation composers");
  compose->require_subcommand(1);
  std::string output, name;
  std::vector<std::string> relations;
  std::string q_text;
  auto* compose_hnn_cmd = compose->add_subcommand("hnn", "new stable letter s with s q s^-1 = image");
  compose_hnn_cmd->add_option("--rel", relations, "q=image (repeatable)")->required();
  auto* compose_amalgam_cmd = compose->add_subcommand("amalgam", "new stable letter acting on Q by an endomorphism");
  compose_amalgam_cmd->add_option("--q", q_text, "comma-separated generators of Q")->required();
  compose_amalgam_cmd->add_option("--endo", endo_text, "endomorphism of Q in terms of q1.. or the generator names")->required();
  auto* compose_pipeline = compose->add_subcommand("baker-riley", "rebuild G_bcd from G_cd with the composers");
  compose_pipeline->add_option("--r", src.r)->capture_default_str();
  compose_pipeline->add_option("--l", src.l)->capture_default_str();
  for (auto* s : {compose_hnn_cmd, compose_amalgam_cmd}) {
    s->add_option("file", pos, "presentation file")->required();
    s->add_option("--stable", stable)->capture_default_str();
  }
  for (auto* s : {compose_hnn_cmd, compose_amalgam_cmd, compose_pipeline}) {
    s->add_option("-o,--output", output, "write here instead of stdout");
    s->add_option("--name", name, "name of the result");
  }

  // ball, dist, gromov, mitra
  std::size_t radius = 4, threads = 0, cap = 0, samples = 4000, points = 12;
  std::uint64_t seed = 1;
  bool delta = false;
  std::string csv_path, svg_path, ray_pattern;
  auto* ball = app.add_subcommand("ball", "sphere and ball sizes by BFS");
  ball->add_flag("--delta", delta, "sample geodesic triangles for a thinness lower bound");
  ball->add_option("--samples", samples)->capture_default_str();
  ball->add_option("--seed", seed)->capture_default_str();
  auto* dist = app.add_subcommand("dist", "word length d(1, w)");
  auto* gromov = app.add_subcommand("gromov", "Gromov product <x, y>_1");
  auto* mitra = app.add_subcommand("mitra", "Mitra table for a periodic inner ray");
  mitra->add_option("--ray", ray_pattern, "period of the inner ray")->required();
  mitra->add_option("--points", points, "ray points 0..N")->capture_default_str();
  for (auto* s : {ball, dist, gromov, mitra}) {
    add_source(s, src);
    s->add_option("--radius", radius)->capture_default_str();
    s->add_option("--threads", threads, "0 = hardware concurrency")->capture_default_str();
    s->add_option("--cap", cap, "element cap (default from HYPGRP_CAP or built in)");
  }
  ball->add_option("file", pos, "presentation file");
  dist->add_option("args", pos, "[FILE] WORD")->required();
  gromov->add_option("args", pos, "[FILE] X Y")->required();
  mitra->add_option("file", pos, "presentation file");
  for (auto* s : {ball, mitra}) s->add_option("--csv", csv_path, "write the table here");
  mitra->add_option("--svg", svg_path, "chart of m_hat against n");

  // probe-jklo
  unsigned n_max = 10;
  auto* jklo = app.add_subcommand("probe-jklo", "finite evidence for the strong JKLO criterion");
  jklo->add_option("--example", src.example, "baker-riley")->required();
  jklo->add_option("--r", src.r)->capture_default_str();
  jklo->add_option("--l", src.l)->capture_default_str();
  jklo->add_option("--n", n_max, "largest index")->capture_default_str();
  jklo->add_option("--csv", csv_path, "write the table here");

  // growth
  std::string seed_word = "a";
  auto* growth = app.add_subcommand("growth", "lengths of phi^k(w)");
  growth->add_option("--endo", endo_text)->capture_default_str();
  growth->add_option("--gens", gens_text)->capture_default_str();
  growth->add_option("--word", seed_word)->capture_default_str();
  growth->add_option("--n", n_max)->capture_default_str();
  growth->add_option("--csv", csv_path);
  growth->add_option("--svg", svg_path, "log-scale chart");

  // distortion, witness
  bool exhaustive = false, witness = false, as_json = false;
  std::size_t digits = WitnessOptions{}.digit_budget;
  auto* distortion = app.add_subcommand("distortion", "distortion tables");
  auto* mode = distortion->add_option_group("mode");
  mode->add_flag("--exhaustive", exhaustive, "exact Dist(n) by BFS");
  mode->add_flag("--witness", witness, "certified witness lower bounds");
  mode->require_option(1);
  add_source(distortion, src);
  distortion->add_option("file", pos, "presentation file (--exhaustive)");
  distortion->add_option("--sub", sub_text, "subgroup generators (--exhaustive in a free group)");
  distortion->add_option("--radius", radius)->capture_default_str();
  distortion->add_option("--threads", threads)->capture_default_str();
  distortion->add_option("--cap", cap);
  distortion->add_option("--csv", csv_path);
  distortion->add_option("--svg", svg_path, "chart of log10 inner length against n");
  auto* witness_cmd = app.add_subcommand("witness", "witness certificates");
  witness_cmd->add_flag("--json", as_json, "emit JSON (the only format)");
  witness_cmd->add_option("--example", src.example, "baker-riley or ascending-demo")->required();
  witness_cmd->add_option("-o,--output", output);
  for (auto* s : {distortion, witness_cmd}) {
    s->add_option("--n", n_max)->capture_default_str();
    s->add_option("--word", seed_word, "seed for ascending witnesses")->capture_default_str();
    s->add_option("--digits", digits, "largest exact inner length kept, in digits")->capture_default_str();
  }
  witness_cmd->add_option("--r", src.r)->capture_default_str();
  witness_cmd->add_option("--l", src.l)->capture_default_str();

  // example
  auto* example = app.add_subcommand("example", "registry of named presentations");
  example->require_subcommand(1);
  auto* example_list = example->add_subcommand("list", "labels and descriptions");
  auto* example_emit = example->add_subcommand("emit", "write a presentation file");
  example_emit->add_option("label", pos)->required();
  example_emit->add_option("--r", src.r)->capture_default_str();
  example_emit->add_option("--l", src.l)->capture_default_str();
  example_emit->add_option("-o,--output", output);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  auto ball_options = [&] {
    BallOptions o;
    o.cap = cap ? cap : default_ball_cap();
    o.threads = threads;
    return o;
  };

  try {
    if (*check_sc) {
      const std::string file = pos.empty() ? std::string() : pos.front();
      if (pos.size() > 1) throw UsageError("check-sc takes one FILE");
      const Presentation p = load_presentation(src, file);
      const Rational lambda = Rational::parse(lambda_text);
      const auto res = check_metric(p, lambda);
      std::string ratio = "0/1";
      if (res.table.worst) {
        const std::size_t w = *res.table.worst;
        ratio = std::to_string(res.table.max_piece[w]) + "/" + std::to_string(res.table.relator_length[w]);
      }
      if (res.holds) {
        out << "OK: C'(" << lambda.to_string() << "); max piece ratio " << ratio << "\n";
      } else {
        out << "FAIL: not C'(" << lambda.to_string() << "); max piece ratio " << ratio;
        if (res.table.witness) {
          const Word& piece = res.table.witness->piece;
          out << "; piece \"" << (piece.alphabet()->single_char() ? format_word(piece) : format_word_compact(piece))
              << "\" in relator "
              << res.table.witness->first.relator + 1 << " at offset " << res.table.witness->first.offset
              << " and relator " << res.table.witness->second.relator + 1 << " at offset "
              << res.table.witness->second.offset;
        }
        out << "\n";
      }
    } else if (*word_solve) {
      const std::string file = take_file(pos, 1);
      const Presentation p = load_presentation(src, file);
      DehnSolver solver(p);
      auto res = solver.reduce(parse_word(p.alphabet(), pos.back()));
      out << (res.trivial() ? "trivial" : "nontrivial") << "\n";
      if (!res.trivial()) out << "reduced: " << format_word(res.word) << "\n";
      if (show_trace) {
        for (const auto& s : res.trace) {
          out << "at " << s.position << ": " << format_word(s.removed) << " -> "
              << (s.inserted.empty() ? std::string("1") : format_word(s.inserted)) << " (relator " << s.relator + 1
              << ", length " << s.length_after << ")\n";
        }
      }
    } else if (*word_reduce) {
      auto w = parse_word(alphabet_of(gens_text), pos.front());
      out << (w.empty() ? std::string("1") : format_word(w)) << "\n";
    } else if (*subgroup) {
      const auto alpha = alphabet_of(gens_text);
      const auto gens = word_list(alpha, sub_text);
      const auto g = SubgroupGraph::build(alpha, gens);
      if (*sub_member) {
        auto expr = express_in_generators(g, parse_word(alpha, pos.front()));
        if (expr) {
          out << "member: " << (expr->empty() ? std::string("1") : format_word(*expr)) << "\n";
        } else {
          out << "not a member\n";
        }
      } else if (*sub_intersect) {
        const auto other = SubgroupGraph::build(alpha, word_list(alpha, with_text));
        const auto meet = intersect(g, other);
        out << "rank " << meet.rank() << "\n";
        for (const auto& b : meet.basis()) out << format_word(b) << "\n";
      } else {
        const auto res = is_malnormal(g);
        if (res.malnormal) {
          out << "malnormal\n";
        } else {
          out << "not malnormal: conjugator " << format_word(*res.conjugator) << ", witness "
              << format_word(*res.witness) << "\n";
        }
      }
    } else if (*nf_britton) {
      const auto k = alphabet_of(gens_text);
      AscendingHnnSpec spec(Endomorphism::parse(k, endo_text), stable);
      const auto raw = parse_letters(spec.full_alphabet(), pos.front());
      out << britton_normal_form(spec, raw).to_string() << "\n";
    } else if (*nf_freeprod) {
      const auto k = alphabet_of(gens_text);
      const auto raw = parse_letters(k->extended({stable}), pos.front());
      const auto form = freeprod_normal_form(k, stable, raw);
      out << form.to_string() << "\n";
      out << "tree-distance " << bass_serre_projection(form).length() << "\n";
    } else if (*ray_classify) {
      out << to_string(classify_ray(load_ray(pos.front()))) << "\n";
    } else if (*ray_landing) {
      out << to_string(landing_verdict(load_ray(pos.front()), ComponentFlags{base_ct, stable_ct})) << "\n";
    } else if (*omega) {
      out << (omega_membership(load_ray(pos.front())) ? "in-omega" : "not-in-omega") << "\n";
    } else if (*compose_hnn_cmd || *compose_amalgam_cmd) {
      const Presentation h = Presentation::load(pos.front());
      Presentation result = [&] {
        if (*compose_hnn_cmd) {
          std::vector<std::pair<Word, Word>> rels;
          for (const auto& r : relations) {
            auto eq = r.find('=');
            if (eq == std::string::npos) throw UsageError("--rel expects q=image");
            rels.emplace_back(parse_word(h.alphabet(), r.substr(0, eq)), parse_word(h.alphabet(), r.substr(eq + 1)));
          }
          return compose_hnn(h, stable, rels, name);
        }
        const auto q_gens = word_list(h.alphabet(), q_text);
        std::vector<std::string> q_names;
        for (const auto& q : q_gens) {
          if (q.size() == 1 && q[0].positive()) q_names.push_back(h.alphabet()->name(q[0].generator()));
        }
        if (q_names.size() != q_gens.size()) {
          q_names.clear();
          for (std::size_t i = 0; i < q_gens.size(); ++i) q_names.push_back("q" + std::to_string(i + 1));
        }
        return compose_amalgam(h, q_gens, Endomorphism::parse(Alphabet::make(q_names), endo_text), stable, name);
      }();
      emit(out, output, result.to_text());
    } else if (*compose_pipeline) {
      auto pipe = baker_riley_pipeline(baker_riley(src.r, src.l));
      emit(out, output, pipe.g.to_text());
    } else if (*ball) {
      const std::string file = take_file(pos, 0);
      const Source s = resolve(src, file);
      const Ball b = build_ball(s.oracle, radius, ball_options());
      if (b.truncated()) {
        err << "note: cap reached; complete up to radius " << b.radius() << " of " << radius << "\n";
      }
      if (delta) {
        const auto est = estimate_delta(b, samples, seed);
        out << "delta >= " << fixed(est.lower_bound, 1) << " (" << est.triangles << " triangles, radius "
            << b.radius() << ", seed " << seed << ")\n";
      } else {
        emit(out, csv_path, ball_csv(b));
      }
    } else if (*dist) {
      const std::string file = take_file(pos, 1);
      const Source s = resolve(src, file);
      const Ball b = build_ball(s.oracle, radius, ball_options());
      const auto d = distance(b, parse_word(s.alphabet, pos.back()));
      if (d.exact) {
        out << "distance " << *d.exact << "\n";
      } else {
        out << "distance >= " << d.lower_bound << "\n";
      }
    } else if (*gromov) {
      const std::string file = take_file(pos, 2);
      const Source s = resolve(src, file);
      const Ball b = build_ball(s.oracle, radius, ball_options());
      const auto g = gromov_product(b, parse_word(s.alphabet, pos[0]), parse_word(s.alphabet, pos[1]));
      if (g.known()) {
        out << "gromov " << fixed(g.value(), 1) << "\n";
      } else {
        out << "gromov unknown (beyond radius " << b.radius() << ")\n";
      }
    } else if (*mitra) {
      const std::string file = take_file(pos, 0);
      const Source s = resolve(src, file);
      const Ball b = build_ball(s.oracle, radius, ball_options());
      const Word pattern = parse_word(s.alphabet, ray_pattern);
      if (pattern.empty()) throw Error("mitra: the ray period is trivial");
      std::vector<Letter> stream;
      while (stream.size() < points) {
        for (Letter l : pattern.letters()) stream.push_back(l);
      }
      std::vector<Word> pts;
      std::vector<std::size_t> inner;
      for (std::size_t i = 0; i <= points; ++i) {
        pts.push_back(Word::reduce(s.alphabet, std::span<const Letter>(stream.data(), i)));
        inner.push_back(pts.back().size());
      }
      const auto table = mitra_table(b, pts, inner);
      std::string csv = "n,m_hat,pairs,unreachable\n";
      for (const auto& row : table.rows) {
        csv += std::to_string(row.n) + "," + (row.m_hat ? fixed(*row.m_hat, 1) : std::string()) + "," +
               std::to_string(row.pairs) + "," + std::to_string(row.unreachable) + "\n";
      }
      emit(out, csv_path, csv);
      write_svg(svg_path, csv, {"n", "m_hat", "Mitra table", false});
    } else if (*jklo) {
      if (src.example != "baker-riley") throw UsageError("probe-jklo supports --example baker-riley");
      const auto family = baker_riley(src.r, src.l);
      const auto fams = baker_riley_jklo_families(family, n_max);
      const DehnSolver solver(family.G_bcd());
      const auto rep = jklo_probe(solver, fams.a, fams.b);
      out << "outer: G_bcd (r=" << src.r << ", l=" << src.l << "); spellings avoid a\n";
      out << "inner family a: w_n, n = 0.." << n_max << "\n";
      out << "inner family b: b^m, m = 0.." << n_max << "\n";
      out << "a diverges: " << yes(rep.a_diverges) << "\n";
      out << "b quasigeodesic: " << yes(rep.b_quasigeodesic) << " (" << rep.b_certificate << ")\n";
      out << "distinct inner limits: " << yes(rep.distinct_limits) << "\n";
      out << "prefix bound unbounded: " << yes(rep.unbounded) << "\n";
      out << "evidence: " << yes(rep.evidence) << " (finite evidence only)\n";
      std::string csv = "n,m,prefix_bound\n";
      for (const auto& row : rep.rows) {
        csv += std::to_string(row.n) + "," + std::to_string(row.m) + "," + std::to_string(row.prefix_bound) + "\n";
      }
      if (csv_path.empty()) out << "\n";
      emit(out, csv_path, csv);
    } else if (*growth) {
      const auto k = alphabet_of(gens_text);
      const auto phi = Endomorphism::parse(k, endo_text);
      const auto report = conjugate_growth_report(phi, parse_word(k, seed_word), n_max);
      const std::string csv = growth_csv(report);
      emit(out, csv_path, csv);
      write_svg(svg_path, csv, {"k", "log10_length", "growth of " + seed_word + " under " + endo_text, false});
    } else if (*distortion) {
      std::string csv;
      if (exhaustive) {
        const std::string file = take_file(pos, 0);
        const Source s = resolve(src, file);
        const Ball b = build_ball(s.oracle, radius, ball_options());
        if (b.truncated()) throw Error("distortion: cap reached at radius " + std::to_string(b.radius()));
        std::optional<SubgroupGraph> h;
        InnerLength inner;
        if (!sub_text.empty()) {
          if (s.presentation && !s.presentation->relators().empty()) {
            throw UsageError("--sub needs a free ambient group");
          }
          h = SubgroupGraph::build(s.alphabet, word_list(s.alphabet, sub_text));
          inner = free_subgroup_inner_length(*h);
        } else if (s.ascending) {
          inner = base_subgroup_inner_length(*s.ascending);
        } else {
          throw UsageError("--exhaustive needs --sub or an ascending HNN extension");
        }
        csv = distortion_csv(distortion_table_exhaustive(b, inner, std::min(radius, b.radius())));
      } else {
        WitnessOptions wo;
        wo.digit_budget = digits;
        if (src.example == "baker-riley") {
          csv = distortion_csv(witness_lower_bound_table(baker_riley_witnesses(src.r, src.l, n_max, wo)));
        } else if (src.example == "ascending-demo" || !src.endo.empty()) {
          const auto spec = src.endo.empty()
                                ? ascending_demo()
                                : AscendingHnnSpec(Endomorphism::parse(alphabet_of(src.gens), src.endo), src.stable);
          csv = distortion_csv(
              witness_lower_bound_table(ascending_witnesses(spec, parse_word(spec.base(), seed_word), n_max, wo)));
        } else {
          throw UsageError("--witness needs --example baker-riley, --example ascending-demo or --endo");
        }
      }
      emit(out, csv_path, csv);
      write_svg(svg_path, csv, {"n", "log10_inner", "distortion", false});
    } else if (*witness_cmd) {
      (void)as_json;
      WitnessOptions wo;
      wo.digit_budget = digits;
      std::string json;
      if (src.example == "baker-riley") {
        json = witnesses_json(baker_riley_witnesses(src.r, src.l, n_max, wo));
      } else if (src.example == "ascending-demo") {
        const auto spec = ascending_demo();
        json = witnesses_json(ascending_witnesses(spec, parse_word(spec.base(), seed_word), n_max, wo));
      } else {
        throw UsageError("witness supports --example baker-riley or ascending-demo");
      }
      emit(out, output, json);
    } else if (*example_list) {
      for (const auto& e : example_registry()) out << e.label << "\t" << e.description << "\n";
    } else if (*example_emit) {
      const auto& e = find_example(pos.front());
      emit(out, output, e.build(src.r, src.l).to_text());
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace hypgrp::cli
