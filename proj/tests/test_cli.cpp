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

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "hypgrp/examples.hpp"
#include "json.hpp"
#include "svg.hpp"

using namespace hypgrp;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch() {
  static const auto dir = [] {
    auto d = std::filesystem::temp_directory_path() / ("hypgrp_cli_" + std::to_string(::getpid()));
    std::filesystem::create_directories(d);
    return d;
  }();
  return dir;
}

std::string write(const std::string& name, const std::string& text) {
  auto p = scratch() / name;
  std::ofstream(p) << text;
  return p.string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::pair<double, double>> polyline(const std::string& svg) {
  std::smatch m;
  REQUIRE(std::regex_search(svg, m, std::regex("points=\"([^\"]*)\"")));
  std::vector<std::pair<double, double>> pts;
  std::istringstream in(m[1].str());
  for (std::string tok; in >> tok;) {
    auto comma = tok.find(',');
    pts.emplace_back(std::stod(tok.substr(0, comma)), std::stod(tok.substr(comma + 1)));
  }
  return pts;
}

}  // namespace

TEST_CASE("check-sc and word solve") {
  const auto genus2 = write("genus2.pres", "gens: a b c d\nrel: abABcdCD\n");
  auto r = call({"check-sc", "--lambda", "1/6", genus2});
  CHECK(r.code == 0);
  CHECK(r.out == "OK: C'(1/6); max piece ratio 1/8\n");

  r = call({"check-sc", "--example", "abab"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("FAIL: not C'(1/6); max piece ratio 3/4; piece \"aba\"", 0) == 0);

  r = call({"check-sc", "--example", "baker-riley-cd"});
  CHECK(r.out == "OK: C'(1/6); max piece ratio 136/1040\n");

  r = call({"word", "solve", genus2, "abABcdCD"});
  CHECK(r.code == 0);
  CHECK(r.out == "trivial\n");
  r = call({"word", "solve", genus2, "abAB"});
  CHECK(r.out == "nontrivial\nreduced: abAB\n");
  r = call({"word", "solve", "--example", "genus2", "--trace", "abABcaacdCDabA"});
  CHECK(r.out.find("at 7: cdCDabA -> b") != std::string::npos);

  r = call({"word", "reduce", "--gens", "a b", "abBA"});
  CHECK(r.out == "1\n");
}

TEST_CASE("exit codes") {
  CHECK(call({}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({"check-sc", "--lambda"}).code == 2);
  CHECK(call({"word", "solve"}).code == 2);
  CHECK(call({"distortion", "--witness", "--exhaustive", "--example", "baker-riley"}).code == 2);
  CHECK(call({"dist", "--free", "a b", "--example", "genus2", "ab"}).code == 2);
  CHECK(call({"--help"}).code == 0);

  auto r = call({"word", "solve", "--example", "abab", "ab"});
  CHECK(r.code == 1);
  CHECK(r.err.find("not C'(1/6)") != std::string::npos);
  CHECK(call({"check-sc", (scratch() / "missing.pres").string()}).code == 1);
  CHECK(call({"word", "solve", "--example", "genus2", "axe"}).code == 1);
  CHECK(call({"example", "emit", "nope"}).code == 1);
  CHECK(call({"ray", "classify", "{\"tail\": {\"kind\": \"sideways\"}}"}).code == 1);
}

TEST_CASE("example emit round-trips") {
  for (const auto& e : example_registry()) {
    auto r = call({"example", "emit", e.label, "--r", "5", "--l", "3"});
    REQUIRE(r.code == 0);
    CHECK(Presentation::parse(r.out) == e.build(5, 3));
    const auto path = write(e.label + ".pres", r.out);
    CHECK(Presentation::load(path) == e.build(5, 3));
  }
  auto list = call({"example", "list"});
  CHECK(list.out.find("baker-riley-g\t") != std::string::npos);
}

TEST_CASE("subgroups, normal forms and rays") {
  CHECK(call({"subgroup", "member", "--sub", "aa,bb", "aabbAA"}).out == "member: g1 g2 G1\n");
  CHECK(call({"subgroup", "member", "--sub", "aa,bb", "ab"}).out == "not a member\n");
  CHECK(call({"subgroup", "malnormal", "--sub", "a,bab"}).out.rfind("not malnormal", 0) == 0);
  CHECK(call({"subgroup", "malnormal", "--sub", "a"}).out == "malnormal\n");
  CHECK(call({"subgroup", "intersect", "--sub", "a,b", "--with", "aa,bab"}).out.rfind("rank 2\n", 0) == 0);

  CHECK(call({"nf", "britton", "taT"}).out == "[ab]\n");
  CHECK(call({"nf", "britton", "Tat"}).out == "[t^-1][a][t]\n");
  CHECK(call({"nf", "freeprod", "atbtat"}).out == "[a][t][b][t][a][t]\ntree-distance 6\n");

  const auto ray = write("ray.json", R"({"prefix": "ab", "tail": {"kind": "stable+"}})");
  CHECK(call({"ray", "classify", ray}).out == "T-finite-stable\n");
  CHECK(call({"omega", ray}).out == "in-omega\n");
  const std::string periodic = R"({"prefix": "", "tail": {"kind": "periodic", "pattern": "at"}})";
  CHECK(call({"ray", "classify", periodic}).out == "T-infinite\n");
  CHECK(call({"ray", "landing", periodic}).out == "lands\n");
  CHECK(call({"omega", periodic}).out == "not-in-omega\n");
}

TEST_CASE("compose") {
  auto r = call({"compose", "baker-riley", "--r", "4", "--l", "2"});
  REQUIRE(r.code == 0);
  CHECK(Presentation::parse(r.out) == baker_riley(4, 2).G_bcd());
  CHECK(r.out.find("# assume: H is hyperbolic") != std::string::npos);

  const auto cd = write("cd.pres", baker_riley(4, 2).G_cd().to_text());
  std::string psi;
  {
    auto f = baker_riley(4, 2);
    psi = "c1->" + format_word(f.C_i(1)) + ", c2->" + format_word(f.C_i(2));
  }
  r = call({"compose", "amalgam", cd, "--q", "c1,c2", "--endo", psi, "--stable", "b"});
  REQUIRE(r.code == 0);
  CHECK(Presentation::parse(r.out) == baker_riley(4, 2).G_bcd());

  const auto genus2 = write("g2.pres", "gens: a b c d\nrel: abABcdCD\n");
  r = call({"compose", "hnn", genus2, "--stable", "s", "--rel", "a=b"});
  CHECK(r.out == "gens: a b c d s\nrel: abABcdCD\nrel: saSB\n");
}

TEST_CASE("balls and metric commands") {
  auto r = call({"ball", "--free", "a b", "--radius", "5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\n5,324,485\n") != std::string::npos);
  r = call({"ball", "--example", "genus2", "--radius", "3", "--threads", "2"});
  CHECK(r.out.find("\n3,392,457\n") != std::string::npos);
  r = call({"ball", "--free", "a b", "--radius", "5", "--cap", "100"});
  CHECK(r.err.find("cap reached") != std::string::npos);
  CHECK(r.out.find("\n3,36,53\n") != std::string::npos);

  CHECK(call({"dist", "--example", "genus2", "--radius", "4", "abAB"}).out == "distance 4\n");
  CHECK(call({"dist", "--example", "genus2", "--radius", "3", "abcdab"}).out == "distance >= 4\n");
  CHECK(call({"gromov", "--free", "a b", "--radius", "6", "aab", "aba"}).out == "gromov 1.0\n");

  auto d1 = call({"ball", "--example", "genus2", "--radius", "3", "--delta", "--seed", "7", "--samples", "300"});
  auto d2 = call({"ball", "--example", "genus2", "--radius", "3", "--delta", "--seed", "7", "--samples", "300"});
  CHECK(d1.code == 0);
  CHECK(d1.out == d2.out);

  r = call({"mitra", "--free", "a b", "--ray", "a", "--points", "6", "--radius", "6"});
  CHECK(r.out.rfind("n,m_hat,pairs,unreachable\n0,0.0,", 0) == 0);
}

TEST_CASE("growth, distortion and witnesses") {
  auto r = call({"growth", "--endo", "a->ab, b->ba", "--word", "a", "--n", "12"});
  CHECK(r.out.find("\n12,4096,3.612360\n") != std::string::npos);

  const auto csv = (scratch() / "out.csv").string();
  r = call({"distortion", "--witness", "--example", "baker-riley", "--r", "17", "--l", "2", "--n", "12", "--csv", csv});
  REQUIRE(r.code == 0);
  const auto table = cli::CsvTable::parse(slurp(csv));
  CHECK(table.columns == std::vector<std::string>{"n", "outer_len", "inner_len_decimal", "log10_inner"});
  REQUIRE(table.rows.size() == 13);
  CHECK(table.rows[0][2] == "1037");
  CHECK(table.rows[12][1] == "51");
  CHECK(std::regex_match(table.rows[1][2], std::regex("[0-9]{1400,}")));

  r = call({"distortion", "--exhaustive", "--free", "a b", "--sub", "aa,bb", "--radius", "6"});
  CHECK(r.out.find("\n6,6,3,") != std::string::npos);
  r = call({"distortion", "--exhaustive", "--example", "ascending-demo", "--radius", "5"});
  CHECK(r.code == 0);
  r = call({"distortion", "--witness", "--example", "ascending-demo", "--n", "4"});
  CHECK(r.out.find("\n4,9,16,") != std::string::npos);

  r = call({"witness", "--json", "--example", "baker-riley", "--n", "3"});
  auto json = nlohmann::json::parse(r.out);
  CHECK(json.size() == 4);
  CHECK(json[0]["inner_length"]["decimal"] == "1037");
  CHECK(json[2]["derivation"] == "matrix-log");
}

TEST_CASE("probe-jklo") {
  auto r = call({"probe-jklo", "--example", "baker-riley", "--n", "5"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("a diverges: yes") != std::string::npos);
  CHECK(r.out.find("prefix bound unbounded: yes") != std::string::npos);
  CHECK(r.out.find("\n5,5,5\n") != std::string::npos);
  CHECK(call({"probe-jklo", "--example", "genus2"}).code == 2);
}

TEST_CASE("svg charts") {
  const auto svg_path = (scratch() / "growth.svg").string();
  auto r = call({"growth", "--n", "10", "--svg", svg_path});
  REQUIRE(r.code == 0);
  const auto svg = slurp(svg_path);
  CHECK(svg.rfind("<svg", 0) == 0);
  auto pts = polyline(svg);
  REQUIRE(pts.size() == 11);
  // 2^k on a log axis is a straight line.
  const double slope = (pts[1].second - pts[0].second) / (pts[1].first - pts[0].first);
  for (std::size_t i = 2; i < pts.size(); ++i) {
    CHECK((pts[i].second - pts[0].second) / (pts[i].first - pts[0].first) == doctest::Approx(slope).epsilon(0.01));
  }
  call({"growth", "--n", "10", "--svg", svg_path});
  CHECK(slurp(svg_path) == svg);

  const auto br = (scratch() / "br.svg").string();
  call({"distortion", "--witness", "--example", "baker-riley", "--n", "6", "--svg", br});
  auto bp = polyline(slurp(br));
  REQUIRE(bp.size() == 7);
  for (std::size_t i = 1; i < bp.size(); ++i) CHECK(bp[i].second <= bp[i - 1].second);  // y grows upward
  for (std::size_t i = 2; i < bp.size(); ++i) {
    CHECK(bp[i].second - bp[i - 1].second <= bp[i - 1].second - bp[i - 2].second + 1e-9);
  }

  auto one = cli::CsvTable::parse("k,v\n1,2\n");
  CHECK_THROWS_AS(cli::emit_svg(one, {"k", "v", "t", false}), Error);
  auto words = cli::CsvTable::parse("k,v\n1,2\n2,x\n");
  CHECK_THROWS_AS(cli::emit_svg(words, {"k", "v", "t", false}), Error);
  auto log = cli::CsvTable::parse("k,v\n0,1\n1,10\n2,100\n");
  auto lp = polyline(cli::emit_svg(log, {"k", "v", "t", true}));
  CHECK(lp[1].second - lp[0].second == doctest::Approx(lp[2].second - lp[1].second));
}
