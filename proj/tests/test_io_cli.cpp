/*
   Copyright 2026 The apolar authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "apolar/cli.hpp"
#include "apolar/io.hpp"
#include "apolar/pipelines.hpp"

using namespace apolar;

namespace {

int run_cli(const std::vector<std::string>& args, std::string* out_text = nullptr,
            std::string* err_text = nullptr) {
  std::ostringstream out, err;
  int code = cli_dispatch(args, out, err);
  if (out_text) *out_text = out.str();
  if (err_text) *err_text = err.str();
  return code;
}

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = "/tmp/apolar_test_" + name;
  std::ofstream f(path);
  f << content;
  return path;
}

}  // namespace

TEST_CASE("ideal files round trip") {
  std::string text = "ring x,y,z over qq\nx^2-y*z\n3*x*y-2*z^2\n";
  Ideal i = parse_ideal_file(text);
  CHECK(i.ring()->vars == std::vector<std::string>{"x", "y", "z"});
  CHECK(i.generators().size() == 2);
  CHECK(write_ideal_file(i) == text);

  Ideal fp = parse_ideal_file("# comment\nring u,v over fp:7\nu^2+6*v^2\n");
  CHECK(fp.ring()->field.characteristic() == 7);
}

TEST_CASE("ideal files report malformed lines") {
  CHECK_THROWS_AS(parse_ideal_file("x^2-y\n"), ParseError);
  CHECK_THROWS_AS(parse_ideal_file("ring x,y over qq\nx^2 + + y\n"), ParseError);
  try {
    parse_ideal_file("ring x,y over qq\nx^2\nq*y\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("certificate subcommand prints the bound") {
  std::string out;
  int code = run_cli({"certify", "--dh", "1,2,3,4,5,6,6,2,1", "--degree", "13"}, &out);
  CHECK(code == 0);
  CHECK(out == "30\n");

  code = run_cli({"--json", "certify", "--dh", "1,2,3,4,5,6,6,2,1", "--degree", "13"}, &out);
  CHECK(code == 0);
  auto j = nlohmann::json::parse(out);
  CHECK(j["bound"] == 30);
  CHECK(j["witness_profile"].size() == 15);
  CHECK(j["constraints_checked"].get<long>() > 0);
}

TEST_CASE("hilbert-function subcommand and its error paths") {
  std::string path = write_temp("conic.ideal", "ring x,y,z over qq\nx*z-y^2\n");
  std::string out, err;
  CHECK(run_cli({"hf", path, "--max-degree", "4"}, &out) == 0);
  CHECK(out == "1,3,5,7,9\n");

  std::string bad = write_temp("bad.ideal", "ring x,y,z over qq\nx^2 @ y\n");
  CHECK(run_cli({"hf", bad}, &out, &err) == 2);
  CHECK(err.find("position") != std::string::npos);

  CHECK(run_cli({"hf", "/nonexistent/path.ideal"}, &out, &err) == 2);
  CHECK(run_cli({"hf"}, &out, &err) == 2);  // missing argument
}

TEST_CASE("groebner subcommand honors the order flag and budget") {
  std::string path = write_temp("elim.ideal", "ring x,y over qq\nx^2-y\nx*y-1\n");
  std::string out, err;
  CHECK(run_cli({"gb", path, "--order", "lex"}, &out) == 0);
  CHECK(out.find("y^3-1") != std::string::npos);

  CHECK(run_cli({"gb", path, "--order", "lex", "--budget", "1"}, &out, &err) == 3);
  CHECK(err.find("budget") != std::string::npos);
  set_spair_budget(0);  // restore the default for later tests
}

TEST_CASE("link subcommand computes the residual points") {
  // two conics through one rational point; the residue has three points
  std::string ci = write_temp("ci.ideal", "ring x,y,z over qq\ny^2-x*z\ny*z-x^2\n");
  std::string pt = write_temp("pt.ideal", "ring x,y,z over qq\nx-y\ny-z\n");
  std::string out;
  CHECK(run_cli({"--json", "link", ci, pt}, &out) == 0);
  auto j = nlohmann::json::parse(out);
  CHECK(j["degree"] == 3);
}

TEST_CASE("apolar-common subcommand finds the shared power") {
  std::string i1 = write_temp("p1.ideal", "ring x,y,z over qq\ny\nz\n");
  std::string out;
  CHECK(run_cli({"apolar-common", i1, i1, "--degree", "2"}, &out) == 0);
  CHECK(out.find("kernel dimension 1") != std::string::npos);
  CHECK(out.find("x^2") != std::string::npos);
}

TEST_CASE("usage errors exit with code two") {
  std::string out, err;
  CHECK(run_cli({"no-such-command"}, &out, &err) == 2);
  CHECK(run_cli({"example2", "--field", "fp:15"}, &out, &err) == 2);
  CHECK(run_cli({"certify", "--degree", "3"}, &out, &err) == 2);  // missing --dh
  CHECK(run_cli({}, &out, &err) == 2);

  CHECK(run_cli({"--help"}, &out, &err) == 0);
  CHECK(out.find("example2") != std::string::npos);
  CHECK(out.find("certify") != std::string::npos);
}

TEST_CASE("the pipeline subcommand emits a machine-readable report") {
  std::string out;
  int code = run_cli({"example2", "--field", "fp:32003", "--seed", "7", "--json"}, &out);
  CHECK(code == 0);
  auto j = nlohmann::json::parse(out);
  CHECK(j["ok"] == true);
  CHECK(j["flags"]["rank_bound"] == 30);
  CHECK(j["seed"] == 7);
}

TEST_CASE("pipeline reports are reproducible and internally consistent") {
  RandomConfig cfg;
  cfg.seed = 11;
  Field field = Field::prime(32003);
  PipelineReport a = run_example2(cfg, field);
  PipelineReport b = run_example2(cfg, field);
  CHECK(a.to_json().dump(2) == b.to_json().dump(2));
  CHECK(a.ok);

  // every printed Hilbert row matches a recomputation from the printed ideal
  for (const auto& stage : a.stages) {
    if (stage.ideal.empty() || stage.hilbert.empty()) continue;
    std::string file_text = stage.ring + "\n";
    for (const auto& g : stage.ideal) file_text += g + "\n";
    Ideal parsed = parse_ideal_file(file_text);
    CHECK(hilbert_function(parsed, static_cast<int>(stage.hilbert.size()) - 1) == stage.hilbert);
  }
}

TEST_CASE("serialization helpers emit the documented shapes") {
  RingPtr s = ternary_ring(Field::rationals());
  const Field& k = s->field;
  PointSet two(s, {ProjectivePoint(k.one(), k.from_fraction(1, 2), k.one()),
                   ProjectivePoint(k.zero(), k.one(), k.zero())});
  nlohmann::json pts = pointset_json(two);
  REQUIRE(pts.size() == 2);
  CHECK(pts[0][1] == "1/2");

  auto coeffs = decompose_on_points(
      Polynomial::parse(s, "x^2+3*y^2"), PointSet(s, {ProjectivePoint(k.one(), k.zero(), k.zero()),
                                                      ProjectivePoint(k.zero(), k.one(), k.zero())}));
  REQUIRE(coeffs.has_value());
  nlohmann::json dec = decomposition_json(
      PointSet(s, {ProjectivePoint(k.one(), k.zero(), k.zero()),
                   ProjectivePoint(k.zero(), k.one(), k.zero())}),
      *coeffs);
  REQUIRE(dec.size() == 2);
  CHECK(dec[0]["coefficient"] == "1");
  CHECK(dec[1]["coefficient"] == "3");
  CHECK(dec[1]["point"][1] == "1");

  HilbertProfile p = HilbertProfile::from_dh({1, 2, 1});
  CHECK(profile_json(p).dump() == "[1,2,1]");
}

TEST_CASE("pipeline stage ideals drive the file-based subcommands") {
  RandomConfig cfg;
  PipelineReport r = run_example2(cfg, Field::prime(32003));
  const StageRecord* z1 = nullptr;
  for (const auto& s : r.stages)
    if (s.name == "residue-first") z1 = &s;
  REQUIRE(z1 != nullptr);

  std::string text = z1->ring + "\n";
  for (const auto& g : z1->ideal) text += g + "\n";
  std::string path = write_temp("stage.ideal", text);

  std::string out;
  CHECK(run_cli({"hf", path, "--max-degree", "13"}, &out) == 0);
  CHECK(out == "1,3,6,10,15,21,27,29,30,30,30,30,30,30\n");

  CHECK(run_cli({"gb", path}, &out) == 0);
  int lines = 0;
  for (char c : out)
    if (c == '\n') ++lines;
  CHECK(lines == static_cast<int>(z1->ideal.size()));  // already a reduced basis
}

TEST_CASE("the pipeline rejects fields at or below the form degree") {
  RandomConfig cfg;
  CHECK_THROWS_AS(run_example2(cfg, Field::prime(13)), std::invalid_argument);
  CHECK_THROWS_AS(run_example1(cfg, Field::prime(7)), std::invalid_argument);
}
