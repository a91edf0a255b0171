/**************************************************************************
 * tests/test_cli.cpp
 *
 * Copyright 2026 The galtower Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "galtower/cli.hpp"
#include "galtower/errors.hpp"

namespace galtower {
namespace {

namespace fs = std::filesystem;

const fs::path kTowers = GALTOWER_TOWER_DIR;

struct CliRun {
  int rc;
  std::string out;
  std::string err;
};

CliRun cli(std::vector<std::string> args) {
  args.insert(args.begin(), "galtower");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int rc = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {rc, out.str(), err.str()};
}

Json structured(const std::vector<std::string>& args) {
  std::vector<std::string> a = args;
  a.push_back("--format");
  a.push_back("structured");
  const CliRun r = cli(a);
  EXPECT_EQ(r.rc, 0) << r.err;
  return Json::parse(r.out);
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("galtower-test-" + name + "-" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()));
  fs::remove_all(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

TEST(TowerFile, ParsesSample) {
  const TowerFile f = parse_tower_file(kTowers / "mixed.tower");
  EXPECT_EQ(f.spec.base.ff.p, 3u);
  EXPECT_EQ(f.spec.base.variables, (std::vector<std::string>{"x", "y"}));
  ASSERT_EQ(f.spec.generators.size(), 2u);
  EXPECT_EQ(f.spec.generators[0].name, "u");
  EXPECT_EQ(f.spec.generators[0].power, 3u);
  ASSERT_EQ(f.subfields.size(), 2u);
  EXPECT_EQ(f.subfields[1].name, "Lgal");
  EXPECT_FALSE(f.designated);
}

TEST(TowerFile, SerializeRoundTrip) {
  for (const auto& entry : fs::directory_iterator(kTowers)) {
    const TowerFile f = parse_tower_file(entry.path());
    const std::string text = serialize_tower_file(f);
    EXPECT_EQ(parse_tower_text(text), f) << entry.path();
    EXPECT_EQ(serialize_tower_file(parse_tower_text(text)), text);
  }
  const TowerFile g = parse_tower_text(
      "field p=2 modulus=1,1,1\nvars x\ngen s^3 = a*x\nsubfield S = s^2\ndesignate F = S\n");
  EXPECT_EQ(g.spec.base.ff.modulus, (std::vector<std::uint32_t>{1, 1, 1}));
  EXPECT_EQ(parse_tower_text(serialize_tower_file(g)), g);
}

TEST(TowerFile, ParseErrorPosition) {
  try {
    parse_tower_text("field p=3\nvars x\ngen u^3 = x +* 1\n");
    FAIL() << "no error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
    EXPECT_GT(e.column(), 11);
  }
  try {
    parse_tower_text("field p=3\nvars x\nbogus\n");
    FAIL() << "no error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
    EXPECT_EQ(e.column(), 1);
  }
  EXPECT_THROW(parse_tower_text("vars x\n"), ParseError);
  EXPECT_THROW(parse_tower_text("field p=3\nvars x\ngen u^q = x\n"), ParseError);
  EXPECT_THROW(parse_tower_text("field p=3\nvars x x\n"), ParseError);
}

TEST(TowerFile, NameResolution) {
  EXPECT_THROW(parse_tower_text("field p=3\nvars x\ngen w^2 = q\n"), UnknownName);
  EXPECT_THROW(parse_tower_text("field p=3\nvars x\ngen u^2 = v\ngen v^2 = x\n"), ForwardReference);
  EXPECT_THROW(parse_tower_text("field p=3\nvars x\ngen u^2 = x\ndesignate F = M\n"), UnknownName);
  // subfields may name generators declared further down
  EXPECT_NO_THROW(parse_tower_text("field p=3\nvars x\nsubfield S = u\ngen u^2 = x\n"));
}

TEST(TowerFile, ResolveSubfield) {
  const TowerFile f = parse_tower_file(kTowers / "mixed.tower");
  const FieldTower t = FieldTower::build(f.spec);
  EXPECT_EQ(resolve_subfield(t, f, "Lpi").subfield.degree(), 3u);
  EXPECT_EQ(resolve_subfield(t, f, "v").subfield.degree(), 2u);
  EXPECT_EQ(resolve_subfield(t, f, "u,v").subfield.degree(), 6u);
  EXPECT_EQ(resolve_subfield(t, f, "u*v").subfield.degree(), 6u);
  EXPECT_THROW(resolve_subfield(t, f, "w"), Error);
}

TEST(Cli, AnalyzeReport) {
  const Json j = structured({"analyze", (kTowers / "mixed.tower").string()});
  EXPECT_EQ(j["schema"], kReportSchema);
  EXPECT_EQ(j["command"], "analyze");
  const Json& c = j["result"]["classification"];
  EXPECT_TRUE(c["normal"].get<bool>());
  EXPECT_FALSE(c["galois"].get<bool>());
  EXPECT_FALSE(c["separable"].get<bool>());
  EXPECT_FALSE(c["purely_inseparable"].get<bool>());
  EXPECT_EQ(j["result"]["degrees"]["L"], 6);
  EXPECT_EQ(j["result"]["degrees"]["L_pi"], 3);
  EXPECT_EQ(j["result"]["degrees"]["L_gal"], 2);
  EXPECT_EQ(j["result"]["degrees"]["L_sep"], 2);
  EXPECT_TRUE(j["warnings"].empty());
}

TEST(Cli, DiffopsReport) {
  const Json j = structured({"diffops", (kTowers / "mixed.tower").string()});
  const Json& d = j["result"]["diffops"][0];
  EXPECT_EQ(d["dim_diffops"], 18);
  EXPECT_EQ(d["dim_dplus"], 12);
  EXPECT_EQ(d["layer_dims"], Json::array({6, 12, 18}));
}

TEST(Cli, GroupReport) {
  const Json j = structured({"group", (kTowers / "kummer.tower").string()});
  EXPECT_EQ(j["result"]["order"], 4);
  EXPECT_EQ(j["result"]["completeness"], "proven");
  EXPECT_EQ(j["result"]["subgroups"].size(), 5u);
  const Json n = structured({"group", (kTowers / "nonnormal.tower").string()});
  EXPECT_EQ(n["result"]["order"], 1);
  EXPECT_EQ(n["result"]["completeness"], "lower-bound");
  EXPECT_EQ(n["warnings"].size(), 1u);
}

TEST(Cli, CorrespondAndVerify) {
  const Json c = structured({"correspond", (kTowers / "mixed.tower").string(), "--subfield", "Lpi", "--subfield", "y"});
  ASSERT_EQ(c["result"]["records"].size(), 2u);
  EXPECT_TRUE(c["result"]["records"][0]["passed"].get<bool>());
  const CliRun v = cli({"verify", (kTowers / "nonmodular.tower").string(), "--suite", "pi"});
  EXPECT_EQ(v.rc, 0) << v.out;
  EXPECT_NE(v.out.find("[PASS]"), std::string::npos);
  EXPECT_EQ(v.out.find("[FAIL]"), std::string::npos);
}

TEST(Cli, ExplicitSuiteWithFailedPrecondition) {
  // the Galois suite on a non-separable tower reports a failed check
  const CliRun r = cli({"verify", (kTowers / "mixed.tower").string(), "--suite", "galois"});
  EXPECT_EQ(r.rc, 1);
  EXPECT_NE(r.out.find("[FAIL]"), std::string::npos);
}

TEST(Cli, ErrorsExitTwo) {
  const CliRun missing = cli({"analyze", "/nonexistent/file.tower"});
  EXPECT_EQ(missing.rc, 2);
  EXPECT_NE(missing.err.find("error"), std::string::npos);

  const fs::path dir = scratch("bad");
  fs::create_directories(dir);
  {
    std::ofstream(dir / "bad.tower") << "field p=3\nvars x\ngen w^2 = q\n";
  }
  const CliRun bad = cli({"analyze", (dir / "bad.tower").string(), "--format", "structured"});
  EXPECT_EQ(bad.rc, 2);
  EXPECT_EQ(Json::parse(bad.err)["error"]["kind"], "UnknownName");
  EXPECT_NE(cli({"frobnicate"}).rc, 0);
  fs::remove_all(dir);
}

TEST(Cli, OutFile) {
  const fs::path dir = scratch("out");
  fs::create_directories(dir);
  const CliRun r = cli({"analyze", (kTowers / "galois.tower").string(), "--out", (dir / "r.txt").string()});
  EXPECT_EQ(r.rc, 0);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(slurp(dir / "r.txt"), cli({"analyze", (kTowers / "galois.tower").string()}).out);
  fs::remove_all(dir);
}

TEST(Cli, Deterministic) {
  for (const char* name : {"mixed.tower", "nonmodular.tower", "kummer.tower", "nonnormal.tower"}) {
    const std::vector<std::string> args{"verify", (kTowers / name).string(), "--suite", "full", "--format", "structured"};
    EXPECT_EQ(cli(args).out, cli(args).out) << name;
  }
}

TEST(Cache, HitMatchesFreshRun) {
  const fs::path dir = scratch("hit");
  const std::vector<std::string> args{"verify", (kTowers / "mixed.tower").string(), "--cache", dir.string(),
                                      "--format", "structured"};
  const CliRun fresh = cli({"verify", (kTowers / "mixed.tower").string(), "--format", "structured"});
  const CliRun first = cli(args);
  const CliRun second = cli(args);
  EXPECT_EQ(first.out, fresh.out);
  EXPECT_EQ(second.out, fresh.out);
  EXPECT_TRUE(second.err.empty()) << second.err;

  const FieldTower t = FieldTower::build(parse_tower_file(kTowers / "mixed.tower").spec);
  EXPECT_TRUE(fs::exists(dir / t.hash() / "multtable.txt"));
  std::ostringstream warn;
  FileCache cache(dir, warn);
  EXPECT_TRUE(cache.sync_multiplication_table(t));
  EXPECT_TRUE(cache.load(t, base_subfield(t)).has_value());
  EXPECT_EQ(cache.hits(), 2u);
  fs::remove_all(dir);
}

TEST(Cache, VersionMismatchRecomputes) {
  const fs::path dir = scratch("version");
  const FieldTower t = FieldTower::build(parse_tower_file(kTowers / "galois.tower").spec);
  std::ostringstream warn;
  {
    FileCache old(dir, warn, "0.0.1");
    const ExtensionAnalysis a(FieldTower::build(t.spec()), &old);
    a.relative_diffops(base_subfield(t));
  }
  FileCache now(dir, warn);
  EXPECT_FALSE(now.load(t, base_subfield(t)).has_value());
  EXPECT_TRUE(warn.str().empty());
  fs::remove_all(dir);
}

TEST(Cache, CorruptEntryIsRecomputed) {
  const fs::path dir = scratch("corrupt");
  const std::string tower = (kTowers / "mixed.tower").string();
  const CliRun clean = cli({"diffops", tower, "--format", "structured"});
  cli({"diffops", tower, "--cache", dir.string()});
  const FieldTower t = FieldTower::build(parse_tower_file(tower).spec);
  const fs::path entry = dir / t.hash() / ("diffops-" + subfield_hash(t, base_subfield(t)) + ".txt");
  ASSERT_TRUE(fs::exists(entry));
  std::string text = slurp(entry);
  text.resize(text.size() / 2);
  std::ofstream(entry, std::ios::trunc) << text;

  const CliRun r = cli({"diffops", tower, "--cache", dir.string(), "--format", "structured"});
  EXPECT_EQ(r.rc, 0);
  EXPECT_EQ(r.out, clean.out);
  EXPECT_NE(r.err.find("recomputing"), std::string::npos);
  // the recomputed entry replaced the damaged one
  EXPECT_NE(slurp(entry), text);
  fs::remove_all(dir);
}

TEST(Cache, UnwritableDirectoryFallsBackToMemory) {
  const fs::path dir = scratch("ro");
  fs::create_directories(dir);
  { std::ofstream(dir / "file") << "x"; }
  const fs::path blocked = dir / "file" / "cache";
  const std::string tower = (kTowers / "kummer.tower").string();
  const CliRun r = cli({"analyze", tower, "--cache", blocked.string(), "--format", "structured"});
  EXPECT_EQ(r.rc, 0);
  EXPECT_NE(r.err.find("not writable"), std::string::npos);
  EXPECT_EQ(r.out, cli({"analyze", tower, "--format", "structured"}).out);
  fs::remove_all(dir);
}

}  // namespace
}  // namespace galtower
