#include "gbke/cli.hpp"
#include "gbke/json_io.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;
using gbke::json;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = gbke::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir = fs::temp_directory_path() /
          ("gbke_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir);
    fs::create_directories(dir);
    script = (dir / "script.json").string();
    std::ofstream(script) << R"({
      "base": {"kind": "explicit", "graph": {
        "vertices": [0, 1, 2, 3],
        "edges": [[0, 0, 1], [1, 1, 2], [6, 2, 3], [5, 3, 0]],
        "names": ["a", "b", "g", "f"]}},
      "seed": 0,
      "steps": [{"op": "glue_cycle", "args": {"len": 4, "edge": 6, "ids": [2, 3, 4], "names": ["c", "d", "e"]}}]
    })";
  }
  void TearDown() override { fs::remove_all(dir); }
  std::string p(const std::string& name) const { return (dir / name).string(); }

  void init(const std::string& tau) {
    ASSERT_EQ(run({"--tau", tau, "proto-init", "--script", script, "--pub", p("pub.json"), "--priv",
                   p("priv.json")})
                  .code,
              0);
  }

  fs::path dir;
  std::string script;
};

TEST_F(CliTest, DemoListsFiveKeys) {
  const CliResult r = run({"--paper-demo"});
  ASSERT_EQ(r.code, 0) << r.err;
  for (const char* bits : {"10000010010100", "100000101010100001001", "101010010000010001001",
                           "01000100010100", "01000100001001"})
    EXPECT_NE(r.out.find(std::string("> -> ") + bits + "\n"), std::string::npos) << bits;
  EXPECT_NE(r.out.find("K_B = 01000100010100"), std::string::npos);
  EXPECT_NE(r.out.find("recovered \"hello from party B\""), std::string::npos);
}

TEST_F(CliTest, UsageErrorsExitOne) {
  EXPECT_EQ(run({"--no-such-flag"}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"keys-enumerate"}).code, 1);  // missing --ugb
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST_F(CliTest, GraphBuildBothSpellings) {
  const CliResult a = run({"graph", "build", "--script", script, "--ugb", p("u1.json"), "--oracle-check"});
  ASSERT_EQ(a.code, 0) << a.err;
  const CliResult b = run({"graph-build", "--script", script, "--ugb", p("u2.json")});
  ASSERT_EQ(b.code, 0) << b.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(slurp(p("u1.json")), slurp(p("u2.json")));
  const json g = json::parse(a.out);
  EXPECT_EQ(g.at("edges").size(), 7u);
  EXPECT_EQ(gbke::read_json_file(p("u1.json")).at("polynomials").size(), 3u);
}

TEST_F(CliTest, GraphBuildWritesOut) {
  ASSERT_EQ(run({"--out", p("g.json"), "graph-build", "--script", script}).code, 0);
  EXPECT_EQ(gbke::read_json_file(p("g.json")).at("vertices").size(), 6u);
}

TEST_F(CliTest, BadScriptIsDomainError) {
  std::ofstream(p("bad.json")) << R"({"base": {"kind": "cycle", "len": 4}, "steps": [{"op": "glue_cycle", "args": {"len": 3, "edge": 0}}]})";
  const CliResult r = run({"graph-build", "--script", p("bad.json")});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(run({"graph-build", "--script", p("missing.json")}).code, 1);
  std::ofstream(p("junk.json")) << "{not json";
  EXPECT_EQ(run({"graph-build", "--script", p("junk.json")}).code, 1);
}

TEST_F(CliTest, KeysEnumerateExactGivesFive) {
  ASSERT_EQ(run({"graph-build", "--script", script, "--ugb", p("u.json")}).code, 0);
  const CliResult r = run({"keys-enumerate", "--ugb", p("u.json"), "--mode", "exact"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json keys = json::parse(r.out);
  ASSERT_EQ(keys.size(), 5u);
  EXPECT_EQ(keys[0].at("eta_raw"), "101010010000010001001");
  EXPECT_EQ(run({"--mode", "sample:0", "keys-enumerate", "--ugb", p("u.json")}).code, 1);
  EXPECT_EQ(run({"--mode", "sample:40", "keys-enumerate", "--ugb", p("u.json")}).code, 0);
}

TEST_F(CliTest, UgbVerify) {
  ASSERT_EQ(run({"graph-build", "--script", script, "--ugb", p("u.json")}).code, 0);
  const CliResult r = run({"--seed", "4", "ugb-verify", "--ugb", p("u.json"), "--orders", "30"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out).at("passed"), 32);

  // {ag - bf, ce - dg} alone is not universal; lex d>a>b>c>e>f>g exposes bdf.
  json u = gbke::read_json_file(p("u.json"));
  json& polys = u.at("polynomials");
  polys.erase(polys.begin() + 2);
  gbke::write_json_file(p("two.json"), u);
  const CliResult v = run({"ugb-verify", "--ugb", p("two.json"), "--lex", "dabcefg"});
  EXPECT_EQ(v.code, 1);
  const json rep = json::parse(v.out);
  EXPECT_EQ(rep.at("initial_ideal"), json({"a*g", "b*d*f", "d*g"}));
}

TEST_F(CliTest, RoundTripModeZero) {
  init("off");
  ASSERT_EQ(run({"--seed", "11", "--out", p("s.json"), "keygen", "--pub", p("pub.json")}).code, 0);
  ASSERT_EQ(run({"--seed", "3", "--out", p("c.bin"), "encrypt", "--pub", p("pub.json"), "--session",
                 p("s.json"), "--text", "attack at dawn"})
                .code,
            0);
  const CliResult d = run({"decrypt", "--priv", p("priv.json"), "--ct", p("c.bin")});
  ASSERT_EQ(d.code, 0) << d.err;
  EXPECT_EQ(d.out, "attack at dawn");
  EXPECT_NE(d.err.find("attempts: "), std::string::npos);
}

TEST_F(CliTest, RoundTripModeOneFromFile) {
  init("on");
  std::string data(5000, '\0');
  for (std::size_t i = 0; i < data.size(); ++i) data[i] = static_cast<char>(i * 37);
  std::ofstream(p("pt.bin"), std::ios::binary) << data;
  ASSERT_EQ(run({"--seed", "2", "--out", p("s.json"), "keygen", "--pub", p("pub.json")}).code, 0);
  ASSERT_EQ(run({"--out", p("c.bin"), "encrypt", "--pub", p("pub.json"), "--session", p("s.json"), "--in",
                 p("pt.bin")})
                .code,
            0);
  const CliResult d = run({"--out", p("pt2.bin"), "decrypt", "--priv", p("priv.json"), "--ct", p("c.bin")});
  ASSERT_EQ(d.code, 0);
  EXPECT_EQ(slurp(p("pt2.bin")), data);
  EXPECT_NE(d.err.find("attempts: 1\n"), std::string::npos);
}

TEST_F(CliTest, DeterministicOutputs) {
  init("on");
  const std::string pub1 = slurp(p("pub.json")), priv1 = slurp(p("priv.json"));
  init("on");
  EXPECT_EQ(slurp(p("pub.json")), pub1);
  EXPECT_EQ(slurp(p("priv.json")), priv1);
  const CliResult k1 = run({"--seed", "8", "keygen", "--pub", p("pub.json")});
  const CliResult k2 = run({"--seed", "8", "keygen", "--pub", p("pub.json")});
  EXPECT_EQ(k1.out, k2.out);
  std::ofstream(p("s.json")) << k1.out;
  const CliResult e1 = run({"--seed", "5", "encrypt", "--pub", p("pub.json"), "--session", p("s.json"), "--text", "x"});
  const CliResult e2 = run({"--seed", "5", "encrypt", "--pub", p("pub.json"), "--session", p("s.json"), "--text", "x"});
  ASSERT_EQ(e1.code, 0);
  EXPECT_EQ(e1.out, e2.out);
  const CliResult e3 = run({"--seed", "6", "encrypt", "--pub", p("pub.json"), "--session", p("s.json"), "--text", "x"});
  EXPECT_NE(e1.out, e3.out);
}

TEST_F(CliTest, DecryptFailuresExitThree) {
  init("off");
  ASSERT_EQ(run({"--out", p("s.json"), "keygen", "--pub", p("pub.json")}).code, 0);
  ASSERT_EQ(run({"--out", p("c.bin"), "encrypt", "--pub", p("pub.json"), "--session", p("s.json"), "--text",
                 "payload"})
                .code,
            0);
  std::string ct = slurp(p("c.bin"));
  // Header: magic(4) version(1) mode(1) nonce(12) length(4); the marker follows.
  ct[4 + 1 + 1 + 12 + 4] ^= 0x01;
  std::ofstream(p("flip.bin"), std::ios::binary) << ct;
  EXPECT_EQ(run({"decrypt", "--priv", p("priv.json"), "--ct", p("flip.bin")}).code, 3);
  std::ofstream(p("short.bin"), std::ios::binary) << "GBKE";
  EXPECT_EQ(run({"decrypt", "--priv", p("priv.json"), "--ct", p("short.bin")}).code, 1);
}

TEST_F(CliTest, ResourceErrorExitsTwo) {
  // 30 binomials with 2 terms each exceed a 1e7 selection cap; without the
  // sampling fallback that is a resource error.
  json u = {{"ring", {{"n", 60}, {"field", "fp:32003"}, {"vars", json::array()}}}, {"polynomials", json::array()}};
  for (int i = 0; i < 60; ++i) u["ring"]["vars"].push_back("x" + std::to_string(i));
  for (int i = 0; i < 30; ++i) {
    std::vector<int> a(60, 0), b(60, 0);
    a[2 * i] = 1;
    b[2 * i + 1] = 1;
    u["polynomials"].push_back(json::array({json::array({"1", a}), json::array({"-1", b})}));
  }
  gbke::write_json_file(p("big.json"), u);
  const CliResult r = run({"keys-enumerate", "--ugb", p("big.json")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("resource"), std::string::npos);
}

TEST_F(CliTest, AttackBounds) {
  init("off");
  const CliResult r = run({"attack-bounds", "--pub", p("pub.json"), "--priv", p("priv.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j.at("selection_bound"), "8");
  EXPECT_EQ(j.at("measured_keys"), 5);
  const CliResult s = run({"attack-bounds", "-m", "2", "-r", "3", "-k", "2", "-n", "14"});
  ASSERT_EQ(s.code, 0);
  EXPECT_EQ(json::parse(s.out).at("log2_brute_force"), "16384");
  EXPECT_EQ(run({"attack-bounds", "-m", "2"}).code, 1);
}

TEST_F(CliTest, Bench) {
  init("on");
  const CliResult r = run({"bench", "--pub", p("pub.json"), "--priv", p("priv.json"), "--trials", "20"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j.at("keys"), 5);
  EXPECT_GT(j.at("single_decrypt_ns").get<double>(), 0.0);
}

TEST_F(CliTest, FieldAndTauFlagsValidated) {
  EXPECT_EQ(run({"--field", "fp:10", "graph-build", "--script", script}).code, 1);
  EXPECT_EQ(run({"--field", "q", "graph-build", "--script", script}).code, 0);
  EXPECT_EQ(run({"--tau", "maybe", "proto-init", "--script", script, "--pub", p("a"), "--priv", p("b")}).code, 1);
}

}  // namespace
