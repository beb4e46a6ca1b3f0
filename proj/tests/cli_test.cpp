#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("herglotz_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& body) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << body;
    return p.string();
  }

  static Invocation run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = herglotz::cli::run(args, out, err);
    return {code, out.str(), err.str()};
  }

  fs::path dir_;
};

const char* kTwoByTwoBad = R"({"n": 2, "entries": [
  [{"num": ["-1"], "den": [0, 1]}, {"num": ["-2"], "den": [0, 1]}],
  [{"num": ["-2"], "den": [0, 1]}, {"num": ["-1"], "den": [0, 1]}]]})";

const char* kIdentityZ = R"({"n": 2, "entries": [[[0, 1], [0]], [[0], [0, 1]]]})";

}  // namespace

TEST_F(CliTest, TwoByTwoBadRejectsWithPoleSignWitness) {
  const std::string f = file("bad.json", kTwoByTwoBad);
  const Invocation r = run({"check", "matrix", f, "--criterion", "all", "--output", "json"});
  EXPECT_EQ(r.code, 1);
  const json doc = json::parse(r.out);
  EXPECT_EQ(doc["outcome"], "reject");
  EXPECT_TRUE(doc["agreement"].get<bool>());
  bool found = false;
  for (const auto& c : doc["checks"])
    if (c["criterion"] == "ii" && c["condition"] == "pole_sign" && c["result"] == "fail") {
      EXPECT_EQ(c["index_set"], json::array({1, 2}));
      EXPECT_EQ(c["witness"]["value"], "-3");
      found = true;
    }
  EXPECT_TRUE(found);
}

TEST_F(CliTest, ColourTwoParts) {
  const std::string f = file("divisor.json", R"([{"point": "0", "value": 2}, {"point": "1", "value": -1}])");
  const Invocation r = run({"colour", f, "--output", "json"});
  EXPECT_EQ(r.code, 0);
  const json doc = json::parse(r.out);
  EXPECT_EQ(doc["order"], 2);
  EXPECT_EQ(doc["parts"].size(), 2u);
}

TEST_F(CliTest, MalformedInputExitsThreeWithEmptyStdout) {
  const Invocation r = run({"check", "matrix", file("malformed.json", R"({"n": 2, "entries": [[1]]})")});
  EXPECT_EQ(r.code, 3);
  EXPECT_TRUE(r.out.empty());
  EXPECT_FALSE(r.err.empty());
  EXPECT_EQ(run({"check", "matrix", file("junk.json", "{not json")}).code, 3);
  EXPECT_EQ(run({"check", "matrix", (dir_ / "missing.json").string()}).code, 3);
  EXPECT_EQ(run({"check", "scalar", file("lit.json", R"({"num": ["1/0"]})")}).code, 3);
}

TEST_F(CliTest, UsageErrorsExitThree) {
  const std::string f = file("q.json", kIdentityZ);
  EXPECT_EQ(run({}).code, 3);
  EXPECT_EQ(run({"check", "matrix", f, "--criterion", "iv"}).code, 3);
  EXPECT_EQ(run({"check", "matrix", f, "--samples", "0"}).code, 3);
  EXPECT_EQ(run({"check", "matrix", f, "--max-refine", "0"}).code, 3);
  EXPECT_EQ(run({"frobnicate", f}).code, 3);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST_F(CliTest, MatrixCriteriaAccept) {
  const std::string f = file("q.json", kIdentityZ);
  for (const char* c : {"ii", "iii", "all"}) EXPECT_EQ(run({"check", "matrix", f, "--criterion", c}).code, 0) << c;
  EXPECT_EQ(run({"check", "matrix", f, "--criterion", "all", "--seed", "7"}).code, 0);
}

TEST_F(CliTest, HypothesisViolationExitsFour) {
  const Invocation r = run({"check", "matrix", file("h.json", R"({"n": 1, "entries": [[[0, {"re": 0, "im": 1}]]]})")});
  EXPECT_EQ(r.code, 4);
  EXPECT_TRUE(r.out.empty());
  const Invocation s = run({"check", "debranges", file("s.json", R"({"E_minus": {"n": 1, "entries": [[[1]]]},
                                                           "E_plus": {"n": 1, "entries": [[[0]]]}})")});
  EXPECT_EQ(s.code, 4);
  EXPECT_EQ(run({"factor", "det", file("bad.json", kTwoByTwoBad)}).code, 4);
}

TEST_F(CliTest, ScalarCheck) {
  EXPECT_EQ(run({"check", "scalar", file("z.json", R"({"num": [0, 1]})")}).code, 0);
  EXPECT_EQ(run({"check", "scalar", file("mz.json", R"({"num": [0, -1]})")}).code, 1);
  EXPECT_EQ(run({"check", "scalar", file("inv.json", R"({"num": ["-1"], "den": [0, 1]})")}).code, 0);
}

TEST_F(CliTest, HermiteBiehler) {
  EXPECT_EQ(run({"check", "hb", file("e.json", R"({"E": [{"im": 1}, 1]})")}).code, 0);
  EXPECT_EQ(run({"check", "hb", file("f.json", R"({"E": [{"im": -1}, 1]})")}).code, 1);
  EXPECT_EQ(run({"check", "hb", file("ab.json", R"({"A": [0, 1], "B": [1]})")}).code, 0);
  const Invocation m = run({"check", "hb", file("m.json", R"({"E": {"n": 2, "entries": [[[{"im": 1}, 1], [0]], [[0], [{"im": 1}, 1]]]}})")});
  EXPECT_EQ(m.code, 0);
}

TEST_F(CliTest, DeBranges) {
  const char* good = R"({"E_minus": {"n": 2, "entries": [[[{"im": -1}, 1], [0]], [[0], [{"im": -1}, 1]]]},
                         "E_plus": {"n": 2, "entries": [[[{"im": 1}, 1], [0]], [[0], [{"im": 1}, 1]]]}})";
  const char* flipped = R"({"E_plus": {"n": 2, "entries": [[[{"im": -1}, 1], [0]], [[0], [{"im": -1}, 1]]]},
                            "E_minus": {"n": 2, "entries": [[[{"im": 1}, 1], [0]], [[0], [{"im": 1}, 1]]]}})";
  EXPECT_EQ(run({"check", "debranges", file("g.json", good)}).code, 0);
  const Invocation r = run({"check", "debranges", file("f.json", flipped), "--output", "json"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(json::parse(r.out)["checks"].back()["condition"], "criterion_ii");
  EXPECT_EQ(run({"check", "debranges", file("e.json", R"({"E": {"n": 1, "entries": [[[{"im": 1}, 1]]]}})")}).code, 0);
}

TEST_F(CliTest, FactorDeterminant) {
  const Invocation r = run({"factor", "det", file("q.json", kIdentityZ), "--output", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["factors"].size(), 2u);
}

TEST_F(CliTest, SynthScalar) {
  const Invocation r = run({"synth", "scalar", file("d.json", R"({"zeros": ["1"], "poles": ["0"], "scale": "2"})"), "--output", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(json::parse(r.out).contains("function"));
  const Invocation irr = run({"synth", "scalar",
                       file("i.json", R"({"zeros": [{"poly": [-2, 0, 1], "interval": ["1", "2"]}], "poles": ["0"]})"),
                       "--output", "json"});
  ASSERT_EQ(irr.code, 0) << irr.err;
  EXPECT_TRUE(json::parse(irr.out).contains("factor"));
  EXPECT_EQ(run({"synth", "scalar", file("bad.json", R"({"zeros": ["0", "1"], "poles": []})")}).code, 1);
}

TEST_F(CliTest, WindingOracle) {
  const std::string f = file("w.json", R"({"num": [-1, 0, 1], "den": [0, 1]})");
  const Invocation r = run({"oracle", "winding", f, "--interval", "1/2,2", "--steps", "400", "--output", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["rounded"], 1);
  EXPECT_EQ(run({"oracle", "winding", f, "--interval", "2"}).code, 3);
}

TEST_F(CliTest, JsonIsByteDeterministic) {
  const std::string f = file("bad.json", kTwoByTwoBad);
  const std::vector<std::string> args{"check", "matrix", f, "--criterion", "all", "--output", "json", "--seed", "3"};
  const Invocation a = run(args), b = run(args);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.code, b.code);
}

TEST_F(CliTest, MaxRefineFromEnvironment) {
  const std::string f = file("q.json", kIdentityZ);
  ::setenv("HERGLOTZ_MAX_REFINE", "abc", 1);
  EXPECT_EQ(run({"check", "matrix", f}).code, 3);
  ::setenv("HERGLOTZ_MAX_REFINE", "5", 1);
  EXPECT_EQ(run({"check", "matrix", f}).code, 0);
  ::unsetenv("HERGLOTZ_MAX_REFINE");
}
