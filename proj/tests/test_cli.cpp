#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = sclp::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string program(const char* name) { return std::string(SCLP_PROGRAMS_DIR) + "/" + name; }

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("sclp_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                        "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& text) {
    auto path = dir_ / name;
    std::ofstream(path) << text;
    return path.string();
  }

  fs::path dir_;
};

void expect_error(const Outcome& o, int code, const std::string& name) {
  EXPECT_EQ(o.code, code) << o.err;
  EXPECT_NE(o.err.find("error: " + name + ":"), std::string::npos) << o.err;
}

}  // namespace

TEST_F(Cli, TravelTable) {
  auto o = run({"eval", program("travel.sclp"), "--semiring", "opt", "--semantics", "lfp", "--format", "table"});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_EQ(o.out,
            "                 I1   I2   I3  I4\n"
            "car(a)           3    3    3   3\n"
            "mass_transit(a)  inf  2    2   2\n"
            "path(a,b)        inf  inf  2   2\n"
            "path(a,c)        inf  3    3   3\n"
            "solution(a)      inf  inf  3   2\n"
            "train(a)         2    2    2   2\n");
}

TEST_F(Cli, TravelWithNegationTable) {
  auto o = run({"eval", program("travel_neg.sclp"), "--semiring", "opt", "--semantics", "kk", "--approximator", "fitting"});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_NE(o.out.find("solution(a)      (inf,0)  (inf,0)    (inf,0)    (3,0)      (1,1)\n"), std::string::npos) << o.out;
  EXPECT_NE(o.out.find("bicycle(a)       (inf,0)  (inf,1)    (1,1)"), std::string::npos) << o.out;
  EXPECT_EQ(std::count(o.out.begin(), o.out.end(), '\n'), 10);
}

TEST_F(Cli, CheckSemiringSingleProperty) {
  auto o = run({"check-semiring", "--semiring", "bool", "--property", "complete-lattice"});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_EQ(o.out, "semiring bool\n  complete-lattice: pass - complete lattice, top = true (absorbing for +)\n");
}

TEST_F(Cli, CheckSemiringFullSuite) {
  auto o = run({"check-semiring", "-s", "nat-trunc:3"});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_NE(o.out.find("orders-coincide: skipped - precondition idempotent_add not met"), std::string::npos) << o.out;
  auto z = run({"check-semiring", "-s", "table:" + program("z5.sr"), "-f", "json"});
  ASSERT_EQ(z.code, 0) << z.err;
  auto doc = nlohmann::json::parse(z.out);
  EXPECT_EQ(doc["reports"].size(), 10U);
  EXPECT_EQ(doc["reports"][1]["property"], "no-additive-inverses");
  EXPECT_EQ(doc["reports"][1]["verdict"], "fail");
}

TEST_F(Cli, CheckSemiringOnInfiniteCarrier) {
  auto o = run({"check-semiring", "-s", "opt"});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_NE(o.out.find("semiring-laws: pass"), std::string::npos) << o.out;
  EXPECT_NE(o.out.find("positively-ordered: pass"), std::string::npos) << o.out;
  EXPECT_NE(o.out.find("carrier is not enumerable"), std::string::npos) << o.out;
  expect_error(run({"check-semiring", "-s", "opt", "-p", "complete-lattice"}), 2, "NotEnumerable");
}

TEST_F(Cli, ParseCommand) {
  auto o = run({"parse", program("travel_neg.sclp"), "-s", "opt"});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_EQ(o.out.substr(0, o.out.find('\n')), "% 10 clauses, 9 atoms, with negation, semiring opt");
  EXPECT_NE(o.out.find("bicycle(a) :- 1, not rain(a).\n"), std::string::npos);
  auto j = run({"parse", program("choice.sclp"), "-f", "json"});
  ASSERT_EQ(j.code, 0);
  EXPECT_NO_THROW((void)nlohmann::json::parse(j.out));
}

TEST_F(Cli, DedupFlag) {
  auto path = file("dup.sclp", "p :- 2.\np :- 2.\n");
  auto multi = run({"eval", path, "-s", "nat-inf", "-f", "plain"});
  auto dedup = run({"eval", path, "-s", "nat-inf", "-f", "plain", "--dedup"});
  EXPECT_NE(multi.out.find("p = 4"), std::string::npos) << multi.out;
  EXPECT_NE(dedup.out.find("p = 2"), std::string::npos) << dedup.out;
}

TEST_F(Cli, StableAndWellFounded) {
  auto wf = run({"eval", program("self_support.sclp"), "--semantics", "wf", "-f", "plain"});
  ASSERT_EQ(wf.code, 0) << wf.err;
  EXPECT_EQ(wf.out, "[lower]\np = true\nq = false\n[upper]\np = true\nq = false\n");
  auto st = run({"eval", program("choice.sclp"), "--semantics", "stable", "-a", "ultimate"});
  ASSERT_EQ(st.code, 0) << st.err;
  EXPECT_NE(st.out.find("S1*"), std::string::npos) << st.out;
  auto json = run({"eval", program("choice.sclp"), "--semantics", "stable", "-f", "json"});
  auto doc = nlohmann::json::parse(json.out);
  EXPECT_EQ(doc["kind"], "stable_set");
  EXPECT_EQ(doc["pairs"].size(), 3U);
  EXPECT_EQ(doc["exact"], false);
}

TEST_F(Cli, StableCheck) {
  auto yes = file("yes.pair", "[lower]\np = true\nq = false\n[upper]\np = true\nq = false\n");
  auto no = file("no.pair", "[lower]\np = false\nq = false\n[upper]\np = true\nq = true\n");
  auto a = run({"eval", program("self_support.sclp"), "--semantics", "stable-check", "--pair", yes});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, "stable\n");
  auto b = run({"eval", program("self_support.sclp"), "--semantics", "stable-check", "--pair", no});
  EXPECT_EQ(b.out, "not stable\n");
  auto missing = run({"eval", program("self_support.sclp"), "--semantics", "stable-check"});
  EXPECT_EQ(missing.code, 1);
  EXPECT_NE(missing.err.find("--pair"), std::string::npos);
}

TEST_F(Cli, ModelsCommand) {
  auto interp = file("five.interp", "h = 5\nb1 = 5\nb2 = 5\n");
  auto o = run({"models", program("two_paths.sclp"), "-s", "nat-inf", "--interp", interp});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_NE(o.out.find("semiring model: no\ntraditional model: yes\n"), std::string::npos) << o.out;
  EXPECT_NE(o.out.find("h = 10\n"), std::string::npos) << o.out;
  auto neg = file("neg.interp", "p = true\nq = false\n");
  auto n = run({"models", program("self_support.sclp"), "--interp", neg});
  EXPECT_NE(n.out.find("% negated atoms read the same interpretation"), std::string::npos) << n.out;
}

TEST_F(Cli, ListSemirings) {
  auto o = run({"list-semirings"});
  ASSERT_EQ(o.code, 0);
  for (const char* name : {"bool", "fuzzy", "nat-inf", "opt", "powerset:", "int-inf", "table:"}) {
    EXPECT_NE(o.out.find(name), std::string::npos) << name;
  }
}

TEST_F(Cli, OutputIsDeterministic) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"eval", program("travel_neg.sclp"), "-s", "opt", "--semantics", "wf", "-f", "json", "--trace"},
           {"eval", program("choice.sclp"), "--semantics", "stable"},
           {"check-semiring", "-s", "powerset:a,b", "-f", "json"}}) {
    auto first = run(args);
    auto second = run(args);
    EXPECT_EQ(first.code, 0);
    EXPECT_EQ(first.out, second.out);
  }
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"eval"}).code, 1);
  EXPECT_EQ(run({"eval", program("choice.sclp"), "--semantics", "magic"}).code, 1);
  EXPECT_EQ(run({"eval", program("choice.sclp"), "--format", "xml"}).code, 1);
  EXPECT_EQ(run({"check-semiring", "-p", "no-such-property"}).code, 1);
  EXPECT_EQ(run({"eval", program("choice.sclp"), "--max-iterations", "0"}).code, 1);
  expect_error(run({"eval", program("choice.sclp"), "-s", "reals"}), 1, "UnknownSemiring");
  expect_error(run({"eval", (dir_ / "absent.sclp").string()}), 1, "IoError");
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST_F(Cli, EvaluationDiagnostics) {
  auto bad = file("bad.sclp", "p :- q.\nq :- not 3.\n");
  auto o = run({"eval", bad, "-s", "nat-inf"});
  expect_error(o, 2, "ParseError");
  EXPECT_NE(o.err.find("bad.sclp:2:"), std::string::npos) << o.err;

  expect_error(run({"eval", file("c.sclp", "p :- 3/2.\n"), "-s", "fuzzy"}), 2, "ValueNotInCarrier");
  expect_error(run({"eval", program("choice.sclp")}), 2, "NotPositiveProgram");
  expect_error(run({"eval", program("signed.sclp"), "-s", "int-inf", "--semantics", "kk"}), 2, "NotPositivelyOrdered");
  expect_error(run({"eval", program("signed.sclp"), "-s", "int-inf", "--semantics", "kk", "-a", "ultimate"}), 2,
               "NotEnumerable");
  expect_error(run({"eval", program("choice.sclp"), "-s", "table:" + program("xor.sr"), "--semantics", "kk"}), 2,
               "NotPositivelyOrdered");
  expect_error(run({"eval", file("x.sclp", "p :- 1.\n"), "-s", "table:" + program("xor.sr")}), 2, "NotCompleteLattice");

  auto diverge = run({"eval", file("d.sclp", "p :- p, 1.\np :- 1.\n"), "-s", "nat-inf", "--max-iterations", "60"});
  expect_error(diverge, 2, "IterationCapExceeded");
  EXPECT_NE(diverge.err.find("DivergenceSuspected"), std::string::npos) << diverge.err;

  std::string wide;
  for (int i = 0; i < 21; ++i) wide += "p" + std::to_string(i) + " :- not q" + std::to_string(i) + ".\n";
  expect_error(run({"eval", file("w.sclp", wide), "--semantics", "stable"}), 2, "SearchSpaceTooLarge");

  auto prog = file("i.sclp", "q.\nr :- p.\n");
  auto pair = file("i.pair", "[lower]\np = true\nq = false\nr = false\n[upper]\np = true\nq = false\nr = false\n");
  expect_error(run({"eval", prog, "--semantics", "stable-check", "-a", "ultimate", "--pair", pair}), 2,
               "InconsistentPair");

  expect_error(run({"eval", program("choice.sclp"), "-s", "table:" + file("t.sr", "semiring t\nelements 0\n")}), 2,
               "TableLoadError");
}

TEST_F(Cli, InterpretationFileErrors) {
  auto partial = file("partial.interp", "h = 5\n");
  expect_error(run({"models", program("two_paths.sclp"), "-s", "nat-inf", "--interp", partial}), 2, "UniverseMismatch");
  auto stranger = file("stranger.interp", "h = 5\nb1 = 5\nb2 = 5\nzz = 1\n");
  auto o = run({"models", program("two_paths.sclp"), "-s", "nat-inf", "--interp", stranger});
  EXPECT_EQ(o.code, 2) << o.err;
}
