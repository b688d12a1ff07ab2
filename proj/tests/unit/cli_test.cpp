#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <sstream>

#include "tetravex/cli.hpp"
#include "tetravex/one_in_three.hpp"
#include "tetravex/text_format.hpp"

namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("tvx_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  std::string write(const std::string& name, const std::string& text) const {
    tvx::write_text_file(path(name), text);
    return path(name);
  }
  static Outcome run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = tvx::cli::run(args, out, err);
    return {code, out.str(), err.str()};
  }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, SolvableReduction) {
  const std::string in = write("s.1in3", "p 1in3 3 1\n1 2 3\n");
  ASSERT_EQ(run({"reduce", "--in", in, "--out", path("s.tvx")}).code, 0);
  const Outcome solved = run({"solve", "--in", path("s.tvx"), "--limit", "1"});
  EXPECT_EQ(solved.code, 0);
  EXPECT_EQ(solved.out, "SOLVABLE 1\n");
  EXPECT_EQ(run({"solve", "--in", path("s.tvx"), "--count"}).out, "SOLVABLE 3\n");
}

TEST_F(Cli, UnsolvableReduction) {
  const std::string in = write("u.1in3", "p 1in3 1 1\n1 1 1\n");
  ASSERT_EQ(run({"reduce", "--in", in, "--out", path("u.tvx")}).code, 0);
  const Outcome solved = run({"solve", "--in", path("u.tvx")});
  EXPECT_EQ(solved.code, 1);
  EXPECT_EQ(solved.out, "UNSOLVABLE\n");
}

TEST_F(Cli, PipelineAgreesWithTheOracle) {
  const std::string in = write("f.1in3", "p 1in3 4 2\n1 2 3\n1 2 4\n");
  for (std::vector<std::string> extra : {std::vector<std::string>{}, {"--toroidal"}, {"--square"}}) {
    std::vector<std::string> reduce_args{"reduce", "--in", in, "--out", path("f.tvx")};
    reduce_args.insert(reduce_args.end(), extra.begin(), extra.end());
    ASSERT_EQ(run(reduce_args).code, 0);
    ASSERT_EQ(run({"solve", "--in", path("f.tvx"), "--witness", path("f.sol")}).code, 0);
    const Outcome verified = run({"verify", "--instance", path("f.tvx"), "--tiling", path("f.sol")});
    EXPECT_EQ(verified.code, 0);
    EXPECT_EQ(verified.out, "VALID\n");
    const Outcome decoded = run({"decode", "--in", in, "--instance", path("f.tvx"), "--tiling", path("f.sol")});
    ASSERT_EQ(decoded.code, 0) << decoded.err;
    ASSERT_EQ(decoded.out.rfind("ASSIGNMENT ", 0), 0u);
    const Outcome oracle = run({"oracle", "--in", in});
    EXPECT_EQ(oracle.code, 0);
    EXPECT_NE(oracle.out.find("\n" + decoded.out.substr(11)), std::string::npos);
  }
}

TEST_F(Cli, OracleOutput) {
  EXPECT_EQ(run({"oracle", "--in", write("s.1in3", "p 1in3 3 1\n1 2 3\n")}).out, "SATISFIABLE 3\n100\n010\n001\n");
  const Outcome none = run({"oracle", "--in", write("u.1in3", "p 1in3 1 1\n1 1 1\n")});
  EXPECT_EQ(none.code, 1);
  EXPECT_EQ(none.out, "UNSATISFIABLE\n");
}

TEST_F(Cli, VerifyRejectsWrongDimensions) {
  write("s.1in3", "p 1in3 3 1\n1 2 3\n");
  write("u.1in3", "p 1in3 1 1\n1 1 1\n");
  run({"reduce", "--in", path("s.1in3"), "--out", path("s.tvx")});
  run({"reduce", "--in", path("u.1in3"), "--out", path("u.tvx")});
  run({"solve", "--in", path("s.tvx"), "--witness", path("s.sol")});
  const Outcome r = run({"verify", "--instance", path("u.tvx"), "--tiling", path("s.sol")});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("line 2"), std::string::npos);
}

TEST_F(Cli, VerifyReportsInvalidTilings) {
  const std::string inst = write("p.tvx", "tvx 1\ndims 2 1\nboundary bordered\ntiles 2\n0 2 0 5\n0 5 0 1\n");
  EXPECT_EQ(run({"verify", "--instance", inst, "--tiling", write("a.sol", "tvxsol 1\ndims 2 1\n1 0\n")}).out, "VALID\n");
  const Outcome bad = run({"verify", "--instance", inst, "--tiling", write("b.sol", "tvxsol 1\ndims 2 1\n0 1\n")});
  EXPECT_EQ(bad.code, 1);
  EXPECT_EQ(bad.out, "INVALID\n");
  EXPECT_FALSE(bad.err.empty());
}

TEST_F(Cli, MalformedInputGivesLineNumbers) {
  const Outcome r = run({"oracle", "--in", write("bad.1in3", "p 1in3 3 2\n1 2 3\n1 -2 3\n")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 3"), std::string::npos);
  EXPECT_EQ(run({"solve", "--in", path("missing.tvx")}).code, 2);
  EXPECT_EQ(run({"solve"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"solve", "--in", path("x"), "--count", "--limit", "3"}).code, 2);
}

TEST_F(Cli, ToroidalSquareIsRefused) {
  const Outcome r = run({"reduce", "--in", write("s.1in3", "p 1in3 3 1\n1 2 3\n"), "--out", path("s.tvx"), "--toroidal", "--square"});
  EXPECT_EQ(r.code, 2);
  EXPECT_FALSE(fs::exists(path("s.tvx")));
}

TEST_F(Cli, PadMatchesSquareReduction) {
  const std::string in = write("s.1in3", "p 1in3 1 1\n1 1 1\n");
  ASSERT_EQ(run({"reduce", "--in", in, "--out", path("r.tvx"), "--map", path("r.roles")}).code, 0);
  ASSERT_EQ(run({"pad", "--in", path("r.tvx"), "--map", path("r.roles"), "--out", path("p.tvx")}).code, 0);
  ASSERT_EQ(run({"reduce", "--in", in, "--out", path("q.tvx"), "--square"}).code, 0);
  EXPECT_EQ(tvx::read_text_file(path("p.tvx")), tvx::read_text_file(path("q.tvx")));
  EXPECT_EQ(run({"solve", "--in", path("p.tvx")}).out, "UNSOLVABLE\n");
}

TEST_F(Cli, DecodeRejectsForeignInstances) {
  write("s.1in3", "p 1in3 3 1\n1 2 3\n");
  write("t.1in3", "p 1in3 3 1\n1 2 2\n");
  run({"reduce", "--in", path("s.1in3"), "--out", path("s.tvx")});
  run({"solve", "--in", path("s.tvx"), "--witness", path("s.sol")});
  EXPECT_EQ(run({"decode", "--in", path("t.1in3"), "--instance", path("s.tvx"), "--tiling", path("s.sol")}).code, 2);
}

TEST_F(Cli, InputsAreNotModified) {
  const std::string in = write("s.1in3", "p 1in3 3 1\n1 2 3\n");
  run({"reduce", "--in", in, "--out", path("s.tvx")});
  const std::string before = tvx::read_text_file(path("s.tvx"));
  run({"solve", "--in", path("s.tvx"), "--count", "--witness", path("s.sol")});
  run({"verify", "--instance", path("s.tvx"), "--tiling", path("s.sol")});
  run({"decode", "--in", in, "--instance", path("s.tvx"), "--tiling", path("s.sol")});
  EXPECT_EQ(tvx::read_text_file(path("s.tvx")), before);
  EXPECT_EQ(tvx::read_text_file(in), "p 1in3 3 1\n1 2 3\n");
}

TEST_F(Cli, GenerateAndExperiment) {
  const std::vector<std::string> gen{"generate", "--mode", "shredded", "--width", "3", "--height", "3",
                                     "--alphabet", "10", "--seed", "7", "--out"};
  auto with_out = [&](std::vector<std::string> args, const std::string& out) {
    args.push_back(out);
    return args;
  };
  ASSERT_EQ(run(with_out(gen, path("a.tvx"))).code, 0);
  ASSERT_EQ(run(with_out(gen, path("b.tvx"))).code, 0);
  EXPECT_EQ(tvx::read_text_file(path("a.tvx")), tvx::read_text_file(path("b.tvx")));

  std::vector<std::string> unique{"generate", "--mode", "shredded", "--width", "3", "--height", "3", "--alphabet",
                                  "10", "--seed", "7", "--unique", "--budget", "100", "--out", path("u.tvx")};
  ASSERT_EQ(run(unique).code, 0);
  EXPECT_EQ(run({"solve", "--in", path("u.tvx"), "--count"}).out, "SOLVABLE 1\n");
  EXPECT_EQ(run({"generate", "--mode", "iid", "--width", "3", "--height", "3", "--alphabet", "10", "--seed", "7",
                 "--budget", "5", "--out", path("x.tvx")})
                .code,
            2);

  const std::vector<std::string> exp{"experiment", "--modes", "shredded,iid", "--sizes", "2x2,3x2", "--alphabets",
                                     "2,4", "--trials", "10", "--seed", "3", "--out"};
  ASSERT_EQ(run(with_out(exp, path("e.csv"))).code, 0);
  const std::string csv = tvx::read_text_file(path("e.csv"));
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 9);
  EXPECT_EQ(run({"experiment", "--modes", "shredded", "--sizes", "2by2", "--alphabets", "2", "--trials", "1",
                 "--seed", "3", "--out", path("f.csv")})
                .code,
            2);
}
