#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gqforge/catalog.hpp"
#include "gqforge/construction.hpp"
#include "gqforge/json_io.hpp"
#include "gqforge_cli/cli.hpp"
#include "support.hpp"

using namespace gqforge;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "gqforge");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("gqforge_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                        "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name)) << text;
    return path(name);
  }

  fs::path dir_;
};

}  // namespace

TEST(JsonIo, GroupRoundTrip) {
  const auto g = direct_product(cyclic_group(3), cyclic_group(4));
  EXPECT_EQ(json_io::group_from_json(json_io::to_json(g)), g);
}

TEST(JsonIo, IncidenceRoundTrip) {
  const auto q = symplectic_gq(2);
  const auto back = json_io::incidence_from_json(json_io::to_json(q));
  EXPECT_EQ(back.lines(), q.lines());
  EXPECT_EQ(back.num_points(), 15U);
}

TEST(JsonIo, ActionRoundTrip) {
  const auto c4 = cyclic_group(4);
  const auto built = build_gq_from_sigma(c4, SigmaSet::of(c4, {0, 1}));
  EXPECT_EQ(json_io::action_from_json(json_io::action_to_json(built.point_action)), built.point_action);
}

TEST(JsonIo, DeltaProfileRoundTrip) {
  const auto q = catalog_fixture("payne-w3");
  const auto& sub = gqtest::payne_regular_27();
  const auto profile = delta_profile(q, sub.group, sub.point_action);
  const auto [back, group] = json_io::delta_profile_from_json(json_io::to_json(profile, sub.group));
  EXPECT_EQ(group, sub.group);
  EXPECT_EQ(back.delta, profile.delta);
  EXPECT_EQ(back.s, profile.s);
  EXPECT_EQ(back.t, profile.t);
  EXPECT_EQ(back.classes, profile.classes);
}

TEST(JsonIo, GroupSpecs) {
  EXPECT_EQ(json_io::parse_group_spec("cyclic:4"), cyclic_group(4));
  EXPECT_EQ(json_io::parse_group_spec("product:cyclic:2,product:cyclic:2,cyclic:2").order(), 8U);
  EXPECT_THROW(json_io::parse_group_spec("dihedral:4"), Error);
  EXPECT_THROW(json_io::parse_group_spec("cyclic:x"), Error);
}

TEST(JsonIo, MalformedReportsPosition) {
  try {
    json_io::parse("{\"num_points\": 4,\n \"lines\": [[0,1],\n", "broken.json");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidInput);
    EXPECT_NE(std::string(e.what()).find("broken.json"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("line"), std::string::npos);
  }
}

TEST(JsonIo, RejectsWrongShapes) {
  EXPECT_THROW(json_io::incidence_from_json(json_io::parse(R"({"num_points": 2})")), Error);
  EXPECT_THROW(json_io::group_from_json(json_io::parse(R"({"order": 2, "table": [[0,1],[0,1]]})")), Error);
  EXPECT_THROW(json_io::incidence_from_json(json_io::parse(R"({"num_points": "x", "lines": []})")), Error);
}

TEST_F(CliTest, BuildSigmaThenVerifyAndExtract) {
  const auto r = run({"build-sigma", "--group", "cyclic:4", "--sigma", "0,1", "--group-out", path("g.json"),
                      "--point-action-out", path("pa.json"), "--line-action-out", path("la.json"), "-o", path("q.json")});
  ASSERT_EQ(r.code, cli::kExitPass) << r.err;
  const auto q = json_io::incidence_from_json(json_io::load_file(path("q.json")));
  EXPECT_EQ(q.num_points(), 4U);
  EXPECT_EQ(q.num_lines(), 4U);

  const auto v = run({"verify", path("q.json")});
  ASSERT_EQ(v.code, cli::kExitPass);
  const auto cert = json_io::parse(v.out);
  EXPECT_EQ(cert["s"], 1);
  EXPECT_EQ(cert["t"], 1);

  const auto e = run({"extract-sigma", "--gq", path("q.json"), "--group", path("g.json"), "--point-action",
                      path("pa.json"), "--line-action", path("la.json")});
  ASSERT_EQ(e.code, cli::kExitPass) << e.err;
  EXPECT_EQ(json_io::parse(e.out)["sigma"], (std::vector<int>{0, 1}));
}

TEST_F(CliTest, BuildSigmaToStdout) {
  const auto r = run({"build-sigma", "--group", "cyclic:4", "--sigma", "0,1"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json_io::parse(r.out)["num_points"], 4);
}

TEST_F(CliTest, NegativeResultsExitOne) {
  EXPECT_EQ(run({"build-sigma", "--group", "product:cyclic:2,cyclic:2", "--sigma", "0,1"}).code, cli::kExitNegative);
  EXPECT_EQ(run({"search-sigma", "--group", "cyclic:2"}).code, cli::kExitNegative);
  const auto p = run({"params", "--s", "2", "--t", "5"});
  EXPECT_EQ(p.code, cli::kExitNegative);
  EXPECT_EQ(json_io::parse(p.out)["feasible"], false);
  EXPECT_EQ(run({"params", "--s", "2", "--t", "4"}).code, cli::kExitPass);
  EXPECT_EQ(run({"feasibility", "--order", "s:5"}).code, cli::kExitNegative);
  const auto fano = write("fano.json", R"({"num_points": 7, "lines": [[0,1,2],[0,3,4],[0,5,6],[1,3,5],[1,4,6],[2,3,6],[2,4,5]]})");
  const auto v = run({"verify", fano});
  EXPECT_EQ(v.code, cli::kExitNegative);
  EXPECT_EQ(json_io::parse(v.out)["gq"], false);
}

TEST_F(CliTest, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).code, cli::kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"sieve", "--from", "2"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"sieve", "--from", "1", "--to", "5"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"build-sigma", "--group", "cyclic:4", "--sigma", "0,x"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"verify", path("missing.json")}).code, cli::kExitUsage);
  const auto bad = write("bad.json", "{\"num_points\": 4,\n  \"lines\": [[0,1],,]}\n");
  const auto r = run({"verify", bad});
  EXPECT_EQ(r.code, cli::kExitUsage);
  EXPECT_NE(r.err.find("line 2"), std::string::npos) << r.err;
}

TEST_F(CliTest, SieveToMillionIsSilent) {
  const auto r = run({"sieve", "--from", "2", "--to", "1000000", "--emit", "survivors"});
  EXPECT_EQ(r.code, cli::kExitPass);
  EXPECT_TRUE(r.out.empty());
}

TEST_F(CliTest, SieveOutputIndependentOfThreads) {
  const auto one = run({"sieve", "--from", "2", "--to", "50000", "--emit", "all"});
  const auto four = run({"sieve", "--from", "2", "--to", "50000", "--emit", "all", "--threads", "4", "--segment-bits", "10"});
  ASSERT_EQ(one.code, 0);
  EXPECT_EQ(one.out, four.out);
  std::istringstream lines(one.out);
  std::string line;
  std::size_t count = 0;
  while (std::getline(lines, line)) {
    EXPECT_NO_THROW(json_io::parse(line));
    ++count;
  }
  EXPECT_EQ(count, 49999U);
}

TEST_F(CliTest, SieveSeventyLine) {
  const auto r = run({"sieve", "--from", "70", "--to", "70", "--emit", "all"});
  ASSERT_EQ(r.code, 0);
  const auto j = json_io::parse(r.out);
  EXPECT_EQ(j["s"], 70);
  EXPECT_EQ(j["pass"], false);
}

TEST_F(CliTest, RegularDeltaYoshiaraPipeline) {
  ASSERT_EQ(run({"catalog", "payne-w3", "-o", path("d.json")}).code, 0);
  const auto r = run({"regular", path("d.json"), "--k", "27", "--max", "1", "--out-dir", path("sub")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto d = run({"delta", "--gq", path("d.json"), "--group", path("sub/group_0.json"), "--action",
                      path("sub/point_action_0.json"), "-o", path("profile.json")});
  ASSERT_EQ(d.code, 0) << d.err;
  EXPECT_EQ(json_io::load_file(path("profile.json"))["delta_size"], 11);
  const auto y = run({"yoshiara", "--profile", path("profile.json")});
  ASSERT_EQ(y.code, 0) << y.err;
  EXPECT_EQ(json_io::parse(y.out)["pass"], true);
}

TEST_F(CliTest, FixturesAndSearches) {
  ASSERT_EQ(run({"catalog", "w2", "-o", path("w2.json")}).code, 0);
  const auto a = run({"aut", path("w2.json")});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(json_io::parse(a.out)["order"], 720);
  EXPECT_EQ(run({"polarity", path("w2.json")}).code, 0);
  ASSERT_EQ(run({"dual", path("w2.json"), "-o", path("w2d.json")}).code, 0);
  EXPECT_EQ(run({"iso", path("w2.json"), path("w2d.json")}).code, 0);
  ASSERT_EQ(run({"catalog", "ordinary", "-o", path("o.json")}).code, 0);
  EXPECT_EQ(run({"iso", path("w2.json"), path("o.json")}).code, cli::kExitNegative);
  const auto s = run({"search-sigma", "--group", "cyclic:4"});
  ASSERT_EQ(s.code, 0);
  EXPECT_EQ(json_io::parse(s.out)["count"], 2);
  EXPECT_EQ(run({"search-sigma", "--group", "product:cyclic:2,cyclic:2"}).code, cli::kExitNegative);
  EXPECT_EQ(run({"identities"}).code, 0);
  EXPECT_EQ(run({"feasibility", "--order", "uq:31"}).code, 0);
}

TEST_F(CliTest, TextFormatForEverySubcommand) {
  ASSERT_EQ(run({"catalog", "ordinary", "-o", path("o.json")}).code, 0);
  ASSERT_EQ(run({"build-sigma", "--group", "cyclic:4", "--sigma", "0,1", "--group-out", path("g.json"),
                 "--point-action-out", path("pa.json"), "--line-action-out", path("la.json"), "-o", path("q.json")})
                .code,
            0);
  ASSERT_EQ(run({"delta", "--gq", path("q.json"), "--group", path("g.json"), "--action", path("pa.json"), "-o",
                 path("p.json")})
                .code,
            0);
  const std::vector<std::vector<std::string>> commands = {
      {"verify", path("o.json")},
      {"dual", path("o.json")},
      {"aut", path("o.json")},
      {"polarity", path("o.json")},
      {"iso", path("o.json"), path("q.json")},
      {"build-sigma", "--group", "cyclic:4", "--sigma", "0,1"},
      {"extract-sigma", "--gq", path("q.json"), "--group", path("g.json"), "--point-action", path("pa.json"),
       "--line-action", path("la.json")},
      {"search-sigma", "--group", "cyclic:4", "--reduce"},
      {"catalog", "ordinary"},
      {"regular", path("o.json"), "--mode", "points-and-lines"},
      {"delta", "--gq", path("q.json"), "--group", path("g.json"), "--action", path("pa.json")},
      {"sieve", "--from", "70", "--to", "72", "--emit", "all"},
      {"feasibility", "--order", "s:127"},
      {"identities"},
      {"params", "--s", "2", "--t", "4"},
  };
  for (const auto& cmd : commands) {
    auto with_flag = cmd;
    with_flag.insert(with_flag.begin(), {"--format", "text"});
    const auto text = run(with_flag);
    const auto js = run(cmd);
    EXPECT_EQ(text.code, js.code) << cmd[0];
    EXPECT_FALSE(text.out.empty()) << cmd[0];
    EXPECT_NE(text.out, js.out) << cmd[0];
    auto after = cmd;
    after.insert(after.end(), {"--format", "text"});
    EXPECT_EQ(run(after).out, text.out) << cmd[0];
  }
  const auto y = run({"--format", "text", "yoshiara", "--profile", path("p.json")});
  EXPECT_EQ(y.code, cli::kExitNegative);
}

TEST_F(CliTest, SizeCapEnforced) {
  ASSERT_EQ(run({"catalog", "w3", "-o", path("w3.json")}).code, 0);
  EXPECT_EQ(run({"--size-cap", "20", "aut", path("w3.json")}).code, cli::kExitUsage);
  EXPECT_EQ(run({"--size-cap", "100", "aut", path("w3.json")}).code, cli::kExitPass);
}

TEST_F(CliTest, Deterministic) {
  const auto args = std::vector<std::string>{"search-sigma", "--group", "cyclic:40"};
  const auto first = run(args);
  EXPECT_EQ(first.code, cli::kExitNegative);
  EXPECT_EQ(json_io::parse(first.out)["count"], 0);
  EXPECT_EQ(first.out, run(args).out);
}
