#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "mvsr/cli.hpp"
#include "mvsr/error.hpp"
#include "mvsr/json_io.hpp"
#include "support.hpp"

using namespace mvsr;
using namespace mvsr::testing;
namespace fs = std::filesystem;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("mvsr_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
    ::unsetenv("MVSR_CONFIG");
  }
  void TearDown() override {
    ::unsetenv("MVSR_CONFIG");
    fs::remove_all(dir_);
  }
  std::string write(const std::string& name, const Json& j) {
    const std::string p = (dir_ / name).string();
    std::ofstream(p) << dump_json(j);
    return p;
  }
  std::string write_text(const std::string& name, const std::string& text) {
    const std::string p = (dir_ / name).string();
    std::ofstream(p) << text;
    return p;
  }
  fs::path dir_;
};

Json boolean_module_json() {
  return Json{{"kind", "semimodule"}, {"scalars", "boolean"},      {"size", 2},
              {"add", {{0, 1}, {1, 1}}}, {"zero", 0}, {"action", {{0, 0}, {0, 1}}}};
}

}  // namespace

TEST(JsonIo, RoundTrips) {
  const MvAlgebra a = product(lukasiewicz_chain(2), lukasiewicz_chain(3));
  EXPECT_TRUE(mv_from_json(to_json(a)).same_structure(a));
  EXPECT_EQ(to_json(mv_from_json(to_json(a))), to_json(a));
  const FiniteSemiring s = reduct_wedge_oplus(lukasiewicz_chain(4));
  EXPECT_TRUE(semiring_from_json(to_json(s)).same_structure(s));
  const FiniteSemimodule m = free_semimodule(vee_odot(3), 2).module;
  EXPECT_TRUE(semimodule_from_json(to_json(m)).same_structure(m));
  const SemiringMatrix u = make_matrix(vee_odot(3), {{2, 0}, {2, 0}});
  EXPECT_EQ(matrix_from_json(to_json(u)), u);
  const Json text = parse_json_text(dump_json(to_json(m)));
  EXPECT_EQ(text, to_json(m));
}

TEST(JsonIo, ErrorsNameTheLocation) {
  Json j = to_json(boolean_semiring());
  j["add"][1][0] = 7;
  try {
    semiring_from_json(j);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ParseError);
    EXPECT_NE(std::string(e.what()).find("/add/1/0"), std::string::npos);
  }
  try {
    parse_json_text("{\"kind\": }", "x.json");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("byte"), std::string::npos);
  }
  Json bad = boolean_module_json();
  bad["scalars"] = "L1";
  EXPECT_THROW(semimodule_from_json(bad), Error);
  bad["scalars"] = "L3:wedge_oplus";
  bad["action"] = {{0, 0}, {0, 1}, {0, 1}};
  EXPECT_NO_THROW(semimodule_from_json(bad));
  EXPECT_THROW(algebra_from_json(Json{{"kind", "group"}}), Error);
}

TEST_F(CliTest, ChainThenVerify) {
  const CliRun chain = run({"chain", "--n", "3"});
  ASSERT_EQ(chain.code, 0);
  const std::string p = write_text("l3.json", chain.out);
  const CliRun v = run({"verify", "--input", p});
  EXPECT_EQ(v.code, 0);
  EXPECT_TRUE(parse_json_text(v.out)["axioms"]["valid"].get<bool>());
  // every emitted report re-parses to the same bytes
  EXPECT_EQ(dump_json(parse_json_text(v.out)), v.out);
}

TEST_F(CliTest, LawViolationExitCode) {
  Json j = to_json(boolean_semiring());
  j["add"] = {{0, 0}, {1, 1}};
  EXPECT_EQ(run({"verify", "--input", write("bad.json", j)}).code, 2);
  const CliRun g = run({"gamma", "--samples", "500"});
  EXPECT_EQ(g.code, 2);
  EXPECT_EQ(run({"gamma", "--samples", "500", "--domain", "nonnegative"}).code, 0);
}

TEST_F(CliTest, GuardAndParseExitCodes) {
  const std::string m = write("m.json", to_json(free_semimodule(vee_odot(3), 2).module));
  const CliRun guard = run({"tensor", "--left", m, "--right", m});
  EXPECT_EQ(guard.code, 3);
  EXPECT_NE(guard.err.find("max_carrier"), std::string::npos);
  const std::string reg = write("reg.json", to_json(regular_module(vee_odot(3))));
  EXPECT_EQ(run({"tensor", "--left", m, "--right", reg}).code, 3);
  const CliRun sep = run({"tensor", "--left", m, "--right", reg, "--method", "separating"});
  EXPECT_EQ(sep.code, 0);
  EXPECT_EQ(parse_json_text(sep.out)["classes"], 9);
  // the universal-property scan over 81 classes exceeds max_enum
  EXPECT_EQ(run({"tensor", "--left", m, "--right", m, "--method", "separating"}).code, 3);
  EXPECT_EQ(run({"verify", "--input", write_text("broken.json", "[1,")}).code, 1);
  EXPECT_EQ(run({"verify", "--input", (dir_ / "missing.json").string()}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"chain", "--n", "5", "--max-enum", "0"}).code, 1);
}

TEST_F(CliTest, Idempotents) {
  const std::string l3 = write("l3.json", to_json(lukasiewicz_chain(3)));
  const CliRun r = run({"idempotents", "--input", l3, "--n", "2"});
  ASSERT_EQ(r.code, 0);
  const Json j = parse_json_text(r.out);
  const Json id = Json{{2, 0}, {0, 2}}, zero = Json{{0, 0}, {0, 0}};
  bool has_id = false, has_zero = false;
  for (const Json& m : j["matrices"]) {
    has_id |= m == id;
    has_zero |= m == zero;
  }
  EXPECT_TRUE(has_id && has_zero);
  const std::string red = write_text("r.json", run({"reduct", "--input", l3}).out);
  EXPECT_EQ(run({"idempotents", "--input", red, "--n", "2"}).out, r.out);
  EXPECT_EQ(run({"reduct", "--input", red}).code, 1);
}

TEST_F(CliTest, K0AndConfigOverride) {
  const std::string l2 = write("l2.json", to_json(lukasiewicz_chain(2)));
  const CliRun one = run({"k0", "--input", l2, "--nmax", "1"});
  ASSERT_EQ(one.code, 0);
  const Json j = parse_json_text(one.out);
  EXPECT_EQ(j["classes"].size(), 2u);
  EXPECT_TRUE(j["truncated"].get<bool>());

  const std::string cfg = write("cfg.json", Json{{"n_max", 1}, {"seed", 7}});
  ::setenv("MVSR_CONFIG", cfg.c_str(), 1);
  EXPECT_EQ(run({"k0", "--input", l2}).out, one.out);
  const CliRun two = run({"k0", "--input", l2, "--nmax", "2"});
  EXPECT_EQ(parse_json_text(two.out)["n_max"], 2);
  EXPECT_EQ(parse_json_text(run({"gamma", "--samples", "10"}).out)["seed"], 7);
  EXPECT_EQ(parse_json_text(run({"gamma", "--samples", "10", "--seed", "8"}).out)["seed"], 8);
  write("cfg.json", Json{{"bogus", 1}});
  EXPECT_EQ(run({"gamma"}).code, 1);
}

TEST_F(CliTest, TensorHomsetProjective) {
  const std::string m = write("m.json", boolean_module_json());
  const CliRun t = run({"tensor", "--left", m, "--right", m});
  ASSERT_EQ(t.code, 0);
  const Json j = parse_json_text(t.out);
  EXPECT_EQ(j["classes"], 2);
  EXPECT_EQ(j["universal_property"], "verified");
  EXPECT_EQ(j["tensors"].size(), 4u);

  const CliRun h = run({"homset", "--left", m, "--right", m});
  EXPECT_EQ(parse_json_text(h.out)["count"], 2);

  const CliRun p = run({"projective", "--input", m});
  const Json pj = parse_json_text(p.out);
  EXPECT_TRUE(pj["projective"].get<bool>());
  EXPECT_TRUE(pj["witnesses"]["agree"].get<bool>());

  const MvAlgebra l5 = lukasiewicz_chain(5);
  const std::string low = write("low.json", to_json(regular_sub(vee_odot(5), {0, 1, 2})));
  EXPECT_FALSE(parse_json_text(run({"projective", "--input", low}).out)["projective"].get<bool>());
}

TEST_F(CliTest, OutFileAndTable) {
  const std::string out = (dir_ / "o.json").string();
  const CliRun r = run({"chain", "--n", "4", "--out", out});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(ss.str(), run({"chain", "--n", "4"}).out);
  const CliRun tab = run({"chain", "--n", "3", "--table"});
  EXPECT_NE(tab.out.find("1/2"), std::string::npos);
}

TEST_F(CliTest, SubprocessMatchesInProcess) {
  const std::string out = (dir_ / "sub.json").string();
  const std::string cmd = std::string(MVSR_CLI_PATH) + " gamma --samples 300 --seed 5 --out " + out;
  const int status = std::system(cmd.c_str());
  ASSERT_TRUE(WIFEXITED(status));
  EXPECT_EQ(WEXITSTATUS(status), 2);
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(ss.str(), run({"gamma", "--samples", "300", "--seed", "5"}).out);
}
