#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "gieseker/cli.hpp"

using namespace gieseker;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "gieseker");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::size_t lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST(Cli, CharFd) {
  auto r = cli({"char-fd", "--n", "2", "--m", "3", "--r", "2", "--format", "latex"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "W^{*}_{(2,1)} + (q+q^{-1})W^{*}_{(3)}\n");

  r = cli({"char-fd", "--n", "2", "--m", "2", "--r", "1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("gcd"), std::string::npos);
  EXPECT_TRUE(r.out.empty());

  r = cli({"char-fd", "--n", "1", "--m", "4", "--r", "3", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  const auto j = json::parse(r.out);
  ASSERT_EQ(j["terms"].size(), 1u);
  EXPECT_EQ(j["terms"][0]["partition"], json::parse("[4]"));
  EXPECT_EQ(glchar_from_json<QExpPoly>(j), char_fd(1, 4, 3));
}

TEST(Cli, GlobalFlagsBeforeCommand) {
  auto r = cli({"--format", "latex", "char-fd", "--n", "2", "--m", "3", "--r", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "W^{*}_{(2,1)} + (q+q^{-1})W^{*}_{(3)}\n");
}

TEST(Cli, CharMinsupp) {
  auto r = cli({"char-minsupp", "--n", "2", "--m", "2", "--r", "2", "--lambda", "2", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(glchar_from_json<QRatFun>(json::parse(r.out)), char_minsupp(2, 2, 2, Partition{2}));

  EXPECT_EQ(cli({"char-minsupp", "--n", "2", "--m", "2", "--r", "2", "--lambda", "1"}).code, 2);
  EXPECT_EQ(cli({"char-minsupp", "--n", "2", "--m", "2", "--r", "2", "--lambda", "1,2"}).code, 2);

  for (const char* fmt : {"text", "json", "latex"}) {
    const auto a = cli({"char-minsupp", "--n", "3", "--m", "4", "--r", "2", "--lambda", "1", "--format", fmt});
    const auto b = cli({"char-fd", "--n", "3", "--m", "4", "--r", "2", "--format", fmt});
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out) << fmt;
  }
}

TEST(Cli, Parking) {
  auto r = cli({"parking", "count", "--m", "3", "--n", "2", "--r", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "10\n");

  r = cli({"parking", "enumerate", "--m", "1", "--n", "1", "--r", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(lines(r.out), 2u);
  std::istringstream in(r.out);
  for (std::string line; std::getline(in, line);) EXPECT_NO_THROW(parking_from_json(json::parse(line), 2));

  r = cli({"parking", "t0-char", "--m", "3", "--n", "2", "--r", "2", "--format", "latex"});
  EXPECT_EQ(r.out, "2q_1^{-3} + 3q_1^{-2}q_2^{-1} + 3q_1^{-1}q_2^{-2} + 2q_2^{-3}\n");

  r = cli({"parking", "enumerate", "--m", "3", "--n", "2", "--r", "2", "--render", "ascii"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("+-+-+"), std::string::npos);

  EXPECT_EQ(cli({"parking", "count", "--m", "0", "--n", "2", "--r", "2"}).code, 2);
  EXPECT_EQ(cli({"parking"}).code, 2);
}

TEST(Cli, OtherCommands) {
  EXPECT_EQ(cli({"dim", "--n", "2", "--m", "3", "--r", "2"}).out, "10\n");
  EXPECT_EQ(cli({"qcatalan", "--n", "3", "--m", "2", "--r", "1", "--d", "1"}).out, "q + q^-1\n");
  EXPECT_EQ(cli({"qcatalan", "--n", "2", "--m", "3", "--r", "3", "--d", "2"}).code, 2);
  EXPECT_EQ(cli({"dyck", "--m", "3", "--n", "2"}).out, "UUURR\nUURUR\n");
  EXPECT_EQ(cli({"dyck", "--m", "3", "--n", "2", "--frobenius"}).out, "2 s(3) + s(2,1)\n");
  EXPECT_EQ(cli({"dyck", "--m", "3", "--n", "2", "--r", "2"}).out, "[W(2,1)] + 2 [W(3)]\n");
  EXPECT_EQ(cli({"char-cherednik", "--n", "3", "--m", "2"}).out, "[V(2,1)] + (q + q^-1) [V(3)]\n");
  EXPECT_EQ(cli({"char-standard", "--beta", "1", "--n", "3"}).out, "s(1)\n");
  EXPECT_EQ(cli({"genfun", "--n", "1", "--r", "2", "--m", "1"}).out, "q1^-1 + q2^-1\n");
  EXPECT_EQ(cli({"genfun", "--n", "3", "--r", "1", "--m", "0"}).out.rfind("nonintegral: ", 0), 0u);
}

TEST(Cli, Errors) {
  EXPECT_EQ(cli({}).code, 2);
  EXPECT_EQ(cli({"no-such-command"}).code, 2);
  EXPECT_EQ(cli({"char-fd", "--n", "2", "--m", "3"}).code, 2);
  EXPECT_EQ(cli({"char-fd", "--n", "x", "--m", "3", "--r", "1"}).code, 2);
  EXPECT_EQ(cli({"char-fd", "--n", "2", "--m", "3", "--r", "1", "--format", "yaml"}).code, 2);
  EXPECT_EQ(cli({"--help"}).code, 0);
}

TEST(Cli, OutputFileAndDeterminism) {
  const std::string path = testing::TempDir() + "gieseker_cli_out.json";
  auto r = cli({"char-fd", "--n", "3", "--m", "4", "--r", "3", "--format", "json", "--output", path});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  EXPECT_EQ(buf.str(), cli({"char-fd", "--n", "3", "--m", "4", "--r", "3", "--format", "json"}).out);
  std::remove(path.c_str());
  EXPECT_EQ(cli({"char-fd", "--n", "3", "--m", "4", "--r", "3"}).out, cli({"char-fd", "--n", "3", "--m", "4", "--r", "3"}).out);
}

TEST(Cli, Verify) {
  auto r = cli({"verify", "--max-n", "1", "--max-m", "1", "--max-r", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("0 failed"), std::string::npos);

  r = cli({"verify", "--max-n", "4", "--max-m", "5", "--max-r", "3", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out)["failures"], 0);

  r = cli({"verify", "--max-n", "2", "--max-m", "3", "--max-r", "2", "--inject-fault", "genfun"});
  EXPECT_NE(r.code, 0);
  EXPECT_NE(r.out.find("FAIL n=1 m=1 r=1 genfun"), std::string::npos);

  EXPECT_EQ(cli({"verify", "--max-n", "0", "--max-m", "1", "--max-r", "1"}).code, 2);
}
