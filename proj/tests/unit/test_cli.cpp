// Copyright 2026 The invforge Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"

namespace invforge::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string line(const Outcome& o) {
  std::string s = o.out;
  if (!s.empty() && s.back() == '\n') s.pop_back();
  return s;
}

nlohmann::json parsed(const Outcome& o) { return nlohmann::json::parse(o.out); }

TEST(Cli, ExactExamples) {
  EXPECT_EQ(line(call({"transvect", "--a", "x0^2", "--b", "x1^2", "--k", "1"})),
            R"({"result":"x0*x1"})");
  EXPECT_EQ(line(call({"alpha-rank", "--n", "1", "--d", "4", "--r", "2"})),
            R"({"rows":15,"cols":15,"rank":15})");
  EXPECT_EQ(line(call({"membership", "--d", "4", "--f", "x0^4 + x1^4"})),
            R"j({"member":false,"witness":"U(1,1)"})j");
}

TEST(Cli, Values) {
  EXPECT_EQ(parsed(call({"n1", "--e", "3", "--p", "2", "--brute"}))["value"], "5184");
  EXPECT_EQ(parsed(call({"n1", "--e", "3", "--p", "2", "--closed"}))["value"], "5184");
  EXPECT_EQ(parsed(call({"dixon", "--a", "-2", "--b", "-3/2", "--c", "-3/2"}))["value"], "-16");
  EXPECT_EQ(parsed(call({"ideal-char", "--r", "3", "--d", "8"}))["dimension"], "74");
  EXPECT_EQ(parsed(call({"tau-check", "--r", "2", "--e", "1", "--p", "1"}))["holds"], true);
  const auto g = parsed(call({"g-check", "--r", "2", "--e", "1", "--p", "1", "--pprime", "1"}));
  EXPECT_EQ(g["equal"], true);
  EXPECT_EQ(g["n3"], "40");
  const auto m = parsed(call({"m0", "--n", "1", "--e", "1"}));
  EXPECT_EQ(m["excluded"], true);
  EXPECT_EQ(parsed(call({"plethysm", "--s2", "2"}))["decomposition"],
            nlohmann::json::array({"4:1", "0:1"}));
  EXPECT_EQ(parsed(call({"plethysm", "--r", "2", "--d", "2"}))["dimension"], "6");
}

TEST(Cli, EverySubcommandEmitsJson) {
  const std::vector<std::vector<std::string>> cases = {
      {"transvect", "--a", "a0*x0 + a1*x1", "--b", "x0^2", "--k", "1", "--vars", "a0,a1"},
      {"pi-p", "--g", "x0*y1 - x1*y0", "--p", "0"},
      {"alpha-rank", "--n", "1", "--d", "2", "--r", "2"},
      {"n1", "--e", "2", "--p", "1", "--brute"},
      {"n2", "--p", "2", "--q", "2", "--m", "1"},
      {"n3", "--r", "2", "--e", "1", "--pprime", "1", "--p", "1"},
      {"w", "--p", "2", "--q", "3", "--k", "2"},
      {"j", "--s", "3", "--p", "1"},
      {"f32", "--a", "-2", "--b", "1", "--c", "1", "--d", "2", "--e", "2"},
      {"dixon", "--a", "-2", "--b", "-3", "--c", "-3"},
      {"tau", "--r", "2", "--e", "1", "--p", "1"},
      {"tau-check", "--r", "2", "--e", "2", "--p", "1"},
      {"g-check", "--r", "2", "--e", "1", "--p", "0", "--pprime", "0"},
      {"covariant", "--d", "4", "--f", "x0^3*x1", "--name", "U(1,1)"},
      {"membership", "--d", "4", "--f", "x0^2*x1^2"},
      {"plethysm", "--r", "3", "--d", "4"},
      {"ideal-char", "--r", "3", "--d", "4"},
      {"m0", "--n", "3", "--e", "2"},
  };
  for (const auto& args : cases) {
    const Outcome o = call(args);
    EXPECT_EQ(o.code, kExitOk) << args.front() << ": " << o.err;
    EXPECT_NO_THROW((void)parsed(o)) << args.front() << ": " << o.out;
    // Deterministic output.
    EXPECT_EQ(call(args).out, o.out) << args.front();
  }
}

TEST(Cli, ListModesPrintJsonLines) {
  const Outcome o = call({"n1", "--e", "2", "--p", "1", "--brute", "--list"});
  ASSERT_EQ(o.code, kExitOk);
  std::istringstream in(o.out);
  std::string l;
  int lines = 0;
  while (std::getline(in, l)) {
    if (l.empty()) continue;
    EXPECT_NO_THROW((void)nlohmann::json::parse(l)) << l;
    ++lines;
  }
  EXPECT_GT(lines, 1);
  const Outcome t = call({"tau", "--r", "2", "--e", "1", "--p", "1", "--list"});
  EXPECT_EQ(t.code, kExitOk);
}

TEST(Cli, UsageErrorsNameTheFlag) {
  Outcome o = call({"transvect", "--a", "x0^2", "--b", "x1^2"});
  EXPECT_EQ(o.code, kExitUsage);
  EXPECT_NE(o.err.find("--k"), std::string::npos) << o.err;

  o = call({"n1", "--e", "-1", "--p", "0", "--brute"});
  EXPECT_EQ(o.code, kExitUsage);
  EXPECT_NE(o.err.find("--e"), std::string::npos) << o.err;

  o = call({"dixon", "--a", "-2", "--b", "x", "--c", "1"});
  EXPECT_EQ(o.code, kExitUsage);
  EXPECT_NE(o.err.find("--b"), std::string::npos) << o.err;

  o = call({"n1", "--e", "2", "--p", "1", "--brute", "--closed"});
  EXPECT_EQ(o.code, kExitUsage);

  o = call({"verify-all", "--level", "space"});
  EXPECT_EQ(o.code, kExitUsage);
  EXPECT_NE(o.err.find("--level"), std::string::npos) << o.err;

  EXPECT_EQ(call({}).code, kExitUsage);
  EXPECT_EQ(call({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(call({"--help"}).code, kExitOk);
}

TEST(Cli, DomainErrors) {
  Outcome o = call({"alpha-rank", "--n", "1", "--d", "3", "--r", "2"});
  EXPECT_EQ(o.code, kExitDomain);
  EXPECT_NO_THROW((void)nlohmann::json::parse(o.err));
  EXPECT_EQ(call({"membership", "--d", "3", "--f", "x0^3"}).code, kExitDomain);
  EXPECT_EQ(call({"n1", "--e", "1", "--p", "2", "--brute"}).code, kExitDomain);
  EXPECT_EQ(call({"transvect", "--a", "x0^2 + x1", "--b", "x1", "--k", "1"}).code,
            kExitDomain);
}

TEST(Cli, SizeCapFromEnvironment) {
  const std::vector<std::string> args = {"alpha-rank", "--n", "1", "--d", "4", "--r", "2"};
  ::setenv("INVFORGE_SIZE_CAP", "100", 1);
  EXPECT_EQ(call(args).code, kExitDomain);
  ::setenv("INVFORGE_SIZE_CAP", "225", 1);
  EXPECT_EQ(call(args).code, kExitOk);
  ::setenv("INVFORGE_SIZE_CAP", "lots", 1);
  const Outcome bad = call(args);
  EXPECT_EQ(bad.code, kExitUsage);
  EXPECT_NE(bad.err.find("INVFORGE_SIZE_CAP"), std::string::npos);
  ::unsetenv("INVFORGE_SIZE_CAP");
  EXPECT_EQ(call(args).code, kExitOk);
}

TEST(Cli, ExportWritesMatrix) {
  const auto path = std::filesystem::temp_directory_path() / "invforge_export_test.txt";
  std::filesystem::remove(path);
  const Outcome o = call({"alpha-rank", "--n", "1", "--d", "2", "--r", "2", "--export", path.string()});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  std::ifstream in(path);
  std::string first;
  std::getline(in, first);
  EXPECT_EQ(first, "shape 6 6");
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace invforge::cli
