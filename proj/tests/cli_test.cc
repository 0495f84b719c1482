// Copyright 2026 The Zerocenter Authors.
//
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


#include "zerocenter/cli.h"

#include <gtest/gtest.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "testing.h"

namespace zerocenter {
namespace {

using ::zerocenter::testing::CorpusPath;
using ::zerocenter::testing::ReadFile;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun Cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

class TempFile {
 public:
  explicit TempFile(const std::string &text) {
    path_ = (std::filesystem::temp_directory_path() /
             ("zerocenter_cli_" + std::to_string(counter_++) + "_" +
              std::to_string(::getpid()) + ".json"))
                .string();
    std::ofstream(path_) << text;
  }
  ~TempFile() { std::remove(path_.c_str()); }
  const std::string &path() const { return path_; }

 private:
  static inline int counter_ = 0;
  std::string path_;
};

std::string ReplaceAll(std::string text, const std::string &from,
                       const std::string &to) {
  for (size_t at = text.find(from); at != std::string::npos;
       at = text.find(from, at + to.size())) {
    text.replace(at, from.size(), to);
  }
  return text;
}

TEST(CliTest, CheckPasses) {
  const CliRun r = Cli({"check", CorpusPath("zta_emp_ga.json")});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("gold: all labels matched"), std::string::npos);
}

TEST(CliTest, CheckWithTrace) {
  const CliRun r = Cli({"check", "--trace", CorpusPath("zta_ex_ga.json")});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("HYP | CB"), std::string::npos);
}

TEST(CliTest, ResolveWithoutZta) {
  const CliRun r = Cli({"resolve", CorpusPath("zta_ex_ga.json"), "--no-zta",
                     "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["readings"][0]["steps"][3]["transition"], "SMOOTH-SHIFT");
  for (const auto &reading : j["readings"]) {
    for (const auto &step : reading["steps"]) EXPECT_FALSE(step["zta"]);
  }
}

TEST(CliTest, ResolveBeam) {
  const CliRun r = Cli({"resolve", "--beam", "1", "--format", "json",
                     CorpusPath("zta_ex_wa.json")});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(nlohmann::json::parse(r.out)["readings"].size(), 1u);
  EXPECT_EQ(Cli({"resolve", "--beam", "0", CorpusPath("zta_ex_wa.json")}).code,
            kExitUsage);
}

TEST(CliTest, EstablishedCbFlag) {
  EXPECT_EQ(Cli({"check", CorpusPath("shift_ex.json")}).code, kExitOk);
  EXPECT_EQ(Cli({"check", "--no-established-cb", CorpusPath("shift_ex.json")}).code,
            kExitGoldMismatch);
}

TEST(CliTest, Validate) {
  CliRun r = Cli({"validate", CorpusPath("felicity/wa_indefinite.json")});
  EXPECT_EQ(r.code, kExitInvalidInput);
  EXPECT_NE(r.out.find("WA_ON_INDEFINITE"), std::string::npos) << r.out;
  r = Cli({"validate", "--format", "json",
           CorpusPath("felicity/empathy_hearer_new.json")});
  EXPECT_EQ(r.code, kExitInvalidInput);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_FALSE(j["valid"]);
  EXPECT_EQ(j["diagnostics"][0]["code"], "EMPATHY_NOT_EVOKED");
  r = Cli({"validate", CorpusPath("felicity/empathy_evoked.json")});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "valid\n");
}

TEST(CliTest, StrictRejectsFelicityViolations) {
  const std::string path = CorpusPath("felicity/wa_indefinite.json");
  EXPECT_EQ(Cli({"resolve", path}).code, kExitOk);
  EXPECT_EQ(Cli({"resolve", "--strict", path}).code, kExitInvalidInput);
}

TEST(CliTest, Oracle) {
  CliRun r = Cli({"oracle", CorpusPath("zta_ex_wa.json")});
  EXPECT_EQ(r.code, kExitOk) << r.out;
  EXPECT_EQ(r.out.rfind("EQUIVALENT\n", 0), 0u);
  r = Cli({"oracle", "--beam", "1", "--format", "json",
           CorpusPath("zta_ex_wa.json")});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(nlohmann::json::parse(r.out)["heads_only"]);
}

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(Cli({}).code, kExitUsage);
  EXPECT_EQ(Cli({"explain", CorpusPath("shift_ex.json")}).code, kExitUsage);
  EXPECT_EQ(Cli({"resolve"}).code, kExitUsage);
  EXPECT_EQ(Cli({"resolve", "--format", "xml", CorpusPath("shift_ex.json")}).code,
            kExitUsage);
  EXPECT_EQ(Cli({"validate", "--beam", "3", CorpusPath("shift_ex.json")}).code,
            kExitUsage);
  EXPECT_EQ(Cli({"--help"}).code, kExitOk);
}

TEST(CliTest, MissingFile) {
  const CliRun r = Cli({"resolve", "/nonexistent/discourse.json"});
  EXPECT_EQ(r.code, kExitIo);
  EXPECT_NE(r.err.find("cannot read"), std::string::npos);
}

TEST(CliTest, MalformedInput) {
  TempFile f("{\"entities\": [");
  const CliRun r = Cli({"resolve", f.path()});
  EXPECT_EQ(r.code, kExitInvalidInput);
  EXPECT_NE(r.err.find("PARSE"), std::string::npos);
}

TEST(CliTest, GoldMismatch) {
  const std::string text = ReadFile(CorpusPath("cont_ret_ex.json"));
  // Swap the supports so the retain reading becomes the expected one.
  std::string swapped = ReplaceAll(text, "\"support_count\": 27", "\"support_count\": @");
  swapped = ReplaceAll(swapped, "\"support_count\": 1,", "\"support_count\": 27,");
  swapped = ReplaceAll(swapped, "\"support_count\": @", "\"support_count\": 1");
  ASSERT_NE(swapped, text);
  TempFile f(swapped);
  const CliRun r = Cli({"check", f.path()});
  EXPECT_EQ(r.code, kExitGoldMismatch) << r.out;
  EXPECT_NE(r.out.find("gold: MISMATCH"), std::string::npos);
}

TEST(CliTest, Unresolvable) {
  TempFile f(R"({
  "entities": [
    {"id": "rock", "animate": false, "hearer_old": true, "definite": true}
  ],
  "utterances": [
    {"verb": {"lemma": "aru", "subcat": ["subj"], "sortal": {}, "empathy_locus": null},
     "args": [{"role": "subj", "marking": "ga", "realization": {"np": "rock"}}],
     "others": [], "gloss": ""},
    {"verb": {"lemma": "hasiru", "subcat": ["subj"], "sortal": {"subj": "animate"},
              "empathy_locus": null},
     "args": [{"role": "subj", "marking": "none", "realization": "zero"}],
     "others": [], "gloss": ""}
  ]
})");
  const CliRun r = Cli({"resolve", f.path()});
  EXPECT_EQ(r.code, kExitUnresolvable);
  EXPECT_NE(r.err.find("2"), std::string::npos);
}

TEST(CliTest, JsonOutputIsStable) {
  const std::vector<std::string> args = {"resolve", "--trace", "--format",
                                         "json", CorpusPath("zta_emp_cont.json")};
  EXPECT_EQ(Cli(args).out, Cli(args).out);
}

}  // namespace
}  // namespace zerocenter
