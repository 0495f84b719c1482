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


#include "zerocenter/oracle.h"

#include <gtest/gtest.h>

#include "testing.h"

namespace zerocenter {
namespace {

using ::zerocenter::testing::Frame;
using ::zerocenter::testing::LoadCorpus;
using ::zerocenter::testing::MakeUtterance;
using ::zerocenter::testing::Overt;
using ::zerocenter::testing::Person;
using ::zerocenter::testing::WideConfig;
using R = GrammaticalRole;

// Number of complete readings reachable through Extend without pruning.
size_t CountReadings(const Engine &engine, const Discourse &d,
                     const Hypothesis &h) {
  const size_t next = h.steps.size();
  if (next == d.utterances().size()) return 1;
  size_t total = 0;
  for (const Hypothesis &child :
       engine.Extend(h, d.utterances()[next]).children) {
    total += CountReadings(engine, d, child);
  }
  return total;
}

TEST(EnumerateAllTest, ContinueRetainAndShiftExamples) {
  const auto cont_ret = EnumerateAll(LoadCorpus("cont_ret_ex.json").discourse, {});
  ASSERT_EQ(cont_ret.size(), 2u);
  EXPECT_EQ(cont_ret[0].score, 0);
  EXPECT_EQ(cont_ret[1].score, 1);
  // Two ordinary readings plus two zero topic variants of the last step.
  const auto shift = EnumerateAll(LoadCorpus("shift_ex.json").discourse, {});
  ASSERT_EQ(shift.size(), 4u);
  EXPECT_EQ(shift[0].score, 3);
  EXPECT_EQ(shift[0].steps[3].transition, Transition::kSmoothShift);
  for (size_t i = 1; i < shift.size(); ++i) {
    EXPECT_EQ(shift[i].score, 4);
    EXPECT_EQ(shift[i].steps[3].transition, Transition::kRoughShift);
  }
}

TEST(EnumerateAllTest, SingleUtterance) {
  Discourse d({Person("a")},
              {MakeUtterance(1, Frame({R::kSubj}),
                             {Overt(R::kSubj, Marking::kGa, "a")})});
  const auto all = EnumerateAll(d, {});
  ASSERT_EQ(all.size(), 1u);
  EXPECT_EQ(all[0].score, 0);
  EXPECT_FALSE(all[0].steps[0].transition.has_value());
  EXPECT_EQ(TransitionLabel(all[0].steps[0]), "INITIAL");
}

TEST(EnumerateAllTest, CountMatchesRecursiveExpansion) {
  for (const std::string &name : testing::CorpusFiles()) {
    const Corpus c = LoadCorpus(name);
    Engine engine(c.discourse, WideConfig());
    size_t expected = 0;
    for (const Hypothesis &h : engine.Start().children) {
      expected += CountReadings(engine, c.discourse, h);
    }
    EXPECT_EQ(EnumerateAll(c.discourse, {}).size(), expected) << name;
  }
}

TEST(EnumerateAllTest, SizeLimit) {
  const Corpus c = LoadCorpus("zta_ex_wa.json");
  try {
    EnumerateAll(c.discourse, {}, 1);
    FAIL() << "expected an error";
  } catch (const OracleError &e) {
    EXPECT_EQ(e.code(), OracleError::Code::kSizeLimit);
  }
  EXPECT_NO_THROW(EnumerateAll(c.discourse, {}));
}

TEST(CheckEquivalenceTest, CorpusWithWideBeam) {
  for (const std::string &name : testing::CorpusFiles()) {
    const Corpus c = LoadCorpus(name);
    for (bool zta : {true, false}) {
      EngineConfig config = WideConfig();
      config.zta_enabled = zta;
      const EquivalenceReport r = CheckEquivalence(c.discourse, config);
      EXPECT_TRUE(r.equivalent) << name << ": "
                                << (r.discrepancies.empty() ? ""
                                                            : r.discrepancies[0]);
      EXPECT_FALSE(r.heads_only);
      EXPECT_EQ(r.engine_readings, r.oracle_readings) << name;
    }
  }
}

TEST(CheckEquivalenceTest, NarrowBeamComparesHeads) {
  for (const std::string &name : testing::CorpusFiles()) {
    const Corpus c = LoadCorpus(name);
    EngineConfig config;
    config.beam_width = 1;
    const EquivalenceReport r = CheckEquivalence(c.discourse, config);
    EXPECT_TRUE(r.equivalent) << name;
    EXPECT_EQ(r.heads_only, r.oracle_readings > 1) << name;
  }
}

TEST(CheckEquivalenceTest, RandomDiscourses) {
  int resolvable = 0;
  for (uint32_t seed = 0; seed < 1000; ++seed) {
    const Discourse d = testing::RandomDiscourse(seed);
    const EquivalenceReport r = CheckEquivalence(d, WideConfig());
    EXPECT_TRUE(r.equivalent)
        << "seed " << seed << ": "
        << (r.discrepancies.empty() ? r.engine_status : r.discrepancies[0]);
    resolvable += r.engine_status == "OK";
  }
  // The generator must exercise the search, not just failure paths.
  EXPECT_GT(resolvable, 500);
}

TEST(CheckEquivalenceTest, BothSidesAgreeOnUnresolvable) {
  Discourse d({testing::Thing("rock", true, true)},
              {MakeUtterance(1, Frame({R::kSubj}),
                             {Overt(R::kSubj, Marking::kGa, "rock")}),
               MakeUtterance(2, Frame({R::kSubj}, {R::kSubj}),
                             {testing::Zero(R::kSubj)})});
  const EquivalenceReport r = CheckEquivalence(d, WideConfig());
  EXPECT_TRUE(r.equivalent);
  EXPECT_EQ(r.engine_status, "UNRESOLVABLE@2");
  EXPECT_EQ(r.oracle_status, "UNRESOLVABLE@2");
}

}  // namespace
}  // namespace zerocenter
