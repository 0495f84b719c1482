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


#include "zerocenter/discourse.h"

#include <gtest/gtest.h>

#include "testing.h"

namespace zerocenter {
namespace {

using ::zerocenter::testing::Frame;
using ::zerocenter::testing::MakeUtterance;
using ::zerocenter::testing::Overt;
using ::zerocenter::testing::Zero;
using R = GrammaticalRole;

const SalienceRole kAllSalience[] = {
    SalienceRole::kZeroTopic, SalienceRole::kGrammTopic, SalienceRole::kEmpathy,
    SalienceRole::kSubj,      SalienceRole::kObj2,       SalienceRole::kObj,
    SalienceRole::kOther,
};

TEST(SalienceRoleTest, OrderIsStrictTotal) {
  for (SalienceRole a : kAllSalience) {
    EXPECT_FALSE(Outranks(a, a));
    for (SalienceRole b : kAllSalience) {
      if (a != b) EXPECT_NE(Outranks(a, b), Outranks(b, a));
      for (SalienceRole c : kAllSalience) {
        if (Outranks(a, b) && Outranks(b, c)) EXPECT_TRUE(Outranks(a, c));
      }
    }
  }
}

TEST(SalienceRoleTest, ListedOrderHighestFirst) {
  for (size_t i = 0; i + 1 < std::size(kAllSalience); ++i) {
    EXPECT_TRUE(Outranks(kAllSalience[i], kAllSalience[i + 1]));
  }
}

TEST(GrammaticalRoleTest, DefaultSalienceFollowsRoleOrder) {
  EXPECT_EQ(ToSalienceRole(R::kSubj), SalienceRole::kSubj);
  EXPECT_EQ(ToSalienceRole(R::kObj2), SalienceRole::kObj2);
  EXPECT_EQ(ToSalienceRole(R::kObj), SalienceRole::kObj);
  EXPECT_EQ(ToSalienceRole(R::kOther), SalienceRole::kOther);
  EXPECT_LT(Rank(R::kSubj), Rank(R::kObj2));
  EXPECT_LT(Rank(R::kObj2), Rank(R::kObj));
  EXPECT_LT(Rank(R::kObj), Rank(R::kOther));
}

TEST(NamesTest, RoundTrip) {
  for (R role : {R::kSubj, R::kObj2, R::kObj, R::kOther}) {
    EXPECT_EQ(ParseRole(Name(role)), role);
  }
  for (Marking m : {Marking::kWa, Marking::kGa, Marking::kNi, Marking::kO,
                    Marking::kNone}) {
    EXPECT_EQ(ParseMarking(Name(m)), m);
  }
  for (Sort s : {Sort::kAny, Sort::kAnimate}) EXPECT_EQ(ParseSort(Name(s)), s);
  EXPECT_FALSE(ParseRole("SUBJ").has_value());
  EXPECT_FALSE(ParseMarking("mo").has_value());
  EXPECT_EQ(Name(Transition::kSmoothShift), "SMOOTH-SHIFT");
  EXPECT_EQ(Name(SalienceRole::kZeroTopic), "zero-topic");
}

TEST(TransitionTest, OrdinalsAreCosts) {
  EXPECT_EQ(Ordinal(Transition::kContinue), 0);
  EXPECT_EQ(Ordinal(Transition::kRetain), 1);
  EXPECT_EQ(Ordinal(Transition::kSmoothShift), 2);
  EXPECT_EQ(Ordinal(Transition::kRoughShift), 3);
}

TEST(StepTest, CostAndLabel) {
  Step s;
  EXPECT_EQ(s.Cost(), 0);
  EXPECT_EQ(TransitionLabel(s), "INITIAL");
  s.segment_reset = true;
  EXPECT_EQ(s.Cost(), kSegmentResetCost);
  EXPECT_EQ(TransitionLabel(s), "RESET");
  s.segment_reset = false;
  s.transition = Transition::kRetain;
  EXPECT_EQ(s.Cost(), 1);
  EXPECT_EQ(TransitionLabel(s), "RETAIN");
}

TEST(StepTest, OriginalCbIgnoresUnification) {
  Step s;
  s.state.cb = EntityId("taroo");
  EXPECT_EQ(s.OriginalCb(), EntityId("taroo"));
  s.cb_unified = true;
  EXPECT_FALSE(s.OriginalCb().has_value());
}

TEST(VerbFrameTest, Lookup) {
  VerbFrame f = Frame({R::kSubj, R::kObj}, {R::kSubj}, R::kObj);
  EXPECT_EQ(f.SortOf(R::kSubj), Sort::kAnimate);
  EXPECT_EQ(f.SortOf(R::kObj), Sort::kAny);
  EXPECT_TRUE(f.Subcategorizes(R::kObj));
  EXPECT_FALSE(f.Subcategorizes(R::kObj2));
  EXPECT_EQ(f.SlotOf(R::kObj), 1);
  EXPECT_EQ(f.SlotOf(R::kOther), -1);
}

TEST(UtteranceTest, Accessors) {
  Utterance u = MakeUtterance(1, Frame({R::kSubj, R::kObj2, R::kObj}),
                              {Overt(R::kSubj, Marking::kWa, "taroo"),
                               Zero(R::kObj2), Zero(R::kObj)});
  EXPECT_EQ(u.ZeroCount(), 2);
  ASSERT_NE(u.TopicArgument(), nullptr);
  EXPECT_EQ(u.TopicArgument()->realization.entity(), EntityId("taroo"));
  ASSERT_NE(u.ArgumentFor(R::kObj2), nullptr);
  EXPECT_TRUE(u.ArgumentFor(R::kObj2)->realization.is_zero());
  EXPECT_EQ(u.ArgumentFor(R::kOther), nullptr);
}

TEST(AssignmentTest, MakeAssignmentFillsZerosInSubcatOrder) {
  Utterance u = MakeUtterance(1, Frame({R::kSubj, R::kObj2, R::kObj}),
                              {Zero(R::kSubj), Zero(R::kObj2),
                               Overt(R::kObj, Marking::kO, "computer")});
  Assignment a = MakeAssignment(u, {EntityId("taroo"), EntityId("john")});
  ASSERT_EQ(a.bindings().size(), 3u);
  EXPECT_EQ(*a.Find(R::kSubj), EntityId("taroo"));
  EXPECT_EQ(*a.Find(R::kObj2), EntityId("john"));
  EXPECT_EQ(*a.Find(R::kObj), EntityId("computer"));
  EXPECT_TRUE(a.Binds(EntityId("john")));
  EXPECT_FALSE(a.Binds(EntityId("hanako")));
  EXPECT_EQ(a.Find(R::kOther), nullptr);
}

TEST(AssignmentTest, MakeAssignmentRejectsArityMismatch) {
  Utterance u = MakeUtterance(1, Frame({R::kSubj}), {Zero(R::kSubj)});
  EXPECT_THROW(MakeAssignment(u, {}), std::invalid_argument);
  EXPECT_THROW(MakeAssignment(u, {EntityId("a"), EntityId("b")}),
               std::invalid_argument);
  Utterance missing = MakeUtterance(1, Frame({R::kSubj, R::kObj}), {Zero(R::kSubj)});
  EXPECT_THROW(MakeAssignment(missing, {EntityId("a")}), std::invalid_argument);
}

TEST(DiscourseTest, FindDeclaredEntities) {
  Discourse d({testing::Person("taroo")}, {});
  ASSERT_NE(d.Find(EntityId("taroo")), nullptr);
  EXPECT_TRUE(d.Find(EntityId("taroo"))->animate);
  EXPECT_EQ(d.Find(EntityId("ziroo")), nullptr);
}

TEST(CenterStateTest, CpAndMembership) {
  CenterState s;
  s.cf = {{EntityId("hanako"), SalienceRole::kEmpathy},
          {EntityId("taroo"), SalienceRole::kSubj}};
  EXPECT_EQ(s.Cp(), EntityId("hanako"));
  EXPECT_TRUE(s.InCf(EntityId("taroo")));
  EXPECT_FALSE(s.InCf(EntityId("car")));
}

}  // namespace
}  // namespace zerocenter
