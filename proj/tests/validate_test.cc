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


#include "zerocenter/validate.h"

#include <gtest/gtest.h>

#include "testing.h"

namespace zerocenter {
namespace {

using ::zerocenter::testing::Frame;
using ::zerocenter::testing::LoadCorpus;
using ::zerocenter::testing::MakeUtterance;
using ::zerocenter::testing::Overt;
using ::zerocenter::testing::Person;
using ::zerocenter::testing::Thing;
using ::zerocenter::testing::Zero;
using R = GrammaticalRole;

std::vector<ViolationCode> Codes(const std::vector<Violation> &vs) {
  std::vector<ViolationCode> codes;
  for (const Violation &v : vs) codes.push_back(v.code);
  return codes;
}

TEST(ValidateTest, WaOnIndefiniteWhSubject) {
  Discourse d({{EntityId("dono-hito"), true, false, false}, Person("ziroo")},
              {MakeUtterance(1, Frame({R::kSubj, R::kObj}),
                             {Overt(R::kSubj, Marking::kWa, "dono-hito"),
                              Overt(R::kObj, Marking::kO, "ziroo")})});
  const auto vs = ValidateDiscourse(d);
  ASSERT_EQ(Codes(vs), std::vector{ViolationCode::kWaOnIndefinite});
  EXPECT_EQ(vs[0].utterance_index, 1);
  EXPECT_EQ(vs[0].role, R::kSubj);
}

TEST(ValidateTest, GaOnIndefiniteIsFine) {
  Discourse d({{EntityId("dono-hito"), true, false, false}, Person("ziroo")},
              {MakeUtterance(1, Frame({R::kSubj, R::kObj}),
                             {Overt(R::kSubj, Marking::kGa, "dono-hito"),
                              Overt(R::kObj, Marking::kO, "ziroo")})});
  EXPECT_TRUE(ValidateDiscourse(d).empty());
}

TEST(ValidateTest, HearerNewEmpathyLocus) {
  Discourse d({Person("taroo"), {EntityId("dareka"), true, false, true},
               Thing("money")},
              {MakeUtterance(1, Frame({R::kSubj, R::kObj2, R::kObj}, {}, R::kObj2),
                             {Overt(R::kSubj, Marking::kGa, "taroo"),
                              Overt(R::kObj2, Marking::kNi, "dareka"),
                              Overt(R::kObj, Marking::kO, "money")})});
  const auto vs = ValidateDiscourse(d);
  ASSERT_EQ(Codes(vs), std::vector{ViolationCode::kEmpathyNotEvoked});
  EXPECT_EQ(vs[0].role, R::kObj2);
}

TEST(ValidateTest, ZeroEmpathyLocusNeedsNoCheck) {
  Discourse d({Person("taroo")},
              {MakeUtterance(1, Frame({R::kSubj, R::kObj2}, {}, R::kObj2),
                             {Overt(R::kSubj, Marking::kGa, "taroo"),
                              Zero(R::kObj2)})});
  EXPECT_TRUE(ValidateDiscourse(d).empty());
}

TEST(ValidateTest, WellFormedInvitation) {
  Discourse d({Person("taroo"), Person("hanako")},
              {MakeUtterance(1, Frame({R::kSubj, R::kObj}, {R::kSubj, R::kObj}),
                             {Overt(R::kSubj, Marking::kWa, "taroo"),
                              Overt(R::kObj, Marking::kO, "hanako")})});
  EXPECT_TRUE(ValidateDiscourse(d).empty());
}

TEST(ValidateTest, StructuralProblemsAllReported) {
  Utterance u = MakeUtterance(1, Frame({R::kSubj, R::kObj}),
                              {Overt(R::kSubj, Marking::kWa, "ghost"),
                               Zero(R::kObj2)});
  u.args.push_back({R::kObj, Marking::kWa, Realization::Zero()});
  u.others.push_back(EntityId("phantom"));
  Discourse d({Person("taroo"), Person("taroo")}, {u});
  const auto codes = Codes(ValidateDiscourse(d));
  const std::vector<ViolationCode> expected = {
      ViolationCode::kDuplicateEntity,    ViolationCode::kUndeclaredEntity,
      ViolationCode::kZeroNotSubcategorized, ViolationCode::kWaOnZero,
      ViolationCode::kMultipleWa,         ViolationCode::kUndeclaredEntity,
  };
  EXPECT_EQ(codes, expected);
}

TEST(ValidateTest, FrameProblems) {
  VerbFrame empty = Frame({});
  VerbFrame dup = Frame({R::kSubj, R::kSubj}, {}, R::kObj);
  Discourse d({Person("a")},
              {MakeUtterance(1, empty, {}),
               MakeUtterance(2, dup, {Overt(R::kSubj, Marking::kGa, "a")})});
  const auto codes = Codes(ValidateDiscourse(d));
  const std::vector<ViolationCode> expected = {
      ViolationCode::kEmptySubcat, ViolationCode::kDuplicateSubcatRole,
      ViolationCode::kEmpathyLocusNotSubcategorized};
  EXPECT_EQ(codes, expected);
}

TEST(ValidateTest, UnfilledAndDuplicateRoles) {
  Discourse d({Person("a"), Person("b")},
              {MakeUtterance(1, Frame({R::kSubj, R::kObj}),
                             {Overt(R::kSubj, Marking::kGa, "a"),
                              Overt(R::kSubj, Marking::kGa, "b")})});
  const auto codes = Codes(ValidateDiscourse(d));
  const std::vector<ViolationCode> expected = {
      ViolationCode::kDuplicateArgument, ViolationCode::kSubcatRoleUnfilled};
  EXPECT_EQ(codes, expected);
}

TEST(ValidateTest, OvertOutsideSubcat) {
  Discourse d({Person("a"), Thing("park")},
              {MakeUtterance(1, Frame({R::kSubj}),
                             {Overt(R::kSubj, Marking::kGa, "a"),
                              Overt(R::kOther, Marking::kNone, "park")})});
  EXPECT_EQ(Codes(ValidateDiscourse(d)),
            std::vector{ViolationCode::kRoleNotSubcategorized});
}

TEST(ValidateTest, Classification) {
  EXPECT_TRUE(IsFelicity(ViolationCode::kWaOnIndefinite));
  EXPECT_TRUE(IsFelicity(ViolationCode::kEmpathyNotEvoked));
  EXPECT_FALSE(IsFelicity(ViolationCode::kUndeclaredEntity));
  EXPECT_FALSE(HasStructuralViolation(
      {{ViolationCode::kWaOnIndefinite, 1, R::kSubj, ""}}));
  EXPECT_TRUE(HasStructuralViolation(
      {{ViolationCode::kWaOnIndefinite, 1, R::kSubj, ""},
       {ViolationCode::kMultipleWa, 1, std::nullopt, ""}}));
  EXPECT_EQ(Describe({ViolationCode::kEmpathyNotEvoked, 2, R::kObj2, "dareka"}),
            "EMPATHY_NOT_EVOKED at utterance 2 slot obj2: dareka");
}

TEST(ValidateTest, Pure) {
  const Corpus c = LoadCorpus("felicity/empathy_indefinite.json");
  EXPECT_EQ(ValidateDiscourse(c.discourse), ValidateDiscourse(c.discourse));
}

TEST(ValidateTest, ShippedCorpusIsFelicitous) {
  for (const std::string &name : testing::CorpusFiles()) {
    EXPECT_TRUE(ValidateDiscourse(LoadCorpus(name).discourse).empty()) << name;
  }
}

}  // namespace
}  // namespace zerocenter
