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

#include <algorithm>
#include <stdexcept>

namespace zerocenter {

SalienceRole ToSalienceRole(GrammaticalRole role) {
  switch (role) {
    case GrammaticalRole::kSubj: return SalienceRole::kSubj;
    case GrammaticalRole::kObj2: return SalienceRole::kObj2;
    case GrammaticalRole::kObj: return SalienceRole::kObj;
    case GrammaticalRole::kOther: return SalienceRole::kOther;
  }
  return SalienceRole::kOther;
}

std::string_view Name(GrammaticalRole role) {
  switch (role) {
    case GrammaticalRole::kSubj: return "subj";
    case GrammaticalRole::kObj2: return "obj2";
    case GrammaticalRole::kObj: return "obj";
    case GrammaticalRole::kOther: return "other";
  }
  return "?";
}

std::string_view Name(Marking marking) {
  switch (marking) {
    case Marking::kWa: return "wa";
    case Marking::kGa: return "ga";
    case Marking::kNi: return "ni";
    case Marking::kO: return "o";
    case Marking::kNone: return "none";
  }
  return "?";
}

std::string_view Name(Sort sort) {
  return sort == Sort::kAnimate ? "animate" : "any";
}

std::string_view Name(SalienceRole role) {
  switch (role) {
    case SalienceRole::kZeroTopic: return "zero-topic";
    case SalienceRole::kGrammTopic: return "topic";
    case SalienceRole::kEmpathy: return "empathy";
    case SalienceRole::kSubj: return "subj";
    case SalienceRole::kObj2: return "obj2";
    case SalienceRole::kObj: return "obj";
    case SalienceRole::kOther: return "other";
  }
  return "?";
}

std::string_view Name(Transition t) {
  switch (t) {
    case Transition::kContinue: return "CONTINUE";
    case Transition::kRetain: return "RETAIN";
    case Transition::kSmoothShift: return "SMOOTH-SHIFT";
    case Transition::kRoughShift: return "ROUGH-SHIFT";
  }
  return "?";
}

std::optional<GrammaticalRole> ParseRole(std::string_view text) {
  for (auto role : {GrammaticalRole::kSubj, GrammaticalRole::kObj2,
                    GrammaticalRole::kObj, GrammaticalRole::kOther}) {
    if (Name(role) == text) return role;
  }
  return std::nullopt;
}

std::optional<Marking> ParseMarking(std::string_view text) {
  for (auto m : {Marking::kWa, Marking::kGa, Marking::kNi, Marking::kO,
                 Marking::kNone}) {
    if (Name(m) == text) return m;
  }
  return std::nullopt;
}

std::optional<Sort> ParseSort(std::string_view text) {
  if (text == "animate") return Sort::kAnimate;
  if (text == "any") return Sort::kAny;
  return std::nullopt;
}

Sort VerbFrame::SortOf(GrammaticalRole role) const {
  auto it = sortal.find(role);
  return it == sortal.end() ? Sort::kAny : it->second;
}

bool VerbFrame::Subcategorizes(GrammaticalRole role) const {
  return SlotOf(role) >= 0;
}

int VerbFrame::SlotOf(GrammaticalRole role) const {
  auto it = std::find(subcat.begin(), subcat.end(), role);
  return it == subcat.end() ? -1 : static_cast<int>(it - subcat.begin());
}

const Argument *Utterance::ArgumentFor(GrammaticalRole role) const {
  for (const Argument &arg : args) {
    if (arg.role == role) return &arg;
  }
  return nullptr;
}

const Argument *Utterance::TopicArgument() const {
  for (const Argument &arg : args) {
    if (arg.marking == Marking::kWa && arg.realization.is_overt()) return &arg;
  }
  return nullptr;
}

int Utterance::ZeroCount() const {
  int n = 0;
  for (const Argument &arg : args) {
    if (arg.realization.is_zero() && frame.Subcategorizes(arg.role)) ++n;
  }
  return n;
}

const Entity *Discourse::Find(const EntityId &id) const {
  for (const Entity &e : entities_) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

const EntityId *Assignment::Find(GrammaticalRole role) const {
  for (const Binding &b : bindings_) {
    if (b.role == role) return &b.entity;
  }
  return nullptr;
}

bool Assignment::Binds(const EntityId &id) const {
  return std::any_of(bindings_.begin(), bindings_.end(),
                     [&](const Binding &b) { return b.entity == id; });
}

Assignment MakeAssignment(const Utterance &u,
                          const std::vector<EntityId> &zero_fillers) {
  std::vector<Binding> bindings;
  size_t next = 0;
  for (GrammaticalRole role : u.frame.subcat) {
    const Argument *arg = u.ArgumentFor(role);
    if (arg == nullptr) {
      throw std::invalid_argument("subcategorized role " +
                                  std::string(Name(role)) + " has no argument");
    }
    if (arg->realization.is_overt()) {
      bindings.push_back({role, arg->realization.entity()});
    } else {
      if (next >= zero_fillers.size()) {
        throw std::invalid_argument("too few zero fillers");
      }
      bindings.push_back({role, zero_fillers[next++]});
    }
  }
  if (next != zero_fillers.size()) {
    throw std::invalid_argument("too many zero fillers");
  }
  return Assignment(std::move(bindings));
}

bool CenterState::InCf(const EntityId &id) const {
  return std::any_of(cf.begin(), cf.end(),
                     [&](const CfEntry &e) { return e.entity == id; });
}

int Step::Cost() const {
  if (transition.has_value()) return Ordinal(*transition);
  return segment_reset ? kSegmentResetCost : 0;
}

std::string TransitionLabel(const Step &step) {
  if (step.transition.has_value()) return std::string(Name(*step.transition));
  return step.segment_reset ? "RESET" : "INITIAL";
}

}  // namespace zerocenter
