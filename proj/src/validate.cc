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

#include <algorithm>
#include <set>
#include <sstream>

namespace zerocenter {

std::string_view Name(ViolationCode code) {
  switch (code) {
    case ViolationCode::kWaOnIndefinite: return "WA_ON_INDEFINITE";
    case ViolationCode::kEmpathyNotEvoked: return "EMPATHY_NOT_EVOKED";
    case ViolationCode::kUndeclaredEntity: return "UNDECLARED_ENTITY";
    case ViolationCode::kDuplicateEntity: return "DUPLICATE_ENTITY";
    case ViolationCode::kZeroNotSubcategorized:
      return "ZERO_NOT_SUBCATEGORIZED";
    case ViolationCode::kRoleNotSubcategorized:
      return "ROLE_NOT_SUBCATEGORIZED";
    case ViolationCode::kSubcatRoleUnfilled: return "SUBCAT_ROLE_UNFILLED";
    case ViolationCode::kDuplicateArgument: return "DUPLICATE_ARGUMENT";
    case ViolationCode::kWaOnZero: return "WA_ON_ZERO";
    case ViolationCode::kMultipleWa: return "MULTIPLE_WA";
    case ViolationCode::kEmptySubcat: return "EMPTY_SUBCAT";
    case ViolationCode::kDuplicateSubcatRole: return "DUPLICATE_SUBCAT_ROLE";
    case ViolationCode::kEmpathyLocusNotSubcategorized:
      return "EMPATHY_LOCUS_NOT_SUBCATEGORIZED";
  }
  return "?";
}

bool IsFelicity(ViolationCode code) {
  return code == ViolationCode::kWaOnIndefinite ||
         code == ViolationCode::kEmpathyNotEvoked;
}

bool HasStructuralViolation(const std::vector<Violation> &violations) {
  return std::any_of(violations.begin(), violations.end(),
                     [](const Violation &v) { return !IsFelicity(v.code); });
}

std::string Describe(const Violation &v) {
  std::ostringstream out;
  out << Name(v.code);
  if (v.utterance_index > 0) out << " at utterance " << v.utterance_index;
  if (v.role) out << " slot " << Name(*v.role);
  if (!v.detail.empty()) out << ": " << v.detail;
  return out.str();
}

namespace {

void CheckFrame(const Utterance &u, std::vector<Violation> *out) {
  const VerbFrame &frame = u.frame;
  if (frame.subcat.empty()) {
    out->push_back({ViolationCode::kEmptySubcat, u.index, std::nullopt,
                    frame.lemma});
  }
  std::set<GrammaticalRole> seen;
  for (GrammaticalRole role : frame.subcat) {
    if (!seen.insert(role).second) {
      out->push_back({ViolationCode::kDuplicateSubcatRole, u.index, role,
                      frame.lemma});
    }
  }
  if (frame.empathy_locus && !frame.Subcategorizes(*frame.empathy_locus)) {
    out->push_back({ViolationCode::kEmpathyLocusNotSubcategorized, u.index,
                    frame.empathy_locus, frame.lemma});
  }
}

void CheckArguments(const Discourse &d, const Utterance &u,
                    std::vector<Violation> *out) {
  std::set<GrammaticalRole> filled;
  int wa_count = 0;
  for (const Argument &arg : u.args) {
    if (!filled.insert(arg.role).second) {
      out->push_back({ViolationCode::kDuplicateArgument, u.index, arg.role,
                      ""});
    }
    const bool subcategorized = u.frame.Subcategorizes(arg.role);
    if (!subcategorized) {
      out->push_back({arg.realization.is_zero()
                          ? ViolationCode::kZeroNotSubcategorized
                          : ViolationCode::kRoleNotSubcategorized,
                      u.index, arg.role, u.frame.lemma});
    }
    if (arg.marking == Marking::kWa) {
      ++wa_count;
      if (arg.realization.is_zero()) {
        out->push_back({ViolationCode::kWaOnZero, u.index, arg.role, ""});
      }
    }
    if (arg.realization.is_zero()) continue;

    const EntityId &id = arg.realization.entity();
    const Entity *entity = d.Find(id);
    if (entity == nullptr) {
      out->push_back({ViolationCode::kUndeclaredEntity, u.index, arg.role,
                      id.str()});
      continue;
    }
    if (arg.marking == Marking::kWa && !entity->definite) {
      out->push_back({ViolationCode::kWaOnIndefinite, u.index, arg.role,
                      id.str()});
    }
    if (subcategorized && u.frame.empathy_locus == arg.role &&
        !entity->hearer_old) {
      out->push_back({ViolationCode::kEmpathyNotEvoked, u.index, arg.role,
                      id.str()});
    }
  }
  if (wa_count > 1) {
    out->push_back({ViolationCode::kMultipleWa, u.index, std::nullopt, ""});
  }
  for (GrammaticalRole role : u.frame.subcat) {
    if (!filled.count(role)) {
      out->push_back({ViolationCode::kSubcatRoleUnfilled, u.index, role,
                      u.frame.lemma});
    }
  }
  for (const EntityId &id : u.others) {
    if (d.Find(id) == nullptr) {
      out->push_back({ViolationCode::kUndeclaredEntity, u.index,
                      GrammaticalRole::kOther, id.str()});
    }
  }
}

}  // namespace

std::vector<Violation> ValidateDiscourse(const Discourse &d) {
  std::vector<Violation> violations;
  std::set<EntityId> ids;
  for (const Entity &e : d.entities()) {
    if (!ids.insert(e.id).second) {
      violations.push_back({ViolationCode::kDuplicateEntity, 0, std::nullopt,
                            e.id.str()});
    }
  }
  for (const Utterance &u : d.utterances()) {
    CheckFrame(u, &violations);
    CheckArguments(d, u, &violations);
  }
  return violations;
}

}  // namespace zerocenter
