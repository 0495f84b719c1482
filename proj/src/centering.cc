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

#include "zerocenter/centering.h"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace zerocenter {

std::vector<RoleBinding> AssignSalienceRoles(
    const Utterance &u, const Assignment &a,
    const std::optional<EntityId> &zero_topic) {
  if (zero_topic) {
    bool bound_to_zero = false;
    for (const Binding &b : a.bindings()) {
      const Argument *arg = u.ArgumentFor(b.role);
      if (b.entity == *zero_topic && arg && arg->realization.is_zero()) {
        bound_to_zero = true;
      }
    }
    if (!bound_to_zero) {
      throw std::invalid_argument("zero topic " + zero_topic->str() +
                                  " is not bound to a zero");
    }
  }

  std::vector<RoleBinding> result;
  for (const Binding &b : a.bindings()) {
    const Argument *arg = u.ArgumentFor(b.role);
    SalienceRole salience;
    if (zero_topic && b.entity == *zero_topic) {
      salience = SalienceRole::kZeroTopic;
    } else if (!zero_topic && arg && arg->marking == Marking::kWa &&
               arg->realization.is_overt()) {
      salience = SalienceRole::kGrammTopic;
    } else if (u.frame.empathy_locus == b.role) {
      salience = SalienceRole::kEmpathy;
    } else {
      salience = ToSalienceRole(b.role);
    }
    const int slot = u.frame.SlotOf(b.role);

    auto existing =
        std::find_if(result.begin(), result.end(),
                     [&](const RoleBinding &r) { return r.entity == b.entity; });
    if (existing == result.end()) {
      result.push_back({b.entity, salience, slot});
    } else if (Outranks(salience, existing->salience)) {
      existing->salience = salience;
      existing->slot = slot;
    }
  }
  return result;
}

std::vector<CfEntry> RankCf(std::vector<RoleBinding> bindings) {
  std::stable_sort(bindings.begin(), bindings.end(),
                   [](const RoleBinding &x, const RoleBinding &y) {
                     if (x.salience != y.salience) {
                       return Outranks(x.salience, y.salience);
                     }
                     return x.slot < y.slot;
                   });
  std::vector<CfEntry> cf;
  cf.reserve(bindings.size());
  for (RoleBinding &b : bindings) {
    cf.push_back({std::move(b.entity), b.salience});
  }
  return cf;
}

std::vector<EntityId> ComputeCbCandidates(const CenterState &prev,
                                          const Assignment &a) {
  std::vector<EntityId> realized;
  for (const CfEntry &entry : prev.cf) {
    if (a.Binds(entry.entity)) realized.push_back(entry.entity);
  }
  // Discourse-initially the Cf ordering alone is a weak constraint, so every
  // realized entity may become the Cb.
  if (prev.cb.has_value() && realized.size() > 1) realized.resize(1);
  return realized;
}

Transition ClassifyTransition(const MaybeCb &prev_cb, const EntityId &cb,
                              const EntityId &cp) {
  const bool same_cb = !prev_cb.has_value() || *prev_cb == cb;
  const bool cb_is_cp = cb == cp;
  if (same_cb) return cb_is_cp ? Transition::kContinue : Transition::kRetain;
  return cb_is_cp ? Transition::kSmoothShift : Transition::kRoughShift;
}

std::string_view Name(RejectionReason reason) {
  switch (reason) {
    case RejectionReason::kContraIndex: return "CONTRA_INDEX";
    case RejectionReason::kSortal: return "SORTAL";
    case RejectionReason::kRule1: return "RULE_1";
    case RejectionReason::kZeroAntecedent: return "ZERO_ANTECEDENT";
  }
  return "?";
}

bool ViolatesContraIndexing(const Assignment &a) {
  std::set<EntityId> seen;
  for (const Binding &b : a.bindings()) {
    if (!seen.insert(b.entity).second) return true;
  }
  return false;
}

bool ViolatesSortal(const Discourse &d, const VerbFrame &frame,
                    GrammaticalRole role, const EntityId &id) {
  if (frame.SortOf(role) != Sort::kAnimate) return false;
  const Entity *entity = d.Find(id);
  return entity == nullptr || !entity->animate;
}

std::optional<RejectionReason> FilterAssignment(const Discourse &d,
                                                const Utterance &u,
                                                const Assignment &a,
                                                const CenterState &prev,
                                                const MaybeCb &cb) {
  if (ViolatesContraIndexing(a)) return RejectionReason::kContraIndex;
  for (const Binding &b : a.bindings()) {
    if (ViolatesSortal(d, u.frame, b.role, b.entity)) {
      return RejectionReason::kSortal;
    }
  }

  bool zero_realizes_old = false;
  const Argument *cb_arg = nullptr;
  for (const Binding &b : a.bindings()) {
    const Argument *arg = u.ArgumentFor(b.role);
    const bool zero = arg != nullptr && arg->realization.is_zero();
    if (zero) {
      if (prev.InCf(b.entity)) {
        zero_realizes_old = true;
      } else {
        const Entity *entity = d.Find(b.entity);
        if (entity == nullptr || !entity->hearer_old) {
          return RejectionReason::kZeroAntecedent;
        }
      }
    }
    if (cb && b.entity == *cb) cb_arg = arg;
  }

  // Rule 1 for zeros: if any zero realizes part of the previous Cf, the Cb
  // must be realized by a zero as well.
  if (cb && zero_realizes_old && cb_arg != nullptr &&
      cb_arg->realization.is_overt()) {
    return RejectionReason::kRule1;
  }
  return std::nullopt;
}

}  // namespace zerocenter
