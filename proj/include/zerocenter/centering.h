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

// Centering rules for Japanese: forward-center ranking with topic and
// empathy, Cb computation, transition classification and the per-reading
// filters. All functions are pure.

#ifndef ZEROCENTER_CENTERING_H_
#define ZEROCENTER_CENTERING_H_

#include <optional>
#include <string_view>
#include <vector>

#include "zerocenter/discourse.h"

namespace zerocenter {

struct RoleBinding {
  EntityId entity;
  SalienceRole salience = SalienceRole::kOther;
  // Subcat position of the slot that produced the salience role.
  int slot = 0;

  friend bool operator==(const RoleBinding &, const RoleBinding &) = default;
};

// Gives each entity bound by a its single highest salience role. Slots are
// visited in subcat order:
//   zero topic > wa-marked argument (only without a zero topic) >
//   empathy locus > grammatical function.
// Throws std::invalid_argument if zero_topic is not bound to a zero slot.
std::vector<RoleBinding> AssignSalienceRoles(
    const Utterance &u, const Assignment &a,
    const std::optional<EntityId> &zero_topic);

// Orders bindings by salience, ties by subcat position.
std::vector<CfEntry> RankCf(std::vector<RoleBinding> bindings);

// Constraint 3. Entities of prev.cf realized by a, restricted to the head
// when prev.cb is instantiated. Empty means no Cb can be found.
std::vector<EntityId> ComputeCbCandidates(const CenterState &prev,
                                          const Assignment &a);

Transition ClassifyTransition(const MaybeCb &prev_cb, const EntityId &cb,
                              const EntityId &cp);

enum class RejectionReason { kContraIndex, kSortal, kRule1, kZeroAntecedent };

std::string_view Name(RejectionReason reason);

// Returns the first failed check, or nullopt if the reading passes. cb is
// empty for a segment reset, in which case Rule 1 does not apply.
std::optional<RejectionReason> FilterAssignment(const Discourse &d,
                                                const Utterance &u,
                                                const Assignment &a,
                                                const CenterState &prev,
                                                const MaybeCb &cb);

// Individual checks, shared with candidate generation.
bool ViolatesContraIndexing(const Assignment &a);
bool ViolatesSortal(const Discourse &d, const VerbFrame &frame,
                    GrammaticalRole role, const EntityId &id);

}  // namespace zerocenter

#endif  // ZEROCENTER_CENTERING_H_
