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

#ifndef ZEROCENTER_VALIDATE_H_
#define ZEROCENTER_VALIDATE_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zerocenter/discourse.h"

namespace zerocenter {

enum class ViolationCode {
  // Felicity conditions on information status.
  kWaOnIndefinite,
  kEmpathyNotEvoked,
  // Structural well-formedness.
  kUndeclaredEntity,
  kDuplicateEntity,
  kZeroNotSubcategorized,
  kRoleNotSubcategorized,
  kSubcatRoleUnfilled,
  kDuplicateArgument,
  kWaOnZero,
  kMultipleWa,
  kEmptySubcat,
  kDuplicateSubcatRole,
  kEmpathyLocusNotSubcategorized,
};

std::string_view Name(ViolationCode code);

// Felicity violations describe infelicitous but interpretable input; the
// engine can still run on them. Everything else breaks its preconditions.
bool IsFelicity(ViolationCode code);

struct Violation {
  ViolationCode code;
  int utterance_index = 0;  // 0 for discourse-level problems
  std::optional<GrammaticalRole> role;
  std::string detail;

  friend bool operator==(const Violation &, const Violation &) = default;
};

// Reports every violation in document order; never stops at the first one.
std::vector<Violation> ValidateDiscourse(const Discourse &d);

bool HasStructuralViolation(const std::vector<Violation> &violations);

std::string Describe(const Violation &v);

}  // namespace zerocenter

#endif  // ZEROCENTER_VALIDATE_H_
