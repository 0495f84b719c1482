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

// Domain model for annotated discourse: entities, verb frames, utterances,
// assignments of zeros and the center states built over them.

#ifndef ZEROCENTER_DISCOURSE_H_
#define ZEROCENTER_DISCOURSE_H_

#include <compare>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace zerocenter {

// Symbol naming a discourse referent.
class EntityId {
 public:
  EntityId() = default;
  explicit EntityId(std::string value) : value_(std::move(value)) {}

  const std::string &str() const { return value_; }

  friend bool operator==(const EntityId &, const EntityId &) = default;
  friend auto operator<=>(const EntityId &, const EntityId &) = default;

 private:
  std::string value_;
};

inline std::ostream &operator<<(std::ostream &os, const EntityId &id) {
  return os << id.str();
}

struct Entity {
  EntityId id;
  bool animate = false;
  // Discourse-old or otherwise evoked for the hearer at first mention.
  bool hearer_old = false;
  bool definite = false;

  friend bool operator==(const Entity &, const Entity &) = default;
};

// Grammatical function of a subcategorized argument. Declaration order is
// the default salience order, highest first.
enum class GrammaticalRole { kSubj, kObj2, kObj, kOther };

// Postpositional marking of an argument.
enum class Marking { kWa, kGa, kNi, kO, kNone };

enum class Sort { kAny, kAnimate };

// Salience tiers used to rank the forward centers, highest first.
enum class SalienceRole {
  kZeroTopic,
  kGrammTopic,
  kEmpathy,
  kSubj,
  kObj2,
  kObj,
  kOther,
};

// Lower rank value means more salient.
constexpr int Rank(GrammaticalRole role) { return static_cast<int>(role); }
constexpr int Rank(SalienceRole role) { return static_cast<int>(role); }

// True if a is strictly more salient than b.
constexpr bool Outranks(SalienceRole a, SalienceRole b) {
  return Rank(a) < Rank(b);
}

SalienceRole ToSalienceRole(GrammaticalRole role);

std::string_view Name(GrammaticalRole role);
std::string_view Name(Marking marking);
std::string_view Name(Sort sort);
std::string_view Name(SalienceRole role);

std::optional<GrammaticalRole> ParseRole(std::string_view text);
std::optional<Marking> ParseMarking(std::string_view text);
std::optional<Sort> ParseSort(std::string_view text);

struct VerbFrame {
  std::string lemma;
  std::vector<GrammaticalRole> subcat;
  // Roles missing from the map accept any entity.
  std::map<GrammaticalRole, Sort> sortal;
  std::optional<GrammaticalRole> empathy_locus;

  Sort SortOf(GrammaticalRole role) const;
  bool Subcategorizes(GrammaticalRole role) const;
  // Position of role in subcat, or -1.
  int SlotOf(GrammaticalRole role) const;

  friend bool operator==(const VerbFrame &, const VerbFrame &) = default;
};

// Either an overt noun phrase realizing an entity, or a zero.
class Realization {
 public:
  static Realization Zero() { return Realization(); }
  static Realization Overt(EntityId id) { return Realization(std::move(id)); }

  bool is_zero() const { return !entity_.has_value(); }
  bool is_overt() const { return entity_.has_value(); }
  // Requires is_overt().
  const EntityId &entity() const { return *entity_; }

  friend bool operator==(const Realization &, const Realization &) = default;

 private:
  Realization() = default;
  explicit Realization(EntityId id) : entity_(std::move(id)) {}

  std::optional<EntityId> entity_;
};

struct Argument {
  GrammaticalRole role = GrammaticalRole::kSubj;
  Marking marking = Marking::kNone;
  Realization realization = Realization::Zero();

  friend bool operator==(const Argument &, const Argument &) = default;
};

struct Utterance {
  int index = 0;  // 1-based position in the discourse
  VerbFrame frame;
  std::vector<Argument> args;
  // Overt NPs outside the subcategorization frame. Never enter the Cf.
  std::vector<EntityId> others;
  std::string gloss;

  // The argument filling a subcategorized role, or nullptr.
  const Argument *ArgumentFor(GrammaticalRole role) const;
  // The overt wa-marked argument, or nullptr.
  const Argument *TopicArgument() const;
  int ZeroCount() const;

  friend bool operator==(const Utterance &, const Utterance &) = default;
};

class Discourse {
 public:
  Discourse() = default;
  Discourse(std::vector<Entity> entities, std::vector<Utterance> utterances)
      : entities_(std::move(entities)), utterances_(std::move(utterances)) {}

  const std::vector<Entity> &entities() const { return entities_; }
  const std::vector<Utterance> &utterances() const { return utterances_; }

  // Returns nullptr for undeclared ids.
  const Entity *Find(const EntityId &id) const;

  friend bool operator==(const Discourse &, const Discourse &) = default;

 private:
  std::vector<Entity> entities_;
  std::vector<Utterance> utterances_;
};

// Binding of one subcategorized role to an entity.
struct Binding {
  GrammaticalRole role = GrammaticalRole::kSubj;
  EntityId entity;

  friend bool operator==(const Binding &, const Binding &) = default;
};

// A full interpretation of one utterance: every subcategorized role bound,
// in subcat order. Overt roles carry their annotated entity.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(std::vector<Binding> bindings)
      : bindings_(std::move(bindings)) {}

  const std::vector<Binding> &bindings() const { return bindings_; }
  const EntityId *Find(GrammaticalRole role) const;
  bool Binds(const EntityId &id) const;

  friend bool operator==(const Assignment &, const Assignment &) = default;

 private:
  std::vector<Binding> bindings_;
};

// Binds the overt roles of u and fills zero roles, in subcat order, from
// zero_fillers. Throws std::invalid_argument on arity mismatch or if u does
// not cover its subcat.
Assignment MakeAssignment(const Utterance &u,
                          const std::vector<EntityId> &zero_fillers);

// Backward-looking center: nullopt is the uninstantiated [?] variable.
using MaybeCb = std::optional<EntityId>;

struct CfEntry {
  EntityId entity;
  SalienceRole salience = SalienceRole::kOther;

  friend bool operator==(const CfEntry &, const CfEntry &) = default;
};

struct CenterState {
  MaybeCb cb;
  std::vector<CfEntry> cf;

  // Preferred center; requires a nonempty cf.
  const EntityId &Cp() const { return cf.front().entity; }
  bool InCf(const EntityId &id) const;

  friend bool operator==(const CenterState &, const CenterState &) = default;
};

enum class Transition { kContinue, kRetain, kSmoothShift, kRoughShift };

constexpr int Ordinal(Transition t) { return static_cast<int>(t); }
std::string_view Name(Transition t);

// Cost charged for a segment reset, above every real transition.
inline constexpr int kSegmentResetCost = 4;

// One resolved utterance within a hypothesis.
struct Step {
  int utterance_index = 0;
  Assignment assignment;
  CenterState state;
  // Empty for discourse-initial and segment-reset steps (INITIAL).
  std::optional<Transition> transition;
  bool segment_reset = false;
  bool zta_applied = false;
  // Set when cb was filled in retroactively from the following step.
  bool cb_unified = false;

  int Cost() const;
  // The cb as it stood when this step was computed.
  MaybeCb OriginalCb() const { return cb_unified ? MaybeCb() : state.cb; }

  friend bool operator==(const Step &, const Step &) = default;
};

std::string TransitionLabel(const Step &step);

// One reading of the discourse prefix processed so far.
struct Hypothesis {
  std::vector<Step> steps;
  int score = 0;

  const Step &last() const { return steps.back(); }

  friend bool operator==(const Hypothesis &, const Hypothesis &) = default;
};

}  // namespace zerocenter

#endif  // ZEROCENTER_DISCOURSE_H_
