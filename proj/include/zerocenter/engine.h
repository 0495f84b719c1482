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

// Zero resolution over a whole discourse. Each utterance is interpreted by
// generating readings of its zeros, filtering them, computing centers and
// ranking by transition; zero topic assignment adds alternative readings
// and a beam keeps competing hypotheses alive across utterances.

#ifndef ZEROCENTER_ENGINE_H_
#define ZEROCENTER_ENGINE_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "zerocenter/centering.h"
#include "zerocenter/discourse.h"
#include "zerocenter/validate.h"

namespace zerocenter {

struct EngineConfig {
  int beam_width = 16;
  bool zta_enabled = true;
  // Treat felicity violations as fatal. Structural ones always are.
  bool strict_validation = false;
  // Zero topic assignment additionally requires the zero-topic entity to
  // have been the Cb of the two previous utterances, as computed at the
  // time (not through retroactive unification of an initial [?]).
  bool zta_requires_established_cb = true;
};

// A reading of one utterance before it is attached to its parent.
struct Candidate {
  Assignment assignment;
  CenterState state;
  std::optional<Transition> transition;
  bool segment_reset = false;
  bool zta_applied = false;

  int Cost() const;
};

struct Rejection {
  Assignment assignment;
  MaybeCb cb;
  RejectionReason reason;
};

struct StepResult {
  // Ranked by (transition cost, generation order). ZTA variants are
  // generated after all ordinary readings.
  std::vector<Hypothesis> children;
  std::vector<Rejection> rejections;
  // Zeros were bound outside the parent Cf as a last resort.
  bool used_fallback_context = false;

  bool unresolvable() const { return children.empty(); }
};

class ResolveError : public std::runtime_error {
 public:
  enum class Code { kInvalidDiscourse, kUnresolvable };

  ResolveError(Code code, int utterance_index, std::string message,
               std::vector<Violation> violations = {})
      : std::runtime_error(std::move(message)),
        code_(code),
        utterance_index_(utterance_index),
        violations_(std::move(violations)) {}

  Code code() const { return code_; }
  int utterance_index() const { return utterance_index_; }
  const std::vector<Violation> &violations() const { return violations_; }

 private:
  Code code_;
  int utterance_index_;
  std::vector<Violation> violations_;
};

// The beam after one utterance.
struct UtteranceReadings {
  int utterance_index = 0;
  std::vector<Hypothesis> beam;
  std::vector<StepResult> expansions;  // one per parent, in beam order
};

struct Resolution {
  std::vector<UtteranceReadings> per_utterance;
  // Final beam, best first.
  std::vector<Hypothesis> readings;

  const Hypothesis &top() const { return readings.front(); }
};

// The wa-marked overt entity of a discourse-initial utterance, if any.
MaybeCb InstantiateInitialCb(const Utterance &u);

class Engine {
 public:
  // The discourse must outlive the engine.
  Engine(const Discourse &d, EngineConfig config);

  const EngineConfig &config() const { return config_; }

  // Expands every zero of u over context, in context order with earlier
  // subcat slots varying slowest. Contra-indexing and sortal constraints
  // prune during generation.
  std::vector<Assignment> GenerateAssignments(
      const Utterance &u, const std::vector<EntityId> &context) const;

  // Zero topic variants of the surviving readings of u under parent. Empty
  // when the preconditions do not hold.
  std::vector<Candidate> ApplyZta(const Hypothesis &parent, const Utterance &u,
                                  const std::vector<Candidate> &surviving) const;

  // Readings of the discourse-initial utterance.
  StepResult Start() const;

  // Readings of u given parent, which must cover utterances 1..u.index-1.
  StepResult Extend(const Hypothesis &parent, const Utterance &u) const;

  // Returns the first CONTINUE reached by interleaving generation,
  // filtering and classification, or Extend's best child if there is none.
  // Empty when u is unresolvable.
  std::optional<Hypothesis> BestFirst(const Hypothesis &parent,
                                      const Utterance &u) const;

  // Runs the whole discourse. Throws ResolveError.
  Resolution Resolve() const;

 private:
  // Context for zeros in a non-initial utterance.
  std::vector<EntityId> PrimaryContext(const CenterState &prev) const;
  std::vector<EntityId> FallbackContext(const CenterState &prev) const;

  // Ordinary readings of u over one context, with rejections logged.
  std::vector<Candidate> Interpret(const CenterState &prev, const Utterance &u,
                                   const std::vector<EntityId> &context,
                                   std::vector<Rejection> *rejections) const;
  Candidate Reading(const Utterance &u, const Assignment &a,
                    const CenterState &prev, const EntityId &cb,
                    const std::optional<EntityId> &zero_topic) const;
  bool EstablishedCb(const Hypothesis &parent, const EntityId &e) const;

  const Discourse &discourse_;
  EngineConfig config_;
};

// Attaches a candidate to its parent, unifying an uninstantiated parent Cb
// with the new one.
Hypothesis Attach(const Hypothesis &parent, const Candidate &c, int index);

Resolution Resolve(const Discourse &d, const EngineConfig &config);

}  // namespace zerocenter

#endif  // ZEROCENTER_ENGINE_H_
