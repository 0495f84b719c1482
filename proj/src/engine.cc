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

#include "zerocenter/engine.h"

#include <algorithm>
#include <functional>
#include <sstream>

namespace zerocenter {

namespace {

bool ZeroBinds(const Utterance &u, const Assignment &a, const EntityId &e) {
  for (const Binding &b : a.bindings()) {
    const Argument *arg = u.ArgumentFor(b.role);
    if (b.entity == e && arg != nullptr && arg->realization.is_zero()) {
      return true;
    }
  }
  return false;
}

// Visits assignments in generation order until visit returns false. Partial
// bindings that already violate contra-indexing or a sortal constraint are
// never completed.
void ForEachAssignment(const Discourse &d, const Utterance &u,
                       const std::vector<EntityId> &context,
                       const std::function<bool(const Assignment &)> &visit) {
  const std::vector<GrammaticalRole> &subcat = u.frame.subcat;
  std::vector<Binding> partial;
  partial.reserve(subcat.size());

  std::function<bool(size_t)> expand = [&](size_t slot) -> bool {
    if (slot == subcat.size()) return visit(Assignment(partial));
    const GrammaticalRole role = subcat[slot];
    const Argument *arg = u.ArgumentFor(role);
    auto try_entity = [&](const EntityId &id) -> bool {
      for (const Binding &b : partial) {
        if (b.entity == id) return true;  // contra-indexed, skip
      }
      if (ViolatesSortal(d, u.frame, role, id)) return true;
      partial.push_back({role, id});
      const bool go_on = expand(slot + 1);
      partial.pop_back();
      return go_on;
    };
    if (arg->realization.is_overt()) return try_entity(arg->realization.entity());
    for (const EntityId &id : context) {
      if (!try_entity(id)) return false;
    }
    return true;
  };
  expand(0);
}

}  // namespace

int Candidate::Cost() const {
  if (transition.has_value()) return Ordinal(*transition);
  return segment_reset ? kSegmentResetCost : 0;
}

MaybeCb InstantiateInitialCb(const Utterance &u) {
  const Argument *topic = u.TopicArgument();
  if (topic == nullptr || !u.frame.Subcategorizes(topic->role)) return {};
  return topic->realization.entity();
}

Hypothesis Attach(const Hypothesis &parent, const Candidate &c, int index) {
  Hypothesis child = parent;
  if (!child.steps.empty()) {
    Step &last = child.steps.back();
    if (!last.state.cb.has_value() && c.state.cb.has_value() &&
        last.state.InCf(*c.state.cb)) {
      last.state.cb = c.state.cb;
      last.cb_unified = true;
    }
  }
  Step step;
  step.utterance_index = index;
  step.assignment = c.assignment;
  step.state = c.state;
  step.transition = c.transition;
  step.segment_reset = c.segment_reset;
  step.zta_applied = c.zta_applied;
  child.score += step.Cost();
  child.steps.push_back(std::move(step));
  return child;
}

Engine::Engine(const Discourse &d, EngineConfig config)
    : discourse_(d), config_(config) {
  if (config_.beam_width < 1) {
    throw std::invalid_argument("beam width must be positive");
  }
}

std::vector<Assignment> Engine::GenerateAssignments(
    const Utterance &u, const std::vector<EntityId> &context) const {
  std::vector<Assignment> result;
  ForEachAssignment(discourse_, u, context, [&](const Assignment &a) {
    result.push_back(a);
    return true;
  });
  return result;
}

std::vector<EntityId> Engine::PrimaryContext(const CenterState &prev) const {
  std::vector<EntityId> context;
  for (const CfEntry &entry : prev.cf) context.push_back(entry.entity);
  return context;
}

std::vector<EntityId> Engine::FallbackContext(const CenterState &prev) const {
  std::vector<EntityId> context = PrimaryContext(prev);
  for (const Entity &e : discourse_.entities()) {
    if (e.hearer_old && !prev.InCf(e.id)) context.push_back(e.id);
  }
  return context;
}

Candidate Engine::Reading(const Utterance &u, const Assignment &a,
                          const CenterState &prev, const EntityId &cb,
                          const std::optional<EntityId> &zero_topic) const {
  Candidate c;
  c.assignment = a;
  c.state.cb = cb;
  c.state.cf = RankCf(AssignSalienceRoles(u, a, zero_topic));
  c.transition = ClassifyTransition(prev.cb, cb, c.state.Cp());
  c.zta_applied = zero_topic.has_value();
  return c;
}

std::vector<Candidate> Engine::Interpret(
    const CenterState &prev, const Utterance &u,
    const std::vector<EntityId> &context,
    std::vector<Rejection> *rejections) const {
  std::vector<Candidate> result;
  ForEachAssignment(discourse_, u, context, [&](const Assignment &a) {
    const std::vector<EntityId> cbs = ComputeCbCandidates(prev, a);
    if (cbs.empty()) {
      if (auto reason = FilterAssignment(discourse_, u, a, prev, {})) {
        rejections->push_back({a, {}, *reason});
        return true;
      }
      Candidate reset;
      reset.assignment = a;
      reset.state.cf = RankCf(AssignSalienceRoles(u, a, std::nullopt));
      reset.segment_reset = true;
      result.push_back(std::move(reset));
      return true;
    }
    for (const EntityId &cb : cbs) {
      if (auto reason = FilterAssignment(discourse_, u, a, prev, cb)) {
        rejections->push_back({a, cb, *reason});
        continue;
      }
      result.push_back(Reading(u, a, prev, cb, std::nullopt));
    }
    return true;
  });
  return result;
}

bool Engine::EstablishedCb(const Hypothesis &parent, const EntityId &e) const {
  const size_t n = parent.steps.size();
  if (n < 2) return false;
  return parent.steps[n - 1].OriginalCb() == e &&
         parent.steps[n - 2].OriginalCb() == e;
}

std::vector<Candidate> Engine::ApplyZta(
    const Hypothesis &parent, const Utterance &u,
    const std::vector<Candidate> &surviving) const {
  std::vector<Candidate> variants;
  if (!config_.zta_enabled || parent.steps.empty()) return variants;
  const CenterState &prev = parent.last().state;
  if (!prev.cb.has_value()) return variants;
  const EntityId &topic = *prev.cb;
  for (const Candidate &c : surviving) {
    if (c.transition == Transition::kContinue) return variants;
  }
  if (config_.zta_requires_established_cb && !EstablishedCb(parent, topic)) {
    return variants;
  }
  for (const Candidate &c : surviving) {
    if (c.segment_reset || !ZeroBinds(u, c.assignment, topic)) continue;
    variants.push_back(Reading(u, c.assignment, prev, *c.state.cb, topic));
  }
  return variants;
}

StepResult Engine::Start() const {
  StepResult result;
  if (discourse_.utterances().empty()) return result;
  const Utterance &u = discourse_.utterances().front();

  std::vector<EntityId> context;
  for (const Entity &e : discourse_.entities()) {
    if (e.hearer_old) context.push_back(e.id);
  }
  const CenterState nothing;
  const MaybeCb cb = InstantiateInitialCb(u);
  for (const Assignment &a : GenerateAssignments(u, context)) {
    if (auto reason = FilterAssignment(discourse_, u, a, nothing, {})) {
      result.rejections.push_back({a, {}, *reason});
      continue;
    }
    Candidate c;
    c.assignment = a;
    c.state.cb = cb;
    c.state.cf = RankCf(AssignSalienceRoles(u, a, std::nullopt));
    result.children.push_back(Attach(Hypothesis(), c, u.index));
  }
  return result;
}

StepResult Engine::Extend(const Hypothesis &parent, const Utterance &u) const {
  StepResult result;
  const CenterState &prev = parent.last().state;

  std::vector<Candidate> candidates =
      Interpret(prev, u, PrimaryContext(prev), &result.rejections);
  if (candidates.empty()) {
    result.used_fallback_context = true;
    candidates = Interpret(prev, u, FallbackContext(prev), &result.rejections);
  }
  std::vector<Candidate> variants = ApplyZta(parent, u, candidates);
  candidates.insert(candidates.end(), variants.begin(), variants.end());

  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Candidate &x, const Candidate &y) {
                     return x.Cost() < y.Cost();
                   });
  for (const Candidate &c : candidates) {
    result.children.push_back(Attach(parent, c, u.index));
  }
  return result;
}

std::optional<Hypothesis> Engine::BestFirst(const Hypothesis &parent,
                                            const Utterance &u) const {
  const CenterState &prev = parent.last().state;
  std::optional<Candidate> found;
  ForEachAssignment(
      discourse_, u, PrimaryContext(prev), [&](const Assignment &a) {
        bool zero_realizes_old = false;
        for (const Binding &b : a.bindings()) {
          if (ZeroBinds(u, a, b.entity) && prev.InCf(b.entity)) {
            zero_realizes_old = true;
          }
        }
        for (const EntityId &cb : ComputeCbCandidates(prev, a)) {
          // Only zeros are proposed as the Cb once a zero picks up old
          // material.
          if (zero_realizes_old && !ZeroBinds(u, a, cb)) continue;
          if (FilterAssignment(discourse_, u, a, prev, cb)) continue;
          Candidate c = Reading(u, a, prev, cb, std::nullopt);
          if (c.transition == Transition::kContinue) {
            found = std::move(c);
            return false;
          }
        }
        return true;
      });
  if (found) return Attach(parent, *found, u.index);

  StepResult full = Extend(parent, u);
  if (full.children.empty()) return std::nullopt;
  return full.children.front();
}

Resolution Engine::Resolve() const {
  const std::vector<Violation> violations = ValidateDiscourse(discourse_);
  if (HasStructuralViolation(violations) ||
      (config_.strict_validation && !violations.empty())) {
    std::ostringstream msg;
    msg << "invalid discourse";
    if (!violations.empty()) msg << ": " << Describe(violations.front());
    throw ResolveError(ResolveError::Code::kInvalidDiscourse,
                       violations.empty() ? 0 : violations.front().utterance_index,
                       msg.str(), violations);
  }

  Resolution resolution;
  const std::vector<Utterance> &utterances = discourse_.utterances();
  if (utterances.empty()) return resolution;

  auto unresolvable = [](int index) {
    return ResolveError(ResolveError::Code::kUnresolvable, index,
                        "no reading survives at utterance " +
                            std::to_string(index));
  };

  StepResult first = Start();
  if (first.unresolvable()) throw unresolvable(utterances.front().index);
  std::vector<Hypothesis> beam = first.children;
  if (static_cast<int>(beam.size()) > config_.beam_width) {
    beam.resize(config_.beam_width);
  }
  resolution.per_utterance.push_back(
      {utterances.front().index, beam, {std::move(first)}});

  for (size_t i = 1; i < utterances.size(); ++i) {
    const Utterance &u = utterances[i];
    UtteranceReadings readings;
    readings.utterance_index = u.index;

    struct Ranked {
      Hypothesis hypothesis;
      int last_cost;
    };
    std::vector<Ranked> children;
    for (const Hypothesis &parent : beam) {
      StepResult r = Extend(parent, u);
      for (const Hypothesis &child : r.children) {
        children.push_back({child, child.last().Cost()});
      }
      readings.expansions.push_back(std::move(r));
    }
    if (children.empty()) throw unresolvable(u.index);

    // Children arrive in (parent position, rank) order already.
    std::stable_sort(children.begin(), children.end(),
                     [](const Ranked &x, const Ranked &y) {
                       if (x.hypothesis.score != y.hypothesis.score) {
                         return x.hypothesis.score < y.hypothesis.score;
                       }
                       return x.last_cost < y.last_cost;
                     });
    if (static_cast<int>(children.size()) > config_.beam_width) {
      children.resize(config_.beam_width);
    }
    beam.clear();
    for (Ranked &r : children) beam.push_back(std::move(r.hypothesis));
    readings.beam = beam;
    resolution.per_utterance.push_back(std::move(readings));
  }
  resolution.readings = std::move(beam);
  return resolution;
}

Resolution Resolve(const Discourse &d, const EngineConfig &config) {
  return Engine(d, config).Resolve();
}

}  // namespace zerocenter
