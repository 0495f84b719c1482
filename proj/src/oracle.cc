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

#include "zerocenter/oracle.h"

#include <algorithm>
#include <sstream>

namespace zerocenter {

namespace {

// Salience tier of one slot. Lower is more salient.
int Tier(const Utterance &u, GrammaticalRole role, const EntityId &entity,
         const std::optional<EntityId> &zero_topic) {
  const Argument *arg = u.ArgumentFor(role);
  if (zero_topic && entity == *zero_topic) return 0;
  if (!zero_topic && arg->marking == Marking::kWa &&
      arg->realization.is_overt()) {
    return 1;
  }
  if (u.frame.empathy_locus && *u.frame.empathy_locus == role) return 2;
  switch (role) {
    case GrammaticalRole::kSubj: return 3;
    case GrammaticalRole::kObj2: return 4;
    case GrammaticalRole::kObj: return 5;
    case GrammaticalRole::kOther: return 6;
  }
  return 6;
}

std::vector<CfEntry> BuildCf(const Utterance &u, const Assignment &a,
                             const std::optional<EntityId> &zero_topic) {
  // (tier, slot, entity) per distinct entity, best tier kept.
  struct Row {
    int tier;
    int slot;
    EntityId entity;
  };
  std::vector<Row> rows;
  int slot = 0;
  for (const Binding &b : a.bindings()) {
    const int tier = Tier(u, b.role, b.entity, zero_topic);
    bool merged = false;
    for (Row &row : rows) {
      if (row.entity == b.entity) {
        merged = true;
        if (tier < row.tier) {
          row.tier = tier;
          row.slot = slot;
        }
      }
    }
    if (!merged) rows.push_back({tier, slot, b.entity});
    ++slot;
  }
  // Selection sort: repeatedly take the best remaining row.
  std::vector<CfEntry> cf;
  while (!rows.empty()) {
    size_t best = 0;
    for (size_t i = 1; i < rows.size(); ++i) {
      if (rows[i].tier < rows[best].tier ||
          (rows[i].tier == rows[best].tier && rows[i].slot < rows[best].slot)) {
        best = i;
      }
    }
    cf.push_back({rows[best].entity, static_cast<SalienceRole>(rows[best].tier)});
    rows.erase(rows.begin() + best);
  }
  return cf;
}

bool InList(const std::vector<CfEntry> &cf, const EntityId &id) {
  for (const CfEntry &e : cf) {
    if (e.entity == id) return true;
  }
  return false;
}

bool IsZero(const Utterance &u, GrammaticalRole role) {
  return u.ArgumentFor(role)->realization.is_zero();
}

struct Option {
  Assignment assignment;
  CenterState state;
  std::optional<Transition> transition;
  bool reset = false;
  bool zta = false;

  int Cost() const {
    if (transition) return static_cast<int>(*transition);
    return reset ? kSegmentResetCost : 0;
  }
};

// Every tuple of zero fillers over context, first zero slot slowest.
std::vector<Assignment> AllAssignments(const Utterance &u,
                                       const std::vector<EntityId> &context) {
  std::vector<GrammaticalRole> zeros;
  for (GrammaticalRole role : u.frame.subcat) {
    if (IsZero(u, role)) zeros.push_back(role);
  }
  std::vector<Assignment> out;
  if (!zeros.empty() && context.empty()) return out;
  std::vector<size_t> odometer(zeros.size(), 0);
  while (true) {
    std::vector<Binding> bindings;
    size_t z = 0;
    for (GrammaticalRole role : u.frame.subcat) {
      const Argument *arg = u.ArgumentFor(role);
      if (arg->realization.is_overt()) {
        bindings.push_back({role, arg->realization.entity()});
      } else {
        bindings.push_back({role, context[odometer[z++]]});
      }
    }
    out.emplace_back(std::move(bindings));
    // Advance the last digit fastest.
    int digit = static_cast<int>(zeros.size()) - 1;
    while (digit >= 0 && ++odometer[digit] == context.size()) {
      odometer[digit] = 0;
      --digit;
    }
    if (digit < 0) break;
  }
  return out;
}

// Contra-indexing, sortal and zero-antecedent checks, which do not depend on
// the Cb.
bool PassesStatic(const Discourse &d, const Utterance &u, const Assignment &a,
                  const std::vector<CfEntry> &prev_cf) {
  const auto &bs = a.bindings();
  for (size_t i = 0; i < bs.size(); ++i) {
    for (size_t j = i + 1; j < bs.size(); ++j) {
      if (bs[i].entity == bs[j].entity) return false;
    }
  }
  for (const Binding &b : bs) {
    const Entity *e = d.Find(b.entity);
    if (e == nullptr) return false;
    auto it = u.frame.sortal.find(b.role);
    if (it != u.frame.sortal.end() && it->second == Sort::kAnimate &&
        !e->animate) {
      return false;
    }
    if (IsZero(u, b.role) && !InList(prev_cf, b.entity) && !e->hearer_old) {
      return false;
    }
  }
  return true;
}

Transition Classify(const MaybeCb &prev_cb, const EntityId &cb,
                    const EntityId &cp) {
  // Truth table, columns: same Cb (or none before), rows: Cb is Cp.
  const bool same = !prev_cb || *prev_cb == cb;
  if (same && cb == cp) return Transition::kContinue;
  if (same) return Transition::kRetain;
  if (cb == cp) return Transition::kSmoothShift;
  return Transition::kRoughShift;
}

std::vector<Option> OptionsFor(const Discourse &d, const Utterance &u,
                               const CenterState &prev,
                               const std::vector<EntityId> &context) {
  std::vector<Option> out;
  for (const Assignment &a : AllAssignments(u, context)) {
    if (!PassesStatic(d, u, a, prev.cf)) continue;

    std::vector<EntityId> realized;
    for (const CfEntry &e : prev.cf) {
      if (a.Binds(e.entity)) realized.push_back(e.entity);
    }
    if (realized.empty()) {
      Option reset;
      reset.assignment = a;
      reset.state.cf = BuildCf(u, a, std::nullopt);
      reset.reset = true;
      out.push_back(std::move(reset));
      continue;
    }
    std::vector<EntityId> cbs = realized;
    if (prev.cb) cbs = {realized.front()};

    bool zero_on_old = false;
    for (const Binding &b : a.bindings()) {
      if (IsZero(u, b.role) && InList(prev.cf, b.entity)) zero_on_old = true;
    }
    for (const EntityId &cb : cbs) {
      bool cb_overt = false;
      for (const Binding &b : a.bindings()) {
        if (b.entity == cb && !IsZero(u, b.role)) cb_overt = true;
      }
      if (zero_on_old && cb_overt) continue;  // Rule 1
      Option o;
      o.assignment = a;
      o.state.cb = cb;
      o.state.cf = BuildCf(u, a, std::nullopt);
      o.transition = Classify(prev.cb, cb, o.state.cf.front().entity);
      out.push_back(std::move(o));
    }
  }
  return out;
}

MaybeCb OriginalCb(const Step &s) {
  if (s.cb_unified) return std::nullopt;
  return s.state.cb;
}

std::vector<Option> ChildOptions(const Discourse &d, const EngineConfig &config,
                                 const GlobalReading &parent,
                                 const Utterance &u) {
  const CenterState &prev = parent.steps.back().state;
  std::vector<EntityId> context;
  for (const CfEntry &e : prev.cf) context.push_back(e.entity);
  std::vector<Option> options = OptionsFor(d, u, prev, context);
  if (options.empty()) {
    for (const Entity &e : d.entities()) {
      if (e.hearer_old && !InList(prev.cf, e.id)) context.push_back(e.id);
    }
    options = OptionsFor(d, u, prev, context);
  }

  bool has_continue = false;
  for (const Option &o : options) {
    if (o.transition && *o.transition == Transition::kContinue) {
      has_continue = true;
    }
  }
  bool zta = config.zta_enabled && prev.cb.has_value() && !has_continue;
  if (zta && config.zta_requires_established_cb) {
    const size_t n = parent.steps.size();
    zta = n >= 2 && OriginalCb(parent.steps[n - 1]) == prev.cb &&
          OriginalCb(parent.steps[n - 2]) == prev.cb;
  }
  if (zta) {
    const EntityId topic = *prev.cb;
    const size_t ordinary = options.size();
    for (size_t i = 0; i < ordinary; ++i) {
      const Option &o = options[i];
      if (o.reset) continue;
      bool binds = false;
      for (const Binding &b : o.assignment.bindings()) {
        if (b.entity == topic && IsZero(u, b.role)) binds = true;
      }
      if (!binds) continue;
      Option v = o;
      v.zta = true;
      v.state.cf = BuildCf(u, o.assignment, topic);
      v.transition = Classify(prev.cb, *o.state.cb, v.state.cf.front().entity);
      options.push_back(std::move(v));
    }
  }

  // Rank: cost, then generation position.
  std::vector<size_t> order(options.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](size_t x, size_t y) {
    if (options[x].Cost() != options[y].Cost()) {
      return options[x].Cost() < options[y].Cost();
    }
    return x < y;
  });
  std::vector<Option> ranked;
  for (size_t i : order) ranked.push_back(options[i]);
  return ranked;
}

GlobalReading Grow(const GlobalReading &parent, const Option &o, int index,
                   int rank) {
  GlobalReading r = parent;
  if (!r.steps.empty()) {
    Step &last = r.steps.back();
    if (!last.state.cb && o.state.cb && InList(last.state.cf, *o.state.cb)) {
      last.state.cb = o.state.cb;
      last.cb_unified = true;
    }
  }
  Step s;
  s.utterance_index = index;
  s.assignment = o.assignment;
  s.state = o.state;
  s.transition = o.transition;
  s.segment_reset = o.reset;
  s.zta_applied = o.zta;
  r.score += o.Cost();
  r.steps.push_back(std::move(s));
  r.prefix_scores.push_back(r.score);
  r.ranks.push_back(rank);
  return r;
}

// Order of complete readings: at the last utterance compare cumulative
// score, then that utterance's cost; readings sharing a parent compare by
// rank, others by the order of their parents.
bool Before(const GlobalReading &a, const GlobalReading &b, size_t level) {
  if (a.prefix_scores[level] != b.prefix_scores[level]) {
    return a.prefix_scores[level] < b.prefix_scores[level];
  }
  const int ca = a.steps[level].Cost();
  const int cb = b.steps[level].Cost();
  if (ca != cb) return ca < cb;
  const bool same_parent = std::equal(a.ranks.begin(), a.ranks.begin() + level,
                                      b.ranks.begin());
  if (level == 0 || same_parent) return a.ranks[level] < b.ranks[level];
  return Before(a, b, level - 1);
}

std::string StepSummary(const Step &s) {
  std::ostringstream out;
  out << "u" << s.utterance_index << " {";
  for (const Binding &b : s.assignment.bindings()) {
    out << Name(b.role) << "=" << b.entity << " ";
  }
  out << "} cb=" << (s.state.cb ? s.state.cb->str() : "?") << " cf=[";
  for (const CfEntry &e : s.state.cf) out << e.entity << " ";
  out << "] " << TransitionLabel(s) << (s.zta_applied ? " zta" : "");
  return out.str();
}

}  // namespace

std::vector<GlobalReading> EnumerateAll(const Discourse &d,
                                        const EngineConfig &config,
                                        int64_t size_limit) {
  const std::vector<Utterance> &us = d.utterances();
  if (us.empty()) return {};

  // First utterance: zeros range over hearer-old entities.
  std::vector<GlobalReading> level;
  {
    const Utterance &u = us.front();
    std::vector<EntityId> context;
    for (const Entity &e : d.entities()) {
      if (e.hearer_old) context.push_back(e.id);
    }
    MaybeCb cb;
    for (const Argument &arg : u.args) {
      if (arg.marking == Marking::kWa && arg.realization.is_overt() &&
          u.frame.Subcategorizes(arg.role)) {
        cb = arg.realization.entity();
      }
    }
    int rank = 0;
    for (const Assignment &a : AllAssignments(u, context)) {
      if (!PassesStatic(d, u, a, {})) continue;
      Option o;
      o.assignment = a;
      o.state.cb = cb;
      o.state.cf = BuildCf(u, a, std::nullopt);
      level.push_back(Grow(GlobalReading(), o, u.index, rank++));
    }
  }
  if (level.empty()) {
    throw OracleError(OracleError::Code::kUnresolvable, us.front().index,
                      "no reading of the first utterance");
  }

  for (size_t i = 1; i < us.size(); ++i) {
    std::vector<GlobalReading> next;
    for (const GlobalReading &parent : level) {
      const std::vector<Option> options = ChildOptions(d, config, parent, us[i]);
      for (size_t r = 0; r < options.size(); ++r) {
        next.push_back(Grow(parent, options[r], us[i].index, static_cast<int>(r)));
        if (static_cast<int64_t>(next.size()) > size_limit) {
          throw OracleError(OracleError::Code::kSizeLimit, us[i].index,
                            "reading count exceeds the enumeration limit");
        }
      }
    }
    if (next.empty()) {
      throw OracleError(OracleError::Code::kUnresolvable, us[i].index,
                        "no reading survives");
    }
    level = std::move(next);
  }

  const size_t last = us.size() - 1;
  std::sort(level.begin(), level.end(),
            [last](const GlobalReading &a, const GlobalReading &b) {
              return Before(a, b, last);
            });
  return level;
}

EquivalenceReport CheckEquivalence(const Discourse &d,
                                   const EngineConfig &config) {
  EquivalenceReport report;
  std::vector<GlobalReading> oracle;
  std::vector<Hypothesis> engine;
  try {
    oracle = EnumerateAll(d, config);
  } catch (const OracleError &e) {
    report.oracle_status =
        std::string(e.code() == OracleError::Code::kSizeLimit ? "SIZE_LIMIT"
                                                              : "UNRESOLVABLE") +
        "@" + std::to_string(e.utterance_index());
  }
  try {
    engine = Resolve(d, config).readings;
  } catch (const ResolveError &e) {
    report.engine_status =
        std::string(e.code() == ResolveError::Code::kUnresolvable
                        ? "UNRESOLVABLE"
                        : "INVALID") +
        "@" + std::to_string(e.utterance_index());
  }
  report.engine_readings = engine.size();
  report.oracle_readings = oracle.size();
  report.heads_only = static_cast<size_t>(config.beam_width) < oracle.size();

  if (report.engine_status != "OK" || report.oracle_status != "OK") {
    report.equivalent = report.engine_status == report.oracle_status;
    if (!report.equivalent) {
      report.discrepancies.push_back("engine " + report.engine_status +
                                     " vs oracle " + report.oracle_status);
    }
    return report;
  }

  const size_t compared = report.heads_only ? 1 : oracle.size();
  if (!report.heads_only && engine.size() != oracle.size()) {
    report.discrepancies.push_back(
        "engine has " + std::to_string(engine.size()) + " readings, oracle " +
        std::to_string(oracle.size()));
  }
  for (size_t i = 0; i < compared && i < engine.size(); ++i) {
    const Hypothesis &h = engine[i];
    const GlobalReading &g = oracle[i];
    if (h.steps == g.steps && h.score == g.score) continue;
    for (size_t k = 0; k < h.steps.size() && k < g.steps.size(); ++k) {
      if (h.steps[k] == g.steps[k]) continue;
      report.first_divergent_reading = i;
      report.first_divergent_utterance = h.steps[k].utterance_index;
      report.discrepancies.push_back("reading " + std::to_string(i + 1) +
                                     ": engine " + StepSummary(h.steps[k]) +
                                     " vs oracle " + StepSummary(g.steps[k]));
      break;
    }
    if (!report.first_divergent_reading) {
      report.first_divergent_reading = i;
      report.discrepancies.push_back("reading " + std::to_string(i + 1) +
                                     ": score " + std::to_string(h.score) +
                                     " vs " + std::to_string(g.score));
    }
    break;
  }
  if (engine.empty() && !oracle.empty()) {
    report.discrepancies.push_back("engine produced no readings");
  }
  report.equivalent = report.discrepancies.empty();
  return report;
}

}  // namespace zerocenter
