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

#include "zerocenter/report.h"

#include <algorithm>
#include <map>
#include <sstream>

#include "json.hpp"

namespace zerocenter {

using ordered_json = nlohmann::ordered_json;

std::vector<Binding> ZeroBindings(const Utterance &u, const Assignment &a) {
  std::vector<Binding> out;
  for (GrammaticalRole role : u.frame.subcat) {
    const Argument *arg = u.ArgumentFor(role);
    const EntityId *id = a.Find(role);
    if (arg != nullptr && id != nullptr && arg->realization.is_zero()) {
      out.push_back({role, *id});
    }
  }
  return out;
}

std::string FormatBindings(const std::vector<Binding> &bindings) {
  if (bindings.empty()) return "-";
  std::string out;
  for (const Binding &b : bindings) {
    if (!out.empty()) out += ", ";
    out += std::string(Name(b.role)) + "=" + b.entity.str();
  }
  return out;
}

std::string FormatCf(const CenterState &state) {
  std::string out = "[";
  for (size_t i = 0; i < state.cf.size(); ++i) {
    if (i > 0) out += ", ";
    out += state.cf[i].entity.str() + ":" +
           std::string(Name(state.cf[i].salience));
  }
  return out + "]";
}

std::string FormatCb(const MaybeCb &cb) { return cb ? cb->str() : "?"; }

namespace {

const Utterance *UtteranceAt(const Discourse &d, int index) {
  for (const Utterance &u : d.utterances()) {
    if (u.index == index) return &u;
  }
  return nullptr;
}

ordered_json BindingsJson(const std::vector<Binding> &bindings) {
  ordered_json j = ordered_json::object();
  for (const Binding &b : bindings) j[std::string(Name(b.role))] = b.entity.str();
  return j;
}

ordered_json StepJson(const Discourse &d, const Step &s) {
  ordered_json j;
  j["utterance"] = s.utterance_index;
  const Utterance *u = UtteranceAt(d, s.utterance_index);
  j["zeros"] = BindingsJson(u ? ZeroBindings(*u, s.assignment)
                              : std::vector<Binding>{});
  j["cb"] = s.state.cb ? ordered_json(s.state.cb->str()) : ordered_json(nullptr);
  ordered_json cf = ordered_json::array();
  for (const CfEntry &e : s.state.cf) {
    ordered_json entry;
    entry["entity"] = e.entity.str();
    entry["role"] = std::string(Name(e.salience));
    cf.push_back(std::move(entry));
  }
  j["cf"] = std::move(cf);
  j["transition"] = TransitionLabel(s);
  j["zta"] = s.zta_applied;
  return j;
}

std::string Pad(const std::string &s, size_t width) {
  return s + std::string(width > s.size() ? width - s.size() : 0, ' ');
}

}  // namespace

void WriteTrace(std::ostream &out, const Resolution &r) {
  const std::vector<std::string> header = {"HYP", "CB",  "CF",
                                           "TRANSITION", "ZTA", "SCORE"};
  for (const UtteranceReadings &ur : r.per_utterance) {
    std::vector<std::vector<std::string>> rows;
    for (size_t i = 0; i < ur.beam.size(); ++i) {
      const Hypothesis &h = ur.beam[i];
      const Step &s = h.last();
      rows.push_back({std::to_string(i + 1), FormatCb(s.state.cb),
                      FormatCf(s.state), TransitionLabel(s),
                      s.zta_applied ? "yes" : "no", std::to_string(h.score)});
    }
    std::vector<size_t> width(header.size());
    for (size_t c = 0; c < header.size(); ++c) {
      width[c] = header[c].size();
      for (const auto &row : rows) width[c] = std::max(width[c], row[c].size());
    }
    auto line = [&](const std::vector<std::string> &cells) {
      std::string text;
      for (size_t c = 0; c < cells.size(); ++c) {
        if (c > 0) text += " | ";
        text += c + 1 == cells.size() ? cells[c] : Pad(cells[c], width[c]);
      }
      out << text << "\n";
    };
    out << "utterance " << ur.utterance_index << "\n";
    line(header);
    std::vector<std::string> rule;
    for (size_t c = 0; c < header.size(); ++c) {
      rule.push_back(std::string(width[c], '-'));
    }
    line(rule);
    for (const auto &row : rows) line(row);
    out << "\n";
  }
}

void WriteResolutionText(std::ostream &out, const Corpus &corpus,
                         const Resolution &r, bool trace) {
  const Discourse &d = corpus.discourse;
  if (!corpus.title.empty()) out << corpus.title << "\n";
  if (trace) {
    out << "\n";
    WriteTrace(out, r);
  }
  for (const UtteranceReadings &ur : r.per_utterance) {
    const Utterance *u = UtteranceAt(d, ur.utterance_index);
    out << "utterance " << ur.utterance_index;
    if (u != nullptr && !u->gloss.empty()) out << ": " << u->gloss;
    out << "\n";
    for (size_t i = 0; i < ur.beam.size(); ++i) {
      const Step &s = ur.beam[i].last();
      out << "  " << (i + 1) << ". "
          << FormatBindings(u ? ZeroBindings(*u, s.assignment)
                              : std::vector<Binding>{})
          << "  cb=" << FormatCb(s.state.cb) << "  " << TransitionLabel(s)
          << (s.zta_applied ? "  zta" : "") << "  score=" << ur.beam[i].score
          << "\n";
    }
  }
  if (!r.readings.empty()) {
    out << "top reading (score " << r.top().score << ")\n";
    for (const Step &s : r.top().steps) {
      const Utterance *u = UtteranceAt(d, s.utterance_index);
      out << "  " << s.utterance_index << ": "
          << FormatBindings(u ? ZeroBindings(*u, s.assignment)
                              : std::vector<Binding>{})
          << "  cb=" << FormatCb(s.state.cb) << "  cf=" << FormatCf(s.state)
          << "  " << TransitionLabel(s) << (s.zta_applied ? "  zta" : "")
          << "\n";
    }
  }
}

std::string ResolutionJson(const Corpus &corpus, const Resolution &r,
                           bool trace) {
  const Discourse &d = corpus.discourse;
  ordered_json root;
  root["title"] = corpus.title;
  ordered_json readings = ordered_json::array();
  for (size_t i = 0; i < r.readings.size(); ++i) {
    ordered_json j;
    j["rank"] = i + 1;
    j["score"] = r.readings[i].score;
    ordered_json steps = ordered_json::array();
    for (const Step &s : r.readings[i].steps) steps.push_back(StepJson(d, s));
    j["steps"] = std::move(steps);
    readings.push_back(std::move(j));
  }
  root["readings"] = std::move(readings);
  if (trace) {
    ordered_json utterances = ordered_json::array();
    for (const UtteranceReadings &ur : r.per_utterance) {
      ordered_json j;
      j["utterance"] = ur.utterance_index;
      ordered_json beam = ordered_json::array();
      for (size_t i = 0; i < ur.beam.size(); ++i) {
        ordered_json entry = StepJson(d, ur.beam[i].last());
        entry["hyp"] = i + 1;
        entry["score"] = ur.beam[i].score;
        beam.push_back(std::move(entry));
      }
      j["beam"] = std::move(beam);
      utterances.push_back(std::move(j));
    }
    root["trace"] = std::move(utterances);
  }
  return root.dump(2) + "\n";
}

bool GoldReport::passed() const {
  return std::all_of(outcomes.begin(), outcomes.end(),
                     [](const GoldOutcome &o) { return o.passed; });
}

GoldReport CheckGold(const Corpus &corpus, const Resolution &r) {
  GoldReport report;
  std::map<int, std::vector<const GoldLabel *>> by_utterance;
  for (const GoldLabel &g : corpus.gold) {
    by_utterance[g.utterance_index].push_back(&g);
  }
  auto bindings_at = [&](const Hypothesis &h, int index) {
    for (const Step &s : h.steps) {
      if (s.utterance_index != index) continue;
      const Utterance *u = UtteranceAt(corpus.discourse, index);
      return u ? ZeroBindings(*u, s.assignment) : std::vector<Binding>{};
    }
    return std::vector<Binding>{};
  };
  auto sorted = [](std::vector<Binding> b) {
    std::sort(b.begin(), b.end(), [](const Binding &x, const Binding &y) {
      return Rank(x.role) < Rank(y.role);
    });
    return b;
  };

  for (const auto &[index, labels] : by_utterance) {
    GoldOutcome o;
    o.utterance_index = index;
    const bool significant =
        std::any_of(labels.begin(), labels.end(), [](const GoldLabel *g) {
          return g->significance == Significance::kSignificant;
        });
    o.significance =
        significant ? Significance::kSignificant : Significance::kAmbiguous;
    if (!r.readings.empty()) o.top = sorted(bindings_at(r.top(), index));

    if (significant) {
      const GoldLabel *best = labels.front();
      for (const GoldLabel *g : labels) {
        if (g->support_count.value_or(0) > best->support_count.value_or(0)) {
          best = g;
        }
      }
      o.expected.push_back(sorted(best->assignment));
      o.passed = !r.readings.empty() && o.top == o.expected.front();
    } else {
      for (const GoldLabel *g : labels) {
        const std::vector<Binding> want = sorted(g->assignment);
        o.expected.push_back(want);
        const bool present = std::any_of(
            r.readings.begin(), r.readings.end(), [&](const Hypothesis &h) {
              return sorted(bindings_at(h, index)) == want;
            });
        if (!present) o.missing.push_back(want);
      }
      o.passed = !r.readings.empty() && o.missing.empty();
    }
    report.outcomes.push_back(std::move(o));
  }
  return report;
}

void WriteGoldText(std::ostream &out, const GoldReport &report) {
  for (const GoldOutcome &o : report.outcomes) {
    out << (o.passed ? "PASS" : "FAIL") << " utterance " << o.utterance_index
        << " (" << Name(o.significance) << "): ";
    if (o.significance == Significance::kSignificant) {
      out << "expected " << FormatBindings(o.expected.front()) << ", top "
          << FormatBindings(o.top);
    } else {
      out << "expected all of {";
      for (size_t i = 0; i < o.expected.size(); ++i) {
        out << (i ? "; " : "") << FormatBindings(o.expected[i]);
      }
      out << "}";
      if (!o.missing.empty()) {
        out << ", missing {";
        for (size_t i = 0; i < o.missing.size(); ++i) {
          out << (i ? "; " : "") << FormatBindings(o.missing[i]);
        }
        out << "}";
      }
    }
    out << "\n";
  }
  out << (report.passed() ? "gold: all labels matched" : "gold: MISMATCH")
      << "\n";
}

std::string GoldJson(const GoldReport &report) {
  ordered_json root;
  root["passed"] = report.passed();
  ordered_json outcomes = ordered_json::array();
  for (const GoldOutcome &o : report.outcomes) {
    ordered_json j;
    j["utterance"] = o.utterance_index;
    j["significance"] = std::string(Name(o.significance));
    j["passed"] = o.passed;
    ordered_json expected = ordered_json::array();
    for (const auto &e : o.expected) expected.push_back(BindingsJson(e));
    j["expected"] = std::move(expected);
    j["top"] = BindingsJson(o.top);
    ordered_json missing = ordered_json::array();
    for (const auto &m : o.missing) missing.push_back(BindingsJson(m));
    j["missing"] = std::move(missing);
    outcomes.push_back(std::move(j));
  }
  root["outcomes"] = std::move(outcomes);
  return root.dump(2) + "\n";
}

void WriteEquivalenceText(std::ostream &out, const EquivalenceReport &report) {
  out << (report.equivalent ? "EQUIVALENT" : "DIFFERENT")
      << (report.heads_only ? " (top readings only)" : "") << "\n";
  out << "engine: " << report.engine_readings << " readings, "
      << report.engine_status << "\n";
  out << "oracle: " << report.oracle_readings << " readings, "
      << report.oracle_status << "\n";
  if (report.first_divergent_utterance) {
    out << "first divergence at utterance "
        << *report.first_divergent_utterance << "\n";
  }
  for (const std::string &d : report.discrepancies) out << "  " << d << "\n";
}

std::string EquivalenceJson(const EquivalenceReport &report) {
  ordered_json root;
  root["equivalent"] = report.equivalent;
  root["heads_only"] = report.heads_only;
  root["engine_readings"] = report.engine_readings;
  root["oracle_readings"] = report.oracle_readings;
  root["engine_status"] = report.engine_status;
  root["oracle_status"] = report.oracle_status;
  root["first_divergent_reading"] =
      report.first_divergent_reading
          ? ordered_json(*report.first_divergent_reading + 1)
          : ordered_json(nullptr);
  root["first_divergent_utterance"] =
      report.first_divergent_utterance
          ? ordered_json(*report.first_divergent_utterance)
          : ordered_json(nullptr);
  root["discrepancies"] = report.discrepancies;
  return root.dump(2) + "\n";
}

}  // namespace zerocenter
