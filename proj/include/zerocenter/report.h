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

// Rendering of resolutions and comparison against gold labels.

#ifndef ZEROCENTER_REPORT_H_
#define ZEROCENTER_REPORT_H_

#include <ostream>
#include <string>
#include <vector>

#include "zerocenter/corpus.h"
#include "zerocenter/engine.h"
#include "zerocenter/oracle.h"

namespace zerocenter {

// Bindings of the zero slots of u, in subcat order.
std::vector<Binding> ZeroBindings(const Utterance &u, const Assignment &a);

// "subj=hanako, obj=mitiko"; "-" when there are no zeros.
std::string FormatBindings(const std::vector<Binding> &bindings);

// "[hanako:zero-topic, mitiko:subj]"
std::string FormatCf(const CenterState &state);

// "hanako", or "?" when uninstantiated.
std::string FormatCb(const MaybeCb &cb);

// One table per utterance with the columns
//   HYP | CB | CF | TRANSITION | ZTA | SCORE
// listing the beam after that utterance, best first.
void WriteTrace(std::ostream &out, const Resolution &r);

void WriteResolutionText(std::ostream &out, const Corpus &corpus,
                         const Resolution &r, bool trace);

// Stable JSON (fixed key order). The per-utterance beams are included when
// trace is set.
std::string ResolutionJson(const Corpus &corpus, const Resolution &r,
                           bool trace);

struct GoldOutcome {
  int utterance_index = 0;
  Significance significance = Significance::kSignificant;
  bool passed = false;
  // Expected readings (one for significant, all labels for ambiguous).
  std::vector<std::vector<Binding>> expected;
  // Zero bindings of the top reading at this utterance.
  std::vector<Binding> top;
  // Ambiguous labels missing from the final readings.
  std::vector<std::vector<Binding>> missing;
};

struct GoldReport {
  std::vector<GoldOutcome> outcomes;

  bool passed() const;
};

// For each utterance with labels: if any label is significant, the top
// reading must equal the best-supported label exactly; otherwise every
// label must appear among the final readings.
GoldReport CheckGold(const Corpus &corpus, const Resolution &r);

void WriteGoldText(std::ostream &out, const GoldReport &report);
std::string GoldJson(const GoldReport &report);

void WriteEquivalenceText(std::ostream &out, const EquivalenceReport &report);
std::string EquivalenceJson(const EquivalenceReport &report);

}  // namespace zerocenter

#endif  // ZEROCENTER_REPORT_H_
