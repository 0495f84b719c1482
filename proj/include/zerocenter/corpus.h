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

// JSON discourse files with optional gold interpretations.
//
//   {
//     "title": "...",                                  (optional)
//     "entities": [{"id", "animate", "hearer_old", "definite"}],
//     "utterances": [{
//       "verb": {"lemma", "subcat": [role], "sortal": {role: "animate"|"any"},
//                "empathy_locus": null | role},
//       "args": [{"role", "marking", "realization": {"np": id} | "zero"}],
//       "others": [id],
//       "gloss": "..."
//     }],
//     "gold": [{"utterance_index", "assignment": {role: id},
//               "support_count": int | null,
//               "significance": "significant" | "ambiguous"}]   (optional)
//   }
//
// Roles are "subj", "obj2", "obj", "other"; markings "wa", "ga", "ni", "o",
// "none". Unknown keys are errors.

#ifndef ZEROCENTER_CORPUS_H_
#define ZEROCENTER_CORPUS_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zerocenter/discourse.h"
#include "zerocenter/validate.h"

namespace zerocenter {

enum class Significance { kSignificant, kAmbiguous };

std::string_view Name(Significance s);

// An interpretation of the zeros of one utterance chosen by informants.
struct GoldLabel {
  int utterance_index = 0;
  std::vector<Binding> assignment;
  // Number of informants choosing this reading; absent for examples that
  // were not surveyed.
  std::optional<int> support_count;
  Significance significance = Significance::kSignificant;

  friend bool operator==(const GoldLabel &, const GoldLabel &) = default;
};

struct Corpus {
  std::string title;
  Discourse discourse;
  std::vector<GoldLabel> gold;

  friend bool operator==(const Corpus &, const Corpus &) = default;
};

enum class ErrorCategory { kParse, kSchema, kValidation };

std::string_view Name(ErrorCategory c);

struct Diagnostic {
  ErrorCategory category = ErrorCategory::kParse;
  int line = 0;    // 1-based; 0 if unknown
  int column = 0;  // 1-based; 0 if unknown
  std::string path;  // JSON pointer of the offending value
  std::string message;
  std::optional<Violation> violation;
};

std::string Describe(const Diagnostic &d);

struct ParseResult {
  // Present unless there were parse or schema errors.
  std::optional<Corpus> corpus;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return corpus.has_value() && diagnostics.empty(); }
  bool HasErrors(ErrorCategory c) const;
};

ParseResult ParseCorpus(std::string_view text);

// Stable output: fixed key order, two-space indent, trailing newline.
std::string SerializeCorpus(const Corpus &corpus);

}  // namespace zerocenter

#endif  // ZEROCENTER_CORPUS_H_
