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

// Exhaustive reference resolver. Enumerates every reading of a discourse
// with plain nested loops and ranks the complete readings with a closed-form
// comparator, so that it can be checked against the beam search in engine.h.
// Shares only the data types with the engine.

#ifndef ZEROCENTER_ORACLE_H_
#define ZEROCENTER_ORACLE_H_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "zerocenter/discourse.h"
#include "zerocenter/engine.h"

namespace zerocenter {

struct GlobalReading {
  std::vector<Step> steps;
  int score = 0;
  // Per utterance: cumulative score and rank among its parent's children.
  std::vector<int> prefix_scores;
  std::vector<int> ranks;
};

class OracleError : public std::runtime_error {
 public:
  enum class Code { kSizeLimit, kUnresolvable };

  OracleError(Code code, int utterance_index, const std::string &message)
      : std::runtime_error(message),
        code_(code),
        utterance_index_(utterance_index) {}

  Code code() const { return code_; }
  int utterance_index() const { return utterance_index_; }

 private:
  Code code_;
  int utterance_index_;
};

inline constexpr int64_t kOracleSizeLimit = 1'000'000;

// All readings that pass every filter, best first. Throws OracleError.
// Only zta_enabled and zta_requires_established_cb are read from config.
std::vector<GlobalReading> EnumerateAll(const Discourse &d,
                                        const EngineConfig &config,
                                        int64_t size_limit = kOracleSizeLimit);

struct EquivalenceReport {
  bool equivalent = false;
  // Full comparison needs a beam at least as wide as the oracle output;
  // otherwise only the top readings are compared.
  bool heads_only = false;
  size_t engine_readings = 0;
  size_t oracle_readings = 0;
  // Failure of either side, e.g. "UNRESOLVABLE@3".
  std::string engine_status = "OK";
  std::string oracle_status = "OK";
  std::optional<size_t> first_divergent_reading;
  std::optional<int> first_divergent_utterance;
  std::vector<std::string> discrepancies;
};

EquivalenceReport CheckEquivalence(const Discourse &d,
                                   const EngineConfig &config);

}  // namespace zerocenter

#endif  // ZEROCENTER_ORACLE_H_
