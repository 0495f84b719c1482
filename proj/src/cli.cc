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

#include "zerocenter/cli.h"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "zerocenter/corpus.h"
#include "zerocenter/engine.h"
#include "zerocenter/oracle.h"
#include "zerocenter/report.h"

namespace zerocenter {

namespace {

struct Options {
  std::string file;
  int beam = -1;  // -1: command default
  bool no_zta = false;
  bool trace = false;
  bool strict = false;
  bool no_established_cb = false;
  std::string format = "text";
};

void AddCommon(CLI::App *cmd, Options *o, bool resolves) {
  cmd->add_option("file", o->file, "discourse JSON file")->required();
  cmd->add_option("--format", o->format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  if (!resolves) return;
  cmd->add_option("--beam", o->beam, "beam width")->check(CLI::PositiveNumber);
  cmd->add_flag("--no-zta", o->no_zta, "disable zero topic assignment");
  cmd->add_flag("--trace", o->trace, "print per-utterance hypothesis tables");
  cmd->add_flag("--strict", o->strict, "treat felicity violations as fatal");
  cmd->add_flag("--no-established-cb", o->no_established_cb,
                "allow zero topics without a Cb held over two utterances");
}

void WriteDiagnostics(std::ostream &err, const ParseResult &parsed) {
  for (const Diagnostic &d : parsed.diagnostics) {
    err << Describe(d) << "\n";
  }
}

std::string DiagnosticsJson(const ParseResult &parsed) {
  nlohmann::ordered_json root;
  root["valid"] = parsed.diagnostics.empty();
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (const Diagnostic &d : parsed.diagnostics) {
    nlohmann::ordered_json j;
    j["category"] = std::string(Name(d.category));
    j["code"] = d.violation ? nlohmann::ordered_json(
                                  std::string(Name(d.violation->code)))
                            : nlohmann::ordered_json(nullptr);
    j["line"] = d.line;
    j["column"] = d.column;
    j["path"] = d.path;
    j["message"] = d.message;
    list.push_back(std::move(j));
  }
  root["diagnostics"] = std::move(list);
  return root.dump(2) + "\n";
}

int Run(const std::string &command, const Options &o, std::ostream &out,
        std::ostream &err) {
  std::ifstream in(o.file, std::ios::binary);
  if (!in) {
    err << "error: cannot read " << o.file << "\n";
    return kExitIo;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) {
    err << "error: failed reading " << o.file << "\n";
    return kExitIo;
  }
  const ParseResult parsed = ParseCorpus(buffer.str());
  const bool json = o.format == "json";

  if (command == "validate") {
    if (json) {
      out << DiagnosticsJson(parsed);
    } else {
      for (const Diagnostic &d : parsed.diagnostics) out << Describe(d) << "\n";
      if (parsed.diagnostics.empty()) out << "valid\n";
    }
    return parsed.diagnostics.empty() ? kExitOk : kExitInvalidInput;
  }

  if (!parsed.corpus) {
    WriteDiagnostics(err, parsed);
    return kExitInvalidInput;
  }
  WriteDiagnostics(err, parsed);
  const Corpus &corpus = *parsed.corpus;

  EngineConfig config;
  config.zta_enabled = !o.no_zta;
  config.strict_validation = o.strict;
  config.zta_requires_established_cb = !o.no_established_cb;
  if (o.beam > 0) {
    config.beam_width = o.beam;
  } else if (command == "oracle") {
    config.beam_width = static_cast<int>(kOracleSizeLimit);
  }

  if (command == "oracle") {
    const EquivalenceReport report = CheckEquivalence(corpus.discourse, config);
    if (json) {
      out << EquivalenceJson(report);
    } else {
      WriteEquivalenceText(out, report);
    }
    if (report.oracle_status.rfind("SIZE_LIMIT", 0) == 0) return kExitSizeLimit;
    if (report.oracle_status.rfind("INVALID", 0) == 0 ||
        report.engine_status.rfind("INVALID", 0) == 0) {
      return kExitInvalidInput;
    }
    return report.equivalent ? kExitOk : kExitOracleMismatch;
  }

  Resolution resolution;
  try {
    resolution = Resolve(corpus.discourse, config);
  } catch (const ResolveError &e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ResolveError::Code::kUnresolvable ? kExitUnresolvable
                                                         : kExitInvalidInput;
  }

  if (command == "resolve") {
    if (json) {
      out << ResolutionJson(corpus, resolution, o.trace);
    } else {
      WriteResolutionText(out, corpus, resolution, o.trace);
    }
    return kExitOk;
  }

  // check
  const GoldReport report = CheckGold(corpus, resolution);
  if (json) {
    out << GoldJson(report);
  } else {
    if (o.trace) WriteTrace(out, resolution);
    WriteGoldText(out, report);
  }
  return report.passed() ? kExitOk : kExitGoldMismatch;
}

}  // namespace

int RunCli(const std::vector<std::string> &args, std::ostream &out,
           std::ostream &err) {
  CLI::App app("Zero pronoun resolution with centering", "zerocenter");
  app.require_subcommand(1);
  Options options;
  struct Command {
    const char *name;
    const char *help;
    bool resolves;
  };
  const Command commands[] = {
      {"resolve", "print ranked readings per utterance", true},
      {"check", "compare the top reading against gold labels", true},
      {"oracle", "compare the engine against exhaustive enumeration", true},
      {"validate", "report format and felicity violations", false},
  };
  for (const Command &c : commands) {
    AddCommon(app.add_subcommand(c.name, c.help), &options, c.resolves);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  const std::string command = app.get_subcommands().front()->get_name();
  return Run(command, options, out, err);
}

}  // namespace zerocenter
