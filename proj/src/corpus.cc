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

#include "zerocenter/corpus.h"

#include <map>
#include <set>
#include <sstream>
#include <utility>

#include "json.hpp"

namespace zerocenter {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

std::string_view Name(Significance s) {
  return s == Significance::kSignificant ? "significant" : "ambiguous";
}

std::string_view Name(ErrorCategory c) {
  switch (c) {
    case ErrorCategory::kParse: return "PARSE";
    case ErrorCategory::kSchema: return "SCHEMA";
    case ErrorCategory::kValidation: return "VALIDATION";
  }
  return "?";
}

std::string Describe(const Diagnostic &d) {
  std::ostringstream out;
  out << Name(d.category);
  if (d.line > 0) out << " " << d.line << ":" << d.column;
  if (!d.path.empty()) out << " " << d.path;
  out << ": " << d.message;
  return out.str();
}

bool ParseResult::HasErrors(ErrorCategory c) const {
  for (const Diagnostic &d : diagnostics) {
    if (d.category == c) return true;
  }
  return false;
}

namespace {

struct Position {
  int line = 0;
  int column = 0;
};

// Line and column of every value in a well-formed JSON text, keyed by JSON
// pointer.
class SourceMap {
 public:
  explicit SourceMap(std::string_view text) : text_(text) {
    SkipSpace();
    if (pos_ < text_.size()) Value("");
  }

  // Position of the value at pointer, or of its closest recorded ancestor.
  Position Find(std::string pointer) const {
    while (true) {
      auto it = positions_.find(pointer);
      if (it != positions_.end()) return it->second;
      if (pointer.empty()) return {};
      pointer.erase(pointer.rfind('/'));
    }
  }

  // Line and column of a byte offset.
  static Position At(std::string_view text, size_t offset) {
    Position p{1, 1};
    for (size_t i = 0; i < offset && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++p.line;
        p.column = 1;
      } else if ((static_cast<unsigned char>(text[i]) & 0xC0) != 0x80) {
        ++p.column;
      }
    }
    return p;
  }

 private:
  void Advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else if ((static_cast<unsigned char>(text_[pos_]) & 0xC0) != 0x80) {
      ++column_;
    }
    ++pos_;
  }

  void SkipSpace() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\n' || text_[pos_] == '\r' ||
            text_[pos_] == '\t')) {
      Advance();
    }
  }

  std::string String() {
    const size_t start = pos_;
    Advance();  // opening quote
    while (pos_ < text_.size() && text_[pos_] != '"') {
      if (text_[pos_] == '\\') Advance();
      Advance();
    }
    Advance();  // closing quote
    return json::parse(text_.substr(start, pos_ - start)).get<std::string>();
  }

  static std::string Escape(const std::string &key) {
    std::string out;
    for (char c : key) {
      if (c == '~') {
        out += "~0";
      } else if (c == '/') {
        out += "~1";
      } else {
        out += c;
      }
    }
    return out;
  }

  void Value(const std::string &path) {
    positions_[path] = {line_, column_};
    const char c = text_[pos_];
    if (c == '{') {
      Advance();
      SkipSpace();
      while (text_[pos_] != '}') {
        const std::string key = String();
        SkipSpace();
        Advance();  // colon
        SkipSpace();
        Value(path + "/" + Escape(key));
        SkipSpace();
        if (text_[pos_] == ',') {
          Advance();
          SkipSpace();
        }
      }
      Advance();
    } else if (c == '[') {
      Advance();
      SkipSpace();
      int index = 0;
      while (text_[pos_] != ']') {
        Value(path + "/" + std::to_string(index++));
        SkipSpace();
        if (text_[pos_] == ',') {
          Advance();
          SkipSpace();
        }
      }
      Advance();
    } else if (c == '"') {
      String();
    } else {
      while (pos_ < text_.size() && text_[pos_] != ',' && text_[pos_] != '}' &&
             text_[pos_] != ']' && text_[pos_] != ' ' && text_[pos_] != '\n' &&
             text_[pos_] != '\r' && text_[pos_] != '\t') {
        Advance();
      }
    }
  }

  std::string_view text_;
  size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
  std::map<std::string, Position> positions_;
};

class Reader {
 public:
  Reader(const SourceMap &map, std::vector<Diagnostic> *out)
      : map_(map), out_(out) {}

  void Error(ErrorCategory category, const std::string &path,
             const std::string &message) {
    const Position p = map_.Find(path);
    out_->push_back({category, p.line, p.column, path, message, std::nullopt});
  }
  void Schema(const std::string &path, const std::string &message) {
    Error(ErrorCategory::kSchema, path, message);
  }

  // Reports keys of obj not in allowed. Returns false if obj is not an
  // object.
  bool Object(const json &obj, const std::string &path,
              std::initializer_list<std::string_view> allowed) {
    if (!obj.is_object()) {
      Schema(path, "expected an object");
      return false;
    }
    for (const auto &[key, value] : obj.items()) {
      bool known = false;
      for (std::string_view a : allowed) known |= (a == key);
      if (!known) Schema(path + "/" + key, "unknown field \"" + key + "\"");
    }
    return true;
  }

  const json *Member(const json &obj, const std::string &path,
                     const char *key, bool required = true) {
    auto it = obj.find(key);
    if (it == obj.end()) {
      if (required) Schema(path, std::string("missing field \"") + key + "\"");
      return nullptr;
    }
    return &*it;
  }

  std::optional<bool> Bool(const json &obj, const std::string &path,
                           const char *key) {
    const json *v = Member(obj, path, key);
    if (v == nullptr) return std::nullopt;
    if (!v->is_boolean()) {
      Schema(path + "/" + key, "expected a boolean");
      return std::nullopt;
    }
    return v->get<bool>();
  }

  std::optional<std::string> String(const json &value,
                                    const std::string &path) {
    if (!value.is_string()) {
      Schema(path, "expected a string");
      return std::nullopt;
    }
    return value.get<std::string>();
  }

  std::optional<GrammaticalRole> Role(const json &value,
                                      const std::string &path) {
    auto text = String(value, path);
    if (!text) return std::nullopt;
    auto role = ParseRole(*text);
    if (!role) Schema(path, "unknown role \"" + *text + "\"");
    return role;
  }

  std::optional<GrammaticalRole> RoleKey(const std::string &key,
                                         const std::string &path) {
    auto role = ParseRole(key);
    if (!role) Schema(path, "unknown role \"" + key + "\"");
    return role;
  }

 private:
  const SourceMap &map_;
  std::vector<Diagnostic> *out_;
};

std::optional<Entity> ReadEntity(Reader &r, const json &j,
                                 const std::string &path) {
  if (!r.Object(j, path, {"id", "animate", "hearer_old", "definite"})) {
    return std::nullopt;
  }
  Entity e;
  bool ok = true;
  if (const json *id = r.Member(j, path, "id")) {
    if (auto s = r.String(*id, path + "/id")) {
      e.id = EntityId(*s);
    } else {
      ok = false;
    }
  } else {
    ok = false;
  }
  auto animate = r.Bool(j, path, "animate");
  auto hearer_old = r.Bool(j, path, "hearer_old");
  auto definite = r.Bool(j, path, "definite");
  if (!ok || !animate || !hearer_old || !definite) return std::nullopt;
  e.animate = *animate;
  e.hearer_old = *hearer_old;
  e.definite = *definite;
  return e;
}

std::optional<VerbFrame> ReadFrame(Reader &r, const json &j,
                                   const std::string &path) {
  if (!r.Object(j, path, {"lemma", "subcat", "sortal", "empathy_locus"})) {
    return std::nullopt;
  }
  VerbFrame frame;
  bool ok = true;
  if (const json *lemma = r.Member(j, path, "lemma")) {
    auto s = r.String(*lemma, path + "/lemma");
    ok &= s.has_value();
    if (s) frame.lemma = *s;
  } else {
    ok = false;
  }

  if (const json *subcat = r.Member(j, path, "subcat")) {
    const std::string sp = path + "/subcat";
    if (!subcat->is_array()) {
      r.Schema(sp, "expected an array of roles");
      ok = false;
    } else {
      for (size_t i = 0; i < subcat->size(); ++i) {
        auto role = r.Role((*subcat)[i], sp + "/" + std::to_string(i));
        if (!role) {
          ok = false;
        } else if (frame.Subcategorizes(*role)) {
          r.Schema(sp + "/" + std::to_string(i), "duplicate role in subcat");
          ok = false;
        } else {
          frame.subcat.push_back(*role);
        }
      }
      if (subcat->empty()) {
        r.Schema(sp, "subcat must not be empty");
        ok = false;
      }
    }
  } else {
    ok = false;
  }

  if (const json *sortal = r.Member(j, path, "sortal", false)) {
    const std::string sp = path + "/sortal";
    if (!sortal->is_object()) {
      r.Schema(sp, "expected an object");
      ok = false;
    } else {
      for (const auto &[key, value] : sortal->items()) {
        auto role = r.RoleKey(key, sp + "/" + key);
        auto text = r.String(value, sp + "/" + key);
        std::optional<Sort> sort;
        if (text) {
          sort = ParseSort(*text);
          if (!sort) r.Schema(sp + "/" + key, "unknown sort \"" + *text + "\"");
        }
        if (role && sort && !frame.Subcategorizes(*role)) {
          r.Schema(sp + "/" + key, "sortal constraint on a role outside subcat");
          ok = false;
        } else if (role && sort) {
          frame.sortal[*role] = *sort;
        } else {
          ok = false;
        }
      }
    }
  }

  if (const json *locus = r.Member(j, path, "empathy_locus", false)) {
    if (!locus->is_null()) {
      auto role = r.Role(*locus, path + "/empathy_locus");
      if (role && !frame.Subcategorizes(*role)) {
        r.Schema(path + "/empathy_locus", "empathy locus outside subcat");
        ok = false;
      } else if (role) {
        frame.empathy_locus = role;
      } else {
        ok = false;
      }
    }
  }
  if (!ok) return std::nullopt;
  return frame;
}

std::optional<Argument> ReadArgument(Reader &r, const json &j,
                                     const std::string &path) {
  if (!r.Object(j, path, {"role", "marking", "realization"})) {
    return std::nullopt;
  }
  Argument arg;
  bool ok = true;
  if (const json *role = r.Member(j, path, "role")) {
    auto parsed = r.Role(*role, path + "/role");
    ok &= parsed.has_value();
    if (parsed) arg.role = *parsed;
  } else {
    ok = false;
  }
  if (const json *marking = r.Member(j, path, "marking")) {
    auto text = r.String(*marking, path + "/marking");
    std::optional<Marking> parsed;
    if (text) {
      parsed = ParseMarking(*text);
      if (!parsed) r.Schema(path + "/marking", "unknown marking \"" + *text + "\"");
    }
    ok &= parsed.has_value();
    if (parsed) arg.marking = *parsed;
  } else {
    ok = false;
  }
  if (const json *real = r.Member(j, path, "realization")) {
    const std::string rp = path + "/realization";
    if (real->is_string() && real->get<std::string>() == "zero") {
      arg.realization = Realization::Zero();
    } else if (real->is_object()) {
      if (r.Object(*real, rp, {"np"})) {
        if (const json *np = r.Member(*real, rp, "np")) {
          auto id = r.String(*np, rp + "/np");
          ok &= id.has_value();
          if (id) arg.realization = Realization::Overt(EntityId(*id));
        } else {
          ok = false;
        }
      } else {
        ok = false;
      }
    } else {
      r.Schema(rp, "expected \"zero\" or {\"np\": id}");
      ok = false;
    }
  } else {
    ok = false;
  }
  if (ok && arg.marking == Marking::kWa && arg.realization.is_zero()) {
    r.Schema(path + "/marking", "wa marks only overt arguments");
    ok = false;
  }
  if (!ok) return std::nullopt;
  return arg;
}

std::optional<Utterance> ReadUtterance(Reader &r, const json &j,
                                       const std::string &path, int index) {
  if (!r.Object(j, path, {"verb", "args", "others", "gloss"})) {
    return std::nullopt;
  }
  Utterance u;
  u.index = index;
  bool ok = true;
  if (const json *verb = r.Member(j, path, "verb")) {
    auto frame = ReadFrame(r, *verb, path + "/verb");
    ok &= frame.has_value();
    if (frame) u.frame = std::move(*frame);
  } else {
    ok = false;
  }
  if (const json *args = r.Member(j, path, "args")) {
    const std::string ap = path + "/args";
    if (!args->is_array()) {
      r.Schema(ap, "expected an array");
      ok = false;
    } else {
      int wa = 0;
      for (size_t i = 0; i < args->size(); ++i) {
        auto arg = ReadArgument(r, (*args)[i], ap + "/" + std::to_string(i));
        if (!arg) {
          ok = false;
          continue;
        }
        if (arg->marking == Marking::kWa && ++wa > 1) {
          r.Schema(ap + "/" + std::to_string(i),
                   "at most one wa-marked argument per utterance");
          ok = false;
        }
        u.args.push_back(std::move(*arg));
      }
    }
  } else {
    ok = false;
  }
  if (const json *others = r.Member(j, path, "others", false)) {
    const std::string op = path + "/others";
    if (!others->is_array()) {
      r.Schema(op, "expected an array of entity ids");
      ok = false;
    } else {
      for (size_t i = 0; i < others->size(); ++i) {
        auto id = r.String((*others)[i], op + "/" + std::to_string(i));
        ok &= id.has_value();
        if (id) u.others.emplace_back(*id);
      }
    }
  }
  if (const json *gloss = r.Member(j, path, "gloss", false)) {
    auto s = r.String(*gloss, path + "/gloss");
    ok &= s.has_value();
    if (s) u.gloss = *s;
  }
  if (!ok) return std::nullopt;
  return u;
}

std::optional<GoldLabel> ReadGold(Reader &r, const json &j,
                                  const std::string &path,
                                  size_t utterance_count) {
  if (!r.Object(j, path, {"utterance_index", "assignment", "support_count",
                          "significance"})) {
    return std::nullopt;
  }
  GoldLabel g;
  bool ok = true;
  if (const json *index = r.Member(j, path, "utterance_index")) {
    if (!index->is_number_integer() || index->get<int64_t>() < 1 ||
        index->get<int64_t>() > static_cast<int64_t>(utterance_count)) {
      r.Schema(path + "/utterance_index", "expected an utterance index");
      ok = false;
    } else {
      g.utterance_index = index->get<int>();
    }
  } else {
    ok = false;
  }
  if (const json *assignment = r.Member(j, path, "assignment")) {
    const std::string ap = path + "/assignment";
    if (!assignment->is_object()) {
      r.Schema(ap, "expected an object mapping roles to entities");
      ok = false;
    } else {
      for (const auto &[key, value] : assignment->items()) {
        auto role = r.RoleKey(key, ap + "/" + key);
        auto id = r.String(value, ap + "/" + key);
        if (role && id) {
          g.assignment.push_back({*role, EntityId(*id)});
        } else {
          ok = false;
        }
      }
      // Keep bindings in role order so equality ignores key order.
      std::sort(g.assignment.begin(), g.assignment.end(),
                [](const Binding &x, const Binding &y) {
                  return Rank(x.role) < Rank(y.role);
                });
    }
  } else {
    ok = false;
  }
  if (const json *support = r.Member(j, path, "support_count", false)) {
    if (support->is_number_integer() && support->get<int64_t>() >= 0) {
      g.support_count = support->get<int>();
    } else if (!support->is_null()) {
      r.Schema(path + "/support_count", "expected a count or null");
      ok = false;
    }
  }
  if (const json *sig = r.Member(j, path, "significance")) {
    auto text = r.String(*sig, path + "/significance");
    if (text == "significant") {
      g.significance = Significance::kSignificant;
    } else if (text == "ambiguous") {
      g.significance = Significance::kAmbiguous;
    } else {
      if (text) r.Schema(path + "/significance", "unknown significance");
      ok = false;
    }
  } else {
    ok = false;
  }
  if (!ok) return std::nullopt;
  return g;
}

std::string ViolationPath(const Discourse &d, const Violation &v) {
  if (v.utterance_index == 0) return "/entities";
  std::string path = "/utterances/" + std::to_string(v.utterance_index - 1);
  if (!v.role) return path;
  const Utterance &u = d.utterances()[v.utterance_index - 1];
  for (size_t i = 0; i < u.args.size(); ++i) {
    if (u.args[i].role == *v.role) {
      return path + "/args/" + std::to_string(i);
    }
  }
  if (*v.role == GrammaticalRole::kOther) return path + "/others";
  return path;
}

}  // namespace

ParseResult ParseCorpus(std::string_view text) {
  ParseResult result;
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error &e) {
    const size_t offset = e.byte > 0 ? e.byte - 1 : 0;
    const Position p = SourceMap::At(text, offset);
    result.diagnostics.push_back(
        {ErrorCategory::kParse, p.line, p.column, "", e.what(), std::nullopt});
    return result;
  }

  const SourceMap map(text);
  Reader r(map, &result.diagnostics);
  if (!r.Object(root, "", {"title", "entities", "utterances", "gold"})) {
    return result;
  }

  Corpus corpus;
  bool ok = true;
  if (const json *title = r.Member(root, "", "title", false)) {
    auto s = r.String(*title, "/title");
    ok &= s.has_value();
    if (s) corpus.title = *s;
  }

  std::vector<Entity> entities;
  if (const json *list = r.Member(root, "", "entities")) {
    if (!list->is_array()) {
      r.Schema("/entities", "expected an array");
      ok = false;
    } else {
      for (size_t i = 0; i < list->size(); ++i) {
        auto e = ReadEntity(r, (*list)[i], "/entities/" + std::to_string(i));
        ok &= e.has_value();
        if (e) entities.push_back(std::move(*e));
      }
    }
  } else {
    ok = false;
  }

  std::vector<Utterance> utterances;
  if (const json *list = r.Member(root, "", "utterances")) {
    if (!list->is_array()) {
      r.Schema("/utterances", "expected an array");
      ok = false;
    } else {
      for (size_t i = 0; i < list->size(); ++i) {
        auto u = ReadUtterance(r, (*list)[i], "/utterances/" + std::to_string(i),
                               static_cast<int>(i + 1));
        ok &= u.has_value();
        if (u) utterances.push_back(std::move(*u));
      }
    }
  } else {
    ok = false;
  }

  if (const json *list = r.Member(root, "", "gold", false)) {
    if (!list->is_array()) {
      r.Schema("/gold", "expected an array");
      ok = false;
    } else {
      const size_t count = root.contains("utterances") &&
                                   root["utterances"].is_array()
                               ? root["utterances"].size()
                               : 0;
      for (size_t i = 0; i < list->size(); ++i) {
        auto g = ReadGold(r, (*list)[i], "/gold/" + std::to_string(i), count);
        ok &= g.has_value();
        if (g) corpus.gold.push_back(std::move(*g));
      }
    }
  }
  if (!ok || result.HasErrors(ErrorCategory::kSchema)) return result;

  corpus.discourse = Discourse(std::move(entities), std::move(utterances));
  for (const Violation &v : ValidateDiscourse(corpus.discourse)) {
    const std::string path = ViolationPath(corpus.discourse, v);
    const Position p = map.Find(path);
    result.diagnostics.push_back(
        {ErrorCategory::kValidation, p.line, p.column, path, Describe(v), v});
  }
  for (size_t i = 0; i < corpus.gold.size(); ++i) {
    for (const Binding &b : corpus.gold[i].assignment) {
      if (corpus.discourse.Find(b.entity) == nullptr) {
        const std::string path = "/gold/" + std::to_string(i) + "/assignment/" +
                                 std::string(Name(b.role));
        r.Error(ErrorCategory::kValidation, path,
                "undeclared entity \"" + b.entity.str() + "\" in gold label");
      }
    }
  }
  result.corpus = std::move(corpus);
  return result;
}

std::string SerializeCorpus(const Corpus &corpus) {
  ordered_json root = ordered_json::object();
  if (!corpus.title.empty()) root["title"] = corpus.title;

  ordered_json entities = ordered_json::array();
  for (const Entity &e : corpus.discourse.entities()) {
    ordered_json j;
    j["id"] = e.id.str();
    j["animate"] = e.animate;
    j["hearer_old"] = e.hearer_old;
    j["definite"] = e.definite;
    entities.push_back(std::move(j));
  }
  root["entities"] = std::move(entities);

  ordered_json utterances = ordered_json::array();
  for (const Utterance &u : corpus.discourse.utterances()) {
    ordered_json verb;
    verb["lemma"] = u.frame.lemma;
    verb["subcat"] = ordered_json::array();
    for (GrammaticalRole role : u.frame.subcat) {
      verb["subcat"].push_back(std::string(Name(role)));
    }
    verb["sortal"] = ordered_json::object();
    for (GrammaticalRole role : u.frame.subcat) {
      auto it = u.frame.sortal.find(role);
      if (it != u.frame.sortal.end()) {
        verb["sortal"][std::string(Name(role))] = std::string(Name(it->second));
      }
    }
    verb["empathy_locus"] =
        u.frame.empathy_locus
            ? ordered_json(std::string(Name(*u.frame.empathy_locus)))
            : ordered_json(nullptr);

    ordered_json args = ordered_json::array();
    for (const Argument &arg : u.args) {
      ordered_json a;
      a["role"] = std::string(Name(arg.role));
      a["marking"] = std::string(Name(arg.marking));
      if (arg.realization.is_zero()) {
        a["realization"] = "zero";
      } else {
        a["realization"] = {{"np", arg.realization.entity().str()}};
      }
      args.push_back(std::move(a));
    }
    ordered_json others = ordered_json::array();
    for (const EntityId &id : u.others) others.push_back(id.str());

    ordered_json j;
    j["verb"] = std::move(verb);
    j["args"] = std::move(args);
    j["others"] = std::move(others);
    j["gloss"] = u.gloss;
    utterances.push_back(std::move(j));
  }
  root["utterances"] = std::move(utterances);

  if (!corpus.gold.empty()) {
    ordered_json gold = ordered_json::array();
    for (const GoldLabel &g : corpus.gold) {
      ordered_json j;
      j["utterance_index"] = g.utterance_index;
      j["assignment"] = ordered_json::object();
      for (const Binding &b : g.assignment) {
        j["assignment"][std::string(Name(b.role))] = b.entity.str();
      }
      j["support_count"] = g.support_count ? ordered_json(*g.support_count)
                                           : ordered_json(nullptr);
      j["significance"] = std::string(Name(g.significance));
      gold.push_back(std::move(j));
    }
    root["gold"] = std::move(gold);
  }
  return root.dump(2) + "\n";
}

}  // namespace zerocenter
