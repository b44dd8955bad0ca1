// Copyright 2026 The Cseg Authors.
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

#include "cseg/corpus.h"

#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "json.hpp"

#include "cseg/errors.h"

namespace cseg {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

// Error context: accumulates "document/utterance/field" for messages.
struct Where {
  std::string doc;
  std::string part;

  std::string at(const std::string &field) const {
    std::string out = doc;
    if (!part.empty()) out += ": " + part;
    if (!field.empty()) out += ": " + field;
    return out;
  }
};

[[noreturn]] void Fail(const Where &w, const std::string &field,
                       const std::string &message) {
  throw CorpusError(w.at(field) + ": " + message);
}

const json &Require(const json &j, const char *key, const Where &w) {
  auto it = j.find(key);
  if (it == j.end()) Fail(w, key, "missing required field");
  return *it;
}

std::string GetString(const json &j, const char *key, const Where &w) {
  const json &v = Require(j, key, w);
  if (!v.is_string()) Fail(w, key, "must be a string");
  return v.get<std::string>();
}

std::string GetStringOr(const json &j, const char *key, const Where &w,
                        const std::string &fallback) {
  auto it = j.find(key);
  if (it == j.end()) return fallback;
  if (!it->is_string()) Fail(w, key, "must be a string");
  return it->get<std::string>();
}

int GetInt(const json &j, const char *key, const Where &w, int min_value) {
  const json &v = Require(j, key, w);
  if (!v.is_number_integer()) Fail(w, key, "must be an integer");
  int n = v.get<int>();
  if (n < min_value) {
    Fail(w, key, "must be at least " + std::to_string(min_value));
  }
  return n;
}

ExpressionKind ParseKind(const std::string &name, const Where &w) {
  if (name == "pronoun") return ExpressionKind::kPronoun;
  if (name == "nominal") return ExpressionKind::kNominal;
  if (name == "ellipsis") return ExpressionKind::kEllipsis;
  if (name == "none") return ExpressionKind::kNone;
  Fail(w, "kind", "unknown expression kind \"" + name + "\"");
}

CfEntry ParseCfEntry(const json &j, const Where &w) {
  if (!j.is_object()) Fail(w, "", "cf entry must be an object");
  CfEntry entry;
  entry.entity = GetString(j, "entity", w);
  entry.surface = GetStringOr(j, "surface", w, "");
  auto it = j.find("mediated");
  if (it != j.end()) {
    if (!it->is_boolean()) Fail(w, "mediated", "must be a boolean");
    entry.mediated = it->get<bool>();
  }
  return entry;
}

Expression ParseExpression(const json &j, const Where &w) {
  if (!j.is_object()) Fail(w, "", "expression must be an object");
  Expression x;
  x.id = GetString(j, "id", w);
  x.surface = GetStringOr(j, "surface", w, "");
  x.kind = ParseKind(GetString(j, "kind", w), w);
  if (auto it = j.find("candidates"); it != j.end()) {
    if (!it->is_array()) Fail(w, "candidates", "must be an array");
    for (const json &c : *it) {
      if (!c.is_string()) Fail(w, "candidates", "must contain entity ids");
      x.candidates.push_back(c.get<std::string>());
    }
  }
  if (auto it = j.find("gold"); it != j.end()) {
    if (!it->is_object()) Fail(w, "gold", "must be an object");
    GoldAnnotation gold;
    gold.entity = GetString(*it, "entity", w);
    gold.utterance = GetInt(*it, "utterance", w, 1);
    x.gold = gold;
  }
  return x;
}

Document ParseDocument(const json &j, const std::string &source, int ordinal) {
  Where w;
  w.doc = source;
  if (!j.is_object()) {
    Fail(w, "", "document #" + std::to_string(ordinal) + " must be an object");
  }
  Document doc;
  doc.id = GetStringOr(j, "id", w, "doc" + std::to_string(ordinal));
  w.doc = source + ":" + doc.id;

  std::unordered_set<std::string> declared;
  if (auto it = j.find("entities"); it != j.end()) {
    if (!it->is_array()) Fail(w, "entities", "must be an array");
    for (const json &e : *it) {
      if (!e.is_object()) Fail(w, "entities", "entries must be objects");
      Entity entity;
      entity.id = GetString(e, "id", w);
      entity.surface = GetStringOr(e, "surface", w, entity.id);
      if (!declared.insert(entity.id).second) {
        Fail(w, "entities", "duplicate entity id \"" + entity.id + "\"");
      }
      doc.entities.push_back(std::move(entity));
    }
  }

  auto check_declared = [&](const EntityId &id, const Where &where,
                            const char *field) {
    if (!declared.count(id)) {
      Fail(where, field, "undeclared entity \"" + id + "\"");
    }
  };

  const json &utterances = Require(j, "utterances", w);
  if (!utterances.is_array()) Fail(w, "utterances", "must be an array");
  int expected = 1;
  for (const json &u : utterances) {
    Where wu = w;
    wu.part = "utterance " + std::to_string(expected);
    if (!u.is_object()) Fail(wu, "", "utterance must be an object");
    Utterance utt;
    utt.index = GetInt(u, "index", wu, 1);
    wu.part = "utterance " + std::to_string(utt.index);
    if (utt.index != expected) {
      Fail(wu, "index",
           "utterance indices must be consecutive from 1; expected " +
               std::to_string(expected));
    }
    ++expected;
    utt.text = GetStringOr(u, "text", wu, "");
    if (auto it = u.find("words"); it != u.end()) {
      utt.words = GetInt(u, "words", wu, 0);
    }
    const json &cf = Require(u, "cf", wu);
    if (!cf.is_array()) Fail(wu, "cf", "must be an array");
    for (const json &entry : cf) {
      CfEntry e = ParseCfEntry(entry, wu);
      check_declared(e.entity, wu, "cf");
      utt.cf.push_back(std::move(e));
    }
    if (auto it = u.find("expressions"); it != u.end()) {
      if (!it->is_array()) Fail(wu, "expressions", "must be an array");
      for (const json &entry : *it) {
        Expression x = ParseExpression(entry, wu);
        for (const EntityId &c : x.candidates) {
          check_declared(c, wu, "candidates");
        }
        if (x.gold) check_declared(x.gold->entity, wu, "gold");
        utt.expressions.push_back(std::move(x));
      }
    }
    doc.utterances.push_back(std::move(utt));
  }
  return doc;
}

}  // namespace

const Utterance &Document::utterance(int index) const {
  CSEG_CHECK(index >= 1 && index <= static_cast<int>(utterances.size()),
             "utterance index out of range: " + std::to_string(index));
  const Utterance &u = utterances[index - 1];
  CSEG_CHECK(u.index == index, "utterance list not consecutive");
  return u;
}

const std::string &Document::entity_surface(const EntityId &id) const {
  for (const Entity &e : entities) {
    if (e.id == id) return e.surface;
  }
  return id;
}

std::vector<Document> ParseCorpus(std::string_view text,
                                  const std::string &source) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error &e) {
    throw CorpusError(source + ": malformed JSON: " + e.what());
  }
  std::vector<Document> docs;
  if (root.is_array()) {
    int ordinal = 0;
    for (const json &j : root) {
      docs.push_back(ParseDocument(j, source, ordinal++));
    }
  } else {
    docs.push_back(ParseDocument(root, source, 0));
  }
  return docs;
}

std::vector<Document> ParseCorpusFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("read failed on " + path);
  return ParseCorpus(buffer.str(), path);
}

std::string SerializeDocument(const Document &doc) {
  ordered_json j;
  j["id"] = doc.id;
  j["entities"] = ordered_json::array();
  for (const Entity &e : doc.entities) {
    j["entities"].push_back({{"id", e.id}, {"surface", e.surface}});
  }
  j["utterances"] = ordered_json::array();
  for (const Utterance &u : doc.utterances) {
    ordered_json ju;
    ju["index"] = u.index;
    if (!u.text.empty()) ju["text"] = u.text;
    ju["words"] = u.words;
    ju["cf"] = ordered_json::array();
    for (const CfEntry &e : u.cf) {
      ordered_json je;
      je["entity"] = e.entity;
      if (!e.surface.empty()) je["surface"] = e.surface;
      if (e.mediated) je["mediated"] = true;
      ju["cf"].push_back(std::move(je));
    }
    if (!u.expressions.empty()) {
      ju["expressions"] = ordered_json::array();
      for (const Expression &x : u.expressions) {
        ordered_json jx;
        jx["id"] = x.id;
        if (!x.surface.empty()) jx["surface"] = x.surface;
        jx["kind"] = ExpressionKindName(x.kind);
        if (!x.candidates.empty()) jx["candidates"] = x.candidates;
        if (x.gold) {
          jx["gold"] = {{"entity", x.gold->entity},
                        {"utterance", x.gold->utterance}};
        }
        ju["expressions"].push_back(std::move(jx));
      }
    }
    j["utterances"].push_back(std::move(ju));
  }
  return j.dump(2) + "\n";
}

bool ValidationReport::ok() const {
  for (const Finding &f : findings) {
    if (f.severity == Severity::kError) return false;
  }
  return true;
}

ValidationReport ValidateDocument(const Document &doc) {
  ValidationReport report;
  auto add = [&](Severity severity, const std::string &location,
                 const std::string &rule, const std::string &detail) {
    report.findings.push_back({severity, location, rule, detail});
  };
  const std::string d = doc.id.empty() ? "<unnamed>" : doc.id;

  std::unordered_set<std::string> declared;
  for (const Entity &e : doc.entities) {
    if (!declared.insert(e.id).second) {
      add(Severity::kError, d + "/entities", "entity-id-unique",
          "duplicate entity id \"" + e.id + "\"");
    }
  }
  auto check_declared = [&](const EntityId &id, const std::string &location) {
    if (!declared.count(id)) {
      add(Severity::kError, location, "entity-declared",
          "undeclared entity \"" + id + "\"");
    }
  };

  if (doc.utterances.empty()) {
    add(Severity::kError, d, "document-non-empty",
        "document has no utterances");
  }
  int expected = 1;
  for (const Utterance &u : doc.utterances) {
    const std::string loc = d + "/utterance " + std::to_string(u.index);
    if (u.index != expected) {
      add(Severity::kError, loc + "/index", "utterance-indices-consecutive",
          "expected index " + std::to_string(expected));
    }
    expected = u.index + 1;
    if (u.words < 0) {
      add(Severity::kError, loc + "/words", "words-non-negative",
          "word count is negative");
    }
    if (u.cf.empty()) {
      add(Severity::kError, loc + "/cf", "cf-non-empty",
          "utterance has an empty center list");
    }
    std::unordered_set<std::string> seen;
    for (const CfEntry &e : u.cf) {
      check_declared(e.entity, loc + "/cf");
      if (!seen.insert(e.entity).second) {
        add(Severity::kError, loc + "/cf", "cf-distinct-entities",
            "entity \"" + e.entity + "\" occurs twice in one center list");
      }
      if (!e.mediated && e.surface.empty()) {
        add(Severity::kError, loc + "/cf", "cf-surface-required",
            "direct entry for \"" + e.entity + "\" has no surface");
      }
    }
    for (const Expression &x : u.expressions) {
      const std::string xloc = loc + "/expression " + x.id;
      for (const EntityId &c : x.candidates) check_declared(c, xloc);
      if (x.anaphoric() && x.candidates.empty()) {
        add(Severity::kError, xloc, "candidates-required",
            "anaphoric expression has no candidate entities");
      }
      if (!x.anaphoric() && !x.candidates.empty()) {
        add(Severity::kWarning, xloc, "candidates-unused",
            "non-anaphoric expression lists candidates");
      }
      if (x.gold) {
        check_declared(x.gold->entity, xloc + "/gold");
        if (x.gold->utterance > u.index) {
          add(Severity::kError, xloc + "/gold", "gold-antecedent-order",
              "gold antecedent utterance " +
                  std::to_string(x.gold->utterance) +
                  " follows the expression");
        }
        bool compatible = x.candidates.empty();
        for (const EntityId &c : x.candidates) {
          if (c == x.gold->entity) compatible = true;
        }
        if (x.anaphoric() && !compatible) {
          add(Severity::kWarning, xloc + "/gold", "gold-entity-candidate",
              "gold entity \"" + x.gold->entity + "\" is not a candidate");
        }
      }
    }
  }
  return report;
}

const char *ExpressionKindName(ExpressionKind kind) {
  switch (kind) {
    case ExpressionKind::kPronoun:
      return "pronoun";
    case ExpressionKind::kNominal:
      return "nominal";
    case ExpressionKind::kEllipsis:
      return "ellipsis";
    case ExpressionKind::kNone:
      return "none";
  }
  return "none";
}

}  // namespace cseg
