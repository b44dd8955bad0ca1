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

#ifndef CSEG_CORPUS_H_
#define CSEG_CORPUS_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cseg {

// Entities are identified by their id; the surface string is the canonical
// rendering used in tables and reports.
using EntityId = std::string;

struct Entity {
  EntityId id;
  std::string surface;

  bool operator==(const Entity &) const = default;
};

// One element of an utterance's list of forward-looking centers. The list is
// totally ordered; rank 1 is the preferred center. A mediated entry marks an
// entity that entered the list through a textual ellipsis rather than through
// a directly realized expression. Mediated entries carry no surface string.
struct CfEntry {
  EntityId entity;
  std::string surface;
  bool mediated = false;

  bool operator==(const CfEntry &) const = default;
};

enum class ExpressionKind {
  kPronoun,
  kNominal,
  kEllipsis,
  kNone,  // directly realized, nothing to resolve
};

// Annotated antecedent: the entity an expression refers to and the utterance
// of its most recent prior occurrence.
struct GoldAnnotation {
  EntityId entity;
  int utterance = 0;

  bool operator==(const GoldAnnotation &) const = default;
};

// A referring expression within an utterance. For anaphoric and elliptical
// expressions, candidates lists the entities the expression is compatible
// with; resolution picks the reachable candidate at the most preferred locus.
struct Expression {
  std::string id;
  std::string surface;
  ExpressionKind kind = ExpressionKind::kNone;
  std::vector<EntityId> candidates;
  std::optional<GoldAnnotation> gold;

  bool anaphoric() const { return kind != ExpressionKind::kNone; }
  bool operator==(const Expression &) const = default;
};

struct Utterance {
  int index = 0;  // 1-based, consecutive within a document
  std::string text;
  int words = 0;
  std::vector<CfEntry> cf;
  std::vector<Expression> expressions;

  bool operator==(const Utterance &) const = default;
};

struct Document {
  std::string id;
  std::vector<Entity> entities;
  std::vector<Utterance> utterances;

  // Looks up an utterance by its 1-based index. Valid after parsing, which
  // guarantees consecutive indices starting at 1.
  const Utterance &utterance(int index) const;

  // Canonical surface for an entity id, or the id itself if undeclared.
  const std::string &entity_surface(const EntityId &id) const;

  bool operator==(const Document &) const = default;
};

// Parses a corpus file: either a single document object or an array of
// document objects. Throws CorpusError on malformed syntax, duplicate entity
// ids, references to undeclared entities, or non-consecutive utterance
// indices; messages name the document, utterance, and field. `source` labels
// error messages, typically with the file name.
std::vector<Document> ParseCorpus(std::string_view text,
                                  const std::string &source = "<input>");

// Reads and parses one corpus file. Throws IoError if unreadable.
std::vector<Document> ParseCorpusFile(const std::string &path);

// Serializes a document back to corpus JSON. Field order and formatting are
// fixed, so equal documents serialize to identical bytes.
std::string SerializeDocument(const Document &doc);

enum class Severity { kError, kWarning };

// One validation finding: where it is and which rule it violates.
struct Finding {
  Severity severity = Severity::kError;
  std::string location;  // "doc/utterance 3/field" style
  std::string rule;
  std::string detail;

  bool operator==(const Finding &) const = default;
};

struct ValidationReport {
  std::vector<Finding> findings;

  // True when no error-severity findings are present.
  bool ok() const;
};

// Checks every semantic invariant: non-empty utterance list, consecutive
// indices, declared and pairwise distinct cf entities, non-empty cf lists,
// surface strings on direct cf entries, candidate lists on anaphoric
// expressions, and gold antecedents that do not postdate their expression.
// Pure: the report depends only on the document value.
ValidationReport ValidateDocument(const Document &doc);

const char *ExpressionKindName(ExpressionKind kind);

}  // namespace cseg

#endif  // CSEG_CORPUS_H_
