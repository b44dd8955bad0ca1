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

#ifndef CSEG_EVALUATION_H_
#define CSEG_EVALUATION_H_

#include <map>
#include <string>
#include <string_view>

#include "json.hpp"

#include "cseg/corpus.h"
#include "cseg/engine.h"
#include "cseg/resolver.h"

namespace cseg {

// Outcome of one gold-annotated expression. The four cases partition the
// gold-annotated expressions: kFalsePositive means the right entity was
// found at a different utterance than the annotated antecedent (the search
// returned the hierarchically most recent occurrence, the annotation names
// the linearly most recent one).
enum class Outcome { kCorrect, kError, kFalsePositive, kIntraUtterance };

std::string_view OutcomeName(Outcome outcome);

// Classifies one resolution against its gold annotation.
Outcome ClassifyOutcome(const ResolutionResult &result,
                        const GoldAnnotation &gold, int expression_utterance);

// One gold-annotated expression with its classification. `level` is the
// segment level the expression's utterance was resolved at; it turns the
// locus into a row of the antecedent-position histogram.
struct EvaluatedExpression {
  std::string expression_id;
  ExpressionKind kind = ExpressionKind::kNone;
  int utterance = 0;
  int distance = 0;  // expression utterance minus gold utterance
  Outcome outcome = Outcome::kError;
  Locus locus;
  int level = 0;

  bool operator==(const EvaluatedExpression &) const = default;
};

struct DocumentEvaluation {
  std::vector<EvaluatedExpression> items;
  int unannotated = 0;  // anaphoric expressions without gold, skipped
};

// Joins a document with its trace and classifies every gold-annotated
// anaphoric expression.
DocumentEvaluation EvaluateDocument(const Document &doc,
                                    const AnalysisTrace &trace);

// Histogram buckets over the distance to the gold antecedent: 0 for the
// same utterance, 1..5 exact, then 6-10, 11-15, 16-20, and beyond.
inline constexpr int kDistanceBuckets = 10;
int DistanceBucket(int distance);
std::string_view DistanceBucketLabel(int bucket);

// Rows of the antecedent-position histogram: 0 same utterance, 1 previous
// utterance's list, 2 preferred center at the enclosing segment's end, 3
// deeper element there, 4+ preferred centers k = 2, 3, ... levels down.
int LocusCategory(const Locus &locus, int level);
std::string LocusCategoryLabel(int category);

// Histograms for one expression kind. Rows of `locus` hold correct and
// false-positive resolutions plus intra-utterance anaphors; `errors` holds
// the rest, so locus totals plus errors cover all gold-annotated
// expressions. `distance` buckets every gold-annotated expression.
struct KindStats {
  int expressions = 0;
  int gold_annotated = 0;
  std::map<int, int> distance;
  std::map<int, int> locus;
  int errors = 0;
  int false_positives = 0;
};

struct StatsReport {
  int documents = 0;
  int utterances = 0;
  int words = 0;
  int unannotated = 0;
  KindStats anaphors;  // pronouns and nominal anaphors
  KindStats ellipses;
  int max_depth = 0;
};

// Aggregates one analyzed document into a report.
StatsReport SummarizeDocument(const Document &doc, const AnalysisTrace &trace,
                              const DocumentEvaluation &eval);

// Merges two reports field-wise. Associative and commutative, with the empty
// report as identity, so multi-document aggregation is order-independent.
StatsReport MergeReports(const StatsReport &a, const StatsReport &b);

std::string StatsToText(const StatsReport &report);
nlohmann::ordered_json StatsToJson(const StatsReport &report);

}  // namespace cseg

#endif  // CSEG_EVALUATION_H_
