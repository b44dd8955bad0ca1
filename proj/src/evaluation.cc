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

#include "cseg/evaluation.h"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "cseg/errors.h"

namespace cseg {

using nlohmann::ordered_json;

std::string_view OutcomeName(Outcome outcome) {
  switch (outcome) {
    case Outcome::kCorrect:
      return "correct";
    case Outcome::kError:
      return "error";
    case Outcome::kFalsePositive:
      return "false_positive";
    case Outcome::kIntraUtterance:
      return "intra_utterance";
  }
  return "error";
}

Outcome ClassifyOutcome(const ResolutionResult &result,
                        const GoldAnnotation &gold,
                        int expression_utterance) {
  if (gold.utterance == expression_utterance) return Outcome::kIntraUtterance;
  if (!result.entity || *result.entity != gold.entity) return Outcome::kError;
  if (result.locus.utterance && *result.locus.utterance == gold.utterance) {
    return Outcome::kCorrect;
  }
  // Right entity, wrong occurrence: the hierarchically most recent
  // antecedent is not the linearly most recent one.
  return Outcome::kFalsePositive;
}

DocumentEvaluation EvaluateDocument(const Document &doc,
                                    const AnalysisTrace &trace) {
  DocumentEvaluation eval;
  // Step k holds utterance k+1; the level an utterance was resolved at is
  // the innermost level after the previous step.
  auto step_for = [&](int utterance) -> const StepRecord * {
    const int k = utterance - 1;
    if (k < 0 || k >= static_cast<int>(trace.steps.size())) return nullptr;
    CSEG_CHECK(trace.steps[k].utterance == utterance,
               "trace steps out of order");
    return &trace.steps[k];
  };
  for (const Utterance &u : doc.utterances) {
    int level = 1;
    if (u.index >= 2) {
      const StepRecord *prev = step_for(u.index - 1);
      if (prev && !prev->open_segments.empty()) {
        level = prev->open_segments.back().level;
      }
    }
    const StepRecord *step = step_for(u.index);
    for (const Expression &x : u.expressions) {
      if (!x.anaphoric()) continue;
      if (!x.gold) {
        ++eval.unannotated;
        continue;
      }
      ResolutionResult result;
      result.expression = x.id;
      if (step) {
        for (const ResolutionResult &r : step->resolutions) {
          if (r.expression == x.id) {
            result = r;
            break;
          }
        }
      }
      EvaluatedExpression item;
      item.expression_id = x.id;
      item.kind = x.kind;
      item.utterance = u.index;
      item.distance = u.index - x.gold->utterance;
      item.outcome = ClassifyOutcome(result, *x.gold, u.index);
      item.locus = result.locus;
      item.level = level;
      eval.items.push_back(std::move(item));
    }
  }
  return eval;
}

int DistanceBucket(int distance) {
  if (distance <= 0) return 0;
  if (distance <= 5) return distance;
  if (distance <= 10) return 6;
  if (distance <= 15) return 7;
  if (distance <= 20) return 8;
  return 9;
}

std::string_view DistanceBucketLabel(int bucket) {
  switch (bucket) {
    case 0:
      return "U_i";
    case 1:
      return "U_i-1";
    case 2:
      return "U_i-2";
    case 3:
      return "U_i-3";
    case 4:
      return "U_i-4";
    case 5:
      return "U_i-5";
    case 6:
      return "U_i-6..10";
    case 7:
      return "U_i-11..15";
    case 8:
      return "U_i-16..20";
    case 9:
      return "U_i-21+";
    default:
      return "?";
  }
}

int LocusCategory(const Locus &locus, int level) {
  switch (locus.clause) {
    case LocusClause::kIntraUtterance:
      return 0;
    case LocusClause::kPrevCf:
      return 1;
    case LocusClause::kPrevSegEndCf:
      return locus.rank && *locus.rank == 1 ? 2 : 3;
    case LocusClause::kSegEndCp: {
      // k levels below the resolution level, k >= 2.
      const int k = locus.level ? level - *locus.level : 2;
      return 2 + std::max(k, 2);
    }
    case LocusClause::kUnreachable:
      return -1;
  }
  return -1;
}

std::string LocusCategoryLabel(int category) {
  switch (category) {
    case -1:
      return "unreachable";
    case 0:
      return "U_i";
    case 1:
      return "Cf(s, U_i-1)";
    case 2:
      return "Cp(s-1, end)";
    case 3:
      return "Cf(s-1, end)";
    default:
      return "Cp(s-" + std::to_string(category - 2) + ", end)";
  }
}

StatsReport SummarizeDocument(const Document &doc, const AnalysisTrace &trace,
                              const DocumentEvaluation &eval) {
  StatsReport report;
  report.documents = 1;
  report.utterances = static_cast<int>(doc.utterances.size());
  for (const Utterance &u : doc.utterances) {
    report.words += u.words;
    for (const Expression &x : u.expressions) {
      if (!x.anaphoric()) continue;
      if (x.kind == ExpressionKind::kEllipsis) {
        ++report.ellipses.expressions;
      } else {
        ++report.anaphors.expressions;
      }
    }
  }
  report.unannotated = eval.unannotated;
  for (const EvaluatedExpression &item : eval.items) {
    KindStats &ks = item.kind == ExpressionKind::kEllipsis ? report.ellipses
                                                           : report.anaphors;
    ++ks.gold_annotated;
    ++ks.distance[DistanceBucket(item.distance)];
    switch (item.outcome) {
      case Outcome::kCorrect:
        ++ks.locus[LocusCategory(item.locus, item.level)];
        break;
      case Outcome::kFalsePositive:
        ++ks.locus[LocusCategory(item.locus, item.level)];
        ++ks.false_positives;
        break;
      case Outcome::kIntraUtterance:
        ++ks.locus[0];
        break;
      case Outcome::kError:
        ++ks.errors;
        break;
    }
  }
  report.max_depth = trace.max_level;
  return report;
}

namespace {

KindStats MergeKind(const KindStats &a, const KindStats &b) {
  KindStats out = a;
  out.expressions += b.expressions;
  out.gold_annotated += b.gold_annotated;
  for (const auto &[bucket, count] : b.distance) out.distance[bucket] += count;
  for (const auto &[category, count] : b.locus) out.locus[category] += count;
  out.errors += b.errors;
  out.false_positives += b.false_positives;
  return out;
}

void AppendRow(std::ostringstream &out, const std::string &label, int value) {
  out << "  " << std::left << std::setw(18) << label << std::right
      << std::setw(6) << value << "\n";
}

void AppendKindText(std::ostringstream &out, const std::string &kind_name,
                    const KindStats &ks) {
  out << "Antecedent distance (" << kind_name << ", " << ks.gold_annotated
      << " gold)\n";
  if (ks.gold_annotated == 0) {
    out << "  n/a\n";
  } else {
    for (int bucket = 0; bucket < kDistanceBuckets; ++bucket) {
      auto it = ks.distance.find(bucket);
      AppendRow(out, std::string(DistanceBucketLabel(bucket)),
                it == ks.distance.end() ? 0 : it->second);
    }
  }
  out << "\n";
  out << "Antecedent position (" << kind_name << ")\n";
  if (ks.gold_annotated == 0) {
    out << "  n/a\n\n";
    return;
  }
  int max_category = 3;
  for (const auto &[category, count] : ks.locus) {
    max_category = std::max(max_category, category);
  }
  for (int category = 0; category <= max_category; ++category) {
    auto it = ks.locus.find(category);
    AppendRow(out, LocusCategoryLabel(category),
              it == ks.locus.end() ? 0 : it->second);
  }
  AppendRow(out, "errors", ks.errors);
  out << "  " << std::left << std::setw(18) << "false positives"
      << std::right << std::setw(6)
      << ("(" + std::to_string(ks.false_positives) + ")") << "\n\n";
}

ordered_json KindToJson(const KindStats &ks) {
  ordered_json j;
  j["expressions"] = ks.expressions;
  j["gold_annotated"] = ks.gold_annotated;
  j["distance"] = ordered_json::object();
  for (int bucket = 0; bucket < kDistanceBuckets; ++bucket) {
    auto it = ks.distance.find(bucket);
    j["distance"][std::string(DistanceBucketLabel(bucket))] =
        it == ks.distance.end() ? 0 : it->second;
  }
  j["locus"] = ordered_json::object();
  int max_category = 3;
  for (const auto &[category, count] : ks.locus) {
    max_category = std::max(max_category, category);
  }
  for (int category = 0; category <= max_category; ++category) {
    auto it = ks.locus.find(category);
    j["locus"][LocusCategoryLabel(category)] =
        it == ks.locus.end() ? 0 : it->second;
  }
  j["errors"] = ks.errors;
  j["false_positives"] = ks.false_positives;
  return j;
}

}  // namespace

StatsReport MergeReports(const StatsReport &a, const StatsReport &b) {
  StatsReport out;
  out.documents = a.documents + b.documents;
  out.utterances = a.utterances + b.utterances;
  out.words = a.words + b.words;
  out.unannotated = a.unannotated + b.unannotated;
  out.anaphors = MergeKind(a.anaphors, b.anaphors);
  out.ellipses = MergeKind(a.ellipses, b.ellipses);
  out.max_depth = std::max(a.max_depth, b.max_depth);
  return out;
}

std::string StatsToText(const StatsReport &report) {
  std::ostringstream out;
  out << "Counts\n";
  AppendRow(out, "documents", report.documents);
  AppendRow(out, "utterances", report.utterances);
  AppendRow(out, "words", report.words);
  AppendRow(out, "anaphors", report.anaphors.expressions);
  AppendRow(out, "ellipses", report.ellipses.expressions);
  AppendRow(out, "max depth", report.max_depth);
  if (report.unannotated > 0) {
    AppendRow(out, "unannotated", report.unannotated);
  }
  out << "\n";
  AppendKindText(out, "anaphors", report.anaphors);
  AppendKindText(out, "ellipses", report.ellipses);
  return out.str();
}

ordered_json StatsToJson(const StatsReport &report) {
  ordered_json j;
  j["documents"] = report.documents;
  j["utterances"] = report.utterances;
  j["words"] = report.words;
  j["anaphors"] = KindToJson(report.anaphors);
  j["ellipses"] = KindToJson(report.ellipses);
  j["unannotated"] = report.unannotated;
  j["max_depth"] = report.max_depth;
  return j;
}

}  // namespace cseg
