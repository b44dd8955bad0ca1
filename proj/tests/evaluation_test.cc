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

#include <map>
#include <random>
#include <sstream>

#include "doctest.h"

#include "generators.h"
#include "test_util.h"

namespace cseg {
namespace {

const EvaluatedExpression &FindItem(const DocumentEvaluation &eval,
                                    const std::string &id) {
  for (const EvaluatedExpression &item : eval.items) {
    if (item.expression_id == id) return item;
  }
  throw std::logic_error("no such item: " + id);
}

// Splits the stats text into section -> label -> value. Rows are the
// two-space indented lines; everything else starts a section.
std::map<std::string, std::map<std::string, std::string>> ParseSections(
    const std::string &text) {
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(' ');
    if (b == std::string::npos) return std::string();
    return s.substr(b, s.find_last_not_of(' ') - b + 1);
  };
  std::map<std::string, std::map<std::string, std::string>> out;
  std::string section;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] != ' ') {
      section = line;
      continue;
    }
    const std::string body = line.substr(2);
    if (body.size() <= 18) {
      out[section][trim(body)] = "";
    } else {
      out[section][trim(body.substr(0, 18))] = trim(body.substr(18));
    }
  }
  return out;
}

TEST_CASE("outcome classification") {
  GoldAnnotation gold{"a", 3};
  ResolutionResult hit{"5.1", "a", {LocusClause::kPrevCf, 2, 3, 1}};
  CHECK(ClassifyOutcome(hit, gold, 5) == Outcome::kCorrect);

  ResolutionResult elsewhere{"5.1", "a", {LocusClause::kPrevSegEndCf, 1, 2, 1}};
  CHECK(ClassifyOutcome(elsewhere, gold, 5) == Outcome::kFalsePositive);

  ResolutionResult wrong{"5.1", "b", {LocusClause::kPrevCf, 2, 3, 1}};
  CHECK(ClassifyOutcome(wrong, gold, 5) == Outcome::kError);

  ResolutionResult miss{"5.1", std::nullopt, {}};
  CHECK(ClassifyOutcome(miss, gold, 5) == Outcome::kError);

  CHECK(ClassifyOutcome(miss, GoldAnnotation{"a", 5}, 5) ==
        Outcome::kIntraUtterance);
}

TEST_CASE("distance buckets") {
  CHECK(DistanceBucket(0) == 0);
  CHECK(DistanceBucket(1) == 1);
  CHECK(DistanceBucket(5) == 5);
  CHECK(DistanceBucket(6) == 6);
  CHECK(DistanceBucket(10) == 6);
  CHECK(DistanceBucket(11) == 7);
  CHECK(DistanceBucket(15) == 7);
  CHECK(DistanceBucket(16) == 8);
  CHECK(DistanceBucket(20) == 8);
  CHECK(DistanceBucket(21) == 9);
  CHECK(DistanceBucket(100) == 9);
  CHECK(DistanceBucketLabel(1) == "U_i-1");
  CHECK(DistanceBucketLabel(6) == "U_i-6..10");
  CHECK(DistanceBucketLabel(9) == "U_i-21+");
}

TEST_CASE("locus categories") {
  CHECK(LocusCategory({LocusClause::kIntraUtterance, {}, 4, {}}, 2) == 0);
  CHECK(LocusCategory({LocusClause::kPrevCf, 3, 5, 2}, 3) == 1);
  CHECK(LocusCategory({LocusClause::kPrevSegEndCf, 2, 7, 1}, 3) == 2);
  CHECK(LocusCategory({LocusClause::kPrevSegEndCf, 2, 7, 3}, 3) == 3);
  // k levels below the resolution level: k = 2 and k = 3.
  CHECK(LocusCategory({LocusClause::kSegEndCp, 2, 2, 1}, 4) == 4);
  CHECK(LocusCategory({LocusClause::kSegEndCp, 1, 1, 1}, 4) == 5);
  CHECK(LocusCategory({LocusClause::kUnreachable, {}, {}, {}}, 3) == -1);

  CHECK(LocusCategoryLabel(0) == "U_i");
  CHECK(LocusCategoryLabel(1) == "Cf(s, U_i-1)");
  CHECK(LocusCategoryLabel(2) == "Cp(s-1, end)");
  CHECK(LocusCategoryLabel(3) == "Cf(s-1, end)");
  CHECK(LocusCategoryLabel(4) == "Cp(s-2, end)");
  CHECK(LocusCategoryLabel(5) == "Cp(s-3, end)");
}

TEST_CASE("sample evaluation") {
  Document doc = LoadSample();
  AnalysisTrace trace = Analyze(doc);
  DocumentEvaluation eval = EvaluateDocument(doc, trace);

  CHECK(eval.items.size() == 17);
  CHECK(eval.unannotated == 0);

  int correct = 0, fp = 0, error = 0, intra = 0;
  for (const EvaluatedExpression &item : eval.items) {
    switch (item.outcome) {
      case Outcome::kCorrect:
        ++correct;
        break;
      case Outcome::kFalsePositive:
        ++fp;
        break;
      case Outcome::kError:
        ++error;
        break;
      case Outcome::kIntraUtterance:
        ++intra;
        break;
    }
  }
  CHECK(correct == 16);
  CHECK(fp == 1);
  CHECK(error == 0);
  CHECK(intra == 0);

  const EvaluatedExpression &fp_item = FindItem(eval, "12.1");
  CHECK(fp_item.outcome == Outcome::kFalsePositive);
  CHECK(fp_item.distance == 2);
  CHECK(fp_item.level == 3);
  CHECK(fp_item.locus == Locus{LocusClause::kPrevSegEndCf, 2, 7, 3});

  const EvaluatedExpression &deep = FindItem(eval, "5.2");
  CHECK(deep.outcome == Outcome::kCorrect);
  CHECK(deep.distance == 2);
  CHECK(deep.level == 2);
  CHECK(LocusCategory(deep.locus, deep.level) == 2);

  const EvaluatedExpression &first = FindItem(eval, "2.1");
  CHECK(first.outcome == Outcome::kCorrect);
  CHECK(first.level == 1);
  CHECK(LocusCategory(first.locus, first.level) == 1);
}

TEST_CASE("sample summary") {
  Document doc = LoadSample();
  AnalysisTrace trace = Analyze(doc);
  StatsReport report = SummarizeDocument(doc, trace, EvaluateDocument(doc, trace));

  CHECK(report.documents == 1);
  CHECK(report.utterances == 13);
  CHECK(report.words == 159);
  CHECK(report.unannotated == 0);
  CHECK(report.max_depth == 5);

  CHECK(report.anaphors.expressions == 9);
  CHECK(report.anaphors.gold_annotated == 9);
  CHECK(report.anaphors.distance == std::map<int, int>{{1, 8}, {2, 1}});
  CHECK(report.anaphors.locus == std::map<int, int>{{1, 8}, {3, 1}});
  CHECK(report.anaphors.errors == 0);
  CHECK(report.anaphors.false_positives == 1);

  CHECK(report.ellipses.expressions == 8);
  CHECK(report.ellipses.gold_annotated == 8);
  CHECK(report.ellipses.distance == std::map<int, int>{{1, 5}, {2, 3}});
  CHECK(report.ellipses.locus == std::map<int, int>{{1, 5}, {2, 1}, {3, 2}});
  CHECK(report.ellipses.errors == 0);
  CHECK(report.ellipses.false_positives == 0);
}

TEST_CASE("outcomes partition the gold-annotated expressions") {
  std::mt19937 rng(59);
  for (int n = 0; n < 200; ++n) {
    Document doc = RandomDocument(rng, n);
    AnalysisTrace trace = Analyze(doc);
    DocumentEvaluation eval = EvaluateDocument(doc, trace);

    int gold = 0;
    for (const Utterance &u : doc.utterances) {
      for (const Expression &x : u.expressions) {
        if (x.anaphoric() && x.gold) ++gold;
      }
    }
    CHECK(static_cast<int>(eval.items.size()) == gold);

    StatsReport report = SummarizeDocument(doc, trace, eval);
    for (const KindStats *ks : {&report.anaphors, &report.ellipses}) {
      int locus_total = 0;
      for (const auto &[category, count] : ks->locus) locus_total += count;
      CHECK(locus_total + ks->errors == ks->gold_annotated);
      int distance_total = 0;
      for (const auto &[bucket, count] : ks->distance) distance_total += count;
      CHECK(distance_total == ks->gold_annotated);
      CHECK(ks->false_positives <= locus_total);
    }
    CHECK(report.anaphors.gold_annotated + report.ellipses.gold_annotated ==
          gold);
  }
}

TEST_CASE("report merging is well-behaved") {
  Document doc = LoadSample();
  AnalysisTrace trace = Analyze(doc);
  StatsReport report = SummarizeDocument(doc, trace, EvaluateDocument(doc, trace));

  SUBCASE("empty report is the identity") {
    StatsReport merged = MergeReports(report, StatsReport{});
    CHECK(StatsToText(merged) == StatsToText(report));
    merged = MergeReports(StatsReport{}, report);
    CHECK(StatsToText(merged) == StatsToText(report));
  }

  SUBCASE("self-merge doubles the counts") {
    StatsReport merged = MergeReports(report, report);
    CHECK(merged.documents == 2);
    CHECK(merged.utterances == 26);
    CHECK(merged.words == 318);
    CHECK(merged.anaphors.gold_annotated == 18);
    CHECK(merged.anaphors.locus == std::map<int, int>{{1, 16}, {3, 2}});
    CHECK(merged.max_depth == 5);  // maximum, not sum
  }

  SUBCASE("associativity and commutativity") {
    std::mt19937 rng(61);
    Document d2 = RandomDocument(rng, 0);
    Document d3 = RandomDocument(rng, 1);
    AnalysisTrace t2 = Analyze(d2);
    AnalysisTrace t3 = Analyze(d3);
    StatsReport r2 = SummarizeDocument(d2, t2, EvaluateDocument(d2, t2));
    StatsReport r3 = SummarizeDocument(d3, t3, EvaluateDocument(d3, t3));

    StatsReport left = MergeReports(MergeReports(report, r2), r3);
    StatsReport right = MergeReports(report, MergeReports(r2, r3));
    CHECK(StatsToText(left) == StatsToText(right));
    StatsReport swapped = MergeReports(r3, MergeReports(r2, report));
    CHECK(StatsToText(swapped) == StatsToText(left));
  }
}

TEST_CASE("stats text layout") {
  Document doc = LoadSample();
  AnalysisTrace trace = Analyze(doc);
  StatsReport report = SummarizeDocument(doc, trace, EvaluateDocument(doc, trace));
  const std::string text = StatsToText(report);
  auto sections = ParseSections(text);

  auto &counts = sections.at("Counts");
  CHECK(counts.at("documents") == "1");
  CHECK(counts.at("utterances") == "13");
  CHECK(counts.at("words") == "159");
  CHECK(counts.at("anaphors") == "9");
  CHECK(counts.at("ellipses") == "8");
  CHECK(counts.at("max depth") == "5");
  CHECK(counts.count("unannotated") == 0);

  auto &adist = sections.at("Antecedent distance (anaphors, 9 gold)");
  CHECK(adist.at("U_i-1") == "8");
  CHECK(adist.at("U_i-2") == "1");
  CHECK(adist.at("U_i-5") == "0");
  CHECK(adist.at("U_i-21+") == "0");
  CHECK(adist.size() == kDistanceBuckets);

  auto &apos = sections.at("Antecedent position (anaphors)");
  CHECK(apos.at("Cf(s, U_i-1)") == "8");
  CHECK(apos.at("Cf(s-1, end)") == "1");
  CHECK(apos.at("Cp(s-1, end)") == "0");
  CHECK(apos.at("errors") == "0");
  CHECK(apos.at("false positives") == "(1)");

  auto &edist = sections.at("Antecedent distance (ellipses, 8 gold)");
  CHECK(edist.at("U_i-1") == "5");
  CHECK(edist.at("U_i-2") == "3");

  auto &epos = sections.at("Antecedent position (ellipses)");
  CHECK(epos.at("U_i") == "0");
  CHECK(epos.at("Cf(s, U_i-1)") == "5");
  CHECK(epos.at("Cp(s-1, end)") == "1");
  CHECK(epos.at("Cf(s-1, end)") == "2");
  CHECK(epos.at("false positives") == "(0)");
}

TEST_CASE("stats text for an empty report") {
  const std::string text = StatsToText(StatsReport{});
  auto sections = ParseSections(text);
  CHECK(sections.at("Counts").at("documents") == "0");
  CHECK(sections.at("Antecedent distance (anaphors, 0 gold)").count("n/a") ==
        1);
  CHECK(sections.at("Antecedent position (ellipses)").count("n/a") == 1);
}

TEST_CASE("stats json layout") {
  Document doc = LoadSample();
  AnalysisTrace trace = Analyze(doc);
  StatsReport report = SummarizeDocument(doc, trace, EvaluateDocument(doc, trace));
  nlohmann::ordered_json j = StatsToJson(report);

  CHECK(j["documents"] == 1);
  CHECK(j["utterances"] == 13);
  CHECK(j["words"] == 159);
  CHECK(j["unannotated"] == 0);
  CHECK(j["max_depth"] == 5);
  CHECK(j["anaphors"]["expressions"] == 9);
  CHECK(j["anaphors"]["gold_annotated"] == 9);
  CHECK(j["anaphors"]["distance"]["U_i-1"] == 8);
  CHECK(j["anaphors"]["distance"]["U_i-2"] == 1);
  CHECK(j["anaphors"]["locus"]["Cf(s, U_i-1)"] == 8);
  CHECK(j["anaphors"]["locus"]["Cf(s-1, end)"] == 1);
  CHECK(j["anaphors"]["errors"] == 0);
  CHECK(j["anaphors"]["false_positives"] == 1);
  CHECK(j["ellipses"]["locus"]["Cp(s-1, end)"] == 1);
  CHECK(j["ellipses"]["false_positives"] == 0);
}

TEST_CASE("unannotated anaphors are counted, not classified") {
  Document doc;
  doc.id = "partial";
  doc.entities = {{"a", "A"}};
  Utterance u1;
  u1.index = 1;
  u1.cf = {{"a", "A", false}};
  Utterance u2;
  u2.index = 2;
  u2.cf = {{"a", "A", false}};
  Expression x;
  x.id = "2.1";
  x.kind = ExpressionKind::kPronoun;
  x.candidates = {"a"};  // no gold annotation
  u2.expressions = {x};
  doc.utterances = {u1, u2};

  AnalysisTrace trace = Analyze(doc);
  DocumentEvaluation eval = EvaluateDocument(doc, trace);
  CHECK(eval.items.empty());
  CHECK(eval.unannotated == 1);

  StatsReport report = SummarizeDocument(doc, trace, eval);
  CHECK(report.unannotated == 1);
  CHECK(report.anaphors.expressions == 1);
  CHECK(report.anaphors.gold_annotated == 0);
  const std::string text = StatsToText(report);
  CHECK(ParseSections(text).at("Counts").at("unannotated") == "1");
}

}  // namespace
}  // namespace cseg
