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

#include "cseg/centering.h"

#include <random>

#include "doctest.h"

#include "cseg/errors.h"
#include "generators.h"
#include "test_util.h"

namespace cseg {
namespace {

TEST_CASE("preferred center is the rank-1 entity") {
  Document doc = LoadSample();
  CHECK(PreferredCenter(doc.utterance(1).cf) == "hl1260");
  CHECK(PreferredCenter(doc.utterance(8).cf) == "inhaltsverzeichnis");
  CHECK_THROWS_AS(PreferredCenter(std::span<const CfEntry>{}), InternalError);
}

TEST_CASE("backward center picks the highest-ranked resolved entity") {
  Document doc = LoadSample();

  // Resolution realized the previous preferred center.
  CHECK(ComputeBackwardCenter(doc.utterance(1).cf, {"hl1260"}) == "hl1260");

  // Nothing resolved: undefined.
  CHECK(ComputeBackwardCenter(doc.utterance(3).cf, {}) == std::nullopt);

  // Mediated entries count by rank: the mediated rank-4 entry of the ninth
  // utterance beats nothing, but loses to no higher-ranked resolved entry.
  CHECK(ComputeBackwardCenter(doc.utterance(9).cf, {"hl1260",
                                                    "auto-continue-funktion"})
            .value() == "hl1260");
  CHECK(ComputeBackwardCenter(doc.utterance(9).cf, {"kapitel", "hl1260"})
            .value() == "kapitel");

  // No previous list accessible.
  CHECK(ComputeBackwardCenter({}, {"hl1260"}) == std::nullopt);
}

TEST_CASE("backward center is the first match in rank order") {
  std::mt19937 rng(23);
  for (int n = 0; n < 100; ++n) {
    Document doc = RandomDocument(rng, n);
    const Utterance &u = doc.utterances.front();
    EntitySet resolved;
    for (const Entity &e : doc.entities) {
      if (rng() % 2) resolved.insert(e.id);
    }
    auto cb = ComputeBackwardCenter(u.cf, resolved);
    bool seen = false;
    for (const CfEntry &entry : u.cf) {
      if (resolved.count(entry.entity)) {
        if (!seen) {
          REQUIRE(cb.has_value());
          CHECK(*cb == entry.entity);
        }
        seen = true;
      }
    }
    if (!seen) CHECK(cb == std::nullopt);
  }
}

TEST_CASE("transition classification covers the whole table") {
  const EntityId a = "a", b = "b", c = "c";

  // Backward center kept (or previous one undefined).
  CHECK(ClassifyTransition(a, a, a) == Transition::kContinue);
  CHECK(ClassifyTransition(a, a, b) == Transition::kRetain);
  CHECK(ClassifyTransition(a, std::nullopt, a) == Transition::kContinue);
  CHECK(ClassifyTransition(a, std::nullopt, b) == Transition::kRetain);

  // Backward center moved.
  CHECK(ClassifyTransition(a, b, a) == Transition::kSmoothShift);
  CHECK(ClassifyTransition(a, b, c) == Transition::kRoughShift);

  // No backward center at all.
  CHECK(ClassifyTransition(std::nullopt, a, a) == Transition::kNone);
  CHECK(ClassifyTransition(std::nullopt, std::nullopt, a) ==
        Transition::kNone);
}

TEST_CASE("transition labels") {
  CHECK(TransitionLabel(Transition::kContinue) == "C");
  CHECK(TransitionLabel(Transition::kRetain) == "R");
  CHECK(TransitionLabel(Transition::kSmoothShift) == "SS");
  CHECK(TransitionLabel(Transition::kRoughShift) == "RS");
  CHECK(TransitionLabel(Transition::kNone) == "---");
}

TEST_CASE("thematic progression patterns") {
  Document doc = LoadSample();

  // Same preferred center across the first three utterances.
  CHECK(ClassifyTp(doc.utterance(1).cf, doc.utterance(2).cf) ==
        TpPattern::kConstantTheme);
  CHECK(ClassifyTp(doc.utterance(2).cf, doc.utterance(3).cf) ==
        TpPattern::kConstantTheme);

  // The new preferred center was a non-preferred element before.
  CHECK(ClassifyTp(doc.utterance(7).cf, doc.utterance(8).cf) ==
        TpPattern::kLinearThematization);

  // The new preferred center is absent from the previous list.
  CHECK(ClassifyTp(doc.utterance(3).cf, doc.utterance(4).cf) ==
        TpPattern::kOther);
}

TEST_CASE("thematic progression is constant against itself") {
  std::mt19937 rng(29);
  for (int n = 0; n < 50; ++n) {
    Document doc = RandomDocument(rng, n);
    for (const Utterance &u : doc.utterances) {
      CHECK(ClassifyTp(u.cf, u.cf) == TpPattern::kConstantTheme);
    }
  }
}

TEST_CASE("center list membership ignores mediation") {
  Document doc = LoadSample();
  CHECK(CfContains(doc.utterance(5).cf, "hl1260"));  // mediated entry
  CHECK(CfContains(doc.utterance(5).cf, "handbuch"));
  CHECK_FALSE(CfContains(doc.utterance(5).cf, "seite"));
}

}  // namespace
}  // namespace cseg
