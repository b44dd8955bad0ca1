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

#ifndef CSEG_TESTS_GENERATORS_H_
#define CSEG_TESTS_GENERATORS_H_

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "cseg/corpus.h"

namespace cseg {

// Random documents that satisfy every validation rule: up to five entities,
// up to eight utterances, randomly mediated center entries, and a mix of
// anaphoric, elliptical, and non-anaphoric expressions with optional gold
// annotations. Deterministic per seed.
inline Document RandomDocument(std::mt19937 &rng, int ordinal = 0) {
  auto pick = [&rng](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };

  Document doc;
  doc.id = "rand" + std::to_string(ordinal);
  const int n_entities = pick(1, 5);
  for (int k = 1; k <= n_entities; ++k) {
    doc.entities.push_back(
        {"e" + std::to_string(k), "E" + std::to_string(k)});
  }

  const int n_utterances = pick(1, 8);
  for (int i = 1; i <= n_utterances; ++i) {
    Utterance u;
    u.index = i;
    u.words = pick(1, 12);

    std::vector<int> order(n_entities);
    for (int k = 0; k < n_entities; ++k) order[k] = k;
    std::shuffle(order.begin(), order.end(), rng);
    const int cf_size = pick(1, n_entities);
    for (int r = 0; r < cf_size; ++r) {
      const Entity &e = doc.entities[order[r]];
      CfEntry entry;
      entry.entity = e.id;
      entry.mediated = pick(0, 3) == 0;
      if (!entry.mediated) entry.surface = e.surface;
      u.cf.push_back(std::move(entry));
    }

    const int n_expressions = pick(0, 2);
    for (int x = 1; x <= n_expressions; ++x) {
      Expression expr;
      expr.id = std::to_string(i) + "." + std::to_string(x);
      switch (pick(0, 3)) {
        case 0:
          expr.kind = ExpressionKind::kPronoun;
          break;
        case 1:
          expr.kind = ExpressionKind::kNominal;
          break;
        case 2:
          expr.kind = ExpressionKind::kEllipsis;
          break;
        default:
          expr.kind = ExpressionKind::kNone;
          break;
      }
      expr.surface = "x" + expr.id;
      if (expr.anaphoric()) {
        std::vector<int> cand_order(n_entities);
        for (int k = 0; k < n_entities; ++k) cand_order[k] = k;
        std::shuffle(cand_order.begin(), cand_order.end(), rng);
        const int n_candidates = pick(1, std::min(2, n_entities));
        for (int c = 0; c < n_candidates; ++c) {
          expr.candidates.push_back(doc.entities[cand_order[c]].id);
        }
        if (pick(0, 9) < 7) {
          GoldAnnotation gold;
          gold.entity = expr.candidates[pick(
              0, static_cast<int>(expr.candidates.size()) - 1)];
          gold.utterance = pick(1, i);
          expr.gold = gold;
        }
      }
      u.expressions.push_back(std::move(expr));
    }
    doc.utterances.push_back(std::move(u));
  }
  return doc;
}

}  // namespace cseg

#endif  // CSEG_TESTS_GENERATORS_H_
