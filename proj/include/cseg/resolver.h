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

#ifndef CSEG_RESOLVER_H_
#define CSEG_RESOLVER_H_

#include <optional>
#include <string_view>
#include <vector>

#include "cseg/centering.h"
#include "cseg/corpus.h"
#include "cseg/segment_registry.h"

namespace cseg {

// Where an antecedent was found. The clauses are ordered by preference:
// the previous utterance's center list, then the center list at the end of
// the enclosing segment, then preferred centers at the ends of lower open
// segments (deepest level first). kIntraUtterance marks a gold-annotated
// anaphor whose antecedent lies in the same utterance; such expressions are
// excluded from search. kUnreachable marks a failed search.
enum class LocusClause {
  kPrevCf,
  kPrevSegEndCf,
  kSegEndCp,
  kIntraUtterance,
  kUnreachable,
};

std::string_view LocusClauseName(LocusClause clause);

struct Locus {
  LocusClause clause = LocusClause::kUnreachable;
  std::optional<int> level;
  std::optional<int> utterance;
  std::optional<int> rank;  // 1-based position in the center list

  bool operator==(const Locus &) const = default;
};

struct ResolutionResult {
  std::string expression;  // Expression::id
  std::optional<EntityId> entity;
  Locus locus;

  bool operator==(const ResolutionResult &) const = default;
};

// Entities resolved for one utterance, plus the per-expression results.
// `entities` feeds the segmentation step; intra-utterance and unresolved
// expressions contribute nothing to it.
struct ResolvedSet {
  EntitySet entities;
  std::vector<ResolutionResult> results;
};

// True if ante is one of the entities the expression is compatible with.
bool IsAnaphorFor(const Expression &x, const EntityId &ante);

// Tests whether ante is reachable from utterance i at level s, given the
// pre-step registry (so utterance i-1 is the innermost segment's end).
// Returns the most preferred locus, or an unreachable locus. Only open
// segments are consulted; clause 3 matches preferred centers that are
// directly realized, never mediated ones, and picks the deepest such level
// below s-1.
Locus IsReachable(const SegmentRegistry &state, const EntityId &ante, int s,
                  int i);

// Resolves one expression against the pre-step registry: scans the candidate
// loci in clause order and each center list in rank order, returning the
// first entity the expression is an anaphor for. entity is set iff the locus
// is not unreachable.
ResolutionResult Resolve(const SegmentRegistry &state, const Expression &x,
                         int s, int i);

// Resolves every anaphoric expression of the utterance against the pre-step
// registry. Gold-annotated intra-utterance anaphors are reported with an
// intra-utterance locus and skipped by the search.
ResolvedSet ResolveUtterance(const SegmentRegistry &state, const Utterance &u);

}  // namespace cseg

#endif  // CSEG_RESOLVER_H_
