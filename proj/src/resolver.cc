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

#include "cseg/resolver.h"

#include <algorithm>

#include "cseg/errors.h"

namespace cseg {
namespace {

// Candidate-locus scan shared by IsReachable and Resolve. Invokes fn with
// each reachable center entry (locus, entry) in preference order until fn
// returns true. The rank-1 restriction of clause 3 is applied here, so fn
// only ever sees admissible entries.
template <typename Fn>
void ScanLoci(const SegmentRegistry &state, int s, int i, Fn &&fn) {
  // Clause 1: the previous utterance's center list.
  if (i >= 2 && state.level_of(i - 1) != 0) {
    const auto &cf = state.cf(i - 1);
    for (int r = 0; r < static_cast<int>(cf.size()); ++r) {
      Locus locus{LocusClause::kPrevCf, s, i - 1, r + 1};
      if (fn(locus, cf[r])) return;
    }
  }
  // Clause 2: the center list at the end of the enclosing segment.
  if (s >= 2) {
    const int end = state.segment_end(s - 1);
    const auto &cf = state.cf(end);
    for (int r = 0; r < static_cast<int>(cf.size()); ++r) {
      Locus locus{LocusClause::kPrevSegEndCf, s - 1, end, r + 1};
      if (fn(locus, cf[r])) return;
    }
  }
  // Clause 3: directly realized preferred centers at the ends of lower open
  // segments, deepest first.
  for (int v = s - 2; v >= 1; --v) {
    const int end = state.segment_end(v);
    const auto &cf = state.cf(end);
    CSEG_CHECK(!cf.empty(), "empty center list in the registry");
    if (cf.front().mediated) continue;
    Locus locus{LocusClause::kSegEndCp, v, end, 1};
    if (fn(locus, cf.front())) return;
  }
}

}  // namespace

std::string_view LocusClauseName(LocusClause clause) {
  switch (clause) {
    case LocusClause::kPrevCf:
      return "prev_cf";
    case LocusClause::kPrevSegEndCf:
      return "prev_seg_end_cf";
    case LocusClause::kSegEndCp:
      return "seg_end_cp";
    case LocusClause::kIntraUtterance:
      return "intra_utterance";
    case LocusClause::kUnreachable:
      return "unreachable";
  }
  return "unreachable";
}

bool IsAnaphorFor(const Expression &x, const EntityId &ante) {
  return std::find(x.candidates.begin(), x.candidates.end(), ante) !=
         x.candidates.end();
}

Locus IsReachable(const SegmentRegistry &state, const EntityId &ante, int s,
                  int i) {
  Locus found;
  ScanLoci(state, s, i, [&](const Locus &locus, const CfEntry &entry) {
    if (entry.entity != ante) return false;
    found = locus;
    return true;
  });
  return found;
}

ResolutionResult Resolve(const SegmentRegistry &state, const Expression &x,
                         int s, int i) {
  ResolutionResult result;
  result.expression = x.id;
  ScanLoci(state, s, i, [&](const Locus &locus, const CfEntry &entry) {
    if (!IsAnaphorFor(x, entry.entity)) return false;
    result.entity = entry.entity;
    result.locus = locus;
    return true;
  });
  return result;
}

ResolvedSet ResolveUtterance(const SegmentRegistry &state,
                             const Utterance &u) {
  ResolvedSet out;
  const int s = state.current_level();
  for (const Expression &x : u.expressions) {
    if (!x.anaphoric()) continue;
    if (x.gold && x.gold->utterance == u.index) {
      ResolutionResult intra;
      intra.expression = x.id;
      intra.entity = x.gold->entity;
      intra.locus = {LocusClause::kIntraUtterance, std::nullopt, u.index,
                     std::nullopt};
      out.results.push_back(std::move(intra));
      continue;
    }
    ResolutionResult r = Resolve(state, x, s, u.index);
    if (r.entity) out.entities.insert(*r.entity);
    out.results.push_back(std::move(r));
  }
  return out;
}

}  // namespace cseg
