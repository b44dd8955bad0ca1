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

#include "cseg/engine.h"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "cseg/errors.h"

namespace cseg {
namespace {

// A resolved entity counts as string-equal to a stored center entry only if
// the entry is a direct realization; mediated entries match membership tests
// but never string equality.
bool MatchesDirect(const CfEntry &entry, const EntitySet &resolved) {
  return !entry.mediated && resolved.count(entry.entity) > 0;
}

bool MatchesAny(std::span<const CfEntry> cf, const EntitySet &resolved) {
  for (const CfEntry &entry : cf) {
    if (resolved.count(entry.entity)) return true;
  }
  return false;
}

std::vector<Segment> OpenSegments(const SegmentRegistry &registry) {
  std::vector<Segment> out;
  out.reserve(registry.current_level());
  for (int l = 1; l <= registry.current_level(); ++l) {
    out.push_back(registry.open_segment(l));
  }
  return out;
}

}  // namespace

std::string_view BlockLabel(Block block) {
  switch (block) {
    case Block::kInit:
      return "init";
    case Block::kB1:
      return "1";
    case Block::kB2a:
      return "2a";
    case Block::kB2b:
      return "2b";
    case Block::kB2c:
      return "2c";
    case Block::kB3:
      return "3";
  }
  return "init";
}

AnalysisState Initialize(const Document &doc) {
  if (doc.utterances.empty()) {
    throw std::invalid_argument("cannot analyze a document with no utterances");
  }
  const Utterance &first = doc.utterances.front();
  if (first.index != 1) {
    throw std::invalid_argument("analysis must start at utterance 1");
  }
  if (first.cf.empty()) {
    throw std::invalid_argument("utterance 1 has an empty center list");
  }
  AnalysisState state{SegmentRegistry(doc), {}};
  state.registry.Init(1);
  state.trace.document_id = doc.id;

  StepRecord step;
  step.utterance = 1;
  step.block = Block::kInit;
  step.centering = {1, std::nullopt, PreferredCenter(first.cf),
                    Transition::kNone};
  step.open_segments = OpenSegments(state.registry);
  state.trace.steps.push_back(std::move(step));
  return state;
}

int LiftLevel(const SegmentRegistry &state, int s, int i) {
  while (s > 2 && i > 3) {
    // The chain reads Cp(s, U_{i-1}), Cp(s-1, U_{i-2}), Cp(s-2, U_{i-3});
    // each is defined only if the utterance was assigned to that level.
    if (state.level_of(i - 1) != s || state.level_of(i - 2) != s - 1 ||
        state.level_of(i - 3) != s - 2) {
      break;
    }
    const EntityId &cp1 = PreferredCenter(state.cf(i - 1));
    const EntityId &cp2 = PreferredCenter(state.cf(i - 2));
    const EntityId &cp3 = PreferredCenter(state.cf(i - 3));
    if (cp1 == cp2 || cp2 == cp3) break;
    if (!CfContains(state.cf(i - 2), cp1)) break;
    --s;
    --i;
  }
  return s;
}

const StepRecord &Step(AnalysisState &state, const Utterance &u,
                       const ResolvedSet &resolved) {
  SegmentRegistry &registry = state.registry;
  CSEG_CHECK(!registry.empty(), "Step before Initialize");
  CSEG_CHECK(!state.trace.steps.empty(), "trace missing the initial step");
  const int i = u.index;
  CSEG_CHECK(i == registry.last_utterance() + 1,
             "utterances must be processed in order");
  CSEG_CHECK(!u.cf.empty(), "utterance has an empty center list");
  const int s = registry.current_level();
  const auto &prev_cf = registry.cf(i - 1);

  StepRecord step;
  step.utterance = i;
  step.resolutions = resolved.results;

  // Centering is evaluated against the previous utterance's list before the
  // registry moves.
  step.centering.utterance = i;
  step.centering.cb = ComputeBackwardCenter(prev_cf, resolved.entities);
  step.centering.cp = PreferredCenter(u.cf);
  step.centering.transition =
      ClassifyTransition(step.centering.cb,
                         state.trace.steps.back().centering.cb,
                         step.centering.cp);

  if (MatchesDirect(prev_cf.front(), resolved.entities)) {
    // Block 1: the discourse keeps its theme; possibly lift the continuation
    // into an enclosing segment.
    const int target = LiftLevel(registry, s, i);
    if (target < s) step.lift = LiftEffect{s, target};
    registry.ApplyLift(target, i);
    step.block = Block::kB1;
  } else if (!MatchesAny(prev_cf, resolved.entities)) {
    // Nothing resolved into the current segment's last list: scan outward.
    step.block = Block::kB2c;
    for (int k = s - 1; k >= 1; --k) {
      const auto &end_cf = registry.cf(registry.segment_end(k));
      CSEG_CHECK(!end_cf.empty(), "empty center list in the registry");
      if (MatchesDirect(end_cf.front(), resolved.entities)) {
        registry.ContinueAt(k, i);
        step.block = Block::kB2a;
        break;
      }
      if (k == s - 1 && MatchesAny(end_cf, resolved.entities)) {
        registry.OpenParallel(i);
        step.block = Block::kB2b;
        break;
      }
    }
    if (step.block == Block::kB2c) registry.OpenEmbedded(i);
  } else {
    // Some resolved entity occurs in the previous list, but not as its
    // directly realized preferred center: open an embedded segment.
    registry.OpenEmbedded(i);
    step.block = Block::kB3;
  }

  step.open_segments = OpenSegments(registry);
  state.trace.steps.push_back(std::move(step));
  return state.trace.steps.back();
}

void Finalize(AnalysisState &state) {
  state.trace.segments = state.registry.archive();
  int max_level = 0;
  for (const Segment &seg : state.trace.segments) {
    max_level = std::max(max_level, seg.level);
  }
  state.trace.max_level = max_level;
}

AnalysisTrace Run(const Document &doc, const ResolverFn &resolver) {
  AnalysisState state = Initialize(doc);
  for (size_t n = 1; n < doc.utterances.size(); ++n) {
    const Utterance &u = doc.utterances[n];
    Step(state, u, resolver(state.registry, u));
  }
  Finalize(state);
  return std::move(state.trace);
}

AnalysisTrace Analyze(const Document &doc) {
  return Run(doc, [](const SegmentRegistry &registry, const Utterance &u) {
    return ResolveUtterance(registry, u);
  });
}

ReachableSnapshot SnapshotReachable(const SegmentRegistry &state) {
  ReachableSnapshot snapshot;
  if (state.empty()) return snapshot;
  const int s = state.current_level();
  snapshot.prev = SnapshotEntry{s, state.last_utterance()};
  if (s >= 2) {
    snapshot.seg_end = SnapshotEntry{s - 1, state.segment_end(s - 1)};
  }
  for (int v = s - 2; v >= 1; --v) {
    snapshot.cp_chain.push_back(SnapshotEntry{v, state.segment_end(v)});
  }
  return snapshot;
}

}  // namespace cseg
