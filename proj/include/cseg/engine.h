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

#ifndef CSEG_ENGINE_H_
#define CSEG_ENGINE_H_

#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "cseg/centering.h"
#include "cseg/corpus.h"
#include "cseg/resolver.h"
#include "cseg/segment_registry.h"

namespace cseg {

// Which branch of the segmentation step handled an utterance. The block
// label is what trace tables print. Exactly one block applies per step:
// kB1 when some resolved entity is a directly realized preferred center of
// the previous utterance; otherwise, if no resolved entity occurs in the
// previous center list at all, a scan over lower levels picks kB2a (resume
// at a lower segment whose end's preferred center matches), kB2b (sibling
// segment, when the enclosing segment's end merely contains a resolved
// entity), or kB2c (embed, scan exhausted); otherwise kB3 (embed).
enum class Block { kInit, kB1, kB2a, kB2b, kB2c, kB3 };

std::string_view BlockLabel(Block block);

// Recorded when a continuation dropped below the level it started at.
struct LiftEffect {
  int from_level = 0;
  int to_level = 0;

  bool operator==(const LiftEffect &) const = default;
};

// Everything the step for one utterance decided.
struct StepRecord {
  int utterance = 0;
  Block block = Block::kInit;
  std::optional<LiftEffect> lift;
  CenteringRecord centering;
  std::vector<ResolutionResult> resolutions;
  std::vector<Segment> open_segments;  // post-step, outermost first
};

// Full analysis of one document.
struct AnalysisTrace {
  std::string document_id;
  std::vector<StepRecord> steps;
  std::vector<Segment> segments;  // final archive, creation order
  int max_level = 0;
};

// Registry plus the trace built so far. The previous step's centering record
// is part of the machine state (transitions compare adjacent records).
struct AnalysisState {
  SegmentRegistry registry;
  AnalysisTrace trace;
};

// Opens the outermost segment on the document's first utterance and records
// the initial step. Precondition: the first utterance has index 1 and a
// non-empty center list; throws std::invalid_argument otherwise.
AnalysisState Initialize(const Document &doc);

// Continuation target for a block-1 step at utterance i, level s. Walks down
// one level per hop while the preceding utterances show a chain of distinct
// preferred centers across adjacent levels; each hop checks that those
// utterances were actually assigned to the levels the chain reads them at.
// Pure. Performs at most s-2 hops, so the result is s or a level in [2, s).
int LiftLevel(const SegmentRegistry &state, int s, int i);

// Applies one segmentation step for utterance u, given the entities resolved
// against the pre-step state. Appends to the trace and returns the record.
const StepRecord &Step(AnalysisState &state, const Utterance &u,
                       const ResolvedSet &resolved);

// Copies the final archive and maximum level into the trace.
void Finalize(AnalysisState &state);

// Pluggable resolution, for testing the step loop in isolation.
using ResolverFn =
    std::function<ResolvedSet(const SegmentRegistry &, const Utterance &)>;

// Runs initialization, per-utterance steps, and finalization over a document
// that already passed validation.
AnalysisTrace Run(const Document &doc, const ResolverFn &resolver);

// Run with the standard resolver.
AnalysisTrace Analyze(const Document &doc);

// The center lists an antecedent search would consult next, from the
// perspective of the first unprocessed utterance: the previous utterance's
// list, the enclosing segment's end, and the preferred-center chain of lower
// open segments (deepest first).
struct SnapshotEntry {
  int level = 0;
  int utterance = 0;

  bool operator==(const SnapshotEntry &) const = default;
};

struct ReachableSnapshot {
  std::optional<SnapshotEntry> prev;     // clause 1
  std::optional<SnapshotEntry> seg_end;  // clause 2
  std::vector<SnapshotEntry> cp_chain;   // clause 3, deepest first
};

ReachableSnapshot SnapshotReachable(const SegmentRegistry &state);

}  // namespace cseg

#endif  // CSEG_ENGINE_H_
