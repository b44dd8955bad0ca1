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

#ifndef CSEG_SEGMENT_REGISTRY_H_
#define CSEG_SEGMENT_REGISTRY_H_

#include <string_view>
#include <vector>

#include "cseg/corpus.h"

namespace cseg {

// Lifecycle of a discourse segment. Closed and absorbed segments are kept in
// the archive but are never consulted again for antecedent search.
enum class SegmentStatus {
  kOpen,
  kClosed,    // superseded by a later segment at the same or a higher level
  kAbsorbed,  // merged into a lower-level segment by a lift
};

std::string_view SegmentStatusName(SegmentStatus status);

struct Segment {
  int level = 0;  // 1 is the outermost level
  int beg = 0;    // first utterance of the segment
  int end = 0;    // last utterance assigned while the segment was open
  SegmentStatus status = SegmentStatus::kOpen;

  bool operator==(const Segment &) const = default;
};

// Hierarchy of discourse segments under construction. The open segments form
// a stack: exactly one per level 1..current_level(), each embedded segment
// beginning after its parent's current end. Mutations model the segmentation
// blocks; each one re-checks the stack invariants and throws InternalError on
// violation.
class SegmentRegistry {
 public:
  explicit SegmentRegistry(const Document &doc);

  // True until Init has opened the outermost segment.
  bool empty() const { return open_.empty(); }

  // Number of open levels; the innermost open segment is at current_level().
  int current_level() const { return static_cast<int>(open_.size()); }

  // Most recently assigned utterance. Equals the end of every step's target
  // segment, so before processing utterance i this is i-1.
  int last_utterance() const { return last_; }

  // Open segment at a level in 1..current_level().
  const Segment &open_segment(int level) const;

  // End utterance of the open segment at the level.
  int segment_end(int level) const { return open_segment(level).end; }

  // Every segment ever opened, in creation order, with current statuses.
  const std::vector<Segment> &archive() const { return archive_; }

  // Level the utterance was assigned to, or 0 if not processed yet.
  int level_of(int utterance) const;

  // Center list of an already processed utterance.
  const std::vector<CfEntry> &cf(int utterance) const;

  const Document &document() const { return *doc_; }

  // Opens the outermost segment at utterance i. Precondition: empty().
  void Init(int i);

  // Continues at to_level <= current_level(): segments above it are absorbed
  // (their end frozen at i-1), the target segment extends to i.
  void ApplyLift(int to_level, int i);

  // Returns to level < current_level(): segments above it are closed with
  // their ends unchanged, the target segment extends to i.
  void ContinueAt(int level, int i);

  // Closes the innermost segment and opens a sibling at the same level
  // starting at i.
  void OpenParallel(int i);

  // Opens an embedded segment at current_level()+1 starting at i.
  void OpenEmbedded(int i);

 private:
  Segment &open_mutable(int level);
  void AssignLevel(int utterance, int level);
  void CheckInvariants() const;

  const Document *doc_;
  std::vector<Segment> archive_;
  std::vector<int> open_;      // open_[l-1]: archive index of level l
  std::vector<int> level_of_;  // utterance -> level, 0 = unassigned
  int last_ = 0;
};

}  // namespace cseg

#endif  // CSEG_SEGMENT_REGISTRY_H_
