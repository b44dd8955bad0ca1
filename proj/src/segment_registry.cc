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

#include "cseg/segment_registry.h"

#include <algorithm>

#include "cseg/errors.h"

namespace cseg {

std::string_view SegmentStatusName(SegmentStatus status) {
  switch (status) {
    case SegmentStatus::kOpen:
      return "open";
    case SegmentStatus::kClosed:
      return "closed";
    case SegmentStatus::kAbsorbed:
      return "absorbed";
  }
  return "open";
}

SegmentRegistry::SegmentRegistry(const Document &doc) : doc_(&doc) {
  level_of_.assign(doc.utterances.size() + 1, 0);
}

const Segment &SegmentRegistry::open_segment(int level) const {
  CSEG_CHECK(level >= 1 && level <= current_level(),
             "no open segment at level " + std::to_string(level));
  return archive_[open_[level - 1]];
}

Segment &SegmentRegistry::open_mutable(int level) {
  return const_cast<Segment &>(open_segment(level));
}

int SegmentRegistry::level_of(int utterance) const {
  if (utterance < 1 || utterance >= static_cast<int>(level_of_.size())) {
    return 0;
  }
  return level_of_[utterance];
}

const std::vector<CfEntry> &SegmentRegistry::cf(int utterance) const {
  return doc_->utterance(utterance).cf;
}

void SegmentRegistry::AssignLevel(int utterance, int level) {
  CSEG_CHECK(utterance >= 1 && utterance < static_cast<int>(level_of_.size()),
             "utterance out of range: " + std::to_string(utterance));
  CSEG_CHECK(level_of_[utterance] == 0, "utterance processed twice");
  level_of_[utterance] = level;
  last_ = utterance;
}

void SegmentRegistry::Init(int i) {
  CSEG_CHECK(empty(), "Init on a non-empty registry");
  archive_.push_back({1, i, i, SegmentStatus::kOpen});
  open_.push_back(0);
  AssignLevel(i, 1);
  CheckInvariants();
}

void SegmentRegistry::ApplyLift(int to_level, int i) {
  CSEG_CHECK(to_level >= 1 && to_level <= current_level(),
             "lift target out of range");
  // Absorbed segments keep the utterances they covered: the end freezes at
  // the last utterance processed while they were open.
  for (int l = current_level(); l > to_level; --l) {
    Segment &seg = open_mutable(l);
    seg.status = SegmentStatus::kAbsorbed;
    seg.end = std::max(seg.end, i - 1);
    open_.pop_back();
  }
  open_mutable(to_level).end = i;
  AssignLevel(i, to_level);
  CheckInvariants();
}

void SegmentRegistry::ContinueAt(int level, int i) {
  CSEG_CHECK(level >= 1 && level < current_level(),
             "continuation target is not a lower open level");
  for (int l = current_level(); l > level; --l) {
    open_mutable(l).status = SegmentStatus::kClosed;
    open_.pop_back();
  }
  open_mutable(level).end = i;
  AssignLevel(i, level);
  CheckInvariants();
}

void SegmentRegistry::OpenParallel(int i) {
  CSEG_CHECK(!empty(), "OpenParallel on an empty registry");
  const int level = current_level();
  open_mutable(level).status = SegmentStatus::kClosed;
  open_[level - 1] = static_cast<int>(archive_.size());
  archive_.push_back({level, i, i, SegmentStatus::kOpen});
  AssignLevel(i, level);
  CheckInvariants();
}

void SegmentRegistry::OpenEmbedded(int i) {
  CSEG_CHECK(!empty(), "OpenEmbedded on an empty registry");
  const int level = current_level() + 1;
  open_.push_back(static_cast<int>(archive_.size()));
  archive_.push_back({level, i, i, SegmentStatus::kOpen});
  AssignLevel(i, level);
  CheckInvariants();
}

void SegmentRegistry::CheckInvariants() const {
  for (int l = 1; l <= current_level(); ++l) {
    const Segment &seg = archive_[open_[l - 1]];
    CSEG_CHECK(seg.status == SegmentStatus::kOpen, "stale open slot");
    CSEG_CHECK(seg.level == l, "open slot level mismatch");
    CSEG_CHECK(seg.beg >= 1 && seg.beg <= seg.end, "segment bounds inverted");
    if (l > 1) {
      const Segment &parent = archive_[open_[l - 2]];
      CSEG_CHECK(seg.beg > parent.end,
                 "embedded segment does not follow its parent's end");
    }
  }
  if (!empty()) {
    CSEG_CHECK(open_segment(current_level()).end == last_,
               "innermost segment does not end at the last utterance");
  }
}

}  // namespace cseg
