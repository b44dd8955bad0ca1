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

#ifndef CSEG_CENTERING_H_
#define CSEG_CENTERING_H_

#include <optional>
#include <span>
#include <string_view>
#include <unordered_set>

#include "cseg/corpus.h"

namespace cseg {

using EntitySet = std::unordered_set<EntityId>;

// Transition between adjacent utterances, derived from the backward-looking
// center and the preferred center. kNone marks an undefined backward-looking
// center and is rendered as "---".
enum class Transition {
  kContinue,     // Cb(n) = Cb(n-1) or Cb(n-1) undefined; Cb(n) = Cp(n)
  kRetain,       // Cb(n) = Cb(n-1) or Cb(n-1) undefined; Cb(n) != Cp(n)
  kSmoothShift,  // Cb(n) != Cb(n-1); Cb(n) = Cp(n)
  kRoughShift,   // Cb(n) != Cb(n-1); Cb(n) != Cp(n)
  kNone,
};

std::string_view TransitionLabel(Transition t);

// Thematic progression between adjacent utterances.
enum class TpPattern {
  kConstantTheme,         // same preferred center on both sides
  kLinearThematization,   // new preferred center, drawn from prev_cf
  kOther,
};

// Centering facts recorded for one utterance.
struct CenteringRecord {
  int utterance = 0;
  std::optional<EntityId> cb;
  EntityId cp;
  Transition transition = Transition::kNone;

  bool operator==(const CenteringRecord &) const = default;
};

// Rank-1 entity of a center list. Precondition: cf is non-empty.
const EntityId &PreferredCenter(std::span<const CfEntry> cf);

// Backward-looking center of the current utterance: the highest-ranked entity
// of the previous utterance's center list that the current utterance realizes
// (i.e. that is in `resolved`). Mediated entries participate; the entry's
// rank, not its realization mode, decides. Pass an empty span when no
// previous list is accessible. Returns nullopt when no entry qualifies.
std::optional<EntityId> ComputeBackwardCenter(std::span<const CfEntry> prev_cf,
                                              const EntitySet &resolved);

// Classifies the transition for the current utterance. cb_prev is the
// backward-looking center of the previous utterance; an undefined cb_prev
// counts as matching, an undefined cb yields kNone.
Transition ClassifyTransition(const std::optional<EntityId> &cb,
                              const std::optional<EntityId> &cb_prev,
                              const EntityId &cp);

// Classifies the thematic progression from prev_cf to curr_cf. Preconditions:
// both lists non-empty.
TpPattern ClassifyTp(std::span<const CfEntry> prev_cf,
                     std::span<const CfEntry> curr_cf);

// True if the entity occurs anywhere in the list, mediated or not.
bool CfContains(std::span<const CfEntry> cf, const EntityId &entity);

}  // namespace cseg

#endif  // CSEG_CENTERING_H_
