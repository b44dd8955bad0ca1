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

#include "cseg/errors.h"

namespace cseg {

std::string_view TransitionLabel(Transition t) {
  switch (t) {
    case Transition::kContinue:
      return "C";
    case Transition::kRetain:
      return "R";
    case Transition::kSmoothShift:
      return "SS";
    case Transition::kRoughShift:
      return "RS";
    case Transition::kNone:
      return "---";
  }
  return "---";
}

const EntityId &PreferredCenter(std::span<const CfEntry> cf) {
  CSEG_CHECK(!cf.empty(), "preferred center of an empty center list");
  return cf.front().entity;
}

std::optional<EntityId> ComputeBackwardCenter(std::span<const CfEntry> prev_cf,
                                              const EntitySet &resolved) {
  for (const CfEntry &entry : prev_cf) {
    if (resolved.count(entry.entity)) return entry.entity;
  }
  return std::nullopt;
}

Transition ClassifyTransition(const std::optional<EntityId> &cb,
                              const std::optional<EntityId> &cb_prev,
                              const EntityId &cp) {
  if (!cb) return Transition::kNone;
  const bool held = !cb_prev || *cb == *cb_prev;
  if (held) {
    return *cb == cp ? Transition::kContinue : Transition::kRetain;
  }
  return *cb == cp ? Transition::kSmoothShift : Transition::kRoughShift;
}

TpPattern ClassifyTp(std::span<const CfEntry> prev_cf,
                     std::span<const CfEntry> curr_cf) {
  const EntityId &prev_cp = PreferredCenter(prev_cf);
  const EntityId &curr_cp = PreferredCenter(curr_cf);
  if (curr_cp == prev_cp) return TpPattern::kConstantTheme;
  if (CfContains(prev_cf, curr_cp)) return TpPattern::kLinearThematization;
  return TpPattern::kOther;
}

bool CfContains(std::span<const CfEntry> cf, const EntityId &entity) {
  for (const CfEntry &entry : cf) {
    if (entry.entity == entity) return true;
  }
  return false;
}

}  // namespace cseg
