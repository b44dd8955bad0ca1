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

#ifndef CSEG_RENDER_H_
#define CSEG_RENDER_H_

#include <string>

#include "json.hpp"

namespace cseg {

// Renders a serialized trace as a fixed-width text table: one row per
// utterance with backward-looking center, center list, transition, segment
// levels (a tick where a segment begins, a bar where it continues), and the
// block that handled the utterance. Mediated centers are starred. The
// segment list with statuses follows the table. Output is deterministic.
// Throws CorpusError if the JSON is not a trace.
std::string RenderTraceText(const nlohmann::ordered_json &trace);

}  // namespace cseg

#endif  // CSEG_RENDER_H_
