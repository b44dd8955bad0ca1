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

#ifndef CSEG_TRACE_JSON_H_
#define CSEG_TRACE_JSON_H_

#include <string>

#include "json.hpp"

#include "cseg/corpus.h"
#include "cseg/engine.h"

namespace cseg {

// Converts an analysis trace to its JSON form. The document supplies entity
// surfaces and per-utterance center lists, so the result renders on its own.
// Key order and formatting are fixed: equal traces produce identical bytes.
nlohmann::ordered_json TraceToJson(const Document &doc,
                                   const AnalysisTrace &trace);

// Serialized with two-space indentation and a trailing newline.
std::string TraceToString(const Document &doc, const AnalysisTrace &trace);

// True if the JSON value looks like a serialized trace rather than a corpus
// document.
bool LooksLikeTrace(const nlohmann::ordered_json &j);

}  // namespace cseg

#endif  // CSEG_TRACE_JSON_H_
