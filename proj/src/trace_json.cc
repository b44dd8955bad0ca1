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

#include "cseg/trace_json.h"

#include "cseg/resolver.h"
#include "cseg/segment_registry.h"

namespace cseg {

using nlohmann::ordered_json;

namespace {

ordered_json SegmentToJson(const Segment &seg, bool with_status) {
  ordered_json j;
  j["level"] = seg.level;
  j["beg"] = seg.beg;
  j["end"] = seg.end;
  if (with_status) j["status"] = std::string(SegmentStatusName(seg.status));
  return j;
}

ordered_json StepToJson(const Document &doc, const StepRecord &step) {
  ordered_json j;
  j["utterance"] = step.utterance;
  j["block"] = std::string(BlockLabel(step.block));
  if (step.lift) {
    j["lift"] = {{"from", step.lift->from_level}, {"to", step.lift->to_level}};
  } else {
    j["lift"] = nullptr;
  }
  if (step.centering.cb) {
    j["cb"] = *step.centering.cb;
  } else {
    j["cb"] = nullptr;
  }
  j["cp"] = step.centering.cp;
  j["transition"] = std::string(TransitionLabel(step.centering.transition));
  j["cf"] = ordered_json::array();
  for (const CfEntry &entry : doc.utterance(step.utterance).cf) {
    ordered_json je;
    je["entity"] = entry.entity;
    je["mediated"] = entry.mediated;
    j["cf"].push_back(std::move(je));
  }
  j["resolutions"] = ordered_json::array();
  for (const ResolutionResult &r : step.resolutions) {
    ordered_json jr;
    jr["expression"] = r.expression;
    if (r.entity) {
      jr["entity"] = *r.entity;
    } else {
      jr["entity"] = nullptr;
    }
    jr["clause"] = std::string(LocusClauseName(r.locus.clause));
    jr["level"] = r.locus.level ? ordered_json(*r.locus.level)
                                : ordered_json(nullptr);
    jr["utterance"] = r.locus.utterance ? ordered_json(*r.locus.utterance)
                                        : ordered_json(nullptr);
    jr["rank"] = r.locus.rank ? ordered_json(*r.locus.rank)
                              : ordered_json(nullptr);
    j["resolutions"].push_back(std::move(jr));
  }
  j["open_segments"] = ordered_json::array();
  for (const Segment &seg : step.open_segments) {
    j["open_segments"].push_back(SegmentToJson(seg, false));
  }
  return j;
}

}  // namespace

ordered_json TraceToJson(const Document &doc, const AnalysisTrace &trace) {
  ordered_json j;
  j["document"] = trace.document_id;
  j["entities"] = ordered_json::array();
  for (const Entity &e : doc.entities) {
    j["entities"].push_back({{"id", e.id}, {"surface", e.surface}});
  }
  j["steps"] = ordered_json::array();
  for (const StepRecord &step : trace.steps) {
    j["steps"].push_back(StepToJson(doc, step));
  }
  j["segments"] = ordered_json::array();
  for (const Segment &seg : trace.segments) {
    j["segments"].push_back(SegmentToJson(seg, true));
  }
  j["max_level"] = trace.max_level;
  return j;
}

std::string TraceToString(const Document &doc, const AnalysisTrace &trace) {
  return TraceToJson(doc, trace).dump(2) + "\n";
}

bool LooksLikeTrace(const nlohmann::ordered_json &j) {
  return j.is_object() && j.contains("steps") && j.contains("segments");
}

}  // namespace cseg
