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

#include "cseg/render.h"

#include <algorithm>
#include <map>
#include <sstream>
#include <vector>

#include "cseg/errors.h"
#include "cseg/trace_json.h"

namespace cseg {
namespace {

using nlohmann::ordered_json;

// Number of codepoints; with single-width scripts this is the column width.
size_t DisplayWidth(const std::string &s) {
  size_t width = 0;
  for (unsigned char c : s) {
    if ((c & 0xC0) != 0x80) ++width;
  }
  return width;
}

std::string Pad(const std::string &s, size_t width) {
  std::string out = s;
  for (size_t w = DisplayWidth(s); w < width; ++w) out += ' ';
  return out;
}

struct Row {
  int utterance = 0;
  std::string cb;
  std::string cf;
  std::string transition;
  std::string block;
};

}  // namespace

std::string RenderTraceText(const ordered_json &trace) {
  if (!LooksLikeTrace(trace)) {
    throw CorpusError("input is not a serialized trace");
  }
  std::map<std::string, std::string> surfaces;
  if (trace.contains("entities")) {
    for (const auto &e : trace.at("entities")) {
      surfaces[e.at("id").get<std::string>()] =
          e.value("surface", e.at("id").get<std::string>());
    }
  }
  auto surface_of = [&](const std::string &id) {
    auto it = surfaces.find(id);
    return it == surfaces.end() ? id : it->second;
  };

  std::vector<Row> rows;
  for (const auto &step : trace.at("steps")) {
    Row row;
    row.utterance = step.at("utterance").get<int>();
    row.cb = step.at("cb").is_null()
                 ? "--"
                 : surface_of(step.at("cb").get<std::string>());
    std::string cf = "[";
    bool first = true;
    for (const auto &entry : step.at("cf")) {
      if (!first) cf += ", ";
      first = false;
      cf += surface_of(entry.at("entity").get<std::string>());
      if (entry.value("mediated", false)) cf += "*";
    }
    cf += "]";
    row.cf = cf;
    row.transition = step.at("transition").get<std::string>();
    const std::string block = step.at("block").get<std::string>();
    if (block == "init") {
      row.block = "";
    } else if (!step.at("lift").is_null()) {
      row.block = block + ", Lift";
    } else {
      row.block = block;
    }
    rows.push_back(std::move(row));
  }

  const int max_level = trace.value("max_level", 0);
  // mark[u][l]: 2 a segment at level l begins at utterance u, 1 it covers u.
  std::map<int, std::map<int, int>> mark;
  for (const auto &seg : trace.at("segments")) {
    const int level = seg.at("level").get<int>();
    const int beg = seg.at("beg").get<int>();
    const int end = seg.at("end").get<int>();
    mark[beg][level] = 2;
    for (int u = beg + 1; u <= end; ++u) {
      if (mark[u][level] < 1) mark[u][level] = 1;
    }
  }

  size_t u_width = 3, cb_width = 2, cf_width = 2, trans_width = 5,
         block_width = 5;
  for (const Row &row : rows) {
    u_width = std::max(u_width,
                       DisplayWidth("(" + std::to_string(row.utterance) + ")"));
    cb_width = std::max(cb_width, DisplayWidth(row.cb));
    cf_width = std::max(cf_width, DisplayWidth(row.cf));
    trans_width = std::max(trans_width, DisplayWidth(row.transition));
    block_width = std::max(block_width, DisplayWidth(row.block));
  }
  const size_t level_width = max_level > 0 ? 4 * max_level - 1 : 1;

  std::ostringstream out;
  out << "Document: " << trace.value("document", "") << "\n";
  out << "Marks: '+--' segment begins, '|' segment continues; '*' mediated "
         "center.\n\n";

  auto level_cells = [&](int utterance) {
    std::string cells;
    for (int l = 1; l <= max_level; ++l) {
      if (l > 1) cells += ' ';
      int m = 0;
      auto itu = mark.find(utterance);
      if (itu != mark.end()) {
        auto itl = itu->second.find(l);
        if (itl != itu->second.end()) m = itl->second;
      }
      cells += m == 2 ? "+--" : (m == 1 ? "|  " : "   ");
    }
    return cells;
  };

  std::string header;
  header += Pad("U", u_width);
  header += " | " + Pad("Cb", cb_width);
  header += " | " + Pad("Cf", cf_width);
  header += " | " + Pad("Trans", trans_width);
  header += " | ";
  {
    std::string levels;
    for (int l = 1; l <= max_level; ++l) {
      if (l > 1) levels += ' ';
      levels += Pad(std::to_string(l), 3);
    }
    header += Pad(levels, level_width);
  }
  header += " | " + Pad("Block", block_width);
  out << header << "\n";
  out << std::string(DisplayWidth(header), '-') << "\n";

  for (const Row &row : rows) {
    std::string line;
    line += Pad("(" + std::to_string(row.utterance) + ")", u_width);
    line += " | " + Pad(row.cb, cb_width);
    line += " | " + Pad(row.cf, cf_width);
    line += " | " + Pad(row.transition, trans_width);
    line += " | " + Pad(level_cells(row.utterance), level_width);
    line += " | " + Pad(row.block, block_width);
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << "\n";
  }

  out << "\nSegments (level, span, status):\n";
  for (const auto &seg : trace.at("segments")) {
    out << "  " << seg.at("level").get<int>() << ": "
        << seg.at("beg").get<int>() << ".." << seg.at("end").get<int>() << " "
        << seg.value("status", "open") << "\n";
  }
  return out.str();
}

}  // namespace cseg
