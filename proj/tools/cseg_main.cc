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
//
// Command line driver: analyze corpora into trace artifacts, render traces
// as tables, aggregate evaluation statistics, or just validate input.
//
// Exit codes: 0 success, 1 I/O failure, 2 invalid input, 3 internal error.

#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cseg/corpus.h"
#include "cseg/engine.h"
#include "cseg/errors.h"
#include "cseg/evaluation.h"
#include "cseg/render.h"
#include "cseg/trace_json.h"

namespace {

using cseg::AnalysisTrace;
using cseg::Document;
using nlohmann::ordered_json;

struct Options {
  std::vector<std::string> files;
  std::string format = "text";
  int depth_warn = 7;
  std::string out_dir;
};

void AddCommonOptions(CLI::App *cmd, Options *opts) {
  cmd->add_option("files", opts->files, "corpus files")
      ->required()
      ->expected(-1);
  cmd->add_option("--format", opts->format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  cmd->add_option("--depth-warn", opts->depth_warn,
                  "warn when the maximum segment depth exceeds this")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--out", opts->out_dir,
                  "write per-document artifacts into this directory");
}

std::string SafeFileName(const std::string &id, int ordinal) {
  std::string name;
  for (char c : id) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                    (c >= '0' && c <= '9') || c == '.' || c == '_' || c == '-';
    name += ok ? c : '_';
  }
  if (name.empty()) name = "doc" + std::to_string(ordinal);
  return name;
}

void WriteFileOrThrow(const std::filesystem::path &path,
                      const std::string &content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw cseg::IoError("cannot write " + path.string());
  out << content;
  out.close();
  if (!out) throw cseg::IoError("write failed on " + path.string());
}

std::filesystem::path PrepareOutDir(const std::string &dir) {
  std::filesystem::path path(dir);
  std::error_code ec;
  std::filesystem::create_directories(path, ec);
  if (ec) throw cseg::IoError("cannot create " + dir + ": " + ec.message());
  return path;
}

// Loads every document of every input file, preserving input order.
std::vector<Document> LoadDocuments(const std::vector<std::string> &files) {
  std::vector<Document> docs;
  if (files.size() <= 1) {
    for (const std::string &file : files) {
      for (Document &doc : cseg::ParseCorpusFile(file)) {
        docs.push_back(std::move(doc));
      }
    }
    return docs;
  }
  std::vector<std::future<std::vector<Document>>> futures;
  futures.reserve(files.size());
  for (const std::string &file : files) {
    futures.push_back(std::async(std::launch::async, [file] {
      return cseg::ParseCorpusFile(file);
    }));
  }
  for (auto &future : futures) {
    for (Document &doc : future.get()) docs.push_back(std::move(doc));
  }
  return docs;
}

// Prints findings and returns true if any error-severity finding exists.
bool ReportFindings(const std::vector<Document> &docs, std::ostream &out) {
  bool failed = false;
  for (const Document &doc : docs) {
    cseg::ValidationReport report = cseg::ValidateDocument(doc);
    failed = failed || !report.ok();
    for (const cseg::Finding &f : report.findings) {
      out << (f.severity == cseg::Severity::kError ? "error" : "warning")
          << ": " << f.location << ": " << f.rule << ": " << f.detail << "\n";
    }
  }
  return failed;
}

void RequireValid(const std::vector<Document> &docs) {
  std::ostringstream findings;
  if (ReportFindings(docs, findings)) {
    throw cseg::CorpusError("invalid corpus:\n" + findings.str());
  }
  std::cerr << findings.str();
}

std::vector<AnalysisTrace> AnalyzeAll(const std::vector<Document> &docs) {
  std::vector<AnalysisTrace> traces;
  traces.reserve(docs.size());
  if (docs.size() <= 1) {
    for (const Document &doc : docs) traces.push_back(cseg::Analyze(doc));
    return traces;
  }
  std::vector<std::future<AnalysisTrace>> futures;
  futures.reserve(docs.size());
  for (const Document &doc : docs) {
    futures.push_back(std::async(std::launch::async,
                                 [&doc] { return cseg::Analyze(doc); }));
  }
  for (auto &future : futures) traces.push_back(future.get());
  return traces;
}

void WarnDepth(const std::vector<Document> &docs,
               const std::vector<AnalysisTrace> &traces, int threshold) {
  for (size_t n = 0; n < traces.size(); ++n) {
    if (traces[n].max_level > threshold) {
      std::cerr << "warning: " << docs[n].id << ": maximum segment depth "
                << traces[n].max_level << " exceeds " << threshold << "\n";
    }
  }
}

int CmdAnalyze(const Options &opts) {
  std::vector<Document> docs = LoadDocuments(opts.files);
  RequireValid(docs);
  std::vector<AnalysisTrace> traces = AnalyzeAll(docs);
  WarnDepth(docs, traces, opts.depth_warn);
  if (!opts.out_dir.empty()) {
    std::filesystem::path dir = PrepareOutDir(opts.out_dir);
    for (size_t n = 0; n < docs.size(); ++n) {
      const std::string name =
          SafeFileName(docs[n].id, static_cast<int>(n)) + ".trace.json";
      WriteFileOrThrow(dir / name, TraceToString(docs[n], traces[n]));
    }
    return 0;
  }
  if (docs.size() == 1) {
    std::cout << TraceToString(docs[0], traces[0]);
  } else {
    ordered_json all = ordered_json::array();
    for (size_t n = 0; n < docs.size(); ++n) {
      all.push_back(cseg::TraceToJson(docs[n], traces[n]));
    }
    std::cout << all.dump(2) << "\n";
  }
  return 0;
}

int CmdRender(const Options &opts) {
  std::vector<std::pair<std::string, std::string>> outputs;  // name, text
  for (const std::string &file : opts.files) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw cseg::IoError("cannot read " + file);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    ordered_json j;
    try {
      j = ordered_json::parse(buffer.str());
    } catch (const nlohmann::json::parse_error &e) {
      throw cseg::CorpusError(file + ": malformed JSON: " + e.what());
    }
    if (cseg::LooksLikeTrace(j)) {
      const std::string name = j.value("document", file);
      outputs.emplace_back(name, opts.format == "json"
                                     ? j.dump(2) + "\n"
                                     : cseg::RenderTraceText(j));
      continue;
    }
    std::vector<Document> docs = cseg::ParseCorpus(buffer.str(), file);
    RequireValid(docs);
    for (const Document &doc : docs) {
      AnalysisTrace trace = cseg::Analyze(doc);
      if (trace.max_level > opts.depth_warn) {
        std::cerr << "warning: " << doc.id << ": maximum segment depth "
                  << trace.max_level << " exceeds " << opts.depth_warn << "\n";
      }
      ordered_json tj = cseg::TraceToJson(doc, trace);
      outputs.emplace_back(doc.id, opts.format == "json"
                                       ? tj.dump(2) + "\n"
                                       : cseg::RenderTraceText(tj));
    }
  }
  if (!opts.out_dir.empty()) {
    std::filesystem::path dir = PrepareOutDir(opts.out_dir);
    const std::string ext = opts.format == "json" ? ".trace.json" : ".txt";
    for (size_t n = 0; n < outputs.size(); ++n) {
      const std::string name =
          SafeFileName(outputs[n].first, static_cast<int>(n)) + ext;
      WriteFileOrThrow(dir / name, outputs[n].second);
    }
    return 0;
  }
  for (size_t n = 0; n < outputs.size(); ++n) {
    if (n > 0) std::cout << "\n";
    std::cout << outputs[n].second;
  }
  return 0;
}

int CmdStats(const Options &opts) {
  std::vector<Document> docs = LoadDocuments(opts.files);
  RequireValid(docs);
  std::vector<AnalysisTrace> traces = AnalyzeAll(docs);
  WarnDepth(docs, traces, opts.depth_warn);
  cseg::StatsReport report;
  for (size_t n = 0; n < docs.size(); ++n) {
    cseg::DocumentEvaluation eval = cseg::EvaluateDocument(docs[n], traces[n]);
    report = cseg::MergeReports(
        report, cseg::SummarizeDocument(docs[n], traces[n], eval));
  }
  const std::string text = opts.format == "json"
                               ? cseg::StatsToJson(report).dump(2) + "\n"
                               : cseg::StatsToText(report);
  if (!opts.out_dir.empty()) {
    std::filesystem::path dir = PrepareOutDir(opts.out_dir);
    const std::string name =
        opts.format == "json" ? "stats.json" : "stats.txt";
    WriteFileOrThrow(dir / name, text);
    return 0;
  }
  std::cout << text;
  return 0;
}

int CmdValidate(const Options &opts) {
  std::vector<Document> docs = LoadDocuments(opts.files);
  if (opts.format == "json") {
    ordered_json all = ordered_json::array();
    bool failed = false;
    for (const Document &doc : docs) {
      cseg::ValidationReport report = cseg::ValidateDocument(doc);
      failed = failed || !report.ok();
      for (const cseg::Finding &f : report.findings) {
        all.push_back({{"severity", f.severity == cseg::Severity::kError
                                        ? "error"
                                        : "warning"},
                       {"location", f.location},
                       {"rule", f.rule},
                       {"detail", f.detail}});
      }
    }
    std::cout << all.dump(2) << "\n";
    return failed ? 2 : 0;
  }
  const bool failed = ReportFindings(docs, std::cout);
  std::cout << (failed ? "invalid" : "ok") << ": " << docs.size()
            << " document(s)\n";
  return failed ? 2 : 0;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{
      "Hierarchical discourse segmentation with centering-based anaphora "
      "resolution"};
  app.require_subcommand(1);

  Options analyze_opts, render_opts, stats_opts, validate_opts;
  CLI::App *analyze =
      app.add_subcommand("analyze", "analyze corpora into trace JSON");
  AddCommonOptions(analyze, &analyze_opts);
  CLI::App *render =
      app.add_subcommand("render", "render corpora or traces as text tables");
  AddCommonOptions(render, &render_opts);
  CLI::App *stats =
      app.add_subcommand("stats", "aggregate evaluation statistics");
  AddCommonOptions(stats, &stats_opts);
  CLI::App *validate =
      app.add_subcommand("validate", "check corpus files and report findings");
  AddCommonOptions(validate, &validate_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    return app.exit(e);
  }

  try {
    if (analyze->parsed()) return CmdAnalyze(analyze_opts);
    if (render->parsed()) return CmdRender(render_opts);
    if (stats->parsed()) return CmdStats(stats_opts);
    if (validate->parsed()) return CmdValidate(validate_opts);
    return 2;
  } catch (const cseg::IoError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const cseg::CorpusError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception &e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
