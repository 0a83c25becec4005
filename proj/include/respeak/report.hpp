#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "respeak/align_metrics.hpp"
#include "respeak/ner.hpp"
#include "respeak/ngram_metrics.hpp"
#include "respeak/stats.hpp"
#include "respeak/textcore.hpp"

namespace respeak {

struct ScoreOptions {
  TokenizerConfig tokenizer;
  BleuConfig bleu;
  NistConfig nist;
  EbleuConfig ebleu;
  LanguageResources resources;
  double meteor_penalty_exponent = 1.0;
  double ribes_alpha = 0.25;
  RibesVariant ribes_variant = RibesVariant::Nkt;
  /// Reduction rate over characters instead of tokens.
  bool reduction_in_chars = false;
  /// Resource file kind -> "path sha256".
  std::map<std::string, std::string> resource_digests;
};

/// Scores ×100 (NIST unscaled), one row per segment or for the corpus.
struct MetricRow {
  double bleu = 0.0;
  double nist = 0.0;
  double ter = 0.0;
  double meteor = 0.0;
  std::optional<double> meteor_pl;
  double ebleu = 0.0;
  double ribes = 0.0;
  double reduction = 0.0;
};

struct MetricReport {
  std::vector<MetricRow> segments;
  MetricRow corpus;
  nlohmann::ordered_json config;
};

/// Scores aligned hypothesis/reference lines. `references` holds one list of
/// lines per reference file, each as long as `hypotheses`.
MetricReport score_transcripts(const std::vector<std::string>& hypotheses,
                               const std::vector<std::vector<std::string>>& references,
                               const ScoreOptions& options);

void write_report_jsonl(const MetricReport& report, std::ostream& out);
void write_report_text(const MetricReport& report, std::ostream& out);

void write_ner_jsonl(const std::vector<NerRecord>& records, std::ostream& out);
void write_ner_text(const std::vector<NerRecord>& records, std::ostream& out);

nlohmann::ordered_json model_to_json(const RegressionModel& model);
RegressionModel model_from_json(const nlohmann::json& j);

/// One `model` record per elimination stage.
void write_trace_jsonl(const EliminationTrace& trace, std::ostream& out);
/// Stage-by-stage layout: B, Std. Error, Beta, t, Sig., Adjusted R-square.
void write_trace_text(const EliminationTrace& trace, std::ostream& out);

/// Final-stage model from a file written by write_trace_jsonl.
RegressionModel read_model_file(const std::string& path);
RegressionModel read_model(std::istream& in);

std::string sha256_hex(std::string_view data);
std::string sha256_file(const std::string& path);

}  // namespace respeak
