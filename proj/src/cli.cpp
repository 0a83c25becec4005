#include "respeak/cli.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <optional>

#include <CLI11.hpp>

#include "respeak/error.hpp"
#include "respeak/fixtures.hpp"
#include "respeak/report.hpp"

namespace respeak {

namespace {

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::RankDeficient:
    case ErrorCode::DegenerateDf:
      return kExitFailure;
    default:
      return kExitUsage;
  }
}

struct ScoreArgs {
  std::string hyp;
  std::vector<std::string> refs;
  std::string synonyms, stems, function_words;
  std::string format = "text";
  std::string output;
  std::string ribes_variant = "nkt";
  bool no_lowercase = false;
  bool strip_punctuation = false;
  bool keep_punctuation = false;
};

struct RegressArgs {
  std::string csv;
  std::string fixture;
  std::string response = "NER";
  std::vector<std::string> candidates;
  double alpha = 0.05;
  std::string format = "text";
  std::string output;
};

struct PredictArgs {
  std::string model;
  bool published = false;
  std::vector<std::string> scores;
};

std::map<std::string, double> parse_scores(const std::vector<std::string>& items) {
  std::map<std::string, double> out;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw Error(ErrorCode::InvalidInput, "expected NAME=VALUE, got '" + item + "'");
    }
    try {
      std::size_t used = 0;
      const std::string value = item.substr(eq + 1);
      out[item.substr(0, eq)] = std::stod(value, &used);
      if (used != value.size()) throw std::invalid_argument(value);
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::InvalidInput, "bad numeric value in '" + item + "'");
    }
  }
  return out;
}

int run_score(const ScoreArgs& a, ScoreOptions o, std::ostream& out) {
  o.tokenizer.lowercase = !a.no_lowercase;
  o.tokenizer.strip_punctuation = a.strip_punctuation;
  o.tokenizer.split_punctuation = !a.strip_punctuation && !a.keep_punctuation;
  o.ribes_variant = a.ribes_variant == "nsr" ? RibesVariant::Nsr : RibesVariant::Nkt;
  o.ebleu.max_n = o.bleu.max_n;
  o.ebleu.smooth = o.bleu.smooth;
  o.ebleu.sentence_level = o.bleu.sentence_level;

  const bool lower = o.tokenizer.lowercase;
  if (!a.synonyms.empty()) {
    load_synonyms_file(a.synonyms, o.resources, lower);
    o.resource_digests["synonyms"] = a.synonyms + " " + sha256_file(a.synonyms);
  }
  if (!a.stems.empty()) {
    load_stems_file(a.stems, o.resources, lower);
    o.resource_digests["stems"] = a.stems + " " + sha256_file(a.stems);
  }
  if (!a.function_words.empty()) {
    load_function_words_file(a.function_words, o.resources, lower);
    o.resource_digests["function_words"] = a.function_words + " " + sha256_file(a.function_words);
  }

  const auto hyps = read_segment_file(a.hyp);
  std::vector<std::vector<std::string>> refs;
  for (const auto& r : a.refs) refs.push_back(read_segment_file(r));
  const auto report = score_transcripts(hyps, refs, o);

  if (!a.output.empty()) {
    std::ofstream f(a.output);
    if (!f) throw Error(ErrorCode::Io, "cannot write " + a.output);
    write_report_jsonl(report, f);
  }
  if (a.format == "jsonl") {
    write_report_jsonl(report, out);
  } else {
    write_report_text(report, out);
  }
  return kExitOk;
}

int run_ner(const std::string& csv, const std::string& format, std::ostream& out) {
  const auto records = parse_ner_annotation_file(csv);
  if (format == "jsonl") {
    write_ner_jsonl(records, out);
  } else {
    write_ner_text(records, out);
  }
  return kExitOk;
}

int run_regress(const RegressArgs& a, std::ostream& out) {
  if (a.csv.empty() == a.fixture.empty()) {
    throw Error(ErrorCode::InvalidInput, "give exactly one of a CSV file or --fixture");
  }
  const DataTable table =
      a.fixture.empty() ? load_data_table(a.csv, a.response) : fixture_table(a.fixture, a.response);

  std::vector<std::string> candidates = a.candidates;
  if (candidates.empty()) {
    const auto response = canonical_column_name(a.response);
    for (const auto& c : table.columns) {
      const auto key = canonical_column_name(c);
      if (key != response && key != "RED") candidates.push_back(c);
    }
  }
  const auto trace = backward_eliminate(table, candidates, a.alpha);

  if (!a.output.empty()) {
    std::ofstream f(a.output);
    if (!f) throw Error(ErrorCode::Io, "cannot write " + a.output);
    write_trace_jsonl(trace, f);
  }
  if (a.format == "jsonl") {
    write_trace_jsonl(trace, out);
  } else {
    write_trace_text(trace, out);
  }
  return kExitOk;
}

int run_predict(const PredictArgs& a, std::ostream& out) {
  if (a.model.empty() == !a.published) {
    throw Error(ErrorCode::InvalidInput, "give exactly one of --model FILE or --published");
  }
  const RegressionModel model = a.published ? published_ner_model() : read_model_file(a.model);
  const double value = predict(model, parse_scores(a.scores));
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", value);
  out << buf << '\n';
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Automatic quality metrics and NER-model regression for re-speaking transcripts",
               "respeak-eval"};
  app.require_subcommand(1);

  ScoreOptions score_opts;
  ScoreArgs score;
  auto* cmd_score = app.add_subcommand("score", "Score hypothesis transcripts against references");
  cmd_score->add_option("hypothesis", score.hyp, "Hypothesis transcript, one segment per line")
      ->required();
  cmd_score->add_option("-r,--ref", score.refs, "Reference transcript (repeatable)")->required();
  cmd_score->add_option("--max-n", score_opts.bleu.max_n, "BLEU/EBLEU n-gram order")
      ->check(CLI::PositiveNumber);
  cmd_score->add_option("--nist-max-n", score_opts.nist.max_n, "NIST n-gram order")
      ->check(CLI::PositiveNumber);
  cmd_score->add_flag("--sentence-level", score_opts.bleu.sentence_level,
                      "Average per-segment BLEU/EBLEU instead of pooling counts");
  cmd_score->add_flag("--smooth", score_opts.bleu.smooth, "Add-one smoothing of n-gram precisions");
  cmd_score->add_option("--synonyms", score.synonyms, "Synonym file (word<TAB>syn ...)");
  cmd_score->add_option("--stems", score.stems, "Stem file (word<TAB>stem ...)");
  cmd_score->add_option("--function-words", score.function_words, "Function-word list");
  cmd_score->add_option("--function-word-weight", score_opts.resources.function_word_weight)
      ->check(CLI::Range(0.0, 1.0));
  cmd_score->add_option("--synonym-score", score_opts.ebleu.synonym_score);
  cmd_score->add_option("--rare-words-percent", score_opts.ebleu.rare_words_percent);
  cmd_score->add_option("--rare-words-score", score_opts.ebleu.rare_words_score);
  cmd_score->add_option("--meteor-penalty-exp", score_opts.meteor_penalty_exponent);
  cmd_score->add_option("--ribes-alpha", score_opts.ribes_alpha);
  cmd_score->add_option("--ribes-variant", score.ribes_variant)
      ->check(CLI::IsMember({"nkt", "nsr"}));
  cmd_score->add_flag("--chars", score_opts.reduction_in_chars,
                      "Reduction rate over characters instead of tokens");
  cmd_score->add_flag("--no-lowercase", score.no_lowercase, "Keep letter case");
  auto* strip = cmd_score->add_flag("--strip-punctuation", score.strip_punctuation,
                                    "Drop punctuation instead of splitting it off");
  cmd_score->add_flag("--keep-punctuation", score.keep_punctuation,
                      "Leave punctuation attached to words")
      ->excludes(strip);
  cmd_score->add_option("--format", score.format)->check(CLI::IsMember({"text", "jsonl"}));
  cmd_score->add_option("-o,--output", score.output, "Also write JSONL records to this file");

  std::string ner_csv;
  std::string ner_format = "text";
  auto* cmd_ner = app.add_subcommand("ner", "NER accuracy and reduction rate from annotations");
  cmd_ner->add_option("annotations", ner_csv, "CSV: [id,]N,minor,standard,serious,R[,original,subtitle]")
      ->required();
  cmd_ner->add_option("--format", ner_format)->check(CLI::IsMember({"text", "jsonl"}));

  RegressArgs regress;
  auto* cmd_regress = app.add_subcommand("regress", "Backward-elimination OLS");
  cmd_regress->add_option("csv", regress.csv, "Data CSV with header row");
  cmd_regress->add_option("--fixture", regress.fixture, "Use an embedded table")
      ->check(CLI::IsMember({"table1", "table2"}));
  cmd_regress->add_option("--response", regress.response, "Response column");
  cmd_regress->add_option("--candidates", regress.candidates, "Candidate predictors")
      ->delimiter(',');
  cmd_regress->add_option("--alpha", regress.alpha, "Significance level")
      ->check(CLI::Range(0.0, 1.0));
  cmd_regress->add_option("--format", regress.format)->check(CLI::IsMember({"text", "jsonl"}));
  cmd_regress->add_option("-o,--output", regress.output, "Also write JSONL model records here");

  PredictArgs predict_args;
  auto* cmd_predict = app.add_subcommand("predict", "Apply a fitted model");
  cmd_predict->add_option("--model", predict_args.model, "JSONL written by `regress`");
  cmd_predict->add_flag("--published", predict_args.published,
                        "Use NER = 86.55 + 0.254 BLEU + 0.924 NIST - 0.221 EBLEU");
  cmd_predict->add_option("scores", predict_args.scores, "NAME=VALUE predictor values");

  std::string fixture_name;
  auto* cmd_fixture = app.add_subcommand("fixture", "Print an embedded table as CSV");
  cmd_fixture->add_option("name", fixture_name)->required()->check(CLI::IsMember({"table1", "table2"}));

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  if (!argv_rev.empty()) argv_rev.pop_back();
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "respeak-eval: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*cmd_score) return run_score(score, score_opts, out);
    if (*cmd_ner) return run_ner(ner_csv, ner_format, out);
    if (*cmd_regress) return run_regress(regress, out);
    if (*cmd_predict) return run_predict(predict_args, out);
    if (*cmd_fixture) {
      out << fixture_csv(fixture_name);
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "respeak-eval: " << to_string(e.code()) << ": " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "respeak-eval: internal error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace respeak
