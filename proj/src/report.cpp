#include "respeak/report.hpp"

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <openssl/evp.h>

#include "respeak/error.hpp"

namespace respeak {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

std::string fixed(double v, int digits = 2) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

const char* variant_name(RibesVariant v) { return v == RibesVariant::Nkt ? "nkt" : "nsr"; }

ordered_json row_json(const MetricRow& r) {
  ordered_json j;
  j["BLEU"] = r.bleu;
  j["NIST"] = r.nist;
  j["TER"] = r.ter;
  j["METEOR"] = r.meteor;
  j["METEOR-PL"] = r.meteor_pl ? json(*r.meteor_pl) : json(nullptr);
  j["EBLEU"] = r.ebleu;
  j["RIBES"] = r.ribes;
  j["RED"] = r.reduction;
  return j;
}

std::size_t length_for_reduction(const std::string& line, const TokenSequence& tokens,
                                 bool chars) {
  return chars ? count_characters(line) : tokens.size();
}

ordered_json config_json(const ScoreOptions& o) {
  ordered_json c;
  c["record"] = "config";
  c["tokenizer"] = {{"lowercase", o.tokenizer.lowercase},
                    {"split_punctuation", o.tokenizer.split_punctuation},
                    {"strip_punctuation", o.tokenizer.strip_punctuation},
                    {"normalization", "NFC"}};
  c["bleu"] = {{"max_n", o.bleu.max_n},
               {"weights", o.bleu.effective_weights()},
               {"smooth", o.bleu.smooth},
               {"sentence_level", o.bleu.sentence_level}};
  c["nist"] = {{"max_n", o.nist.max_n},
               {"brevity_beta", o.nist.brevity_beta},
               {"scheme", "Doddington information weights, log2(count(prefix)/count(ngram))"}};
  c["ebleu"] = {{"max_n", o.ebleu.max_n},
                {"synonym_score", o.ebleu.synonym_score},
                {"rare_words_percent", o.ebleu.rare_words_percent},
                {"rare_words_score", o.ebleu.rare_words_score}};
  c["meteor"] = {{"penalty_exponent", o.meteor_penalty_exponent},
                 {"function_word_weight", o.resources.function_word_weight}};
  c["ribes"] = {{"alpha", o.ribes_alpha}, {"variant", variant_name(o.ribes_variant)}};
  c["reduction_unit"] = o.reduction_in_chars ? "chars" : "tokens";
  c["resources"] = o.resource_digests;
  return c;
}

}  // namespace

MetricReport score_transcripts(const std::vector<std::string>& hypotheses,
                               const std::vector<std::vector<std::string>>& references,
                               const ScoreOptions& options) {
  options.tokenizer.validate();
  if (references.empty()) throw Error(ErrorCode::InvalidInput, "no reference transcript given");
  for (std::size_t r = 0; r < references.size(); ++r) {
    if (references[r].size() != hypotheses.size()) {
      throw Error(ErrorCode::LengthMismatch,
                  "hypothesis has " + std::to_string(hypotheses.size()) + " segments, reference " +
                      std::to_string(r + 1) + " has " + std::to_string(references[r].size()));
    }
  }

  Corpus hyps;
  ReferenceCorpus refs(hypotheses.size());
  for (std::size_t i = 0; i < hypotheses.size(); ++i) {
    hyps.push_back(tokenize(hypotheses[i], options.tokenizer));
    for (const auto& ref_file : references) refs[i].push_back(tokenize(ref_file[i], options.tokenizer));
  }

  MetricReport report;
  report.config = config_json(options);

  const NistInfo info(refs, options.nist.max_n);
  const auto rare = rare_words(refs, options.ebleu.rare_words_percent);
  const bool with_pl = !options.resources.empty();

  std::size_t original_total = 0, subtitle_total = 0;
  for (std::size_t i = 0; i < hyps.size(); ++i) {
    MetricRow row;
    const Corpus one_hyp{hyps[i]};
    const ReferenceCorpus one_ref{refs[i]};
    if (!hyps[i].empty()) {
      row.bleu = bleu(one_hyp, one_ref, options.bleu).score * 100.0;
      row.ebleu =
          ebleu_with_rare_words(one_hyp, one_ref, options.resources, options.ebleu, rare).score *
          100.0;
      row.nist = nist_with_info(one_hyp, one_ref, info, options.nist);
    }
    row.ter = ter(hyps[i], refs[i]).ter * 100.0;
    row.meteor =
        meteor(hyps[i], refs[i], LanguageResources{}, options.meteor_penalty_exponent).score * 100.0;
    if (with_pl) {
      row.meteor_pl =
          meteor_pl(hyps[i], refs[i], options.resources, options.meteor_penalty_exponent).score *
          100.0;
    }
    row.ribes = ribes(hyps[i], refs[i], options.ribes_alpha, options.ribes_variant).score * 100.0;

    const std::size_t original =
        length_for_reduction(references.front()[i], refs[i].front(), options.reduction_in_chars);
    const std::size_t subtitle =
        length_for_reduction(hypotheses[i], hyps[i], options.reduction_in_chars);
    original_total += original;
    subtitle_total += subtitle;
    row.reduction = original ? reduction_rate(original, subtitle) : 0.0;
    report.segments.push_back(row);
  }

  auto& c = report.corpus;
  c.bleu = bleu(hyps, refs, options.bleu).score * 100.0;
  c.nist = nist_with_info(hyps, refs, info, options.nist);
  c.ebleu = ebleu_with_rare_words(hyps, refs, options.resources, options.ebleu, rare).score * 100.0;
  const double count = static_cast<double>(report.segments.size());
  double pl_sum = 0.0;
  for (const auto& s : report.segments) {
    c.ter += s.ter / count;
    c.meteor += s.meteor / count;
    c.ribes += s.ribes / count;
    if (s.meteor_pl) pl_sum += *s.meteor_pl / count;
  }
  if (with_pl) c.meteor_pl = pl_sum;
  c.reduction = original_total ? reduction_rate(original_total, subtitle_total) : 0.0;
  return report;
}

void write_report_jsonl(const MetricReport& report, std::ostream& out) {
  out << report.config.dump() << '\n';
  for (std::size_t i = 0; i < report.segments.size(); ++i) {
    ordered_json j;
    j["record"] = "segment";
    j["id"] = i + 1;
    j.update(row_json(report.segments[i]));
    out << j.dump() << '\n';
  }
  ordered_json j;
  j["record"] = "corpus";
  j["segments"] = report.segments.size();
  j.update(row_json(report.corpus));
  out << j.dump() << '\n';
}

void write_report_text(const MetricReport& report, std::ostream& out) {
  auto line = [&](const std::string& id, const MetricRow& r) {
    out << std::left << std::setw(8) << id << std::right;
    for (double v : {r.bleu, r.nist, r.ter, r.meteor}) out << std::setw(10) << fixed(v);
    out << std::setw(11) << (r.meteor_pl ? fixed(*r.meteor_pl) : std::string("n/a"));
    for (double v : {r.ebleu, r.ribes, r.reduction}) out << std::setw(10) << fixed(v);
    out << '\n';
  };
  out << std::left << std::setw(8) << "SEG" << std::right;
  for (const char* h : {"BLEU", "NIST", "TER", "METEOR"}) out << std::setw(10) << h;
  out << std::setw(11) << "METEOR-PL";
  for (const char* h : {"EBLEU", "RIBES", "RED."}) out << std::setw(10) << h;
  out << '\n';
  for (std::size_t i = 0; i < report.segments.size(); ++i) {
    line(std::to_string(i + 1), report.segments[i]);
  }
  line("corpus", report.corpus);
}

void write_ner_jsonl(const std::vector<NerRecord>& records, std::ostream& out) {
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    ordered_json j;
    j["record"] = "ner";
    j["row"] = i + 1;
    j["id"] = r.id ? json(*r.id) : json(nullptr);
    j["N"] = r.tokens;
    j["E"] = r.edition_total();
    j["R"] = r.recognition_errors;
    j["NER"] = ner_accuracy(r);
    j["RED"] = r.original_length && r.subtitle_length
                   ? json(reduction_rate(*r.original_length, *r.subtitle_length))
                   : json(nullptr);
    out << j.dump() << '\n';
  }
}

void write_ner_text(const std::vector<NerRecord>& records, std::ostream& out) {
  out << std::left << std::setw(6) << "ROW" << std::setw(12) << "ID" << std::right
      << std::setw(8) << "N" << std::setw(10) << "E" << std::setw(10) << "R" << std::setw(10)
      << "NER%" << std::setw(10) << "RED%" << '\n';
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    out << std::left << std::setw(6) << (i + 1) << std::setw(12) << r.id.value_or("-")
        << std::right << std::setw(8) << r.tokens << std::setw(10) << fixed(r.edition_total())
        << std::setw(10) << fixed(r.recognition_errors) << std::setw(10)
        << fixed(ner_accuracy(r)) << std::setw(10)
        << (r.original_length && r.subtitle_length
                ? fixed(reduction_rate(*r.original_length, *r.subtitle_length))
                : std::string("n/a"))
        << '\n';
  }
}

ordered_json model_to_json(const RegressionModel& m) {
  ordered_json j;
  j["response"] = m.response;
  j["n"] = m.n;
  j["df"] = m.residual_df;
  j["r2"] = m.r2;
  j["adjusted_r2"] = m.adjusted_r2;
  ordered_json terms = ordered_json::array();
  for (Eigen::Index i = 0; i < m.coefficients.size(); ++i) {
    ordered_json t;
    t["name"] = i == 0 ? std::string("(Constant)") : m.predictors[static_cast<std::size_t>(i - 1)];
    t["B"] = m.coefficients(i);
    auto opt = [](const Eigen::VectorXd& v, Eigen::Index k) {
      return k < v.size() ? json(v(k)) : json(nullptr);
    };
    t["std_error"] = opt(m.std_errors, i);
    t["beta"] = i == 0 ? json(nullptr) : opt(m.standardized_betas, i - 1);
    t["t"] = opt(m.t_stats, i);
    t["sig"] = opt(m.p_values, i);
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

RegressionModel model_from_json(const json& j) {
  RegressionModel m;
  try {
    m.response = j.value("response", std::string("NER"));
    m.n = j.value("n", std::size_t{0});
    m.residual_df = j.value("df", std::size_t{0});
    m.r2 = j.value("r2", 0.0);
    m.adjusted_r2 = j.value("adjusted_r2", 0.0);
    const auto& terms = j.at("terms");
    if (terms.empty()) throw Error(ErrorCode::ParseError, "model without terms");
    const auto count = static_cast<Eigen::Index>(terms.size());
    m.coefficients.resize(count);
    m.std_errors.resize(count);
    m.t_stats.resize(count);
    m.p_values.resize(count);
    m.standardized_betas.resize(count - 1);
    auto num = [](const json& v) {
      return v.is_null() ? std::numeric_limits<double>::quiet_NaN() : v.get<double>();
    };
    for (Eigen::Index i = 0; i < count; ++i) {
      const auto& t = terms[static_cast<std::size_t>(i)];
      if (i > 0) m.predictors.push_back(t.at("name").get<std::string>());
      m.coefficients(i) = t.at("B").get<double>();
      m.std_errors(i) = num(t.value("std_error", json(nullptr)));
      m.t_stats(i) = num(t.value("t", json(nullptr)));
      m.p_values(i) = num(t.value("sig", json(nullptr)));
      if (i > 0) m.standardized_betas(i - 1) = num(t.value("beta", json(nullptr)));
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed model record: ") + e.what());
  }
  return m;
}

void write_trace_jsonl(const EliminationTrace& trace, std::ostream& out) {
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const auto& s = trace.steps[i];
    ordered_json j;
    j["record"] = "model";
    j["stage"] = s.step;
    j["final"] = i + 1 == trace.steps.size();
    j["removed"] = s.removed ? json(*s.removed) : json(nullptr);
    j.update(model_to_json(s.model));
    out << j.dump() << '\n';
  }
}

void write_trace_text(const EliminationTrace& trace, std::ostream& out) {
  out << std::left << std::setw(8) << "Model" << std::setw(14) << "Term" << std::right
      << std::setw(11) << "B" << std::setw(12) << "Std. Error" << std::setw(9) << "Beta"
      << std::setw(10) << "t" << std::setw(8) << "Sig." << std::setw(12) << "Adj. R2" << '\n';
  for (const auto& s : trace.steps) {
    const auto& m = s.model;
    for (Eigen::Index i = 0; i < m.coefficients.size(); ++i) {
      const std::string stage = i == 0 ? std::to_string(s.step) : "";
      const std::string term =
          i == 0 ? std::string("(Constant)") : m.predictors[static_cast<std::size_t>(i - 1)];
      out << std::left << std::setw(8) << stage << std::setw(14) << term << std::right
          << std::setw(11) << fixed(m.coefficients(i), 3) << std::setw(12)
          << fixed(m.std_errors(i), 3) << std::setw(9)
          << (i == 0 ? std::string("") : fixed(m.standardized_betas(i - 1), 3)) << std::setw(10)
          << fixed(m.t_stats(i), 3) << std::setw(8) << fixed(m.p_values(i), 3) << std::setw(12)
          << (i == 0 ? fixed(m.adjusted_r2, 3) : std::string("")) << '\n';
    }
    if (s.removed) out << "        removed: " << *s.removed << '\n';
  }
}

RegressionModel read_model(std::istream& in) {
  std::optional<json> last;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception& e) {
      throw Error(ErrorCode::ParseError, "model file line " + std::to_string(line_no) + ": " + e.what());
    }
    if (j.value("record", std::string()) != "model") continue;
    last = std::move(j);
    if (last->value("final", false)) break;
  }
  if (!last) throw Error(ErrorCode::ParseError, "model file has no model record");
  return model_from_json(*last);
}

RegressionModel read_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
  return read_model(in);
}

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw Error(ErrorCode::Io, "SHA-256 failed");
  }
  std::ostringstream out;
  for (unsigned int i = 0; i < len; ++i) {
    out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  }
  return out.str();
}

std::string sha256_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return sha256_hex(buf.str());
}

}  // namespace respeak
