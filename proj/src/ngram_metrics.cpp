#include "respeak/ngram_metrics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

#include "respeak/error.hpp"

namespace respeak {

namespace {

// Per-order match statistics, either for one segment or pooled over a corpus.
struct OrderStats {
  std::vector<double> matched;
  std::vector<std::size_t> total;
  std::size_t hyp_length = 0;
  std::size_t ref_length = 0;

  explicit OrderStats(std::size_t max_n) : matched(max_n, 0.0), total(max_n, 0) {}

  OrderStats& operator+=(const OrderStats& o) {
    for (std::size_t i = 0; i < matched.size(); ++i) {
      matched[i] += o.matched[i];
      total[i] += o.total[i];
    }
    hyp_length += o.hyp_length;
    ref_length += o.ref_length;
    return *this;
  }
};

void check_corpus(const Corpus& hyps, const ReferenceCorpus& refs) {
  if (hyps.size() != refs.size()) {
    throw Error(ErrorCode::LengthMismatch, "hypothesis corpus has " + std::to_string(hyps.size()) +
                                               " segments, reference corpus has " +
                                               std::to_string(refs.size()));
  }
  if (hyps.empty()) throw Error(ErrorCode::EmptyCorpus, "corpus has no segments");
  for (const auto& r : refs) {
    if (r.empty()) throw Error(ErrorCode::InvalidInput, "segment without reference");
  }
  const bool any_tokens =
      std::any_of(hyps.begin(), hyps.end(), [](const auto& h) { return !h.empty(); });
  if (!any_tokens) throw Error(ErrorCode::EmptyCorpus, "every hypothesis segment is empty");
}

std::vector<std::optional<double>> precisions_of(const OrderStats& s, bool smooth) {
  std::vector<std::optional<double>> out(s.matched.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (s.total[i] == 0) continue;
    const double m = s.matched[i];
    const double t = static_cast<double>(s.total[i]);
    out[i] = smooth ? (m + 1.0) / (t + 1.0) : m / t;
  }
  return out;
}

double segment_brevity(const OrderStats& s) {
  return s.hyp_length == 0 ? 0.0 : brevity_penalty(s.hyp_length, s.ref_length);
}

BleuScore bleu_from_stats(const OrderStats& s, const std::vector<double>& weights, bool smooth) {
  BleuScore out;
  out.hyp_length = s.hyp_length;
  out.ref_length = s.ref_length;
  out.brevity_penalty = segment_brevity(s);
  out.precisions = precisions_of(s, smooth);
  if (s.hyp_length == 0) return out;

  std::vector<double> used_w;
  std::vector<double> logs;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (!out.precisions[i] || weights[i] <= 0.0) continue;
    if (*out.precisions[i] <= 0.0) return out;  // log-domain annihilation
    used_w.push_back(weights[i]);
    logs.push_back(std::log(*out.precisions[i]));
  }
  if (logs.empty()) return out;

  // Uniform weights reduce to the plain geometric mean; summing first keeps
  // this bit-identical with the cumulative EBLEU recurrence.
  double log_mean = 0.0;
  const bool uniform = std::all_of(used_w.begin(), used_w.end(),
                                   [&](double w) { return w == used_w.front(); });
  if (uniform) {
    double s_log = 0.0;
    for (double l : logs) s_log += l;
    log_mean = s_log / static_cast<double>(logs.size());
  } else {
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < logs.size(); ++i) {
      num += used_w[i] * logs[i];
      den += used_w[i];
    }
    log_mean = num / den;
  }
  out.score = out.brevity_penalty * std::exp(log_mean);
  return out;
}

OrderStats bleu_segment(const TokenSequence& hyp, std::span<const TokenSequence> refs,
                        std::size_t max_n) {
  OrderStats s(max_n);
  s.hyp_length = hyp.size();
  s.ref_length = closest_ref_length(hyp.size(), refs);
  for (std::size_t n = 1; n <= max_n; ++n) {
    const auto h = ngrams(hyp, n);
    std::vector<NGramCounts> r;
    r.reserve(refs.size());
    for (const auto& ref : refs) r.push_back(ngrams(ref, n));
    s.matched[n - 1] = static_cast<double>(clipped_matches(h, r));
    s.total[n - 1] = h.total();
  }
  return s;
}

}  // namespace

ReferenceCorpus single_references(const Corpus& refs) {
  ReferenceCorpus out;
  out.reserve(refs.size());
  for (const auto& r : refs) out.push_back({r});
  return out;
}

void BleuConfig::validate() const {
  if (max_n == 0) throw Error(ErrorCode::InvalidConfig, "max_n must be >= 1");
  if (weights.empty()) return;
  if (weights.size() != max_n) {
    throw Error(ErrorCode::InvalidConfig, "BLEU weights must have max_n entries");
  }
  double sum = 0.0;
  for (double w : weights) {
    if (w < 0.0) throw Error(ErrorCode::InvalidConfig, "BLEU weights must be >= 0");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw Error(ErrorCode::InvalidConfig, "BLEU weights must sum to 1");
  }
}

std::vector<double> BleuConfig::effective_weights() const {
  if (!weights.empty()) return weights;
  return std::vector<double>(max_n, 1.0 / static_cast<double>(max_n));
}

double brevity_penalty(std::size_t hyp_length, std::size_t ref_length) {
  if (hyp_length == 0) {
    if (ref_length == 0) return 1.0;
    throw Error(ErrorCode::EmptyHypothesis, "brevity penalty of an empty hypothesis");
  }
  if (hyp_length > ref_length) return 1.0;
  return std::exp(1.0 - static_cast<double>(ref_length) / static_cast<double>(hyp_length));
}

std::optional<double> modified_precision(const TokenSequence& hyp,
                                         std::span<const TokenSequence> refs, std::size_t n) {
  if (hyp.size() < n || n == 0) return std::nullopt;
  const auto h = ngrams(hyp, n);
  std::vector<NGramCounts> r;
  for (const auto& ref : refs) r.push_back(ngrams(ref, n));
  return static_cast<double>(clipped_matches(h, r)) / static_cast<double>(h.total());
}

std::size_t closest_ref_length(std::size_t hyp_length, std::span<const TokenSequence> refs) {
  std::size_t best = 0;
  std::size_t best_diff = 0;
  bool first = true;
  for (const auto& ref : refs) {
    const std::size_t len = ref.size();
    const std::size_t diff = len > hyp_length ? len - hyp_length : hyp_length - len;
    if (first || diff < best_diff || (diff == best_diff && len < best)) {
      best = len;
      best_diff = diff;
      first = false;
    }
  }
  return best;
}

BleuScore bleu(const Corpus& hyps, const ReferenceCorpus& refs, const BleuConfig& config) {
  config.validate();
  check_corpus(hyps, refs);
  const auto weights = config.effective_weights();

  OrderStats pooled(config.max_n);
  std::vector<OrderStats> segments;
  segments.reserve(hyps.size());
  for (std::size_t i = 0; i < hyps.size(); ++i) {
    segments.push_back(bleu_segment(hyps[i], refs[i], config.max_n));
    pooled += segments.back();
  }

  BleuScore out = bleu_from_stats(pooled, weights, config.smooth);
  if (config.sentence_level) {
    double sum = 0.0;
    for (const auto& s : segments) sum += bleu_from_stats(s, weights, config.smooth).score;
    out.score = sum / static_cast<double>(segments.size());
  }
  return out;
}

// ---------------------------------------------------------------- NIST

double NistConfig::default_beta() {
  const double l = std::log(1.5);
  return std::log(0.5) / (l * l);
}

void NistConfig::validate() const {
  if (max_n == 0) throw Error(ErrorCode::InvalidConfig, "NIST max_n must be >= 1");
}

NistInfo::NistInfo(const ReferenceCorpus& refs, std::size_t max_n) {
  counts_.resize(max_n);
  for (std::size_t n = 1; n <= max_n; ++n) counts_[n - 1].order = n;
  for (const auto& seg : refs) {
    for (const auto& ref : seg) {
      total_words_ += ref.size();
      for (std::size_t n = 1; n <= max_n; ++n) {
        for (const auto& [gram, c] : ngrams(ref, n).counts) counts_[n - 1].counts[gram] += c;
      }
    }
  }
}

double NistInfo::info(const NGram& gram) const {
  const std::size_t n = gram.size();
  if (n == 0 || n > counts_.size()) return 0.0;
  const std::size_t c = counts_[n - 1].count(gram);
  if (c == 0) return 0.0;
  const std::size_t prefix =
      n == 1 ? total_words_ : counts_[n - 2].count(NGram(gram.begin(), gram.end() - 1));
  return std::log2(static_cast<double>(prefix) / static_cast<double>(c));
}

double nist_with_info(const Corpus& hyps, const ReferenceCorpus& refs, const NistInfo& info,
                      const NistConfig& config) {
  config.validate();
  if (hyps.size() != refs.size()) {
    throw Error(ErrorCode::LengthMismatch, "hypothesis/reference segment counts differ");
  }
  std::vector<double> info_sum(config.max_n, 0.0);
  std::vector<std::size_t> totals(config.max_n, 0);
  std::size_t hyp_words = 0;
  double ref_words = 0.0;

  for (std::size_t i = 0; i < hyps.size(); ++i) {
    hyp_words += hyps[i].size();
    double ref_len = 0.0;
    for (const auto& r : refs[i]) ref_len += static_cast<double>(r.size());
    if (!refs[i].empty()) ref_words += ref_len / static_cast<double>(refs[i].size());

    for (std::size_t n = 1; n <= config.max_n; ++n) {
      const auto h = ngrams(hyps[i], n);
      totals[n - 1] += h.total();
      std::vector<NGramCounts> r;
      for (const auto& ref : refs[i]) r.push_back(ngrams(ref, n));
      for (const auto& [gram, count] : h.counts) {
        std::size_t best = 0;
        for (const auto& rc : r) best = std::max(best, rc.count(gram));
        const std::size_t m = std::min(count, best);
        if (m) info_sum[n - 1] += static_cast<double>(m) * info.info(gram);
      }
    }
  }
  if (hyp_words == 0 || ref_words == 0.0) return 0.0;

  double score = 0.0;
  for (std::size_t n = 0; n < config.max_n; ++n) {
    if (totals[n]) score += info_sum[n] / static_cast<double>(totals[n]);
  }
  const double ratio = std::min(static_cast<double>(hyp_words) / ref_words, 1.0);
  const double log_ratio = std::log(ratio);
  return score * std::exp(config.brevity_beta * log_ratio * log_ratio);
}

double nist(const Corpus& hyps, const ReferenceCorpus& refs, const NistConfig& config) {
  config.validate();
  check_corpus(hyps, refs);
  const NistInfo info(refs, config.max_n);
  return nist_with_info(hyps, refs, info, config);
}

// ---------------------------------------------------------------- EBLEU

std::vector<AnnotatedToken> ebleu_synonym_expand(const TokenSequence& hyp,
                                                 std::span<const TokenSequence> refs,
                                                 const LanguageResources& resources) {
  std::set<std::string> ref_words;
  for (const auto& r : refs) ref_words.insert(r.begin(), r.end());

  std::vector<AnnotatedToken> out;
  out.reserve(hyp.size());
  for (const auto& tok : hyp) {
    AnnotatedToken a{tok, tok, MatchKind::Miss};
    if (ref_words.contains(tok)) {
      a.kind = MatchKind::Exact;
    } else {
      // First synonym in reference order wins.
      for (const auto& r : refs) {
        auto it = std::find_if(r.begin(), r.end(), [&](const std::string& w) {
          return resources.are_synonyms(tok, w);
        });
        if (it != r.end()) {
          a.kind = MatchKind::Synonym;
          a.matched = *it;
          break;
        }
      }
    }
    out.push_back(std::move(a));
  }
  return out;
}

std::vector<AnnotatedToken> ebleu_synonym_expand(const TokenSequence& hyp,
                                                 const TokenSequence& ref,
                                                 const LanguageResources& resources) {
  return ebleu_synonym_expand(hyp, std::span<const TokenSequence>(&ref, 1), resources);
}

void EbleuConfig::validate() const {
  if (!(synonym_score > 0.0 && synonym_score <= 1.0)) {
    throw Error(ErrorCode::InvalidConfig, "synonym_score must lie in (0,1]");
  }
  if (!(rare_words_percent >= 0.0 && rare_words_percent <= 1.0)) {
    throw Error(ErrorCode::InvalidConfig, "rare_words_percent must lie in [0,1]");
  }
  if (!(rare_words_score >= 1.0)) {
    throw Error(ErrorCode::InvalidConfig, "rare_words_score must be >= 1");
  }
  if (max_n == 0) throw Error(ErrorCode::InvalidConfig, "EBLEU max_n must be >= 1");
}

std::set<std::string> rare_words(const ReferenceCorpus& refs, double percent) {
  std::map<std::string, std::size_t> freq;
  for (const auto& seg : refs) {
    for (const auto& r : seg) {
      for (const auto& w : r) ++freq[w];
    }
  }
  std::vector<std::pair<std::string, std::size_t>> sorted(freq.begin(), freq.end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  const auto take = static_cast<std::size_t>(std::floor(percent * static_cast<double>(sorted.size())));
  std::set<std::string> out;
  for (std::size_t i = sorted.size() - take; i < sorted.size(); ++i) out.insert(sorted[i].first);
  return out;
}

namespace {

OrderStats ebleu_segment(const TokenSequence& hyp, std::span<const TokenSequence> refs,
                         const LanguageResources& resources, const std::set<std::string>& rare,
                         const EbleuConfig& config) {
  OrderStats s(config.max_n);
  s.hyp_length = hyp.size();
  s.ref_length = closest_ref_length(hyp.size(), refs);

  const auto annotated = ebleu_synonym_expand(hyp, refs, resources);
  std::vector<double> token_weight;
  token_weight.reserve(annotated.size());
  for (const auto& a : annotated) {
    token_weight.push_back(a.kind == MatchKind::Synonym ? config.synonym_score : 1.0);
  }

  for (std::size_t n = 1; n <= config.max_n; ++n) {
    if (annotated.size() < n) continue;
    std::vector<NGramCounts> r;
    for (const auto& ref : refs) r.push_back(ngrams(ref, n));

    std::map<NGram, std::vector<double>> by_gram;
    for (std::size_t i = 0; i + n <= annotated.size(); ++i) {
      NGram gram;
      double w = 1.0;
      bool has_rare = false;
      for (std::size_t k = i; k < i + n; ++k) {
        gram.push_back(annotated[k].matched);
        w *= token_weight[k];
        has_rare = has_rare || rare.contains(annotated[k].matched);
      }
      if (has_rare) w *= config.rare_words_score;
      by_gram[std::move(gram)].push_back(w);
    }

    double matched = 0.0;
    std::size_t total = 0;
    for (auto& [gram, weights] : by_gram) {
      total += weights.size();
      std::size_t clip = 0;
      for (const auto& rc : r) clip = std::max(clip, rc.count(gram));
      clip = std::min(clip, weights.size());
      std::sort(weights.begin(), weights.end(), std::greater<>());
      for (std::size_t k = 0; k < clip; ++k) matched += weights[k];
    }
    // Keeps each sentence's per-order score inside [0,1].
    s.matched[n - 1] = std::min(matched, static_cast<double>(total));
    s.total[n - 1] = total;
  }
  return s;
}

EbleuScore ebleu_from_stats(const OrderStats& s, bool smooth) {
  EbleuScore out;
  out.brevity_penalty = segment_brevity(s);
  const auto p = precisions_of(s, smooth);
  out.per_order_base.resize(p.size());
  out.cumulative.resize(p.size());
  if (s.hyp_length == 0) return out;

  double sum_log = 0.0;
  std::size_t defined = 0;
  bool zero = false;
  double last = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!p[i]) continue;
    const double b = std::min(*p[i], 1.0);
    out.per_order_base[i] = b;
    ++defined;
    if (zero || b <= 0.0) {
      zero = true;
      out.cumulative[i] = 0.0;
      last = 0.0;
      continue;
    }
    sum_log += std::log(b);
    last = std::exp(sum_log / static_cast<double>(defined));
    out.cumulative[i] = last;
  }
  out.score = out.brevity_penalty * last;
  return out;
}

}  // namespace

EbleuScore ebleu(const Corpus& hyps, const ReferenceCorpus& refs,
                 const LanguageResources& resources, const EbleuConfig& config) {
  config.validate();
  check_corpus(hyps, refs);
  return ebleu_with_rare_words(hyps, refs, resources, config,
                               rare_words(refs, config.rare_words_percent));
}

EbleuScore ebleu_with_rare_words(const Corpus& hyps, const ReferenceCorpus& refs,
                                 const LanguageResources& resources, const EbleuConfig& config,
                                 const std::set<std::string>& rare) {
  config.validate();
  check_corpus(hyps, refs);

  OrderStats pooled(config.max_n);
  std::vector<OrderStats> segments;
  segments.reserve(hyps.size());
  for (std::size_t i = 0; i < hyps.size(); ++i) {
    segments.push_back(ebleu_segment(hyps[i], refs[i], resources, rare, config));
    pooled += segments.back();
  }
  EbleuScore out = ebleu_from_stats(pooled, config.smooth);
  if (config.sentence_level) {
    double sum = 0.0;
    for (const auto& s : segments) sum += ebleu_from_stats(s, config.smooth).score;
    out.score = sum / static_cast<double>(segments.size());
  }
  return out;
}

}  // namespace respeak
