#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "respeak/resources.hpp"
#include "respeak/textcore.hpp"

namespace respeak {

/// Hypothesis corpus: one token sequence per segment.
using Corpus = std::vector<TokenSequence>;
/// Reference corpus: for every segment, one or more reference sequences.
using ReferenceCorpus = std::vector<std::vector<TokenSequence>>;

/// Wraps a single-reference corpus into the multi-reference shape.
ReferenceCorpus single_references(const Corpus& refs);

struct BleuConfig {
  std::size_t max_n = 4;
  /// Empty means uniform 1/max_n.
  std::vector<double> weights;
  /// Add-one smoothing of every n-gram precision.
  bool smooth = false;
  /// Average per-segment scores instead of pooling counts.
  bool sentence_level = false;

  void validate() const;
  std::vector<double> effective_weights() const;
};

struct BleuScore {
  double score = 0.0;
  double brevity_penalty = 1.0;
  /// p_n for n = 1..max_n; empty when no hypothesis has n tokens.
  std::vector<std::optional<double>> precisions;
  std::size_t hyp_length = 0;
  std::size_t ref_length = 0;
};

double brevity_penalty(std::size_t hyp_length, std::size_t ref_length);

/// Clipped n-gram precision, or nullopt when the hypothesis is shorter than n.
std::optional<double> modified_precision(const TokenSequence& hyp,
                                         std::span<const TokenSequence> refs, std::size_t n);

/// Length of the reference closest to `hyp_length`; ties go to the shorter one.
std::size_t closest_ref_length(std::size_t hyp_length, std::span<const TokenSequence> refs);

BleuScore bleu(const Corpus& hyps, const ReferenceCorpus& refs, const BleuConfig& config = {});

struct NistConfig {
  std::size_t max_n = 5;
  /// Chosen so the length factor is 0.5 at a hyp/ref length ratio of 2/3.
  double brevity_beta = default_beta();

  static double default_beta();
  void validate() const;
};

/// Information weights of the reference corpus:
/// info(w1..wn) = log2(count(w1..wn-1) / count(w1..wn)), with the empty
/// prefix counting every reference word.
class NistInfo {
 public:
  NistInfo(const ReferenceCorpus& refs, std::size_t max_n);

  double info(const NGram& gram) const;

 private:
  std::vector<NGramCounts> counts_;  // index n-1
  std::size_t total_words_ = 0;
};

double nist(const Corpus& hyps, const ReferenceCorpus& refs, const NistConfig& config = {});

/// NIST over `hyps` using externally built information weights; lets a caller
/// score single segments against corpus-wide weights.
double nist_with_info(const Corpus& hyps, const ReferenceCorpus& refs, const NistInfo& info,
                      const NistConfig& config);

enum class MatchKind { Exact, Synonym, Miss };

struct AnnotatedToken {
  std::string original;
  /// Reference word the token is scored as; equals `original` unless Synonym.
  std::string matched;
  MatchKind kind = MatchKind::Miss;
};

std::vector<AnnotatedToken> ebleu_synonym_expand(const TokenSequence& hyp,
                                                 std::span<const TokenSequence> refs,
                                                 const LanguageResources& resources);

std::vector<AnnotatedToken> ebleu_synonym_expand(const TokenSequence& hyp,
                                                 const TokenSequence& ref,
                                                 const LanguageResources& resources);

struct EbleuConfig {
  double synonym_score = 0.9;
  double rare_words_percent = 0.05;
  double rare_words_score = 1.1;
  std::size_t max_n = 4;
  bool smooth = false;
  bool sentence_level = false;

  void validate() const;
};

struct EbleuScore {
  double score = 0.0;
  double brevity_penalty = 1.0;
  /// B_i per order (weighted precision clamped to [0,1]).
  std::vector<std::optional<double>> per_order_base;
  /// C_i = exp(s / i) with s the running sum of log B over defined orders.
  std::vector<std::optional<double>> cumulative;
};

/// Trailing `percent` of the distinct reference words when sorted by
/// descending frequency (ties lexicographic).
std::set<std::string> rare_words(const ReferenceCorpus& refs, double percent);

EbleuScore ebleu(const Corpus& hyps, const ReferenceCorpus& refs,
                 const LanguageResources& resources, const EbleuConfig& config = {});

/// EBLEU with a caller-supplied rare-word list, so single segments can be
/// scored against the list derived from the whole corpus.
EbleuScore ebleu_with_rare_words(const Corpus& hyps, const ReferenceCorpus& refs,
                                 const LanguageResources& resources, const EbleuConfig& config,
                                 const std::set<std::string>& rare);

}  // namespace respeak
