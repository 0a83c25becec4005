#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "respeak/resources.hpp"
#include "respeak/textcore.hpp"

namespace respeak {

// ---------------------------------------------------------------- TER

struct TerConfig {
  /// Longest block a single shift may move.
  std::size_t max_block = 10;
  /// Largest displacement (in words) of a shifted block.
  std::size_t max_shift_distance = 50;
};

struct TerScore {
  double edits = 0.0;  // shifts + residual word edits, unit cost
  std::size_t shifts = 0;
  double ref_length = 0.0;
  double ter = 0.0;
};

/// Unit-cost word-level Levenshtein distance.
std::size_t word_levenshtein(std::span<const std::string> hyp, std::span<const std::string> ref);

/// Greedy block-shift TER: repeatedly applies the shift that most reduces the
/// edit distance to the reference, then adds the residual distance.
TerScore ter(const TokenSequence& hyp, const TokenSequence& ref, const TerConfig& config = {});

/// Fewest edits over all references, divided by the mean reference length.
TerScore ter(const TokenSequence& hyp, std::span<const TokenSequence> refs,
             const TerConfig& config = {});

// ---------------------------------------------------------------- METEOR

enum class MatchStage { Exact, Stem, Synonym };

struct MeteorMatch {
  std::size_t hyp = 0;
  std::size_t ref = 0;
  MatchStage stage = MatchStage::Exact;

  friend bool operator==(const MeteorMatch&, const MeteorMatch&) = default;
};

struct MeteorAlignment {
  std::vector<MeteorMatch> matches;  // sorted by hyp index
  std::size_t chunks = 0;
  std::size_t matched_unigrams() const noexcept { return matches.size(); }
};

/// Staged one-to-one alignment (exact, then stem, then synonym). Each stage
/// takes a maximum matching over still-unmatched words with the fewest
/// crossings against everything aligned so far.
MeteorAlignment meteor_align(const TokenSequence& hyp, const TokenSequence& ref,
                             const LanguageResources& resources);

/// Number of maximal runs of matches contiguous and in order on both sides.
std::size_t count_chunks(std::span<const MeteorMatch> matches_sorted_by_hyp);

struct MeteorScore {
  double precision = 0.0;
  double recall = 0.0;
  double fmean = 0.0;
  double penalty = 0.0;
  double penalty_exponent = 1.0;
  std::size_t chunks = 0;
  std::size_t matched = 0;
  double score = 0.0;
};

MeteorScore meteor(const TokenSequence& hyp, const TokenSequence& ref,
                   const LanguageResources& resources, double penalty_exponent = 1.0);

/// Best score over several references.
MeteorScore meteor(const TokenSequence& hyp, std::span<const TokenSequence> refs,
                   const LanguageResources& resources, double penalty_exponent = 1.0);

/// METEOR driven by a Polish resource bundle; refuses an empty bundle.
MeteorScore meteor_pl(const TokenSequence& hyp, const TokenSequence& ref,
                      const LanguageResources& resources, double penalty_exponent = 1.0);

MeteorScore meteor_pl(const TokenSequence& hyp, std::span<const TokenSequence> refs,
                      const LanguageResources& resources, double penalty_exponent = 1.0);

// ---------------------------------------------------------------- RIBES

/// (τ + 1) / 2 over the given distinct positions; nullopt for fewer than two.
std::optional<double> kendall_nkt(std::span<const std::size_t> positions);

/// (ρ + 1) / 2 over the given distinct positions; nullopt for fewer than two.
std::optional<double> spearman_nsr(std::span<const std::size_t> positions);

enum class RibesVariant { Nkt, Nsr };

struct RibesScore {
  double nkt = 0.0;
  double nsr = 0.0;
  double precision = 0.0;
  double alpha = 0.25;
  RibesVariant variant = RibesVariant::Nkt;
  double score = 0.0;
};

/// Reference position of each aligned hypothesis word, in hypothesis order.
/// Words unique on both sides align directly; repeated words align through the
/// shortest surrounding window that is unique on both sides.
std::vector<std::size_t> ribes_alignment(const TokenSequence& hyp, const TokenSequence& ref);

/// rank statistic × P^alpha. One aligned word counts as perfectly ordered;
/// no aligned words scores 0.
RibesScore ribes(const TokenSequence& hyp, const TokenSequence& ref, double alpha = 0.25,
                 RibesVariant variant = RibesVariant::Nkt);

RibesScore ribes(const TokenSequence& hyp, std::span<const TokenSequence> refs,
                 double alpha = 0.25, RibesVariant variant = RibesVariant::Nkt);

}  // namespace respeak
