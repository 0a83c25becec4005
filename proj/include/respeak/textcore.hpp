#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace respeak {

struct TokenizerConfig {
  bool lowercase = true;
  bool split_punctuation = true;
  bool strip_punctuation = false;

  /// Throws Error(InvalidConfig) when both punctuation modes are requested.
  void validate() const;
};

/// Ordered, non-empty tokens of one segment.
class TokenSequence {
 public:
  TokenSequence() = default;
  explicit TokenSequence(std::vector<std::string> tokens);
  TokenSequence(std::initializer_list<std::string> tokens);

  std::size_t size() const noexcept { return tokens_.size(); }
  bool empty() const noexcept { return tokens_.empty(); }
  const std::string& operator[](std::size_t i) const { return tokens_[i]; }
  auto begin() const noexcept { return tokens_.begin(); }
  auto end() const noexcept { return tokens_.end(); }
  const std::vector<std::string>& tokens() const noexcept { return tokens_; }

  /// Tokens joined by single spaces.
  std::string joined() const;

  friend bool operator==(const TokenSequence&, const TokenSequence&) = default;

 private:
  std::vector<std::string> tokens_;
};

using NGram = std::vector<std::string>;

struct NGramCounts {
  std::size_t order = 1;
  std::map<NGram, std::size_t> counts;

  std::size_t total() const noexcept;
  std::size_t count(const NGram& gram) const noexcept;
};

/// NFC-normalizes a single word and optionally lowercases it. Used for both
/// transcript tokens and resource-file entries so they compare consistently.
std::string normalize_word(std::string_view word, bool lowercase);

TokenSequence tokenize(std::string_view text, const TokenizerConfig& config = {});

NGramCounts ngrams(const TokenSequence& seq, std::size_t n);

/// Σ over hypothesis n-grams of min(hyp count, max ref count).
std::size_t clipped_matches(const NGramCounts& hyp, std::span<const NGramCounts> refs);

/// Reads a transcript: one segment per line, blank lines skipped.
std::vector<std::string> read_segments(std::istream& in);
std::vector<std::string> read_segment_file(const std::string& path);

/// Number of unicode code points in `text` (after NFC normalization).
std::size_t count_characters(std::string_view text);

}  // namespace respeak
