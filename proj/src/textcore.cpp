#include "respeak/textcore.hpp"

#include <fstream>
#include <istream>
#include <numeric>

#include <unicode/locid.h>
#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>

#include "respeak/error.hpp"

namespace respeak {

namespace {

icu::UnicodeString nfc(std::string_view text) {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* normalizer = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) {
    throw Error(ErrorCode::InvalidInput, "NFC normalizer unavailable");
  }
  const auto source = icu::UnicodeString::fromUTF8(
      icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));
  icu::UnicodeString out = normalizer->normalize(source, status);
  if (U_FAILURE(status)) {
    throw Error(ErrorCode::InvalidInput, "text is not valid unicode");
  }
  return out;
}

std::string utf8(const icu::UnicodeString& s) {
  std::string out;
  s.toUTF8String(out);
  return out;
}

}  // namespace

void TokenizerConfig::validate() const {
  if (split_punctuation && strip_punctuation) {
    throw Error(ErrorCode::InvalidConfig,
                "split_punctuation and strip_punctuation are mutually exclusive");
  }
}

TokenSequence::TokenSequence(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {
  for (const auto& t : tokens_) {
    if (t.empty()) throw Error(ErrorCode::InvalidInput, "empty token in sequence");
  }
}

TokenSequence::TokenSequence(std::initializer_list<std::string> tokens)
    : TokenSequence(std::vector<std::string>(tokens)) {}

std::string TokenSequence::joined() const {
  std::string out;
  for (std::size_t i = 0; i < tokens_.size(); ++i) {
    if (i) out += ' ';
    out += tokens_[i];
  }
  return out;
}

std::size_t NGramCounts::total() const noexcept {
  return std::accumulate(counts.begin(), counts.end(), std::size_t{0},
                         [](std::size_t acc, const auto& kv) { return acc + kv.second; });
}

std::size_t NGramCounts::count(const NGram& gram) const noexcept {
  auto it = counts.find(gram);
  return it == counts.end() ? 0 : it->second;
}

std::string normalize_word(std::string_view word, bool lowercase) {
  icu::UnicodeString s = nfc(word);
  if (lowercase) s.toLower(icu::Locale::getRoot());
  return utf8(s);
}

TokenSequence tokenize(std::string_view text, const TokenizerConfig& config) {
  config.validate();
  icu::UnicodeString s = nfc(text);
  if (config.lowercase) s.toLower(icu::Locale::getRoot());

  std::vector<std::string> tokens;
  icu::UnicodeString current;
  auto flush = [&] {
    if (!current.isEmpty()) {
      tokens.push_back(utf8(current));
      current.remove();
    }
  };

  for (int32_t i = 0; i < s.length();) {
    const UChar32 cp = s.char32At(i);
    i += U16_LENGTH(cp);
    if (u_isUWhiteSpace(cp)) {
      flush();
    } else if (u_ispunct(cp) && (config.split_punctuation || config.strip_punctuation)) {
      flush();
      if (config.split_punctuation) tokens.push_back(utf8(icu::UnicodeString(cp)));
    } else {
      current.append(cp);
    }
  }
  flush();
  return TokenSequence(std::move(tokens));
}

NGramCounts ngrams(const TokenSequence& seq, std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidInput, "n-gram order must be >= 1");
  NGramCounts out;
  out.order = n;
  if (seq.size() < n) return out;
  const auto& toks = seq.tokens();
  for (std::size_t i = 0; i + n <= toks.size(); ++i) {
    ++out.counts[NGram(toks.begin() + static_cast<std::ptrdiff_t>(i),
                       toks.begin() + static_cast<std::ptrdiff_t>(i + n))];
  }
  return out;
}

std::size_t clipped_matches(const NGramCounts& hyp, std::span<const NGramCounts> refs) {
  std::size_t matched = 0;
  for (const auto& [gram, count] : hyp.counts) {
    std::size_t best = 0;
    for (const auto& ref : refs) best = std::max(best, ref.count(gram));
    matched += std::min(count, best);
  }
  return matched;
}

std::vector<std::string> read_segments(std::istream& in) {
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t\f\v") == std::string::npos) continue;
    out.push_back(line);
  }
  return out;
}

std::vector<std::string> read_segment_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
  return read_segments(in);
}

std::size_t count_characters(std::string_view text) {
  const icu::UnicodeString s = nfc(text);
  return static_cast<std::size_t>(s.countChar32());
}

}  // namespace respeak
