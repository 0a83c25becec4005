#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace respeak {

enum class ErrorSeverity { Minor, Standard, Serious };

/// 0.25, 0.5 and 1.0 for minor, standard and serious edition errors.
constexpr double severity_weight(ErrorSeverity s) noexcept {
  switch (s) {
    case ErrorSeverity::Minor: return 0.25;
    case ErrorSeverity::Standard: return 0.5;
    case ErrorSeverity::Serious: return 1.0;
  }
  return 0.0;
}

struct EditionErrors {
  ErrorSeverity severity;
  std::size_t count = 0;
};

struct NerRecord {
  std::size_t tokens = 0;  // N, punctuation included
  std::vector<EditionErrors> edition_errors;
  double recognition_errors = 0.0;  // R, already weighted

  std::optional<std::string> id;
  /// Source/subtitle lengths for the reduction rate, when annotated.
  std::optional<std::size_t> original_length;
  std::optional<std::size_t> subtitle_length;

  /// Weighted edition error total E.
  double edition_total() const noexcept;
  /// Throws Error(InvalidRecord) unless N > 0, R >= 0 and E + R <= N.
  void validate() const;
};

/// (N - E - R) / N * 100.
double ner_accuracy(const NerRecord& record);

/// (original - subtitle) / original * 100; negative when the subtitle is longer.
double reduction_rate(std::size_t original_length, std::size_t subtitle_length);

/// Annotation CSV. Header required; columns are
///   [id,] N, minor, standard, serious, R [, original, subtitle]
/// where a leading `id` column is recognised by its header name.
std::vector<NerRecord> parse_ner_annotations(std::istream& in);
std::vector<NerRecord> parse_ner_annotation_file(const std::string& path);

}  // namespace respeak
