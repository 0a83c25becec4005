#pragma once

#include <stdexcept>
#include <string>

namespace respeak {

enum class ErrorCode {
  InvalidConfig,
  EmptyHypothesis,
  EmptyReference,
  EmptyCorpus,
  LengthMismatch,
  MissingResources,
  InvalidRecord,
  InvalidInput,
  ParseError,
  RankDeficient,
  TooFewRows,
  DegenerateDf,
  MissingPredictor,
  UnknownColumn,
  Io,
};

const char* to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so the
/// CLI can map it to an exit status without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace respeak
