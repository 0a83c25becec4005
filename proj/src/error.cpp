#include "respeak/error.hpp"

namespace respeak {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::EmptyHypothesis: return "EmptyHypothesis";
    case ErrorCode::EmptyReference: return "EmptyReference";
    case ErrorCode::EmptyCorpus: return "EmptyCorpus";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::MissingResources: return "MissingResources";
    case ErrorCode::InvalidRecord: return "InvalidRecord";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::TooFewRows: return "TooFewRows";
    case ErrorCode::DegenerateDf: return "DegenerateDf";
    case ErrorCode::MissingPredictor: return "MissingPredictor";
    case ErrorCode::UnknownColumn: return "UnknownColumn";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace respeak
